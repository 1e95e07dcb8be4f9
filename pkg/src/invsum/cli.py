"""Command-line front end.

Exit codes: 0 all checks pass, 1 a counterexample was found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import counting, theorem
from .cache import cached_table
from .congruence import coefficient_vector
from .errors import InvsumError
from .residue import is_prime, odd_primes
from .structures import ExtensionField, PrimeField, ResidueRing, Structure, as_structure, extension_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _odd_prime_arg(p: int) -> int:
    if p is None:
        raise UsageError("--p is required")
    if p < 3 or p % 2 == 0:
        raise UsageError(f"p={p}: an odd prime is required (even moduli are not supported)")
    if not is_prime(p):
        raise UsageError(f"p={p} is not prime")
    return p


def _structure(args, ring_ok: bool = True) -> Structure:
    if args.n is not None:
        if not ring_ok:
            raise UsageError("--n is not accepted by this command")
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        return as_structure(args.n)
    p = _odd_prime_arg(args.p)
    if args.k is not None:
        return extension_field(p, args.k)
    return PrimeField(p)


def _mtable(s: Structure, args) -> counting.MTable:
    return cached_table(args.cache_dir, "mtable", s, lambda: counting.m_table(s), args.trust_cache)


def _ntable(s: Structure, args, method: str = "auto") -> counting.NTable:
    return cached_table(args.cache_dir, "ntable", s, lambda: counting.n_table(s, method), args.trust_cache)


def _emit_table(out, s: Structure, tables: dict, fmt: str):
    """``tables`` maps a column name (M or N) to a CountTable."""
    labelled = isinstance(s, ExtensionField)
    key = "a" if list(tables) == ["M"] else "t"
    if fmt == "json":
        obj = {"structure": s.descriptor}
        for name, tab in tables.items():
            obj[name] = {str(i): v for i, v in tab.items()}
        if labelled:
            obj["labels"] = {str(i): s.label(i) for i in s.elements()}
        out.write(_dumps(obj) + "\n")
        return
    header = [key] + (["element"] if labelled else []) + list(tables)
    out.write(",".join(header) + "\n")
    for i in s.elements():
        row = [str(i)] + ([s.label(i)] if labelled else []) + [str(t.values[i]) for t in tables.values()]
        out.write(",".join(row) + "\n")


def cmd_mtable(args, out) -> int:
    s = _structure(args)
    _emit_table(out, s, {"M": _mtable(s, args)}, args.format or "csv")
    return EXIT_OK


def cmd_ntable(args, out) -> int:
    s = _structure(args)
    _emit_table(out, s, {"N": _ntable(s, args)}, args.format or "csv")
    return EXIT_OK


def _verify_one(p: int, cache_dir=None, trust=False) -> theorem.VerificationReport:
    s = PrimeField(p)
    tab = cached_table(cache_dir, "ntable", s, lambda: counting.n_table(s), trust)
    return theorem.verify_prime(p, table=tab)


_VERIFY_COLUMNS = ["majoration", "parity", "main_theorem", "congruence", "mirror", "power_sum"]


def cmd_verify(args, out, err) -> int:
    if args.p is not None and args.max_p is not None:
        raise UsageError("give either --p or --max-p, not both")
    if args.p is not None:
        primes = [_odd_prime_arg(args.p)]
    elif args.max_p is not None:
        if args.max_p < 3:
            raise UsageError("--max-p must be at least 3")
        primes = odd_primes(args.max_p)
    else:
        raise UsageError("verify needs --p or --max-p")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")

    work = partial(_verify_one, cache_dir=args.cache_dir, trust=args.trust_cache)
    if args.jobs == 1 or len(primes) == 1:
        reports = [work(p) for p in primes]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(work, primes))  # map keeps input order

    fmt = args.format or "csv"
    if fmt == "json":
        for r in reports:
            out.write(r.to_jsonl())
    else:
        out.write(",".join(["p"] + _VERIFY_COLUMNS + ["status"]) + "\n")
        for p, r in zip(primes, reports):
            by_name = {c.name: c for c in r.checks}
            cells = [
                ("pass" if by_name[c].passed else "fail") if c in by_name else "skip"
                for c in _VERIFY_COLUMNS
            ]
            out.write(",".join([str(p)] + cells + ["ok" if r.passed else "FAILED"]) + "\n")
    failed = [c for r in reports for c in r.failures()]
    for c in failed:
        err.write(f"counterexample: {c.structure} {c.name} at {c.counterexample}\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_coeffs(args, out) -> int:
    p = _odd_prime_arg(args.p)
    cv = coefficient_vector(p)
    if (args.format or "json") == "json":
        out.write(_dumps(cv.to_dict()) + "\n")
    else:
        out.write("k,c\n")
        for k in sorted(cv.coeffs):
            out.write(f"{k},{cv.coeffs[k]}\n")
    return EXIT_OK


def cmd_symmetries(args, out) -> int:
    p = _odd_prime_arg(args.p)
    if args.k is not None or args.n is not None:
        raise UsageError("symmetries runs over F_p only")
    report = theorem.search_symmetries(p, _ntable(PrimeField(p), args))
    if (args.format or "json") == "json":
        out.write(_dumps(report.to_dict()) + "\n")
    else:
        out.write("kind,a,b\n")
        for a, b in sorted(report.affine):
            out.write(f"affine,{a},{b}\n")
        for a in sorted(report.inversive):
            out.write(f"inversive,{a},\n")
    return EXIT_OK


def cmd_sets(args, out) -> int:
    s = _structure(args)
    sets = counting.image_sets(s)
    named = {"A": sets.A, "A+A": sets.A_plus_A, "A*A": sets.A_times_A}
    if (args.format or "csv") == "json":
        obj = {"structure": s.descriptor}
        obj.update({k: sorted(v) for k, v in named.items()})
        obj["sizes"] = sets.sizes()
        out.write(_dumps(obj) + "\n")
    else:
        out.write("set,size,elements\n")
        for k, v in named.items():
            out.write(f"{k},{len(v)},{' '.join(map(str, sorted(v)))}\n")
    return EXIT_OK


def cmd_ext(args, out, err) -> int:
    if args.k is None:
        raise UsageError("ext needs --p and --k")
    if args.n is not None:
        raise UsageError("ext takes --p and --k, not --n")
    s = extension_field(_odd_prime_arg(args.p), args.k)
    m = _mtable(s, args)
    n = _ntable(s, args, "bruteforce")
    verdict = theorem.verify_main_theorem(s, n)
    fmt = args.format or "csv"
    if fmt == "json":
        obj = {
            "structure": s.descriptor,
            "q": s.q,
            "irreducible": list(s.spec.irreducible),
            "M": {str(i): v for i, v in m.items()},
            "N": {str(i): v for i, v in n.items()},
            "labels": {str(i): s.label(i) for i in s.elements()},
            "main_theorem": {"passed": verdict.passed, "counterexample": verdict.counterexample},
        }
        out.write(_dumps(obj) + "\n")
    else:
        _emit_table(out, s, {"M": m, "N": n}, "csv")
    state = "holds" if verdict.passed else f"fails at t={verdict.counterexample}"
    err.write(f"N(16/t) = N(t) over F_{s.q}: {state}\n")
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_zn(args, out, err) -> int:
    if args.n is None:
        raise UsageError("zn needs --n")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    s = ResidueRing(args.n)
    if s.even:
        err.write(f"note: n={args.n} is even; counts are plain enumeration with no structure theory behind them\n")
    m = _mtable(s, args)
    n = _ntable(s, args)
    if (args.format or "csv") == "json":
        obj = {
            "structure": s.descriptor,
            "even_modulus": s.even,
            "units": len(s.units()),
            "M": {str(i): v for i, v in m.items()},
            "N": {str(i): v for i, v in n.items()},
        }
        out.write(_dumps(obj) + "\n")
    else:
        _emit_table(out, s, {"M": m, "N": n}, "csv")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="odd prime (characteristic)")
    common.add_argument("--n", type=int, help="modulus for Z/nZ")
    common.add_argument("--k", type=int, help="extension degree, with --p")
    common.add_argument("--max-p", type=int, dest="max_p", help="check every odd prime up to this bound")
    common.add_argument("--format", choices=["csv", "json"], help="output format")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (verify)")
    common.add_argument("--cache-dir", dest="cache_dir", help="directory for cached tables")
    common.add_argument("--trust-cache", dest="trust_cache", action="store_true",
                        help="skip recomputation spot checks on cached tables")

    parser = argparse.ArgumentParser(prog="invsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("mtable", "solution counts of x + 1/x = a"),
        ("ntable", "solution counts of x + 1/x + y + 1/y = t"),
        ("verify", "run every check over one or many primes"),
        ("coeffs", "coefficients of N_p(t) mod p as a polynomial in t"),
        ("symmetries", "affine and scaled-inversion maps preserving N"),
        ("sets", "the image set A and its sum and product sets"),
        ("ext", "tables over F_{p^k} and the 16/t verdict"),
        ("zn", "tables over Z/nZ by enumeration"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {
        "mtable": lambda: cmd_mtable(args, out),
        "ntable": lambda: cmd_ntable(args, out),
        "verify": lambda: cmd_verify(args, out, err),
        "coeffs": lambda: cmd_coeffs(args, out),
        "symmetries": lambda: cmd_symmetries(args, out),
        "sets": lambda: cmd_sets(args, out),
        "ext": lambda: cmd_ext(args, out, err),
        "zn": lambda: cmd_zn(args, out, err),
    }
    try:
        return handlers[args.command]()
    except UsageError as exc:
        err.write(f"invsum {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except InvsumError as exc:
        err.write(f"invsum {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
