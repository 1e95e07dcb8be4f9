"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from invsum import kernels
from invsum.counting import _trace_values, m_table
from invsum.structures import PrimeField, extension_field


def cases():
    for p in (211, 997, 4999):
        s = PrimeField(p)
        m = m_table(s).values
        tr = _trace_values(s)
        yield f"self_convolution F_{p}", "self_convolution", (m, p, 1)
        yield f"pair_histogram F_{p}", "pair_histogram", (tr, p, 1)
    for p, k in ((3, 5), (11, 2), (7, 3)):
        s = extension_field(p, k)
        yield f"self_convolution F_{p}^{k}", "self_convolution", (m_table(s).values, p, k)
        yield f"pair_histogram F_{p}^{k}", "pair_histogram", (_trace_values(s), p, k)
    for p in (101, 401):
        yield f"cw_power_sum p={p}", "cw_power_sum", (p, 7)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = sorted(kernels.BACKENDS)
    print(f"{'case':32s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn, fargs in cases():
        times = {}
        results = {}
        for n in names:
            f = getattr(kernels.BACKENDS[n], fn)
            results[n] = f(*fargs)
            times[n] = min(timeit.repeat(lambda: f(*fargs), number=1, repeat=args.repeat))
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:32s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
