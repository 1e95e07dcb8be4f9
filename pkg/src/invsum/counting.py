"""Solution counts for x + 1/x = a and x + 1/x + y + 1/y = t.

``M(a)`` counts units x with x + 1/x = a, ``N(t)`` counts pairs of units
(x, y) with x + 1/x + y + 1/y = t. On fields there are two routes: the
character formula M(a) = 1 + chi(a^2 - 4) with N = M * M (additive
convolution), and plain enumeration. On Z/nZ only enumeration applies.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Union

from . import kernels
from .errors import TooLarge, UnsupportedStructure
from .structures import Structure, as_structure

MAX_ORDER = 10**6
MAX_PAIRS = 10**8

StructureLike = Union[Structure, int, object]


@dataclass(frozen=True)
class CountTable:
    """Counts indexed by element index of ``structure``."""

    structure: Structure
    values: tuple
    kind: str = "table"

    def __getitem__(self, x) -> int:
        return self.values[self.structure.index(x)]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def items(self):
        return enumerate(self.values)

    def total(self) -> int:
        return sum(self.values)

    def distribution(self) -> Counter:
        return Counter(self.values)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "structure": self.structure.descriptor,
            "values": {str(i): v for i, v in enumerate(self.values)},
        }


class MTable(CountTable):
    def __init__(self, structure, values):
        super().__init__(structure, tuple(values), "mtable")


class NTable(CountTable):
    def __init__(self, structure, values):
        super().__init__(structure, tuple(values), "ntable")


@dataclass(frozen=True)
class ImageSets:
    structure: Structure
    A: frozenset
    A_plus_A: frozenset
    A_times_A: frozenset

    def sizes(self) -> dict:
        return {"A": len(self.A), "A+A": len(self.A_plus_A), "A*A": len(self.A_times_A)}


def _enumerable(s: Structure):
    if s.order > MAX_ORDER:
        raise TooLarge(f"{s.descriptor} has {s.order} elements, cap is {MAX_ORDER}")


def _require_field(s: Structure):
    if not s.is_field:
        raise UnsupportedStructure(
            f"the character formula needs an odd-characteristic field, not {s.descriptor}"
        )


def m_value(a, structure: StructureLike) -> int:
    """1 + chi(a^2 - 4), chi the quadratic character of the field."""
    s = as_structure(structure)
    _require_field(s)
    i = s.index(a)
    return 1 + s.character(s.sub(s.mul(i, i), s.embed(4)))


def _trace_values(s: Structure) -> list[int]:
    """x + 1/x for every unit x, in unit order."""
    inv = s.inverse_table
    return [s.add(x, inv[x]) for x in s.units()]


def m_value_bruteforce(a, structure: StructureLike) -> int:
    s = as_structure(structure)
    _enumerable(s)
    i = s.index(a)
    inv = s.inverse_table
    return sum(1 for x in s.units() if s.add(x, inv[x]) == i)


def m_table_bruteforce(structure: StructureLike) -> MTable:
    s = as_structure(structure)
    _enumerable(s)
    counts = [0] * s.order
    for v in _trace_values(s):
        counts[v] += 1
    return MTable(s, counts)


def m_table(structure: StructureLike) -> MTable:
    """Formula path on fields, enumeration on rings."""
    s = as_structure(structure)
    if not s.is_field:
        return m_table_bruteforce(s)
    _enumerable(s)
    four = s.embed(4)
    return MTable(s, [1 + s.character(s.sub(s.mul(a, a), four)) for a in s.elements()])


def n_value_formula(t, m: MTable) -> int:
    """sum over a of M(a) * M(t - a)."""
    s = m.structure
    i = s.index(t)
    vals = m.values
    return sum(vals[a] * vals[s.sub(i, a)] for a in s.elements() if vals[a])


def _check_pairs(s: Structure, nunits: int):
    if nunits * nunits > MAX_PAIRS:
        raise TooLarge(f"{nunits}^2 unit pairs exceed the cap of {MAX_PAIRS}")


def n_value_bruteforce(t, structure: StructureLike) -> int:
    """Count unit pairs directly; never touches M or the character."""
    s = as_structure(structure)
    _enumerable(s)
    i = s.index(t)
    units = s.units()
    _check_pairs(s, len(units))
    inv = s.inverse_table
    target = [s.sub(i, s.add(x, inv[x])) for x in units]
    traces = Counter(s.add(y, inv[y]) for y in units)
    return sum(traces[v] for v in target)


def n_table_bruteforce(structure: StructureLike) -> NTable:
    s = as_structure(structure)
    _enumerable(s)
    traces = _trace_values(s)
    _check_pairs(s, len(traces))
    return NTable(s, kernels.pair_histogram(traces, s.base, s.ndigits))


def n_table_formula(structure: StructureLike, m: MTable = None) -> NTable:
    s = as_structure(structure)
    m = m if m is not None else m_table(s)
    _require_field(m.structure)
    return NTable(s, kernels.self_convolution(m.values, s.base, s.ndigits))


def n_table(structure: StructureLike, method: str = "auto") -> NTable:
    """N over every element. ``method`` is auto, formula or bruteforce."""
    s = as_structure(structure)
    if method == "auto":
        method = "formula" if s.is_field else "bruteforce"
    if method == "formula":
        return n_table_formula(s)
    if method == "bruteforce":
        return n_table_bruteforce(s)
    raise ValueError(f"unknown method {method!r}")


def image_sets(structure: StructureLike) -> ImageSets:
    s = as_structure(structure)
    _enumerable(s)
    A = sorted(set(_trace_values(s)))
    plus = {s.add(a, b) for a in A for b in A}
    times = {s.mul(a, b) for a in A for b in A}
    return ImageSets(s, frozenset(A), frozenset(plus), frozenset(times))
