"""Counting solutions of x + 1/x + y + 1/y = t over finite rings.

Over F_p the count N_p(t) satisfies N_p(16/t) = N_p(t); this package
computes the counts by formula and by enumeration and checks that identity
together with the lemmas and congruences used to prove it.
"""

from .counting import (
    ImageSets,
    MTable,
    NTable,
    image_sets,
    m_table,
    m_value,
    m_value_bruteforce,
    n_table,
    n_value_bruteforce,
    n_value_formula,
)
from .field import FieldElement, FieldSpec, make_field
from .kernels import BACKEND
from .residue import Modulus, Residue
from .structures import ExtensionField, PrimeField, ResidueRing, as_structure

__version__ = "0.1.0"
