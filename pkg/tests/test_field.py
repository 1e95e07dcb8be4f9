import pytest
from hypothesis import given, strategies as st

from invsum.errors import InvalidModulus, SpecMismatch, TooLarge, ZeroInverse
from invsum.field import (
    FieldSpec,
    enumerate_field,
    ff_add,
    ff_inv,
    ff_mul,
    ff_neg,
    ff_pow,
    is_irreducible,
    is_square,
    make_field,
)

from oracles import has_monic_divisor

F9 = make_field(3, 2)


def elt(spec, *coeffs):
    return spec.element(list(coeffs))


def test_degree_one_field_is_prime_field():
    spec = make_field(5, 1)
    assert spec.irreducible == (0, 1)
    assert spec.q == 5
    assert [e.coeffs[0] for e in enumerate_field(spec)] == [0, 1, 2, 3, 4]


def test_f9_modulus():
    assert F9.irreducible == (1, 0, 1)


def test_even_characteristic_rejected():
    with pytest.raises(InvalidModulus):
        make_field(2, 3)
    with pytest.raises(InvalidModulus):
        make_field(9, 1)


def test_degree_cap():
    with pytest.raises(InvalidModulus):
        make_field(3, 9)


@pytest.mark.parametrize("p, k", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2), (3, 6)])
def test_make_field_is_smallest_irreducible(p, k):
    from itertools import product

    spec = make_field(p, k)
    assert not has_monic_divisor(spec.irreducible, p)
    # every lexicographically smaller candidate has a factor
    for low in product(range(p), repeat=k):
        cand = tuple(low) + (1,)
        if cand == spec.irreducible:
            break
        assert has_monic_divisor(cand, p)


@pytest.mark.parametrize("p, k", [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2)])
def test_rabin_agrees_with_trial_division(p, k):
    from itertools import product

    for low in product(range(p), repeat=k):
        f = tuple(low) + (1,)
        assert is_irreducible(f, p) == (not has_monic_divisor(f, p))


def test_make_field_deterministic():
    assert make_field(7, 3) == make_field(7, 3)


def test_reducible_spec_rejected():
    with pytest.raises(InvalidModulus):
        FieldSpec(3, 2, (0, 0, 1))


def test_basic_arithmetic_f9():
    a = F9.generator
    assert ff_add(a, F9.zero) == a
    assert ff_mul(a, F9.one) == a
    assert ff_mul(a, a) == F9.constant(2)
    assert ff_inv(a) == elt(F9, 0, 2)
    assert ff_inv(F9.one) == F9.one
    assert ff_neg(a) == elt(F9, 0, 2)
    with pytest.raises(ZeroInverse):
        ff_inv(F9.zero)


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        ff_add(F9.one, make_field(5, 2).one)


def test_f9_has_four_nonzero_squares():
    assert sum(1 for e in enumerate_field(F9) if not e.is_zero() and is_square(e)) == 4
    assert is_square(F9.zero) and is_square(F9.one)


@pytest.mark.parametrize("p, k", [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4)])
def test_field_axioms_exhaustive(p, k):
    spec = make_field(p, k)
    elems = list(enumerate_field(spec))
    q = spec.q
    assert len(elems) == len(set(elems)) == q
    assert [e.index for e in elems] == list(range(q))
    squares = set()
    for a in elems:
        assert ff_pow(a, q) == a  # Frobenius
        squares.add(ff_mul(a, a))
        if not a.is_zero():
            assert ff_mul(a, ff_inv(a)) == spec.one
    nonzero_squares = [a for a in elems if not a.is_zero() and is_square(a)]
    assert len(nonzero_squares) == (q - 1) // 2
    assert set(nonzero_squares) | {spec.zero} == squares


def test_enumerate_cap():
    with pytest.raises(TooLarge):
        next(enumerate_field(make_field(1009, 2)))


def test_labels():
    assert str(elt(F9, 1, 2)) == "2a+1"
    assert str(F9.zero) == "0"
    assert str(elt(make_field(3, 3), 0, 0, 1)) == "a^2"


F25 = make_field(5, 2)
coeff = st.integers(0, 4)
f25_elements = st.tuples(coeff, coeff).map(lambda c: F25.element(list(c)))


@given(f25_elements, f25_elements, f25_elements)
def test_ring_laws_f25(a, b, c):
    assert ff_mul(a, ff_add(b, c)) == ff_add(ff_mul(a, b), ff_mul(a, c))
    assert ff_mul(ff_mul(a, b), c) == ff_mul(a, ff_mul(b, c))
    assert ff_mul(a, b) == ff_mul(b, a)
    assert a - a == F25.zero


def test_index_roundtrip():
    spec = make_field(5, 3)
    for i in range(spec.q):
        assert spec.from_index(i).index == i
