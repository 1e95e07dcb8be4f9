import pytest

from invsum.congruence import (
    CoefficientVector,
    coefficient_vector,
    congruence_16_over_t,
    congruence_eval,
    mirror_identity_check,
    mirror_recurrence_step,
    mirror_sides,
    power_sum_check,
)
from invsum.counting import m_table, n_value_formula
from invsum.errors import OutOfRange, TooLarge, ZeroInverse
from invsum.residue import odd_primes

import oracles


def test_power_sum_check_examples():
    assert power_sum_check(5, 0)
    assert power_sum_check(5, 1)
    assert power_sum_check(7, 3)


def test_power_sum_check_oracle_values():
    # (p-1)^2 - N_5(t) mod 5 for N_5 = [6, 1, 4, 4, 1]
    assert [oracles.cw_double_sum(5, t) for t in range(5)] == [0, 0, 2, 2, 0]


def test_power_sum_check_cap():
    with pytest.raises(TooLarge):
        power_sum_check(103, 1)


@pytest.mark.parametrize("p", odd_primes(101))
def test_power_sum_identity_exhaustive(p):
    assert all(power_sum_check(p, t) for t in range(p))


def test_coefficient_vector_examples():
    assert coefficient_vector(5).coeffs == {0: 4, 2: 1, 4: 4}
    assert coefficient_vector(3).coeffs == {0: 2, 2: 2}
    assert coefficient_vector(7).coeffs == {0: 6, 2: 6, 4: 3, 6: 6}


@pytest.mark.parametrize("p", odd_primes(60))
def test_coefficient_vector_against_rationals(p):
    cv = coefficient_vector(p)
    assert len(cv.coeffs) == (p + 1) // 2
    assert cv.coeffs == {k: oracles.coefficient(p, k) for k in range(0, p, 2)}


def test_coefficient_vector_keys_validated():
    with pytest.raises(ValueError):
        CoefficientVector(5, {0: 1, 2: 1})


def test_coefficient_vector_json_shape():
    assert coefficient_vector(5).to_dict() == {"p": 5, "coeffs": {"0": 4, "2": 1, "4": 4}}


@pytest.mark.parametrize("t, expected", [(0, 1), (1, 1), (2, 4)])
def test_congruence_eval_p5(t, expected):
    assert congruence_eval(coefficient_vector(5), t) == expected


@pytest.mark.parametrize("p", odd_primes(200))
def test_congruence_eval_reproduces_counts(p):
    cv = coefficient_vector(p)
    m = m_table(p)
    for t in range(p):
        assert congruence_eval(cv, t) == n_value_formula(t, m) % p
    for t in range(1, p):
        u = 16 * pow(t, -1, p) % p
        assert congruence_eval(cv, u) == congruence_eval(cv, t)


@pytest.mark.parametrize("k", [0, 2, 4])
def test_mirror_identity_p5(k):
    assert mirror_identity_check(5, k)


def test_mirror_sides_p5():
    assert mirror_sides(5, 0) == (4, 4)
    assert mirror_sides(5, 2) == (2, 2)
    assert mirror_sides(5, 4) == (4, 4)


def test_mirror_identity_range():
    with pytest.raises(OutOfRange):
        mirror_identity_check(5, 1)
    with pytest.raises(OutOfRange):
        mirror_identity_check(5, 6)


def test_mirror_identity_and_recurrence_up_to_2000():
    for p in odd_primes(2000):
        assert all(mirror_identity_check(p, k) for k in range(0, p, 2)), p
        assert all(mirror_recurrence_step(p, k) for k in range(0, p - 2, 2)), p


@pytest.mark.parametrize("p, t", [(5, 1), (7, 1), (7, 5)])
def test_congruence_16_over_t_examples(p, t):
    assert congruence_16_over_t(p, t)


def test_congruence_16_over_t_zero():
    with pytest.raises(ZeroInverse):
        congruence_16_over_t(7, 0)
