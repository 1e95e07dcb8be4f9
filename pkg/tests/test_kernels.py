import pytest
from hypothesis import given, settings, strategies as st

from invsum import kernels

from oracles import cw_double_sum


def naive_add(a, b, base, nd):
    out, w = 0, 1
    for _ in range(nd):
        out += ((a // w % base + b // w % base) % base) * w
        w *= base
    return out


def naive_pairs(values, base, nd):
    out = [0] * base**nd
    for a in values:
        for b in values:
            out[naive_add(a, b, base, nd)] += 1
    return out


def naive_conv(weights, base, nd):
    out = [0] * base**nd
    for a, wa in enumerate(weights):
        for b, wb in enumerate(weights):
            out[naive_add(a, b, base, nd)] += wa * wb
    return out


@st.composite
def layouts(draw):
    base = draw(st.integers(2, 7))
    nd = draw(st.integers(1, 3))
    size = base**nd
    values = draw(st.lists(st.integers(0, size - 1), max_size=30))
    weights = draw(st.lists(st.integers(0, 3), min_size=size, max_size=size))
    return base, nd, values, weights


def test_backend_selected():
    assert kernels.BACKEND in kernels.BACKENDS
    assert "python" in kernels.BACKENDS


@settings(max_examples=60, deadline=None)
@given(layouts())
def test_kernels_match_naive(backend, layout):
    base, nd, values, weights = layout
    assert backend.pair_histogram(values, base, nd) == naive_pairs(values, base, nd)
    assert backend.self_convolution(weights, base, nd) == naive_conv(weights, base, nd)


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_cw_power_sum(backend, p):
    for t in range(p):
        assert backend.cw_power_sum(p, t) == cw_double_sum(p, t)


def test_self_convolution_rejects_short_weights(backend):
    with pytest.raises(ValueError):
        backend.self_convolution([1, 2], 3, 1)


def test_backends_agree_on_large_prime():
    if len(kernels.BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    from invsum.counting import m_table

    m = m_table(997).values
    c, py = kernels.BACKENDS["cython"], kernels.BACKENDS["python"]
    assert c.self_convolution(m, 997, 1) == py.self_convolution(m, 997, 1)
