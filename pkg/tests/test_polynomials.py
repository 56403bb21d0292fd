from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from algact.polynomials import Poly, cyclotomic, cyclotomic_indices, format_poly
from algact.arith import divisors, euler_phi

small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=7).map(Poly)


def test_construction_normalizes():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly(()).is_zero()
    assert Poly((Fraction(4, 2),)).coeffs == (2,)
    assert isinstance(Poly((Fraction(4, 2),)).coeffs[0], int)


def test_floats_rejected():
    with pytest.raises(TypeError):
        Poly((0.5,))


def test_degree_and_leading():
    f = Poly((-1, -1, 1))
    assert f.degree == 2
    assert f.leading() == 1
    assert f.is_monic()
    assert Poly(()).degree == -1


@given(small_polys, small_polys)
def test_add_commutes(f, g):
    assert f + g == g + f


@given(small_polys, small_polys, small_polys)
def test_mul_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(small_polys, small_polys)
def test_divmod_recomposes(f, g):
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


def test_gcd_monic():
    f = Poly((-2, 1)) * Poly((3, 1))
    g = Poly((-2, 1)) * Poly((5, 1))
    assert f.gcd(g) == Poly((-2, 1))


def test_eval():
    f = Poly((6, -5, 1))  # z^2 - 5z + 6
    assert f(2) == 0 and f(3) == 0 and f(0) == 6
    assert f(Fraction(1, 2)) == Fraction(6, 1) - Fraction(5, 2) + Fraction(1, 4)


def test_cyclotomic_examples():
    assert cyclotomic(1) == Poly((-1, 1))
    assert cyclotomic(4) == Poly((1, 0, 1))
    assert cyclotomic(6) == Poly((1, -1, 1))


def test_cyclotomic_product_identity():
    # prod_{d | k} Phi_d = z^k - 1 for k <= 30
    for k in range(1, 31):
        prod = Poly((1,))
        for d in divisors(k):
            prod = prod * cyclotomic(d)
        assert prod == Poly((-1,) + (0,) * (k - 1) + (1,)), k


def test_cyclotomic_degree_is_phi():
    for k in range(1, 31):
        assert cyclotomic(k).degree == euler_phi(k)


def test_cyclotomic_indices_complete():
    # phi(k) <= 2 exactly for k in {1, 2, 3, 4, 6}
    assert cyclotomic_indices(2) == [1, 2, 3, 4, 6]


def test_format_poly():
    assert format_poly(Poly((-1, -1, 1))) == "z^2 - z - 1"
    assert format_poly(Poly((2,))) == "2"
    assert format_poly(Poly(())) == "0"
    assert format_poly(Poly((0, 1)), var="u") == "u"


def test_squarefree():
    assert Poly((6, -5, 1)).is_squarefree()
    assert not (Poly((-2, 1)) * Poly((-2, 1))).is_squarefree()
