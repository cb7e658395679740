import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multdisc.errors import NonExactDivision
from multdisc.scalars import exact_div
from multdisc.sympoly import SymPoly

from helpers import random_sympoly

NV = 4


def sym(terms):
    return SymPoly(NV, terms)


a0 = SymPoly.variable(NV, 0)
a1 = SymPoly.variable(NV, 1)
a2 = SymPoly.variable(NV, 2)


def test_canonical_no_zero_terms():
    p = sym({(1, 0, 0, 0): 1})
    assert not (p - p)
    assert (p - p).terms == {}
    assert sym({(2, 0, 0, 0): 0}).terms == {}


def test_constructors_and_equality():
    assert SymPoly.const(NV, 0) == 0
    assert SymPoly.const(NV, 3) == 3
    assert a0 != a1
    assert a0 * a1 == a1 * a0
    with pytest.raises(IndexError):
        SymPoly.variable(NV, 9)


def test_int_coercion():
    assert 2 * a0 + a0 == 3 * a0
    assert (a0 + 1) * (a0 - 1) == a0 * a0 - 1
    assert 1 - a0 == -(a0 - 1)


def test_pow():
    assert (a0 + a1) ** 0 == 1
    assert (a0 + a1) ** 2 == a0**2 + 2 * a0 * a1 + a1**2
    with pytest.raises(ValueError):
        a0 ** -1


def test_degrees():
    p = a0**2 * a1 + a2
    assert p.total_degree() == 3
    assert p.degree_in(0) == 2
    assert p.degree_in(3) == 0
    assert not p.is_homogeneous()
    assert (a0 * a1 + a2**2).is_homogeneous()
    assert SymPoly.zero(NV).is_homogeneous()
    with pytest.raises(ValueError):
        SymPoly.zero(NV).total_degree()


def test_exact_division():
    num = a0**2 * a1 - a0 * a1**2
    assert exact_div(num, a0 * a1) == a0 - a1
    assert exact_div(6 * a0, 3) == 2 * a0
    assert exact_div((a0 + a1) * (a0 - a1), a0 + a1) == a0 - a1
    with pytest.raises(NonExactDivision):
        exact_div(a0 * a1 + 1, a0)
    with pytest.raises(NonExactDivision):
        exact_div(3 * a0, 2)


def test_evaluate():
    p = 2 * a0**2 * a1 - 3 * a2
    assert p.evaluate([2, 5, 7, 0]) == 2 * 4 * 5 - 21
    assert p.evaluate([Fraction(1, 2), 4, 0, 9]) == 2


def test_str_graded_lex():
    p = a0 * a1 - 2 * a2 + 5
    assert str(p) == "a0*a1 - 2*a2 + 5"
    assert str(SymPoly.zero(NV)) == "0"
    assert str(-a0) == "-a0"
    assert str(a1**3) == "a1^3"


def test_mixed_nvars_rejected():
    with pytest.raises(ValueError):
        a0 + SymPoly.variable(3, 0)


@given(st.integers(0, 2**32 - 1))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    a = random_sympoly(rng, NV)
    b = random_sympoly(rng, NV)
    c = random_sympoly(rng, NV)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert a + (-a) == 0


@given(st.integers(0, 2**32 - 1))
def test_division_inverts_multiplication(seed):
    rng = random.Random(seed)
    a = random_sympoly(rng, NV)
    b = random_sympoly(rng, NV)
    if b:
        assert exact_div(a * b, b) == a
