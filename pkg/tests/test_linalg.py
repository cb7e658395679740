import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multdisc.errors import (
    DegreeTooHigh,
    DimensionMismatch,
    DimensionTooLarge,
    NotSquare,
)
from multdisc.linalg import Matrix, det, dp, hadamard, permanent, row_permute
from multdisc.sympoly import SymPoly
from multdisc.unipoly import Poly, generic_poly

from helpers import naive_det, naive_permanent, random_sympoly


def rand_matrix(rng, n, bound=9):
    return Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def test_det_basics():
    assert det(Matrix([[1, 2], [3, 4]])) == -2
    assert det(Matrix.identity(5)) == 1
    assert det(Matrix([[0, 1], [0, 2]])) == 0
    with pytest.raises(NotSquare):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_det_against_cofactor_oracle():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n)
        expected = naive_det([list(r) for r in m.rows])
        assert det(m, method="bareiss") == expected
        assert det(m, method="expansion") == expected


def test_det_needs_pivoting():
    m = Matrix([[0, 0, 2], [0, 3, 1], [4, 5, 6]])
    assert det(m) == naive_det([list(r) for r in m.rows])


def test_det_multiplicative():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        a, b = rand_matrix(rng, n), rand_matrix(rng, n)
        assert det(a @ b) == det(a) * det(b)


def test_det_symbolic_both_methods():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(1, 3)
        m = Matrix([[random_sympoly(rng, 3, max_terms=2, max_exp=2) for _ in range(n)] for _ in range(n)])
        assert det(m, method="expansion") == det(m, method="bareiss")


def test_det_symbolic_zero_pivot_swap():
    z = SymPoly.zero(2)
    x = SymPoly.variable(2, 0)
    y = SymPoly.variable(2, 1)
    m = Matrix([[z, x], [y, z]])
    assert det(m, method="bareiss") == -(x * y)
    assert det(m, method="expansion") == -(x * y)
    # an identically zero column makes the determinant zero
    mz = Matrix([[z, x], [z, y]])
    assert det(mz, method="bareiss") == 0


def test_permanent_basics():
    assert permanent(Matrix([[1, 2], [3, 4]])) == 10
    assert permanent(Matrix.identity(4)) == 1
    assert permanent(Matrix([[1] * 3] * 3)) == 6
    with pytest.raises(DimensionTooLarge):
        permanent(Matrix.identity(15))
    assert permanent(Matrix.identity(15), cap=15) == 1
    with pytest.raises(NotSquare):
        permanent(Matrix([[1, 2]]))


def test_permanent_against_naive():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 6)
        m = rand_matrix(rng, n, bound=5)
        assert permanent(m) == naive_permanent([list(r) for r in m.rows])


def test_hadamard():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[5, 6], [7, 8]])
    assert hadamard(a, b) == Matrix([[5, 12], [21, 32]])
    ones = Matrix([[1, 1], [1, 1]])
    assert hadamard(a, ones) == a
    zero = Matrix([[0, 0], [0, 0]])
    assert hadamard(a, zero) == zero
    with pytest.raises(DimensionMismatch):
        hadamard(a, Matrix([[1]]))


def test_row_permute():
    b = Matrix([[1, 2], [3, 4]])
    assert row_permute((0, 1), b) == b
    swapped = row_permute((1, 0), b)
    assert swapped == Matrix([[3, 4], [1, 2]])
    # tau then its inverse restores
    rng = random.Random(2)
    m = rand_matrix(rng, 4)
    tau = (2, 0, 3, 1)
    inv = tuple(tau.index(i) for i in range(4))
    assert row_permute(inv, row_permute(tau, m)) == m
    with pytest.raises(DimensionMismatch):
        row_permute((0, 0), b)


def test_dp_paper_cubic():
    # stack (x F, F, x^2 F'/1!, x^2 F''/2!, x^2 F'''/3!) for the generic cubic
    F = generic_poly(3)
    nv = 4
    a = [SymPoly.variable(nv, i) for i in range(nv)]
    stack = [F.shift_mul(1), F] + [F.taylor_derivative(i).shift_mul(2) for i in (1, 2, 3)]
    assert dp(stack) == 9 * a[0] ** 3 * a[3] ** 2


def test_dp_identity_and_singular():
    n = 5
    stack = [Poly([1]).shift_mul(k) for k in range(n - 1, -1, -1)]
    assert dp(stack) == 1
    repeated = [Poly([1, 2, 3]), Poly([1, 2, 3]), Poly([4, 5, 6])]
    assert dp(repeated) == 0


def test_dp_degree_guard():
    with pytest.raises(DegreeTooHigh):
        dp([Poly([1, 0, 0]), Poly([1, 0])])


def test_dp_multilinear_alternating():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(2, 5)
        polys = [
            Poly([rng.randint(-6, 6) for _ in range(rng.randint(1, n))])
            for _ in range(n)
        ]
        base = dp(polys)
        i, j = rng.sample(range(n), 2)
        swapped = list(polys)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert dp(swapped) == -base
        s = rng.choice((2, 3, -5))
        scaled = list(polys)
        scaled[i] = scaled[i].scale(s)
        assert dp(scaled) == s * base
        shifted = list(polys)
        shifted[i] = polys[i] + polys[j]
        assert dp(shifted) == base


@given(st.integers(0, 2**32 - 1))
def test_det_transpose_invariant(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    m = rand_matrix(rng, n)
    t = Matrix(list(zip(*m.rows)))
    assert det(m) == det(t)
