"""Ground truth from explicit roots, and the identity checkers.

Polynomials built from prescribed roots have known multiplicity structure,
which makes them the reference against which the coefficient-side
discriminant is validated.  The root-side discriminant is the permanent of
the scaled derivative values at the roots divided by the repetition
constant of the expanded tuple; the two sides are related by
D_mu = lead^(n - mu_m) * Dbar_mu.

Identity checkers for the two supporting facts (the det/per sum over row
permutations, and the coefficient-stack determinant as a ratio of root
matrices) compute both sides independently and compare exactly.
"""

import random
from dataclasses import dataclass
from itertools import permutations

from .combinat import expand_partition, partitions, repetition_constant
from .errors import (
    DegreeMismatch,
    DegreeTooHigh,
    DimensionMismatch,
    DuplicateRoots,
    EmptyDomain,
    RootMismatch,
    ZeroLead,
)
from .linalg import PERMANENT_CAP, Matrix, det, dp, hadamard, permanent, row_permute
from .scalars import exact_div
from .unipoly import Poly


@dataclass(frozen=True)
class RootSpec:
    roots: tuple
    mults: tuple
    lead: object

    def partition(self):
        return tuple(sorted(self.mults, reverse=True))

    def flattened_roots(self):
        """Each root repeated by its multiplicity, in descending-multiplicity order."""
        pairs = sorted(zip(self.mults, self.roots), key=lambda t: -t[0])
        out = []
        for mult, root in pairs:
            out.extend([root] * mult)
        return tuple(out)


def _validate(spec):
    if len(spec.roots) != len(spec.mults):
        raise DimensionMismatch("roots and multiplicities differ in length")
    if not spec.lead:
        raise ZeroLead("leading coefficient must be nonzero")
    if any(not isinstance(m, int) or m < 1 for m in spec.mults):
        raise ValueError("multiplicities must be positive integers")
    for i, r in enumerate(spec.roots):
        for other in spec.roots[i + 1 :]:
            if r == other:
                raise DuplicateRoots(f"root {r} listed twice")


def poly_from_roots(spec):
    """lead * prod (x - r_i)^(mult_i), expanded exactly."""
    _validate(spec)
    out = Poly([spec.lead])
    for root, mult in zip(spec.roots, spec.mults):
        factor = Poly([1, -root])
        for _ in range(mult):
            out = out * factor
    return out


def dbar_mu(F, alphas, mu, *, cap=PERMANENT_CAP):
    """Root-side discriminant: per[F^(p_i)(alpha_j)/p_i!] / c.

    alphas must be the full root multiset of F (each root repeated by its
    multiplicity); c is the repetition constant of the expanded tuple.
    The division by c is exact whenever the precondition holds.
    """
    n = F.degree
    p = expand_partition(mu)
    if len(alphas) != n or len(p) != n:
        raise DegreeMismatch("need deg F = sum(mu) = len(alphas)")
    for a in alphas:
        if F(a):
            raise RootMismatch(f"{a} is not a root")
    rows = []
    for order in p:
        t = F.taylor_derivative(order)
        rows.append([t(a) for a in alphas])
    per = permanent(Matrix(rows), cap=cap)
    return exact_div(per, repetition_constant(p))


def check_det_per_identity(A, B):
    """sum over tau of det(A o P_tau B) == det(A) * per(B), exactly."""
    if A.nrows != B.nrows or A.ncols != B.ncols:
        raise DimensionMismatch("matrices must have equal shapes")
    n = A.nrows
    lhs = 0
    for tau in permutations(range(n)):
        lhs = lhs + det(hadamard(A, row_permute(tau, B)))
    rhs = det(A) * permanent(B)
    return lhs == rhs


def check_dp_ratio(F, roots, G):
    """Cross-multiplied stack-determinant ratio identity.

    dp(x^(n-2)F, ..., F, G_1, ..., G_n) * det(V) == lead^(n-1) * det[G_i(a_j)]
    for F with the n distinct supplied roots and deg G_i <= 2n - 2, where V
    is the monomial-basis Vandermonde of the roots.
    """
    n = F.degree
    if len(roots) != n:
        raise DegreeMismatch("need one root per degree")
    if len(set(roots)) != n:
        raise DuplicateRoots("roots must be pairwise distinct")
    G = list(G)
    if len(G) != n:
        raise DimensionMismatch(f"need exactly {n} stacked polynomials")
    for g in G:
        if g.degree > 2 * n - 2:
            raise DegreeTooHigh("stacked polynomial degree exceeds 2n - 2")
    stack = [F.shift_mul(s) for s in range(n - 2, -1, -1)] + G
    lhs = dp(stack) * det(Matrix([[a ** (n - 1 - i) for a in roots] for i in range(n)]))
    rhs = F.lead ** (n - 1) * det(Matrix([[g(a) for a in roots] for g in G]))
    return lhs == rhs


def random_instance(seed, n, m, *, root_bound=9):
    """Deterministic random root specification: m distinct integer roots,
    multiplicities a uniformly chosen partition of n into m parts."""
    if m < 1 or m > n:
        raise EmptyDomain(f"no root structure with {m} distinct roots for degree {n}")
    rng = random.Random(seed)
    roots = tuple(rng.sample(range(-root_bound, root_bound + 1), m))
    mults = rng.choice(partitions(n, m))
    lead = rng.choice((-2, -1, 1, 1, 2, 3))
    return RootSpec(roots=roots, mults=mults, lead=lead)
