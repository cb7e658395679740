"""The repeated-subresultant multiplicity condition and its size formulas.

The baseline condition for multiplicity structure mu builds a chain
G_0 = F, G_i = S_(s_i)(G_(i-1), G_(i-1)') with s_i = sum_j max(mu_j - i, 0),
and states: all principal coefficients sbar_j(G_i) vanish for
i = 1..mu_1-2, j = 0..s_(i+1)-1, while sbar_0(G_(mu_1-1)) does not.  The
chain is evaluated at *formal* degrees deg G_i = s_i throughout, so
substituting numbers into the symbolically computed chain and running the
chain on numeric input give identical values (see subresultants module).

The closed-form size of the condition: the number of polynomials is
1 + sum_i C(mu_i - 1, 2), and the maximum total degree in the coefficients
follows the three-case product formula implemented in yhz_degree, bounded
below by 2n + 3^(mu_2) - 4 mu_2.
"""

from dataclasses import dataclass
from math import comb, prod

from .combinat import check_partition
from .errors import ChainDegenerate, DegreeMismatch, DegreeOutOfRange
from .subresultants import subresultant_chain, subresultant_det


@dataclass(frozen=True)
class YhzCondition:
    mu: tuple
    chain: tuple  # G_0 .. G_(mu_1 - 1)
    s: tuple  # s_1 .. s_(mu_1)
    equations: tuple  # values that must all vanish
    inequation: object  # value that must not vanish

    def is_satisfied(self):
        return not any(self.equations) and bool(self.inequation)


def s_sequence(mu):
    """s_i = sum_j max(mu_j - i, 0) for i = 1..mu_1."""
    mu = check_partition(mu)
    return tuple(sum(max(part - i, 0) for part in mu) for i in range(1, mu[0] + 1))


def yhz_count(mu):
    """Number of polynomials in the condition: 1 + sum C(mu_i - 1, 2)."""
    mu = check_partition(mu)
    return 1 + sum(comb(part - 1, 2) for part in mu)


def _m_counts(mu):
    # m_j = number of parts exceeding j (the largest k with mu_k > j)
    return [sum(1 for part in mu if part > j) for j in range(mu[0] + 1)]


def yhz_degree(mu):
    """Maximum total degree among the condition polynomials (closed form)."""
    mu = check_partition(mu)
    if len(mu) < 2:
        raise DegreeMismatch("the degree formula needs at least two parts")
    mu1, mu2 = mu[0], mu[1]
    m = _m_counts(mu)
    if mu1 == mu2:
        return prod(2 * m[j] - 1 for j in range(mu2))
    if mu1 == mu2 + 1:
        # the fractional middle case collapses to an integer product
        return prod(2 * m[j] - 1 for j in range(mu2 - 1)) * (2 * m[mu2 - 1] + 1)
    return prod(2 * m[j] - 1 for j in range(mu2)) * (2 * (mu1 - mu2) - 1)


def yhz_degree_lower_bound(n, mu2):
    """2n + 3^(mu_2) - 4 mu_2."""
    if mu2 < 1:
        raise ValueError("mu_2 must be at least 1")
    return 2 * n + 3 ** mu2 - 4 * mu2


def subresultant(G, k, method=None):
    """The k-th subresultant of G and G'.

    Numeric input goes through the remainder-sequence path, symbolic input
    through the determinant definition; method="prs"/"det" forces a route.
    """
    if G.degree < 1:
        raise DegreeMismatch("subresultant needs deg G >= 1")
    if not 0 <= k < G.degree:
        raise DegreeOutOfRange(f"subresultant index {k} outside 0..{G.degree - 1}")
    if method is None:
        method = "det" if G.is_symbolic() else "prs"
    if method == "prs":
        return subresultant_chain(G, G.derivative())[k]
    if method == "det":
        return subresultant_det(G, G.derivative(), k)
    raise ValueError(f"unknown subresultant method: {method}")


def yhz_condition(F, mu):
    """Build the chain and collect the condition values for F and mu.

    In symbolic mode an identically vanishing chain member or inequation
    is reported as ChainDegenerate, never skipped.  In numeric mode zero
    chain members simply propagate zeros into the collected values, which
    is exactly what specialising the symbolic chain would produce.
    """
    mu = check_partition(mu)
    n = sum(mu)
    if not F or F.degree != n:
        raise DegreeMismatch(f"need deg F = sum(mu) = {n}")
    if mu[0] < 2:
        raise DegreeMismatch("the chain is undefined for mu_1 < 2")
    symbolic = F.is_symbolic()
    s = s_sequence(mu)
    chain = [F]
    formal = [n]
    for i in range(1, mu[0]):
        prev = chain[i - 1]
        fdeg = formal[i - 1]
        nxt = subresultant_det(prev, prev.derivative(), s[i - 1], p=fdeg, q=fdeg - 1)
        if symbolic and not nxt:
            raise ChainDegenerate(f"G_{i} vanishes identically for mu={mu}")
        chain.append(nxt)
        formal.append(s[i - 1])
    equations = []
    for i in range(1, mu[0] - 1):
        g, fdeg = chain[i], formal[i]
        for j in range(s[i]):
            sj = subresultant_det(g, g.derivative(), j, p=fdeg, q=fdeg - 1)
            equations.append(sj.coeff(j))
    bottom, fdeg = chain[mu[0] - 1], formal[mu[0] - 1]
    inequation = subresultant_det(bottom, bottom.derivative(), 0, p=fdeg, q=fdeg - 1).coeff(0)
    if symbolic and not inequation:
        raise ChainDegenerate(f"inequation vanishes identically for mu={mu}")
    return YhzCondition(tuple(mu), tuple(chain), s, tuple(equations), inequation)


def measured_size(cond):
    """(polynomial count, max total degree) of a symbolic condition."""
    count = len(cond.equations) + 1
    degrees = [v.total_degree() for v in cond.equations + (cond.inequation,) if v]
    return count, max(degrees)
