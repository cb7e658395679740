"""Multiplicity discriminants for univariate polynomials.

For an m-part partition mu of n, the discriminant D_mu(F) is the sum, over
all distinct rearrangements sigma of the expanded tuple p (each part mu_i
repeated mu_i times), of the determinant of the stacked coefficient rows

    x^(n-mu_m-1) F, ..., x^0 F,
    x^(n-1) F^(sigma_1)/sigma_1!, ..., x^0 F^(sigma_n)/sigma_n!,

a square stack of dimension 2n - mu_m.  Among degree-n polynomials with
exactly m distinct roots, D_mu(F) != 0 holds precisely when the
multiplicity structure of F is mu, so a classifier only has to find the
number of distinct roots (principal subresultant coefficients of F, F')
and then test each candidate partition.

Numeric evaluation does not compute one determinant per rearrangement.
All stacks share the F-block and differ only in the derivative rows, so
the sum is evaluated by fraction-free row elimination over the tree of
rearrangement prefixes: the F-block is eliminated once, every tree edge
inserts a single row (divisions by the previous pivot stay exact under
column pivoting), and each leaf contributes its final pivot times the
pivot-column parity.  A rank-deficient prefix prunes its whole subtree.
The tree is walked in ascending lexicographic order and any rank window
can be summed independently, which makes parallel chunking deterministic:
partial sums are integers, so their total is order-independent.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from bisect import bisect_right, insort
from math import factorial

from .combinat import (
    check_partition,
    expand_partition,
    multiset_permutations,
    partitions,
    permutation_count,
)
from .errors import (
    AmbiguousClassification,
    CapExceeded,
    DegreeMismatch,
    ZeroPolynomial,
)
from .linalg import dp
from .scalars import clear_denominators
from .subresultants import subresultant_chain
from .sympoly import SymPoly
from .unipoly import Poly

SYMBOLIC_CAP = 6
PARALLEL_THRESHOLD = 4096
WORKERS_ENV = "MULTDISC_WORKERS"


@dataclass(frozen=True)
class DmuResult:
    mu: tuple
    mode: str  # "numeric" | "symbolic"
    value: object  # int (numeric) or SymPoly (symbolic)
    term_count: int
    matrix_dim: int


@dataclass(frozen=True)
class PsdReport:
    psd: tuple
    ndr: int


@dataclass(frozen=True)
class ClassifyReport:
    degree: int
    ndr: int
    multiplicity: tuple
    certificates: tuple  # ((mu, value), ...) in candidate order


def resolve_workers(workers=None):
    if workers is not None:
        if workers < 1:
            raise ValueError("workers must be >= 1")
        return workers
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def dmu_degree(n, mu):
    """Total degree of D_mu in the coefficients: 2n - mu_m."""
    mu = check_partition(mu)
    if sum(mu) != n:
        raise DegreeMismatch(f"{mu} is not a partition of {n}")
    return 2 * n - mu[-1]


def dmu_rows(n, mu, sigma, F):
    """The 2n - mu_m stacked polynomials for one derivative-order assignment."""
    mu = check_partition(mu)
    if F.degree != n or sum(mu) != n:
        raise DegreeMismatch(f"need deg F = sum(mu) = {n}")
    if sorted(sigma) != sorted(expand_partition(mu)):
        raise ValueError(f"{sigma} is not a rearrangement of the expanded tuple")
    rows = [F.shift_mul(s) for s in range(n - mu[-1] - 1, -1, -1)]
    rows.extend(
        F.taylor_derivative(sigma[i]).shift_mul(n - 1 - i) for i in range(n)
    )
    return rows


def _insert_row(pivots, vec):
    """Fraction-free reduction of one row against the pivot stack.

    Returns (column, reduced row, pivot value), or None when the row is a
    linear combination of the pivots.  Divisions by the previous pivot are
    exact (Sylvester identity); integer entries only.
    """
    r = list(vec)
    prev = 1
    for col, prow, piv in pivots:
        c = r[col]
        if c:
            r = [(piv * rj - c * pj) // prev for rj, pj in zip(r, prow)]
        elif piv != prev:
            r = [(piv * rj) // prev for rj in r]
        prev = piv
    for col, val in enumerate(r):
        if val:
            return col, r, val
    return None


def _sum_window(fvecs, slot_rows, values, counts, n, lo, hi):
    """Sum of stack determinants over the lex-rank window [lo, hi)."""
    pivots = []
    cols = []
    inversions = 0
    for vec in fvecs:
        res = _insert_row(pivots, vec)
        if res is None:
            return 0  # shared F-block singular: every term vanishes
        col, row, piv = res
        inversions += len(cols) - bisect_right(cols, col)
        insort(cols, col)
        pivots.append((col, row, piv))

    fact = [factorial(i) for i in range(n + 1)]

    def tail_count(cnts, length):
        c = fact[length]
        for q in cnts.values():
            c //= fact[q]
        return c

    total = 0

    def walk(slot, inv, cur):
        nonlocal total
        if slot == n:
            total += pivots[-1][2] if inv % 2 == 0 else -pivots[-1][2]
            return cur + 1
        for v in values:
            cnt = counts.get(v, 0)
            if not cnt:
                continue
            counts[v] = cnt - 1
            if cnt == 1:
                del counts[v]
            size = tail_count(counts, n - slot - 1)
            if cur + size <= lo or cur >= hi:
                cur += size
            else:
                res = _insert_row(pivots, slot_rows[slot][v])
                if res is None:
                    cur += size  # singular prefix: all completions are zero
                else:
                    col, row, piv = res
                    added = len(cols) - bisect_right(cols, col)
                    insort(cols, col)
                    pivots.append((col, row, piv))
                    cur = walk(slot + 1, inv + added, cur)
                    pivots.pop()
                    cols.remove(col)
            if cnt == 1:
                counts[v] = 1
            else:
                counts[v] = cnt
            if cur >= hi:
                return cur
        return cur

    walk(0, inversions, 0)
    return total


def _numeric_setup(F, mu):
    n = F.degree
    dim = 2 * n - mu[-1]
    ints, _ = clear_denominators(list(F.coeffs))
    Fz = Poly(ints)
    fvecs = [
        [Fz.shift_mul(s).coeff(dim - 1 - j) for j in range(dim)]
        for s in range(n - mu[-1] - 1, -1, -1)
    ]
    values = sorted(set(mu))
    taylors = {v: Fz.taylor_derivative(v) for v in values}
    slot_rows = []
    for slot in range(n):
        shift = n - 1 - slot
        per_value = {
            v: [t.shift_mul(shift).coeff(dim - 1 - j) for j in range(dim)]
            for v, t in taylors.items()
        }
        slot_rows.append(per_value)
    counts = {}
    for v in expand_partition(mu):
        counts[v] = counts.get(v, 0) + 1
    return fvecs, slot_rows, values, counts, n


def _dmu_window_job(coeffs, mu, lo, hi):
    fvecs, slot_rows, values, counts, n = _numeric_setup(Poly(coeffs), mu)
    return _sum_window(fvecs, slot_rows, values, counts, n, lo, hi)


def _dmu_numeric(F, mu, workers):
    total_perms = permutation_count(expand_partition(mu))
    if workers > 1 and total_perms >= PARALLEL_THRESHOLD:
        bounds = [total_perms * i // workers for i in range(workers + 1)]
        coeffs = tuple(F.coeffs)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _dmu_window_job,
                [coeffs] * workers,
                [mu] * workers,
                bounds[:-1],
                bounds[1:],
            )
            return sum(parts)
    fvecs, slot_rows, values, counts, n = _numeric_setup(F, mu)
    return _sum_window(fvecs, slot_rows, values, counts, n, 0, total_perms)


def _dmu_by_dp(F, mu):
    """One dp determinant per rearrangement; the slow cross-check route."""
    n = F.degree
    total = 0
    for sigma in multiset_permutations(expand_partition(mu)):
        total = total + dp(dmu_rows(n, mu, sigma, F))
    return total


def dmu(F, mu, *, workers=None, symbolic_cap=SYMBOLIC_CAP, engine="auto"):
    """D_mu(F), exact; symbolic when F has symbolic coefficients.

    Numeric coefficients are normalised to integers by clearing
    denominators first; D_mu is homogeneous of degree 2n - mu_m, so the
    zero/nonzero verdict is unaffected and the reported value is the one
    for the scaled integer polynomial.
    """
    if engine not in ("auto", "dp"):
        raise ValueError(f"unknown engine: {engine}")
    mu = check_partition(mu)
    if not F:
        raise ZeroPolynomial("dmu of the zero polynomial")
    n = F.degree
    if sum(mu) != n:
        raise DegreeMismatch(f"{mu} does not partition deg F = {n}")
    dim = 2 * n - mu[-1]
    term_count = permutation_count(expand_partition(mu))
    if F.is_symbolic():
        if n > symbolic_cap:
            raise CapExceeded(f"symbolic dmu capped at degree {symbolic_cap}")
        value = _dmu_by_dp(F, mu)
        if isinstance(value, int):  # all-zero sum: normalise into the ring
            value = SymPoly.const(n + 1, value)
        return DmuResult(mu, "symbolic", value, term_count, dim)
    if engine == "dp":
        ints, _ = clear_denominators(list(F.coeffs))
        value = _dmu_by_dp(Poly(ints), mu)
    else:
        value = _dmu_numeric(F, mu, resolve_workers(workers))
    return DmuResult(mu, "numeric", value, term_count, dim)


def psd_sequence(F):
    """Principal subresultant coefficients of (F, F') and the distinct-root count.

    psd_k vanishes for k below the gcd degree of F and F' and is nonzero
    there, so the number of distinct roots is n minus the first nonzero
    index.  Rational coefficients are cleared first; zero-testing is
    normalisation-independent.
    """
    if not F:
        raise ZeroPolynomial("psd sequence of the zero polynomial")
    n = F.degree
    if n < 1:
        raise DegreeMismatch("psd sequence needs degree >= 1")
    ints, _ = clear_denominators(list(F.coeffs))
    Fz = Poly(ints)
    chain = subresultant_chain(Fz, Fz.derivative())
    psd = tuple(chain[k].coeff(k) for k in range(n))
    first = next(k for k, v in enumerate(psd) if v)
    return PsdReport(psd, n - first)


def classify_report(F, *, workers=None):
    """Distinct-root count, winning partition, and per-candidate certificates."""
    if not F:
        raise ZeroPolynomial("cannot classify the zero polynomial")
    n = F.degree
    report = psd_sequence(F)
    m = report.ndr
    if m == 1:
        return ClassifyReport(n, m, (n,), ())
    if m == n:
        return ClassifyReport(n, m, (1,) * n, ())
    if m == n - 1:
        return ClassifyReport(n, m, (2,) + (1,) * (n - 2), ())
    candidates = partitions(n, m)
    certificates = tuple(
        (nu, dmu(F, nu, workers=workers).value) for nu in candidates
    )
    winners = [nu for nu, value in certificates if value]
    if len(winners) != 1:
        raise AmbiguousClassification(
            f"{len(winners)} candidates nonzero among {candidates}: "
            f"{[(nu, value) for nu, value in certificates]}"
        )
    return ClassifyReport(n, m, winners[0], certificates)


def classify(F, *, workers=None):
    """The multiplicity structure of F, as a partition of its degree."""
    return classify_report(F, workers=workers).multiplicity
