"""Independent oracles shared by the test modules.

These are deliberately naive implementations (cofactor expansion,
factorial-time permanents, brute-force enumerations) kept separate from
the library code paths they validate.
"""

from itertools import permutations as iter_permutations

from multdisc.sympoly import SymPoly
from multdisc.unipoly import Poly


def naive_det(rows):
    """Cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        e = rows[0][j]
        if not e:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = e * naive_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def naive_permanent(rows):
    """Sum over all column-selection permutations of entry products."""
    n = len(rows)
    total = 0
    for perm in iter_permutations(range(n)):
        prod = 1
        for i in range(n):
            prod = prod * rows[i][perm[i]]
        total = total + prod
    return total


def brute_partitions(n, m):
    """All non-increasing m-tuples of positive ints summing to n (set-built)."""
    if m == 1:
        return {(n,)}
    out = set()
    for first in range(1, n):
        for rest in brute_partitions(n - first, m - 1):
            if first >= rest[0]:
                out.add((first,) + rest)
    return out


def psd_oracle(F, k):
    """k-th principal subresultant coefficient of (F, F') from an explicitly
    assembled coefficient matrix and the cofactor-expansion determinant."""
    n = F.degree
    p, q = n, n - 1
    Q = F.derivative()
    if k == q:
        return Q.coeff(q)
    top = p + q - k - 1
    rows = []
    for shift in range(q - k - 1, -1, -1):
        rows.append([F.coeff(top - t - shift) for t in range(p + q - 2 * k)])
    for shift in range(p - k - 1, -1, -1):
        rows.append([Q.coeff(top - t - shift) for t in range(p + q - 2 * k)])
    return naive_det(rows)


def random_sympoly(rng, nvars, max_terms=4, max_exp=3, coeff_bound=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            terms[exps] = terms.get(exps, 0) + c
    return SymPoly(nvars, terms)


def random_poly(rng, max_deg=6, bound=9):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(-bound, bound) for _ in range(deg + 1)]
    coeffs[0] = rng.choice([1, 2, 3, -1, -2, -3])
    return Poly(coeffs)


def translate(F, t):
    """F(x + t) by Horner composition."""
    acc = Poly([F.coeffs[0]])
    for c in F.coeffs[1:]:
        acc = acc * Poly([1, t]) + Poly([c])
    return acc
