"""Partitions, expanded multiplicity tuples, and multiset permutations.

A partition mu = (mu_1 >= ... >= mu_m) of n expands to the length-n tuple
p that repeats each part mu_i exactly mu_i times; the discriminant sums
one determinant per distinct rearrangement of p.  Rearrangements are
streamed in ascending lexicographic order and never materialised, and the
stream is splittable by lexicographic rank so independent workers can
consume disjoint, deterministic chunks.
"""

from math import factorial

from .errors import EmptyDomain


def is_partition(mu):
    return (
        len(mu) > 0
        and all(isinstance(x, int) and x >= 1 for x in mu)
        and all(a >= b for a, b in zip(mu, mu[1:]))
    )


def check_partition(mu):
    if not is_partition(mu):
        raise ValueError(f"not a partition (positive, non-increasing): {mu}")
    return tuple(mu)


def parse_partition(text):
    """Parse the comma-separated form, e.g. "4,2,2"."""
    try:
        mu = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not a comma-separated partition: {text!r}") from exc
    return check_partition(mu)


def format_partition(mu):
    return ",".join(map(str, mu))


def partitions(n, m):
    """All partitions of n into exactly m parts, in descending lex order."""
    if m < 1 or m > n:
        raise EmptyDomain(f"no partitions of {n} into {m} parts")
    out = []

    def rec(remaining, parts_left, cap, prefix):
        if parts_left == 1:
            if remaining <= cap:
                out.append(prefix + (remaining,))
            return
        # first part large enough that the rest can still be filled
        lo = -(-remaining // parts_left)  # ceil
        for first in range(min(cap, remaining - parts_left + 1), lo - 1, -1):
            rec(remaining - first, parts_left - 1, first, prefix + (first,))

    rec(n, m, n, ())
    return out


def expand_partition(mu):
    """Repeat each part mu_i exactly mu_i times; length is sum(mu)."""
    mu = check_partition(mu)
    out = []
    for part in mu:
        out.extend([part] * part)
    return tuple(out)


def repetition_constant(p):
    """Product of factorials of the occurrence counts of distinct values."""
    counts = {}
    for v in p:
        counts[v] = counts.get(v, 0) + 1
    c = 1
    for q in counts.values():
        c *= factorial(q)
    return c


def permutation_count(p):
    """Number of distinct rearrangements: n! / prod(occurrence counts!)."""
    return factorial(len(p)) // repetition_constant(p)


def multiset_permutations(p):
    """Stream every distinct rearrangement exactly once, ascending lex order."""
    cur = sorted(p)
    n = len(cur)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(cur)
        # classic next-permutation step
        i = n - 2
        while i >= 0 and cur[i] >= cur[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while cur[j] <= cur[i]:
            j -= 1
        cur[i], cur[j] = cur[j], cur[i]
        cur[i + 1 :] = reversed(cur[i + 1 :])


def _count_with_counts(counts, length):
    c = factorial(length)
    for q in counts.values():
        c //= factorial(q)
    return c


def unrank_permutation(p, rank):
    """The rank-th rearrangement of p in ascending lex order (0-based)."""
    total = permutation_count(p)
    if not 0 <= rank < total:
        raise IndexError(f"rank {rank} out of range [0, {total})")
    counts = {}
    for v in p:
        counts[v] = counts.get(v, 0) + 1
    out = []
    remaining = len(p)
    while remaining:
        for v in sorted(counts):
            counts[v] -= 1
            if counts[v] == 0:
                del counts[v]
            below = _count_with_counts(counts, remaining - 1)
            if rank < below:
                out.append(v)
                break
            rank -= below
            counts[v] = counts.get(v, 0) + 1
        remaining -= 1
    return tuple(out)


def rank_permutation(t):
    """Lexicographic rank of t among the rearrangements of its own multiset."""
    counts = {}
    for v in t:
        counts[v] = counts.get(v, 0) + 1
    rank = 0
    remaining = len(t)
    for chosen in t:
        for v in sorted(counts):
            if v == chosen:
                break
            counts[v] -= 1
            if counts[v] == 0:
                del counts[v]
            rank += _count_with_counts(counts, remaining - 1)
            counts[v] = counts.get(v, 0) + 1
        counts[chosen] -= 1
        if counts[chosen] == 0:
            del counts[chosen]
        remaining -= 1
    return rank
