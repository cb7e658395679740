"""Subresultant chains, by pseudo-remainder sequence and by determinants.

Conventions.  For P, Q with deg P = p > deg Q = q >= 0, the k-th
subresultant S_k(P, Q) for 0 <= k < q is the determinant polynomial of the
(p+q-2k) x (p+q-k) matrix whose rows are the coefficient vectors of

    x^(q-k-1) P, ..., x^0 P,   x^(p-k-1) Q, ..., x^0 Q

over the column degrees x^(p+q-k-1), ..., x^0 (P-rows on top):
S_k = sum_{j=0..k} det(M_j) x^j, where M_j keeps the first p+q-2k-1
columns plus the degree-j column.  For k = q the usual convention
S_q = lc(Q)^(p-q-1) Q applies, and S_0 is the resultant.  The principal
coefficient of S_k is its x^k coefficient.

Two routes compute the same chain:

* subresultant_chain: the classical subresultant remainder sequence,
  pseudo-divisions and exact scalar divisions only.  Fast; the production
  path for numeric polynomials.
* subresultant_det: the determinant definition, one small determinant per
  coefficient.  Works over any ring, and accepts *formal* degrees larger
  than the actual ones (virtual leading zeros).  Formal degrees matter
  when specialising a chain computed over symbolic coefficients at a
  point where leading coefficients vanish: the remainder sequence would
  see the collapsed degrees and compute a different object, while the
  padded determinants commute with specialisation.  This route is the
  symbolic path and the cross-check oracle for the other one.
"""

from .errors import DegreeOutOfRange, ZeroPolynomial
from .linalg import Matrix, det
from .unipoly import Poly


def pseudo_rem(P, Q):
    """prem(P, Q): remainder of lc(Q)^(deg P - deg Q + 1) * P under division by Q."""
    if not Q:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    dq = Q.degree
    if P.degree < dq:
        raise ValueError("pseudo_rem expects deg P >= deg Q")
    steps = P.degree - dq + 1
    lq = Q.lead
    r = P
    done = 0
    while r and r.degree >= dq:
        r = r.scale(lq) - Q.shift_mul(r.degree - dq).scale(r.lead)
        done += 1
    if done < steps and r:
        r = r.scale(lq ** (steps - done))
    return r


def subresultant_chain(P, Q):
    """The full chain [S_0, ..., S_q] of P and Q, deg P > deg Q >= 0.

    Classical subresultant remainder sequence: each block top S_(d-1) is a
    pseudo-remainder divided by a known exact scalar, each defective block
    bottom S_e is a scalar multiple of the top; skipped indices are zero.
    """
    if not P or not Q:
        raise ZeroPolynomial("subresultant chain of the zero polynomial")
    p, q = P.degree, Q.degree
    if p <= q:
        raise ValueError("subresultant chain expects deg P > deg Q")
    chain = [Poly() for _ in range(q + 1)]
    chain[q] = Q.scale(Q.lead ** (p - q - 1)) if p - q - 1 else Q
    s = Q.lead ** (p - q)
    A = Q
    B = pseudo_rem(P, Q)
    if (p - q) % 2 == 0:  # prem(P, -Q)
        B = -B
    while B:
        d = A.degree
        e = B.degree
        chain[d - 1] = B
        if e < d - 1:
            C = B.scale(B.lead ** (d - 1 - e)).exact_div_scalar(s ** (d - 1 - e))
            chain[e] = C
        else:
            C = B
        if e == 0:
            break
        nxt = pseudo_rem(A, B)
        if (d - e) % 2 == 0:  # prem(A, -B)
            nxt = -nxt
        B = nxt.exact_div_scalar(s ** (d - e) * A.lead)
        A = C
        s = A.lead
    return chain


def subresultant_det(P, Q, k, p=None, q=None, method="auto"):
    """S_k(P, Q) by the determinant definition, optionally at formal degrees.

    p and q default to the actual degrees; passing larger values evaluates
    the same determinants with padded leading zeros.
    """
    if p is None:
        if not P:
            raise ZeroPolynomial("formal degree required for a zero polynomial")
        p = P.degree
    if q is None:
        if not Q:
            raise ZeroPolynomial("formal degree required for a zero polynomial")
        q = Q.degree
    if P.degree > p or Q.degree > q:
        raise DegreeOutOfRange("actual degree exceeds the formal degree")
    if p <= q or q < 0:
        raise ValueError("subresultants need formal degrees p > q >= 0")
    if not 0 <= k <= q:
        raise DegreeOutOfRange(f"subresultant index {k} outside 0..{q}")
    if k == q:
        c = Q.coeff(q)
        return Q.scale(c ** (p - q - 1)) if p - q - 1 else Q
    nrows = p + q - 2 * k
    top_degree = p + q - k - 1
    rows = []
    for shift in range(q - k - 1, -1, -1):
        rows.append([P.coeff(top_degree - t - shift) for t in range(top_degree + 1)])
    for shift in range(p - k - 1, -1, -1):
        rows.append([Q.coeff(top_degree - t - shift) for t in range(top_degree + 1)])
    coeffs = []
    for j in range(k, -1, -1):
        picked = list(range(nrows - 1)) + [top_degree - j]
        sub = Matrix([[row[t] for t in picked] for row in rows])
        coeffs.append(det(sub, method=method))
    return Poly(coeffs)


def principal_coefficient(chain_or_poly, k):
    """x^k coefficient of S_k, given either the chain or S_k itself."""
    poly = chain_or_poly[k] if isinstance(chain_or_poly, list) else chain_or_poly
    return poly.coeff(k)


def resultant(P, Q, method="auto"):
    """res(P, Q) for deg P > deg Q, as the constant coefficient of S_0."""
    return subresultant_det(P, Q, 0, method=method).coeff(0)
