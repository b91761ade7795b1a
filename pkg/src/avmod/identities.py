"""Brute-force checkers for the multi-index binomial identities that
underpin the homomorphism property of the generator transport maps.

Part (a) is the alternating binomial sum
    sum_{0<=m<=k} (-1)^|m| C(k,m) = delta_{k,0}.
Parts (b) and (c) are two-variable polynomial identities: both sides are
expanded term by term as exact polynomials in the 2n formal variables
(x_1..x_n, y_1..y_n) and compared for literal equality.
"""

from __future__ import annotations

from .errors import AvmodError, check_same_dimension
from .multiindex import MultiIndex
from .polynomial import Polynomial


def _xy_monomial(xexp: MultiIndex, yexp: MultiIndex) -> MultiIndex:
    return MultiIndex(tuple(xexp) + tuple(yexp))


def _xy_poly_term(n: int, xexp: MultiIndex, yexp: MultiIndex, coeff) -> Polynomial:
    return Polynomial.monomial(_xy_monomial(xexp, yexp), coeff)


def alternating_binomial_sum(k: MultiIndex) -> int:
    """sum over 0 <= m <= k of (-1)^|m| * C(k, m)."""
    return sum((-1) ** m.degree * k.binomial(m) for m in k.range_leq())


def comb_identity_a(k: MultiIndex) -> bool:
    return alternating_binomial_sum(k) == (1 if k.is_zero else 0)


def comb_identity_b(k: MultiIndex, l: MultiIndex, p: int) -> bool:
    """Positive-range double sum against its telescoped form.

    LHS: sum_{0<m<=k} sum_{0<j<=l} C(k,m) C(l,j) j_p x^{k+l-m-j} y^{m+j-e_p}
    RHS: l_p sum_{0<j<=k+l-e_p} C(k+l-e_p,j) x^{k+l-j-e_p} y^j
         - l_p sum_{0<j<=l-e_p} C(l-e_p,j) x^{k+l-j-e_p} y^j
    """
    check_same_dimension(k.n, l.n, "multi-indices")
    n = k.n
    if not 1 <= p <= n:
        raise AvmodError(f"direction index {p} out of range 1..{n}")
    ep = MultiIndex.unit(n, p)

    lhs = Polynomial.zero(2 * n)
    for m in k.range_leq():
        if m.is_zero:
            continue
        for j in l.range_leq():
            if j.is_zero or j[p - 1] == 0:
                continue
            coeff = k.binomial(m) * l.binomial(j) * j[p - 1]
            lhs = lhs + _xy_poly_term(n, (k + l) - (m + j), (m + j) - ep, coeff)

    rhs = Polynomial.zero(2 * n)
    lp = l[p - 1]
    if lp:
        top = (k + l) - ep
        for j in top.range_leq():
            if j.is_zero:
                continue
            rhs = rhs + _xy_poly_term(n, top - j, j, lp * top.binomial(j))
        sub = l - ep
        for j in sub.range_leq():
            if j.is_zero:
                continue
            rhs = rhs - _xy_poly_term(n, top - j, j, lp * sub.binomial(j))

    return lhs == rhs


def comb_identity_c(k: MultiIndex, l: MultiIndex, p: int) -> bool:
    """Signed full-range double sum against its single-sum form.

    LHS: sum_{0<=m<=k} sum_{0<=j<=l} (-1)^{|k|+|l|-|m|-|j|} C(k,m) C(l,j) j_p
         x^{k+l-m-j} y^{m+j-e_p}
    RHS: l_p sum_{0<=j<=k+l-e_p} (-1)^{|k|+|l|-|j|-1} C(k+l-e_p,j)
         x^{k+l-j-e_p} y^j
    """
    check_same_dimension(k.n, l.n, "multi-indices")
    n = k.n
    if not 1 <= p <= n:
        raise AvmodError(f"direction index {p} out of range 1..{n}")
    ep = MultiIndex.unit(n, p)

    lhs = Polynomial.zero(2 * n)
    for m in k.range_leq():
        for j in l.range_leq():
            if j[p - 1] == 0:
                continue
            sign = (-1) ** (k.degree + l.degree - m.degree - j.degree)
            coeff = sign * k.binomial(m) * l.binomial(j) * j[p - 1]
            lhs = lhs + _xy_poly_term(n, (k + l) - (m + j), (m + j) - ep, coeff)

    rhs = Polynomial.zero(2 * n)
    lp = l[p - 1]
    if lp:
        top = (k + l) - ep
        for j in top.range_leq():
            sign = (-1) ** (k.degree + l.degree - j.degree - 1)
            rhs = rhs + _xy_poly_term(n, top - j, j, sign * lp * top.binomial(j))

    return lhs == rhs


def comb_identity_check(part: str, k: MultiIndex, l: MultiIndex | None = None,
                        p: int | None = None) -> bool:
    """Dispatch on part 'a' | 'b' | 'c'; parts b and c need l and p."""
    if part == "a":
        return comb_identity_a(k)
    if part in ("b", "c"):
        if l is None or p is None:
            raise AvmodError(f"part {part!r} needs both l and p")
        fn = comb_identity_b if part == "b" else comb_identity_c
        return fn(k, l, p)
    raise AvmodError(f"unknown identity part {part!r}; expected a, b or c")
