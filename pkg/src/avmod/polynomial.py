"""Exact multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` (arbitrary precision, always in
lowest terms with positive denominator), so every operation in the
library is exact; floats are rejected on input.  Terms are stored
sparsely as a map MultiIndex -> Fraction with no zero entries, and the
canonical term order is graded-lex with x1 > x2 > ... > xn.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import AvmodError, check_same_dimension
from .formatting import format_monomial, join_terms
from .multiindex import MultiIndex

Rational = Fraction

Scalar = Union[int, Fraction]


def as_rational(c) -> Fraction:
    """Coerce an exact scalar to Fraction; floats are refused."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    raise AvmodError(f"coefficients must be exact rationals, got {c!r}")


class Polynomial:
    """A sparse polynomial in x1..xn with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[MultiIndex, Scalar] | None = None):
        if n < 1:
            raise AvmodError(f"dimension must be >= 1, got {n}")
        clean: dict[MultiIndex, Fraction] = {}
        if terms:
            for mi, c in terms.items():
                if not isinstance(mi, MultiIndex):
                    mi = MultiIndex(mi)
                if mi.n != n:
                    raise AvmodError(f"monomial {mi!r} does not live in dimension {n}")
                c = as_rational(c)
                if c:
                    acc = clean.get(mi)
                    total = c if acc is None else acc + c
                    if total:
                        clean[mi] = total
                    elif acc is not None:
                        del clean[mi]
        self.n = n
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(n, {MultiIndex.zero(n): 1})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "Polynomial":
        return cls(n, {MultiIndex.zero(n): c})

    @classmethod
    def monomial(cls, exps, coeff: Scalar = 1) -> "Polynomial":
        mi = exps if isinstance(exps, MultiIndex) else MultiIndex(exps)
        return cls(mi.n, {mi: coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        return cls(n, {MultiIndex.unit(n, i): 1})

    # ------------------------------------------------------------------
    # ring structure

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise AvmodError(f"expected a Polynomial, got {other!r}")
        check_same_dimension(self.n, other.n, "polynomials")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for mi, c in other.terms.items():
            acc = terms.get(mi)
            total = c if acc is None else acc + c
            if total:
                terms[mi] = total
            elif acc is not None:
                del terms[mi]
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = terms
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {mi: -c for mi, c in self.terms.items()}
        return out

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict[MultiIndex, Fraction] = {}
        for mi1, c1 in self.terms.items():
            for mi2, c2 in other.terms.items():
                mi = mi1 + mi2
                c = c1 * c2
                acc = terms.get(mi)
                total = c if acc is None else acc + c
                if total:
                    terms[mi] = total
                elif acc is not None:
                    del terms[mi]
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = terms
        return out

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def scale(self, c: Scalar) -> "Polynomial":
        c = as_rational(c)
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {mi: c * v for mi, v in self.terms.items()} if c else {}
        return out

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise AvmodError(f"polynomial powers must be nonnegative ints, got {e!r}")
        out = Polynomial.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    # ------------------------------------------------------------------
    # calculus

    def partial_x(self, i: int) -> "Polynomial":
        """Exact partial derivative d/dx_i (1-based)."""
        if not 1 <= i <= self.n:
            raise AvmodError(f"direction index {i} out of range 1..{self.n}")
        terms: dict[MultiIndex, Fraction] = {}
        for mi, c in self.terms.items():
            e = mi[i - 1]
            if e:
                terms[mi - MultiIndex.unit(self.n, i)] = c * e
        return Polynomial(self.n, terms)

    def partial(self, k: MultiIndex) -> "Polynomial":
        """Iterated partial derivative d^k."""
        check_same_dimension(self.n, k.n, "polynomial and derivative order")
        out = self
        for i, e in enumerate(k, start=1):
            for _ in range(e):
                out = out.partial_x(i)
        return out

    # ------------------------------------------------------------------
    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mi.degree for mi in self.terms), default=-1)

    def coeff(self, mi: MultiIndex) -> Fraction:
        return self.terms.get(mi, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(MultiIndex.zero(self.n), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in the canonical print order (graded-lex descending)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].grlex_key(), reverse=True)

    def __str__(self) -> str:
        return join_terms([(c, format_monomial(mi)) for mi, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {str(self)!r})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_scale(f: Polynomial, c: Scalar) -> Polynomial:
    return f.scale(c)


def poly_partial(f: Polynomial, k: MultiIndex) -> Polynomial:
    return f.partial(k)
