"""Polynomial vector fields on affine n-space and their Lie structure.

Generators are the monomial fields x^k d/dx_p; a general field f d/dx_p
is expanded over these immediately, which keeps the bracket and the
enveloping-algebra rewriting uniform.  The degree of x^k d/dx_p is
|k| - 1, and the origin-vanishing subalgebra consists of the fields all
of whose generators have degree >= 0.

Direction indices p are 1-based throughout, matching the surface syntax
x1, d1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Tuple

from .errors import AvmodError, RestrictionError, check_same_dimension
from .formatting import format_monomial, join_terms
from .multiindex import MultiIndex, multiindices_up_to_degree
from .polynomial import Polynomial, Scalar, as_rational
from .weyl import WeylElement


@dataclass(frozen=True)
class VectorFieldGen:
    """The monomial vector field x^k d/dx_p."""

    k: MultiIndex
    p: int

    def __post_init__(self):
        if not isinstance(self.k, MultiIndex):
            object.__setattr__(self, "k", MultiIndex(self.k))
        if not 1 <= self.p <= self.k.n:
            raise AvmodError(f"direction index {self.p} out of range 1..{self.k.n}")

    @property
    def n(self) -> int:
        return self.k.n

    @property
    def degree(self) -> int:
        return self.k.degree - 1

    @property
    def in_lplus(self) -> bool:
        return self.degree >= 0

    def pbw_key(self):
        """Total order used for enveloping-algebra normal forms:
        degree first, then the exponent vector, then the direction."""
        return (self.k.degree, tuple(self.k), self.p)

    def apply_to_monomial(self, m: MultiIndex) -> Tuple[MultiIndex, int] | None:
        """(x^k d_p)(x^m) = m_p x^{k+m-e_p}; None when it vanishes."""
        e = m[self.p - 1]
        if e == 0:
            return None
        return self.k + (m - MultiIndex.unit(self.n, self.p)), e

    def as_weyl(self) -> WeylElement:
        return WeylElement.word(self.k, MultiIndex.unit(self.n, self.p))

    def __str__(self) -> str:
        xpart = format_monomial(self.k, "x")
        dpart = f"d{self.p}"
        return dpart if xpart == "1" else f"{xpart}*{dpart}"

    def __repr__(self) -> str:
        return f"VectorFieldGen({str(self)!r})"


@lru_cache(maxsize=None)
def bracket_gens(a: VectorFieldGen, b: VectorFieldGen) -> Tuple[Tuple[VectorFieldGen, int], ...]:
    """[x^k d_p, x^l d_q] = l_p x^{k+l-e_p} d_q - k_q x^{k+l-e_q} d_p.

    A term whose exponent would go negative always carries scalar factor
    zero; that is asserted rather than silently assumed.
    """
    check_same_dimension(a.n, b.n, "vector-field generators")
    n = a.n
    k, p = a.k, a.p
    l, q = b.k, b.p
    kl = k + l
    out: dict[VectorFieldGen, int] = {}

    lp = l[p - 1]
    if lp:
        out[VectorFieldGen(kl - MultiIndex.unit(n, p), q)] = lp
    else:
        assert kl[p - 1] - 1 < 0 or lp == 0  # dropped term has zero coefficient

    kq = k[q - 1]
    if kq:
        gen = VectorFieldGen(kl - MultiIndex.unit(n, q), p)
        out[gen] = out.get(gen, 0) - kq
        if not out[gen]:
            del out[gen]
    else:
        assert kl[q - 1] - 1 < 0 or kq == 0

    return tuple(out.items())


class VectorField:
    """A finite rational combination of monomial vector fields."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[VectorFieldGen, Scalar] | None = None):
        if n < 1:
            raise AvmodError(f"dimension must be >= 1, got {n}")
        clean: dict[VectorFieldGen, Fraction] = {}
        if terms:
            for gen, c in terms.items():
                if not isinstance(gen, VectorFieldGen):
                    raise AvmodError(f"expected a VectorFieldGen key, got {gen!r}")
                if gen.n != n:
                    raise AvmodError(f"generator {gen!r} does not live in dimension {n}")
                c = as_rational(c)
                if c:
                    total = clean.get(gen, Fraction(0)) + c
                    if total:
                        clean[gen] = total
                    elif gen in clean:
                        del clean[gen]
        self.n = n
        self.terms = clean

    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "VectorField":
        return cls(n)

    @classmethod
    def from_gen(cls, gen: VectorFieldGen, coeff: Scalar = 1) -> "VectorField":
        return cls(gen.n, {gen: coeff})

    @classmethod
    def from_poly_times_d(cls, f: Polynomial, p: int) -> "VectorField":
        """Expand f d/dx_p over monomial generators."""
        return cls(f.n, {VectorFieldGen(mi, p): c for mi, c in f.terms.items()})

    # ------------------------------------------------------------------

    def _check(self, other: "VectorField") -> None:
        if not isinstance(other, VectorField):
            raise AvmodError(f"expected a VectorField, got {other!r}")
        check_same_dimension(self.n, other.n, "vector fields")

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        terms = dict(self.terms)
        for gen, c in other.terms.items():
            total = terms.get(gen, Fraction(0)) + c
            if total:
                terms[gen] = total
            elif gen in terms:
                del terms[gen]
        out = VectorField.__new__(VectorField)
        out.n = self.n
        out.terms = terms
        return out

    def __sub__(self, other: "VectorField") -> "VectorField":
        return self + (-other)

    def __neg__(self) -> "VectorField":
        out = VectorField.__new__(VectorField)
        out.n = self.n
        out.terms = {gen: -c for gen, c in self.terms.items()}
        return out

    def scale(self, c: Scalar) -> "VectorField":
        c = as_rational(c)
        out = VectorField.__new__(VectorField)
        out.n = self.n
        out.terms = {gen: c * v for gen, v in self.terms.items()} if c else {}
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # ------------------------------------------------------------------

    def bracket(self, other: "VectorField") -> "VectorField":
        """Bilinear extension of the generator bracket; antisymmetric."""
        self._check(other)
        terms: dict[VectorFieldGen, Fraction] = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                c12 = c1 * c2
                for gen, w in bracket_gens(g1, g2):
                    total = terms.get(gen, Fraction(0)) + c12 * w
                    if total:
                        terms[gen] = total
                    elif gen in terms:
                        del terms[gen]
        out = VectorField.__new__(VectorField)
        out.n = self.n
        out.terms = terms
        return out

    def apply_to(self, f: Polynomial) -> Polynomial:
        """Derivation action: (x^k d_p)(f) = x^k * df/dx_p."""
        if not isinstance(f, Polynomial):
            raise AvmodError(f"expected a Polynomial, got {f!r}")
        check_same_dimension(self.n, f.n, "vector field and polynomial")
        terms: dict[MultiIndex, Fraction] = {}
        for gen, c in self.terms.items():
            for mi, fc in f.terms.items():
                hit = gen.apply_to_monomial(mi)
                if hit is None:
                    continue
                key, e = hit
                total = terms.get(key, Fraction(0)) + c * fc * e
                if total:
                    terms[key] = total
                elif key in terms:
                    del terms[key]
        return Polynomial(self.n, terms)

    @property
    def in_lplus(self) -> bool:
        return all(gen.in_lplus for gen in self.terms)

    def require_lplus(self) -> "VectorField":
        for gen in self.terms:
            if not gen.in_lplus:
                raise RestrictionError(
                    f"generator {gen} does not vanish at the origin")
        return self

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorField)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].pbw_key())

    def __str__(self) -> str:
        return join_terms([(c, str(gen)) for gen, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"VectorField({self.n}, {str(self)!r})"


def vf_bracket(a: VectorField, b: VectorField) -> VectorField:
    return a.bracket(b)


def vf_apply(a: VectorField, f: Polynomial) -> Polynomial:
    return a.apply_to(f)


def vf_degree(gen: VectorFieldGen) -> int:
    return gen.degree


def vf_in_lplus(v: VectorField) -> bool:
    return v.in_lplus


def generators_up_to_degree(n: int, max_k_degree: int, lplus_only: bool = False
                            ) -> Iterator[VectorFieldGen]:
    """All x^k d_p with |k| <= max_k_degree (|k| >= 1 when restricted)."""
    for k in multiindices_up_to_degree(n, max_k_degree):
        if lplus_only and k.is_zero:
            continue
        for p in range(1, n + 1):
            yield VectorFieldGen(k, p)
