"""The Weyl algebra of polynomial differential operators on affine n-space.

Elements are kept in the normal-ordered basis {x^r d^s}: every stored
word has all multiplications to the left of all differentiations.
Products are normal-ordered in one pass with the closed reordering
identity

    d^s * x^r = sum_{t <= min(r,s)} t! C(s,t) C(r,t) x^{r-t} d^{s-t},

so no swap-by-swap termination argument is needed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Tuple

from .errors import AvmodError, check_same_dimension
from .formatting import format_monomial, join_terms
from .multiindex import MultiIndex
from .polynomial import Polynomial, Scalar, as_rational

# a normal-ordered word x^r d^s, keyed by the exponent pair
WeylKey = Tuple[MultiIndex, MultiIndex]


def _word_product(a: WeylKey, b: WeylKey):
    """Normal-order (x^a0 d^a1)(x^b0 d^b1); yields (key, integer coeff)."""
    xa, da = a
    xb, db = b
    bound = da.meet(xb)
    for texp in itertools.product(*(range(e + 1) for e in bound)):
        t = MultiIndex(texp)
        coeff = t.factorial() * da.binomial(t) * xb.binomial(t)
        yield (xa + (xb - t), (da - t) + db), coeff


class WeylElement:
    """A finite rational combination of normal-ordered words x^r d^s."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[WeylKey, Scalar] | None = None):
        if n < 1:
            raise AvmodError(f"dimension must be >= 1, got {n}")
        clean: dict[WeylKey, Fraction] = {}
        if terms:
            for (r, s), c in terms.items():
                r = r if isinstance(r, MultiIndex) else MultiIndex(r)
                s = s if isinstance(s, MultiIndex) else MultiIndex(s)
                if r.n != n or s.n != n:
                    raise AvmodError(f"word ({r!r}, {s!r}) does not live in dimension {n}")
                c = as_rational(c)
                if c:
                    key = (r, s)
                    total = clean.get(key, Fraction(0)) + c
                    if total:
                        clean[key] = total
                    elif key in clean:
                        del clean[key]
        self.n = n
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "WeylElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "WeylElement":
        z = MultiIndex.zero(n)
        return cls(n, {(z, z): 1})

    @classmethod
    def word(cls, r: MultiIndex, s: MultiIndex, coeff: Scalar = 1) -> "WeylElement":
        return cls(r.n, {(r, s): coeff})

    @classmethod
    def x_var(cls, n: int, i: int) -> "WeylElement":
        return cls.word(MultiIndex.unit(n, i), MultiIndex.zero(n))

    @classmethod
    def d_var(cls, n: int, i: int) -> "WeylElement":
        return cls.word(MultiIndex.zero(n), MultiIndex.unit(n, i))

    @classmethod
    def from_poly(cls, f: Polynomial) -> "WeylElement":
        z = MultiIndex.zero(f.n)
        return cls(f.n, {(mi, z): c for mi, c in f.terms.items()})

    # ------------------------------------------------------------------
    # linear structure

    def _check(self, other: "WeylElement") -> None:
        if not isinstance(other, WeylElement):
            raise AvmodError(f"expected a WeylElement, got {other!r}")
        check_same_dimension(self.n, other.n, "Weyl elements")

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            total = terms.get(key, Fraction(0)) + c
            if total:
                terms[key] = total
            elif key in terms:
                del terms[key]
        out = WeylElement.__new__(WeylElement)
        out.n = self.n
        out.terms = terms
        return out

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def __neg__(self) -> "WeylElement":
        out = WeylElement.__new__(WeylElement)
        out.n = self.n
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def scale(self, c: Scalar) -> "WeylElement":
        c = as_rational(c)
        out = WeylElement.__new__(WeylElement)
        out.n = self.n
        out.terms = {key: c * v for key, v in self.terms.items()} if c else {}
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # ------------------------------------------------------------------
    # algebra structure

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict[WeylKey, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                cab = ca * cb
                for key, w in _word_product(ka, kb):
                    total = terms.get(key, Fraction(0)) + cab * w
                    if total:
                        terms[key] = total
                    elif key in terms:
                        del terms[key]
        out = WeylElement.__new__(WeylElement)
        out.n = self.n
        out.terms = terms
        return out

    def commutator(self, other: "WeylElement") -> "WeylElement":
        return self * other - other * self

    def apply_to(self, f: Polynomial) -> Polynomial:
        """Act on a polynomial: (x^r d^s)(f) = x^r * d^s f, term by term."""
        if not isinstance(f, Polynomial):
            raise AvmodError(f"expected a Polynomial, got {f!r}")
        check_same_dimension(self.n, f.n, "operator and polynomial")
        terms: dict[MultiIndex, Fraction] = {}
        for (r, s), c in self.terms.items():
            for mi, fc in f.terms.items():
                if not s.leq(mi):
                    continue
                fall = 1
                for e, d in zip(mi, s):
                    for step in range(d):
                        fall *= e - step
                key = r + (mi - s)
                total = terms.get(key, Fraction(0)) + c * fc * fall
                if total:
                    terms[key] = total
                elif key in terms:
                    del terms[key]
        return Polynomial(self.n, terms)

    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        # graded-lex on the concatenated exponent pair, largest first
        def key(kv):
            r, s = kv[0]
            return (r.degree + s.degree, tuple(r) + tuple(s))
        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        rendered = []
        for (r, s), c in self.sorted_terms():
            xpart = format_monomial(r, "x")
            dpart = format_monomial(s, "d")
            if xpart == "1":
                body = dpart
            elif dpart == "1":
                body = xpart
            else:
                body = f"{xpart}*{dpart}"
            rendered.append((c, body))
        return join_terms(rendered)

    def __repr__(self) -> str:
        return f"WeylElement({self.n}, {str(self)!r})"


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def weyl_commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return a.commutator(b)


def weyl_apply(a: WeylElement, f: Polynomial) -> Polynomial:
    return a.apply_to(f)
