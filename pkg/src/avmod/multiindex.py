"""Multi-indices: exponent vectors in Z^n_{>=0}.

A multi-index k encodes both the monomial x^k = x1^{k_1}*...*xn^{k_n}
and the differential operator d^k.  Binomials, factorials and the
partial order are all taken componentwise; |k| denotes the total degree
k_1 + ... + k_n.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator

from .errors import AvmodError, check_same_dimension


class MultiIndex(tuple):
    """An immutable exponent vector; behaves as a tuple of nonnegative ints.

    Componentwise + and - replace tuple concatenation; subtraction that
    would go negative raises.
    """

    __slots__ = ()

    def __new__(cls, exps: Iterable[int]) -> "MultiIndex":
        t = tuple(exps)
        for e in t:
            if not isinstance(e, int) or isinstance(e, bool):
                raise AvmodError(f"multi-index entries must be ints, got {e!r}")
            if e < 0:
                raise AvmodError(f"multi-index entries must be >= 0, got {t}")
        return super().__new__(cls, t)

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        if n < 1:
            raise AvmodError(f"dimension must be >= 1, got {n}")
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, p: int) -> "MultiIndex":
        """The standard basis vector e_p; p is 1-based."""
        if not 1 <= p <= n:
            raise AvmodError(f"direction index {p} out of range 1..{n}")
        return cls(tuple(1 if i == p - 1 else 0 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        """Total degree |k|."""
        return sum(self)

    @property
    def is_zero(self) -> bool:
        return not any(self)

    def __add__(self, other) -> "MultiIndex":
        self._check_compatible(other)
        return MultiIndex(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other) -> "MultiIndex":
        self._check_compatible(other)
        return MultiIndex(tuple(a - b for a, b in zip(self, other)))

    def __radd__(self, other):  # pragma: no cover - symmetric helper
        return self.__add__(other)

    def leq(self, other: "MultiIndex") -> bool:
        """Componentwise partial order: self <= other in every slot."""
        self._check_compatible(other)
        return all(a <= b for a, b in zip(self, other))

    def meet(self, other: "MultiIndex") -> "MultiIndex":
        """Componentwise minimum."""
        self._check_compatible(other)
        return MultiIndex(tuple(min(a, b) for a, b in zip(self, other)))

    def binomial(self, m: "MultiIndex") -> int:
        """Product of componentwise binomials C(k_i, m_i); 0 unless m <= k."""
        self._check_compatible(m)
        out = 1
        for a, b in zip(self, m):
            out *= math.comb(a, b)
            if out == 0:
                return 0
        return out

    def factorial(self) -> int:
        """Product of componentwise factorials k_1! * ... * k_n!."""
        out = 1
        for a in self:
            out *= math.factorial(a)
        return out

    def range_leq(self) -> Iterator["MultiIndex"]:
        """Iterate over all m with 0 <= m <= self, in lexicographic order."""
        for exps in itertools.product(*(range(e + 1) for e in self)):
            yield MultiIndex(exps)

    def grlex_key(self):
        """Sort key for the graded-lexicographic order with x1 > x2 > ... > xn."""
        return (self.degree, tuple(self))

    def _check_compatible(self, other) -> None:
        if not isinstance(other, MultiIndex):
            raise AvmodError(f"expected a MultiIndex, got {other!r}")
        check_same_dimension(len(self), len(other), "multi-indices")

    def __repr__(self) -> str:
        return f"MultiIndex({tuple(self)})"


def mi_binomial(k: MultiIndex, m: MultiIndex) -> int:
    return k.binomial(m)


def mi_leq(m: MultiIndex, k: MultiIndex) -> bool:
    return m.leq(k)


def mi_factorial(k: MultiIndex) -> int:
    return k.factorial()


def multiindices_of_degree(n: int, d: int) -> Iterator[MultiIndex]:
    """All multi-indices of dimension n with |k| = d."""
    if n == 1:
        yield MultiIndex((d,))
        return
    for first in range(d, -1, -1):
        for rest in multiindices_of_degree(n - 1, d - first):
            yield MultiIndex((first,) + tuple(rest))


def multiindices_up_to_degree(n: int, d: int) -> Iterator[MultiIndex]:
    """All multi-indices of dimension n with |k| <= d, by increasing degree."""
    for deg in range(d + 1):
        yield from multiindices_of_degree(n, deg)
