"""Finitely supported Laurent elements sum x(a) t^a with exact rational coefficients.

K is Q_p, so every coefficient is a ``fractions.Fraction`` and its p-adic
valuation is computed on demand.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, PrimeMismatch
from .foundations import INF, ExtInt, MultiIndex, invlex_compare, invlex_key, Order
from .nets.core import Affine, NetSpec, Region, affine_extreme, as_affine, net_eval, window_points

Rational = Union[int, Fraction]

__all__ = [
    "CoefficientRule",
    "LaurentElement",
    "SeriesGenerator",
    "add",
    "element_in_net",
    "is_prime",
    "mul",
    "partial_sum",
    "scalar_mul",
    "val_p",
]


@functools.lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _int_val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def val_p(c: Rational, p: int) -> ExtInt:
    """Exact p-adic valuation of a rational; ``INF`` for zero."""
    c = Fraction(c)
    if c == 0:
        return INF
    return _int_val(c.numerator, p) - _int_val(c.denominator, p)


class LaurentElement:
    """An element of F with finite support.

    Coefficients are stored without zeros and in inverse-lex order of their
    indices; instances are immutable.
    """

    __slots__ = ("dim", "prime", "_terms")

    def __init__(self, dim: int, prime: int,
                 terms: Union[Mapping[Sequence[int], Rational], Iterable[Tuple[Sequence[int], Rational]]] = ()):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        if not is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[MultiIndex, Fraction] = {}
        for index, c in items:
            index = tuple(int(i) for i in index)
            if len(index) != dim:
                raise DimensionMismatch(f"index {index} in a {dim}-dimensional element")
            acc[index] = acc.get(index, Fraction(0)) + Fraction(c)
        ordered = sorted((a for a, c in acc.items() if c != 0), key=invlex_key)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "_terms", {a: acc[a] for a in ordered})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentElement is immutable")

    @classmethod
    def zero(cls, dim: int, prime: int) -> "LaurentElement":
        return cls(dim, prime)

    @classmethod
    def monomial(cls, dim: int, prime: int, index: Sequence[int], coeff: Rational = 1) -> "LaurentElement":
        return cls(dim, prime, [(index, coeff)])

    @classmethod
    def one(cls, dim: int, prime: int) -> "LaurentElement":
        return cls.monomial(dim, prime, (0,) * dim)

    @property
    def terms(self) -> Mapping[MultiIndex, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> Tuple[MultiIndex, ...]:
        return tuple(self._terms)

    def coefficient(self, a: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(a), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return (self.dim, self.prime, self._terms) == (other.dim, other.prime, other._terms)

    def __hash__(self):
        return hash((self.dim, self.prime, tuple(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"LaurentElement(dim={self.dim}, p={self.prime}, 0)"
        body = " + ".join(f"({c})*t^{list(a)}" for a, c in self._terms.items())
        return f"LaurentElement(dim={self.dim}, p={self.prime}, {body})"

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return scalar_mul(-1, self)

    def __sub__(self, other):
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, LaurentElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented


def _check_compatible(x: LaurentElement, y: LaurentElement) -> None:
    if x.dim != y.dim:
        raise DimensionMismatch(f"elements of dimensions {x.dim} and {y.dim}")
    if x.prime != y.prime:
        raise PrimeMismatch(f"elements over Q_{x.prime} and Q_{y.prime}")


def add(x: LaurentElement, y: LaurentElement) -> LaurentElement:
    _check_compatible(x, y)
    return LaurentElement(x.dim, x.prime, list(x.terms.items()) + list(y.terms.items()))


def mul(x: LaurentElement, y: LaurentElement) -> LaurentElement:
    """Cauchy product; finite supports make every coefficient a finite sum."""
    _check_compatible(x, y)
    acc: Dict[MultiIndex, Fraction] = {}
    for b, cb in x.terms.items():
        for g, cg in y.terms.items():
            a = tuple(i + j for i, j in zip(b, g))
            acc[a] = acc.get(a, Fraction(0)) + cb * cg
    return LaurentElement(x.dim, x.prime, acc)


def scalar_mul(c: Rational, x: LaurentElement) -> LaurentElement:
    c = Fraction(c)
    return LaurentElement(x.dim, x.prime, {a: c * v for a, v in x.terms.items()})


def element_in_net(x: LaurentElement, net: NetSpec) -> bool:
    """Whether x lies in the O-module sum p^{net(a)} t^a."""
    if x.dim != net.dim:
        raise DimensionMismatch(f"{x.dim}-dimensional element against a {net.dim}-net")
    return all(val_p(c, x.prime) >= net_eval(net, a) for a, c in x.terms.items())


@dataclass(frozen=True)
class CoefficientRule:
    """Coefficient ``scale * p**exponent(a)`` on a region."""

    scale: Fraction
    exponent: Affine

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))


@dataclass(frozen=True)
class SeriesGenerator:
    """A possibly infinite series given by finitely many coefficient rules.

    The coefficient is zero outside the (pairwise disjoint) regions.  When
    ``bound`` is given, construction checks symbolically that every
    coefficient has valuation at least ``bound(a)``, i.e. that the series
    lies in the O-module described by that net.
    """

    dim: int
    prime: int
    pieces: Tuple[Tuple[Region, CoefficientRule], ...]
    bound: Optional[NetSpec] = None

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        regions = [r for r, _ in self.pieces]
        for i, r in enumerate(regions):
            if r.dim != self.dim:
                raise DimensionMismatch("generator region of the wrong dimension")
            for s in regions[i + 1:]:
                if r.intersect(s) is not None:
                    raise ValueError("generator regions overlap")
        if self.bound is not None:
            self._check_bound()

    def _check_bound(self) -> None:
        for region, rule in self.pieces:
            if rule.scale == 0:
                continue
            v = val_p(rule.scale, self.prime)
            for bregion, brule in self.bound.pieces:
                common = region.intersect(bregion)
                if common is None:
                    continue
                f = as_affine(brule, self.dim)
                if f is None:
                    if brule.value == INF:
                        raise ValueError(f"nonzero coefficients where the bound net is +inf ({common.box})")
                    continue
                coeffs = tuple(a - b for a, b in zip(rule.exponent.coeffs, f[0]))
                slack, where = affine_extreme(coeffs, rule.exponent.offset - f[1] + v, common, "min")
                if slack < 0:
                    at = f" at {list(where)}" if where else ""
                    raise ValueError(f"coefficient valuation falls below the bound net{at}")

    @classmethod
    def from_table(cls, dim: int, prime: int, table: Mapping[Sequence[int], Rational],
                   bound: Optional[NetSpec] = None) -> "SeriesGenerator":
        pieces = []
        for a, c in table.items():
            a = tuple(a)
            pieces.append((Region(tuple((i, i) for i in a)),
                           CoefficientRule(Fraction(c), Affine((0,) * dim, 0))))
        return cls(dim, prime, tuple(pieces), bound)

    @classmethod
    def constant(cls, dim: int, prime: int, region: Region, value: Rational = 1,
                 bound: Optional[NetSpec] = None) -> "SeriesGenerator":
        return cls(dim, prime, ((region, CoefficientRule(Fraction(value), Affine((0,) * dim, 0))),), bound)

    def coefficient(self, a: Sequence[int]) -> Fraction:
        for region, rule in self.pieces:
            if region.contains(a):
                e = rule.exponent.evaluate(a)
                return rule.scale * Fraction(self.prime) ** e
        return Fraction(0)

    def truncate(self, window: Region) -> LaurentElement:
        return LaurentElement(self.dim, self.prime,
                              ((a, self.coefficient(a)) for a in window_points(window)))


def partial_sum(g: SeriesGenerator, a: Sequence[int], window: Region) -> LaurentElement:
    """s(a) = sum over a' <= a (inverse-lex) of g(a') t^a', restricted to ``window``."""
    if len(a) != g.dim or window.dim != g.dim:
        raise DimensionMismatch("partial sum index or window has the wrong dimension")
    a = tuple(a)
    return LaurentElement(g.dim, g.prime,
                          ((b, g.coefficient(b)) for b in window_points(window)
                           if invlex_compare(b, a) != Order.GT))
