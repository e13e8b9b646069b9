"""The pairing <x, y> = pi_0(xy), the self-duality map and pseudo-polars."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .elements import LaurentElement, Rational, _check_compatible, val_p
from .errors import DimensionMismatch, InvalidNetValues
from .foundations import INF, NEG_INF, MultiIndex, is_finite, negate
from .nets.classify import classify_compactoid
from .nets.core import FieldShape, NetSpec, Region, net_eval, polar_transform, window_points
from .topology import QExp

__all__ = [
    "CSeminorm",
    "FunctionalHandle",
    "PolarCheck",
    "c_seminorm",
    "gamma",
    "pair",
    "polar_membership",
    "projection",
    "reconstruct",
]


def projection(a0: Sequence[int], x: LaurentElement) -> Fraction:
    if len(a0) != x.dim:
        raise DimensionMismatch(f"index of length {len(a0)} for a {x.dim}-dimensional element")
    return x.coefficient(a0)


def pair(x: LaurentElement, y: LaurentElement) -> Fraction:
    """sum_a x(-a) y(a); only indices where both factors are nonzero contribute."""
    _check_compatible(x, y)
    if len(y) > len(x):
        x, y = y, x
    total = Fraction(0)
    for a, c in y.terms.items():
        total += c * x.coefficient(negate(a))
    return total


@dataclass(frozen=True)
class FunctionalHandle:
    """The continuous linear form y -> pair(representer, y)."""

    representer: LaurentElement

    def __call__(self, y: LaurentElement) -> Fraction:
        return pair(self.representer, y)

    def on_monomial(self, b: Sequence[int]) -> Fraction:
        """The value w(t^b)."""
        x = self.representer
        return self(LaurentElement.monomial(x.dim, x.prime, b))


def gamma(x: LaurentElement) -> FunctionalHandle:
    return FunctionalHandle(x)


def reconstruct(w: Callable[[MultiIndex], Rational], window: Region, dim: int, prime: int) -> LaurentElement:
    """The element with x(a) = w(t^{-a}) for a in ``window``.

    ``w`` maps an index b to the value of the functional on t^b.
    """
    if window.dim != dim:
        raise DimensionMismatch("window and dimension disagree")
    return LaurentElement(dim, prime, ((a, w(negate(a))) for a in window_points(window)))


@dataclass(frozen=True)
class CSeminorm:
    exponent: QExp
    compactoid: bool


def c_seminorm(x: LaurentElement, B: NetSpec, shape: FieldShape) -> CSeminorm:
    """|pi_x|_B = sup over y in B of |pair(x, y)| as a q-exponent.

    By the ultrametric inequality the sup is the max over a of
    |x(-a)| q^{-B(a)}, attained by the monomial p^{B(a)} t^a.  The result is
    flagged when B is not compactoid; the value is still computed.
    """
    if x.dim != B.dim:
        raise DimensionMismatch(f"{x.dim}-dimensional element against a {B.dim}-net")
    if B.has_value(NEG_INF):
        raise InvalidNetValues("B must take values in Z u {+inf}")
    compactoid = classify_compactoid(B, shape).holds
    best: QExp = NEG_INF
    for b, c in x.terms.items():
        k = net_eval(B, negate(b))
        if k == INF:
            continue
        e = -val_p(c, x.prime) - k
        if best == NEG_INF or e > best:
            best = e
    return CSeminorm(best, compactoid)


@dataclass(frozen=True)
class PolarCheck:
    """Outcome of a pseudo-polar membership test.

    On failure ``witness`` is a monomial a in A with |pair(y, a)| >= 1 and
    ``pairing`` is that pairing.  On success ``slack`` is the least margin
    v(y(b)) - (1 - A(-b)) over the support (``INF`` for y = 0).
    """

    member: bool
    witness: Optional[LaurentElement] = None
    pairing: Optional[Fraction] = None
    slack: object = None

    def __bool__(self):
        return self.member


def polar_membership(y: LaurentElement, A: NetSpec) -> PolarCheck:
    """Whether y lies in A^gamma = sum p^{1 - A(-a)} t^a."""
    if y.dim != A.dim:
        raise DimensionMismatch(f"{y.dim}-dimensional element against a {A.dim}-net")
    polar = polar_transform(A)
    slack = INF
    for b, c in y.terms.items():
        v = val_p(c, y.prime)
        need = net_eval(polar, b)
        if v < need:
            k = net_eval(A, negate(b))
            # A(-b) = -inf means A holds every multiple of t^{-b}; p^{-v} suffices.
            exp = k if is_finite(k) else -v
            a = LaurentElement.monomial(y.dim, y.prime, negate(b), Fraction(y.prime) ** exp)
            return PolarCheck(False, a, pair(y, a))
        if is_finite(need):
            margin = v - need
            if slack == INF or margin < slack:
                slack = margin
    return PolarCheck(True, slack=slack)
