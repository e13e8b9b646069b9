"""Admissible seminorms, their gauge description, and related checks.

Seminorm values are always exact powers q^e (q = p) or 0, so they are
carried as exponents: an ``int`` or ``NEG_INF`` (the value 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from .elements import LaurentElement, SeriesGenerator, element_in_net, partial_sum, scalar_mul, val_p
from .errors import (
    DimensionMismatch,
    EmptyProduct,
    GaugeInfinite,
    IndeterminateSum,
    InvalidNetValues,
    NonpositiveRho,
    NotClassified,
    ScheduleNotMonotone,
)
from .foundations import INF, NEG_INF, ExtInt, MultiIndex, Order, invlex_compare, is_finite
from .nets.classify import classify_bounded, classify_open_lattice
from .nets.core import FieldShape, NetSpec, Region, affine_extreme, as_affine, net_eval

QExp = ExtInt

__all__ = [
    "QExp",
    "RhoNet",
    "archimedean_seminorm",
    "bounded_sup_difference",
    "convergence_check",
    "format_qexp",
    "gauge_eval",
    "product_seminorm",
    "qexp_from_json",
    "qexp_to_json",
    "rho_admissible",
    "seminorm_eval",
    "sup_difference_argmax",
]


def qexp_to_json(e: QExp):
    return "-inf" if e == NEG_INF else int(e)


def qexp_from_json(obj) -> QExp:
    if obj == "-inf":
        return NEG_INF
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ValueError(f"not a q-exponent: {obj!r}")
    return obj


def format_qexp(e: QExp, q: int) -> str:
    if e == NEG_INF:
        return "0 (exponent -inf)"
    return f"{q}^{e} (exponent {e})"


def _check(net: NetSpec, x: LaurentElement) -> None:
    if x.dim != net.dim:
        raise DimensionMismatch(f"{x.dim}-dimensional element against a {net.dim}-net")
    if net.has_value(INF):
        raise InvalidNetValues("seminorm nets take values in Z u {-inf}")


def seminorm_eval(net: NetSpec, x: LaurentElement) -> QExp:
    """Exponent of sup_a |x(a)| q^{net(a)}, i.e. max of net(a) - v(x(a))."""
    _check(net, x)
    best: QExp = NEG_INF
    for a, c in x.terms.items():
        n = net_eval(net, a)
        if n == NEG_INF:
            continue
        e = n - val_p(c, x.prime)
        if best == NEG_INF or e > best:
            best = e
    return best


def _scaled_member(x: LaurentElement, net: NetSpec, m: int) -> bool:
    """x in p^m * Lambda."""
    return element_in_net(scalar_mul(Fraction(x.prime) ** -m, x), net)


def gauge_eval(net: NetSpec, x: LaurentElement) -> QExp:
    """Exponent of inf{|a| : x in a*Lambda}, found by searching over a = p^m.

    Membership is monotone in m, so the largest admissible m is located by
    bisection inside a range derived only from coefficient valuations and net
    values, never from their differences term by term.
    """
    _check(net, x)
    if x.is_zero():
        return NEG_INF
    vals = [val_p(c, x.prime) for c in x.terms.values()]
    levels = [net_eval(net, a) for a in x.support]
    finite = [n for n in levels if is_finite(n)]
    if not finite:
        if _scaled_member(x, net, max(vals) + 1):
            return NEG_INF
        raise GaugeInfinite("no scalar multiple of the lattice contains x")
    lo = min(vals) - max(finite)
    hi = max(vals) - min(finite)
    if not _scaled_member(x, net, lo):
        raise GaugeInfinite("no scalar multiple of the lattice contains x")
    if _scaled_member(x, net, hi + 1):
        return NEG_INF
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _scaled_member(x, net, mid):
            lo = mid
        else:
            hi = mid - 1
    return -lo


def sup_difference_argmax(n_net: NetSpec, k_net: NetSpec) -> Tuple[ExtInt, Optional[MultiIndex]]:
    """sup over Z^d of n(a) - k(a) with a point attaining it when finite.

    ``INF`` signals an unbounded difference.
    """
    if n_net.dim != k_net.dim:
        raise DimensionMismatch("nets of different dimensions")
    d = n_net.dim
    best: ExtInt = NEG_INF
    where: Optional[MultiIndex] = None
    for i, (rn, fn) in enumerate(n_net.pieces):
        for j, (rk, fk) in enumerate(k_net.pieces):
            common = rn.intersect(rk)
            if common is None:
                continue
            an, ak = as_affine(fn, d), as_affine(fk, d)
            if an is None or ak is None:
                vn = fn.value if an is None else None
                vk = fk.value if ak is None else None
                if vn is not None and vn == vk:
                    raise IndeterminateSum(f"{vn} - {vk} on pieces {i} and {j}")
                if vn == INF or vk == NEG_INF:
                    value, point = INF, None
                else:
                    value, point = NEG_INF, None
            else:
                coeffs = tuple(a - b for a, b in zip(an[0], ak[0]))
                value, point = affine_extreme(coeffs, an[1] - ak[1], common, "max")
            if value == INF:
                return INF, None
            if value != NEG_INF and (best == NEG_INF or value > best):
                best, where = value, point
    return best, where


def bounded_sup_difference(n_net: NetSpec, k_net: NetSpec, shape: Optional[FieldShape] = None) -> ExtInt:
    """sup_a n(a) - k(a) for an open-lattice net n and a bounded net k.

    Finite whenever the classifications hold; ``INF`` flags an unbounded
    difference.  With ``shape`` given, the classifications are checked first.
    """
    if shape is not None:
        if not classify_open_lattice(n_net, shape):
            raise NotClassified("n_net is not an open lattice net for this shape")
        if not classify_bounded(k_net, shape):
            raise NotClassified("k_net is not a bounded net for this shape")
    return sup_difference_argmax(n_net, k_net)[0]


def convergence_check(g: SeriesGenerator, net: NetSpec, schedule: Sequence[Sequence[int]],
                      window: Region, shape: Optional[FieldShape] = None) -> List[QExp]:
    """Seminorms ||x_W - s(a)|| of the tails along an inverse-lex increasing schedule.

    x_W is the truncation of ``g`` to ``window``.  Tails shrink as ``a`` grows,
    so the returned list is nonincreasing; once every remaining index has
    net value -inf it is constantly -inf.
    """
    schedule = [tuple(a) for a in schedule]
    for a, b in zip(schedule, schedule[1:]):
        if invlex_compare(a, b) != Order.LT:
            raise ScheduleNotMonotone(f"{list(a)} is not below {list(b)}")
    if shape is not None and not classify_open_lattice(net, shape):
        raise NotClassified("convergence is measured against open lattice nets")
    full = g.truncate(window)
    return [seminorm_eval(net, full - partial_sum(g, a, window)) for a in schedule]


def product_seminorm(components: Sequence[QExp]) -> QExp:
    """Seminorm on a product of copies of F: max of the component exponents."""
    if not components:
        raise EmptyProduct("product seminorm of no components")
    return max(components)


@dataclass(frozen=True)
class RhoNet:
    """Piecewise-constant net with positive rational or +inf values."""

    dim: int
    pieces: Tuple[Tuple[Region, object], ...]

    def __post_init__(self):
        pieces = []
        for region, value in self.pieces:
            if region.dim != self.dim:
                raise DimensionMismatch("rho region of the wrong dimension")
            if value != INF:
                value = Fraction(value)
                if value <= 0:
                    raise NonpositiveRho(f"rho must be positive, got {value}")
            pieces.append((region, value))
        object.__setattr__(self, "pieces", tuple(pieces))

    def __call__(self, a: Sequence[int]):
        for region, value in self.pieces:
            if region.contains(a):
                return value
        raise ValueError(f"no rho piece covers {tuple(a)}")


def rho_admissible(rho: RhoNet) -> bool:
    """rho is +inf on I(k, tail) for all large k, in every coordinate."""
    return all(value == INF
               for region, value in rho.pieces
               for lo, hi in region.box if hi is None)


def archimedean_seminorm(x: Union[LaurentElement, Mapping[MultiIndex, Fraction]], rho: RhoNet) -> Fraction:
    """max over the support of |x(a)| / rho(a), with c / inf = 0."""
    terms = x.terms if isinstance(x, LaurentElement) else x
    best = Fraction(0)
    for a, c in terms.items():
        if len(a) != rho.dim:
            raise DimensionMismatch("coefficient index and rho of different dimensions")
        r = rho(a)
        if r == INF:
            continue
        best = max(best, abs(Fraction(c)) / r)
    return best
