"""Symbolic classification of nets: open lattices, bounded and compactoid nets.

Every condition quantifies over tails (i_{l+1}, ..., i_d) and asks about
behaviour as one coordinate runs off to infinity.  For a box presentation a
violation for *some* tail exists iff a single piece exhibits it, since each
piece's projection onto coordinates l+1..d is a nonempty set of tails on
which the piece looks the same.  So each check is a scan over the pieces
looking at which box sides are unbounded and at the signs of the affine
coefficients along them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from ..errors import DimensionMismatch, InvalidNetValues
from ..foundations import INF, NEG_INF, MultiIndex
from .core import Affine, Const, FieldShape, NetSpec, Region, ValueRule

KINDS = ("lattice", "bounded", "compactoid")


@dataclass(frozen=True)
class Witness:
    """Certificate for a violated condition.

    Starting at ``point`` (inside the region of piece ``piece``) and moving
    along the unit vector ``direction`` never leaves that region, and the net
    behaves along this ray as ``reason`` describes.  ``tail`` holds the fixed
    coordinates l+1..d of the slice concerned.
    """

    condition: str
    coordinate: int
    piece: int
    region: Region
    direction: MultiIndex
    tail: MultiIndex
    point: MultiIndex
    reason: str


@dataclass(frozen=True)
class Verdict:
    kind: str
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds


def _unit(dim: int, m: int, sign: int) -> MultiIndex:
    return tuple(sign if k == m - 1 else 0 for k in range(dim))


def _witness(condition, l, i, region, direction, reason) -> Witness:
    point = region.representative()
    return Witness(condition, l, i, region, direction, point[l:], point, reason)


def _escape(rule: ValueRule, region: Region, coords: Iterable[int],
            sense: str) -> Optional[Tuple[int, int]]:
    """First coordinate m (and sign) along which the rule is unbounded.

    ``sense='max'`` looks for growth to +inf, ``'min'`` for decay to -inf.
    """
    if not isinstance(rule, Affine):
        return None
    for m in coords:
        c = rule.coeffs[m - 1]
        if sense == "min":
            c = -c
        lo, hi = region.box[m - 1]
        if c > 0 and hi is None:
            return m, 1
        if c < 0 and lo is None:
            return m, -1
    return None


def _check_shape(net: NetSpec, shape: FieldShape) -> None:
    if net.dim != shape.d:
        raise DimensionMismatch(f"{net.dim}-net paired with a field of dimension n={shape.n}")


def classify_open_lattice(net: NetSpec, shape: FieldShape) -> Verdict:
    _check_shape(net, shape)
    if net.has_value(INF):
        raise InvalidNetValues("open lattice nets take values in Z u {-inf}")
    d = net.dim
    for l in shape.round:
        for i, (region, rule) in enumerate(net.pieces):
            if region.box[l - 1][1] is None and rule != Const(NEG_INF):
                return Verdict("lattice", False, _witness(
                    "lattice.i", l, i, region, _unit(d, l, 1),
                    f"net is not -inf on I(k, tail) for arbitrarily large k in coordinate {l}"))
    for l in shape.curly:
        for i, (region, rule) in enumerate(net.pieces):
            esc = _escape(rule, region, range(1, l + 1), "max")
            if esc is not None:
                m, sign = esc
                return Verdict("lattice", False, _witness(
                    "lattice.ii.bound", l, i, region, _unit(d, m, sign),
                    f"net is unbounded above on I(tail) along coordinate {m}"))
        for i, (region, rule) in enumerate(net.pieces):
            if region.box[l - 1][1] is not None or rule == Const(NEG_INF):
                continue
            if isinstance(rule, Const):
                bad = True
            else:
                bad = rule.coeffs[l - 1] >= 0 or _escape(rule, region, range(1, l), "max")
            if bad:
                return Verdict("lattice", False, _witness(
                    "lattice.ii.limit", l, i, region, _unit(d, l, 1),
                    f"sup over I(k, tail) does not tend to -inf as k -> +inf in coordinate {l}"))
    return Verdict("lattice", True)


def classify_bounded(net: NetSpec, shape: FieldShape) -> Verdict:
    _check_shape(net, shape)
    if net.has_value(NEG_INF):
        raise InvalidNetValues("bounded nets take values in Z u {+inf}")
    d = net.dim
    for l in shape.round:
        for i, (region, rule) in enumerate(net.pieces):
            if region.box[l - 1][0] is None and rule != Const(INF):
                return Verdict("bounded", False, _witness(
                    "bounded.i", l, i, region, _unit(d, l, -1),
                    f"net is not +inf on I(j, tail) for arbitrarily small j in coordinate {l}"))
    for l in shape.curly:
        for i, (region, rule) in enumerate(net.pieces):
            esc = _escape(rule, region, range(1, l + 1), "min")
            if esc is not None:
                m, sign = esc
                return Verdict("bounded", False, _witness(
                    "bounded.ii", l, i, region, _unit(d, m, sign),
                    f"net is unbounded below on I(tail) along coordinate {m}"))
    return Verdict("bounded", True)


def classify_compactoid(net: NetSpec, shape: FieldShape) -> Verdict:
    bounded = classify_bounded(net, shape)
    if not bounded:
        return Verdict("compactoid", False, bounded.witness)
    d = net.dim
    for l in shape.curly:
        for i, (region, rule) in enumerate(net.pieces):
            if region.box[l - 1][0] is not None or rule == Const(INF):
                continue
            if isinstance(rule, Const):
                bad = True
            else:
                bad = rule.coeffs[l - 1] >= 0 or _escape(rule, region, range(1, l), "min")
            if bad:
                return Verdict("compactoid", False, _witness(
                    "compactoid.ii.limit", l, i, region, _unit(d, l, -1),
                    f"inf over I(j, tail) does not tend to +inf as j -> -inf in coordinate {l}"))
    return Verdict("compactoid", True)


def classify(net: NetSpec, shape: FieldShape, kind: str) -> Verdict:
    try:
        fn = {"lattice": classify_open_lattice, "bounded": classify_bounded,
              "compactoid": classify_compactoid}[kind]
    except KeyError:
        raise ValueError(f"unknown classification {kind!r}; expected one of {KINDS}") from None
    return fn(net, shape)
