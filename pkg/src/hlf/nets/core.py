"""Piecewise-affine nets on product boxes.

A net is a map Z^d -> Z u {+-inf}.  We present it by finitely many pieces
``(Region, rule)`` whose regions tile Z^d.  A rule is either a constant
extended integer or an integer affine function ``dot(coeffs, a) + offset``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import DimensionMismatch, InvalidPartition
from ..foundations import INF, NEG_INF, ExtInt, MultiIndex, extint_sub, is_finite

Bound = Optional[int]
Interval = Tuple[Bound, Bound]

# float64 represents integers exactly below 2**53; tabulation refuses larger values.
_EXACT_FLOAT_LIMIT = 2 ** 52


def _lo_le(a: Bound, b: Bound) -> bool:
    """a <= b for lower bounds, None meaning -inf."""
    return a is None or (b is not None and a <= b)


def _closest_to_zero(lo: Bound, hi: Bound) -> int:
    if lo is not None and lo > 0:
        return lo
    if hi is not None and hi < 0:
        return hi
    return 0


@dataclass(frozen=True)
class Region:
    """A nonempty product box; ``None`` bounds are infinite."""

    box: Tuple[Interval, ...]

    def __post_init__(self):
        box = tuple((lo, hi) for lo, hi in self.box)
        for lo, hi in box:
            if lo is not None and hi is not None and lo > hi:
                raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "box", box)

    @classmethod
    def full(cls, dim: int) -> "Region":
        return cls(((None, None),) * dim)

    @property
    def dim(self) -> int:
        return len(self.box)

    def contains(self, a: Sequence[int]) -> bool:
        for x, (lo, hi) in zip(a, self.box):
            if (lo is not None and x < lo) or (hi is not None and x > hi):
                return False
        return True

    def intersect(self, other: "Region") -> Optional["Region"]:
        out = []
        for (lo1, hi1), (lo2, hi2) in zip(self.box, other.box):
            lo = lo2 if lo1 is None else lo1 if lo2 is None else max(lo1, lo2)
            hi = hi2 if hi1 is None else hi1 if hi2 is None else min(hi1, hi2)
            if lo is not None and hi is not None and lo > hi:
                return None
            out.append((lo, hi))
        return Region(tuple(out))

    def reflect(self) -> "Region":
        return Region(tuple((None if hi is None else -hi, None if lo is None else -lo)
                            for lo, hi in self.box))

    def translate_reflect(self, a: Sequence[int]) -> "Region":
        """The box {a - b : b in self}."""
        return Region(tuple((None if hi is None else x - hi, None if lo is None else x - lo)
                            for x, (lo, hi) in zip(a, self.box)))

    def representative(self) -> MultiIndex:
        """The point of the box closest to the origin, coordinatewise."""
        return tuple(_closest_to_zero(lo, hi) for lo, hi in self.box)

    def finite_bounds(self) -> Iterator[int]:
        for lo, hi in self.box:
            if lo is not None:
                yield lo
            if hi is not None:
                yield hi


@dataclass(frozen=True)
class Const:
    value: ExtInt

    def evaluate(self, a: Sequence[int]) -> ExtInt:
        return self.value

    def polar(self) -> "Const":
        return Const(extint_sub(1, self.value))

    def reflect(self) -> "Const":
        return Const(-self.value)

    @property
    def finite(self) -> bool:
        return is_finite(self.value)


@dataclass(frozen=True)
class Affine:
    coeffs: Tuple[int, ...]
    offset: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "offset", int(self.offset))

    def evaluate(self, a: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, a)) + self.offset

    # 1 - (c.(-a) + b) = c.a + (1 - b)
    def polar(self) -> "Affine":
        return Affine(self.coeffs, 1 - self.offset)

    # -(c.(-a) + b) = c.a - b
    def reflect(self) -> "Affine":
        return Affine(self.coeffs, -self.offset)

    finite = True


ValueRule = Union[Const, Affine]


def as_affine(rule: ValueRule, dim: int) -> Optional[Tuple[Tuple[int, ...], int]]:
    """(coeffs, offset) for finite rules, ``None`` for infinite constants."""
    if isinstance(rule, Affine):
        return rule.coeffs, rule.offset
    if rule.finite:
        return (0,) * dim, rule.value
    return None


def affine_extreme(coeffs: Sequence[int], offset: int, region: Region,
                   sense: str) -> Tuple[ExtInt, Optional[MultiIndex]]:
    """Exact inf (``sense='min'``) or sup (``'max'``) of an affine map on a box.

    Returns the value and a point attaining it, or an infinity and ``None``.
    """
    sign = 1 if sense == "min" else -1
    total = offset
    point = []
    for c, (lo, hi) in zip(coeffs, region.box):
        s = sign * c
        if s > 0:
            if lo is None:
                return (NEG_INF if sign > 0 else INF), None
            x = lo
        elif s < 0:
            if hi is None:
                return (NEG_INF if sign > 0 else INF), None
            x = hi
        else:
            x = _closest_to_zero(lo, hi)
        total += c * x
        point.append(x)
    return total, tuple(point)


@dataclass(frozen=True)
class FieldShape:
    """F = K{{t_1}}...{{t_r}}((t_{r+1}))...((t_{n-1})); nets live on Z^(n-1)."""

    n: int
    r: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("field dimension n must be at least 2")
        if not 0 <= self.r <= self.n - 1:
            raise ValueError(f"need 0 <= r <= n-1, got r={self.r}, n={self.n}")

    @property
    def d(self) -> int:
        return self.n - 1

    @property
    def curly(self) -> range:
        """1-based coordinates of the {{.}} parameters."""
        return range(1, self.r + 1)

    @property
    def round(self) -> range:
        """1-based coordinates of the ((.)) parameters."""
        return range(self.r + 1, self.n)


Piece = Tuple[Region, ValueRule]


@dataclass(frozen=True)
class NetSpec:
    dim: int
    pieces: Tuple[Piece, ...]

    def __post_init__(self):
        pieces = tuple((region, rule) for region, rule in self.pieces)
        if self.dim < 1:
            raise ValueError("net dimension must be at least 1")
        for region, rule in pieces:
            if region.dim != self.dim:
                raise DimensionMismatch(f"region of dimension {region.dim} in a {self.dim}-net")
            if isinstance(rule, Affine) and len(rule.coeffs) != self.dim:
                raise DimensionMismatch(f"affine rule with {len(rule.coeffs)} coefficients")
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def constant(cls, dim: int, value: ExtInt) -> "NetSpec":
        return cls(dim, ((Region.full(dim), Const(value)),))

    def infinities(self) -> set:
        """Infinite constants occurring in the presentation."""
        return {rule.value for _, rule in self.pieces
                if isinstance(rule, Const) and not rule.finite}

    def has_value(self, v: ExtInt) -> bool:
        return any(isinstance(rule, Const) and rule.value == v for _, rule in self.pieces)

    def locate(self, a: Sequence[int]) -> int:
        for i, (region, _) in enumerate(self.pieces):
            if region.contains(a):
                return i
        raise InvalidPartition(f"no piece covers {tuple(a)}")

    def __call__(self, a: Sequence[int]) -> ExtInt:
        return net_eval(self, a)


@dataclass(frozen=True)
class Defect:
    kind: str  # "gap" or "overlap"
    point: MultiIndex
    pieces: Tuple[int, ...] = ()

    def __str__(self):
        return f"{self.kind} at {list(self.point)}"


def _elementary_intervals(boxes: Sequence[Tuple[int, Region]], c: int) -> List[Interval]:
    cuts = set()
    for _, region in boxes:
        lo, hi = region.box[c]
        if lo is not None:
            cuts.add(lo)
        if hi is not None:
            cuts.add(hi + 1)
    cuts = sorted(cuts)
    if not cuts:
        return [(None, None)]
    out = [(None, cuts[0] - 1)]
    out += [(a, b - 1) for a, b in zip(cuts, cuts[1:])]
    out.append((cuts[-1], None))
    return out


def _gaps(boxes, c, dim, prefix, found):
    for lo, hi in _elementary_intervals(boxes, c):
        active = [(i, region) for i, region in boxes
                  if _lo_le(region.box[c][0], lo)
                  and (region.box[c][1] is None or (hi is not None and hi <= region.box[c][1]))]
        point = prefix + (_closest_to_zero(lo, hi),)
        if not active:
            rest = (0,) * (dim - c - 1)
            found.append(Defect("gap", point + rest))
        elif c + 1 < dim:
            _gaps(active, c + 1, dim, point, found)


def validate_partition(net: NetSpec) -> List[Defect]:
    """Defects preventing the pieces from tiling Z^d; empty when valid.

    Overlaps are found pairwise.  Gaps are found by sweeping coordinates one at
    a time over the elementary intervals cut out by the box bounds.
    """
    defects: List[Defect] = []
    regions = [region for region, _ in net.pieces]
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            common = regions[i].intersect(regions[j])
            if common is not None:
                defects.append(Defect("overlap", common.representative(), (i, j)))
    _gaps(list(enumerate(regions)), 0, net.dim, (), defects)
    return defects


def require_valid(net: NetSpec) -> NetSpec:
    defects = validate_partition(net)
    if defects:
        raise InvalidPartition("; ".join(str(d) for d in defects[:5]))
    return net


def net_eval(net: NetSpec, a: Sequence[int]) -> ExtInt:
    if len(a) != net.dim:
        raise DimensionMismatch(f"index of length {len(a)} for a {net.dim}-net")
    _, rule = net.pieces[net.locate(a)]
    return rule.evaluate(a)


def polar_transform(net: NetSpec) -> NetSpec:
    """The net a -> 1 - net(-a)."""
    return NetSpec(net.dim, tuple((region.reflect(), rule.polar()) for region, rule in net.pieces))


def reflection_net(net: NetSpec) -> NetSpec:
    """The net a -> -net(-a)."""
    return NetSpec(net.dim, tuple((region.reflect(), rule.reflect()) for region, rule in net.pieces))


def breakpoint_radius(net: NetSpec) -> int:
    """Largest absolute finite box bound; 0 for a single full piece.

    Outside [-R, R] in a coordinate, moving along that coordinate never
    changes the covering piece.
    """
    return max((abs(b) for region, _ in net.pieces for b in region.finite_bounds()), default=0)


def window_box(radius: int, dim: int) -> Region:
    return Region(((-radius, radius),) * dim)


def window_points(window: Region) -> Iterator[MultiIndex]:
    """All lattice points of a finite box in inverse-lex order."""
    for lo, hi in window.box:
        if lo is None or hi is None:
            raise ValueError("window must be a finite box")
    ranges = [range(lo, hi + 1) for lo, hi in window.box]
    # last coordinate outermost, so the output is inverse-lex sorted
    for rev in itertools.product(*reversed(ranges)):
        yield rev[::-1]


def tabulate(net: NetSpec, window: Region) -> np.ndarray:
    """Values of ``net`` on a finite box as a float64 array (+-inf kept).

    Axis k indexes coordinate k+1 offset by the window's lower bound.
    """
    for lo, hi in window.box:
        if lo is None or hi is None:
            raise ValueError("window must be a finite box")
    shape = tuple(hi - lo + 1 for lo, hi in window.box)
    table = np.full(shape, np.nan)
    for region, rule in net.pieces:
        part = region.intersect(window)
        if part is None:
            continue
        idx = tuple(slice(lo - wlo, hi - wlo + 1)
                    for (lo, hi), (wlo, _) in zip(part.box, window.box))
        if isinstance(rule, Const):
            table[idx] = float(rule.value) if not rule.finite else _exact(rule.value)
            continue
        bound = abs(rule.offset) + sum(abs(c) * max(abs(lo), abs(hi))
                                       for c, (lo, hi) in zip(rule.coeffs, part.box))
        _exact(bound)
        grids = np.ix_(*[np.arange(lo, hi + 1, dtype=np.float64) for lo, hi in part.box])
        vals = np.full(tuple(hi - lo + 1 for lo, hi in part.box), float(rule.offset))
        for c, g in zip(rule.coeffs, grids):
            if c:
                vals = vals + c * g
        table[idx] = vals
    if np.isnan(table).any():
        raise InvalidPartition("window contains points not covered by any piece")
    return table


def _exact(v: int) -> float:
    if abs(v) >= _EXACT_FLOAT_LIMIT:
        raise OverflowError(f"value {v} is too large for exact tabulation")
    return float(v)
