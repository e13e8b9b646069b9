"""Brute-force window oracle for the classifiers.

The oracle looks at values of the net on [-W, W]^d plus one number read off
the presentation, the breakpoint radius R (no box side lies strictly
beyond it).  Past R the covering piece no longer changes along a coordinate,
so two adjacent window values out there fix the slope of the whole ray.
That makes the following clauses refutable once W is large enough:

* "eventually -inf" / "eventually +inf" along a ((.)) coordinate: one finite
  value on the far face (needs W >= R + 1);
* "bounded above" / "bounded below" along a {{.}} coordinate: a strict
  increase (decrease) between the last two layers (needs W >= R + 2).

Limit clauses (sup -> -inf, inf -> +inf) are never decided here.  Any clause
left unprobed sets ``insufficient`` on the report.  A counterexample is
always a genuine proof that the condition fails; corroboration proves
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..foundations import INF, NEG_INF, MultiIndex
from .classify import KINDS, Witness
from .core import Const, FieldShape, NetSpec, Region, breakpoint_radius, net_eval, tabulate, window_box


@dataclass(frozen=True)
class Counterexample:
    condition: str
    coordinate: int
    point: MultiIndex
    detail: str


@dataclass(frozen=True)
class WindowReport:
    kind: str
    radius: int
    status: str
    insufficient: bool
    counterexample: Optional[Counterexample] = None
    unprobed: Tuple[str, ...] = field(default=())

    @property
    def corroborated(self) -> bool:
        return self.status == "corroborated"


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(i) for i in hits[0]) if len(hits) else None


def _slab(W: int, d: int, axis: int, lo: int, hi: int) -> Region:
    box = [(-W, W)] * d
    box[axis] = (lo, hi)
    return Region(tuple(box))


def _point(slab: Region, idx) -> MultiIndex:
    return tuple(lo + i for (lo, _), i in zip(slab.box, idx))


def window_corroborate(net: NetSpec, shape: FieldShape, which: str, radius: int) -> WindowReport:
    """Test the window-checkable fragment of a classification on [-W, W]^d."""
    if radius < 1:
        raise ValueError("window radius must be at least 1")
    if which not in KINDS:
        raise ValueError(f"unknown classification {which!r}")
    W, d = radius, net.dim
    window = window_box(W, d)
    R = breakpoint_radius(net)
    prefix = "lattice" if which == "lattice" else "bounded"
    unprobed = []

    def found(condition, l, point, detail):
        return WindowReport(which, W, "counterexample", bool(unprobed),
                            Counterexample(condition, l, point, detail), tuple(unprobed))

    # Exhaustive over the window: a forbidden constant piece meeting it.
    forbidden = INF if which == "lattice" else NEG_INF
    for region, rule in net.pieces:
        if isinstance(rule, Const) and rule.value == forbidden:
            common = region.intersect(window)
            if common is not None:
                return found("domain", 0, common.representative(),
                             "net takes a forbidden infinite value")

    for l in shape.round:
        if W < R + 1:
            unprobed.append(f"{prefix}.i@{l}")
            continue
        face = W if which == "lattice" else -W
        slab = _slab(W, d, l - 1, face, face)
        values = tabulate(net, slab)
        bad = ~np.isneginf(values) if which == "lattice" else ~np.isposinf(values)
        hit = _first(bad)
        if hit is not None:
            trend = "increasing" if which == "lattice" else "decreasing"
            return found(f"{prefix}.i", l, _point(slab, hit),
                         f"finite value past every breakpoint in the {trend} direction")

    for m in shape.curly:
        if W < R + 2:
            unprobed.append(f"{prefix}.ii@{m}")
            continue
        axis = m - 1
        for outer, inner in ((W, W - 1), (-W, -W + 1)):
            slab = _slab(W, d, axis, outer, outer)
            a = tabulate(net, slab)
            b = tabulate(net, _slab(W, d, axis, inner, inner))
            finite = np.isfinite(a) & np.isfinite(b)
            bad = finite & ((a > b) if which == "lattice" else (a < b))
            hit = _first(bad)
            if hit is not None:
                cond = "lattice.ii.bound" if which == "lattice" else "bounded.ii"
                trend = "increases" if which == "lattice" else "decreases"
                return found(cond, m, _point(slab, hit),
                             f"net strictly {trend} outward past every breakpoint")

    if which in ("lattice", "compactoid") and shape.r > 0:
        unprobed.append("limit clauses are not window-decidable")
    return WindowReport(which, W, "corroborated", bool(unprobed), None, tuple(unprobed))


def replay_witness(net: NetSpec, witness: Witness, steps: int = 25) -> bool:
    """Walk ``steps`` points along a classifier witness and confirm its claim."""
    values = []
    for s in range(steps + 1):
        a = tuple(p + s * e for p, e in zip(witness.point, witness.direction))
        if not witness.region.contains(a):
            return False
        values.append(net_eval(net, a))
    cond = witness.condition
    if cond == "lattice.i":
        return all(v != NEG_INF for v in values)
    if cond == "bounded.i":
        return all(v != INF for v in values)
    pairs = list(zip(values, values[1:]))
    if cond == "lattice.ii.bound":
        return all(b > a for a, b in pairs)
    if cond == "bounded.ii":
        return all(b < a for a, b in pairs)
    if cond == "lattice.ii.limit":
        return all(v != NEG_INF for v in values) and all(b >= a for a, b in pairs)
    if cond == "compactoid.ii.limit":
        return all(v != INF for v in values) and all(b <= a for a, b in pairs)
    raise ValueError(f"unknown witness condition {cond!r}")

