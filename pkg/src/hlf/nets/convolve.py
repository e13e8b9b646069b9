"""Min-plus convolution of two nets, evaluated on a finite window.

The value at a is inf over b of net1(b) + net2(a - b), the infimum taken over
all of Z^d.  No enclosing box is needed: for each pair of pieces the set of b
with b in region1 and a - b in region2 is a box, the sum is affine in b on
it, and the infimum of an affine map over a box is read off the coefficient
signs.  The result is exact, including -inf when the sum is unbounded below.

A brute-force reference has to enumerate b over a finite box instead.  For
two nets that pass ``classify_bounded`` the cube of radius R1 + R2 + |a|_inf
around the origin suffices (R1, R2 being the breakpoint radii): every
pairwise minimum above is attained at a box vertex assembled from finite
bounds of region1 (at most R1) and of a - region2 (at most |a| + R2), or at
the point closest to the origin along coordinates where the sum is flat.
"""

from __future__ import annotations

from typing import Dict, Sequence

from ..errors import DimensionMismatch, IndeterminateSum
from ..foundations import INF, NEG_INF, ExtInt, MultiIndex
from .core import NetSpec, Region, affine_extreme, as_affine, window_points


def convolve_at(net1: NetSpec, net2: NetSpec, a: Sequence[int]) -> ExtInt:
    if net1.dim != net2.dim or len(a) != net1.dim:
        raise DimensionMismatch("convolution needs nets and index of one dimension")
    d = net1.dim
    best: ExtInt = INF
    for region1, rule1 in net1.pieces:
        f1 = as_affine(rule1, d)
        for region2, rule2 in net2.pieces:
            common = region1.intersect(region2.translate_reflect(a))
            if common is None:
                continue
            f2 = as_affine(rule2, d)
            if f1 is None or f2 is None:
                inf1 = None if f1 is not None else rule1.value
                inf2 = None if f2 is not None else rule2.value
                if {inf1, inf2} == {INF, NEG_INF}:
                    raise IndeterminateSum(f"+inf meets -inf at decompositions of {tuple(a)}")
                value = NEG_INF if NEG_INF in (inf1, inf2) else INF
            else:
                (c1, b1), (c2, b2) = f1, f2
                # net2(a - b) = c2.a - c2.b + b2
                coeffs = tuple(x - y for x, y in zip(c1, c2))
                offset = b1 + b2 + sum(c * x for c, x in zip(c2, a))
                value, _ = affine_extreme(coeffs, offset, common, "min")
            if value < best:
                best = value
                if best == NEG_INF:
                    return best
    return best


def min_plus_convolve(net1: NetSpec, net2: NetSpec, window: Region) -> Dict[MultiIndex, ExtInt]:
    """Table of the min-plus convolution over every point of a finite box."""
    if net1.dim != net2.dim or window.dim != net1.dim:
        raise DimensionMismatch("convolution needs nets and window of one dimension")
    return {a: convolve_at(net1, net2, a) for a in window_points(window)}
