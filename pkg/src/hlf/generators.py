"""Seeded random nets and elements for the property suites.

Nets come from a guillotine grammar: Z^d is cut into 2-5 boxes at integer
positions in [-CUT, CUT], and each box gets a constant or an affine rule
with coefficients of magnitude at most 3.  Naive nets rarely satisfy the
limit clauses of a classification, so ``repair_*`` adjusts each piece
(coefficient signs, or an infinite constant on unbounded directions) until
the target classification holds.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .elements import CoefficientRule, LaurentElement, SeriesGenerator, val_p
from .foundations import INF, NEG_INF, ExtInt, MultiIndex, is_finite
from .nets.core import (
    Affine,
    Const,
    FieldShape,
    NetSpec,
    Region,
    ValueRule,
    as_affine,
    net_eval,
    validate_partition,
)

CUT = 5
MAX_COEFF = 3
MAX_OFFSET = 5


def substream(seed: int, *labels) -> random.Random:
    """An independent generator for the labelled stream below ``seed``."""
    text = "/".join([str(seed)] + [str(x) for x in labels])
    digest = hashlib.blake2b(text.encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _cut(region: Region, c: int, t: int) -> Tuple[Region, Region]:
    box = list(region.box)
    lo, hi = box[c]
    left, right = list(box), list(box)
    left[c] = (lo, t - 1)
    right[c] = (t, hi)
    return Region(tuple(left)), Region(tuple(right))


def random_partition(rng: random.Random, dim: int, anchor: Sequence[int] = (),
                     side: str = "upper") -> List[Region]:
    """Guillotine cuts of Z^d into 2-5 boxes.

    ``anchor`` lists 1-based coordinates along which one piece is made
    bounded above (``side='upper'``) or below (``'lower'``) before the
    random cuts, so that repairs have a piece that can stay finite.
    """
    regions = [Region.full(dim)]
    for l in anchor:
        keep = regions.pop()
        left, right = _cut(keep, l - 1, rng.randint(-CUT, CUT))
        regions += [right, left] if side == "upper" else [left, right]
    target = max(rng.randint(2, 5), len(regions))
    for _ in range(40):
        if len(regions) >= target:
            break
        i = rng.randrange(len(regions))
        c = rng.randrange(dim)
        lo, hi = regions[i].box[c]
        first = -CUT if lo is None else max(-CUT, lo + 1)
        last = CUT if hi is None else min(CUT, hi)
        if first > last:
            continue
        regions[i:i + 1] = list(_cut(regions[i], c, rng.randint(first, last)))
    return regions


def random_rule(rng: random.Random, dim: int, infinities: Sequence[ExtInt] = ()) -> ValueRule:
    u = rng.random()
    if u < 0.3:
        return Const(rng.randint(-MAX_OFFSET, MAX_OFFSET))
    if u < 0.5 and infinities:
        return Const(rng.choice(list(infinities)))
    coeffs = tuple(rng.randint(-MAX_COEFF, MAX_COEFF) for _ in range(dim))
    return Affine(coeffs, rng.randint(-MAX_OFFSET, MAX_OFFSET))


def random_net(rng: random.Random, dim: int, infinities: Sequence[ExtInt] = (),
               anchor: Sequence[int] = (), side: str = "upper") -> NetSpec:
    regions = random_partition(rng, dim, anchor, side)
    return NetSpec(dim, tuple((r, random_rule(rng, dim, infinities)) for r in regions))


def _rebuild(coeffs: Sequence[int], offset: int) -> ValueRule:
    if any(coeffs):
        return Affine(tuple(coeffs), offset)
    return Const(offset)


def _nonzero(c: int, rng: random.Random) -> int:
    return abs(c) if c else rng.randint(1, MAX_COEFF)


def _repair_lattice_piece(region: Region, rule: ValueRule, shape: FieldShape,
                          rng: random.Random) -> ValueRule:
    if isinstance(rule, Const) and rule.value == NEG_INF:
        return rule
    if any(region.box[l - 1][1] is None for l in shape.round):
        return Const(NEG_INF)
    f = as_affine(rule, shape.d)
    if f is None:   # +inf is not allowed
        f = ((0,) * shape.d, rng.randint(-MAX_OFFSET, MAX_OFFSET))
    coeffs, offset = list(f[0]), f[1]
    for m in shape.curly:
        lo, hi = region.box[m - 1]
        if hi is None and lo is None:
            return Const(NEG_INF)
        if hi is None:
            coeffs[m - 1] = -_nonzero(coeffs[m - 1], rng)
        elif lo is None:
            coeffs[m - 1] = abs(coeffs[m - 1])
    return _rebuild(coeffs, offset)


def _repair_bounded_piece(region: Region, rule: ValueRule, shape: FieldShape,
                          rng: random.Random, strict: bool) -> ValueRule:
    if isinstance(rule, Const) and rule.value == INF:
        return rule
    if any(region.box[l - 1][0] is None for l in shape.round):
        return Const(INF)
    f = as_affine(rule, shape.d)
    if f is None:   # -inf is not allowed
        f = ((0,) * shape.d, rng.randint(-MAX_OFFSET, MAX_OFFSET))
    coeffs, offset = list(f[0]), f[1]
    for m in shape.curly:
        lo, hi = region.box[m - 1]
        if lo is None and hi is None:
            if strict:
                return Const(INF)
            coeffs[m - 1] = 0
        elif lo is None:
            coeffs[m - 1] = -_nonzero(coeffs[m - 1], rng) if strict else -abs(coeffs[m - 1])
        elif hi is None:
            coeffs[m - 1] = abs(coeffs[m - 1])
    return _rebuild(coeffs, offset)


def repair_open_lattice(net: NetSpec, shape: FieldShape, rng: random.Random) -> NetSpec:
    return NetSpec(net.dim, tuple((r, _repair_lattice_piece(r, f, shape, rng)) for r, f in net.pieces))


def repair_bounded(net: NetSpec, shape: FieldShape, rng: random.Random) -> NetSpec:
    return NetSpec(net.dim, tuple((r, _repair_bounded_piece(r, f, shape, rng, False))
                                  for r, f in net.pieces))


def repair_compactoid(net: NetSpec, shape: FieldShape, rng: random.Random) -> NetSpec:
    return NetSpec(net.dim, tuple((r, _repair_bounded_piece(r, f, shape, rng, True))
                                  for r, f in net.pieces))


class NetSource:
    """Draws valid nets and counts the ones rejected by validate_partition."""

    def __init__(self):
        self.drawn = 0
        self.rejected = 0

    def draw(self, rng: random.Random, dim: int, infinities: Sequence[ExtInt] = (),
             anchor: Sequence[int] = (), side: str = "upper") -> NetSpec:
        while True:
            net = random_net(rng, dim, infinities, anchor, side)
            self.drawn += 1
            if not validate_partition(net):
                return net
            self.rejected += 1


def random_unit(rng: random.Random, p: int) -> Fraction:
    """A nonzero rational of valuation 0."""
    def part():
        while True:
            k = rng.randint(1, 30)
            if k % p:
                return k
    return Fraction(rng.choice((1, -1)) * part(), part())


def random_coefficient(rng: random.Random, p: int, vmin: int = -4, vmax: int = 4) -> Fraction:
    return random_unit(rng, p) * Fraction(p) ** rng.randint(vmin, vmax)


def random_index(rng: random.Random, dim: int, radius: int) -> MultiIndex:
    return tuple(rng.randint(-radius, radius) for _ in range(dim))


def random_element(rng: random.Random, dim: int, prime: int, radius: int = 6,
                   max_terms: int = 6) -> LaurentElement:
    n = rng.randint(0, max_terms)
    return LaurentElement(dim, prime, [(random_index(rng, dim, radius), random_coefficient(rng, prime))
                                       for _ in range(n)])


def random_element_in(rng: random.Random, net: NetSpec, prime: int, radius: int = 6,
                      max_terms: int = 6) -> LaurentElement:
    """A random element of the module described by ``net`` (support in the window)."""
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        a = random_index(rng, net.dim, radius)
        k = net_eval(net, a)
        if k == INF:
            continue
        base = rng.randint(-4, 4) if k == NEG_INF else k
        c = random_unit(rng, prime) * Fraction(prime) ** (base + rng.randint(0, 3))
        terms.append((a, c))
    x = LaurentElement(net.dim, prime, terms)
    # cancellation can only raise valuations, so x stays inside the module
    assert all(val_p(c, prime) >= net_eval(net, a) for a, c in x.terms.items())
    return x


def random_element_on_finite(rng: random.Random, net: NetSpec, prime: int, radius: int = 6,
                             max_terms: int = 6, reflect: bool = False) -> LaurentElement:
    """A random element whose support sits where ``net`` is finite.

    With ``reflect`` the support sits at -a for such a.  Coefficient
    valuations are arbitrary, so membership in the module is not implied.
    """
    terms = []
    for _ in range(8 * max_terms):
        if len(terms) >= max_terms:
            break
        a = random_index(rng, net.dim, radius)
        if is_finite(net_eval(net, a)):
            terms.append((tuple(-i for i in a) if reflect else a, random_coefficient(rng, prime)))
    return LaurentElement(net.dim, prime, terms[:rng.randint(1, max_terms)])


def random_generator(rng: random.Random, dim: int, prime: int, window: Region,
                     pieces: int = 3) -> SeriesGenerator:
    """Coefficients scale * p^(affine) on a few disjoint boxes inside ``window``."""
    chosen: List[Tuple[Region, CoefficientRule]] = []
    for _ in range(pieces * 4):
        if len(chosen) >= pieces:
            break
        box = []
        for lo, hi in window.box:
            a, b = sorted((rng.randint(lo, hi), rng.randint(lo, hi)))
            box.append((a, b))
        region = Region(tuple(box))
        if any(region.intersect(r) is not None for r, _ in chosen):
            continue
        exponent = Affine(tuple(rng.randint(-2, 2) for _ in range(dim)), rng.randint(-3, 3))
        chosen.append((region, CoefficientRule(random_unit(rng, prime), exponent)))
    return SeriesGenerator(dim, prime, tuple(chosen))


def invlex_sorted(points: Iterable[MultiIndex]) -> List[MultiIndex]:
    return sorted(set(points), key=lambda a: tuple(reversed(a)))


def random_schedule(rng: random.Random, window: Region, length: int,
                    must: Sequence[MultiIndex] = ()) -> List[MultiIndex]:
    pts = [tuple(rng.randint(lo, hi) for lo, hi in window.box) for _ in range(length)]
    return invlex_sorted(list(pts) + list(must))


def lattice_threshold(net: NetSpec, shape: FieldShape) -> Optional[int]:
    """Least k0 with net = -inf whenever the last coordinate is >= k0.

    Only meaningful when the last coordinate is a ((.)) parameter; returns
    ``None`` otherwise.
    """
    if shape.r >= shape.d:
        return None
    k0 = None
    for region, rule in net.pieces:
        if isinstance(rule, Const) and rule.value == NEG_INF:
            continue
        hi = region.box[-1][1]
        if hi is None:
            return None
        k0 = hi + 1 if k0 is None else max(k0, hi + 1)
    return k0 if k0 is not None else -CUT - 1
