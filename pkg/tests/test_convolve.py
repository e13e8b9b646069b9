import itertools
import random

import pytest
from hypothesis import given, settings

from helpers import const_net, net1, seeds, shapes
from hlf import generators as gen
from hlf.errors import DimensionMismatch, IndeterminateSum
from hlf.foundations import INF, NEG_INF
from hlf.nets import (
    Affine,
    Region,
    breakpoint_radius,
    classify_bounded,
    convolve_at,
    min_plus_convolve,
    net_eval,
    window_box,
)

O_T = net1((None, -1, INF), (0, None, 0))


def brute_force(n1, n2, a, radius):
    best = INF
    for b in itertools.product(range(-radius, radius + 1), repeat=len(a)):
        v1 = net_eval(n1, b)
        v2 = net_eval(n2, tuple(x - y for x, y in zip(a, b)))
        if INF in (v1, v2):
            continue
        best = min(best, v1 + v2)
    return best


def test_convolution_examples():
    table = min_plus_convolve(O_T, O_T, Region(((-2, 4),)))
    assert table == {(i,): (INF if i < 0 else 0) for i in range(-2, 5)}
    assert set(min_plus_convolve(const_net(1, 0), const_net(1, 1), window_box(3, 1)).values()) == {1}
    ramp = net1((None, -1, INF), (0, None, Affine((1,), 0)))
    assert convolve_at(ramp, ramp, (3,)) == 3
    assert convolve_at(ramp, ramp, (3,)) == brute_force(ramp, ramp, (3,), 10)


def test_convolution_unbounded_below():
    down = net1((None, None, Affine((1,), 0)))
    assert convolve_at(down, const_net(1, 0), (0,)) is NEG_INF


def test_convolution_errors():
    with pytest.raises(IndeterminateSum):
        convolve_at(net1((None, -1, INF), (0, None, 0)), net1((None, 0, 0), (1, None, NEG_INF)), (0,))
    with pytest.raises(DimensionMismatch):
        convolve_at(const_net(1, 0), const_net(2, 0), (0,))


@given(seeds, shapes(max_d=2))
@settings(max_examples=120, deadline=None)
def test_convolution_matches_brute_force_on_bounded_nets(seed, shape):
    rng = random.Random(seed)
    d = shape.d
    n1 = gen.repair_bounded(gen.random_net(rng, d, [INF]), shape, rng)
    n2 = gen.repair_bounded(gen.random_net(rng, d, [INF]), shape, rng)
    radius0 = breakpoint_radius(n1) + breakpoint_radius(n2)
    for _ in range(3):
        a = gen.random_index(rng, d, 3)
        R = radius0 + max(abs(x) for x in a)
        assert convolve_at(n1, n2, a) == brute_force(n1, n2, a, R)


@given(seeds, shapes())
@settings(max_examples=80, deadline=None)
def test_convolution_of_bounded_nets_looks_bounded(seed, shape):
    rng = random.Random(seed)
    d = shape.d
    n1 = gen.repair_bounded(gen.random_net(rng, d, [INF]), shape, rng)
    n2 = gen.repair_bounded(gen.random_net(rng, d, [INF]), shape, rng)
    assert classify_bounded(n1, shape) and classify_bounded(n2, shape)
    table = min_plus_convolve(n1, n2, window_box(3, d))
    assert NEG_INF not in table.values()
    # each net is +inf below its breakpoints along a ((.)) coordinate,
    # so the convolution is +inf below the sum of those bounds
    R = breakpoint_radius(n1) + breakpoint_radius(n2)
    for l in shape.round:
        for _ in range(5):
            a = list(gen.random_index(rng, d, 3 * R + 3))
            a[l - 1] = -2 * R - 1 - rng.randint(0, 5)
            assert convolve_at(n1, n2, a) is INF
