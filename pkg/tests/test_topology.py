import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import const_net, net1, seeds, shapes
from hlf import generators as gen
from hlf.elements import CoefficientRule, LaurentElement, SeriesGenerator, element_in_net, val_p
from hlf.errors import (
    DimensionMismatch,
    EmptyProduct,
    IndeterminateSum,
    InvalidNetValues,
    NonpositiveRho,
    NotClassified,
    ScheduleNotMonotone,
)
from hlf.foundations import INF, NEG_INF
from hlf.nets import Affine, FieldShape, Region, net_eval
from hlf.topology import (
    RhoNet,
    archimedean_seminorm,
    bounded_sup_difference,
    convergence_check,
    format_qexp,
    gauge_eval,
    product_seminorm,
    qexp_from_json,
    qexp_to_json,
    rho_admissible,
    seminorm_eval,
    sup_difference_argmax,
)

p = 3


def E(terms, dim=1, prime=p):
    return LaurentElement(dim, prime, terms)


TWO_POINT = net1((None, 1, NEG_INF), (2, 2, 1), (3, 4, NEG_INF), (5, 5, 0), (6, None, NEG_INF))


def test_seminorm_examples():
    x = E({(2,): 1, (5,): p ** 3})
    assert seminorm_eval(TWO_POINT, x) == 1
    assert seminorm_eval(TWO_POINT, E({})) is NEG_INF
    assert seminorm_eval(const_net(1, NEG_INF), E({(0,): 1})) is NEG_INF
    with pytest.raises(InvalidNetValues):
        seminorm_eval(net1((None, -1, INF), (0, None, 0)), x)
    with pytest.raises(DimensionMismatch):
        seminorm_eval(const_net(2, 0), x)


def gauge_by_scan(net, x, span=40):
    """inf |p^m| over m with x in p^m * Lambda, scanning m directly."""
    ok = [m for m in range(-span, span + 1)
          if all(val_p(c, p) - m >= net_eval(net, a) for a, c in x.terms.items())]
    if not ok:
        return None
    return NEG_INF if max(ok) == span else -max(ok)


def test_gauge_examples():
    zero = const_net(1, 0)
    assert gauge_eval(zero, E({(0,): 1})) == 0 == gauge_by_scan(zero, E({(0,): 1}), 10)
    assert gauge_eval(zero, E({(0,): p})) == -1
    assert gauge_eval(const_net(1, NEG_INF), E({(0,): 7, (3,): Fraction(1, 9)})) is NEG_INF
    assert gauge_eval(TWO_POINT, E({(2,): 1, (5,): p ** 3})) == 1
    assert gauge_eval(zero, E({})) is NEG_INF


@given(seeds, shapes())
@settings(max_examples=200)
def test_gauge_equals_sup(seed, shape):
    rng = random.Random(seed)
    net = gen.repair_open_lattice(gen.random_net(rng, shape.d, [NEG_INF]), shape, rng)
    x = gen.random_element_on_finite(rng, net, p, radius=4) if rng.random() < 0.7 else gen.random_element(rng, shape.d, p)
    e = seminorm_eval(net, x)
    assert gauge_eval(net, x) == e
    if x:
        assert gauge_by_scan(net, x) == e


@given(seeds, st.integers(1, 3))
@settings(max_examples=200)
def test_seminorm_laws(seed, d):
    rng = random.Random(seed)
    net = gen.random_net(rng, d, [NEG_INF])
    x, y = gen.random_element(rng, d, p, 4), gen.random_element(rng, d, p, 4)
    sx, sy, s = seminorm_eval(net, x), seminorm_eval(net, y), seminorm_eval(net, x + y)
    assert s <= max(sx, sy)
    if sx != sy:
        assert s == max(sx, sy)
    c = gen.random_coefficient(rng, p)
    scaled = seminorm_eval(net, c * x)
    assert scaled == (NEG_INF if sx is NEG_INF else sx - val_p(c, p))
    assert element_in_net(x, net) == (sx <= 0)


S20, S21 = FieldShape(2, 0), FieldShape(2, 1)


def test_bounded_sup_difference_examples():
    n = net1((None, 0, 0), (1, None, NEG_INF))
    k = net1((None, -1, INF), (0, None, 0))
    assert bounded_sup_difference(n, k, S20) == 0
    assert sup_difference_argmax(n, k) == (0, (0,))
    n2 = net1((None, -1, 0), (0, None, Affine((-1,), 0)))
    assert bounded_sup_difference(n2, const_net(1, 0), S21) == 0
    grow = net1((None, None, Affine((1,), 0)))
    assert bounded_sup_difference(grow, const_net(1, 0)) is INF
    with pytest.raises(NotClassified):
        bounded_sup_difference(grow, const_net(1, 0), S21)
    with pytest.raises(IndeterminateSum):
        sup_difference_argmax(const_net(1, INF), const_net(1, INF))


@given(seeds, shapes())
@settings(max_examples=150)
def test_boundedness_bridge(seed, shape):
    rng = random.Random(seed)
    n = gen.repair_open_lattice(gen.random_net(rng, shape.d, [NEG_INF]), shape, rng)
    k = gen.repair_bounded(gen.random_net(rng, shape.d, [INF]), shape, rng)
    M = bounded_sup_difference(n, k, shape)
    assert M is not INF
    for _ in range(5):
        x = gen.random_element_in(rng, k, p, radius=5)
        assert seminorm_eval(n, x) <= M
    value, where = sup_difference_argmax(n, k)
    if where is not None:
        w = LaurentElement.monomial(shape.d, p, where, Fraction(p) ** net_eval(k, where))
        assert seminorm_eval(n, w) == M


def test_convergence_examples():
    g = SeriesGenerator.constant(1, p, Region(((0, 10),)))
    net = net1((None, 5, 0), (6, None, NEG_INF))
    window = Region(((0, 10),))
    tails = convergence_check(g, net, [(0,), (2,), (4,), (6,)], window, S20)
    assert tails == [0, 0, 0, NEG_INF]
    assert convergence_check(g, net, [(11,), (12,)], window) == [NEG_INF, NEG_INF]
    # coefficients p^i on i >= 0; tail past a starts at a + 1
    g2 = SeriesGenerator(1, p, ((Region(((0, None),)), CoefficientRule(1, Affine((1,), 0))),))
    net2 = net1((None, -1, NEG_INF), (0, None, 0))
    sched = [(0,), (1,), (3,), (6,)]
    assert convergence_check(g2, net2, sched, Region(((0, 30),))) == [-(a[0] + 1) for a in sched]
    with pytest.raises(ScheduleNotMonotone):
        convergence_check(g, net, [(2,), (1,)], window)
    with pytest.raises(NotClassified):
        convergence_check(g, const_net(1, 0), [(1,)], window, S20)


def test_product_seminorm():
    assert product_seminorm([0, -3, NEG_INF]) == 0
    assert product_seminorm([NEG_INF, NEG_INF]) is NEG_INF
    assert product_seminorm([-4]) == -4
    with pytest.raises(EmptyProduct):
        product_seminorm([])


def test_archimedean_seminorm():
    rho = RhoNet(1, ((Region(((None, 5),)), 2), (Region(((6, None),)), INF)))
    assert archimedean_seminorm(E({(2,): 3}), rho) == Fraction(3, 2)
    assert archimedean_seminorm({(7,): Fraction(-9)}, rho) == 0
    assert archimedean_seminorm(E({}), rho) == 0
    assert archimedean_seminorm(E({(1,): -5, (3,): 1}), rho) == Fraction(5, 2)
    assert rho_admissible(rho)
    assert not rho_admissible(RhoNet(1, ((Region.full(1), 1),)))
    with pytest.raises(NonpositiveRho):
        RhoNet(1, ((Region.full(1), 0),))


def test_qexp_formatting():
    assert format_qexp(NEG_INF, 3) == "0 (exponent -inf)"
    assert format_qexp(-2, 5) == "5^-2 (exponent -2)"
    for e in (NEG_INF, 0, -7, 12):
        assert qexp_from_json(qexp_to_json(e)) == e
    with pytest.raises(ValueError):
        qexp_from_json("+inf")
