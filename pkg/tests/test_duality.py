import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import const_net, net1, seeds, shapes
from hlf import generators as gen
from hlf.duality import c_seminorm, gamma, pair, polar_membership, projection, reconstruct
from hlf.elements import LaurentElement, element_in_net, mul, val_p
from hlf.errors import DimensionMismatch, InvalidNetValues, PrimeMismatch
from hlf.foundations import INF, NEG_INF, negate
from hlf.nets import Affine, FieldShape, net_eval, polar_transform, reflection_net, window_box, window_points
from hlf.serialize import dumps_element
from hlf.topology import seminorm_eval

p = 3


def E(terms, dim=1, prime=p):
    return LaurentElement(dim, prime, terms)


def test_projection():
    x = E({(0, 0): 5, (1, 0): 1}, dim=2)
    assert projection((0, 0), x) == 5
    assert projection((3, 3), x) == 0
    one_t = E({(0,): 1, (1,): 1})
    assert projection((2,), mul(one_t, one_t)) == 1
    with pytest.raises(DimensionMismatch):
        projection((0,), x)


def pair_by_enumeration(x, y):
    return sum((cx * cy for a, cx in x.terms.items() for b, cy in y.terms.items()
                if all(i == -j for i, j in zip(a, b))), Fraction(0))


def test_pair_examples():
    assert pair(E({(1, 0): 1}, dim=2), E({(-1, 0): 1}, dim=2)) == 1
    assert pair(E({(0,): 2}), E({(0,): 3})) == 6
    x, y = E({(1,): 1, (2,): 1}), E({(-1,): p, (3,): 1})
    assert pair(x, y) == p == pair_by_enumeration(x, y)
    with pytest.raises(PrimeMismatch):
        pair(x, E({(0,): 1}, prime=5))


def test_gamma_and_reconstruct_examples():
    one = E({(0,): 1})
    assert gamma(one)(E({(0,): 1})) == 1 and gamma(one)(E({(1,): 1})) == 0
    a0 = (4, -2)
    assert gamma(E({a0: 1}, dim=2)).on_monomial(negate(a0)) == 1
    x = E({(2,): 1, (-1,): p, (4,): Fraction(2, 7)})
    for a in window_points(window_box(6, 1)):
        assert gamma(x).on_monomial(negate(a)) == x.coefficient(a)
    assert reconstruct(gamma(one).on_monomial, window_box(3, 1), 1, p) == one
    assert reconstruct(lambda b: 0, window_box(3, 1), 1, p).is_zero()
    target = E({(2,): 1, (-1,): p})
    assert reconstruct(gamma(target).on_monomial, window_box(5, 1), 1, p) == target


@given(seeds, st.integers(1, 3))
@settings(max_examples=150)
def test_pairing_laws(seed, d):
    rng = random.Random(seed)
    x, x2, y = (gen.random_element(rng, d, p, radius=3) for _ in range(3))
    c = gen.random_coefficient(rng, p)
    assert pair(x, y) == pair(y, x) == pair_by_enumeration(x, y)
    assert pair(x + x2, y) == pair(x, y) + pair(x2, y)
    assert pair(c * x, y) == c * pair(x, y)
    for a in x.support:
        assert pair(x, LaurentElement.monomial(d, p, negate(a))) == x.coefficient(a)


@given(seeds, st.integers(1, 3))
@settings(max_examples=100)
def test_round_trip_is_byte_exact(seed, d):
    rng = random.Random(seed)
    x = gen.random_element(rng, d, p, radius=3)
    window = window_box(3 + rng.randint(0, 1), d)
    back = reconstruct(gamma(x).on_monomial, window, d, p)
    assert dumps_element(back) == dumps_element(x)


def test_c_seminorm_examples():
    S21 = FieldShape(2, 1)
    absval = net1((None, -1, Affine((-1,), 0)), (0, None, Affine((1,), 0)))
    res = c_seminorm(E({(3,): 1}), absval, S21)
    assert res.exponent == -3 and res.compactoid
    assert c_seminorm(E({}), absval, S21).exponent is NEG_INF
    res = c_seminorm(E({(0,): 1}), const_net(1, 0), S21)
    assert res.exponent == 0 and not res.compactoid
    with pytest.raises(InvalidNetValues):
        c_seminorm(E({(0,): 1}), const_net(1, NEG_INF), S21)


def sampled_sup(x, B, radius):
    best = NEG_INF
    for b in window_points(window_box(radius, B.dim)):
        k = net_eval(B, b)
        if k is INF:
            continue
        v = pair(x, LaurentElement.monomial(B.dim, x.prime, b, Fraction(x.prime) ** k))
        if v:
            best = max(best, -val_p(v, x.prime))
    return best


@given(seeds, shapes(max_d=2))
@settings(max_examples=100, deadline=None)
def test_bicontinuity_identity(seed, shape):
    rng = random.Random(seed)
    B = gen.repair_compactoid(gen.random_net(rng, shape.d, [INF]), shape, rng)
    x = gen.random_element_on_finite(rng, B, p, radius=4, reflect=True)
    res = c_seminorm(x, B, shape)
    assert res.compactoid
    assert res.exponent == seminorm_eval(reflection_net(B), x)
    # the closed form is the exact sup over monomials of B
    assert sampled_sup(x, B, 4) == res.exponent


def test_polar_membership_examples():
    A = const_net(1, 0)
    assert polar_membership(E({(0,): p}), A)
    res = polar_membership(E({(0,): 1}), A)
    assert not res and res.witness == E({(0,): 1}) and abs(res.pairing) == 1
    assert polar_membership(E({}), net1((None, 0, NEG_INF), (1, None, INF)))


@given(seeds, st.integers(1, 3))
@settings(max_examples=200)
def test_polar_membership_soundness(seed, d):
    rng = random.Random(seed)
    A = gen.random_net(rng, d, [INF, NEG_INF])
    y = gen.random_element(rng, d, p, radius=4)
    res = polar_membership(y, A)
    assert res.member == element_in_net(y, polar_transform(A))
    if res.member:
        for a in y.support:
            k = net_eval(A, negate(a))
            if k is INF:
                continue
            scale = Fraction(p) ** (k if k is not NEG_INF else -20)
            v = pair(y, LaurentElement.monomial(d, p, negate(a), scale))
            assert v == 0 or val_p(v, p) >= 1
    else:
        assert element_in_net(res.witness, A)
        assert res.pairing == pair(y, res.witness) and val_p(res.pairing, p) <= 0


@given(seeds, st.integers(1, 3))
@settings(max_examples=100)
def test_bipolar_membership_matches_original(seed, d):
    rng = random.Random(seed)
    A = gen.random_net(rng, d, [INF, NEG_INF])
    twice = polar_transform(polar_transform(A))
    for _ in range(10):
        b = gen.random_index(rng, d, 6)
        k = net_eval(A, b)
        if k in (INF, NEG_INF):
            continue
        for shift in (-1, 0, 1):
            m = LaurentElement.monomial(d, p, b, Fraction(p) ** (k + shift))
            assert element_in_net(m, twice) == element_in_net(m, A) == (shift >= 0)
