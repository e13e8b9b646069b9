"""Shared builders and strategies for the tests."""

from __future__ import annotations


from hypothesis import strategies as st

from hlf.nets import Affine, Const, FieldShape, NetSpec, Region


def box(*intervals):
    return Region(tuple(intervals))


def net1(*pieces):
    """A 1-dimensional net from (lo, hi, rule) triples; rules may be ints or infinities."""
    out = []
    for lo, hi, rule in pieces:
        if not isinstance(rule, (Const, Affine)):
            rule = Const(rule)
        out.append((Region(((lo, hi),)), rule))
    return NetSpec(1, tuple(out))


def const_net(dim, value):
    return NetSpec.constant(dim, value)


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


@st.composite
def shapes(draw, max_d=3):
    d = draw(st.integers(1, max_d))
    return FieldShape(d + 1, draw(st.integers(0, d)))
