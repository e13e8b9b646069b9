"""Extended integers, multi-indices and index slices.

Values of nets and valuations live in Z u {+inf, -inf}.  Finite values are
plain Python ``int`` objects; the two infinities are the singletons
:data:`INF` and :data:`NEG_INF`, which compare correctly against ints.

Multi-indices are tuples of ints.  The order used throughout is the inverse
lexicographic one: the *last* differing coordinate decides.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, IndeterminateSum

__all__ = [
    "INF",
    "NEG_INF",
    "ExtInt",
    "MultiIndex",
    "Order",
    "SliceSpec",
    "extint_add",
    "extint_neg",
    "extint_sub",
    "extint_from_json",
    "extint_to_json",
    "is_finite",
    "invlex_compare",
    "invlex_key",
    "negate",
    "slice_contains",
]


@functools.total_ordering
class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __eq__(self, other):
        if isinstance(other, _Infinity):
            return self.sign == other.sign
        if isinstance(other, (int, float)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(("ExtInt-infinity", self.sign))

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        if isinstance(other, int):
            return self.sign < 0
        return NotImplemented

    def __neg__(self):
        return NEG_INF if self.sign > 0 else INF

    def __float__(self):
        return float("inf") if self.sign > 0 else float("-inf")

    def __repr__(self):
        return "+inf" if self.sign > 0 else "-inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_infinity, (self.sign,))


def _infinity(sign):
    return INF if sign > 0 else NEG_INF


INF = _Infinity(1)
NEG_INF = _Infinity(-1)

ExtInt = Union[int, _Infinity]
MultiIndex = Tuple[int, ...]


def is_finite(v: ExtInt) -> bool:
    return not isinstance(v, _Infinity)


def extint_add(a: ExtInt, b: ExtInt) -> ExtInt:
    """Sum in Z u {+-inf}; an infinite operand absorbs any finite one."""
    if isinstance(a, _Infinity):
        if isinstance(b, _Infinity) and b.sign != a.sign:
            raise IndeterminateSum(f"{a} + {b}")
        return a
    if isinstance(b, _Infinity):
        return b
    return a + b


def extint_neg(a: ExtInt) -> ExtInt:
    return -a


def extint_sub(a: ExtInt, b: ExtInt) -> ExtInt:
    return extint_add(a, -b)


def extint_to_json(v: ExtInt):
    if v is INF:
        return "+inf"
    if v is NEG_INF:
        return "-inf"
    return int(v)


def extint_from_json(obj) -> ExtInt:
    if obj == "+inf":
        return INF
    if obj == "-inf":
        return NEG_INF
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ValueError(f"not an extended integer: {obj!r}")
    return obj


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"multi-indices of lengths {len(a)} and {len(b)}")


def invlex_key(a: Sequence[int]) -> Tuple[int, ...]:
    """Sort key realising the inverse lexicographic order."""
    return tuple(reversed(a))


def invlex_compare(a: Sequence[int], b: Sequence[int]) -> Order:
    _check_dims(a, b)
    for x, y in zip(reversed(a), reversed(b)):
        if x < y:
            return Order.LT
        if x > y:
            return Order.GT
    return Order.EQ


def negate(a: Sequence[int]) -> MultiIndex:
    return tuple(-i for i in a)


@dataclass(frozen=True)
class SliceSpec:
    """The index set I(tail) or, with ``scan_value`` set, I(k, tail).

    ``l`` is 1-based.  ``fixed_tail`` pins coordinates l+1..d; ``scan_value``
    additionally pins coordinate l.
    """

    l: int
    fixed_tail: Tuple[int, ...]
    scan_value: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "fixed_tail", tuple(self.fixed_tail))
        if self.l < 1:
            raise ValueError("slice position l is 1-based")

    @property
    def dim(self) -> int:
        return self.l + len(self.fixed_tail)


def slice_contains(s: SliceSpec, a: Sequence[int]) -> bool:
    if len(a) != s.dim:
        raise DimensionMismatch(f"slice lives in dimension {s.dim}, index has {len(a)}")
    if tuple(a[s.l:]) != s.fixed_tail:
        return False
    return s.scan_value is None or a[s.l - 1] == s.scan_value
