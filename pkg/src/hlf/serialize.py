"""Canonical JSON forms for nets, elements and rho nets.

Canonical text is compact JSON (no spaces) with keys in a fixed order and a
trailing newline, so ``dumps(loads(text)) == text`` for canonical input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .elements import LaurentElement
from .foundations import INF, extint_from_json, extint_to_json
from .nets.core import Affine, Const, NetSpec, Region
from .topology import RhoNet


def canonical(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True) + "\n"


def _box_to_json(region: Region):
    return [[lo, hi] for lo, hi in region.box]


def _box_from_json(obj) -> Region:
    box = []
    for pair in obj:
        lo, hi = pair
        for b in (lo, hi):
            if b is not None and (isinstance(b, bool) or not isinstance(b, int)):
                raise ValueError(f"box bound must be an integer or null, got {b!r}")
        box.append((lo, hi))
    return Region(tuple(box))


def net_to_json(net: NetSpec) -> dict:
    pieces = []
    for region, rule in net.pieces:
        if isinstance(rule, Const):
            r = {"kind": "const", "value": extint_to_json(rule.value)}
        else:
            r = {"kind": "affine", "coeffs": list(rule.coeffs), "offset": rule.offset}
        pieces.append({"box": _box_to_json(region), "rule": r})
    return {"dim": net.dim, "pieces": pieces}


def net_from_json(obj: dict) -> NetSpec:
    dim = obj["dim"]
    pieces = []
    for p in obj["pieces"]:
        rule = p["rule"]
        if rule["kind"] == "const":
            r = Const(extint_from_json(rule["value"]))
        elif rule["kind"] == "affine":
            coeffs = rule["coeffs"]
            if any(isinstance(c, bool) or not isinstance(c, int) for c in coeffs) \
                    or isinstance(rule["offset"], bool) or not isinstance(rule["offset"], int):
                raise ValueError("affine coefficients and offset must be integers")
            r = Affine(tuple(coeffs), rule["offset"])
        else:
            raise ValueError(f"unknown rule kind {rule['kind']!r}")
        pieces.append((_box_from_json(p["box"]), r))
    return NetSpec(dim, tuple(pieces))


def element_to_json(x: LaurentElement) -> dict:
    terms = [{"index": list(a), "num": c.numerator, "den": c.denominator}
             for a, c in x.terms.items()]
    return {"dim": x.dim, "prime": x.prime, "terms": terms}


def element_from_json(obj: dict) -> LaurentElement:
    terms = []
    for t in obj["terms"]:
        num, den = t["num"], t["den"]
        if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
            raise ValueError("term needs integer num and positive integer den")
        terms.append((tuple(t["index"]), Fraction(num, den)))
    return LaurentElement(obj["dim"], obj["prime"], terms)


def _rho_value_to_json(v):
    if v == INF:
        return "+inf"
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _rho_value_from_json(v):
    if v == "+inf":
        return INF
    if isinstance(v, bool):
        raise ValueError("rho value cannot be a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise ValueError(f"bad rho value {v!r}")


def rho_to_json(rho: RhoNet) -> dict:
    return {"dim": rho.dim,
            "pieces": [{"box": _box_to_json(region), "rule": {"kind": "const", "value": _rho_value_to_json(v)}}
                       for region, v in rho.pieces]}


def rho_from_json(obj: dict) -> RhoNet:
    pieces = []
    for p in obj["pieces"]:
        rule = p["rule"]
        if rule.get("kind") != "const":
            raise ValueError("rho nets are piecewise constant")
        pieces.append((_box_from_json(p["box"]), _rho_value_from_json(rule["value"])))
    return RhoNet(obj["dim"], tuple(pieces))


def dumps_net(net: NetSpec) -> str:
    return canonical(net_to_json(net))


def loads_net(text: str) -> NetSpec:
    return net_from_json(json.loads(text))


def dumps_element(x: LaurentElement) -> str:
    return canonical(element_to_json(x))


def loads_element(text: str) -> LaurentElement:
    return element_from_json(json.loads(text))
