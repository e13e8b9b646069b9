"""Command-line front end: ``hlf <command> ...``.

Reports are ``key: value`` lines.  Exit codes: 0 pass or true, 1 input
error, 2 property failure, 3 classifier or membership false, 4 mode
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .duality import c_seminorm, gamma, pair, reconstruct
from .elements import LaurentElement, val_p
from .errors import HLFError, InvalidNetValues, NonpositiveRho
from .foundations import extint_to_json
from .nets.classify import KINDS, classify
from .nets.convolve import min_plus_convolve
from .nets.core import FieldShape, NetSpec, Region, net_eval, polar_transform, require_valid, window_box
from .nets.window import window_corroborate
from .props import ConfigError, load_config, run_props
from .serialize import dumps_element, dumps_net, element_from_json, net_from_json, rho_from_json
from .topology import archimedean_seminorm, format_qexp, gauge_eval, seminorm_eval

EXIT_OK, EXIT_INPUT, EXIT_PROPERTY, EXIT_FALSE, EXIT_MODE = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


class ModeMismatch(Exception):
    pass


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def _load(path: str, parse, what: str):
    obj = _read_json(path)
    try:
        return parse(obj)
    except (KeyError, TypeError, ValueError, HLFError) as e:
        raise InputError(f"{path} is not a valid {what}: {e}") from None


def load_net(path: str) -> NetSpec:
    net = _load(path, net_from_json, "net")
    try:
        return require_valid(net)
    except HLFError as e:
        raise InputError(f"{path}: {e}") from None


def load_element(path: str) -> LaurentElement:
    return _load(path, element_from_json, "element")


def _shape(n: int, r: int, net: Optional[NetSpec] = None) -> FieldShape:
    try:
        shape = FieldShape(n, r)
    except ValueError as e:
        raise InputError(str(e)) from None
    if net is not None and net.dim != shape.d:
        raise InputError(f"net has dimension {net.dim} but n - 1 = {shape.d}")
    return shape


def _same_dim(net_dim: int, x: LaurentElement) -> None:
    if net_dim != x.dim:
        raise InputError(f"element of dimension {x.dim} against a net of dimension {net_dim}")


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _ext(v) -> str:
    return str(extint_to_json(v))


def cmd_classify(args, out) -> int:
    net = load_net(args.net)
    shape = _shape(args.n, args.r, net)
    try:
        verdict = classify(net, shape, args.kind)
    except InvalidNetValues as e:
        raise InputError(str(e)) from None
    print(f"kind: {args.kind}", file=out)
    print(f"shape: ({shape.n},{shape.r})", file=out)
    print(f"verdict: {_bool(verdict.holds)}", file=out)
    w = verdict.witness
    if w is not None:
        print(f"witness.condition: {w.condition}", file=out)
        print(f"witness.coordinate: {w.coordinate}", file=out)
        print(f"witness.piece: {w.piece}", file=out)
        print(f"witness.point: {list(w.point)}", file=out)
        print(f"witness.reason: {w.reason}", file=out)
    rep = window_corroborate(net, shape, args.kind, args.window)
    print(f"window.radius: {rep.radius}", file=out)
    print(f"window.status: {rep.status}", file=out)
    print(f"window.insufficient: {_bool(rep.insufficient)}", file=out)
    if rep.counterexample is not None:
        ce = rep.counterexample
        print(f"window.counterexample: {ce.condition} at {list(ce.point)}: {ce.detail}", file=out)
    return EXIT_OK if verdict.holds else EXIT_FALSE


def cmd_seminorm(args, out) -> int:
    x = load_element(args.element)
    if args.mode == "archimedean":
        try:
            rho = rho_from_json(_read_json(args.net))
        except NonpositiveRho as e:
            raise ModeMismatch(str(e)) from None
        except (KeyError, TypeError, ValueError, HLFError) as e:
            raise ModeMismatch(f"archimedean mode needs a piecewise-constant positive rho net: {e}") from None
        _same_dim(rho.dim, x)
        try:
            value = archimedean_seminorm(x, rho)
        except ValueError as e:
            raise InputError(str(e)) from None
        print("mode: archimedean", file=out)
        print(f"seminorm: {value}", file=out)
        return EXIT_OK
    net = load_net(args.net)
    _same_dim(net.dim, x)
    try:
        e = seminorm_eval(net, x) if args.mode == "padic" else gauge_eval(net, x)
    except InvalidNetValues as err:
        raise ModeMismatch(f"{args.mode} mode: {err}") from None
    print(f"mode: {args.mode}", file=out)
    print(f"seminorm: {format_qexp(e, x.prime)}", file=out)
    return EXIT_OK


def cmd_member(args, out) -> int:
    net = load_net(args.net)
    x = load_element(args.element)
    _same_dim(net.dim, x)
    for a, c in x.terms.items():
        v, k = val_p(c, x.prime), net_eval(net, a)
        if v < k:
            print("member: false", file=out)
            print(f"witness.index: {list(a)}", file=out)
            print(f"witness.valuation: {v}", file=out)
            print(f"witness.net: {_ext(k)}", file=out)
            return EXIT_FALSE
    print("member: true", file=out)
    return EXIT_OK


def _window_arg(text: Optional[str], x: LaurentElement) -> Region:
    if text is None:
        if x.is_zero():
            return window_box(0, x.dim)
        cols = list(zip(*x.support))
        return Region(tuple((min(c), max(c)) for c in cols))
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise InputError(f"window must be a radius or a JSON list of [lo, hi] pairs: {text!r}") from None
    try:
        if isinstance(obj, int) and not isinstance(obj, bool):
            if obj < 0:
                raise ValueError("negative radius")
            return window_box(obj, x.dim)
        region = Region(tuple((int(lo), int(hi)) for lo, hi in obj))
    except (TypeError, ValueError) as e:
        raise InputError(f"bad window {text!r}: {e}") from None
    if region.dim != x.dim:
        raise InputError("window dimension differs from the element's")
    return region


def _emit(text: str, path: Optional[str], out) -> None:
    if path is None:
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror}") from None


def cmd_dual(args, out) -> int:
    if args.sub == "pair":
        x, y = load_element(args.x), load_element(args.y)
        if (x.dim, x.prime) != (y.dim, y.prime):
            raise InputError("elements must share dimension and prime")
        print(f"pair: {pair(x, y)}", file=out)
    elif args.sub == "polar":
        _emit(dumps_net(polar_transform(load_net(args.net))), args.out, out)
    elif args.sub == "cseminorm":
        B = load_net(args.net)
        x = load_element(args.element)
        _same_dim(B.dim, x)
        shape = _shape(args.n, args.r, B)
        try:
            res = c_seminorm(x, B, shape)
        except InvalidNetValues as e:
            raise ModeMismatch(str(e)) from None
        print(f"c_seminorm: {format_qexp(res.exponent, x.prime)}", file=out)
        print(f"compactoid: {_bool(res.compactoid)}", file=out)
    else:
        x = load_element(args.element)
        window = _window_arg(args.window, x)
        y = reconstruct(gamma(x).on_monomial, window, x.dim, x.prime)
        _emit(dumps_element(y), args.out, out)
    return EXIT_OK


def cmd_convolve(args, out) -> int:
    n1, n2 = load_net(args.net1), load_net(args.net2)
    if n1.dim != n2.dim:
        raise InputError("nets of different dimensions")
    if args.window < 0:
        raise InputError("window radius must be nonnegative")
    table = min_plus_convolve(n1, n2, window_box(args.window, n1.dim))
    for a, v in table.items():
        print(f"value[{','.join(map(str, a))}]: {_ext(v)}", file=out)
    return EXIT_OK


def cmd_props(args, out) -> int:
    try:
        cfg = load_config(args.config)
        report = run_props(cfg, args.config, [args.suite] if args.suite else None, args.case)
    except OSError as e:
        raise InputError(f"cannot read {args.config}: {e.strerror}") from None
    except (ConfigError, TypeError) as e:
        raise InputError(f"invalid config: {e}") from None
    text = report.text()
    out.write(text)
    if args.output:
        _emit(text, args.output, out=None)
    return EXIT_OK if report.ok else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hlf", description="Nets, seminorms and duality on higher local fields.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="decide a net classification")
    c.add_argument("--net", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--window", type=int, default=25, help="radius of the corroborating window")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("seminorm", help="evaluate a seminorm on an element")
    s.add_argument("--net", required=True)
    s.add_argument("--element", required=True)
    s.add_argument("--mode", choices=("padic", "gauge", "archimedean"), default="padic")
    s.set_defaults(func=cmd_seminorm)

    m = sub.add_parser("member", help="test membership of an element in a net's module")
    m.add_argument("--net", required=True)
    m.add_argument("--element", required=True)
    m.set_defaults(func=cmd_member)

    d = sub.add_parser("dual", help="pairing, polars and reconstruction")
    dsub = d.add_subparsers(dest="sub", required=True)
    dp = dsub.add_parser("pair")
    dp.add_argument("--x", required=True)
    dp.add_argument("--y", required=True)
    dq = dsub.add_parser("polar")
    dq.add_argument("--net", required=True)
    dq.add_argument("--out")
    dc = dsub.add_parser("cseminorm")
    dc.add_argument("--element", required=True)
    dc.add_argument("--net", required=True)
    dc.add_argument("--n", type=int, required=True)
    dc.add_argument("--r", type=int, required=True)
    dr = dsub.add_parser("reconstruct")
    dr.add_argument("--element", required=True, help="representer of the functional")
    dr.add_argument("--window", help="radius or JSON list of [lo, hi]; default: support box")
    dr.add_argument("--out")
    d.set_defaults(func=cmd_dual)

    v = sub.add_parser("convolve", help="min-plus convolution on a window")
    v.add_argument("--net1", required=True)
    v.add_argument("--net2", required=True)
    v.add_argument("--window", type=int, required=True)
    v.set_defaults(func=cmd_convolve)

    r = sub.add_parser("props", help="run the property suites")
    r.add_argument("--config", required=True)
    r.add_argument("--suite")
    r.add_argument("--case", type=int)
    r.add_argument("--output", help="also write the report to this file")
    r.set_defaults(func=cmd_props)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ModeMismatch as e:
        print(f"error: mode mismatch: {e}", file=sys.stderr)
        return EXIT_MODE
    except HLFError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
