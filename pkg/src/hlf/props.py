"""Seeded property suites and their line-oriented report.

Every case draws from its own substream, labelled by suite name, shape and
case number, so a single case can be replayed without running the rest and
adding a suite never shifts another suite's inputs.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import generators as gen
from .duality import c_seminorm, gamma, pair, polar_membership, reconstruct
from .elements import LaurentElement, element_in_net, is_prime, mul, val_p
from .foundations import INF, NEG_INF, is_finite, negate
from .nets.classify import classify, classify_compactoid, classify_open_lattice
from .nets.convolve import min_plus_convolve
from .nets.core import FieldShape, NetSpec, Region, net_eval, polar_transform, reflection_net, tabulate, window_box
from .nets.window import window_corroborate
from .serialize import dumps_element
from .topology import bounded_sup_difference, convergence_check, gauge_eval, seminorm_eval, sup_difference_argmax


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    seed: int
    cases: int = 500
    window: int = 25
    dims: Tuple[int, ...] = (1, 2, 3)
    primes: Tuple[int, ...] = (2, 3, 5)
    shapes: Tuple[Tuple[int, int], ...] = ()
    counts: Tuple[Tuple[str, int], ...] = ()
    sample_window: int = 15
    broken_oracle: bool = False

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not -2 ** 63 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit integer")
        if isinstance(self.cases, bool) or not isinstance(self.cases, int) or self.cases < 1:
            raise ConfigError("cases must be an integer >= 1")
        if not isinstance(self.window, int) or self.window < 4:
            raise ConfigError("window must be an integer >= 4")
        if not isinstance(self.sample_window, int) or self.sample_window < 1:
            raise ConfigError("sample_window must be a positive integer")
        if not self.dims or any(not isinstance(d, int) or d < 1 for d in self.dims):
            raise ConfigError("dims must be a nonempty list of positive integers")
        if not self.primes or any(not isinstance(p, int) or not is_prime(p) for p in self.primes):
            raise ConfigError("primes must be a nonempty list of primes")
        shapes = self.shapes or tuple((d + 1, r) for d in self.dims for r in range(d + 1))
        for n, r in shapes:
            if n - 1 not in self.dims or not 0 <= r <= n - 1:
                raise ConfigError(f"shape ({n}, {r}) needs 0 <= r <= n-1 and n-1 in dims")
        object.__setattr__(self, "shapes", tuple(tuple(s) for s in shapes))
        for name, k in self.counts:
            if name not in SUITES:
                raise ConfigError(f"unknown suite {name!r} in counts")
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ConfigError(f"count for {name} must be an integer >= 1")

    def count(self, suite: str) -> int:
        return dict(self.counts).get(suite, self.cases)

    @property
    def field_shapes(self) -> List[FieldShape]:
        return [FieldShape(n, r) for n, r in self.shapes]


ACCEPTANCE_COUNTS = {
    "gauge_sup": 1000,
    "classification_duality": 500,
    "polar_involution": 500,
    "bicontinuity": 500,
    "duality_roundtrip": 500,
    "ultrametric_membership": 2000,
    "bounded_multiplication": 300,
    "convergence": 100,
}


def default_config(seed: int = 20240601) -> SuiteConfig:
    return SuiteConfig(seed=seed, cases=200, counts=tuple(ACCEPTANCE_COUNTS.items()))


def config_from_json(obj) -> SuiteConfig:
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    known = {"seed", "cases", "window", "dims", "primes", "shapes", "counts", "sample_window", "broken_oracle"}
    extra = set(obj) - known
    if extra:
        raise ConfigError(f"unknown config keys: {sorted(extra)}")
    if "seed" not in obj:
        raise ConfigError("config needs a seed")
    kw = dict(obj)
    for key in ("dims", "primes"):
        if key in kw:
            kw[key] = tuple(kw[key])
    if "shapes" in kw:
        try:
            kw["shapes"] = tuple((int(n), int(r)) for n, r in kw["shapes"])
        except (TypeError, ValueError):
            raise ConfigError("shapes must be a list of [n, r] pairs") from None
    if "counts" in kw:
        if not isinstance(kw["counts"], dict):
            raise ConfigError("counts must map suite names to integers")
        kw["counts"] = tuple(sorted(kw["counts"].items()))
    kw["broken_oracle"] = bool(kw.get("broken_oracle", False))
    return SuiteConfig(**kw)


def load_config(path: str) -> SuiteConfig:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ConfigError(f"config is not valid JSON: {e}") from None
    return config_from_json(obj)


@dataclass
class Case:
    """Inputs for one case: the shape, the prime and an independent stream."""

    shape: FieldShape
    prime: int
    rng: random.Random
    source: gen.NetSource
    target: Optional[Tuple[str, int]] = None


# A check returns None when the case passes and a description otherwise.
Check = Callable[[SuiteConfig, Case], Optional[str]]


@dataclass(frozen=True)
class Suite:
    name: str
    check: Check
    per_shape: bool = False
    shapes: Optional[Callable[[FieldShape], bool]] = None


def _shapes_for(cfg: SuiteConfig, suite: Suite) -> List[FieldShape]:
    shapes = cfg.field_shapes
    if suite.shapes is not None:
        shapes = [s for s in shapes if suite.shapes(s)]
    return shapes


def suite_size(cfg: SuiteConfig, name: str) -> int:
    suite = SUITES[name]
    if name == "oracle_consistency":
        return sum(suite_size(cfg, s) for s in ORACLE_SOURCES)
    shapes = _shapes_for(cfg, suite)
    if not shapes:
        return 0
    return cfg.count(name) * (len(shapes) if suite.per_shape else 1)


def make_case(cfg: SuiteConfig, name: str, k: int, source: gen.NetSource) -> Case:
    suite = SUITES[name]
    shapes = _shapes_for(cfg, suite)
    if suite.per_shape:
        per = cfg.count(name)
        shape, j = shapes[k // per], k % per
        rng = gen.substream(cfg.seed, name, shape.n, shape.r, j)
    else:
        shape = shapes[k % len(shapes)]
        rng = gen.substream(cfg.seed, name, k)
    return Case(shape, rng.choice(cfg.primes), rng, source)


def _anchor(c: Case) -> Tuple[int, ...]:
    """Coordinates along which one piece is bounded, for most cases.

    Without it, repairs tend to send every piece to an infinite constant
    once d >= 2.
    """
    return tuple(range(1, c.shape.d + 1)) if c.rng.random() < 0.75 else ()


# --- inputs shared between a suite and the oracle replay -------------------

def _gauge_inputs(c: Case):
    d = c.shape.d
    net = gen.repair_open_lattice(c.source.draw(c.rng, d, [NEG_INF], _anchor(c), "upper"), c.shape, c.rng)
    u = c.rng.random()
    if u < 0.25:
        x = gen.random_element(c.rng, d, c.prime)
    elif u < 0.5:
        x = gen.random_element_in(c.rng, net, c.prime)
    else:
        x = gen.random_element_on_finite(c.rng, net, c.prime)
    return net, x


def _duality_inputs(c: Case):
    d = c.shape.d
    N = c.source.draw(c.rng, d, [NEG_INF], _anchor(c), "upper")
    if c.rng.random() < 0.5:
        N = gen.repair_open_lattice(N, c.shape, c.rng)
    M = c.source.draw(c.rng, d, [INF], _anchor(c), "lower")
    if c.rng.random() < 0.5:
        M = gen.repair_compactoid(M, c.shape, c.rng)
    return N, M


def _involution_inputs(c: Case):
    return c.source.draw(c.rng, c.shape.d, [NEG_INF, INF])


def _bicontinuity_inputs(c: Case):
    d = c.shape.d
    B = gen.repair_compactoid(c.source.draw(c.rng, d, [INF], _anchor(c), "lower"), c.shape, c.rng)
    if c.rng.random() < 0.25:
        x = gen.random_element(c.rng, d, c.prime)
    else:
        x = gen.random_element_on_finite(c.rng, B, c.prime, reflect=True)
    return B, x


# --- checks -----------------------------------------------------------------

def check_gauge_sup(cfg, c):
    net, x = _gauge_inputs(c)
    if not classify_open_lattice(net, c.shape):
        return f"generated net is not an open lattice net: {net}"
    sup = seminorm_eval(net, x)
    gauge = gauge_eval(net, x)
    if cfg.broken_oracle and is_finite(gauge):
        gauge = gauge + 1
    if sup != gauge:
        return f"sup exponent {sup} != gauge exponent {gauge} for x={x}"
    return None


def check_classification_duality(cfg, c):
    N, M = _duality_inputs(c)
    a = classify_open_lattice(N, c.shape).holds
    b = classify_compactoid(polar_transform(N), c.shape).holds
    if a != b:
        return f"lattice({a}) vs compactoid of polar({b}) for {N}"
    a = classify_compactoid(M, c.shape).holds
    b = classify_open_lattice(polar_transform(M), c.shape).holds
    if a != b:
        return f"compactoid({a}) vs lattice of polar({b}) for {M}"
    return None


def check_polar_involution(cfg, c):
    N = _involution_inputs(c)
    window = window_box(cfg.window, N.dim)
    twice = polar_transform(polar_transform(N))
    if not np.array_equal(tabulate(twice, window), tabulate(N, window)):
        return f"double polar differs from {N} on the window"
    return None


def check_bicontinuity(cfg, c):
    B, x = _bicontinuity_inputs(c)
    if not classify_compactoid(B, c.shape):
        return f"generated net is not compactoid: {B}"
    closed = c_seminorm(x, B, c.shape)
    via_net = seminorm_eval(reflection_net(B), x)
    if closed.exponent != via_net:
        return f"c_seminorm {closed.exponent} != reflected seminorm {via_net} for x={x}"
    # sample monomials p^B(b) t^b on the window; only b in -support can pair nonzero
    W = cfg.sample_window
    samples = [negate(a) for a in x.support] + [gen.random_index(c.rng, B.dim, W) for _ in range(10)]
    best = NEG_INF
    for b in samples:
        if max(abs(i) for i in b) > W:
            continue
        k = net_eval(B, b)
        if k == INF:
            continue
        y = LaurentElement.monomial(B.dim, c.prime, b, Fraction(c.prime) ** k)
        v = pair(x, y)
        if v == 0:
            continue
        e = -val_p(v, c.prime)
        if e > closed.exponent:
            return f"sampled monomial at {b} gives exponent {e} above {closed.exponent}"
        best = max(best, e)
    inside = all(max(abs(i) for i in a) <= W for a in x.support)
    if inside and best != closed.exponent:
        return f"sampling max {best} does not reach the closed form {closed.exponent}"
    return None


def _support_box(x: LaurentElement, pad: int = 0) -> Region:
    cols = list(zip(*x.support))
    return Region(tuple((min(col) - pad, max(col) + pad) for col in cols))


def check_duality_roundtrip(cfg, c):
    x = gen.random_element(c.rng, c.shape.d, c.prime, radius=3, max_terms=5)
    if x.is_zero():
        window = window_box(1, x.dim)
    else:
        window = _support_box(x, pad=1)
    handle = gamma(x)
    back = reconstruct(handle.on_monomial, window, x.dim, x.prime)
    if dumps_element(back) != dumps_element(x):
        return f"round trip of {x} gave {back}"
    return None


def check_ultrametric_membership(cfg, c):
    d = c.shape.d
    net = c.source.draw(c.rng, d, [NEG_INF], _anchor(c), "upper")
    if c.rng.random() < 0.5:
        net = gen.repair_open_lattice(net, c.shape, c.rng)
    x = gen.random_element(c.rng, d, c.prime, radius=4)
    if c.rng.random() < 0.3:
        x = gen.random_element_in(c.rng, net, c.prime, radius=4)
    y = gen.random_element(c.rng, d, c.prime, radius=4)
    if c.rng.random() < 0.3:
        # share the support of x so that cancellation happens
        y = y + LaurentElement(d, c.prime, {a: -v * c.rng.choice((1, c.prime, Fraction(1, c.prime)))
                                            for a, v in x.terms.items()})
    sx, sy, sxy = seminorm_eval(net, x), seminorm_eval(net, y), seminorm_eval(net, x + y)
    if sxy > max(sx, sy):
        return f"||x+y|| = {sxy} exceeds max({sx}, {sy})"
    if sx != sy and sxy != max(sx, sy):
        return f"||x+y|| = {sxy} but the exponents {sx} and {sy} differ"
    for z, s in ((x, sx), (y, sy), (x + y, sxy)):
        if element_in_net(z, net) != (s <= 0):
            return f"membership {element_in_net(z, net)} disagrees with exponent {s} for {z}"
    scale = gen.random_coefficient(c.rng, c.prime)
    scaled = seminorm_eval(net, scale * x)
    if scaled != (sx if sx == NEG_INF else sx - val_p(scale, c.prime)):
        return f"||c x|| = {scaled} but ||x|| = {sx} and v(c) = {val_p(scale, c.prime)}"
    return None


def check_bounded_multiplication(cfg, c):
    d = c.shape.d
    B1 = gen.repair_bounded(c.source.draw(c.rng, d, [INF], _anchor(c), "lower"), c.shape, c.rng)
    B2 = gen.repair_bounded(c.source.draw(c.rng, d, [INF], _anchor(c), "lower"), c.shape, c.rng)
    x = gen.random_element_in(c.rng, B1, c.prime, radius=2, max_terms=4)
    y = gen.random_element_in(c.rng, B2, c.prime, radius=2, max_terms=4)
    z = mul(x, y)
    if z.is_zero():
        return None
    bound = min_plus_convolve(B1, B2, _support_box(z))
    for a, v in z.terms.items():
        if val_p(v, c.prime) < bound[a]:
            return f"coefficient at {a} has valuation {val_p(v, c.prime)} below {bound[a]}"
    # the infimum sits below every decomposition a = b + g drawn from the supports
    for b in x.support:
        for g in y.support:
            a = tuple(i + j for i, j in zip(b, g))
            total = net_eval(B1, b) + net_eval(B2, g)
            if bound[a] > total:
                return f"convolution {bound[a]} at {a} exceeds B1{b} + B2{g} = {total}"
    return None


def check_convergence(cfg, c):
    d = c.shape.d
    net = gen.repair_open_lattice(c.source.draw(c.rng, d, [NEG_INF], _anchor(c), "upper"), c.shape, c.rng)
    k0 = gen.lattice_threshold(net, c.shape)
    if k0 is None:
        return f"open lattice net without a threshold in the last coordinate: {net}"
    top = gen.CUT + 2
    window = Region(tuple([(-3, 3)] * (d - 1) + [(-3, top)]))
    g = gen.random_generator(c.rng, d, c.prime, window)
    start = (0,) * (d - 1) + (max(k0, -3),)
    schedule = gen.random_schedule(c.rng, window, 5, must=[start])
    tails = convergence_check(g, net, schedule, window, c.shape)
    for (a, e), (b, f) in zip(zip(schedule, tails), zip(schedule[1:], tails[1:])):
        if f > e:
            return f"tail exponent rises from {e} at {a} to {f} at {b}"
    for a, e in zip(schedule, tails):
        if a[-1] >= k0 and e != NEG_INF:
            return f"tail exponent {e} at {a} although the net vanishes past {k0}"
    if tails[-1] != NEG_INF:
        return f"tail exponents never reach -inf: {tails}"
    return None


def _oracle_nets(name: str, c: Case) -> Iterator[Tuple[NetSpec, FieldShape, str]]:
    """(net, shape, kind) for every symbolic 'true' verdict the source suite sees."""
    if name == "gauge_sup":
        net, _ = _gauge_inputs(c)
        candidates = [(net, "lattice")]
    elif name == "classification_duality":
        N, M = _duality_inputs(c)
        candidates = [(N, "lattice"), (polar_transform(N), "compactoid"),
                      (M, "compactoid"), (polar_transform(M), "lattice")]
    elif name == "polar_involution":
        N = _involution_inputs(c)
        candidates = [(N, k) for k in ("lattice", "bounded", "compactoid")]
    else:
        B, _ = _bicontinuity_inputs(c)
        candidates = [(B, "compactoid"), (B, "bounded"), (reflection_net(B), "lattice")]
    for net, kind in candidates:
        infs = net.infinities()
        if (kind == "lattice" and INF in infs) or (kind != "lattice" and NEG_INF in infs):
            continue
        if classify(net, c.shape, kind):
            yield net, c.shape, kind


ORACLE_SOURCES = ("gauge_sup", "classification_duality", "polar_involution", "bicontinuity")


def _locate_oracle_case(cfg: SuiteConfig, k: int) -> Tuple[str, int]:
    for name in ORACLE_SOURCES:
        size = suite_size(cfg, name)
        if k < size:
            return name, k
        k -= size
    raise IndexError("oracle case out of range")


def check_oracle_consistency(cfg, c):
    name, k = c.target
    case = make_case(cfg, name, k, c.source)
    for net, shape, kind in _oracle_nets(name, case):
        rep = window_corroborate(net, shape, kind, cfg.window)
        if rep.status != "corroborated":
            ce = rep.counterexample
            return (f"{name} case {k}: {kind} verdict true but the window oracle finds "
                    f"{ce.condition} at {list(ce.point)} ({ce.detail}) for {net}")
    return None


def check_ring_laws(cfg, c):
    d = c.shape.d
    x, y, z = (gen.random_element(c.rng, d, c.prime, radius=3, max_terms=4) for _ in range(3))
    if mul(x, y) != mul(y, x):
        return "multiplication is not commutative"
    if mul(mul(x, y), z) != mul(x, mul(y, z)):
        return "multiplication is not associative"
    if mul(x, y + z) != mul(x, y) + mul(x, z):
        return "multiplication does not distribute over addition"
    if (x + y) - y != x:
        return "subtraction does not undo addition"
    return None


def check_pairing_laws(cfg, c):
    d = c.shape.d
    x, x2, y = (gen.random_element(c.rng, d, c.prime, radius=3) for _ in range(3))
    s = gen.random_coefficient(c.rng, c.prime)
    if pair(x, y) != pair(y, x):
        return "pairing is not symmetric"
    if pair(x + x2, y) != pair(x, y) + pair(x2, y):
        return "pairing is not additive"
    if pair(s * x, y) != s * pair(x, y):
        return "pairing is not homogeneous"
    for a in list(x.support) + [gen.random_index(c.rng, d, 3)]:
        if gamma(x).on_monomial(negate(a)) != x.coefficient(a):
            return f"coefficient at {a} is not recovered by the pairing"
    return None


def check_polar_soundness(cfg, c):
    d = c.shape.d
    A = c.source.draw(c.rng, d, [NEG_INF, INF])
    y = gen.random_element(c.rng, d, c.prime, radius=4)
    res = polar_membership(y, A)
    if res.member != element_in_net(y, polar_transform(A)):
        return "polar membership disagrees with membership in the polar net"
    if res.member:
        for b in [negate(a) for a in y.support] + [gen.random_index(c.rng, d, 4) for _ in range(5)]:
            k = net_eval(A, b)
            if k == INF:
                continue
            scale = Fraction(c.prime) ** (k if is_finite(k) else -8)
            v = pair(y, LaurentElement.monomial(d, c.prime, b, scale))
            if v != 0 and val_p(v, c.prime) < 1:
                return f"member y pairs to {v} with the monomial at {b}"
    else:
        w = res.witness
        if not element_in_net(w, A) or val_p(res.pairing, c.prime) > 0 or res.pairing != pair(y, w):
            return f"certificate {w} is not valid"
    return None


def check_sup_difference(cfg, c):
    d = c.shape.d
    n = gen.repair_open_lattice(c.source.draw(c.rng, d, [NEG_INF], _anchor(c), "upper"), c.shape, c.rng)
    k = gen.repair_bounded(c.source.draw(c.rng, d, [INF], _anchor(c), "lower"), c.shape, c.rng)
    s = bounded_sup_difference(n, k, c.shape)
    if s == INF:
        return "difference of an open lattice net and a bounded net is unbounded"
    for a in (gen.random_index(c.rng, d, 8) for _ in range(40)):
        nv, kv = net_eval(n, a), net_eval(k, a)
        if nv == NEG_INF or kv == INF:
            continue
        if nv - kv > s:
            return f"n - k = {nv - kv} at {a} exceeds the computed sup {s}"
    # every x in the bounded module has seminorm at most q^s ...
    x = gen.random_element_in(c.rng, k, c.prime)
    if seminorm_eval(n, x) > s:
        return f"element {x} of the bounded module has seminorm exponent above {s}"
    # ... and the monomial at the maximiser attains it
    _, where = sup_difference_argmax(n, k)
    if where is not None:
        w = LaurentElement.monomial(d, c.prime, where, Fraction(c.prime) ** net_eval(k, where))
        if seminorm_eval(n, w) != s:
            return f"monomial witness at {where} gives {seminorm_eval(n, w)}, not {s}"
    return None


SUITES: Dict[str, Suite] = {
    s.name: s for s in (
        Suite("gauge_sup", check_gauge_sup, per_shape=True),
        Suite("classification_duality", check_classification_duality, per_shape=True),
        Suite("polar_involution", check_polar_involution),
        Suite("bicontinuity", check_bicontinuity),
        Suite("duality_roundtrip", check_duality_roundtrip),
        Suite("ultrametric_membership", check_ultrametric_membership),
        Suite("bounded_multiplication", check_bounded_multiplication),
        Suite("convergence", check_convergence, shapes=lambda s: s.r < s.d),
        Suite("oracle_consistency", check_oracle_consistency),
        Suite("ring_laws", check_ring_laws),
        Suite("pairing_laws", check_pairing_laws),
        Suite("polar_soundness", check_polar_soundness),
        Suite("sup_difference", check_sup_difference),
    )
}


def run_case(cfg: SuiteConfig, name: str, k: int, source: Optional[gen.NetSource] = None) -> Optional[str]:
    source = source or gen.NetSource()
    if name == "oracle_consistency":
        case = Case(cfg.field_shapes[0], cfg.primes[0], random.Random(0), source,
                    target=_locate_oracle_case(cfg, k))
    else:
        case = make_case(cfg, name, k, source)
    try:
        return SUITES[name].check(cfg, case)
    except Exception as e:   # a crash is a failed case, reported like any other
        return f"{type(e).__name__}: {e}"


@dataclass
class SuiteResult:
    name: str
    cases: int
    passed: int
    first_failure: Optional[Tuple[int, str]] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.cases


def run_suite(cfg: SuiteConfig, name: str, source: Optional[gen.NetSource] = None,
              only: Optional[int] = None) -> SuiteResult:
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}")
    source = source or gen.NetSource()
    size = suite_size(cfg, name)
    indices = range(size) if only is None else [only]
    if only is not None and not 0 <= only < size:
        raise ConfigError(f"case {only} out of range for {name} ({size} cases)")
    result = SuiteResult(name, 0, 0)
    for k in indices:
        failure = run_case(cfg, name, k, source)
        result.cases += 1
        if failure is None:
            result.passed += 1
        elif result.first_failure is None:
            result.first_failure = (k, failure)
    return result


@dataclass
class PropsReport:
    results: List[SuiteResult]
    drawn: int
    rejected: int
    lines: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def run_props(cfg: SuiteConfig, config_path: str = "FILE", suites: Optional[Sequence[str]] = None,
              case: Optional[int] = None) -> PropsReport:
    names = list(suites) if suites else list(SUITES)
    source = gen.NetSource()
    results = [run_suite(cfg, name, source, case) for name in names]
    lines = [f"seed: {cfg.seed}", f"window: {cfg.window}",
             "shapes: " + " ".join(f"({n},{r})" for n, r in cfg.shapes),
             "primes: " + " ".join(str(p) for p in cfg.primes)]
    for r in results:
        lines.append(f"{r.name}.cases: {r.cases}")
        lines.append(f"{r.name}.passed: {r.passed}")
        lines.append(f"{r.name}.status: {'pass' if r.ok else 'FAIL'}")
        if r.first_failure is not None:
            k, detail = r.first_failure
            lines.append(f"{r.name}.counterexample: case {k}: {detail}")
            lines.append(f"{r.name}.replay: hlf props --config {config_path} --suite {r.name} --case {k}")
    rate = source.rejected / source.drawn if source.drawn else 0.0
    lines.append(f"generator.drawn: {source.drawn}")
    lines.append(f"generator.rejected: {source.rejected}")
    lines.append(f"generator.rejection_rate: {rate:.4f}")
    report = PropsReport(results, source.drawn, source.rejected, lines)
    lines.append(f"result: {'pass' if report.ok else 'FAIL'}")
    return report
