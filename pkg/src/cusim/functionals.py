"""Functionals: evaluation on positives, extension by absorbers, pairing and hat.

A functional is given by one extended-real weight per coordinate of the
model (per ray for glued models), so additivity is built in.  On a model
with negative elements the value at ``x`` is ``λ(x + z) - λ(z)`` for a
positive absorber ``z``; :func:`extend` computes it for two different
absorbers and refuses to answer when they disagree.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .audit import DEFAULT_WINDOW, FAR, Window, catalog_chains
from .core import FAIL, PASS, UNKNOWN, AuditReport, Undecided, Verdict3
from .models import GluedModel
from . import scalars
from .scalars import INF, REAL

__all__ = ["Functional", "FunctionalSequence", "evaluate", "extend", "extend_verdict", "pairing",
           "ray_functionals", "hat", "check_hat", "factor_check", "audit_functional",
           "check_convergence", "coordinates", "admissible_absorbers"]


@dataclass(frozen=True)
class Functional:
    """Weights on coordinates; ``weights[i]`` multiplies coordinate ``i``."""

    weights: tuple
    name: str = ""

    def __post_init__(self):
        ws = tuple(scalars.canon(REAL, w) for w in self.weights)
        if any(w != INF and w < 0 for w in ws):
            raise ValueError("functional weights are nonnegative")
        object.__setattr__(self, "weights", ws)

    @property
    def densely_finite(self):
        return all(w != INF for w in self.weights)

    def scaled(self, t):
        return Functional(tuple(scalars.scale(t, w) for w in self.weights), name=f"{t}*{self.name}")

    def __str__(self):
        return self.name or "λ(" + ", ".join(scalars.fmt(w) for w in self.weights) + ")"


def coordinates(model, x):
    """The coordinate vector a functional is applied to."""
    if isinstance(model, GluedModel):
        return model.hat(x)
    coords = getattr(model, "coords", None)
    if coords is not None:
        return tuple(coords(x))
    flat = tuple(_flat(x))
    return flat


def _flat(v):
    if isinstance(v, tuple):
        for t in v:
            yield from _flat(t)
    elif not isinstance(v, str):
        yield v


def _weighted(lam: Functional, vec):
    if len(vec) != len(lam.weights):
        raise ValueError(f"{len(lam.weights)} weights for {len(vec)} coordinates")
    total = 0
    for w, v in zip(lam.weights, vec):
        if w == 0 or v == 0:
            continue
        if v == INF or w == INF:
            if v != INF and v < 0:
                raise ArithmeticError("infinite weight on a negative coordinate")
            total = INF
        elif total != INF:
            total += w * v
    return scalars.reduce_num(total) if total != INF else INF


def evaluate(lam: Functional, model, x):
    """``λ(x)`` for ``x >= 0``."""
    x = model.check(x)
    if not model.leq(model.zero, x):
        raise ValueError(f"{model.fmt(x)} is not positive; use extend")
    return _weighted(lam, coordinates(model, x))


def _in_p(model, z, bound):
    """``z`` lies in ``P = {z >= 0 : z << z' for some z'}``."""
    if not model.leq(model.zero, z):
        return False
    top = model.maximum()
    if top is not None and model.way_below(z, top):
        return True
    return any(model.way_below(z, w) for w in model.window(bound))


def admissible_absorbers(model, x, bound=None, limit=2):
    """The first ``limit`` elements ``z`` of ``P`` (smallest first) with ``x + z >= 0``."""
    from .augmented import _lexkey, _weight

    B = bound or DEFAULT_WINDOW.search_bound
    cands = [z for z in model.window(B) if model.leq(model.zero, z)]
    cands.sort(key=lambda z: (_weight(z), _lexkey(z)))
    out = []
    for z in cands:
        if model.leq(model.zero, model.add(x, z)) and _in_p(model, z, B):
            out.append(z)
            if len(out) == limit:
                break
    return out


def extend_verdict(lam: Functional, model, x, bound=None) -> Verdict3:
    """``λ(x + z) - λ(z)`` for two absorbers; true with the common value, else unknown."""
    x = model.check(x)
    if model.leq(model.zero, x):
        return Verdict3.true("x is positive", value=scalars.encode(evaluate(lam, model, x)),
                             z=[model.encode(model.zero)])
    zs = admissible_absorbers(model, x, bound)
    if not zs:
        return Verdict3.unknown("no admissible absorber in the window", x=model.encode(x))
    vals = []
    for z in zs:
        lz = evaluate(lam, model, z)
        if lz == INF:
            return Verdict3.unknown("λ is infinite on the absorber", z=model.encode(z))
        vals.append(scalars.sub(evaluate(lam, model, model.add(x, z)), lz))
    if len(set(vals)) != 1:
        return Verdict3.false("absorbers disagree", x=model.encode(x), z=[model.encode(z) for z in zs],
                              values=[scalars.encode(v) for v in vals])
    return Verdict3.true("absorber-independent", value=scalars.encode(vals[0]),
                         z=[model.encode(z) for z in zs])


def extend(lam: Functional, model, x, bound=None):
    """The extended value ``λ(x)``; raises :class:`Undecided` when no absorber is found."""
    v = extend_verdict(lam, model, x, bound)
    if not v.is_true:
        raise Undecided(v.reason, v)
    return scalars.parse(v.witness["value"])


def pairing(lam: Functional, model, x, bound=None):
    """``<λ, x>``: the extension of a functional that factors through ``q``."""
    return extend(lam, model, x, bound)


def ray_functionals(model):
    """Unit functionals on the model's rays (the free coordinates of a kernel)."""
    if isinstance(model, GluedModel):
        k = model.k
        return [Functional(tuple(1 if j == i else 0 for j in range(k)), name=f"ray{i}") for i in range(k)]
    k = len(coordinates(model, model.zero))
    skip = set()
    idx = getattr(getattr(model, "ranked", None), "basepoint_index", None)
    if idx is not None:
        skip.add(idx % k)
    return [Functional(tuple(1 if j == i else 0 for j in range(k)), name=f"ray{i}")
            for i in range(k) if i not in skip]


def hat(model, x, rays=None, bound=None):
    """The vector of pairings of ``x`` with the ray functionals."""
    rays = rays if rays is not None else ray_functionals(model)
    return tuple(pairing(lam, model, x, bound) for lam in rays)


def check_hat(model, window: Window | None = None) -> AuditReport:
    """``hat`` is additive and ``hat(0) = 0`` on window pairs."""
    window = window or DEFAULT_WINDOW
    rep = AuditReport(f"hat[{model.name}]", window=window.to_dict())
    rays = ray_functionals(model)
    z = hat(model, model.zero, rays)
    rep.record("hat-zero", PASS if all(v == 0 for v in z) else FAIL, 1,
               None if all(v == 0 for v in z) else {"hat": [scalars.encode(v) for v in z]})
    els = model.window(window.bound)
    cache = {}

    def h(x):
        if x not in cache:
            cache[x] = hat(model, x, rays)
        return cache[x]

    pairs = _pairs(els, window)
    for count, (a, b) in enumerate(pairs, 1):
        s = h(model.add(a, b))
        t = tuple(INF if (u == INF or v == INF) else u + v for u, v in zip(h(a), h(b)))
        if s != t:
            rep.record("hat-additive", FAIL, count, {"x": model.encode(a), "y": model.encode(b)})
            break
    else:
        rep.record("hat-additive", PASS, len(pairs))
    return rep


def _pairs(els, window):
    n = len(els)
    if n * n <= window.cap:
        return [(a, b) for a in els for b in els]
    rng = random.Random(window.seed)
    return [(els[rng.randrange(n)], els[rng.randrange(n)]) for _ in range(window.cap)]


# ---------------------------------------------------------------------------
# audits


def _sum(u, v):
    return INF if (u == INF or v == INF) else u + v


def audit_functional(lam: Functional, model, window: Window | None = None) -> AuditReport:
    """Absorber independence, additivity, order and chain suprema of ``extend`` on windows."""
    window = window or DEFAULT_WINDOW
    B = window.bound
    rep = AuditReport(f"{lam} on {model.name}", window=window.to_dict())
    els = model.window(B)
    vals, unknown = {}, None
    for x in els:
        v = extend_verdict(lam, model, x, bound=window.search_bound)
        if v.is_false:
            rep.record("absorber-independent", FAIL, len(vals), v.witness, v.reason)
            break
        if v.is_unknown:
            unknown = unknown or {"x": model.encode(x)}
            continue
        vals[x] = scalars.parse(v.witness["value"])
    else:
        if unknown:
            rep.record("absorber-independent", UNKNOWN, len(vals), unknown)
        else:
            rep.record("absorber-independent", PASS, len(vals))
    rep.record("zero", PASS if vals.get(model.zero, 0) == 0 else FAIL, 1)
    rep.record("densely-finite", PASS if _densely_finite(lam, model, els) else FAIL, len(els))

    def ext(x):
        if x not in vals:
            vals[x] = extend(lam, model, x, bound=window.search_bound)
        return vals[x]

    known = [x for x in els if x in vals]
    pairs = _pairs(known, window)
    add_bad = order_bad = None
    for a, b in pairs:
        va, vb = ext(a), ext(b)
        if add_bad is None and va != INF and vb != INF:
            try:
                s = ext(model.add(a, b))
            except Undecided:
                s = None
            if s is not None and s != _sum(va, vb):
                add_bad = {"x": model.encode(a), "y": model.encode(b)}
        if order_bad is None and model.leq(a, b) and not va <= vb:
            order_bad = {"x": model.encode(a), "y": model.encode(b)}
    rep.record("additive", FAIL if add_bad else PASS, len(pairs), add_bad)
    rep.record("order", FAIL if order_bad else PASS, len(pairs), order_bad)
    _check_chain_sup(lam, model, window, rep, ext)
    return rep


def _densely_finite(lam, model, els):
    """Finite on every window element that is way below some window element."""
    for x in els:
        if any(model.way_below(x, y) for y in els):
            try:
                v = _weighted(lam, coordinates(model, x))
            except ArithmeticError:
                return False
            if v == INF:
                return False
    return True


def _check_chain_sup(lam, model, window, rep, ext):
    """``λ(sup) = sup λ(terms)``: terms stay below and two far terms close in on ``λ(sup)``."""
    chains = catalog_chains(model, window.bound, window.chains)
    for count, c in enumerate(chains, 1):
        try:
            s = ext(c.supremum(model))
            early = [ext(t) for t in c.terms(model, _n_terms(window))]
            f1, f2 = ext(c.term(model, FAR)), ext(c.term(model, 4 * FAR))
        except Undecided:
            continue
        bad = any(not v <= s for v in early + [f1, f2])
        if not bad:
            if s == INF:
                bad = not (f2 == INF or f2 > f1 or f1 == INF)
            else:
                bad = not (f2 == s or (s - f2) < (s - f1))
        if bad:
            rep.record("chain-sup", FAIL, count, {"chain": c.label, "sup": model.encode(c.supremum(model))})
            return
    rep.record("chain-sup", PASS, len(chains))


def _n_terms(window):
    return max(window.terms, 2 * window.bound + 2)


# ---------------------------------------------------------------------------
# factoring through q


def factor_check(lam: Functional, cc, z=None, window: Window | None = None):
    """Check that ``x̄ <= ȳ`` implies ``λ(x) <= λ(y)`` on positive base pairs.

    Returns ``(report, factored)`` where ``factored`` is the same weight data
    read on the cc model, or None when monotonicity fails.  When a full
    element ``z`` is given, the report also records whether ``z`` is full
    and ``λ(z)`` finite, and runs :func:`full_comparison` on every comparable
    pair with ``x`` compact (the largest ``n`` needed goes in the window).
    """
    window = window or Window(bound=3)
    base = cc.base
    rep = AuditReport(f"factor {lam} through q", window=window.to_dict())
    if z is not None:
        from .audit import is_full
        full = is_full(base, z)
        rep.record("full", {True: PASS, False: FAIL, None: UNKNOWN}[full.value], 1,
                   None if full.is_true else {"z": base.encode(z)}, full.reason)
        lz = evaluate(lam, base, z)
        rep.record("finite-on-full", PASS if lz != INF else FAIL, 1,
                   None if lz != INF else {"z": base.encode(z)})
    els = [x for x in base.window(window.bound) if base.leq(base.zero, x)]
    vals = {x: evaluate(lam, base, x) for x in els}
    bad = None
    checked = 0
    for x, y in itertools.product(els, repeat=2):
        if not cc.leq(cc.cls(x), cc.cls(y)):
            continue
        checked += 1
        if not vals[x] <= vals[y]:
            bad = {"x": base.encode(x), "y": base.encode(y),
                   "lambda_x": scalars.encode(vals[x]), "lambda_y": scalars.encode(vals[y]),
                   "equal_classes": cc.eq(cc.cls(x), cc.cls(y))}
            break
    rep.record("monotone-on-classes", FAIL if bad else PASS, checked, bad,
               "x̄ <= ȳ but λ(x) > λ(y)" if bad else "")
    if z is not None and rep["full"].status == PASS:
        _full_comparisons(cc, els, z, rep)
    return rep, (None if bad else Functional(lam.weights, name=f"{lam}~"))


def _full_comparisons(cc, els, z, rep):
    from .augmented import full_comparison

    base = cc.base
    worst, count, missing = 0, 0, None
    for x, y in itertools.product(els, repeat=2):
        if not base.way_below(x, x) or not cc.leq(cc.cls(x), cc.cls(y)):
            continue
        count += 1
        v = full_comparison(cc, x, x, y, z)
        if not v.is_true:
            missing = missing or {"x": base.encode(x), "y": base.encode(y)}
            continue
        worst = max(worst, v.witness["n"])
    rep.window["max_n"] = worst
    rep.record("full-comparison", UNKNOWN if missing else PASS, count, missing,
               "no n within the bound" if missing else f"x + n z <= y' + n z with n <= {worst}")


# ---------------------------------------------------------------------------
# convergence


@dataclass(frozen=True)
class FunctionalSequence:
    """A sequence ``λ_1, λ_2, ...`` with a tail rule whose limsup and liminf are exact.

    ``kind`` is ``"constant"`` (``λ_i = λ``), ``"shifted"``
    (``λ_i = (1 + shift/i) λ``) or ``"periodic"`` (cycle through ``terms``).
    """

    kind: str
    terms: tuple
    shift: Fraction = Fraction(1)

    @classmethod
    def constant(cls, lam):
        return cls("constant", (lam,))

    @classmethod
    def shifted(cls, lam, shift=1):
        return cls("shifted", (lam,), Fraction(shift))

    @classmethod
    def periodic(cls, *lams):
        return cls("periodic", tuple(lams))

    def term(self, i):
        """``λ_i`` for ``i >= 1``."""
        if self.kind == "constant":
            return self.terms[0]
        if self.kind == "shifted":
            return self.terms[0].scaled(1 + self.shift / i)
        return self.terms[(i - 1) % len(self.terms)]

    def _values(self, model, x):
        return [_weighted(t, coordinates(model, x)) for t in self.terms]

    def limsup(self, model, x):
        return max(self._values(model, x))

    def liminf(self, model, x):
        return min(self._values(model, x))


def check_convergence(seq: FunctionalSequence, limit: Functional, model,
                      window: Window | None = None) -> AuditReport:
    """``limsup λ_i(x) <= λ(y) <= liminf λ_i(y)`` for window pairs ``0 <= x << y``."""
    window = window or DEFAULT_WINDOW
    rep = AuditReport(f"{seq.kind} sequence -> {limit}", window=window.to_dict())
    pos = [x for x in model.window(window.bound) if model.leq(model.zero, x)]
    checked = 0
    for x, y in itertools.product(pos, repeat=2):
        if not model.way_below(x, y):
            continue
        checked += 1
        hi, ly, lo = seq.limsup(model, x), evaluate(limit, model, y), seq.liminf(model, y)
        if not hi <= ly:
            rep.record("limsup", FAIL, checked, {"x": model.encode(x), "y": model.encode(y),
                                                 "limsup": scalars.encode(hi), "lambda_y": scalars.encode(ly)})
            break
        if not ly <= lo:
            rep.record("liminf", FAIL, checked, {"x": model.encode(x), "y": model.encode(y),
                                                 "liminf": scalars.encode(lo), "lambda_y": scalars.encode(ly)})
            break
    else:
        rep.record("limsup", PASS, checked)
        rep.record("liminf", PASS, checked)
    return rep
