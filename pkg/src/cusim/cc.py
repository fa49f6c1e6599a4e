"""Formal differences: the ``S_cc`` construction.

A class is written ``x̄ - ē`` for a pair ``(x, e)`` with ``e`` compact.
Pairs are compared by

    (x, e) ≾ (y, f)  iff  for all x' << x there is a compact g with
                          x' + f + g << y + e + g.

Three decision strategies are available:

``closed-form``
    pointwise ext-int comparison of ``x - e`` and ``y - f`` (N̄-valued
    vector and antichain-table bases);
``search``
    quantify ``x'`` over the approximant chain and ``g`` over
    ``{n u : n <= N} ∪ compact_window(N)``;
``srm``
    the stable-rank shortcut ``x + f + m u <= y + e + m u``.
"""

from __future__ import annotations

from .audit import Window, audit_axioms
from .core import (FAIL, PASS, Chain, CuMap, CuModel, ModelMismatch, Undecided, Verdict3)
from .models import LscModel, TruncatedNat, VectorModel, _vector_relations
from . import scalars
from .scalars import INF, INT, NAT

CLOSED, SEARCH, SRM = "closed-form", "search", "srm"


class GateError(ValueError):
    """The base model is not positively ordered or fails O5 in the window."""


def closed_form_applicable(base):
    if isinstance(base, VectorModel) and base.family == NAT:
        return True
    return isinstance(base, LscModel) and base.family == NAT and base.poset.is_antichain() \
        and type(base) is LscModel


def _g_search_complete(base, N):
    """Whether a failed compact search over the window refutes ``≾``."""
    if closed_form_applicable(base):
        # cancellative on finite coordinates: g = 0 already decides
        return True
    if isinstance(base, TruncatedNat):
        return N >= base.m
    return False


def cc_gate(base, window=None):
    """Check the construction's hypotheses: positive order and O5 (w = 0 instance)."""
    window = window or Window(bound=3, cap=1500)
    if not base.positively_ordered:
        rep = audit_axioms(base, window, predicates=["O0"])
        rep.record("positively-ordered", FAIL, 0, None, "base is not positively ordered")
        return rep
    rep = audit_axioms(base, window, predicates=["O5(w=0)"])
    rep.record("positively-ordered", PASS, 1)
    return rep


def _span(*xs):
    """Largest finite integer magnitude among the coordinates of the arguments."""
    best = 0

    def walk(v):
        nonlocal best
        if isinstance(v, tuple):
            for t in v:
                walk(t)
        elif isinstance(v, (int,)) and not isinstance(v, bool):
            best = max(best, abs(v))
        elif hasattr(v, "numerator") and v != INF:
            best = max(best, int(abs(v)) + 1)

    for x in xs:
        walk(x)
    return best


class CcModel(CuModel):
    """``S_cc`` over a positively ordered base satisfying O5.

    In closed-form mode classes are ext-int difference vectors; otherwise a
    class is stored as one of its representative pairs and equality is mutual
    ``≾``.
    """

    carrier = "cc"
    positively_ordered = False

    def __init__(self, base, strategy=None, search_bound=8, srm=1, gate=True, gate_window=None, name=None):
        if gate:
            rep = cc_gate(base, gate_window)
            bad = [r for r in rep.results.values() if r.status != PASS]
            if bad:
                raise GateError(f"{base.name} fails the cc hypotheses: "
                                + ", ".join(f"{r.name} {r.status}" for r in bad))
        self.base = base
        self.closed = closed_form_applicable(base)
        self.strategy = strategy or (CLOSED if self.closed else SEARCH)
        if self.strategy == CLOSED and not self.closed:
            raise ValueError(f"no closed form for {base.name}")
        if self.strategy not in (CLOSED, SEARCH, SRM):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == SRM and base.order_unit is None:
            raise ValueError("the stable-rank shortcut needs an order unit")
        self.search_bound = search_bound
        self.srm = srm
        self.name = name or f"cc({base.name})"
        self.axiom_exact = base.axiom_exact
        if self.closed:
            self.k = len(base.zero)
            self.zero = (0,) * self.k
            self.order_unit = (1,) * self.k
        else:
            self.zero = (base.zero, base.zero)
            self.order_unit = None if base.order_unit is None else (base.order_unit, base.zero)

    # -- pairs and classes ----------------------------------------------------

    def check_pair(self, p):
        x, e = p
        x, e = self.base.check(x, e)
        if not self.base.way_below(e, e):
            raise ModelMismatch(f"{self.base.fmt(e)} is not compact")
        return (x, e)

    def cls(self, x, e=None):
        """The class ``x̄ - ē``."""
        e = self.base.zero if e is None else e
        x, e = self.check_pair((x, e))
        if self.closed:
            return tuple(scalars.sub(u, v) for u, v in zip(x, e))
        return (x, e)

    def pair(self, c):
        """A representative pair of a class."""
        c = self.canon(c)
        if not self.closed:
            return c
        x = tuple(INF if v == INF else max(v, 0) for v in c)
        e = tuple(0 if v == INF else max(-v, 0) for v in c)
        return (self.base.canon(x), self.base.canon(e))

    # -- CuModel ----------------------------------------------------------------

    def canon(self, c):
        if self.closed:
            if not isinstance(c, tuple) or len(c) != self.k:
                raise ValueError(f"expected a {self.k}-vector in Z̄")
            return tuple(scalars.canon(INT, v) for v in c)
        return self.check_pair(c)

    def eq(self, a, b):
        if self.closed:
            return self.canon(a) == self.canon(b)
        return bool(cc_eq(self, a, b))

    def leq(self, a, b):
        if self.closed:
            return all(u <= v for u, v in zip(a, b))
        return bool(cc_below(self, a, b))

    def add(self, a, b):
        if self.closed:
            return tuple(INF if (u == INF or v == INF) else u + v for u, v in zip(a, b))
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def way_below(self, a, b):
        if self.closed:
            return INF not in a and self.leq(a, b)
        return cc_way_below(self, a, b).value is True

    def relation_matrices(self, els):
        return _vector_relations(els) if self.closed else None

    def approximant(self, c, n):
        if self.closed:
            return tuple(n if v == INF else v for v in c)
        x, e = c
        return (self.base.approximant(x, n), e)

    def join(self, a, b):
        if self.closed:
            return tuple(max(u, v) for u, v in zip(a, b))
        return None

    def infinite_multiple(self, c):
        if self.closed:
            if any(v < 0 for v in c):
                raise ValueError("inf * x needs x >= 0")
            return tuple(0 if v == 0 else INF for v in c)
        x, e = c
        return (self.base.infinite_multiple(x), self.base.zero)

    def maximum(self):
        if self.closed:
            return (INF,) * self.k
        top = self.base.maximum()
        return None if top is None else (top, self.base.zero)

    def window(self, bound):
        if self.closed:
            import itertools
            return list(itertools.product(list(range(-bound, bound + 1)) + [INF], repeat=self.k))
        reps = []
        for e in self.base.compact_window(bound):
            for x in self.base.window(bound):
                c = (x, e)
                if not any(self.eq(c, r) for r in reps):
                    reps.append(c)
        return reps

    def compact_window(self, bound):
        return [c for c in self.window(bound) if self.way_below(c, c)]

    def o5_hints(self, x1, x, y, w1):
        if self.closed:
            if INF not in x1:
                yield tuple(INF if v == INF else v - u for u, v in zip(x1, y))
            if INF not in x:
                yield tuple(INF if v == INF else v - u for u, v in zip(x, y))

    def encode(self, c):
        if self.closed:
            return [scalars.encode(v) for v in c]
        return [self.base.encode(c[0]), self.base.encode(c[1])]

    def decode(self, data):
        if self.closed:
            return self.canon(tuple(scalars.parse(v) for v in data))
        return self.canon((self.base.decode(data[0]), self.base.decode(data[1])))

    def fmt(self, c):
        if self.closed:
            return "(" + ", ".join(scalars.fmt(v) for v in c) + ")"
        return f"{self.base.fmt(c[0])} - {self.base.fmt(c[1])}"

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "base": self.base.describe(),
                "strategy": self.strategy, "search_bound": self.search_bound}


def cc_model(base, **kw):
    return CcModel(base, **kw)


# ---------------------------------------------------------------------------
# decision procedures on pairs


def _as_pair(cc, p):
    if cc.closed and not (isinstance(p, tuple) and len(p) == 2 and isinstance(p[0], tuple)):
        return cc.pair(p)
    if not cc.closed and len(p) == 2 and isinstance(p[0], tuple) and not cc.base.contains(p[0]):
        raise ModelMismatch(f"{p!r} is not a pair over {cc.base.name}")
    return cc.check_pair(p)


def compact_search_set(base, N):
    out = []
    u = base.order_unit
    if u is not None:
        for n in range(N + 1):
            g = base.multiple(n, u)
            if g not in out:
                out.append(g)
    for g in base.compact_window(N):
        if g not in out:
            out.append(g)
    return out


def _closed_below(cc, p, q):
    (x, e), (y, f) = p, q
    a = tuple(scalars.sub(u, v) for u, v in zip(x, e))
    b = tuple(scalars.sub(u, v) for u, v in zip(y, f))
    for i, (u, v) in enumerate(zip(a, b)):
        if u > v:
            return Verdict3.false("difference vectors not ordered", coordinate=i,
                                  lhs=scalars.encode(u), rhs=scalars.encode(v))
    return Verdict3.true("difference vectors ordered")


def _search_below(cc, p, q, N):
    base = cc.base
    (x, e), (y, f) = p, q
    G = compact_search_set(base, N)
    K = N + _span(x, e, y, f) + 1
    g_found = None
    for n in range(1, K + 1):
        x1 = base.approximant(x, n)
        lhs, rhs = base.add(x1, f), base.add(y, e)
        g_found = None
        for g in G:
            if base.way_below(base.add(lhs, g), base.add(rhs, g)):
                g_found = g
                break
        if g_found is None:
            wit = {"x1": base.encode(x1)}
            if _g_search_complete(base, N):
                return Verdict3.false("no compact g works for this x'", **wit)
            return Verdict3.unknown("compact search exhausted", **wit)
    return Verdict3.true("compact found for every approximant", x1=base.encode(x1), g=base.encode(g_found))


def srm_decide(cc_or_base, m, p, q):
    """``x + f + m u <= y + e + m u`` (valid under a stable rank <= m assumption)."""
    base = cc_or_base.base if isinstance(cc_or_base, CcModel) else cc_or_base
    u = base.order_unit
    if u is None:
        raise ValueError(f"{base.name} has no order unit")
    (x, e), (y, f) = p, q
    x, e, y, f = base.check(x, e, y, f)
    mu = base.multiple(m, u)
    return base.leq(base.add(base.add(x, f), mu), base.add(base.add(y, e), mu))


def cc_below(cc, p, q, strategy=None, search_bound=None) -> Verdict3:
    """Decide ``p ≾ q`` for pairs (or classes) over ``cc.base``."""
    p, q = _as_pair(cc, p), _as_pair(cc, q)
    strategy = strategy or cc.strategy
    if strategy == CLOSED:
        if not cc.closed:
            raise ValueError(f"no closed form for {cc.base.name}")
        return _closed_below(cc, p, q)
    if strategy == SEARCH:
        return _search_below(cc, p, q, search_bound or cc.search_bound)
    if strategy == SRM:
        ok = srm_decide(cc, cc.srm, p, q)
        return Verdict3(ok, {"m": cc.srm}, "stable-rank shortcut (assumes stable rank <= m)")
    raise ValueError(f"unknown strategy {strategy!r}")


def cc_eq(cc, p, q, strategy=None) -> Verdict3:
    return cc_below(cc, p, q, strategy) & cc_below(cc, q, p, strategy)


def cc_add(cc, a, b):
    return cc.add(cc.canon(a), cc.canon(b))


def cc_way_below(cc, a, b) -> Verdict3:
    """``ā << b̄``: closed form after translation, else against b's approximant chain."""
    a, b = cc.canon(a), cc.canon(b)
    if cc.closed:
        ok = INF not in a and cc.leq(a, b)
        return Verdict3(ok, {}, "closed form")
    y, f = b
    K = cc.search_bound + _span(a, b) + 1
    for n in range(1, K + 1):
        term = (cc.base.approximant(y, n), f)
        v = cc_below(cc, a, term)
        if v.is_true:
            return Verdict3.true("dominated by an approximant", n=n)
    return Verdict3.false("no approximant within the bound dominates", bound=K)


# ---------------------------------------------------------------------------
# lifts and suprema


def positive_lift(cc, c, bound=None) -> Verdict3:
    """``x'`` in the base with ``x̄' = c`` for a class ``c >= 0``."""
    p = _as_pair(cc, c)
    x, e = p
    base = cc.base
    if cc_below(cc, (base.zero, base.zero), p).is_false:
        return Verdict3.false("class is not positive", **{"class": cc.encode(cc.canon(_cls_of(cc, p)))})
    if all(t == 0 for t in _flat(e)):
        return Verdict3.true("trivial lift", lift=base.encode(x))
    if cc.closed:
        v = tuple(scalars.sub(u, w) for u, w in zip(x, e))
        return Verdict3.true("difference vector", lift=base.encode(base.canon(v)))
    N = bound or cc.search_bound
    # O5 complement of e + f in x + f
    for f in compact_search_set(base, N):
        if not base.leq(base.add(e, f), base.add(x, f)):
            continue
        for x1 in base.window(N):
            if base.eq(base.add(x, f), base.add(base.add(x1, e), f)):
                return Verdict3.true("complement of e + f in x + f", lift=base.encode(x1), f=base.encode(f))
    return Verdict3.unknown("complement search exhausted", x=base.encode(x), e=base.encode(e))


def _flat(v):
    if isinstance(v, tuple):
        for t in v:
            yield from _flat(t)
    elif isinstance(v, (int,)) or v == INF or hasattr(v, "numerator"):
        yield v


def _cls_of(cc, p):
    return cc.cls(p[0], p[1])


def chain_lift(cc, x1, x, y, bound=None) -> Verdict3:
    """``z`` with ``x1 << z`` and ``z̄ = ȳ``, given ``x̄ <= ȳ`` and ``x1 << x``."""
    base = cc.base
    x1, x, y = base.check(x1, x, y)
    if not base.way_below(x1, x):
        raise ValueError("chain_lift needs x1 << x")
    target = cc.cls(y)
    if not cc.leq(cc.cls(x), target):
        raise ValueError("chain_lift needs x̄ <= ȳ")
    if base.way_below(x1, y):
        return Verdict3.true("y itself", z=base.encode(y))
    N = bound or cc.search_bound
    for z in base.window(N):
        if base.way_below(x1, z) and cc.eq(cc.cls(z), target):
            return Verdict3.true("complement search", z=base.encode(z))
    return Verdict3.unknown("complement search exhausted")


def cc_sup(cc, chain: Chain, steps=6):
    """Supremum of a chain of classes together with the lifting recursion trace.

    Returns ``(sup, verdict)``.  The verdict's witness lists the lifted
    sequence ``z_n`` (as classes); it is ``true`` when every ``z̄_n`` lies
    below the corresponding term and below the supremum.
    """
    base = cc.base
    terms = [cc.canon(t) for t in chain.terms(cc, steps)]
    sup = cc.canon(chain.supremum(cc))
    for i in range(len(terms) - 1):
        if not cc.leq(terms[i], terms[i + 1]):
            raise ValueError(f"chain is not increasing at term {i}")
    # translate so that the first term is positive
    _, e1 = cc.pair(terms[0]) if cc.closed else terms[0]
    shift = cc.cls(e1)
    moved = [cc.add(t, shift) for t in terms]
    lifts = []
    for t in moved:
        v = positive_lift(cc, t)
        if not v.is_true:
            return sup, Verdict3.unknown("positive lift failed", term=cc.encode(t))
        lifts.append(base.decode(v.witness["lift"]))
    # z_1 = 0, z'_1 = y_1; z_{n+1} << z'_n, z'_{n+1} lifts y_{n+1} above z_{n+1}
    z, zp = [base.zero], [lifts[0]]
    for n in range(1, len(lifts)):
        cand = None
        for k in range(n + 1, n + 1 + 4 * (cc.search_bound + 1)):
            a = base.approximant(zp[-1], k)
            if not base.way_below(z[-1], a):
                continue
            ok = all(cc.leq(cc.cls(base.approximant(lifts[j], n)), cc.cls(a)) for j in range(n - 1))
            if ok:
                cand = a
                break
        if cand is None:
            return sup, Verdict3.unknown("no admissible z_{n+1} within the bound", step=n)
        z.append(cand)
        v = chain_lift(cc, cand, zp[-1], lifts[n])
        if not v.is_true:
            return sup, Verdict3.unknown("chain lift failed", step=n)
        zp.append(base.decode(v.witness["z"]))
    zcls = [cc.add(cc.cls(t), _neg(cc, shift)) for t in z]
    ok = all(cc.leq(zc, t) for zc, t in zip(zcls, terms)) and all(cc.leq(zc, sup) for zc in zcls)
    return sup, Verdict3(ok, {"z": [cc.encode(c) for c in zcls]},
                         "recursion consistent with the closed-form supremum" if ok else "recursion inconsistent")


def _neg(cc, c):
    """Additive inverse of a compact class."""
    x, e = cc.pair(c) if cc.closed else c
    return cc.cls(e, x)


# ---------------------------------------------------------------------------
# functoriality


def cc_map(cumap, source_cc=None, target_cc=None):
    """``α_cc(x̄ - ē) = α(x)‾ - α(e)‾``."""
    if isinstance(cumap.source, CcModel) or isinstance(cumap.target, CcModel):
        raise ValueError("cc_map takes a map between base models")
    S = source_cc or CcModel(cumap.source, gate=False)
    T = target_cc or CcModel(cumap.target, gate=False)
    if S.base is not cumap.source and S.base.name != cumap.source.name:
        raise ValueError("source is not the cc model of the map's source")
    if T.base is not cumap.target and T.base.name != cumap.target.name:
        raise ValueError("target is not the cc model of the map's target")

    def fn(c):
        x, e = S.pair(c) if S.closed else c
        return T.cls(cumap(x), cumap(e))

    return CuMap(S, T, fn, name=f"{cumap.name}_cc", kind="cc", data=cumap)
