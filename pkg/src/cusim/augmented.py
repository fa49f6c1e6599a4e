"""Rank maps, augmented models (kernels of rank), compacts and K0, exactness.

Desk-scale ideals and quotients come from pointed finite antichains: the
unitization is the basepoint coordinate, an ideal is a subset of the free
points, and the quotient is the complementary subset.
"""

from __future__ import annotations

import itertools
import random

from .audit import DEFAULT_WINDOW, Window, audit_morphism, weak_cancellation_search
from .cc import CcModel, cc_map
from .core import (FAIL, PASS, UNKNOWN, AuditReport, CuMap, CuModel, ModelMismatch, Verdict3,
                   matrix_map)
from .models import FinitePoset, GluedModel, LscModel, VectorModel, ext_power
from . import scalars
from .scalars import INF, INT, NAT

ZBAR = VectorModel(INT, 1, name="Z̄")


# ---------------------------------------------------------------------------
# ranked cc models and kernels


class RankedCc:
    """A cc model with a rank morphism to Z̄."""

    def __init__(self, cc: CcModel, rank: CuMap, basepoint_index=None):
        self.cc = cc
        self.rank = rank
        self.basepoint_index = basepoint_index

    @property
    def name(self):
        return f"{self.cc.name}/rank"


def basepoint_rank(cc: CcModel, index=-1):
    """Evaluation of a difference table at the basepoint coordinate."""
    if not cc.closed:
        raise ValueError("basepoint rank needs a closed-form cc model")
    idx = index % cc.k
    return CuMap(cc, ZBAR, lambda c: (c[idx],), name="rank", kind="evaluation", data=idx)


def build_ranked(cc: CcModel, rank: CuMap, window: Window | None = None, audit=True):
    """Attach a rank map; it must pass the morphism audit."""
    if rank.source is not cc:
        raise ModelMismatch("rank map must start at the cc model")
    if audit:
        rep = audit_morphism(rank, window or Window(bound=3, cap=1500))
        bad = [r for r in rep.results.values() if r.status != PASS]
        if bad:
            raise ValueError("rank is not a morphism: " + ", ".join(f"{r.name} {r.status}" for r in bad))
    idx = rank.data if rank.kind == "evaluation" else None
    return RankedCc(cc, rank, idx)


class AugmentedModel(CuModel):
    """Classes of rank zero; all structure is inherited from the ambient cc model."""

    carrier = "augmented"
    positively_ordered = False

    def __init__(self, ranked: RankedCc, name=None):
        self.ranked = ranked
        self.cc = ranked.cc
        self.base = self.cc.base
        self.name = name or f"aug({self.base.name})"
        self.zero = self.cc.zero
        self.order_unit = None
        self.axiom_exact = self.cc.axiom_exact
        self.exhaustive_searches = False

    def rank(self, c):
        return self.ranked.rank(c)[0]

    def canon(self, c):
        c = self.cc.canon(c)
        if self.rank(c) != 0:
            raise ValueError(f"class {self.cc.fmt(c)} has nonzero rank")
        return c

    def leq(self, a, b):
        return self.cc.leq(a, b)

    def add(self, a, b):
        return self.cc.add(a, b)

    def eq(self, a, b):
        return self.cc.eq(a, b)

    def way_below(self, a, b):
        return self.cc.way_below(a, b)

    def relation_matrices(self, els):
        return self.cc.relation_matrices(els)

    def approximant(self, c, n):
        return self.cc.approximant(c, n)

    def join(self, a, b):
        return self.cc.join(a, b)

    def infinite_multiple(self, c):
        return self.cc.infinite_multiple(c)

    def neg(self, c):
        if self.cc.closed and INF not in c:
            return tuple(-v for v in c)
        return None

    def window(self, bound):
        return [c for c in self.cc.window(bound) if self.rank(c) == 0]

    def maximum(self):
        top = self.cc.maximum()
        if top is None or self.ranked.basepoint_index is None:
            return None
        i = self.ranked.basepoint_index
        return tuple(0 if j == i else v for j, v in enumerate(top))

    def o5_hints(self, x1, x, y, w1):
        return self.cc.o5_hints(x1, x, y, w1)

    def encode(self, c):
        return self.cc.encode(c)

    def decode(self, data):
        return self.canon(self.cc.decode(data))

    def fmt(self, c):
        return self.cc.fmt(c)

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "ambient": self.cc.describe()}


def kernel_model(ranked: RankedCc, name=None):
    return AugmentedModel(ranked, name=name)


def pointed_discrete_base(k):
    """Lsc(X̄, N̄) for X = k discrete points; the last coordinate is the basepoint."""
    return LscModel(FinitePoset.antichain(k, basepoint=True), NAT, name=f"lsc(discrete{k}+pt,nat)")


def pointed_discrete_augmented(k, window=None):
    """The augmented model of ``C0`` of ``k`` points, as the kernel of rank."""
    base = pointed_discrete_base(k)
    cc = CcModel(base, gate_window=window)
    ranked = build_ranked(cc, basepoint_rank(cc, -1), window)
    return kernel_model(ranked, name=f"aug(discrete{k})")


def point_augmented(window=None):
    """The unital point model: ``Ã = C ⊕ C`` with base N̄², kernel Z̄."""
    return pointed_discrete_augmented(1, window)


def q(aug: AugmentedModel, x):
    """``x ↦ x̄`` for a base element of rank zero."""
    x = aug.base.check(x)
    c = aug.cc.cls(x)
    if aug.rank(c) != 0:
        raise ValueError(f"rank of {aug.base.fmt(x)} is {scalars.fmt(aug.rank(c))}, not 0")
    return c


# ---------------------------------------------------------------------------
# absorbers and complements


def _weight(x):
    total = 0
    for v in _flat(x):
        total += 10 ** 6 if v == INF else abs(v)
    return total


def _flat(v):
    if isinstance(v, tuple):
        for t in v:
            yield from _flat(t)
    elif not isinstance(v, str):
        yield v


def find_positive_absorber(model, x, bound=None) -> Verdict3:
    """``z >= 0`` with ``x + z >= 0``, preferring small ``z``."""
    x = model.check(x)
    if model.leq(model.zero, x):
        return Verdict3.true("x is already positive", z=model.encode(model.zero))
    B = bound or DEFAULT_WINDOW.search_bound
    cands = [z for z in model.window(B) if model.leq(model.zero, z)]
    cands.sort(key=lambda z: (_weight(z), _lexkey(z)))
    for z in cands:
        if model.leq(model.zero, model.add(x, z)):
            return Verdict3.true("window search", z=model.encode(z))
    return Verdict3.unknown("no absorber in the window", x=model.encode(x))


def _lexkey(z):
    return tuple((1, 0) if v == INF else (0, v) for v in _flat(z) if not isinstance(v, str))


def find_complement(model, x1, x, y1=None, y=None, bound=None) -> Verdict3:
    """``z`` with ``x1 + z <= 0 <= x + z`` (and ``y1 <= z`` when ``x + y <= 0``).

    Follows the recipe: pick ``x''`` with ``x1 << x'' << x`` from the
    approximant chain, then try the complement ``-x''`` before a window
    search.
    """
    x1, x = model.check(x1, x)
    if not model.way_below(x1, x):
        raise ValueError("find_complement needs x1 << x")
    if (y1 is None) != (y is None):
        raise ValueError("give both y1 and y or neither")
    if y is not None:
        y1, y = model.check(y1, y)
        if not model.leq(model.add(x, y), model.zero):
            raise ValueError("the refinement needs x + y <= 0")
    zero = model.zero

    def ok(z):
        if not (model.leq(model.add(x1, z), zero) and model.leq(zero, model.add(x, z))):
            return False
        return y1 is None or model.leq(y1, z)

    cands = []
    x2 = None
    for n in range(1, 64):
        a = model.approximant(x, n)
        if model.way_below(x1, a):
            x2 = a
            break
    neg = getattr(model, "neg", None)
    for t in (x2, x, x1):
        if t is not None and neg is not None:
            z = neg(t)
            if z is not None:
                cands.append(z)
    if isinstance(model, GluedModel):
        cands.extend(_glued_complements(model, x1, x2 or x))
    B = bound or DEFAULT_WINDOW.search_bound
    cands.extend(model.window(B))
    for z in cands:
        try:
            z = model.canon(z)
        except (ValueError, TypeError, ArithmeticError):
            continue
        if ok(z):
            return Verdict3.true("complement found", z=model.encode(z),
                                 x2=None if x2 is None else model.encode(x2))
    return Verdict3.unknown("no complement in the window", x1=model.encode(x1), x=model.encode(x))


def _glued_complements(model, x1, x2):
    h = model.hat(x2)
    if all(t != INF for t in h):
        yield ("s", tuple(-t for t in h))
    h1 = model.hat(x1)
    if all(t != INF for t in h1):
        yield ("s", tuple(-t for t in h1))


def _glued_neg(model, c):
    if c[0] == "c":
        return ("c", tuple(-t for t in c[1]))
    return None


GluedModel.neg = _glued_neg


# ---------------------------------------------------------------------------
# weak cancellation, compacts, soft/compact


def check_weak_cancellation(model, window: Window | None = None) -> AuditReport:
    window = window or DEFAULT_WINDOW
    rep = AuditReport(model.name, window=window.to_dict())
    els = model.window(window.bound)
    hit, count = weak_cancellation_search(model, els, cap=max(window.cap * 10, 20_000),
                                          rng=random.Random(window.seed))
    if hit is None:
        rep.record("weak-cancellation", PASS, count)
    else:
        x, y, z = hit
        rep.record("weak-cancellation", FAIL, count,
                   {"x": model.encode(x), "y": model.encode(y), "z": model.encode(z)},
                   "x+z << y+z but x not <= y")
    return rep


def compact_group(model, window: Window | None = None, k0=None) -> AuditReport:
    """Compacts of the window form a group; optionally compare with K0 data.

    ``k0`` is a dict with ``rank`` (d), ``to_model`` (Z^d tuple -> element)
    and ``positive`` (predicate on Z^d tuples); the map is checked to be an
    ordered-group isomorphism onto the window compacts.
    """
    window = window or DEFAULT_WINDOW
    B = window.bound
    rep = AuditReport(model.name, window=window.to_dict())
    comps = [c for c in model.window(B) if model.way_below(c, c)]
    rep.window["compacts"] = len(comps)
    # stable finiteness surrogate: compact cancellation on the window
    for a, b, c in itertools.islice(itertools.product(comps, repeat=3), window.cap):
        if model.eq(model.add(a, c), model.add(b, c)) and not model.eq(a, b):
            rep.record("cancellative", FAIL, 0, {"a": model.encode(a), "b": model.encode(b), "c": model.encode(c)})
            break
    else:
        rep.record("cancellative", PASS, min(len(comps) ** 3, window.cap))
    missing = None
    for count, x in enumerate(comps, 1):
        v = find_complement(model, x, x, bound=B)
        if not v.is_true:
            missing = {"x": model.encode(x)}
            break
        z = model.decode(v.witness["z"])
        if not (model.way_below(z, z) and model.eq(model.add(x, z), model.zero)):
            missing = {"x": model.encode(x), "z": v.witness["z"]}
            break
    if missing:
        rep.record("inverses", FAIL, count, missing, "no compact inverse")
    else:
        rep.record("inverses", PASS, len(comps))
    els = model.window(B)
    rng = random.Random(window.seed)
    n = len(els)
    pairs = ([(a, b) for a in els for b in els] if n * n <= window.cap
             else [(els[rng.randrange(n)], els[rng.randrange(n)]) for _ in range(window.cap)])
    for count, (a, b) in enumerate(pairs, 1):
        s = model.add(a, b)
        if model.way_below(s, s) and not (model.way_below(a, a) and model.way_below(b, b)):
            rep.record("summands", FAIL, count, {"x": model.encode(a), "y": model.encode(b)})
            break
    else:
        rep.record("summands", PASS, len(pairs))
    rep.window["group"] = group_label(model, comps)
    if k0 is not None:
        _check_k0(model, comps, k0, B, rep)
    return rep


def group_label(model, comps):
    """``Z^r`` read off from the free coordinates that vary among window compacts."""
    if comps == [model.zero]:
        return "0"
    if isinstance(model, GluedModel):
        return f"Z^{model.d}" if model.d else "0"
    vec = [tuple(_flat(c)) for c in comps]
    r = sum(1 for i in range(len(vec[0])) if len({v[i] for v in vec}) > 1)
    return "0" if r == 0 else ("Z" if r == 1 else f"Z^{r}")


def _check_k0(model, comps, k0, B, rep):
    d, to_model, positive = k0["rank"], k0["to_model"], k0["positive"]
    grid = list(itertools.product(range(-B, B + 1), repeat=d))
    images = {}
    for g in grid:
        images[g] = model.canon(to_model(g))
    bad = None
    for g in grid:
        for h in grid:
            s = tuple(a + b for a, b in zip(g, h))
            if s in images and not model.eq(model.add(images[g], images[h]), images[s]):
                bad = {"g": list(g), "h": list(h), "reason": "not additive"}
                break
            diff = tuple(b - a for a, b in zip(g, h))
            if model.leq(images[g], images[h]) != positive(diff):
                bad = {"g": list(g), "h": list(h), "reason": "order mismatch"}
                break
        if bad:
            break
    if bad is None:
        img = set(images.values())
        inside = [c for c in comps if all(abs(v) <= B for v in _flat(c) if v != INF)]
        miss = [c for c in inside if c not in img]
        if miss:
            bad = {"compact": model.encode(miss[0]), "reason": "not in the image of K0"}
        elif len(img) != len(grid):
            bad = {"reason": "not injective"}
    if bad:
        rep.record("k0-iso", FAIL, len(grid), bad)
    else:
        rep.record("k0-iso", PASS, len(grid) ** 2)


def classify_soft_compact(model, x, bound=None, samples=24):
    """``"compact"``, ``"soft"`` or ``"unknown"``.

    Soft: every ``x1 << x`` admits a nonzero positive ``z`` with ``x1 + z <= x``.
    The ``x1`` are drawn from the approximant chain of ``x`` (cofinal) and the
    window.
    """
    x = model.check(x)
    if model.way_below(x, x):
        return "compact"
    B = bound or DEFAULT_WINDOW.bound
    preds = [model.approximant(x, n) for n in (1, 2, 4, 8, 16, 64, 1024)]
    preds += [a for a in model.window(B) if model.way_below(a, x)][:samples]
    positives = [z for z in model.window(B) if not model.eq(z, model.zero) and model.leq(model.zero, z)]
    for x1 in preds:
        found = False
        for z in itertools.chain(model.soft_hints(x1, x), positives):
            try:
                z = model.canon(z)
            except (ValueError, TypeError, ArithmeticError):
                continue
            if model.eq(z, model.zero) or not model.leq(model.zero, z):
                continue
            if model.leq(model.add(x1, z), x):
                found = True
                break
        if not found:
            return "unknown"
    return "soft"


def soft_compact_dichotomy(model, window: Window | None = None) -> AuditReport:
    window = window or DEFAULT_WINDOW
    rep = AuditReport(model.name, window=window.to_dict())
    counts = {"soft": 0, "compact": 0, "unknown": 0}
    first_unknown = None
    for x in model.window(window.bound):
        kind = classify_soft_compact(model, x, window.bound)
        counts[kind] += 1
        if kind == "unknown" and first_unknown is None:
            first_unknown = {"x": model.encode(x)}
    rep.window.update(counts)
    if first_unknown:
        rep.record("soft-or-compact", UNKNOWN, sum(counts.values()), first_unknown)
    else:
        rep.record("soft-or-compact", PASS, sum(counts.values()))
    return rep


def full_comparison(cc: CcModel, x1, x, y, z, nmax=16) -> Verdict3:
    """Least ``n`` and ``y1 << y`` with ``x1 + n z <= y1 + n z``, given ``x̄ <= ȳ``."""
    base = cc.base
    x1, x, y, z = base.check(x1, x, y, z)
    if not base.way_below(x1, x):
        raise ValueError("full_comparison needs x1 << x")
    if not cc.leq(cc.cls(x), cc.cls(y)):
        raise ValueError("full_comparison needs x̄ <= ȳ")
    from .audit import is_full
    if is_full(base, z).is_false:
        raise ValueError(f"{base.fmt(z)} is not full")
    ys = []
    for k in range(1, 65):
        a = base.approximant(y, k)
        if a not in ys:
            ys.append(a)
    for n in range(nmax + 1):
        nz = base.multiple(n, z)
        for y1 in ys:
            if base.leq(base.add(x1, nz), base.add(y1, nz)):
                return Verdict3.true("comparison found", n=n, y1=base.encode(y1))
    return Verdict3.unknown("no n within the bound", nmax=nmax)


# ---------------------------------------------------------------------------
# maps between augmented models, exactness, direct sums


def augmented_map(base_map: CuMap, src: AugmentedModel, tgt: AugmentedModel, name=None):
    """Restriction of ``α_cc`` to the kernels of rank."""
    m = cc_map(base_map, src.cc, tgt.cc)
    return CuMap(src, tgt, lambda c: tgt.canon(m(c)), name=name or f"{base_map.name}~", kind="augmented",
                 data=base_map)


def discrete_split(k_ideal, k_quotient, window=None):
    """``0 → C0(U) → C0(X) → C0(X∖U) → 0`` for discrete ``U`` (``k_ideal`` points) in ``X``.

    Returns ``(aug_I, aug_A, aug_Q, iota, pi)``.  On unitizations the ideal
    inclusion copies the basepoint value onto the quotient points, and the
    quotient map restricts to the quotient points and the basepoint.
    """
    k = k_ideal + k_quotient
    I = _discrete_or_trivial(k_ideal, window)
    A = pointed_discrete_augmented(k, window)
    Q = _discrete_or_trivial(k_quotient, window)
    iota = discrete_inclusion(I, A, range(k_ideal), "iota~")
    pi_rows = []
    for j in range(k_quotient):
        row = [0] * (k + 1)
        row[k_ideal + j] = 1
        pi_rows.append(row)
    pi_rows.append([0] * k + [1])
    pi_base = matrix_map(A.base, Q.base, pi_rows, name="pi")
    return I, A, Q, iota, augmented_map(pi_base, A, Q, "pi~")


def _discrete_or_trivial(k, window=None):
    return pointed_discrete_augmented(k, window) if k else trivial_augmented()


def discrete_inclusion(src: AugmentedModel, tgt: AugmentedModel, positions, name="iota~"):
    """Induced map of the ideal of functions supported on ``positions``.

    On unitizations ``(u_1, .., u_m, b)`` goes to the table that is ``u_r`` at
    ``positions[r]`` and ``b`` everywhere else (basepoint included).
    """
    positions = list(positions)
    m = len(positions)
    k = len(tgt.base.zero) - 1
    rows = []
    for i in range(k):
        row = [0] * (m + 1)
        row[positions.index(i) if i in positions else m] = 1
        rows.append(row)
    rows.append([0] * m + [1])
    return augmented_map(matrix_map(src.base, tgt.base, rows, name=name.rstrip("~")), src, tgt, name)


def discrete_direct_sum(k_a, k_b, window=None):
    """``γ: Cu~(C0(U)) ⊕ Cu~(C0(V)) → Cu~(C0(U ⊔ V))`` for discrete ``U``, ``V``."""
    A = _discrete_or_trivial(k_a, window)
    Bm = _discrete_or_trivial(k_b, window)
    T = pointed_discrete_augmented(k_a + k_b, window)
    iA = discrete_inclusion(A, T, range(k_a), "iota_A~")
    iB = discrete_inclusion(Bm, T, range(k_a, k_a + k_b), "iota_B~")
    return direct_sum_iso(A, Bm, T, iA, iB, window)


def trivial_augmented():
    """The augmented model of the zero algebra (``Ã = C``): the kernel is ``{0}``."""
    base = LscModel(FinitePoset(["inf"], basepoint="inf", name="pt"), NAT, name="lsc(pt,nat)")
    cc = CcModel(base)
    return kernel_model(build_ranked(cc, basepoint_rank(cc, -1)), name="aug(0)")


def verify_exact_sequence(iota: CuMap, pi: CuMap, window: Window | None = None, split=True) -> AuditReport:
    """``Im ι = Ker π`` on windows, ``π ∘ ι = 0``, ``ι`` an order embedding, ``π`` onto (split case)."""
    window = window or DEFAULT_WINDOW
    B = window.bound
    I, A, Q = iota.source, iota.target, pi.target
    rep = AuditReport(f"{iota.name} / {pi.name}", window=window.to_dict())
    iw, aw, qw = I.window(B), A.window(B), Q.window(B)
    img = {}
    for b in iw:
        img.setdefault(iota(b), b)
    bad = next(({"x": I.encode(b)} for b in iw if not Q.eq(pi(iota(b)), Q.zero)), None)
    rep.record("composite-zero", FAIL if bad else PASS, len(iw), bad)
    ker = [a for a in aw if Q.eq(pi(a), Q.zero)]
    miss = next((a for a in ker if a not in img), None)
    extra = next((a for a in img if not Q.eq(pi(a), Q.zero)), None)
    if miss is not None:
        rep.record("image=kernel", FAIL, len(aw), {"kernel_element": A.encode(miss)}, "kernel element outside the image")
    elif extra is not None:
        rep.record("image=kernel", FAIL, len(aw), {"image_element": A.encode(extra)}, "image element outside the kernel")
    else:
        rep.record("image=kernel", PASS, len(aw))
    bad = None
    for a in iw:
        for b in iw:
            if I.leq(a, b) != A.leq(iota(a), iota(b)):
                bad = {"a": I.encode(a), "b": I.encode(b)}
                break
        if bad:
            break
    rep.record("order-embedding", FAIL if bad else PASS, len(iw) ** 2, bad)
    if split:
        hit = {pi(a) for a in aw}
        miss = next((c for c in qw if c not in hit), None)
        rep.record("surjective", FAIL if miss is not None else PASS, len(qw),
                   None if miss is None else {"c": Q.encode(miss)})
    return rep


def direct_sum_iso(A: CuModel, Bm: CuModel, target: CuModel, iA: CuMap, iB: CuMap,
                   window: Window | None = None):
    """``γ(x, y) = ι_A(x) + ι_B(y)`` and its isomorphism audit on windows."""
    from .models import SumModel

    window = window or DEFAULT_WINDOW
    S = SumModel(A, Bm)
    gamma = CuMap(S, target, lambda p: target.add(iA(p[0]), iB(p[1])), name="gamma", kind="sum")
    rep = audit_morphism(gamma, window.with_(cap=min(window.cap, 2000)))
    sw, tw = S.window(window.bound), target.window(window.bound)
    pre = {}
    dup = None
    for p in sw:
        v = gamma(p)
        if v in pre and not S.eq(pre[v], p):
            dup = (pre[v], p)
            break
        pre[v] = p
    if dup:
        rep.record("injective", FAIL, len(sw), {"p": S.encode(dup[0]), "q": S.encode(dup[1])})
    else:
        rep.record("injective", PASS, len(sw))
    miss = next((t for t in tw if t not in pre), None)
    rep.record("surjective", FAIL if miss is not None else PASS, len(tw),
               None if miss is None else {"t": target.encode(miss)})
    bad = None
    rng = random.Random(window.seed)
    pairs = [(sw[rng.randrange(len(sw))], sw[rng.randrange(len(sw))]) for _ in range(window.cap)]
    for a, b in pairs:
        if S.leq(a, b) != target.leq(gamma(a), gamma(b)):
            bad = {"a": S.encode(a), "b": S.encode(b)}
            break
    rep.record("order-isomorphism", FAIL if bad else PASS, len(pairs), bad)
    return gamma, rep


def kernel_iso_check(aug: CuModel, model: CuModel, fn, window: Window | None = None) -> AuditReport:
    """Compare an augmented model with a presented model through ``fn`` on windows."""
    window = window or DEFAULT_WINDOW
    B = window.bound
    rep = AuditReport(f"{aug.name} ≅ {model.name}", window=window.to_dict())
    aw, mw = aug.window(B), model.window(B)
    img = [model.canon(fn(a)) for a in aw]
    if sorted(map(repr, img)) != sorted(map(repr, mw)):
        extra = next((aug.encode(a) for a, i in zip(aw, img) if i not in set(mw)), None)
        rep.record("bijection", FAIL, len(aw), {"unmatched": extra, "sizes": [len(aw), len(mw)]})
    else:
        rep.record("bijection", PASS, len(aw))
    bad = None
    for i, a in enumerate(aw):
        for j, b in enumerate(aw):
            if aug.leq(a, b) != model.leq(img[i], img[j]):
                bad = {"a": aug.encode(a), "b": aug.encode(b), "relation": "order"}
                break
            s = aug.add(a, b)
            if not model.eq(model.canon(fn(s)), model.add(img[i], img[j])):
                bad = {"a": aug.encode(a), "b": aug.encode(b), "relation": "addition"}
                break
        if bad:
            break
    rep.record("order-and-addition", FAIL if bad else PASS, len(aw) ** 2, bad)
    return rep
