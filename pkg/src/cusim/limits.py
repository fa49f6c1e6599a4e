"""Inductive systems and colimit certificates (conditions L1 and L2).

A system is a finite list of stages with connecting maps, a candidate limit
and cocone maps into it.  Nothing is constructed: the candidate is checked.
After the last listed stage the system is taken to be stationary, so the
"there exists j" of L2 ranges over the listed stages; pass
``open_ended=True`` to report exhaustion as unknown instead of fail.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .audit import DEFAULT_WINDOW, Window, audit_morphism
from .cc import CcModel, cc_map
from .core import FAIL, PASS, UNKNOWN, AuditReport, CuMap, CuModel, Verdict3, identity_map, matrix_map
from .models import VectorModel, ext_power
from .scalars import INF, NAT


@dataclass
class InductiveSystem:
    """Stages ``S_1, ..., S_n``, maps ``α_{i,i+1}``, a candidate ``S`` and ``α_{i,∞}``."""

    stages: list
    maps: list
    candidate: CuModel
    cocone: list
    name: str = "system"
    open_ended: bool = False
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.stages)
        if n == 0:
            raise ValueError("a system needs at least one stage")
        if len(self.maps) != n - 1 or len(self.cocone) != n:
            raise ValueError(f"{n} stages need {n - 1} connecting maps and {n} cocone maps")
        for i, m in enumerate(self.maps):
            if m.source is not self.stages[i] or m.target is not self.stages[i + 1]:
                raise ValueError(f"connecting map {m.name} does not go from stage {i} to stage {i + 1}")
        for i, m in enumerate(self.cocone):
            if m.source is not self.stages[i] or m.target is not self.candidate:
                raise ValueError(f"cocone map {m.name} does not go from stage {i} to the candidate")

    def __len__(self):
        return len(self.stages)

    def connecting(self, i, j):
        """``α_{i,j}`` as a callable (identity when ``i == j``)."""
        def fn(x):
            for k in range(i, j):
                x = self.maps[k](x)
            return x
        return fn

    def truncated(self, n, candidate=None, cocone=None, name=None):
        """The first ``n`` stages, optionally with a new candidate and cocone."""
        return InductiveSystem(self.stages[:n], self.maps[:n - 1], candidate or self.candidate,
                               cocone or self.cocone[:n], name=name or f"{self.name}[:{n}]",
                               open_ended=self.open_ended)


def check_coherence(system: InductiveSystem, window: Window | None = None) -> AuditReport:
    """Connecting and cocone maps are morphisms and ``α_{j,∞} ∘ α_{i,j} = α_{i,∞}``."""
    window = window or Window(bound=3, cap=1500)
    rep = AuditReport(f"{system.name}: coherence", window=window.to_dict())
    for m in list(system.maps) + list(system.cocone):
        sub = audit_morphism(m, window)
        bad = [r for r in sub.results.values() if r.status != PASS]
        if bad:
            rep.record(f"morphism[{m.name}]", bad[0].status, bad[0].samples, bad[0].witness, bad[0].name)
        else:
            rep.record(f"morphism[{m.name}]", PASS, sum(r.samples for r in sub.results.values()))
    S = system.candidate
    bad = None
    count = 0
    for i in range(len(system) - 1):
        step = system.connecting(i, i + 1)
        for x in system.stages[i].window(window.bound):
            count += 1
            if not S.eq(system.cocone[i + 1](step(x)), system.cocone[i](x)):
                bad = {"stage": i, "x": system.stages[i].encode(x)}
                break
        if bad:
            break
    rep.record("cocone-commutes", FAIL if bad else PASS, count, bad)
    return rep


# ---------------------------------------------------------------------------
# L1


def _zero_row_certificate(cumap, s):
    """A coordinate of ``s`` that no image can reach because the defining matrix row is zero."""
    base = cumap.data if cumap.kind == "cc" else cumap
    if base is None or base.kind != "matrix":
        return None
    coords = s if cumap.kind == "cc" else cumap.target.coords(s)
    for r, row in enumerate(base.data):
        if all(v == 0 for v in row) and coords[r] != 0:
            return r
    return None


def _preimage_search_complete(cumap, s, bound):
    """Matrix maps out of an N̄-valued stage: preimage coordinates never exceed those of ``s``."""
    if cumap.kind != "matrix":
        return False
    src = cumap.source
    if getattr(src, "family", None) != NAT:
        return False
    if any(v != int(v) for row in cumap.data for v in row):
        return False
    finite = [abs(v) for v in cumap.target.coords(s) if v != INF]
    return max(finite + [0]) <= bound


def l1_witness(system: InductiveSystem, s, bound) -> Verdict3:
    """A stagewise chain ``s_i`` with ``α_{i,i+1}(s_i) <= s_{i+1}`` and ``sup α_{i,∞}(s_i) = s``.

    The tail after the last stage is the approximant chain of ``s_n``, whose
    image has supremum ``α_{n,∞}(s_n)`` by M1 of the last cocone map.
    """
    S = system.candidate
    n = len(system)
    last, top = system.stages[-1], system.cocone[-1]
    t = next((x for x in last.window(bound) if S.eq(top(x), s)), None)
    if t is None:
        r = _zero_row_certificate(top, s)
        if r is not None:
            return Verdict3.false("coordinate outside every image", s=S.encode(s), coordinate=r)
        if _preimage_search_complete(top, s, bound):
            return Verdict3.false("no preimage at the last stage", s=S.encode(s))
        return Verdict3.unknown("no preimage in the window", s=S.encode(s))
    chain = [t]
    for i in range(n - 2, -1, -1):
        Si, nxt = system.stages[i], chain[0]
        cands = [x for x in Si.window(bound)
                 if Si.leq(Si.zero, x) or not Si.positively_ordered]
        ok = [x for x in cands if S.leq(system.cocone[i](x), s) and
              system.stages[i + 1].leq(system.maps[i](x), nxt)]
        exact = [x for x in ok if S.eq(system.cocone[i](x), s)]
        pick = exact[0] if exact else max(ok, key=lambda x: _size(S, system.cocone[i](x)), default=Si.zero)
        chain.insert(0, pick)
    images = [system.cocone[i](x) for i, x in enumerate(chain)]
    if not all(S.leq(a, b) for a, b in zip(images, images[1:])) or not S.eq(images[-1], s):
        return Verdict3.unknown("greedy preimage chain does not re-evaluate", s=S.encode(s))
    return Verdict3.true("preimage chain", s=S.encode(s),
                         chain=[system.stages[i].encode(x) for i, x in enumerate(chain)])


def _size(S, v):
    total = 0
    for c in (S.coords(v) if hasattr(S, "coords") else v):
        total += 10 ** 6 if c == INF else c
    return total


def verify_L1(system: InductiveSystem, window: Window | None = None) -> AuditReport:
    window = window or Window(bound=3)
    rep = AuditReport(f"{system.name}: L1", window=window.to_dict())
    first_unknown = None
    els = system.candidate.window(window.bound)
    for count, s in enumerate(els, 1):
        v = l1_witness(system, s, window.bound)
        if v.is_false:
            rep.record("L1", FAIL, count, v.witness, v.reason)
            return rep
        if v.is_unknown and first_unknown is None:
            first_unknown = v.witness
    if first_unknown:
        rep.record("L1", UNKNOWN, len(els), first_unknown, "no preimage in the window")
    else:
        rep.record("L1", PASS, len(els))
    return rep


# ---------------------------------------------------------------------------
# L2


def l2_index(system: InductiveSystem, i, s1, s, t) -> Verdict3:
    """Least ``j >= i`` with ``α_{i,j}(s1) <= α_{i,j}(t)`` given ``α_{i,∞}(s) <= α_{i,∞}(t)``."""
    for j in range(i, len(system)):
        f = system.connecting(i, j)
        if system.stages[j].leq(f(s1), f(t)):
            return Verdict3.true("comparison reached", j=j)
    Si = system.stages[i]
    wit = {"stage": i, "s1": Si.encode(s1), "s": Si.encode(s), "t": Si.encode(t)}
    if system.open_ended:
        return Verdict3.unknown("listed stages exhausted", **wit)
    return Verdict3.false("no listed stage compares s1 with t", **wit)


def verify_L2(system: InductiveSystem, window: Window | None = None) -> AuditReport:
    window = window or Window(bound=3)
    rep = AuditReport(f"{system.name}: L2", window=window.to_dict())
    S = system.candidate
    rng = random.Random(window.seed)
    count, first_unknown, later = 0, None, None
    for i, Si in enumerate(system.stages):
        els = Si.window(window.bound)
        img = [system.cocone[i](x) for x in els]
        triples = []
        for a, b in itertools.product(range(len(els)), repeat=2):
            if S.leq(img[a], img[b]):
                triples.extend((w, a, b) for w in range(len(els)) if Si.way_below(els[w], els[a]))
        if len(triples) > window.cap:
            triples = rng.sample(triples, window.cap)
        for w, a, b in triples:
            count += 1
            v = l2_index(system, i, els[w], els[a], els[b])
            if v.is_false:
                rep.record("L2", FAIL, count, v.witness, v.reason)
                return rep
            if v.is_unknown:
                first_unknown = first_unknown or v.witness
            elif v.witness["j"] > i and later is None:
                later = {"stage": i, "j": v.witness["j"], "s1": Si.encode(els[w]),
                         "s": Si.encode(els[a]), "t": Si.encode(els[b])}
    if first_unknown:
        rep.record("L2", UNKNOWN, count, first_unknown)
    else:
        rep.record("L2", PASS, count, later, "needed a later stage" if later else "")
    return rep


def verify_limit(system: InductiveSystem, window: Window | None = None) -> AuditReport:
    """Coherence, L1 and L2 in one report."""
    rep = AuditReport(system.name, window=(window or Window(bound=3)).to_dict())
    for sub in (check_coherence(system, window), verify_L1(system, window), verify_L2(system, window)):
        for r in sub.results.values():
            rep.add(r)
    return rep


# ---------------------------------------------------------------------------
# cc continuity


def cc_system(system: InductiveSystem, gate_window=None) -> InductiveSystem:
    """Apply the cc functor to every stage, map, candidate and cocone map."""
    ccs = [CcModel(S, gate_window=gate_window) for S in system.stages]
    cand = CcModel(system.candidate, gate_window=gate_window)
    maps = [cc_map(m, ccs[i], ccs[i + 1]) for i, m in enumerate(system.maps)]
    cocone = [cc_map(m, ccs[i], cand) for i, m in enumerate(system.cocone)]
    return InductiveSystem(ccs, maps, cand, cocone, name=f"{system.name}_cc", open_ended=system.open_ended)


def verify_cc_continuity(system: InductiveSystem, window: Window | None = None) -> AuditReport:
    """Run L1 and L2 on the cc image of the system against the cc of the candidate."""
    window = window or Window(bound=3)
    image = cc_system(system)
    rep = AuditReport(image.name, window=window.to_dict())
    for sub in (verify_L1(image, window), verify_L2(image, window)):
        for r in sub.results.values():
            rep.add(r)
    return rep


def check_functoriality(f: CuMap, g: CuMap, window: Window | None = None) -> AuditReport:
    """``(g ∘ f)_cc = g_cc ∘ f_cc`` on window classes."""
    window = window or Window(bound=3)
    A, B, C = (CcModel(M, gate=False) for M in (f.source, f.target, g.target))
    fc, gc = cc_map(f, A, B), cc_map(g, B, C)
    gf = cc_map(g.compose(f), A, C)
    rep = AuditReport(f"({g.name}∘{f.name})_cc", window=window.to_dict())
    els = A.window(window.bound)
    bad = next((c for c in els if not C.eq(gf(c), gc(fc(c)))), None)
    rep.record("functorial", FAIL if bad is not None else PASS, len(els),
               None if bad is None else {"class": A.encode(bad)})
    return rep


# ---------------------------------------------------------------------------
# example systems


def stationary_system(model=None, stages=2):
    model = model or ext_power(NAT, 1)
    ids = [identity_map(model) for _ in range(stages - 1)]
    return InductiveSystem([model] * stages, ids, model, [identity_map(model) for _ in range(stages)],
                           name=f"stationary({model.name})")


def _nat(k, name=None):
    return VectorModel(NAT, k, name=name)


def diagonal_system(wrong=False):
    """``N̄ → N̄²`` by the diagonal; candidate ``N̄²`` (or the wrong ``N̄³``)."""
    S1, S2 = _nat(1, "N̄"), _nat(2, "N̄²")
    diag = matrix_map(S1, S2, [[1], [1]], name="diag")
    if not wrong:
        return InductiveSystem([S1, S2], [diag], S2,
                               [matrix_map(S1, S2, [[1], [1]], name="diag∞"), identity_map(S2)],
                               name="diagonal")
    S3 = _nat(3, "N̄³")
    return InductiveSystem([S1, S2], [diag], S3,
                           [matrix_map(S1, S3, [[1], [1], [0]], name="diag∞"),
                            matrix_map(S2, S3, [[1, 0], [0, 1], [0, 0]], name="incl∞")],
                           name="diagonal-wrong-candidate")


def doubling_system():
    """``N̄ →(×2) N̄`` with the second stage as candidate."""
    S1, S2 = _nat(1, "N̄(1)"), _nat(1, "N̄(2)")
    dbl = matrix_map(S1, S2, [[2]], name="double")
    return InductiveSystem([S1, S2], [dbl], S2, [matrix_map(S1, S2, [[2]], name="double∞"), identity_map(S2)],
                           name="doubling")


def merging_system(truncate=False):
    """``N̄² →(a+b) N̄`` with the second stage as candidate.

    At the first stage ``(1, 0)`` and ``(0, 1)`` have equal images but are
    incomparable; the comparison appears only at the second stage.  The
    truncated version drops that stage and keeps the candidate.
    """
    S1, S2 = _nat(2, "N̄²"), _nat(1, "N̄")
    c1 = matrix_map(S1, S2, [[1, 1]], name="sum∞")
    if truncate:
        return InductiveSystem([S1], [], S2, [c1], name="merging-truncated")
    merge = matrix_map(S1, S2, [[1, 1]], name="merge")
    return InductiveSystem([S1, S2], [merge], S2, [c1, identity_map(S2)], name="merging")
