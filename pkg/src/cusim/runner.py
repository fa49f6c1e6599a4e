"""Task execution shared by task-file runs and the CLI verbs."""

from __future__ import annotations

import itertools
import re

from .audit import Window, audit_axioms, audit_morphism
from .augmented import (check_weak_cancellation, compact_group, discrete_direct_sum, discrete_split,
                        kernel_iso_check, point_augmented, pointed_discrete_augmented,
                        verify_exact_sequence)
from .catalog import catalog
from .cc import CLOSED, SEARCH, CcModel, GateError, cc_below, srm_decide
from .core import FAIL, PASS, AuditReport
from .functionals import audit_functional
from .limits import (diagonal_system, doubling_system, merging_system, stationary_system, verify_cc_continuity,
                     verify_limit)
from .models import (FinitePoset, VectorModel, glued_simple_pure, lsc_poset, pointed_kernel_presentation,
                     razak_model, truncated_nat)
from .presentations import dyadic_presentation, presentation_glued
from .scalars import family_tag

SYSTEMS = {
    "stationary": stationary_system,
    "diagonal": diagonal_system,
    "diagonal-wrong": lambda: diagonal_system(wrong=True),
    "doubling": doubling_system,
    "merging": merging_system,
    "merging-truncated": lambda: merging_system(truncate=True),
}


def model_from_expr(expr):
    """Inline model names for the CLI: ``ext-nat^2``, ``sierpinski``, ``glued(1,2)``, ...

    Raises KeyError for unrecognised names.
    """
    e = expr.strip()
    m = re.fullmatch(r"(ext-nat|ext-int|ext-real|nat|int|real)(?:\^(\d+))?", e)
    if m:
        return VectorModel(family_tag(m.group(1)), int(m.group(2) or 1))
    if e == "point":
        return point_augmented()
    m = re.fullmatch(r"discrete-(\d+)", e)
    if m:
        return CcModel(lsc_poset(FinitePoset.antichain(int(m.group(1)))))
    if e == "sierpinski":
        return lsc_poset(FinitePoset.sierpinski())
    m = re.fullmatch(r"(?:glued|simple-pure)\((\d+),\s*(\d+)\)", e)
    if m:
        return glued_simple_pure(int(m.group(1)), k=int(m.group(2)))
    if e == "razak":
        return razak_model()
    if e in ("sphere-presentation", "r2-presentation"):
        return presentation_glued(e.split("-")[0])
    m = re.fullmatch(r"dyadic-presentation(?:-(\d+))?", e)
    if m:
        return dyadic_presentation(int(m.group(1) or 3))
    m = re.fullmatch(r"pointed-kernel-(\d+)", e)
    if m:
        return pointed_kernel_presentation(FinitePoset.antichain(int(m.group(1)), basepoint=True))
    m = re.fullmatch(r"pointed-discrete-(\d+)", e)
    if m:
        return pointed_discrete_augmented(int(m.group(1)))
    m = re.fullmatch(r"truncated-(\d+)", e)
    if m:
        return truncated_nat(int(m.group(1)))
    raise KeyError(f"unknown model expression {expr!r}")


# ---------------------------------------------------------------------------
# tasks


def task_audit(model, window):
    return audit_axioms(model, window)


def task_cc(base, window, strategy=None, search_bound=None):
    rep = AuditReport(f"cc({base.name})", window=window.to_dict())
    try:
        cc = CcModel(base, strategy=strategy, search_bound=search_bound or window.search_bound)
    except GateError as e:
        rep.record("cc-gate", FAIL, 0, None, str(e))
        return rep
    rep.record("cc-gate", PASS, 1)
    for r in audit_axioms(cc, window).results.values():
        rep.add(r)
    if cc.closed:
        _closed_vs_search(cc, window, rep)
    return rep


def _closed_vs_search(cc, window, rep):
    """Closed form and bounded search agree on every pair of window classes (and srm(1) when unital)."""
    els = cc.window(window.bound)
    pairs = [(cc.pair(a), cc.pair(b)) for a in els for b in els]
    bad = None
    for p, q in pairs:
        c = cc_below(cc, p, q, strategy=CLOSED).value
        s = cc_below(cc, p, q, strategy=SEARCH, search_bound=window.search_bound).value
        if c != s:
            bad = {"p": [cc.base.encode(t) for t in p], "q": [cc.base.encode(t) for t in q],
                   "closed": c, "search": s}
            break
    rep.record("closed-vs-search", FAIL if bad else PASS, len(pairs), bad)
    if cc.base.order_unit is not None:
        bad = None
        for p, q in pairs:
            if srm_decide(cc, 1, p, q) != cc_below(cc, p, q, strategy=CLOSED).value:
                bad = {"p": [cc.base.encode(t) for t in p], "q": [cc.base.encode(t) for t in q]}
                break
        rep.record("srm(1)-vs-closed", FAIL if bad else PASS, len(pairs), bad)


def task_augment(k, window):
    """Kernel of rank for ``k`` discrete points and its comparison with ``Lsc_0``."""
    aug = pointed_discrete_augmented(k)
    rep = AuditReport(f"augment(pointed-discrete-{k})", window=window.to_dict())
    lsc0 = pointed_kernel_presentation(FinitePoset.antichain(k, basepoint=True))
    for name, sub in (("kernel≅Lsc_0 ", kernel_iso_check(aug, lsc0, lambda c: c, window)),
                      ("compacts ", compact_group(aug, window)),
                      ("", check_weak_cancellation(aug, window))):
        for r in sub.results.values():
            r.name = name + r.name
            rep.add(r)
    rep.window["group"] = compact_group(aug, window).window["group"]
    _way_below_agrees(aug, window, rep)
    return rep


def _way_below_agrees(aug, window, rep):
    els = aug.window(window.bound)
    bad = next(({"a": aug.encode(a), "b": aug.encode(b)} for a, b in itertools.product(els, repeat=2)
                if aug.way_below(a, b) != aug.cc.way_below(a, b)), None)
    rep.record("way-below=ambient", FAIL if bad else PASS, len(els) ** 2, bad)


def task_k0(model, window):
    return compact_group(model, window)


def task_functional(lam, model, window):
    return audit_functional(lam, model, window)


def task_limits(system, window, cc=False):
    return verify_cc_continuity(system, window) if cc else verify_limit(system, window)


def task_exactness(k_ideal, k_quotient, window):
    rep = AuditReport(f"exactness({k_ideal}+{k_quotient})", window=window.to_dict())
    _, _, _, iota, pi = discrete_split(k_ideal, k_quotient)
    for r in verify_exact_sequence(iota, pi, window).results.values():
        rep.add(r)
    _, g = discrete_direct_sum(k_ideal, k_quotient, window)
    for r in g.results.values():
        r.name = "gamma " + r.name
        rep.add(r)
    return rep


def task_catalog(name, window):
    return catalog(name, window)


def task_morphism(cumap, window):
    return audit_morphism(cumap, window)


def run_spec(spec, window=None):
    """Execute the task list of a parsed task file in order; returns a :class:`~cusim.report.Report`."""
    from .report import Report

    window = window or spec.window
    out = Report(title="cusim run")
    for t in spec.tasks:
        kind = t["kind"]
        w = window.with_(**{k: t[k] for k in ("bound", "search_bound") if k in t})
        if kind == "audit":
            rep = task_audit(spec.model(t["model"]), w)
        elif kind == "cc":
            rep = task_cc(spec.model(t["model"]), w, strategy=t.get("strategy"))
        elif kind == "augment":
            rep = task_augment(int(t.get("points", 1)), w)
        elif kind == "k0":
            rep = task_k0(spec.model(t["model"]), w)
        elif kind == "functionals":
            model_name = t.get("model") or spec.data["functionals"][t["functional"]]["model"]
            rep = task_functional(spec.functionals[t["functional"]], spec.model(model_name), w)
        elif kind == "limits":
            rep = task_limits(spec.systems[t["system"]], w, cc=bool(t.get("cc", False)))
        elif kind == "exactness":
            rep = task_exactness(int(t.get("ideal", 2)), int(t.get("quotient", 1)), w)
        elif kind == "catalog":
            rep = task_catalog(t["name"], w)
        elif kind == "morphism":
            rep = task_morphism(spec.maps[t["map"]], w)
        else:  # validated by the task-file loader
            raise AssertionError(kind)
        out.add(rep, task=kind)
    return out
