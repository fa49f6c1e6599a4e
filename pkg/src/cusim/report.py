"""Report objects and their json / markdown / dot renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import networkx as nx

from .audit import overall, relation_matrices
from .core import EXPECTED_FAIL, FAIL, PASS, SKIPPED, UNKNOWN, AuditReport

FORMATS = ("json", "markdown", "dot")

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_SPEC = 0, 1, 2, 3


@dataclass
class Report:
    """An ordered list of task reports."""

    tasks: list = field(default_factory=list)
    title: str = "cusim report"

    def add(self, rep: AuditReport, task=None):
        if task is not None:
            rep.window.setdefault("task", task)
        self.tasks.append(rep)
        return rep

    def status(self):
        # the pureness predicates are informational and never decide the exit code
        sts = [overall(t) for t in self.tasks]
        if FAIL in sts:
            return FAIL
        if UNKNOWN in sts:
            return UNKNOWN
        return PASS

    def exit_code(self):
        return {PASS: EXIT_OK, FAIL: EXIT_FAIL, UNKNOWN: EXIT_UNKNOWN}[self.status()]

    def to_dict(self):
        return {"title": self.title, "status": self.status(), "tasks": [t.to_dict() for t in self.tasks]}

    @classmethod
    def from_dict(cls, d):
        return cls([AuditReport.from_dict(t) for t in d["tasks"]], d.get("title", "cusim report"))

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_dict() == other.to_dict()


def _jsonable(v):
    if isinstance(v, float):
        return "inf" if v == float("inf") else v
    return str(v)


def to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False, default=_jsonable) + "\n"


def parse_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))


_ICON = {PASS: "pass", FAIL: "**fail**", UNKNOWN: "unknown", EXPECTED_FAIL: "expected-fail", SKIPPED: "skipped"}


def _cell(v):
    if v is None:
        return ""
    s = json.dumps(v, sort_keys=True, ensure_ascii=False, default=_jsonable)
    return s.replace("|", "\\|")


def to_markdown(report: Report) -> str:
    out = [f"# {report.title}", "", f"Overall: **{report.status()}**", ""]
    for t in report.tasks:
        out.append(f"## {t.subject}")
        out.append("")
        exp = t.window.get("expected")
        if exp:
            out.append(f"Expected structure: {exp}")
            out.append("")
        out.append("| predicate | verdict | samples | witness | note |")
        out.append("|---|---|---|---|---|")
        for r in t.results.values():
            out.append(f"| {r.name} | {_ICON.get(r.status, r.status)} | {r.samples} | {_cell(r.witness)} | "
                       f"{r.note.replace('|', '/')} |")
        out.append("")
        win = {k: v for k, v in sorted(t.window.items()) if k != "expected"}
        out.append("Window: " + ", ".join(f"{k}={v}" for k, v in win.items()))
        out.append("")
    return "\n".join(out)


def hasse_graph(model, bound):
    """Hasse diagram of the window order as a networkx DiGraph (edges point upward)."""
    els = model.window(bound)
    L, _ = relation_matrices(model, els)
    g = nx.DiGraph()
    for i in range(len(els)):
        g.add_node(i, label=model.fmt(els[i]))
    for i in range(len(els)):
        for j in range(len(els)):
            if i != j and L[i, j] and not L[j, i]:
                g.add_edge(i, j)
    return nx.transitive_reduction(g) if g.number_of_edges() else g, els


def to_dot(model, bound=2, name=None) -> str:
    g, els = hasse_graph(model, bound)
    title = (name or model.name).replace('"', "'")
    out = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(len(els)):
        label = model.fmt(els[i]).replace('"', "'")
        out.append(f'  n{i} [label="{label}"];')
    for i, j in sorted(g.edges):
        out.append(f"  n{i} -> n{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def emit(report: Report, fmt="json", models=(), bound=2) -> bytes:
    """Render ``report``; ``dot`` renders the Hasse diagrams of ``models`` instead."""
    if fmt == "json":
        return to_json(report).encode("utf-8")
    if fmt == "markdown":
        return to_markdown(report).encode("utf-8")
    if fmt == "dot":
        return "".join(to_dot(m, bound) for m in models).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
