import json
import subprocess
import sys
from pathlib import Path

import pytest

from cusim.audit import Window, recheck
from cusim.catalog import catalog
from cusim.cli import main
from cusim.models import FinitePoset, ext_power, lsc_poset
from cusim.report import Report, emit, parse_json, to_dot
from cusim.scalars import NAT
from cusim.specfile import SpecError, loads

DATA = Path(__file__).parent / "data"


def test_run_ok_spec_exits_zero(capsysbinary):
    assert main(["run", str(DATA / "ok.toml")]) == 0
    out = json.loads(capsysbinary.readouterr().out)
    assert out["status"] == "pass"


def test_run_sierpinski_exits_one_with_o5_witness(capsysbinary):
    assert main(["run", str(DATA / "sierpinski.toml")]) == 1
    out = json.loads(capsysbinary.readouterr().out)
    o5 = next(r for r in out["tasks"][0]["results"] if r["name"] == "O5(w=0)")
    assert o5["status"] == "fail"
    model = loads((DATA / "sierpinski.toml").read_text()).model("s")
    assert recheck(model, "O5(w=0)", o5["witness"])


def test_malformed_family_exits_three(capsys):
    assert main(["run", str(DATA / "bad_family.toml")]) == 3
    assert "line 2" in capsys.readouterr().err


def test_every_task_kind_runs(capsysbinary):
    assert main(["run", str(DATA / "every_task.toml")]) == 0
    out = json.loads(capsysbinary.readouterr().out)
    assert [t["window"]["task"] for t in out["tasks"]] == [
        "audit", "cc", "augment", "k0", "functionals", "limits", "exactness", "catalog", "morphism"]


@pytest.mark.parametrize("text,line", [
    ("[models.a]\nfamily = 'ext-power'\nk = 0\n", 3),
    ("[models.a]\nfamily = 'cc'\nbase = 'nope'\n", 3),
    ("[[tasks]]\nkind = 'audit'\nmodel = 'm'\n", 1),
    ("[[tasks]]\nkind = 'dance'\n", 1),
    ("[window]\nbound = 2\nwidth = 3\n", 1),
    ("[models.a\n", 1),
])
def test_spec_errors_carry_lines(text, line):
    with pytest.raises(SpecError) as e:
        loads(text)
    assert e.value.line == line


def test_unknown_inline_model_exits_three(capsys):
    assert main(["audit", "ext-nut"]) == 3


def test_verbs_exit_codes(tmp_path):
    out = tmp_path / "r.json"
    assert main(["audit", "ext-nat^2", "--window", "2", "--out", str(out)]) == 0
    assert main(["audit", "sierpinski", "--window", "3", "--out", str(out)]) == 1
    assert main(["cc", "ext-nat", "--window", "3", "--out", str(out)]) == 0
    assert main(["augment", "1", "--out", str(out)]) == 0
    assert main(["catalog", "point", "razak", "--out", str(out)]) == 0
    assert main(["limits", "doubling", "--cc", "--out", str(out)]) == 0
    assert main(["limits", "diagonal-wrong", "--out", str(out)]) == 1
    assert main(["exactness", "2", "1", "--out", str(out)]) == 0
    assert parse_json(out.read_text()).status() == "pass"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cusim", "audit", "ext-nat", "--window", "2", "--format", "markdown"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "| O5 |" in r.stdout


def test_json_round_trip():
    r = Report([catalog("point"), catalog("sierpinski")])
    assert parse_json(emit(r, "json").decode()) == r


def test_dot_chain():
    dot = to_dot(ext_power(NAT, 1), 2)
    assert 'label="(0)"' in dot and 'label="(∞)"' in dot
    assert dot.count("->") == 3
    assert "n0 -> n1;" in dot and "n1 -> n2;" in dot and "n2 -> n3;" in dot


def test_markdown_golden():
    r = Report([catalog("point", Window(bound=3))], title="cusim catalog")
    for t in r.tasks:
        t.window.setdefault("task", "catalog")
    assert emit(r, "markdown").decode() == (DATA / "catalog_point.md").read_text(encoding="utf-8")


def test_failing_witnesses_reevaluate():
    model = lsc_poset(FinitePoset.sierpinski(), NAT)
    r = Report()
    from cusim.audit import audit_axioms
    r.add(audit_axioms(model, Window(bound=3)))
    back = parse_json(emit(r, "json").decode())
    for res in back.tasks[0].results.values():
        if res.status == "fail" and res.name in ("O5", "O5(w=0)", "weak-cancellation", "O4", "order"):
            assert recheck(model, res.name, res.witness)


def test_readme_example_runs(capsysbinary):
    assert main(["run", str(DATA / "readme_example.toml"), "--format", "markdown"]) == 0
