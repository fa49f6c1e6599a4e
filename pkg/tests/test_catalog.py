import pytest

from cusim.audit import Window
from cusim.catalog import DEFAULT_ENTRIES, catalog, parse_name
from cusim.core import EXPECTED_FAIL, FAIL, PASS, UNKNOWN


@pytest.mark.parametrize("name", DEFAULT_ENTRIES + ("pointed-discrete-3", "simple-pure(2,1)"))
def test_entries_meet_expectations(name):
    rep = catalog(name)
    bad = [r.name for r in rep.results.values() if r.status in (FAIL, UNKNOWN)
           and r.name not in ("almost-unperforation", "almost-divisibility")]
    assert not bad, rep.lines()


def test_point_entry():
    rep = catalog("point")
    assert rep["compact-group=Z"].status == PASS
    assert rep["iso[Z̄] bijection"].status == PASS


def test_razak_entry():
    rep = catalog("razak")
    for key in ("soft 0 <= compact 0", "compact 0 not<= soft 0", "every R̄ element soft", "compact-group=0"):
        assert rep[key].status == PASS


def test_pointed_discrete_two_is_zbar_squared():
    rep = catalog("pointed-discrete-2", Window(bound=2))
    assert rep["iso[Z̄^2] bijection"].status == PASS
    assert rep["iso[Z̄^2] order-and-addition"].status == PASS


def test_stand_in_audits_are_expected_fail():
    rep = catalog("r2-presentation")
    assert rep["axioms"].status == EXPECTED_FAIL
    assert "O2" in rep["axioms"].note


def test_names():
    assert parse_name("simple-pure-2-1") == ("simple-pure(d,k)", {"d": 2, "k": 1})
    with pytest.raises(KeyError):
        catalog("torus")
