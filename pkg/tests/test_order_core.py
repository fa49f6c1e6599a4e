from fractions import Fraction

import pytest

from cusim import audit
from cusim.audit import Window, audit_axioms, audit_morphism, is_full, o5_search, recheck
from cusim.core import FAIL, PASS, Chain, CuMap, NonMonotoneChain, Verdict3, identity_map, matrix_map
from cusim.models import FinitePoset, VectorModel, ext_power, lsc_poset, ray_model
from cusim.scalars import INF, INT, NAT, REAL


@pytest.fixture
def nat():
    return ext_power(NAT, 1)


def test_leq_componentwise():
    assert audit.leq(ext_power(NAT, 2), (1, INF), (2, INF))
    assert not audit.leq(ext_power(NAT, 1), (INF,), (5,))
    assert not audit.leq(ext_power(INT, 3), (0, -1, INF), (0, 0, 3))


def test_way_below_scalars(nat):
    assert audit.way_below(nat, (3,), (3,))
    assert not audit.way_below(nat, (INF,), (INF,))


def test_way_below_ray_needs_strict_inequality():
    rays = ray_model(2)
    assert not audit.way_below(rays, (Fraction(1), Fraction(2)), (Fraction(1), Fraction(3)))


def test_sup_chain_examples(nat):
    assert audit.sup_chain(nat, Chain(((1,), (2,), (3,)), "ramp", (INF,))) == (INF,)
    z2 = ext_power(INT, 2)
    assert audit.sup_chain(z2, Chain(((4, -1),))) == (4, -1)
    real = ext_power(REAL, 1)
    ch = Chain((), "formula", (Fraction(2),), formula=lambda n: (2 - Fraction(1, n),))
    assert audit.sup_chain(real, ch) == (2,)


def test_sup_chain_rejects_decreasing_prefix(nat):
    with pytest.raises(NonMonotoneChain):
        audit.sup_chain(nat, Chain(((3,), (1,))))


def test_ext_nat_cubed_passes_all_axioms():
    rep = audit_axioms(ext_power(NAT, 3), Window(bound=2))
    for name in audit.AXIOMS + ("weak-cancellation",):
        assert rep[name].status == PASS, name


def test_sierpinski_o5_fails_with_spec_witness():
    model = lsc_poset(FinitePoset.sierpinski(), NAT)
    v = o5_search(model, (0, 10), (3, 10), (5, 10), bound=10)
    assert v.is_false
    rep = audit_axioms(model, Window(bound=3), predicates=["O5(w=0)"])
    r = rep["O5(w=0)"]
    assert r.status == FAIL
    assert recheck(model, "O5(w=0)", r.witness)


def test_ray_model_o0_passes():
    rep = audit_axioms(ray_model(1), Window(bound=2), predicates=["O0"])
    assert rep["O0"].status == PASS


def test_identity_morphism_passes():
    rep = audit_morphism(identity_map(ext_power(INT, 2)), Window(bound=2))
    assert all(r.status == PASS for r in rep.results.values())


def test_doubling_morphism_passes(nat):
    rep = audit_morphism(matrix_map(nat, nat, [[2]], name="double"), Window(bound=3))
    assert all(r.status == PASS for r in rep.results.values())


def test_collapsing_map_fails_m1(nat):
    f = CuMap(nat, nat, lambda x: x if x[0] == INF else (0,), name="collapse")
    rep = audit_morphism(f, Window(bound=3))
    assert rep["M1"].status == FAIL


def test_is_full():
    assert is_full(ext_power(NAT, 1), (1,)).is_true
    assert is_full(ext_power(NAT, 2), (1, 0)).is_false
    assert is_full(ext_power(NAT, 1), (0,)).is_false


def test_verdict3_unknown_refuses_bool():
    v = Verdict3.unknown("search exhausted")
    with pytest.raises(Exception):
        bool(v)
    assert (Verdict3.true() & Verdict3.false()).is_false
