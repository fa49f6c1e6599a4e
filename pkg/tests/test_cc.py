import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cusim.audit import Window
from cusim.cc import (CLOSED, SEARCH, SRM, CcModel, GateError, cc_below, cc_eq, cc_map, cc_sup, cc_way_below,
                      chain_lift, positive_lift, srm_decide)
from cusim.core import Chain, identity_map, matrix_map
from cusim.models import FinitePoset, ext_power, lsc_poset
from cusim.scalars import INF, NAT


@pytest.fixture(scope="module")
def zbar():
    return CcModel(ext_power(NAT, 1))


def p(x, e):
    return ((x,), (e,))


def test_below_examples(zbar):
    assert cc_below(zbar, p(3, 2), p(5, 4)).is_true
    assert cc_below(zbar, p(3, 2), p(5, 4), strategy=SEARCH).is_true
    assert cc_below(zbar, p(INF, 0), p(7, 0)).is_false
    assert cc_below(zbar, p(INF, 0), p(7, 0), strategy=SEARCH).is_false
    assert cc_below(zbar, p(0, 0), p(0, 0)).is_true


def test_equivalence_examples(zbar):
    assert cc_eq(zbar, p(5, 2), p(4, 1)).is_true
    assert cc_eq(zbar, p(INF, 0), p(INF, 5)).is_true
    assert cc_eq(zbar, p(INF, 0), p(INF, 5), strategy=SEARCH).is_true


def test_class_and_lift(zbar):
    assert zbar.cls((5,), (2,)) == (3,)
    assert zbar.cls((4,)) == (4,)
    n2 = CcModel(ext_power(NAT, 2))
    assert n2.cls((INF, 4), (0, 1)) == (INF, 3)
    assert positive_lift(zbar, p(5, 2)).witness["lift"] == [3]


def test_sup_and_way_below(zbar):
    ramp = Chain(((1,), (2,)), "ramp", (INF,))
    s, v = cc_sup(zbar, ramp)
    assert s == (INF,) and v.is_true
    cc_sup_formula = Chain((), "formula", (INF,), formula=lambda n: (n,))
    s, v = cc_sup(zbar, cc_sup_formula)
    assert s == (INF,) and v.is_true
    assert cc_way_below(zbar, (3,), (3,)).is_true
    assert cc_way_below(zbar, (INF,), (INF,)).is_false


def test_chain_lift_examples(zbar):
    v = chain_lift(zbar, (2,), (3,), (5,))
    assert v.is_true and v.witness["z"] == [5]
    n2 = CcModel(ext_power(NAT, 2))
    v = chain_lift(n2, (1, 0), (2, 0), (2, 7))
    assert v.is_true and v.witness["z"] == [2, 7]


def test_cc_maps():
    nat = ext_power(NAT, 1)
    dbl = cc_map(matrix_map(nat, nat, [[2]], name="double"))
    assert [dbl((n,)) for n in (-3, 0, 2, INF)] == [(-6,), (0,), (4,), (INF,)]
    ident = cc_map(identity_map(nat))
    assert all(ident((n,)) == (n,) for n in (-2, 0, 5, INF))
    n2 = ext_power(NAT, 2)
    proj = cc_map(matrix_map(n2, nat, [[1, 0]], name="proj"))
    assert proj((-2, INF)) == (-2,) and proj((INF, -1)) == (INF,)


def test_srm_examples(zbar):
    assert srm_decide(zbar, 1, p(3, 0), p(5, 0))
    assert not srm_decide(zbar, 1, p(INF, 0), p(5, 0))
    assert srm_decide(zbar, 1, p(0, 0), p(0, 0))
    srm = CcModel(ext_power(NAT, 1), strategy=SRM)
    assert cc_below(srm, p(3, 0), p(5, 0)).is_true


def test_gate_rejects_sierpinski():
    with pytest.raises(GateError):
        CcModel(lsc_poset(FinitePoset.sierpinski(), NAT))


def test_closed_form_agrees_with_search_on_window(zbar):
    els = zbar.window(3)
    for a, b in itertools.product(els, repeat=2):
        pa, pb = zbar.pair(a), zbar.pair(b)
        assert cc_below(zbar, pa, pb, strategy=CLOSED).value == cc_below(zbar, pa, pb, strategy=SEARCH).value


finite = st.integers(min_value=0, max_value=9)
value = st.one_of(finite, st.just(INF))


@settings(max_examples=150, deadline=None)
@given(x=value, e=finite, y=value, f=finite)
def test_srm_matches_closed_form_property(zbar, x, e, y, f):
    pa, pb = p(x, e), p(y, f)
    assert srm_decide(zbar, 1, pa, pb) == cc_below(zbar, pa, pb, strategy=CLOSED).value


@settings(max_examples=100, deadline=None)
@given(x=value, e=finite, y=value, f=finite)
def test_cc_order_is_difference_order(zbar, x, e, y, f):
    a = INF if x == INF else x - e
    b = INF if y == INF else y - f
    assert cc_below(zbar, p(x, e), p(y, f)).value == (b == INF or (a != INF and a <= b))
