from fractions import Fraction

import pytest

from cusim.audit import Window, audit_axioms
from cusim.core import PASS
from cusim.models import (FinitePoset, direct_sum, ext_power, glued_simple_pure, lsc_poset,
                          pointed_kernel_presentation, razak_model)
from cusim.presentations import presentation_glued
from cusim.scalars import INF, INT, NAT


def test_compact_window():
    assert sorted(ext_power(NAT, 1).compact_window(2)) == [(0,), (1,), (2,)]


def test_way_below_with_infinite_coordinate():
    assert ext_power(NAT, 2).way_below((1, 1), (1, INF))


def test_antichain_matches_power():
    lsc = lsc_poset(FinitePoset.antichain(3), NAT)
    power = ext_power(NAT, 3)
    els = power.window(2)
    assert sorted(lsc.window(2)) == sorted(els)
    assert all(lsc.leq(a, b) == power.leq(a, b) for a in els[:30] for b in els[:30])


def test_sierpinski_tables():
    m = lsc_poset(FinitePoset.sierpinski(), NAT)
    assert m.contains((0, 10))
    assert not m.contains((10, 0))


def test_pointed_kernel_presentation():
    m = pointed_kernel_presentation(FinitePoset.antichain(2, basepoint=True), INT)
    assert m.contains((3, -1, 0))
    assert len(m.zero) == 3
    trivial = pointed_kernel_presentation(FinitePoset.antichain(0, basepoint=True), INT)
    assert trivial.window(3) == [trivial.zero]


def test_razak_order_facts():
    m = razak_model()
    assert m.leq(m.soft(0), m.compact())
    assert not m.leq(m.compact(), m.soft(0))
    assert m.zero == m.compact()


def test_glued_rules_d1():
    m = glued_simple_pure(1, k=1)
    one = m.compact(1)
    assert m.leq(one, m.soft(Fraction(3, 2)))
    assert m.leq(m.soft(Fraction(1, 2)), one)
    assert not m.leq(m.soft(Fraction(3, 2)), one)


def test_r2_presentation_rules():
    m = presentation_glued("r2")
    f = ("f", (0, 2))
    assert m.add(("v", 3), f) == f
    assert not m.leq(("v", 2), ("v", 3))
    assert m.leq(("v", -5), f)


def test_direct_sum():
    s = direct_sum(ext_power(INT, 1), ext_power(INT, 1))
    z2 = ext_power(INT, 2)
    assert s.zero == ((0,), (0,))
    for a, b in [(((1,), (2,)), ((1,), (INF,))), (((1,), (2,)), ((1,), (2,))), (((INF,), (0,)), ((INF,), (1,)))]:
        assert s.way_below(a, b) == z2.way_below(a[0] + a[1], b[0] + b[1])


@pytest.mark.parametrize("d,k", [(0, 1), (1, 1), (1, 2), (2, 1)])
def test_glued_models_pass_axioms(d, k):
    rep = audit_axioms(glued_simple_pure(d, k=k), Window(bound=2))
    assert all(rep[n].status == PASS for n in ("O0", "O1", "O2", "O3", "O4", "O5(w=0)", "weak-cancellation"))
