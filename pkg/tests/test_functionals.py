from fractions import Fraction

import pytest

from cusim.audit import Window
from cusim.augmented import point_augmented, pointed_discrete_augmented
from cusim.cc import CcModel
from cusim.core import FAIL, PASS
from cusim.functionals import (Functional, FunctionalSequence, admissible_absorbers, audit_functional,
                               check_convergence, evaluate, extend, factor_check, hat)
from cusim.models import SumModel, ext_power, glued_simple_pure, razak_model, truncated_nat
from cusim.scalars import INF, INT, NAT

W = Window(bound=2)


def test_evaluate_linear():
    z2 = ext_power(INT, 2)
    assert evaluate(Functional((1, 2)), z2, (3, 1)) == 5
    assert evaluate(Functional((1, 2)), z2, (0, 0)) == 0
    assert evaluate(Functional((INF, 0)), z2, (1, 0)) == INF
    assert evaluate(Functional((INF, 1)), z2, (0, 3)) == 3


def test_extend_identity_on_zbar():
    zbar = ext_power(INT, 1)
    idf = Functional((1,))
    assert extend(idf, zbar, (-3,)) == -3
    assert all(extend(idf, zbar, (-n,)) == -n for n in range(8))
    # the absorber z = 5 gives the same value
    assert evaluate(idf, zbar, (2,)) - evaluate(idf, zbar, (5,)) == -3


def test_extend_on_kernel_uses_two_absorbers():
    aug = pointed_discrete_augmented(2)
    lam = Functional((1, 1, 0))
    assert len(admissible_absorbers(aug, (-1, 2, 0))) == 2
    assert extend(lam, aug, (-1, 2, 0)) == 1
    assert extend(lam, aug, (2, 1, 0)) == evaluate(lam, aug, (2, 1, 0))


def test_hat():
    m = razak_model()
    assert hat(m, m.soft(Fraction(5, 2))) == (Fraction(5, 2),)
    assert hat(m, m.zero) == (0,)
    g = glued_simple_pure(1, k=1)
    assert hat(g, g.compact(1)) == (1,)


@pytest.mark.parametrize("model,weights", [
    (point_augmented(), (1, 0)),
    (pointed_discrete_augmented(2), (1, 2, 0)),
    (glued_simple_pure(1, k=1), (1,)),
    (razak_model(), (1,)),
])
def test_functional_audits_pass(model, weights):
    rep = audit_functional(Functional(weights), model, W)
    assert all(r.status == PASS for r in rep.results.values()), rep.lines()


def test_factor_check():
    zbar = CcModel(ext_power(NAT, 1))
    rep, lam = factor_check(Functional((1,)), zbar, z=(1,))
    assert rep["monotone-on-classes"].status == PASS and rep["finite-on-full"].status == PASS
    assert rep["full"].status == PASS and rep["full-comparison"].status == PASS
    assert lam is not None
    rep, lam = factor_check(Functional((0,)), zbar)
    assert lam is not None


def test_factor_check_rejects_non_full_element():
    n2 = CcModel(ext_power(NAT, 2))
    rep, _ = factor_check(Functional((1, 1)), n2, z=(1, 0), window=W)
    assert rep["full"].status == FAIL
    assert "full-comparison" not in rep


def test_full_comparison_needs_a_multiple_in_the_truncation():
    rep, _ = factor_check(Functional((1,)), CcModel(truncated_nat(1)), z=(1,))
    assert rep["full-comparison"].status == PASS and rep.window["max_n"] == 2


def test_rank_sensitive_functional_does_not_factor():
    base = SumModel(ext_power(NAT, 1), truncated_nat(0))
    rep, lam = factor_check(Functional((0, 1)), CcModel(base), window=W)
    r = rep["monotone-on-classes"]
    assert r.status == FAIL and lam is None
    assert r.witness["equal_classes"]


def test_convergence():
    nat = ext_power(NAT, 1)
    one = Functional((1,))
    rep = check_convergence(FunctionalSequence.constant(one), one, nat, W)
    assert all(r.status == PASS for r in rep.results.values())
    rep = check_convergence(FunctionalSequence.shifted(one), one, nat, W)
    assert all(r.status == PASS for r in rep.results.values())
    rep = check_convergence(FunctionalSequence.periodic(one, Functional((2,))), one, nat, W)
    assert rep["limsup"].status == FAIL
    assert rep["limsup"].witness["x"] == [1]


def test_weights_must_be_nonnegative():
    with pytest.raises(ValueError):
        Functional((-1,))
