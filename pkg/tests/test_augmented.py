import pytest

from cusim.audit import Window, recheck
from cusim.augmented import (ZBAR, check_weak_cancellation, classify_soft_compact, compact_group,
                             discrete_direct_sum, discrete_inclusion, discrete_split, find_complement,
                             find_positive_absorber, full_comparison, kernel_iso_check, point_augmented,
                             pointed_discrete_augmented, q, verify_exact_sequence)
from cusim.cc import CcModel, positive_lift
from cusim.core import FAIL, PASS
from cusim.models import (FinitePoset, ext_power, glued_simple_pure, pointed_kernel_presentation, razak_model,
                          truncated_nat)
from cusim.presentations import presentation_glued
from cusim.scalars import INF, INT, NAT

W = Window(bound=2)


@pytest.fixture(scope="module")
def aug1():
    return pointed_discrete_augmented(1)


@pytest.fixture(scope="module")
def aug2():
    return pointed_discrete_augmented(2)


def _all_pass(rep):
    return all(r.status == PASS for r in rep.results.values())


def test_kernel_of_one_point_is_zbar(aug1):
    lsc0 = pointed_kernel_presentation(FinitePoset.antichain(1, basepoint=True))
    assert _all_pass(kernel_iso_check(aug1, lsc0, lambda c: c, W))
    assert _all_pass(kernel_iso_check(point_augmented(), ZBAR, lambda c: (c[0],), W))


def test_kernel_members_have_zero_rank(aug2):
    assert all(aug2.rank(c) == 0 for c in aug2.window(2))
    # x = (3, 1, 1) has rank 1; x̄ - 1̄ is a member
    c = aug2.cc.cls((3, 1, 1), (0, 0, 1))
    assert aug2.rank(c) == 0 and aug2.contains(c)


def test_q(aug2):
    assert q(aug2, aug2.base.zero) == aug2.zero
    assert q(aug2, (3, 1, 0)) == (3, 1, 0)
    with pytest.raises(ValueError):
        q(aug2, (3, 1, 1))


def test_positive_classes_lift(aug2):
    for c in aug2.window(2):
        if aug2.leq(aug2.zero, c):
            assert positive_lift(aug2.cc, c).is_true


def test_absorber_and_complement(aug2):
    v = find_positive_absorber(aug2, (-1, 2, 0))
    assert v.witness["z"] == [1, 0, 0]
    assert find_positive_absorber(aug2, (1, 1, 0)).witness["z"] == [0, 0, 0]
    v = find_complement(aug2, (1, 2, 0), (2, 3, 0))
    assert v.witness["z"] == [-2, -3, 0]


def test_weak_cancellation_in_kernels(aug2):
    assert check_weak_cancellation(aug2, W)["weak-cancellation"].status == PASS
    assert check_weak_cancellation(glued_simple_pure(1, k=1), W)["weak-cancellation"].status == PASS


def test_sphere_presentation_fails_weak_cancellation():
    m = presentation_glued("sphere")
    r = check_weak_cancellation(m, W)["weak-cancellation"]
    assert r.status == FAIL
    assert recheck(m, "weak-cancellation", r.witness)
    x, y, z = ("v", (1, 1)), ("v", (1, 0)), ("f", (0, 1))
    assert m.add(x, z) == m.add(y, z) and not m.leq(x, y)


def test_compact_groups(aug1, aug2):
    g = compact_group(aug1, W)
    assert g.window["group"] == "Z" and _all_pass(g)
    assert compact_group(razak_model(), W).window["group"] == "0"
    g = compact_group(aug2, W)
    assert g.window["group"] == "Z^2" and _all_pass(g)


def test_soft_compact_classification():
    m = razak_model()
    from fractions import Fraction
    assert classify_soft_compact(m, m.soft(Fraction(5, 2))) == "soft"
    assert classify_soft_compact(m, m.compact()) == "compact"
    g = glued_simple_pure(1, k=1)
    assert classify_soft_compact(g, g.compact(1)) == "compact"


def test_full_comparison():
    zbar = CcModel(ext_power(NAT, 1))
    assert full_comparison(zbar, (2,), (3,), (3,), (1,)).witness["n"] == 0
    assert full_comparison(zbar, (5,), (5,), (5,), (1,)).witness["n"] == 0
    # in the truncation {0, 1, ∞} with 1 + 1 = ∞, the class of ∞ equals the class of 1
    t = CcModel(truncated_nat(1))
    v = full_comparison(t, (INF,), (INF,), (1,), (1,))
    assert v.witness["n"] == 1


def test_split_exactness():
    _, _, _, iota, pi = discrete_split(2, 1)
    assert _all_pass(verify_exact_sequence(iota, pi, W))
    _, _, _, iota, pi = discrete_split(0, 2)
    rep = verify_exact_sequence(iota, pi, W)
    assert _all_pass(rep)


def test_perturbed_inclusion_fails():
    I, A, _, _, pi = discrete_split(2, 1)
    bad = discrete_inclusion(I, A, [0, 2])
    rep = verify_exact_sequence(bad, pi, W)
    assert rep["image=kernel"].status == FAIL
    assert rep["image=kernel"].witness


def test_gamma_isomorphism():
    gamma, rep = discrete_direct_sum(2, 1, W)
    assert _all_pass(rep)
    assert gamma(((1, -2, 0), (INF, 0))) == (1, -2, INF, 0)
