from cusim.audit import Window
from cusim.core import FAIL, PASS, UNKNOWN, identity_map, matrix_map
from cusim.limits import (InductiveSystem, check_functoriality, diagonal_system, doubling_system, l1_witness,
                          merging_system, stationary_system, verify_cc_continuity, verify_L1, verify_L2,
                          verify_limit)
from cusim.models import ext_power
from cusim.scalars import NAT

W = Window(bound=3)


def _passes(rep):
    return all(r.status == PASS for r in rep.results.values())


def test_stationary_system():
    assert _passes(verify_limit(stationary_system(), W))
    assert _passes(verify_cc_continuity(stationary_system(), W))


def test_diagonal_system():
    system = diagonal_system()
    assert _passes(verify_limit(system, W))
    assert l1_witness(system, (2, 2), 3).is_true


def test_wrong_candidate_fails_l1():
    system = diagonal_system(wrong=True)
    r = verify_L1(system, W)["L1"]
    assert r.status == FAIL
    assert r.witness["s"] == [0, 0, 1] and r.witness["coordinate"] == 2
    assert l1_witness(system, (0, 0, 1), 3).is_false
    r = verify_cc_continuity(system, W)["L1"]
    assert r.status == FAIL and r.witness["coordinate"] == 2


def test_doubling_system():
    assert _passes(verify_limit(doubling_system(), W))
    assert _passes(verify_cc_continuity(doubling_system(), W))


def test_l2_needs_later_stage():
    r = verify_L2(merging_system(), W)["L2"]
    assert r.status == PASS and r.witness["j"] == 1
    assert r.witness["s1"] == [0, 1] and r.witness["t"] == [1, 0]


def test_truncated_l2_fails():
    r = verify_L2(merging_system(truncate=True), W)["L2"]
    assert r.status == FAIL
    assert r.witness["s1"] == [0, 1] and r.witness["t"] == [1, 0]


def test_open_ended_exhaustion_is_unknown():
    s = merging_system(truncate=True)
    s = InductiveSystem(s.stages, s.maps, s.candidate, s.cocone, name="open", open_ended=True)
    assert verify_L2(s, W)["L2"].status == UNKNOWN


def test_functoriality():
    nat = ext_power(NAT, 1)
    f = matrix_map(nat, nat, [[2]], name="double")
    g = matrix_map(nat, nat, [[3]], name="triple")
    assert _passes(check_functoriality(f, g, W))
    assert _passes(check_functoriality(identity_map(nat), f, W))
