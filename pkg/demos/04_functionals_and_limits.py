"""Functionals, pairings and inductive limits.

A functional is a weight vector; on an augmented model it extends to
negative classes through an absorber.  The second half checks the two limit
conditions on small inductive systems, before and after applying cc.
"""

from fractions import Fraction

from cusim import Functional, Window, evaluate, extend, hat, pointed_discrete_augmented, razak_model
from cusim.functionals import audit_functional, admissible_absorbers
from cusim.limits import (diagonal_system, doubling_system, merging_system, verify_cc_continuity, verify_limit,
                          verify_L2)
from cusim.models import ext_power
from cusim.scalars import INT

zbar = ext_power(INT, 1)
idf = Functional((1,))
print("identity on Z̄: extend(-3) =", extend(idf, zbar, (-3,)))

aug = pointed_discrete_augmented(2)
lam = Functional((1, 1, 0))
print("absorbers for (-1,2):", admissible_absorbers(aug, (-1, 2, 0)), "-> value", extend(lam, aug, (-1, 2, 0)))
for line in audit_functional(lam, aug, Window(bound=2)).lines():
    print(line)

w = razak_model()
print("hat(soft 5/2) in the razak model:", hat(w, w.soft(Fraction(5, 2))))

win = Window(bound=3)
for system in (doubling_system(), diagonal_system(), diagonal_system(wrong=True)):
    rep = verify_limit(system, win)
    print(system.name, {r.name: r.status for r in rep.results.values()})
    cc_rep = verify_cc_continuity(system, win)
    print("  cc:", {r.name: r.status for r in cc_rep.results.values()})

r = verify_L2(merging_system(), win)["L2"]
print("merging system L2:", r.status, r.witness)
r = verify_L2(merging_system(truncate=True), win)["L2"]
print("truncated:", r.status, r.witness)
