"""Where the axioms break.

Lower semicontinuous functions on the two-point Sierpinski space violate the
almost algebraic order axiom, and the glued sphere presentation violates
weak cancellation.  In both cases the auditor returns a witness that can be
re-evaluated independently.
"""

from cusim import Window, audit_axioms, o5_search
from cusim.audit import recheck
from cusim.augmented import check_weak_cancellation
from cusim.cc import CcModel, GateError
from cusim.models import FinitePoset, lsc_poset
from cusim.presentations import presentation_glued
from cusim.scalars import NAT

sier = lsc_poset(FinitePoset.sierpinski(), NAT)
print("(0,10) is a table:", sier.contains((0, 10)), "| (10,0) is a table:", sier.contains((10, 0)))
rep = audit_axioms(sier, Window(bound=3))
print(rep["O5(w=0)"].status, rep["O5(w=0)"].witness, "re-evaluates:", recheck(sier, "O5(w=0)", rep["O5(w=0)"].witness))
v = o5_search(sier, (0, 10), (3, 10), (5, 10), bound=10)
print("x'=(0,10), x=(3,10), y=(5,10):", v.label(), "-", v.reason)
try:
    CcModel(sier)
except GateError as e:
    print("cc refused:", e)

sphere = presentation_glued("sphere")
p, one, f = ("v", (1, 1)), ("v", (1, 0)), ("f", (0, 1))
print("[p] + f =", sphere.fmt(sphere.add(p, f)), "| [1] + f =", sphere.fmt(sphere.add(one, f)))
print("[p] <= [1]:", sphere.leq(p, one))
r = check_weak_cancellation(sphere, Window(bound=2))["weak-cancellation"]
print("auditor:", r.status, r.witness)
