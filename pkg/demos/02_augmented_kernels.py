"""Kernels of the rank map.

For k discrete points plus a basepoint (the unitization), the augmented
model is the set of cc classes of rank zero.  We compare it with the
presented model of functions vanishing at the basepoint, find absorbers and
complements, and extract the compact group.
"""

from cusim import INF, Window, pointed_discrete_augmented, point_augmented
from cusim.augmented import (ZBAR, compact_group, find_complement, find_positive_absorber, kernel_iso_check,
                             discrete_split, discrete_direct_sum, verify_exact_sequence)
from cusim.models import FinitePoset, pointed_kernel_presentation

w = Window(bound=2)

pt = point_augmented()
for line in kernel_iso_check(pt, ZBAR, lambda c: (c[0],), w).lines():
    print(line)
print("compact group of the point:", compact_group(pt, w).window["group"])

aug = pointed_discrete_augmented(2)
lsc0 = pointed_kernel_presentation(FinitePoset.antichain(2, basepoint=True))
for line in kernel_iso_check(aug, lsc0, lambda c: c, w).lines():
    print(line)

x = (-1, 2, 0)
print("absorber for", x, "->", find_positive_absorber(aug, x).witness["z"])
v = find_complement(aug, (1, 2, 0), (2, 3, 0))
print("complement for (1,2) << (2,3) ->", v.witness["z"])

# the split sequence 0 -> 2 points -> 3 points -> 1 point -> 0
_, _, _, iota, pi = discrete_split(2, 1)
for line in verify_exact_sequence(iota, pi, w).lines():
    print(line)
gamma, rep = discrete_direct_sum(2, 1, w)
print("gamma((1,-2), (∞)) =", gamma(((1, -2, 0), (INF, 0))))
print("gamma audit:", sorted({r.status for r in rep.results.values()}))
