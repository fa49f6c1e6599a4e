"""Formal differences over the extended naturals.

Walks through the cc construction on N̄ = {0, 1, 2, ..., ∞}: pairs (x, e)
with e compact, compared by the stabilized order, collapse to the extended
integers Z̄.  Run with ``python demos/01_zbar_from_naturals.py``.
"""

from cusim import CcModel, ext_power, INF, NAT
from cusim.cc import SEARCH, cc_below, cc_eq, srm_decide
from cusim.core import Chain
from cusim.cc import cc_sup

nat = ext_power(NAT, 1)
zbar = CcModel(nat)
print(zbar.name, "- closed form available:", zbar.closed)

# classes are difference vectors
print("class of (5, 2):", zbar.fmt(zbar.cls((5,), (2,))))
print("class of (∞, 4):", zbar.fmt(zbar.cls((INF,), (4,))))

# the two decision strategies agree
p, q = ((3,), (2,)), ((5,), (4,))
print("(3,2) <= (5,4):", cc_below(zbar, p, q).label(), "/ search:", cc_below(zbar, p, q, strategy=SEARCH).label())
v = cc_below(zbar, ((INF,), (0,)), ((7,), (0,)), strategy=SEARCH)
print("(∞,0) <= (7,0) by search:", v.label(), "-", v.reason, v.witness)
print("(∞,0) ~ (∞,5):", cc_eq(zbar, ((INF,), (0,)), ((INF,), (5,))).label())

# the stable-rank shortcut compares x + f + u with y + e + u
print("srm: (3,0) vs (5,0):", srm_decide(zbar, 1, ((3,), (0,)), ((5,), (0,))))

# suprema: the chain of classes n has supremum ∞, and the lifting recursion agrees
chain = Chain((), "formula", (INF,), formula=lambda n: (n,))
sup, trace = cc_sup(zbar, chain)
print("sup of n = 1, 2, 3, ...:", zbar.fmt(sup), "| lifted z_n:", trace.witness["z"])

# the window of the cc model is exactly the window of Z̄
print("window B=3:", [zbar.fmt(c) for c in zbar.window(3)])
