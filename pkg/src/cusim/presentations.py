"""Presentation-level glued models (second-class: not axiom-exact).

Their soft parts are integer valued over a finite stand-in space, so no
soft element is a supremum of strictly smaller ones; O2 is expected to fail
and the auditor reports it as such.  Order and addition follow the glue
rules transcribed verbatim.

Elements are ``("v", p)`` for the monoid/group part and ``("f", table)`` for
functions on a connected finite stand-in space.  Connectedness matters: on a
discrete stand-in two non-constant functions can sum to a constant, which
never happens for lower semicontinuous functions on a connected space and
breaks associativity of the glue rules.
"""

from __future__ import annotations

import itertools

from . import scalars
from .core import CuModel
from .scalars import INF, INT, NAT


class SpherePresentation(CuModel):
    """``V ⊔ Lsc(X, N̄)/∼`` with ``V = {(r, c): r >= 1} ∪ {(0, 0)}``.

    ``(r, c)`` is a projection class of rank ``r`` and twist ``c``; the
    constant function ``n`` is identified with ``n[1] = (n, 0)``.  The
    stand-in space is a chain of ``points`` points (tables nondecreasing).
    The constant ``∞`` table is not identified with anything and counts as
    non-constant in the glue order.
    """

    carrier = "presentation"
    axiom_exact = False
    positively_ordered = True

    def __init__(self, points=2, name="sphere-presentation"):
        if points < 2:
            raise ValueError("the stand-in space needs at least two points")
        self.points = points
        self.name = name
        self.zero = ("v", (0, 0))
        self.order_unit = ("v", (1, 0))

    @staticmethod
    def rank(p):
        return p[0]

    def canon(self, x):
        if not (isinstance(x, tuple) and len(x) == 2 and x[0] in ("v", "f")):
            raise ValueError("elements are ('v', (r, c)) or ('f', table)")
        tag, v = x
        if tag == "v":
            r, c = (scalars.canon(NAT, v[0]), scalars.canon(INT, v[1]))
            if r == INF or c == INF:
                raise ValueError("projection classes are finite")
            if r == 0 and c != 0:
                raise ValueError("the only rank-0 class is 0")
            return ("v", (r, c))
        t = tuple(scalars.canon(NAT, s) for s in v)
        if len(t) != self.points:
            raise ValueError(f"tables have {self.points} entries")
        if any(u > w for u, w in zip(t, t[1:])):
            raise ValueError("tables are nondecreasing along the stand-in chain")
        return self._fn(t)

    def _fn(self, t):
        if len(set(t)) == 1 and t[0] != INF:
            return ("v", (t[0], 0))
        return ("f", t)

    def add(self, a, b):
        if a[0] == "v" and b[0] == "v":
            return ("v", (a[1][0] + b[1][0], a[1][1] + b[1][1]))
        ta = a[1] if a[0] == "f" else (self.rank(a[1]),) * self.points
        tb = b[1] if b[0] == "f" else (self.rank(b[1]),) * self.points
        return self._fn(tuple(INF if (u == INF or v == INF) else u + v for u, v in zip(ta, tb)))

    def leq(self, a, b):
        if a[0] == "v" and b[0] == "v":
            # algebraic order: b = a + s for some s in V
            dr, dc = b[1][0] - a[1][0], b[1][1] - a[1][1]
            return (dr, dc) == (0, 0) or dr >= 1
        if a[0] == "f" and b[0] == "f":
            return all(u <= v for u, v in zip(a[1], b[1]))
        if a[0] == "f":
            r = self.rank(b[1])
            return all(u <= r for u in a[1])
        # [p] <= f iff rank(p) <= f and f is not a finite constant
        r = self.rank(a[1])
        return all(r <= v for v in b[1])

    def way_below(self, a, b):
        if a[0] == "v":
            return self.leq(a, b)
        return INF not in a[1] and self.leq(a, b)

    def approximant(self, x, n):
        if x[0] == "v":
            return x
        fin = [v for v in x[1] if v != INF]
        cap = max(fin + [0]) + n
        return self._fn(tuple(min(v, cap) for v in x[1]))

    def window(self, bound):
        vs = [("v", (0, 0))] + [("v", (r, c)) for r in range(1, bound + 1) for c in range(-bound, bound + 1)]
        vals = list(range(bound + 1)) + [INF]
        fs = [("f", t) for t in itertools.product(vals, repeat=self.points)
              if not (len(set(t)) == 1 and t[0] != INF) and all(u <= w for u, w in zip(t, t[1:]))]
        return vs + fs

    def maximum(self):
        return ("f", (INF,) * self.points)

    def o5_hints(self, x1, x, y, w1):
        if x1[0] == "v" and y[0] == "v":
            yield ("v", (y[1][0] - x1[1][0], y[1][1] - x1[1][1]))

    def encode(self, x):
        return [x[0], [scalars.encode(t) for t in x[1]]]

    def decode(self, data):
        return self.canon((data[0], tuple(scalars.parse(t) for t in data[1])))

    def fmt(self, x):
        if x[0] == "v":
            return f"[p r={x[1][0]} c={x[1][1]}]"
        return "f(" + ", ".join(scalars.fmt(t) for t in x[1]) + ")"

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "points": self.points,
                "axiom_exact": False}


class PlanePresentation(CuModel):
    """``Z ⊔ Lsc_0(X, Z̄)/∼`` with ``0 ∈ Z`` identified with the zero function.

    Integers are pairwise incomparable, sit above nonzero non-positive
    functions and below nonzero non-negative ones; ``n + f = f`` for
    ``f != 0``.

    The stand-in for the one-point compactification is the poset
    ``a <= ∞ <= b``; a table lists ``(f(a), f(b))`` and lower semicontinuity
    with ``f(∞) = 0`` forces ``f(a) <= 0 <= f(b)``.
    """

    carrier = "presentation"
    axiom_exact = False
    positively_ordered = False

    def __init__(self, points=2, name="r2-presentation"):
        if points != 2:
            raise ValueError("the plane stand-in has exactly two free points")
        self.points = points
        self.name = name
        self.zero = ("v", 0)

    def canon(self, x):
        if not (isinstance(x, tuple) and len(x) == 2 and x[0] in ("v", "f")):
            raise ValueError("elements are ('v', n) or ('f', table)")
        if x[0] == "v":
            n = scalars.canon(INT, x[1])
            if n == INF:
                raise ValueError("K0 classes are finite")
            return ("v", n)
        t = tuple(scalars.canon(INT, s) for s in x[1])
        if len(t) != self.points:
            raise ValueError(f"tables have {self.points} entries")
        if not (t[0] <= 0 <= t[1]):
            raise ValueError("tables satisfy f(a) <= 0 <= f(b)")
        return self._fn(t)

    def _fn(self, t):
        return ("v", 0) if all(v == 0 for v in t) else ("f", t)

    def _table(self, x):
        return x[1] if x[0] == "f" else (0,) * self.points

    def add(self, a, b):
        if a[0] == "v" and b[0] == "v":
            return ("v", a[1] + b[1])
        if a[0] == "v" and a[1] != 0:
            return b
        if b[0] == "v" and b[1] != 0:
            return a
        ta, tb = self._table(a), self._table(b)
        return self._fn(tuple(INF if (u == INF or v == INF) else u + v for u, v in zip(ta, tb)))

    def leq(self, a, b):
        if a == b:
            return True
        if a[0] == "v" and b[0] == "v":
            return False
        if a[0] == "f" and b[0] == "f":
            return all(u <= v for u, v in zip(a[1], b[1]))
        if a[0] == "v":
            return all(v >= 0 for v in b[1])
        return all(u <= 0 for u in a[1])

    def way_below(self, a, b):
        # K0 classes are the compacts; a function is way below b when it is
        # finite and strictly below b wherever it is nonzero
        if a[0] == "v":
            return self.leq(a, b)
        if INF in a[1] or not self.leq(a, b):
            return False
        return all(u < v for u, v in zip(a[1], self._table(b)) if u != 0)

    def approximant(self, x, n):
        if x[0] == "v":
            return x
        fin = [v for v in x[1] if v != INF]
        cap = max(fin + [0]) + n
        return self._fn(tuple(min(v, cap) for v in x[1]))

    def window(self, bound):
        vs = [("v", n) for n in range(-bound, bound + 1)]
        vals = list(range(-bound, bound + 1)) + [INF]
        fs = [("f", t) for t in itertools.product(vals, repeat=self.points)
              if any(v != 0 for v in t) and t[0] <= 0 <= t[1]]
        return vs + fs

    def maximum(self):
        return ("f", (INF,) * self.points)

    def encode(self, x):
        if x[0] == "v":
            return ["v", x[1]]
        return ["f", [scalars.encode(t) for t in x[1]]]

    def decode(self, data):
        if data[0] == "v":
            return self.canon(("v", data[1]))
        return self.canon(("f", tuple(scalars.parse(t) for t in data[1])))

    def fmt(self, x):
        if x[0] == "v":
            return f"n{x[1]}"
        return "f(" + ", ".join(scalars.fmt(t) for t in x[1]) + ")"

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "points": self.points,
                "axiom_exact": False}


def presentation_glued(kind, points=2):
    """Build one of the transcribed presentations: ``"sphere"`` or ``"r2"``."""
    if kind == "sphere":
        return SpherePresentation(points)
    if kind in ("r2", "plane"):
        return PlanePresentation(points)
    raise ValueError(f"no presentation named {kind!r} (V-data without a rank homomorphism)")


def dyadic_presentation(depth=3):
    """Glued model with one generator paired to ``1/2^depth`` (a finite-depth UHF stand-in)."""
    from fractions import Fraction

    from .models import GluedModel

    return GluedModel(1, [[Fraction(1, 2 ** depth)]], 1, name=f"dyadic-presentation({depth})",
                      axiom_exact=True)
