"""Concrete carrier families.

* :class:`VectorModel` -- ``k``-vectors of extended scalars, componentwise.
* :class:`LscModel` -- monotone tables over a :class:`FinitePoset`.
* :class:`PointedKernelModel` -- ext-int tables vanishing at a basepoint.
* :class:`GluedModel` -- ``K0 ⊔ Lsc(Q, R̄)`` for a simple pure algebra.
* :class:`SumModel` -- direct sums.
* :class:`TruncatedNat` -- the finite monoid ``{0..m, ∞}`` (everything compact).

The two presentation-level objects (sphere and plane) live in
:mod:`cusim.presentations`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import numpy as np

from . import scalars
from .core import CuModel
from .scalars import INF, INT, NAT, REAL


def _nat_values(bound):
    return list(range(0, bound + 1)) + [INF]


def _int_values(bound):
    return list(range(-bound, bound + 1)) + [INF]


def _real_values(bound, signed=False, step=Fraction(1, 2)):
    lo = -bound if signed else 0
    vals = []
    v = Fraction(lo)
    while v <= bound:
        vals.append(scalars.reduce_num(v))
        v += step
    return vals + [INF]


def _vadd(a, b):
    return tuple(INF if (u == INF or v == INF) else u + v for u, v in zip(a, b))


def _vsub(a, b):
    """``a - b`` coordinatewise with ``b`` finite."""
    return tuple(scalars.sub(u, v) for u, v in zip(a, b))


def _vleq(a, b):
    return all(u <= v for u, v in zip(a, b))


def _finite(a):
    return all(v != INF for v in a)


def _vector_relations(els, strict_positive=False):
    """Vectorized ``<=`` and ``<<`` matrices for componentwise carriers."""
    arr = np.array([[float(v) for v in x] for x in els], dtype=float)
    if arr.ndim != 2:
        return None
    L = np.all(arr[:, None, :] <= arr[None, :, :], axis=2)
    fin = np.all(np.isfinite(arr), axis=1)
    W = L & fin[:, None]
    if strict_positive:
        ok = (arr[:, None, :] == 0) | (arr[:, None, :] < arr[None, :, :])
        W &= np.all(ok, axis=2)
    return L, W


def _scalar_approx(family, v, n):
    """``n``-th approximant of a single extended scalar."""
    if v == INF:
        return n
    if family == REAL and v > 0:
        return scalars.reduce_num(Fraction(v) * n / (n + 1))
    return v


# ---------------------------------------------------------------------------


class VectorModel(CuModel):
    """``k``-vectors over N̄, Z̄ or [0, ∞] with componentwise structure."""

    carrier = "vector"

    def __init__(self, family, k, name=None):
        family = scalars.family_tag(family)
        if k < 1:
            raise ValueError("dimension k must be at least 1")
        self.family = family
        self.k = k
        self.name = name or f"ext_power({family},{k})"
        self.zero = (0,) * k
        self.positively_ordered = family != INT
        self.exhaustive_searches = family == NAT
        # [0,∞] has no compact order unit
        self.order_unit = None if family == REAL else (1,) * k

    def canon(self, x):
        if not isinstance(x, tuple) or len(x) != self.k:
            raise ValueError(f"expected a {self.k}-tuple")
        if self.family != REAL and all(v == INF or (type(v) is int and (v >= 0 or self.family == INT)) for v in x):
            return tuple(INF if v == INF else v for v in x)  # fast path: already canonical
        out = tuple(scalars.canon(self.family, v) for v in x)
        if self.family == REAL and any(v < 0 for v in out):
            raise ValueError("ray coordinates are nonnegative")
        return out

    def coords(self, x):
        return x

    def from_coords(self, v):
        return self.canon(tuple(v))

    def leq(self, a, b):
        return _vleq(a, b)

    def add(self, a, b):
        return _vadd(a, b)

    def way_below(self, a, b):
        if not (_finite(a) and _vleq(a, b)):
            return False
        if self.family == REAL:
            return all(u == 0 or u < v for u, v in zip(a, b))
        return True

    def relation_matrices(self, els):
        return _vector_relations(els, strict_positive=self.family == REAL)

    def join(self, a, b):
        return tuple(max(u, v) for u, v in zip(a, b))

    def meet(self, a, b):
        return tuple(min(u, v) for u, v in zip(a, b))

    def infinite_multiple(self, x):
        if any(v < 0 for v in x):
            raise ValueError("inf * x needs x >= 0")
        return tuple(0 if v == 0 else INF for v in x)

    def approximant(self, x, n):
        return tuple(_scalar_approx(self.family, v, n) for v in x)

    def values(self, bound):
        if self.family == NAT:
            return _nat_values(bound)
        if self.family == INT:
            return _int_values(bound)
        return _real_values(bound)

    def window(self, bound):
        return list(itertools.product(self.values(bound), repeat=self.k))

    def compact_window(self, bound):
        if self.family == REAL:
            return [self.zero]
        return [x for x in self.window(bound) if _finite(x)]

    def maximum(self):
        return (INF,) * self.k

    def o5_hints(self, x1, x, y, w1):
        if _finite(x1):
            yield _vsub(y, x1)
        if _finite(x):
            yield _vsub(y, x)

    def divisibility_hints(self, x1, x, n):
        # floor / ceiling splits of x and x1
        def div(v, up):
            if v == INF:
                return INF
            if self.family == REAL:
                return scalars.reduce_num(Fraction(v) / n)
            return -(-v // n) if up else v // n
        yield tuple(div(v, False) for v in x)
        yield tuple(div(v, True) for v in x1)

    def soft_hints(self, x1, x):
        if self.family == REAL and _finite(x1):
            yield tuple(scalars.reduce_num(Fraction(v - u) / 2) if v != INF else 1
                        for u, v in zip(x1, x))

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "family": self.family, "k": self.k}


def ext_power(family, k, name=None):
    """N̄^k, Z̄^k or [0,∞]^k with componentwise order, addition and way-below."""
    return VectorModel(family, k, name=name)


def ray_model(k=1):
    """The ext-real ray model ``[0, ∞]^k``; zero is its designated compact neutral."""
    return VectorModel(REAL, k, name=f"rays({k})")


# ---------------------------------------------------------------------------


class FinitePoset:
    """A finite poset given by points and generating relations ``p <= q``.

    Tables over the poset are monotone nondecreasing along ``<=``, the
    Alexandrov convention in which up-sets are open.
    """

    def __init__(self, points, relations=(), basepoint=None, name=None):
        points = list(points)
        if not points:
            raise ValueError("a poset needs at least one point")
        if len(set(points)) != len(points):
            raise ValueError("duplicate points")
        g = nx.DiGraph()
        g.add_nodes_from(points)
        for p, q in relations:
            if p not in g or q not in g:
                raise ValueError(f"relation ({p!r}, {q!r}) mentions an unknown point")
            if p != q:
                g.add_edge(p, q)
        if not nx.is_directed_acyclic_graph(g):
            raise ValueError("relation is not antisymmetric")
        if basepoint is not None and basepoint not in g:
            raise ValueError(f"basepoint {basepoint!r} is not a listed point")
        self.points = tuple(points)
        self.index = {p: i for i, p in enumerate(points)}
        self.closure = nx.transitive_closure_dag(g)
        self.hasse = nx.transitive_reduction(g)
        self.basepoint = basepoint
        self.name = name or f"poset{len(points)}"
        # strict pairs (i, j) with points[i] < points[j]
        self.strict_pairs = tuple(sorted((self.index[p], self.index[q]) for p, q in self.closure.edges))

    def leq(self, p, q):
        return p == q or self.closure.has_edge(p, q)

    def is_antichain(self):
        return not self.strict_pairs

    def is_monotone(self, table):
        return all(table[i] <= table[j] for i, j in self.strict_pairs)

    def __len__(self):
        return len(self.points)

    def describe(self):
        return {"points": list(self.points), "relations": [list(e) for e in sorted(self.hasse.edges)],
                "basepoint": self.basepoint}

    @classmethod
    def antichain(cls, n, basepoint=False):
        pts = [f"p{i}" for i in range(n)]
        if basepoint:
            pts.append("inf")
        return cls(pts, (), basepoint="inf" if basepoint else None,
                   name=f"antichain{n}" + ("+pt" if basepoint else ""))

    @classmethod
    def sierpinski(cls):
        """Two points, the closed one below the open one."""
        return cls(["closed", "open"], [("closed", "open")], name="sierpinski")


class LscModel(CuModel):
    """Monotone tables over a finite poset with pointwise structure."""

    carrier = "lsc"

    def __init__(self, poset, family=NAT, name=None):
        family = scalars.family_tag(family)
        if family == REAL:
            raise ValueError("lsc tables take integer values")
        self.poset = poset
        self.family = family
        self.k = len(poset)
        self.name = name or f"lsc({poset.name},{family})"
        self.zero = (0,) * self.k
        self.positively_ordered = family == NAT
        self.exhaustive_searches = family == NAT
        self.order_unit = (1,) * self.k

    def canon(self, x):
        if isinstance(x, dict):
            x = tuple(x[p] for p in self.poset.points)
        if not isinstance(x, tuple) or len(x) != self.k:
            raise ValueError(f"expected a table with {self.k} entries")
        out = tuple(scalars.canon(self.family, v) for v in x)
        if not self.poset.is_monotone(out):
            raise ValueError(f"table {out} is not monotone along the poset")
        return out

    def coords(self, x):
        return x

    def from_coords(self, v):
        return self.canon(tuple(v))

    def leq(self, a, b):
        return _vleq(a, b)

    def add(self, a, b):
        return _vadd(a, b)

    def way_below(self, a, b):
        return _finite(a) and _vleq(a, b)

    def relation_matrices(self, els):
        return _vector_relations(els)

    def join(self, a, b):
        return tuple(max(u, v) for u, v in zip(a, b))

    def infinite_multiple(self, x):
        if any(v < 0 for v in x):
            raise ValueError("inf * x needs x >= 0")
        return tuple(0 if v == 0 else INF for v in x)

    def approximant(self, x, n):
        # min(f, M + n) keeps monotonicity; M is the largest finite value
        finite = [v for v in x if v != INF]
        cap = max(finite + [0]) + n
        return tuple(min(v, cap) for v in x)

    def values(self, bound):
        return _nat_values(bound) if self.family == NAT else _int_values(bound)

    def window(self, bound):
        vals = self.values(bound)
        return [t for t in itertools.product(vals, repeat=self.k) if self.poset.is_monotone(t)]

    def maximum(self):
        return (INF,) * self.k

    def o5_hints(self, x1, x, y, w1):
        if _finite(x1):
            d = _vsub(y, x1)
            yield d
            # largest monotone table below d
            yield tuple(min(d[j] for j in range(self.k) if j == i or (i, j) in self.poset.strict_pairs)
                        for i in range(self.k))
        if _finite(x):
            yield _vsub(y, x)

    def divisibility_hints(self, x1, x, n):
        yield tuple(INF if v == INF else v // n for v in x)
        yield tuple(INF if v == INF else -(-v // n) for v in x1)

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "family": self.family,
                "poset": self.poset.describe()}


def lsc_poset(poset, family=NAT, name=None):
    return LscModel(poset, family, name=name)


class PointedKernelModel(LscModel):
    """``Lsc_0``: ext-int tables over a pointed poset that vanish at the basepoint."""

    carrier = "pointed-lsc"

    def __init__(self, poset, family=INT, name=None):
        if poset.basepoint is None:
            raise ValueError("pointed kernel presentation needs a basepoint")
        super().__init__(poset, family, name=name or f"lsc0({poset.name},{scalars.family_tag(family)})")
        self.base_index = poset.index[poset.basepoint]
        self.order_unit = None
        # free coordinates: everything but the basepoint
        self.free = tuple(i for i in range(self.k) if i != self.base_index)

    def canon(self, x):
        out = super().canon(x)
        if out[self.base_index] != 0:
            raise ValueError("table must vanish at the basepoint")
        return out

    def window(self, bound):
        return [t for t in super().window(bound) if t[self.base_index] == 0]

    def reduced(self, x):
        """The table with the basepoint entry dropped."""
        return tuple(x[i] for i in self.free)

    def from_reduced(self, v):
        v = list(v)
        out = []
        for i in range(self.k):
            out.append(0 if i == self.base_index else v.pop(0))
        return self.canon(tuple(out))


def pointed_kernel_presentation(poset, family=INT, name=None):
    return PointedKernelModel(poset, family, name=name)


# ---------------------------------------------------------------------------


class GluedModel(CuModel):
    """``K0 ⊔ Lsc(Q, R̄)`` with ``d`` compact generators and ``k`` extreme rays.

    Elements are ``("c", n)`` with ``n`` in Z^d and ``("s", f)`` with ``f`` a
    ``k``-vector of extended reals.  The pairing matrix sends the r-th
    generator to its row.
    """

    carrier = "glued"
    simple = True
    positively_ordered = False

    def __init__(self, d, pairing, k, positivity="strict", name=None, axiom_exact=True):
        pairing = tuple(tuple(scalars.canon(REAL, v) for v in row) for row in pairing)
        if len(pairing) != d or any(len(row) != k for row in pairing):
            raise ValueError(f"pairing must be {d} x {k}")
        if k < 1:
            raise ValueError("need at least one ray")
        if positivity not in ("strict", "pointwise"):
            raise ValueError(f"unknown positivity rule {positivity!r}")
        self.d, self.k, self.pairing, self.positivity = d, k, pairing, positivity
        self.name = name or f"glued(d={d},k={k})"
        self.zero = ("c", (0,) * d)
        self.axiom_exact = axiom_exact

    # -- helpers --------------------------------------------------------------

    def hat(self, x):
        tag, v = x
        if tag == "s":
            return v
        out = [0] * self.k
        for n, row in zip(v, self.pairing):
            for j in range(self.k):
                out[j] += n * row[j]
        return tuple(scalars.reduce_num(t) for t in out)

    def compact(self, *v):
        return self.canon(("c", tuple(v)))

    def soft(self, *v):
        return self.canon(("s", tuple(v)))

    def _group_pos(self, v):
        """Positivity of a K0 element ``v``."""
        if all(t == 0 for t in v):
            return True
        if self.positivity == "pointwise":
            return all(t >= 0 for t in v)
        return all(t > 0 for t in self.hat(("c", v)))

    # -- CuModel --------------------------------------------------------------

    def canon(self, x):
        if not (isinstance(x, tuple) and len(x) == 2 and x[0] in ("c", "s")):
            raise ValueError("glued elements are ('c', vector) or ('s', vector)")
        tag, v = x
        v = tuple(v)
        if tag == "c":
            if len(v) != self.d:
                raise ValueError(f"compact part has rank {self.d}")
            return ("c", tuple(scalars.canon(INT, t) if t != INF else _bad_inf() for t in v))
        if len(v) != self.k:
            raise ValueError(f"soft part has {self.k} rays")
        return ("s", tuple(scalars.canon(REAL, t) for t in v))

    def is_soft(self, x):
        return x[0] == "s"

    def leq(self, a, b):
        (ta, va), (tb, vb) = a, b
        if ta == "c" and tb == "c":
            return self._group_pos(tuple(q - p for p, q in zip(va, vb)))
        if ta == "s" and tb == "s":
            return _vleq(va, vb)
        if ta == "s":
            return _vleq(va, self.hat(b))
        # compact below soft: f - hat(x) strictly positive on every ray
        return all(u < v for u, v in zip(self.hat(a), vb))

    def add(self, a, b):
        (ta, va), (tb, vb) = a, b
        if ta == "c" and tb == "c":
            return ("c", tuple(p + q for p, q in zip(va, vb)))
        return ("s", tuple(scalars.reduce_num(t) if t != INF else t
                           for t in _vadd(self.hat(a), self.hat(b))))

    def way_below(self, a, b):
        if a[0] == "c":
            return self.leq(a, b)
        f = a[1]
        if not _finite(f):
            return False
        if b[0] == "c":
            return _vleq(f, self.hat(b))
        return all(u < v for u, v in zip(f, b[1]))

    def join(self, a, b):
        if a[0] == "s" and b[0] == "s":
            return ("s", tuple(max(u, v) for u, v in zip(a[1], b[1])))
        if self.leq(a, b):
            return b
        if self.leq(b, a):
            return a
        return None

    def infinite_multiple(self, x):
        if x == self.zero:
            return x
        h = self.hat(x)
        return ("s", tuple(INF if t > 0 else (0 if t == 0 else _bad_neg()) for t in h))

    def approximant(self, x, n):
        if x[0] == "c":
            return x
        return ("s", tuple(n if t == INF else scalars.reduce_num(Fraction(t) - Fraction(1, n)) for t in x[1]))

    def window(self, bound):
        comp = [("c", v) for v in itertools.product(range(-bound, bound + 1), repeat=self.d)]
        soft = [("s", v) for v in itertools.product(_real_values(bound, signed=True), repeat=self.k)]
        return comp + soft

    def compact_window(self, bound):
        return [("c", v) for v in itertools.product(range(-bound, bound + 1), repeat=self.d)]

    def maximum(self):
        return ("s", (INF,) * self.k)

    def o5_hints(self, x1, x, y, w1):
        hy = self.hat(y)
        if y[0] == "c" and x[0] == "c":
            yield ("c", tuple(q - p for p, q in zip(x[1], y[1])))
        if y[0] == "c" and x1[0] == "c":
            yield ("c", tuple(q - p for p, q in zip(x1[1], y[1])))
        h1 = self.hat(x1)
        if _finite(h1):
            yield ("s", _vsub(hy, h1))
        hx = self.hat(x)
        if _finite(hx):
            yield ("s", _vsub(hy, hx))

    def divisibility_hints(self, x1, x, n):
        hx = self.hat(x)
        yield ("s", tuple(INF if t == INF else scalars.reduce_num(Fraction(t) / n) for t in hx))
        if x[0] == "c" and all(t % n == 0 for t in x[1]):
            yield ("c", tuple(t // n for t in x[1]))

    def soft_hints(self, x1, x):
        # nonzero positive z with x1 + z <= x: a small strictly positive soft element
        h1, hx = self.hat(x1), self.hat(x)
        if _finite(h1):
            gap = [t - u for u, t in zip(h1, hx) if t != INF]
            eps = min([Fraction(g) / 2 for g in gap if g > 0] + [Fraction(1, 2)])
            yield ("s", (scalars.reduce_num(eps),) * self.k)

    def encode(self, x):
        return [x[0], [scalars.encode(t) for t in x[1]]]

    def decode(self, data):
        tag, v = data
        return self.canon((tag, tuple(scalars.parse(t) for t in v)))

    def fmt(self, x):
        inner = ", ".join(scalars.fmt(t) for t in x[1])
        return f"{'K' if x[0] == 'c' else 'L'}({inner})"

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "d": self.d, "k": self.k,
                "pairing": [[scalars.encode(t) for t in row] for row in self.pairing],
                "positivity": self.positivity}


def _bad_inf():
    raise ValueError("compact part values are finite integers")


def _bad_neg():
    raise ValueError("inf * x needs x >= 0")


def glued_simple_pure(d, positivity="strict", pairing=None, k=1, name=None):
    """The model ``K0 ⊔ Lsc(Q, R̄)``.

    ``pairing`` is a ``d x k`` matrix of rationals; rows are the hat values of
    the K0 generators on the extreme rays.
    """
    if pairing is None:
        pairing = [[1] * k for _ in range(d)]
    return GluedModel(d, pairing, k, positivity=positivity, name=name)


def razak_model():
    """``{0} ⊔ R̄``."""
    return GluedModel(0, (), 1, name="razak")


# ---------------------------------------------------------------------------


class SumModel(CuModel):
    """Direct sum with componentwise structure; elements are pairs."""

    carrier = "sum"

    def __init__(self, left, right, name=None):
        self.left, self.right = left, right
        self.name = name or f"{left.name}⊕{right.name}"
        self.zero = (left.zero, right.zero)
        self.positively_ordered = left.positively_ordered and right.positively_ordered
        self.exhaustive_searches = left.exhaustive_searches and right.exhaustive_searches
        self.axiom_exact = left.axiom_exact and right.axiom_exact
        if left.order_unit is not None and right.order_unit is not None:
            self.order_unit = (left.order_unit, right.order_unit)

    def canon(self, x):
        if not (isinstance(x, tuple) and len(x) == 2):
            raise ValueError("direct-sum elements are pairs")
        return (self.left.canon(x[0]), self.right.canon(x[1]))

    def coords(self, x):
        return tuple(self.left.coords(x[0])) + tuple(self.right.coords(x[1]))

    def from_coords(self, v):
        n = len(self.left.coords(self.left.zero))
        return self.canon((self.left.from_coords(tuple(v[:n])), self.right.from_coords(tuple(v[n:]))))

    def leq(self, a, b):
        return self.left.leq(a[0], b[0]) and self.right.leq(a[1], b[1])

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def way_below(self, a, b):
        return self.left.way_below(a[0], b[0]) and self.right.way_below(a[1], b[1])

    def join(self, a, b):
        l, r = self.left.join(a[0], b[0]), self.right.join(a[1], b[1])
        return None if l is None or r is None else (l, r)

    def infinite_multiple(self, x):
        return (self.left.infinite_multiple(x[0]), self.right.infinite_multiple(x[1]))

    def approximant(self, x, n):
        return (self.left.approximant(x[0], n), self.right.approximant(x[1], n))

    def window(self, bound):
        return list(itertools.product(self.left.window(bound), self.right.window(bound)))

    def compact_window(self, bound):
        return list(itertools.product(self.left.compact_window(bound), self.right.compact_window(bound)))

    def maximum(self):
        l, r = self.left.maximum(), self.right.maximum()
        return None if l is None or r is None else (l, r)

    def o5_hints(self, x1, x, y, w1):
        for zl in self.left.o5_hints(x1[0], x[0], y[0], w1[0]):
            for zr in self.right.o5_hints(x1[1], x[1], y[1], w1[1]):
                yield (zl, zr)

    def encode(self, x):
        return [self.left.encode(x[0]), self.right.encode(x[1])]

    def decode(self, data):
        return (self.left.decode(data[0]), self.right.decode(data[1]))

    def fmt(self, x):
        return f"({self.left.fmt(x[0])} ⊕ {self.right.fmt(x[1])})"

    def describe(self):
        return {"name": self.name, "carrier": self.carrier,
                "summands": [self.left.describe(), self.right.describe()]}


def direct_sum(a, b, name=None):
    return SumModel(a, b, name=name)


class TruncatedNat(CuModel):
    """``{0, 1, ..., m, ∞}`` where sums past ``m`` become ``∞``.

    A finite positively ordered Cu-semigroup satisfying O5 whose compacts are
    not cancellative; every element is compact.
    """

    carrier = "truncated"
    exhaustive_searches = True

    def __init__(self, m, name=None):
        if m < 0:
            raise ValueError("m must be nonnegative")
        self.m = m
        self.name = name or f"truncated({m})"
        self.zero = (0,)
        self.order_unit = (1,) if m >= 1 else (INF,)

    def canon(self, x):
        if not isinstance(x, tuple) or len(x) != 1:
            raise ValueError("expected a 1-tuple")
        v = scalars.canon(NAT, x[0])
        if v != INF and v > self.m:
            raise ValueError(f"{v} exceeds the truncation {self.m}")
        return (v,)

    def coords(self, x):
        return x

    def from_coords(self, v):
        t = v[0]
        return (INF if t == INF or t > self.m else t,)

    def leq(self, a, b):
        return a[0] <= b[0]

    def add(self, a, b):
        s = a[0] + b[0]
        return (INF if s == INF or s > self.m else s,)

    def way_below(self, a, b):
        return a[0] <= b[0]

    def join(self, a, b):
        return max(a, b)

    def infinite_multiple(self, x):
        return (0,) if x[0] == 0 else (INF,)

    def approximant(self, x, n):
        return x

    def window(self, bound):
        return [(v,) for v in range(0, min(bound, self.m) + 1)] + [(INF,)]

    def maximum(self):
        return (INF,)

    def describe(self):
        return {"name": self.name, "carrier": self.carrier, "m": self.m}


def truncated_nat(m):
    return TruncatedNat(m)
