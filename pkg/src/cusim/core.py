"""The abstract Cu-semigroup contract: models, chains, morphisms, verdicts.

Elements are plain hashable values in canonical form (tuples of extended
scalars, tagged tuples for glued carriers).  A model owns the meaning of its
elements; every operation is a pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import scalars


class ModelMismatch(ValueError):
    """An element does not belong to the model it was handed to."""


class NonMonotoneChain(ValueError):
    """A chain's explicit prefix is not increasing."""


class Undecided(RuntimeError):
    """A three-valued procedure exhausted its search bound.

    Raised only where a caller demands a boolean from a semi-decision.
    """

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


# ---------------------------------------------------------------------------
# three-valued verdicts


@dataclass(frozen=True)
class Verdict3:
    """``value`` is True, False or None (unknown); ``witness`` backs it up."""

    value: bool | None
    witness: dict = field(default_factory=dict, compare=False)
    reason: str = field(default="", compare=False)

    @classmethod
    def true(cls, reason="", **witness):
        return cls(True, witness, reason)

    @classmethod
    def false(cls, reason="", **witness):
        return cls(False, witness, reason)

    @classmethod
    def unknown(cls, reason="", **witness):
        return cls(None, witness, reason)

    @property
    def is_true(self):
        return self.value is True

    @property
    def is_false(self):
        return self.value is False

    @property
    def is_unknown(self):
        return self.value is None

    def __and__(self, other):
        if self.is_false:
            return self
        if other.is_false:
            return other
        if self.is_unknown:
            return self
        if other.is_unknown:
            return other
        return Verdict3(True, {**self.witness, **other.witness}, "both hold")

    def __bool__(self):
        if self.value is None:
            raise Undecided(self.reason or "verdict is unknown", self)
        return self.value

    def label(self):
        return {True: "true", False: "false", None: "unknown"}[self.value]


# ---------------------------------------------------------------------------
# models


class CuModel:
    """Base class for concrete Cu-semigroup presentations.

    Subclasses supply ``canon``, ``leq``, ``add``, ``way_below``,
    ``approximant`` and ``window``; everything else has generic defaults.
    """

    name = "model"
    carrier = "abstract"
    positively_ordered = True
    # False for presentation-level models whose O2 cannot hold at finite scale
    axiom_exact = True
    simple = False
    zero: Any = None
    order_unit: Any = None
    # exact-valued windows: O5 / divisibility searches over them are complete
    exhaustive_searches = False

    # -- membership -------------------------------------------------------

    def canon(self, x):
        raise NotImplementedError

    def contains(self, x):
        try:
            self.canon(x)
        except (ValueError, TypeError, ArithmeticError):
            return False
        return True

    def check(self, *xs):
        out = []
        for x in xs:
            try:
                out.append(self.canon(x))
            except (ValueError, TypeError, ArithmeticError) as exc:
                raise ModelMismatch(f"{x!r} is not an element of {self.name}: {exc}") from None
        return out[0] if len(out) == 1 else out

    # -- structure ----------------------------------------------------------

    def leq(self, a, b):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def way_below(self, a, b):
        raise NotImplementedError

    def eq(self, a, b):
        return self.canon(a) == self.canon(b)

    def is_compact(self, x):
        return self.way_below(x, x)

    def sum(self, xs):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def multiple(self, n, x):
        """``n * x`` for a natural ``n`` (``n == inf`` gives ``sup_k k*x``)."""
        if n == scalars.INF:
            return self.infinite_multiple(x)
        out = self.zero
        for _ in range(n):
            out = self.add(out, x)
        return out

    def infinite_multiple(self, x):
        raise NotImplementedError(f"{self.name} has no closed form for inf*x")

    def join(self, a, b):
        """Least upper bound of two elements when the carrier has one, else None."""
        return None

    def approximant(self, x, n):
        """The ``n``-th term (``n >= 1``) of the canonical ``<<``-increasing chain with supremum ``x``."""
        raise NotImplementedError

    def approximant_chain(self, x):
        return Chain((), "formula", target=x, formula=lambda n, _x=x: self.approximant(_x, n),
                     label="approximants")

    def window(self, bound):
        """Deterministically ordered finite sample of the carrier."""
        raise NotImplementedError

    def compact_window(self, bound):
        return [x for x in self.window(bound) if self.way_below(x, x)]

    def maximum(self):
        """The largest element if the carrier has one in closed form."""
        return None

    def sample_chains(self, bound, count=64):
        """Catalog chains: constant chains, approximant chains and ramps."""
        els = self.window(bound)
        chains = []
        for x in els:
            chains.append(self.approximant_chain(x))
            if len(chains) >= count // 2:
                break
        step = max(1, len(els) // max(1, count - len(chains)))
        for x in els[::step]:
            chains.append(Chain((x,), "constant", label="constant"))
            if len(chains) >= count:
                break
        return chains

    # -- search hints used by the auditor --------------------------------------

    def o5_hints(self, x1, x, y, w1):
        return ()

    def divisibility_hints(self, x1, x, n):
        return ()

    def soft_hints(self, x1, x):
        return ()

    # -- serialization ---------------------------------------------------------

    def encode(self, x):
        return encode_value(x)

    def decode(self, data):
        return self.canon(decode_value(data))

    def fmt(self, x):
        return format_value(x)

    def describe(self):
        return {"name": self.name, "carrier": self.carrier}

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def encode_value(x):
    if isinstance(x, tuple):
        return [encode_value(v) for v in x]
    if isinstance(x, (str, bool)) or x is None:
        return x
    return scalars.encode(x)


def decode_value(data):
    if isinstance(data, list):
        return tuple(decode_value(v) for v in data)
    if isinstance(data, str) and data not in ("c", "s", "v", "f"):
        try:
            return scalars.parse(data)
        except (ValueError, ZeroDivisionError):
            return data
    return data


def format_value(x):
    if isinstance(x, tuple):
        return "(" + ", ".join(format_value(v) for v in x) + ")"
    if isinstance(x, str):
        return x
    return scalars.fmt(x)


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain:
    """An increasing sequence: explicit prefix plus a tail rule.

    ``tail`` is ``"constant"`` (repeat the last prefix term), ``"ramp"``
    (approximants of ``target`` dominating the prefix) or ``"formula"``
    (``formula(k)`` for ``k = 1, 2, ...`` after the prefix, with declared
    supremum ``target``).
    """

    prefix: tuple = ()
    tail: str = "constant"
    target: Any = None
    formula: Callable[[int], Any] | None = field(default=None, compare=False)
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.tail not in ("constant", "ramp", "formula"):
            raise ValueError(f"unknown tail rule {self.tail!r}")
        if self.tail == "constant" and not self.prefix:
            raise ValueError("a constant chain needs a nonempty prefix")
        if self.tail == "formula" and self.formula is None:
            raise ValueError("a formula tail needs a formula")
        if self.tail in ("ramp", "formula") and self.target is None:
            raise ValueError(f"a {self.tail} tail needs a target supremum")

    def _ramp_offset(self, model):
        if not self.prefix:
            return 0
        last = self.prefix[-1]
        for j in range(0, 4096):
            if model.leq(last, model.approximant(self.target, 1 + j)):
                return j
        return None

    def term(self, model, n):
        """The ``n``-th term, 0-based."""
        p = len(self.prefix)
        if n < p:
            return self.prefix[n]
        k = n - p + 1
        if self.tail == "constant":
            return self.prefix[-1]
        if self.tail == "formula":
            return self.formula(k)
        offset = self._ramp_offset(model)
        a = model.approximant(self.target, k + (offset or 0))
        if offset is None:
            joined = model.join(self.prefix[-1], a)
            if joined is None:
                raise NonMonotoneChain(
                    f"ramp to {model.fmt(self.target)} never dominates {model.fmt(self.prefix[-1])}")
            return joined
        return a

    def terms(self, model, count):
        return [self.term(model, n) for n in range(count)]

    def first_violation(self, model, count):
        """Index ``i`` with ``term(i) > term(i+1)`` among the first ``count`` terms, else None."""
        ts = self.terms(model, count)
        for i in range(len(ts) - 1):
            if not model.leq(ts[i], ts[i + 1]):
                return i
        return None

    def supremum(self, model):
        if self.tail == "constant":
            return self.prefix[-1]
        return self.target


def sum_chain(model, a: Chain, b: Chain, sup=None):
    """Termwise sum of two chains of the same model."""
    return Chain((), "formula", target=sup if sup is not None else model.add(a.supremum(model), b.supremum(model)),
                 formula=lambda k: model.add(a.term(model, k - 1), b.term(model, k - 1)),
                 label="sum")


def image_chain(cumap, chain: Chain):
    """``alpha(chain)`` with declared supremum ``alpha(sup chain)``; M1 is what gets audited."""
    src = cumap.source
    return Chain((), "formula", target=cumap(chain.supremum(src)),
                 formula=lambda k: cumap(chain.term(src, k - 1)),
                 label=f"{cumap.name}({chain.label or 'chain'})")


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class CuMap:
    """A map between models, given by a Python callable on canonical elements."""

    source: CuModel
    target: CuModel
    fn: Callable[[Any], Any] = field(compare=False)
    name: str = "map"
    kind: str = "callable"
    data: Any = field(default=None, compare=False)

    def __call__(self, x):
        return self.target.canon(self.fn(x))

    def compose(self, inner: "CuMap") -> "CuMap":
        """``self ∘ inner``."""
        if inner.target is not self.source and inner.target.name != self.source.name:
            raise ModelMismatch(f"cannot compose {self.name} after {inner.name}")
        return CuMap(inner.source, self.target, lambda x: self(inner(x)),
                     name=f"{self.name}∘{inner.name}", kind="composite")


def identity_map(model):
    return CuMap(model, model, lambda x: x, name=f"id[{model.name}]", kind="identity")


def matrix_map(source, target, matrix, name="matrix"):
    """Map between coordinate models: ``y_i = sum_j M[i][j] * x_j`` (inf absorbing, 0*inf = 0)."""
    rows = [tuple(r) for r in matrix]
    if any(v < 0 for r in rows for v in r):
        raise ValueError("matrix entries must be nonnegative")

    def fn(x):
        xs = source.coords(x)
        if any(len(r) != len(xs) for r in rows):
            raise ValueError("matrix width does not match the source dimension")
        out = []
        for r in rows:
            acc = 0
            for m, v in zip(r, xs):
                if m == 0 or v == 0:
                    continue
                if v == scalars.INF:
                    acc = scalars.INF
                    continue
                if acc != scalars.INF:
                    acc = acc + m * v
            out.append(acc)
        return target.from_coords(tuple(out))

    return CuMap(source, target, fn, name=name, kind="matrix", data=tuple(rows))


# ---------------------------------------------------------------------------
# audit reports

PASS, FAIL, UNKNOWN, EXPECTED_FAIL, SKIPPED = "pass", "fail", "unknown", "expected-fail", "skipped"


@dataclass
class PredicateResult:
    name: str
    status: str
    samples: int = 0
    witness: dict | None = None
    note: str = ""

    def to_dict(self):
        d = {"name": self.name, "status": self.status, "samples": self.samples}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["name"], d["status"], d.get("samples", 0), d.get("witness"), d.get("note", ""))


@dataclass
class AuditReport:
    subject: str
    results: dict = field(default_factory=dict)
    window: dict = field(default_factory=dict)

    def add(self, result: PredicateResult):
        self.results[result.name] = result
        return result

    def record(self, name, status, samples=0, witness=None, note=""):
        return self.add(PredicateResult(name, status, samples, witness, note))

    def __getitem__(self, name):
        return self.results[name]

    def __contains__(self, name):
        return name in self.results

    def status(self, name):
        return self.results[name].status

    def passed(self, names: Iterable[str] | None = None):
        names = list(self.results) if names is None else list(names)
        return all(self.results[n].status == PASS for n in names)

    def failures(self):
        return [r for r in self.results.values() if r.status == FAIL]

    def unknowns(self):
        return [r for r in self.results.values() if r.status == UNKNOWN]

    def overall(self):
        """``fail`` beats ``unknown`` beats ``pass``; expected failures count as pass."""
        sts = [r.status for r in self.results.values()]
        if FAIL in sts:
            return FAIL
        if UNKNOWN in sts:
            return UNKNOWN
        return PASS

    def to_dict(self):
        return {
            "subject": self.subject,
            "window": dict(self.window),
            "results": [self.results[k].to_dict() for k in self.results],
        }

    @classmethod
    def from_dict(cls, d):
        rep = cls(d["subject"], {}, dict(d.get("window", {})))
        for r in d["results"]:
            rep.add(PredicateResult.from_dict(r))
        return rep

    def lines(self):
        return [f"{self.subject}: {r.name} {r.status}"
                + (f" witness={r.witness}" if r.witness else "")
                for r in self.results.values()]
