"""Task files: TOML descriptions of models, maps, functionals, systems and tasks.

Example::

    [window]
    bound = 3

    [models.n2]
    family = "ext-power"
    scalar = "ext-nat"
    k = 2

    [[tasks]]
    kind = "audit"
    model = "n2"

Validation errors carry the line of the offending table or key.
"""

from __future__ import annotations

import re
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .audit import Window
from .cc import CcModel
from .core import matrix_map
from .functionals import Functional
from .limits import InductiveSystem
from .models import (FinitePoset, TruncatedNat, VectorModel, direct_sum, glued_simple_pure, lsc_poset,
                     pointed_kernel_presentation, razak_model)
from .presentations import dyadic_presentation, presentation_glued
from . import scalars

TASK_KINDS = ("audit", "cc", "augment", "k0", "functionals", "limits", "exactness", "catalog", "morphism")
MODEL_FAMILIES = ("ext-power", "lsc-poset", "pointed-kernel", "glued", "razak", "presentation",
                  "truncated", "direct-sum", "dyadic", "cc", "pointed-discrete")


class SpecError(ValueError):
    """Invalid task file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class _Locator:
    def __init__(self, text):
        self.lines = text.splitlines()

    def table(self, section, name=None):
        pat = re.compile(r"^\s*\[+\s*" + re.escape(section) + (r"\." + re.escape(name) if name else "")
                         + r"\s*\]+")
        for i, line in enumerate(self.lines, 1):
            if pat.match(line):
                return i
        return None

    def key(self, section, name, key):
        start = self.table(section, name)
        if start is None:
            return None
        pat = re.compile(r"^\s*" + re.escape(key) + r"\s*=")
        for i in range(start, len(self.lines)):
            if i > start and self.lines[i].lstrip().startswith("["):
                break
            if pat.match(self.lines[i]):
                return i + 1
        return start

    def nth_task(self, n):
        count = -1
        for i, line in enumerate(self.lines, 1):
            if re.match(r"^\s*\[\[\s*tasks\s*\]\]", line):
                count += 1
                if count == n:
                    return i
        return None


class Spec:
    """A parsed and validated spec file."""

    def __init__(self, data, text=""):
        self.data = data
        self.loc = _Locator(text)
        self.window = self._window(data.get("window", {}))
        self.models = {}
        self.maps = {}
        self.functionals = {}
        self.systems = {}
        for name in data.get("models", {}):
            self.model(name)
        for name, d in data.get("maps", {}).items():
            self.maps[name] = self._map(name, d)
        for name, d in data.get("functionals", {}).items():
            self.functionals[name] = self._functional(name, d)
        for name, d in data.get("systems", {}).items():
            self.systems[name] = self._system(name, d)
        self.tasks = [self._task(i, t) for i, t in enumerate(data.get("tasks", []))]

    # -- helpers ----------------------------------------------------------------

    def _err(self, msg, section, name=None, key=None):
        line = self.loc.key(section, name, key) if key else self.loc.table(section, name)
        raise SpecError(msg, line)

    def _window(self, d):
        allowed = set(Window().to_dict())
        bad = [k for k in d if k not in allowed]
        if bad:
            raise SpecError(f"unknown window keys {bad}", self.loc.table("window"))
        try:
            return Window().with_(**{k: int(v) for k, v in d.items()})
        except (TypeError, ValueError) as e:
            raise SpecError(f"bad window: {e}", self.loc.table("window")) from None

    def model(self, name):
        if name in self.models:
            return self.models[name]
        specs = self.data.get("models", {})
        if name not in specs:
            raise SpecError(f"unknown model {name!r}")
        self.models[name] = None  # cycle guard
        self.models[name] = self._build_model(name, specs[name])
        return self.models[name]

    def _ref(self, name, section, owner, key):
        if name not in self.data.get("models", {}):
            self._err(f"reference to unknown model {name!r}", section, owner, key)
        m = self.model(name)
        if m is None:
            self._err(f"model {name!r} refers to itself", section, owner, key)
        return m

    def _build_model(self, name, d):
        fam = d.get("family")
        if fam not in MODEL_FAMILIES:
            self._err(f"unknown family {fam!r}; expected one of {', '.join(MODEL_FAMILIES)}",
                      "models", name, "family")
        try:
            return self._family(name, fam, d)
        except SpecError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            self._err(f"invalid parameters for {fam}: {e}", "models", name)

    def _scalar(self, name, d, default="ext-nat"):
        try:
            return scalars.family_tag(d.get("scalar", default))
        except ValueError as e:
            self._err(str(e), "models", name, "scalar")

    def _poset(self, d):
        pts = list(d["points"])
        rel = [tuple(r) for r in d.get("relations", [])]
        return FinitePoset(pts, rel, basepoint=d.get("basepoint"), name=d.get("poset_name"))

    def _family(self, name, fam, d):
        if fam == "ext-power":
            k = int(d.get("k", 1))
            if k < 1:
                self._err("k must be >= 1", "models", name, "k")
            return VectorModel(self._scalar(name, d), k, name=name)
        if fam == "lsc-poset":
            return lsc_poset(self._poset(d), self._scalar(name, d), name=name)
        if fam == "pointed-kernel":
            return pointed_kernel_presentation(self._poset(d), self._scalar(name, d, "ext-int"), name=name)
        if fam == "pointed-discrete":
            from .augmented import pointed_discrete_augmented
            return pointed_discrete_augmented(int(d["k"]))
        if fam == "glued":
            dd, k = int(d.get("d", 1)), int(d.get("k", 1))
            return glued_simple_pure(dd, positivity=d.get("positivity", "strict"),
                                     pairing=d.get("pairing"), k=k, name=name)
        if fam == "razak":
            return razak_model()
        if fam == "presentation":
            return presentation_glued(d["kind"], int(d.get("points", 2)))
        if fam == "truncated":
            return TruncatedNat(int(d["m"]), name=name)
        if fam == "dyadic":
            return dyadic_presentation(int(d.get("depth", 3)))
        if fam == "direct-sum":
            return direct_sum(self._ref(d["left"], "models", name, "left"),
                              self._ref(d["right"], "models", name, "right"), name=name)
        if fam == "cc":
            base = self._ref(d["base"], "models", name, "base")
            return CcModel(base, strategy=d.get("strategy"), search_bound=int(d.get("search_bound", 8)),
                           name=name)
        raise AssertionError(fam)

    def _map(self, name, d):
        for key in ("source", "target", "matrix"):
            if key not in d:
                self._err(f"map needs {key!r}", "maps", name)
        src = self._ref(d["source"], "maps", name, "source")
        tgt = self._ref(d["target"], "maps", name, "target")
        try:
            return matrix_map(src, tgt, [[scalars.parse(v) for v in row] for row in d["matrix"]], name=name)
        except (TypeError, ValueError) as e:
            self._err(str(e), "maps", name, "matrix")

    def _functional(self, name, d):
        if "weights" not in d:
            self._err("functional needs 'weights'", "functionals", name)
        try:
            lam = Functional(tuple(scalars.parse(w) for w in d["weights"]), name=name)
        except (TypeError, ValueError) as e:
            self._err(str(e), "functionals", name, "weights")
        if "model" in d:
            self._ref(d["model"], "functionals", name, "model")
        return lam

    def _system(self, name, d):
        for key in ("stages", "candidate", "cocone"):
            if key not in d:
                self._err(f"system needs {key!r}", "systems", name)
        stages = [self._ref(s, "systems", name, "stages") for s in d["stages"]]
        cand = self._ref(d["candidate"], "systems", name, "candidate")
        maps, cocone = [], []
        for key, out in (("maps", maps), ("cocone", cocone)):
            for m in d.get(key, []):
                if m not in self.maps:
                    self._err(f"reference to unknown map {m!r}", "systems", name, key)
                out.append(self.maps[m])
        try:
            return InductiveSystem(stages, maps, cand, cocone, name=name,
                                   open_ended=bool(d.get("open_ended", False)))
        except ValueError as e:
            self._err(str(e), "systems", name)

    def _task(self, i, t):
        kind = t.get("kind")
        line = self.loc.nth_task(i)
        if kind not in TASK_KINDS:
            raise SpecError(f"unknown task kind {kind!r}; expected one of {', '.join(TASK_KINDS)}", line)
        need = {"audit": "model", "cc": "model", "k0": "model", "functionals": "functional",
                "limits": "system", "catalog": "name", "morphism": "map"}.get(kind)
        if need and need not in t:
            raise SpecError(f"{kind} task needs {need!r}", line)
        for key, pool in (("model", self.data.get("models", {})), ("functional", self.functionals),
                          ("system", self.systems), ("map", self.maps)):
            if key in t and t[key] not in pool:
                raise SpecError(f"task refers to unknown {key} {t[key]!r}", line)
        if kind == "functionals" and "model" not in t and "model" not in \
                self.data["functionals"][t["functional"]]:
            raise SpecError("functionals task needs a model", line)
        return dict(t)


def loads(text: str) -> Spec:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        m = re.search(r"line (\d+)", str(e))
        raise SpecError(f"parse error: {e}", int(m.group(1)) if m else None) from None
    return Spec(data, text)


def load(path) -> Spec:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
