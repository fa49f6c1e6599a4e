"""Command line front end.

    cusim run TASKS.toml
    cusim audit ext-nat^2 sierpinski
    cusim cc ext-nat --window 6
    cusim augment 2
    cusim catalog point | all
    cusim limits doubling --cc
    cusim exactness 2 1

Exit codes: 0 all pass, 1 some fail, 2 some unknown, 3 invalid task file.
"""

from __future__ import annotations

import argparse
import sys

from . import runner
from .audit import Window
from .catalog import DEFAULT_ENTRIES, NAMES
from .report import EXIT_SPEC, FORMATS, Report, emit
from .specfile import SpecError, load


def _common(p):
    p.add_argument("--window", type=int, metavar="B", help="coordinate bound of the enumeration window")
    p.add_argument("--search-bound", type=int, metavar="N", help="bound for compact and O5 searches")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")


def build_parser():
    ap = argparse.ArgumentParser(prog="cusim", description="Audit and compute with Cu-semigroup models.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("run", help="execute a task file")
    p.add_argument("spec", metavar="TASKS", help="TOML task file")
    _common(p)

    p = sub.add_parser("audit", help="audit the axioms of inline models")
    p.add_argument("models", nargs="+", metavar="MODEL", help="e.g. ext-nat^2, sierpinski, glued(1,2)")
    _common(p)

    p = sub.add_parser("cc", help="formal-differences construction over a base model")
    p.add_argument("models", nargs="+", metavar="MODEL")
    p.add_argument("--strategy", choices=("closed-form", "search", "srm"))
    _common(p)

    p = sub.add_parser("augment", help="augmented kernel for k discrete points")
    p.add_argument("points", type=int, nargs="+")
    _common(p)

    p = sub.add_parser("catalog", help="worked examples: " + ", ".join(NAMES))
    p.add_argument("names", nargs="+", metavar="NAME", help="entry name or 'all'")
    _common(p)

    p = sub.add_parser("limits", help="verify built-in inductive systems")
    p.add_argument("systems", nargs="+", choices=sorted(runner.SYSTEMS))
    p.add_argument("--cc", action="store_true", help="also verify the cc'd system")
    _common(p)

    p = sub.add_parser("exactness", help="split exact sequence of pointed discrete spaces")
    p.add_argument("ideal", type=int)
    p.add_argument("quotient", type=int)
    _common(p)
    return ap


def _window(args, base=None):
    base = base or Window()
    return base.with_(bound=args.window, search_bound=args.search_bound)


def _execute(args):
    """Returns ``(report, models_for_dot)``; raises SpecError on bad input."""
    out = Report(title=f"cusim {args.verb}")
    if args.verb == "run":
        spec = load(args.spec)
        w = _window(args, spec.window)
        return runner.run_spec(spec, w), list(spec.models.values())
    models = []
    if args.verb in ("audit", "cc"):
        try:
            models = [runner.model_from_expr(e) for e in args.models]
        except KeyError as e:
            raise SpecError(e.args[0]) from None
        w = _window(args)
        for m in models:
            if args.verb == "audit":
                out.add(runner.task_audit(m, w), "audit")
            else:
                out.add(runner.task_cc(m, w, strategy=args.strategy), "cc")
    elif args.verb == "augment":
        w = _window(args, Window(bound=3))
        for k in args.points:
            if k < 0:
                raise SpecError("number of points must be >= 0")
            out.add(runner.task_augment(k, w), "augment")
            models.append(runner.model_from_expr(f"pointed-discrete-{k}"))
    elif args.verb == "catalog":
        names = [n for a in args.names for n in (DEFAULT_ENTRIES if a == "all" else [a])]
        w = _window(args, Window(bound=3))
        for n in names:
            try:
                out.add(runner.task_catalog(n, w), "catalog")
            except (KeyError, ValueError) as e:
                raise SpecError(str(e.args[0])) from None
            try:
                models.append(runner.model_from_expr(n))
            except KeyError:
                pass
    elif args.verb == "limits":
        w = _window(args)
        for name in args.systems:
            system = runner.SYSTEMS[name]()
            out.add(runner.task_limits(system, w), "limits")
            if args.cc:
                out.add(runner.task_limits(system, w, cc=True), "limits")
            models.append(system.candidate)
    elif args.verb == "exactness":
        if args.ideal < 0 or args.quotient < 0:
            raise SpecError("point counts must be >= 0")
        w = _window(args, Window(bound=2))
        out.add(runner.task_exactness(args.ideal, args.quotient, w), "exactness")
    return out, models


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, models = _execute(args)
    except (SpecError, OSError) as e:
        print(f"cusim: error: {e}", file=sys.stderr)
        return EXIT_SPEC
    bound = args.window if args.window is not None else 2
    data = emit(report, args.format, models=models, bound=bound)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
