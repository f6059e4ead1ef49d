"""Command-line surface.

Exit codes: 0 on PASS/success (including VACUOUS audits), 1 on a FAIL
verdict or an audit precondition the data violates (complete
intersection, non-regular form, finite projective dimension), 2 on
usage/parse errors, 3 on budget/guard errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .asymptotics import curvature_interval
from .audit import (AuditReport, audit_first, audit_second_ext,
                    audit_second_tor, audit_third, invariant_suite, modx_check)
from .errors import (BudgetExceeded, CurvlabError, FinitePd, GuardExceeded,
                     NotRegular, ParseError, SetupViolation, UnknownPreset)
from .files import load_module, load_ring
from .homology import bass_sequence, ext_lengths, tor_lengths
from .modrep import residue_field
from .presets import PRESET_NAMES, write_preset
from .resolution import resolve

DEFAULT_STEPS = 12
DEFAULT_WINDOW = 4
DEFAULT_BUDGET = 200_000
DEFAULT_SEED = 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvlab",
                                 description="resolutions, Betti growth and "
                                             "curvature audits over artinian "
                                             "quotient algebras")
    ap.add_argument("--version", action="version", version=f"curvlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, modules=1):
        p.add_argument("ring", help="ring TOML file")
        if modules >= 1:
            p.add_argument("--module", help="module TOML file (default: k)")
        if modules >= 2:
            p.add_argument("--module2", help="second module TOML file (default: k)")
        p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
        p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--json", action="store_true")
        return p

    common(sub.add_parser("ring", help="ring summary"), modules=0)
    common(sub.add_parser("resolve", help="betti numbers and syzygy lengths"))
    common(sub.add_parser("betti", help="betti sequence"))
    common(sub.add_parser("curv", help="curvature interval"))
    common(sub.add_parser("tor", help="Tor length profile"), modules=2)
    common(sub.add_parser("ext", help="Ext length profile"), modules=2)
    common(sub.add_parser("injcurv", help="Bass sequence and injective curvature"))

    pa = sub.add_parser("audit", help="theorem audits")
    audit_sub = pa.add_subparsers(dest="audit_command", required=True)
    common(audit_sub.add_parser("first"))
    common(audit_sub.add_parser("second-tor"), modules=2)
    common(audit_sub.add_parser("second-ext"), modules=2)
    p3 = common(audit_sub.add_parser("third"))
    p3.add_argument("--i0", type=int, default=0)
    pm = common(audit_sub.add_parser("modx"), modules=0)
    pm.add_argument("--x", required=True, help="linear form, e.g. \"x\"")
    pi = common(audit_sub.add_parser("invariants"), modules=0)
    pi.add_argument("--count", type=int, default=25)

    pp = sub.add_parser("preset", help="write fixture files")
    pp.add_argument("name", choices=PRESET_NAMES)
    pp.add_argument("--h", type=int, default=2)
    pp.add_argument("--char", type=int, default=101)
    pp.add_argument("--out", default=".")
    return ap


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        payload.setdefault("schema", 1)
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _get_module(args, a, attr="module"):
    path = getattr(args, attr, None)
    if path is None:
        return residue_field(a), "k"
    return load_module(path, a), path


def _check_steps(args):
    if getattr(args, "steps", None) is not None and hasattr(args, "window"):
        if args.steps < args.window + 2:
            raise ParseError(
                f"steps ({args.steps}) must be at least window + 2 "
                f"({args.window + 2})")


def _audit_exit(args, report: AuditReport) -> int:
    lines = [f"ring: e = {report.ring['e']}, length = {report.ring['length']}, "
             f"embdim = {report.ring['embdim']}, CI = {report.ring['ci']}"]
    for c in report.checks:
        lines.append(f"{c.name}: {c.verdict}"
                     + (f" (margin {c.margin})" if c.margin is not None else "")
                     + (f" [{c.instances} instances]" if c.instances else ""))
        for cav in c.caveats:
            lines.append(f"  note: {cav}")
    lines.append(f"verdict: {report.verdict}")
    _emit(args, report.to_json(), lines)
    return 1 if report.verdict == "FAIL" else 0


def _run(args) -> int:
    if args.command == "preset":
        paths = write_preset(args.name, outdir=args.out, h=args.h,
                             char=args.char)
        for p in paths:
            print(p)
        if args.name == "modx":
            print("suggested linear form: x (pass --x x to `audit modx`)")
        return 0

    _check_steps(args)
    a = load_ring(args.ring)

    if args.command == "ring":
        s = a.summary()
        _emit(args, {"ring": s},
              [f"char = {s['char']}", f"vars = {', '.join(s['vars'])}",
               f"dim = {s['dim']}", f"length = {s['length']}",
               f"e = {s['e']}", f"embdim = {s['embdim']}",
               f"CI = {s['ci']}"])
        return 0

    if args.command in ("resolve", "betti", "curv", "injcurv"):
        m, mname = _get_module(args, a)
        if args.command == "injcurv":
            bs = bass_sequence(m, args.steps, args.budget)
            try:
                interval = curvature_interval(bs.values, args.window)
            except (CurvlabError, ValueError):
                interval = None
            payload = {"module": mname, "bass": bs.values}
            lines = [f"bass r_n = {bs.values}"]
            if interval is not None:
                payload["injcurv_interval"] = interval.to_json()
                lines.append(f"injcurv in [{float(interval.lo):.4f}, "
                             f"{float(interval.hi):.4f}] ({interval.classification})")
            _emit(args, payload, lines)
            return 0
        res = resolve(m, args.steps, args.budget)
        if args.command == "betti":
            _emit(args, {"module": mname, "betti": res.betti},
                  [f"betti = {res.betti}"])
            return 0
        if args.command == "resolve":
            _emit(args, {"module": mname, "betti": res.betti,
                         "syzygy_lengths": res.syzygy_lengths()},
                  [f"betti = {res.betti}",
                   f"syzygy lengths = {res.syzygy_lengths()}"])
            return 0
        interval = curvature_interval(res.betti, args.window)
        _emit(args, {"module": mname, "betti": res.betti,
                     "interval": interval.to_json()},
              [f"betti = {res.betti}",
               f"curv in [{float(interval.lo):.4f}, {float(interval.hi):.4f}]"
               f" ({interval.classification}) — window {interval.window},"
               " limit existence assumed"])
        return 0

    if args.command in ("tor", "ext"):
        m, mname = _get_module(args, a, "module")
        n, nname = _get_module(args, a, "module2")
        if args.command == "tor":
            prof = tor_lengths(m, n, args.steps, args.budget)
            _emit(args, {"modules": [mname, nname], "tor": prof.lengths,
                         "vanishing_from": prof.vanishing_from},
                  [f"l Tor_i = {prof.lengths}",
                   f"vanishing from: {prof.vanishing_from} (up to depth {args.steps})"])
        else:
            lens = ext_lengths(m, n, args.steps, args.budget)
            _emit(args, {"modules": [mname, nname], "ext": lens},
                  [f"l Ext^i = {lens}"])
        return 0

    if args.command == "audit":
        if args.audit_command == "invariants":
            report = invariant_suite(a, seed=args.seed, count=args.count,
                                     budget=args.budget)
            return _audit_exit(args, report)
        if args.audit_command == "modx":
            ref = None
            if len(a.var_names) == 2 and len(a.ideal) == 1:
                # two-variable hypersurface: the Koszul reference (1, 2, 2, ...)
                ref = [1] + [2] * args.steps
            rec = modx_check(a, args.x, args.steps, reference=ref,
                             budget=args.budget)
            return _audit_exit(args, AuditReport(ring=a.summary(), checks=[rec]))
        m, _ = _get_module(args, a)
        if args.audit_command == "first":
            rec = audit_first(a, m, args.steps, args.window, budget=args.budget)
        elif args.audit_command == "third":
            rec = audit_third(a, m, args.i0, args.steps, args.window,
                              budget=args.budget)
        else:
            n, _ = _get_module(args, a, "module2")
            fn = audit_second_tor if args.audit_command == "second-tor" \
                else audit_second_ext
            rec = fn(a, m, n, args.steps, args.window, budget=args.budget)
        return _audit_exit(args, AuditReport(ring=a.summary(), checks=[rec]))

    raise ParseError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return _run(args)
    except (ParseError, UnknownPreset) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SetupViolation, NotRegular, FinitePd) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CurvlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
