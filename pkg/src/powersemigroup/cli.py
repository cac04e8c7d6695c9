"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (and on a failed ``verify``),
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .automorphism_lab import (
    SearchConfig,
    check_additivity,
    element_automorphism_search,
    lemma_suite,
    search_automorphisms,
    sigma_restriction_obstruction,
)
from .core_sets import NaturalSet, add, gap, gap_set, interval, is_interval
from .numerical_semigroup import (
    NumericalSemigroup,
    from_complement,
    from_generators,
    interval_semigroup,
    parse_description,
)
from .power_structures import DEFAULT_CARRIER_CAP, CarrierTooLarge, enumerate_window, phi, sigma

VERBS = ("info", "sumset", "gap", "sigma", "phi", "search", "element-search", "obstruction", "verify")


def _set_literal(text: str) -> NaturalSet:
    try:
        return NaturalSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{exc}; expected ascending integers like 0,5,8,10") from None


def _int_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return values


def _interval_arg(text: str) -> tuple[int, int | None]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return int(lo), (int(hi) if hi else None)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected i:j for the set [[i,j]] or k: for the semigroup [[k,oo)), got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("inputs")
    g.add_argument("--set", dest="sets", action="append", type=_set_literal, default=[],
                   metavar="A,B,C", help="set literal (repeatable); ranges as i..j")
    g.add_argument("--interval", dest="intervals", action="append", type=_interval_arg, default=[],
                   metavar="I:J", help="the set [[i,j]]; with an empty end, 'k:' is the semigroup [[k,oo))")
    g.add_argument("--gens", type=_int_list, metavar="G1,G2", help="semigroup generators")
    g.add_argument("--monoid", action="store_true", help="with --gens: include 0")
    g.add_argument("--gaps", type=_int_list, metavar="N1,N2", help="semigroup gaps (positive)")
    g.add_argument("--contains-zero", action="store_true", help="with --gaps: 0 is a member")
    g.add_argument("--semigroup", metavar="JSON", help='e.g. \'{"generators":[3,5],"monoid":true}\'')
    g.add_argument("--bound", type=int, metavar="B", help="window bound on max(X)")
    g.add_argument("--reduced", action="store_true", help="only sets containing 0")
    g.add_argument("--mode", choices=("filtered", "raw"), default="filtered")
    g.add_argument("--workers", type=int, default=1, help="processes for the automorphism search")
    g.add_argument("--max-carrier", type=int, default=DEFAULT_CARRIER_CAP, metavar="N")
    g.add_argument("--json", action="store_true", help="machine-readable output")
    g.add_argument("--summary", action="store_true", help="omit survivor tables from JSON search output")

    parser = argparse.ArgumentParser(
        prog="powersg", description="Power semigroups over numerical semigroups."
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    helps = {
        "info": "gaps, Frobenius number, critical and minimum element of S",
        "sumset": "sum of all given sets",
        "gap": "gap set and gap of a set",
        "sigma": "image under X -> max X - X + min X",
        "phi": "min-0 representative of the translation class",
        "search": "exhaustive automorphism search on a window",
        "element-search": "automorphisms of [[k,oo)) itself, on [[k,B]]",
        "obstruction": "witness that sigma does not act on P(S) for non-interval S",
        "verify": "search plus property audit; exit 0 iff everything passes",
    }
    for verb in VERBS:
        sub.add_parser(verb, parents=[common], help=helps[verb], description=helps[verb])
    return parser


class UsageError(Exception):
    pass


def _semigroup(args) -> NumericalSemigroup:
    given = [args.gens is not None, args.gaps is not None, args.semigroup is not None]
    open_intervals = [lo for lo, hi in args.intervals if hi is None]
    given.append(bool(open_intervals))
    if sum(given) != 1:
        raise UsageError("give exactly one semigroup: --gens, --gaps, --semigroup or --interval k:")
    if args.gens is not None:
        return from_generators(args.gens, args.monoid)
    if args.gaps is not None:
        return from_complement(args.gaps, args.contains_zero)
    if args.semigroup is not None:
        try:
            desc = json.loads(args.semigroup)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--semigroup is not valid JSON: {exc}") from None
        if not isinstance(desc, dict):
            raise UsageError("--semigroup must be a JSON object")
        return parse_description(desc)
    return interval_semigroup(open_intervals[0])


def _sets(args) -> list[NaturalSet]:
    out = list(args.sets)
    for lo, hi in args.intervals:
        if hi is not None:
            out.append(interval(lo, hi))
    return out


def _one_set(args) -> NaturalSet:
    sets = _sets(args)
    if len(sets) != 1:
        raise UsageError("give exactly one set with --set or --interval i:j")
    return sets[0]


def _need_bound(args) -> int:
    if args.bound is None:
        raise UsageError("--bound is required")
    return args.bound


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _fmt(values) -> str:
    return ",".join(map(str, values)) if values else "(none)"


def cmd_info(args) -> int:
    s = _semigroup(args)
    payload = {
        "semigroup": s.describe(),
        "generators": list(s.generators) if s.generators is not None else None,
        "gaps": sorted(s.gaps),
        "frobenius": s.frobenius,
        "critical": s.critical,
        "min_element": s.min_element,
        "is_interval": s.is_interval,
        "obstruction_m": s.interval_obstruction_witness(),
    }
    f = "none" if s.frobenius is None else s.frobenius
    text = (
        f"S = {s}\n"
        f"gaps {_fmt(sorted(s.gaps))}; F={f}; θ={s.critical}; α={s.min_element}\n"
        f"interval: {'yes' if s.is_interval else 'no'}"
    )
    if payload["obstruction_m"] is not None:
        text += f"; m = {payload['obstruction_m']}"
    _emit(args, payload, text)
    return 0


def cmd_sumset(args) -> int:
    sets = _sets(args)
    if not sets:
        raise UsageError("give at least one set")
    total = sets[0]
    for x in sets[1:]:
        total = add(total, x)
    _emit(args, {"operands": [x.to_list() for x in sets], "sum": total.to_list()}, str(total))
    return 0


def cmd_gap(args) -> int:
    x = _one_set(args)
    ds = sorted(gap_set(x))
    payload = {"set": x.to_list(), "gap_set": ds, "gap": gap(x), "is_interval": is_interval(x)}
    _emit(args, payload, f"gap set {_fmt(ds)}; gap {gap(x)}")
    return 0


def cmd_sigma(args) -> int:
    x = _one_set(args)
    y = sigma(x)
    _emit(args, {"set": x.to_list(), "sigma": y.to_list()}, str(y))
    return 0


def cmd_phi(args) -> int:
    x = _one_set(args)
    rep = phi(x).rep
    _emit(args, {"set": x.to_list(), "rep": rep.to_list()}, str(rep))
    return 0


def _config(args) -> SearchConfig:
    return SearchConfig.for_mode(args.mode, cap=args.max_carrier, workers=max(1, args.workers))


def cmd_search(args) -> int:
    s = _semigroup(args)
    carrier = enumerate_window(s, _need_bound(args), args.reduced, args.max_carrier)
    report = search_automorphisms(carrier, _config(args))
    if args.json:
        print(report.to_json(tables=not args.summary))
        return 0
    lines = [
        f"S = {s}, bound {carrier.bound}{' (reduced)' if carrier.reduced else ''}, "
        f"{len(carrier)} members, mode {report.mode}",
        f"survivors: {', '.join(report.classes) or '(none)'}",
        f"constraints checked: {report.constraints_checked}",
    ]
    if report.finding == "bounded-finding":
        lines.append("bounded finding: holds for this window only, not a classification")
    else:
        lines.append(f"matches known classification: {'yes' if report.matches_expected else 'NO'}")
    print("\n".join(lines))
    return 0


def cmd_element_search(args) -> int:
    s = _semigroup(args)
    report = element_automorphism_search(s, _need_bound(args))
    _emit(args, report.to_dict(), f"survivors: {', '.join(report.classes) or '(none)'}")
    return 0


def cmd_obstruction(args) -> int:
    s = _semigroup(args)
    w = sigma_restriction_obstruction(s)
    if w is None:
        _emit(args, {"semigroup": s.describe(), "obstruction": None},
              "S is a discrete interval; sigma acts on P(S)")
        return 0
    text = (
        f"m = {w.m}: X = {{{w.x}}} in P(S), sigma(X) = {{{w.sigma_x}}}, "
        f"but {w.missing} is not in S"
    )
    _emit(args, {"semigroup": s.describe(), "obstruction": w.to_dict()}, text)
    return 0


def cmd_verify(args) -> int:
    s = _semigroup(args)
    bound = _need_bound(args)
    config = _config(args)
    carrier = enumerate_window(s, bound, args.reduced, args.max_carrier)
    report = search_automorphisms(carrier, config)
    results: dict[str, bool] = {}
    results["survivors re-check additive"] = all(
        not check_additivity(sv.map, closure=True) for sv in report.survivors
    )
    if report.finding == "classification-check":
        results["survivors match classification"] = bool(report.matches_expected)
    if not args.reduced:
        audit = lemma_suite(s, bound, maps=[(sv.cls, sv.map) for sv in report.survivors])
        for a in audit.audits:
            for name, c in a.checks.items():
                results[f"{a.label}: {name}"] = c.passed
        w = sigma_restriction_obstruction(s)
        results["obstruction consistent"] = (w is None) == s.is_interval
    ok = all(results.values())
    payload = {
        "semigroup": s.describe(),
        "bound": bound,
        "reduced": args.reduced,
        "mode": report.mode,
        "finding": report.finding,
        "survivors": report.classes,
        "checks": results,
        "passed": ok,
    }
    text = "\n".join(f"{'PASS' if v else 'FAIL'}  {k}" for k, v in results.items())
    text += f"\nsurvivors: {', '.join(report.classes)}\n{'ALL PASS' if ok else 'FAILED'}"
    _emit(args, payload, text)
    return 0 if ok else 1


COMMANDS = {
    "info": cmd_info,
    "sumset": cmd_sumset,
    "gap": cmd_gap,
    "sigma": cmd_sigma,
    "phi": cmd_phi,
    "search": cmd_search,
    "element-search": cmd_element_search,
    "obstruction": cmd_obstruction,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.verb](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError, CarrierTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
