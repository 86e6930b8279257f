"""Command-line front end.

Subcommands:

  verify      run one or all identity suites and report pass/fail
  act         apply a generator word to a contour state and print the result
  serre-scan  scan one lowering multidegree for singular combinations
  braid       evaluate the monodromy phase of two dressed insertions

Exit codes: 0 all requested checks passed, 1 at least one identity failed,
2 configuration or usage error.  Output is text or JSON (--format, or the
QSCREEN_FORMAT environment variable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .contour import (
    DepthExceededError,
    FaultInjection,
    ModuleContext,
    apply_word,
    parse_word,
    render_vector,
    seq_token,
    state,
    word_token,
)
from .hopf import (
    IdentityRecord,
    VerificationReport,
    braid_phase,
    defining_relations,
    run_suite,
    verify_relations,
)
from .rootdata import ConfigError, RootDatum, Weight, datum_from_config, resolve_algebra
from .serre import singular_scan, specialize_scan
from .phase import DenominatorVanishesError

MAX_DEPTH = 12
FAULT_NAMES = ("drop_hat_parity", "drop_interchange_sign", "flip_raising_prefactor")


class UsageError(Exception):
    pass


def parse_weight(text: str) -> Weight:
    if text in ("generic", "", None):
        return Weight.generic()
    try:
        return Weight.concrete([Fraction(part) for part in text.split(",")])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad weight {text!r}: {exc}") from exc


def parse_seq(text: str) -> tuple[int, ...]:
    if text in ("", "vacuum"):
        return ()
    try:
        indices = tuple(int(part) - 1 for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad contour sequence {text!r}: {exc}") from exc
    if any(i < 0 for i in indices):
        raise UsageError(f"bad contour sequence {text!r}: indices are 1-based")
    return indices


def parse_multidegree(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad multidegree {text!r}: {exc}") from exc
    if any(d < 0 for d in degrees):
        raise UsageError(f"bad multidegree {text!r}: entries are counts")
    return degrees


def check_depth(depth: int, force: bool) -> int:
    if depth < 1:
        raise UsageError("depth must be at least 1")
    if depth > MAX_DEPTH and not force:
        raise UsageError(
            f"depth {depth} exceeds the cap of {MAX_DEPTH}; state sweeps grow "
            f"exponentially, pass --force-depth if you mean it")
    return depth


def build_faults(names) -> FaultInjection:
    flags = {name: True for name in (names or [])}
    return FaultInjection(**flags)


def emit(payload, args, text_form: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2)
    else:
        out = text_form
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _relation_chunk(payload):
    """Worker for --workers: verify one chunk of relation identities."""
    config, names, depth, coords, fault_flags = payload
    datum = datum_from_config(config)
    weight = Weight.generic() if coords is None else Weight.concrete(coords)
    faults = FaultInjection(*fault_flags)
    wanted = set(names)
    report = verify_relations(datum, depth, weight, faults,
                              identity_filter=lambda n: n in wanted)
    return [rec.to_json() for rec in report.records]


def parallel_relations(datum: RootDatum, depth: int, weight: Weight,
                       faults: FaultInjection, workers: int) -> VerificationReport:
    from .rootdata import datum_to_config

    names = [name for name, _ in defining_relations(datum, 0)]
    chunks = [names[k::workers] for k in range(workers) if names[k::workers]]
    coords = None if weight.is_generic else weight.coords
    flags = (faults.drop_hat_parity, faults.drop_interchange_sign,
             faults.flip_raising_prefactor)
    config = datum_to_config(datum)
    payloads = [(config, chunk, depth, coords, flags) for chunk in chunks]
    records: dict[str, IdentityRecord] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for result in pool.map(_relation_chunk, payloads):
            for rec in result:
                records[rec["identity"]] = IdentityRecord(
                    rec["identity"], rec["status"], rec["counterexample"])
    report = VerificationReport("relations", datum.name or "custom", depth,
                                "generic" if weight.is_generic else
                                ",".join(str(c) for c in weight.coords))
    report.records = [records[name] for name in names]
    return report


def cmd_verify(args) -> int:
    datum = load_algebra(args)
    depth = check_depth(args.depth, args.force_depth)
    weight1 = parse_weight(args.weight)
    weight2 = parse_weight(args.weight2)
    faults = build_faults(args.inject_fault)

    reports: list[VerificationReport] = []
    if args.workers > 1 and args.suite in ("relations", "all"):
        reports.append(parallel_relations(datum, depth, weight1, faults,
                                          args.workers))
        if args.suite == "all":
            reports.extend(run_suite("coproduct", datum, depth, weight1,
                                     weight2, faults))
            reports.extend(run_suite("hopf", datum, depth, weight1,
                                     weight2, faults))
    else:
        reports.extend(run_suite(args.suite, datum, depth, weight1, weight2,
                                 faults))

    ok = all(rep.passed for rep in reports)
    payload = {"status": "pass" if ok else "fail",
               "reports": [rep.to_json() for rep in reports]}
    emit(payload, args, "\n\n".join(rep.to_text() for rep in reports))
    return 0 if ok else 1


def cmd_act(args) -> int:
    datum = load_algebra(args)
    depth = check_depth(args.depth, args.force_depth)
    weight = parse_weight(args.weight)
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    start = parse_seq(args.start)
    if any(j >= datum.rank for j in start):
        raise UsageError("contour index exceeds the rank")
    if any(letter[1] >= datum.rank for letter in word):
        raise UsageError("generator index exceeds the rank")
    ctx = ModuleContext(datum=datum, weight=weight, depth=depth,
                        faults=build_faults(args.inject_fault))
    try:
        result = apply_word(ctx, word, state(ctx, start))
    except DepthExceededError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "algebra": datum.name or "custom",
        "word": word_token(word),
        "start": seq_token(start),
        "result": {seq_token(s): c.render() for s, c in sorted(
            result.items(), key=lambda kv: (len(kv[0]), kv[0]))
            if not c.is_zero()},
    }
    text = f"{word_token(word)} · {seq_token(start)} = {render_vector(result)}"
    emit(payload, args, text)
    return 0


def cmd_serre_scan(args) -> int:
    datum = load_algebra(args)
    multidegree = parse_multidegree(args.multidegree)
    if len(multidegree) != datum.rank:
        raise UsageError(f"multidegree needs {datum.rank} entries")
    if sum(multidegree) > MAX_DEPTH and not args.force_depth:
        raise UsageError(
            f"total degree {sum(multidegree)} exceeds {MAX_DEPTH}; "
            f"pass --force-depth if you mean it")
    weight = parse_weight(args.weight)
    faults = build_faults(args.inject_fault)
    result = singular_scan(datum, multidegree, weight=weight, faults=faults)
    payload = result.to_json()
    text = result.to_text()
    if args.specialize:
        generic = result if weight.is_generic else singular_scan(
            datum, multidegree, faults=faults)
        specs = []
        for wtext in args.specialize:
            w = parse_weight(wtext)
            if w.is_generic:
                raise UsageError("--specialize takes concrete weights")
            spec = specialize_scan(generic, datum, w)
            specs.append(spec)
            text += f"\nspecialized at ({spec['weight']}): {spec['status']}"
        payload["specializations"] = specs
    emit(payload, args, text)
    bad = [checks for checks in result.residuals
           if any(v != "0" for v in checks.values())]
    return 1 if bad else 0


def cmd_braid(args) -> int:
    datum = load_algebra(args)
    w1, w2 = parse_weight(args.weight1), parse_weight(args.weight2)
    if w1.is_generic or w2.is_generic:
        raise UsageError("braid needs two concrete weights")
    s1, s2 = parse_seq(args.seq1), parse_seq(args.seq2)
    if any(j >= datum.rank for j in s1 + s2):
        raise UsageError("contour index exceeds the rank")
    phase = braid_phase(datum, w1, s1, w2, s2,
                        faults=build_faults(args.inject_fault))
    payload = {
        "algebra": datum.name or "custom",
        "weight1": args.weight1, "seq1": seq_token(s1),
        "weight2": args.weight2, "seq2": seq_token(s2),
        "phase": phase.render(),
    }
    emit(payload, args, f"phase = {phase.render()}")
    return 0


def load_algebra(args) -> RootDatum:
    try:
        if args.config:
            from .rootdata import load_datum

            return load_datum(args.config)
        return resolve_algebra(args.algebra)
    except (ConfigError, OSError) as exc:
        raise UsageError(str(exc)) from exc


def add_common(parser: argparse.ArgumentParser, *, depth_default: int = 4):
    parser.add_argument("--algebra", default="sl2",
                        help="catalog name (sl2, sl3, sl2_1, osp1_2) or a .json path")
    parser.add_argument("--config", default=None,
                        help="path to an algebra config JSON (overrides --algebra)")
    parser.add_argument("--depth", type=int, default=depth_default,
                        help=f"contour depth cap, 1..{MAX_DEPTH}")
    parser.add_argument("--force-depth", action="store_true",
                        help=f"allow depths beyond {MAX_DEPTH}")
    parser.add_argument("--format", choices=("text", "json"),
                        default=os.environ.get("QSCREEN_FORMAT", "text"),
                        help="output format (default from QSCREEN_FORMAT)")
    parser.add_argument("--output", default=None,
                        help="write the report to this file instead of stdout")
    parser.add_argument("--inject-fault", action="append",
                        choices=FAULT_NAMES, default=None,
                        help="sabotage one sign convention (negative controls)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qscreen",
        description="exact contour representation of deformed enveloping "
                    "superalgebras: identity verification and singular-vector scans")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run identity suites")
    add_common(p)
    p.add_argument("--suite", choices=("relations", "coproduct", "hopf", "all"),
                   default="all")
    p.add_argument("--weight", default="generic",
                   help="'generic' or comma-separated root-basis coordinates")
    p.add_argument("--weight2", default="generic",
                   help="weight of the second tensor factor")
    p.add_argument("--workers", type=int, default=1,
                   help="parallelize the relation sweep over this many processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("act", help="apply a generator word to a state")
    add_common(p, depth_default=8)
    p.add_argument("--word", required=True,
                   help="generator tokens, e.g. 'E1 F1 K2-'")
    p.add_argument("--start", default="",
                   help="starting contour sequence, e.g. '1,2,1' (default vacuum)")
    p.add_argument("--weight", default="generic")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("serre-scan", help="scan a multidegree for singular vectors")
    add_common(p)
    p.add_argument("--multidegree", required=True,
                   help="comma-separated lowering counts per simple root, e.g. '2,1'")
    p.add_argument("--weight", default="generic",
                   help="run the scan at this weight ('generic' or coordinates)")
    p.add_argument("--specialize", action="append", default=None,
                   help="also specialize the generic kernel at this concrete "
                        "weight (repeatable)")
    p.set_defaults(func=cmd_serre_scan)

    p = sub.add_parser("braid", help="monodromy phase of two dressed insertions")
    add_common(p)
    p.add_argument("--weight1", required=True)
    p.add_argument("--weight2", required=True)
    p.add_argument("--seq1", default="")
    p.add_argument("--seq2", default="")
    p.set_defaults(func=cmd_braid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, DenominatorVanishesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
