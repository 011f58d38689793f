# Command-line frontend: `check` a spec, `run` it over a trace, or probe
# consistency with the brute-force `oracle`.
#
# Exit codes: 0 success; 1 typing failure / counterexample found;
# 2 parse, validation, trace-format, or search-space errors;
# 3 internal definedness violation.

import argparse
import json
import sys

from .evaluator import DefinednessViolation, EvalPlan, run
from .oracle import OracleConfig, SpaceTooLarge, check_consistency
from .parser import ParseError, SpecError, parse_spec, print_pacing
from .traces import TraceFormatError, read_trace, write_trace
from .typecheck import PacingTypeError, arrival_scenario, type_spec


def _load_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        print(f"{path}: {err.strerror}", file=sys.stderr)
        raise SystemExit(2)
    try:
        return parse_spec(text)
    except (ParseError, SpecError) as err:
        print(f"{path}:{err}", file=sys.stderr)
        raise SystemExit(2)


def _error_json(err: PacingTypeError):
    out = {
        "kind": err.kind,
        "accessing": err.accessing,
        "accessed": err.accessed,
        "access_kind": err.access_kind,
    }
    if err.kind == "EntailmentFailure":
        out["must"] = print_pacing(err.must)
        out["can"] = print_pacing(err.can)
        out["scenario"] = arrival_scenario(err.witness)
    if err.kind == "CyclicSynchronousDependency":
        out["cycle"] = err.cycle
    return out


def _typecheck(spec, args):
    return type_spec(
        spec, reorder=not args.no_reorder, prev_self=not args.no_prev_self)


def cmd_check(args) -> int:
    spec = _load_spec(args.spec)
    verdict = _typecheck(spec, args)
    if verdict.ok:
        if args.json:
            print(json.dumps({"status": "ok", "order": verdict.order}))
        else:
            print("ok: order " + " ".join(verdict.order))
        return 0
    if args.json:
        print(json.dumps(
            {"status": "type_error", "error": _error_json(verdict.error)}))
    else:
        print(f"type error: {verdict.error}", file=sys.stderr)
    return 1


def cmd_run(args) -> int:
    spec = _load_spec(args.spec)
    verdict = _typecheck(spec, args)
    if not verdict.ok:
        print(f"type error: {verdict.error}", file=sys.stderr)
        return 1
    try:
        with open(args.trace, encoding="utf-8") as fh:
            streams = read_trace(fh.read())
    except OSError as err:
        print(f"{args.trace}: {err.strerror}", file=sys.stderr)
        return 2
    except TraceFormatError as err:
        print(f"{args.trace}: {err}", file=sys.stderr)
        return 2
    missing = [name for name in spec.inputs if name not in streams]
    if missing:
        print(f"{args.trace}: missing input column(s): "
              + ", ".join(missing), file=sys.stderr)
        return 2
    rho_in = {name: streams[name] for name in spec.inputs}
    horizon = len(next(iter(streams.values()), ()))
    try:
        rho_out = run(EvalPlan(spec, verdict.order), rho_in, horizon)
    except DefinednessViolation as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 3
    if args.verify:
        from .semantics import satisfies
        if not satisfies(spec, rho_in, rho_out):
            print("internal error: output does not satisfy the semantics",
                  file=sys.stderr)
            return 3
    text = write_trace(rho_out, spec.outputs, horizon)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    spec = _load_spec(args.spec)
    try:
        domain = tuple(int(v) for v in args.domain.split(","))
    except ValueError:
        print(f"bad --domain value: {args.domain!r}", file=sys.stderr)
        return 2
    cfg = OracleConfig(
        horizon=args.horizon, domain=domain, sample=args.sample,
        seed=args.seed)
    try:
        verdict = check_consistency(spec, cfg)
    except SpaceTooLarge as err:
        print(f"search space too large: {err}", file=sys.stderr)
        return 2
    if verdict.consistent:
        if args.json:
            print(json.dumps({
                "status": "consistent",
                "inputs_checked": verdict.inputs_checked,
            }))
        else:
            print(f"consistent on {verdict.inputs_checked} tested input maps")
        return 0
    trace = write_trace(verdict.counterexample, spec.inputs, cfg.horizon)
    if args.json:
        print(json.dumps({
            "status": "counterexample",
            "inputs_checked": verdict.inputs_checked,
            "trace_csv": trace,
        }))
    else:
        print("counterexample: no satisfying output map for this input trace")
        sys.stdout.write(trace)
    return 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="streampace",
        description="Check, evaluate, and consistency-test annotated "
                    "stream specifications.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", help="specification file")
        p.add_argument("--no-reorder", action="store_true",
                       help="type-check equations in textual order only")
        p.add_argument("--no-prev-self", action="store_true",
                       help="reject prev accesses to the stream itself")

    p = sub.add_parser("check", help="type-check a specification")
    common(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("run", help="evaluate a specification over a trace")
    common(p)
    p.add_argument("trace", help="input trace CSV file")
    p.add_argument("--out", help="write the output trace here")
    p.add_argument("--verify", action="store_true",
                   help="re-check the result against the semantics")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("oracle", help="brute-force consistency check")
    p.add_argument("spec", help="specification file")
    p.add_argument("--horizon", type=int, default=3)
    p.add_argument("--domain", default="0,1",
                   help="comma-separated value domain")
    p.add_argument("--sample", type=int, default=0,
                   help="sample this many input maps (0 = exhaustive)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
