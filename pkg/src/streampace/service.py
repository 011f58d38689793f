# HTTP service wrapping the core toolkit.  Each endpoint takes the
# specification as text (and traces as CSV text) so multiple clients can
# check, evaluate, and consistency-test specs without local tooling.

from typing import Dict, List, Optional

from fastapi import FastAPI
from pydantic import BaseModel, Field

from .evaluator import DefinednessViolation, EvalPlan, run
from .oracle import OracleConfig, SpaceTooLarge, check_consistency
from .parser import ParseError, SpecError, parse_spec, print_pacing
from .traces import TraceFormatError, read_trace, write_trace
from .typecheck import arrival_scenario, type_spec


class CheckRequest(BaseModel):
    spec: str
    reorder: bool = True
    prev_self: bool = True


class TypeErrorReport(BaseModel):
    kind: str
    accessing: str
    accessed: str
    access_kind: str = ""
    must: Optional[str] = None
    can: Optional[str] = None
    scenario: Optional[str] = None
    cycle: List[str] = Field(default_factory=list)
    message: str


class CheckResponse(BaseModel):
    status: str  # "ok" | "type_error" | "invalid"
    order: Optional[List[str]] = None
    error: Optional[TypeErrorReport] = None
    diagnostic: Optional[str] = None


class RunRequest(BaseModel):
    spec: str
    trace_csv: str
    reorder: bool = True
    prev_self: bool = True
    verify: bool = True


class RunResponse(BaseModel):
    status: str  # "ok" | "type_error" | "invalid"
    output_csv: Optional[str] = None
    error: Optional[TypeErrorReport] = None
    diagnostic: Optional[str] = None


class OracleRequest(BaseModel):
    spec: str
    horizon: int = 3
    domain: List[int] = Field(default_factory=lambda: [0, 1])
    sample: int = 0
    seed: int = 0


class OracleResponse(BaseModel):
    status: str  # "consistent" | "counterexample" | "invalid"
    inputs_checked: Optional[int] = None
    counterexample_csv: Optional[str] = None
    diagnostic: Optional[str] = None


def _report(err) -> TypeErrorReport:
    return TypeErrorReport(
        kind=err.kind,
        accessing=err.accessing,
        accessed=err.accessed,
        access_kind=err.access_kind,
        must=print_pacing(err.must) if err.must is not None else None,
        can=print_pacing(err.can) if err.can is not None else None,
        scenario=arrival_scenario(err.witness) if err.witness else None,
        cycle=err.cycle,
        message=str(err),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="streampace")

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        try:
            spec = parse_spec(req.spec)
        except (ParseError, SpecError) as err:
            return CheckResponse(status="invalid", diagnostic=str(err))
        verdict = type_spec(spec, reorder=req.reorder, prev_self=req.prev_self)
        if verdict.ok:
            return CheckResponse(status="ok", order=verdict.order)
        return CheckResponse(status="type_error", error=_report(verdict.error))

    @app.post("/run", response_model=RunResponse)
    def run_trace(req: RunRequest):
        try:
            spec = parse_spec(req.spec)
        except (ParseError, SpecError) as err:
            return RunResponse(status="invalid", diagnostic=str(err))
        verdict = type_spec(spec, reorder=req.reorder, prev_self=req.prev_self)
        if not verdict.ok:
            return RunResponse(
                status="type_error", error=_report(verdict.error))
        try:
            streams = read_trace(req.trace_csv)
        except TraceFormatError as err:
            return RunResponse(status="invalid", diagnostic=str(err))
        missing = [n for n in spec.inputs if n not in streams]
        if missing:
            return RunResponse(
                status="invalid",
                diagnostic="missing input column(s): " + ", ".join(missing))
        rho_in = {n: streams[n] for n in spec.inputs}
        horizon = len(next(iter(streams.values()), ()))
        try:
            rho_out = run(EvalPlan(spec, verdict.order), rho_in, horizon)
        except DefinednessViolation as err:
            return RunResponse(status="invalid", diagnostic=str(err))
        return RunResponse(
            status="ok",
            output_csv=write_trace(rho_out, spec.outputs, horizon))

    @app.post("/oracle", response_model=OracleResponse)
    def oracle(req: OracleRequest):
        try:
            spec = parse_spec(req.spec)
        except (ParseError, SpecError) as err:
            return OracleResponse(status="invalid", diagnostic=str(err))
        cfg = OracleConfig(
            horizon=req.horizon, domain=tuple(req.domain),
            sample=req.sample, seed=req.seed)
        try:
            verdict = check_consistency(spec, cfg)
        except SpaceTooLarge as err:
            return OracleResponse(status="invalid", diagnostic=str(err))
        if verdict.consistent:
            return OracleResponse(
                status="consistent", inputs_checked=verdict.inputs_checked)
        return OracleResponse(
            status="counterexample",
            inputs_checked=verdict.inputs_checked,
            counterexample_csv=write_trace(
                verdict.counterexample, spec.inputs, cfg.horizon))

    return app


app = create_app()
