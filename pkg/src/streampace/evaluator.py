# Offline trace evaluation: given a type-checked spec and a concrete input
# trace, produce the output trace satisfying the reference semantics.

from dataclasses import dataclass
from typing import List, Optional

from .syntax import BinOp, Const, Hold, Prev, Spec, Var
from .semantics import (
    InMap, OutMap, apply_binop, hold_op, horizon_of, pacing_points, prev_op,
    satisfies,
)


class DefinednessViolation(Exception):
    """A pacing-required cell evaluated to no value.  This cannot happen for
    a spec accepted by the type checker; raising loudly doubles as a
    self-check of type soundness on every run."""

    def __init__(self, output: str, time: int, message: str = ""):
        self.output = output
        self.time = time
        super().__init__(
            message
            or f"output {output} has no value at required time point {time}")


@dataclass
class EvalPlan:
    spec: Spec
    order: List[str]  # a typing order, from a TypeVerdict


def run(plan: EvalPlan, rho_in: InMap, horizon: Optional[int] = None) -> OutMap:
    """Evaluate all outputs over the input trace.

    Cells are computed time-major, outputs in typing order within each time
    point.  A prev access to the stream being computed reads the already
    complete prefix; its current cell counts as defined (its pacing
    guarantees a value).  The result is re-checked against `satisfies`.
    """
    if horizon is None:
        horizon = horizon_of(rho_in)
    spec = plan.spec
    by_name = {eq.output: eq for eq in spec.equations}
    points = {
        eq.output: pacing_points(eq.pacing, rho_in, horizon)
        for eq in spec.equations
    }
    cells = {name: [None] * horizon for name in spec.outputs}

    def eval_at(e, n, current):
        match e:
            case Const(value):
                return value
            case Var(name):
                w = rho_in[name] if name in rho_in else cells[name]
                return w[n]
            case Prev(target, default):
                d = eval_at(default, n, current)
                if target in rho_in:
                    return prev_op(rho_in[target], n, d)
                w = cells[target]
                if target == current:
                    # current cell is being computed right now; pacing makes
                    # it defined, so only the strict past matters
                    prior = None
                    for k in range(n - 1, -1, -1):
                        if w[k] is not None:
                            prior = w[k]
                            break
                    return prior if prior is not None else d
                return prev_op(tuple(w), n, d)
            case Hold(target, default):
                d = eval_at(default, n, current)
                w = rho_in[target] if target in rho_in else tuple(cells[target])
                return hold_op(w, n, d)
            case BinOp(op, lhs, rhs):
                a = eval_at(lhs, n, current)
                b = eval_at(rhs, n, current)
                if a is None or b is None:
                    return None
                return apply_binop(op, a, b)
        raise TypeError(f"not a stream expression: {e!r}")

    for n in range(horizon):
        for name in plan.order:
            if n not in points[name]:
                continue
            value = eval_at(by_name[name].body, n, name)
            if value is None:
                raise DefinednessViolation(name, n)
            cells[name][n] = value

    rho_out = {name: tuple(w) for name, w in cells.items()}
    if not satisfies(spec, rho_in, rho_out):
        raise DefinednessViolation(
            "?", -1, "evaluation result does not satisfy the semantics")
    return rho_out
