# Toolkit for pacing-annotated stream specifications: parsing,
# consistency type-checking, offline trace evaluation, and brute-force
# consistency oracles.

from .syntax import (
    And, BinOp, Const, Equation, Hold, In, Or, Prev, Spec, Top, Var,
    WellFormednessError, free_vars, pacing_vars, validate,
)
from .parser import (
    ParseError, SpecError, parse_spec, print_spec,
)
from .semantics import (
    eval_expr, eval_expr_partial, hold_op, last, less_defined, pacing_points,
    prev_op, satisfies, totalize, well_paced,
)
from .typecheck import (
    PacingTypeError, TypeVerdict, entails, type_expr, type_spec,
)
from .evaluator import DefinednessViolation, EvalPlan, run
from .oracle import (
    OracleConfig, OracleVerdict, SpaceTooLarge, check_consistency,
    enumerate_inputs, find_solution,
)
from .traces import TraceFormatError, read_trace, write_trace

__all__ = [
    "And", "BinOp", "Const", "Equation", "Hold", "In", "Or", "Prev", "Spec",
    "Top", "Var", "WellFormednessError", "free_vars", "pacing_vars",
    "validate", "ParseError", "SpecError", "parse_spec", "print_spec",
    "eval_expr", "eval_expr_partial", "hold_op", "last", "less_defined",
    "pacing_points", "prev_op", "satisfies", "totalize", "well_paced",
    "PacingTypeError", "TypeVerdict", "entails", "type_expr", "type_spec",
    "DefinednessViolation", "EvalPlan", "run", "OracleConfig",
    "OracleVerdict", "SpaceTooLarge", "check_consistency",
    "enumerate_inputs", "find_solution", "TraceFormatError", "read_trace",
    "write_trace",
]
