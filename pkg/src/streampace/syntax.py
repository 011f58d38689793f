# Abstract syntax for annotated stream specifications.
#
# A specification declares named input streams and a list of output
# equations `x @ pacing := expr`.  Pacing annotations are positive boolean
# formulas over input stream names; expressions are integer-valued with
# synchronous (direct, prev) and asynchronous (hold) stream accesses.

import re
from dataclasses import dataclass
from typing import Union

RESERVED = frozenset({"input", "output", "prev", "hold", "or", "true"})

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_valid_ident(name: str) -> bool:
    return bool(_IDENT_RE.match(name)) and name not in RESERVED


# --- Stream expressions ---

@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Prev:
    target: str
    default: "StreamExpr"


@dataclass(frozen=True)
class Hold:
    target: str
    default: "StreamExpr"


BINOPS = ("+", "-", "*", "<", "==")


@dataclass(frozen=True)
class BinOp:
    op: str  # one of BINOPS; "<" and "==" yield 0/1
    lhs: "StreamExpr"
    rhs: "StreamExpr"


StreamExpr = Union[Const, Var, Prev, Hold, BinOp]


# --- Pacing annotations ---

@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class In:
    name: str


@dataclass(frozen=True)
class And:
    lhs: "Pacing"
    rhs: "Pacing"


@dataclass(frozen=True)
class Or:
    lhs: "Pacing"
    rhs: "Pacing"


Pacing = Union[Top, In, And, Or]


@dataclass(frozen=True)
class Equation:
    output: str
    pacing: Pacing
    body: StreamExpr


@dataclass(frozen=True)
class Spec:
    inputs: tuple
    equations: tuple

    @property
    def outputs(self):
        return tuple(eq.output for eq in self.equations)


class WellFormednessError(Exception):
    """A specification violates a structural invariant.

    kind is one of: DuplicateInput, DuplicateOutput, InputOutputClash,
    UndeclaredInPacing, UndeclaredInBody, BadIdent.
    """

    def __init__(self, kind: str, name: str, context: str = ""):
        self.kind = kind
        self.name = name
        self.context = context
        msg = f"{kind}: {name}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


def free_vars(e: StreamExpr) -> set:
    """All identifiers accessed by e: Var names, prev/hold targets,
    and everything inside default expressions."""
    match e:
        case Const():
            return set()
        case Var(name):
            return {name}
        case Prev(target, default) | Hold(target, default):
            return {target} | free_vars(default)
        case BinOp(_, lhs, rhs):
            return free_vars(lhs) | free_vars(rhs)
    raise TypeError(f"not a stream expression: {e!r}")


def pacing_vars(tau: Pacing) -> set:
    match tau:
        case Top():
            return set()
        case In(name):
            return {name}
        case And(lhs, rhs) | Or(lhs, rhs):
            return pacing_vars(lhs) | pacing_vars(rhs)
    raise TypeError(f"not a pacing annotation: {tau!r}")


def validate(spec: Spec) -> None:
    """Check all structural invariants of a Spec; raise WellFormednessError
    on the first violation."""
    seen = set()
    for name in spec.inputs:
        if not is_valid_ident(name):
            raise WellFormednessError("BadIdent", name, "input declaration")
        if name in seen:
            raise WellFormednessError("DuplicateInput", name)
        seen.add(name)
    inputs = set(spec.inputs)

    outputs = set()
    for eq in spec.equations:
        if not is_valid_ident(eq.output):
            raise WellFormednessError("BadIdent", eq.output, "output declaration")
        if eq.output in inputs:
            raise WellFormednessError("InputOutputClash", eq.output)
        if eq.output in outputs:
            raise WellFormednessError("DuplicateOutput", eq.output)
        outputs.add(eq.output)

    declared = inputs | outputs
    for eq in spec.equations:
        for name in sorted(pacing_vars(eq.pacing)):
            if name not in inputs:
                raise WellFormednessError(
                    "UndeclaredInPacing", name, f"in pacing of {eq.output}")
        for name in sorted(free_vars(eq.body)):
            if name not in declared:
                raise WellFormednessError(
                    "UndeclaredInBody", name, f"in body of {eq.output}")
