# The pacing type system: synchronous accesses require the accessed stream
# to be available whenever the accessing stream must evaluate, expressed as
# a propositional entailment between pacing annotations.  Two optional
# extensions: equation reordering and prev-accesses to the stream itself.

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .syntax import (
    And, BinOp, Const, Hold, In, Or, Prev, Spec, Top, Var, free_vars,
    pacing_vars,
)
from .parser import print_pacing

TypingContext = Dict[str, "Pacing"]  # output name -> pacing annotation


def eval_pacing(tau, valuation: Dict[str, bool]) -> bool:
    """Truth value of a pacing formula under a boolean valuation of inputs."""
    match tau:
        case Top():
            return True
        case In(name):
            return valuation[name]
        case And(lhs, rhs):
            return eval_pacing(lhs, valuation) and eval_pacing(rhs, valuation)
        case Or(lhs, rhs):
            return eval_pacing(lhs, valuation) or eval_pacing(rhs, valuation)
    raise TypeError(f"not a pacing annotation: {tau!r}")


def entails(must, can) -> Tuple[bool, Optional[Dict[str, bool]]]:
    """Validity of the implication must -> can, decided by truth table over
    the variables occurring in either formula.  On failure, returns a
    falsifying valuation (must holds, can does not)."""
    names = sorted(pacing_vars(must) | pacing_vars(can))
    for bits in itertools.product([False, True], repeat=len(names)):
        valuation = dict(zip(names, bits))
        if eval_pacing(must, valuation) and not eval_pacing(can, valuation):
            return False, valuation
    return True, None


def arrival_scenario(valuation: Dict[str, bool]) -> str:
    """Render a falsifying valuation as an input-arrival scenario."""
    arriving = sorted(n for n, v in valuation.items() if v)
    absent = sorted(n for n, v in valuation.items() if not v)
    if arriving and absent:
        return (f"when {', '.join(arriving)} arrives "
                f"without {', '.join(absent)}")
    if absent:
        return f"when {', '.join(absent)} does not arrive"
    return f"when {', '.join(arriving)} arrives"


@dataclass
class PacingTypeError(Exception):
    kind: str  # EntailmentFailure | SelfReferenceNotAllowed | CyclicSynchronousDependency
    accessing: str  # output being typed
    accessed: str  # stream whose access failed
    access_kind: str = ""  # Direct | Prev | Hold
    must: object = None
    can: object = None
    witness: Optional[Dict[str, bool]] = None
    cycle: List[str] = field(default_factory=list)

    def __str__(self):
        if self.kind == "EntailmentFailure":
            return (
                f"{self.accessing}: {self.access_kind.lower()} access to "
                f"{self.accessed} may find no value: pacing "
                f"{print_pacing(self.must)} does not entail "
                f"{print_pacing(self.can)} ({arrival_scenario(self.witness)})"
            )
        if self.kind == "CyclicSynchronousDependency":
            return ("cyclic synchronous dependency: "
                    + " -> ".join(self.cycle + self.cycle[:1]))
        if self.accessed == self.accessing:
            return (f"{self.accessing}: {self.access_kind.lower()} access to "
                    f"itself is not allowed")
        return (f"{self.accessing}: {self.access_kind.lower()} access to "
                f"{self.accessed} before it is defined")


@dataclass
class TypeVerdict:
    order: Optional[List[str]] = None  # evaluation order on success
    error: Optional[PacingTypeError] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def type_expr(ctx: TypingContext, inputs, self_name, e, must,
              prev_self: bool = True) -> None:
    """Check e against the pacing `must`; raise PacingTypeError on failure.

    self_name is the output whose equation contains e (enables the
    prev-self rule when the extension is on).
    """
    def require(accessed, can, access_kind):
        ok, witness = entails(must, can)
        if not ok:
            raise PacingTypeError(
                "EntailmentFailure", self_name, accessed,
                access_kind, must, can, witness)

    def sync_target(target, access_kind):
        if target in inputs:
            require(target, In(target), access_kind)
        elif target in ctx:
            require(target, ctx[target], access_kind)
        else:
            # self access or a forward reference under the current order
            raise PacingTypeError(
                "SelfReferenceNotAllowed", self_name, target, access_kind)

    match e:
        case Const():
            return
        case Var(name):
            sync_target(name, "Direct")
        case Prev(target, default):
            if prev_self and target == self_name:
                pass  # prev-self rule: only the default is checked
            else:
                sync_target(target, "Prev")
            type_expr(ctx, inputs, self_name, default, must, prev_self)
        case Hold(target, default):
            if target not in inputs and target not in ctx:
                # hold to self (an anti-pattern even when consistent) or a
                # forward reference
                raise PacingTypeError(
                    "SelfReferenceNotAllowed", self_name, target, "Hold")
            type_expr(ctx, inputs, self_name, default, must, prev_self)
        case BinOp(_, lhs, rhs):
            type_expr(ctx, inputs, self_name, lhs, must, prev_self)
            type_expr(ctx, inputs, self_name, rhs, must, prev_self)
        case _:
            raise TypeError(f"not a stream expression: {e!r}")


def _dependency_order(spec: Spec):
    """Topological order over output-to-output accesses, preferring the
    textually first equation among the ready ones.  Returns (order, None)
    or (None, cycle)."""
    outputs = list(spec.outputs)
    index = {name: i for i, name in enumerate(outputs)}

    def deps_of(eq):
        deps = set()

        def walk(e):
            match e:
                case Const():
                    pass
                case Var(name):
                    if name in index and name != eq.output:
                        deps.add(name)
                case Prev(target, default):
                    if target in index and target != eq.output:
                        deps.add(target)
                    walk(default)
                case Hold(target, default):
                    if target in index and target != eq.output:
                        deps.add(target)
                    walk(default)
                case BinOp(_, lhs, rhs):
                    walk(lhs)
                    walk(rhs)

        walk(eq.body)
        return deps

    pending = {eq.output: deps_of(eq) for eq in spec.equations}
    order = []
    while pending:
        ready = [name for name, deps in pending.items()
                 if all(d in order for d in deps)]
        if not ready:
            cycle = _find_cycle(pending)
            return None, cycle
        ready.sort(key=index.__getitem__)
        name = ready[0]
        order.append(name)
        del pending[name]
    return order, None


def _find_cycle(pending):
    """Locate one cycle in the remaining dependency graph."""
    graph = {name: [d for d in deps if d in pending]
             for name, deps in pending.items()}
    seen = set()
    for start in graph:
        if start in seen:
            continue
        path, on_path = [], {}
        node = start
        while node is not None and node not in seen:
            if node in on_path:
                return path[on_path[node]:]
            on_path[node] = len(path)
            path.append(node)
            node = graph[node][0] if graph[node] else None
        seen.update(path)
    return sorted(pending)  # fallback: report all remaining


def type_spec(spec: Spec, reorder: bool = True,
              prev_self: bool = True) -> TypeVerdict:
    """Type-check a validated spec, returning either an evaluation order or
    the first typing error under the attempted order."""
    if reorder:
        order, cycle = _dependency_order(spec)
        if order is None:
            return TypeVerdict(error=PacingTypeError(
                "CyclicSynchronousDependency", cycle[0], cycle[-1],
                cycle=cycle))
    else:
        order = list(spec.outputs)

    by_name = {eq.output: eq for eq in spec.equations}
    inputs = set(spec.inputs)
    ctx: TypingContext = {}
    for name in order:
        eq = by_name[name]
        try:
            type_expr(ctx, inputs, name, eq.body, eq.pacing, prev_self)
        except PacingTypeError as err:
            return TypeVerdict(error=err)
        ctx[name] = eq.pacing
    return TypeVerdict(order=order)
