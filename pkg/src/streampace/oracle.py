# Brute-force consistency checking at small horizons: enumerate input maps
# and search for a satisfying output map directly against the satisfaction
# predicate, independently of the type checker and the evaluator.
#
# Well-pacedness fixes the defined/undefined pattern of every output from
# the input map alone, so only the values at pacing-forced cells are
# unknowns.  Most of those values are themselves forced (a defined cell
# must equal its expression's value), so the search first propagates forced
# values to a fixpoint and only enumerates candidate values for the cells
# that remain genuinely unconstrained (which only cyclic specs have).

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from .syntax import BinOp, Const, Hold, Prev, Spec, Var
from .semantics import InMap, OutMap, apply_binop, pacing_points, satisfies


class SpaceTooLarge(Exception):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"search space of size {size} exceeds cap {cap}")


@dataclass(frozen=True)
class OracleConfig:
    horizon: int = 3
    domain: Tuple[int, ...] = (0, 1)
    sample: int = 0  # 0 = exhaustive enumeration
    seed: int = 0
    cap: int = 10 ** 6
    closure_cap: int = 512


@dataclass
class OracleVerdict:
    inputs_checked: int
    counterexample: Optional[InMap] = None

    @property
    def consistent(self) -> bool:
        return self.counterexample is None


def enumerate_inputs(inputs, cfg: OracleConfig) -> Iterator[InMap]:
    """All input maps over the finite domain (each cell absent or a domain
    value), or a seeded random sample of them."""
    choices = (None,) + tuple(sorted(set(cfg.domain)))
    ncells = len(inputs) * cfg.horizon
    if cfg.sample > 0:
        rng = random.Random(cfg.seed)
        for _ in range(cfg.sample):
            yield {
                name: tuple(rng.choice(choices) for _ in range(cfg.horizon))
                for name in inputs
            }
        return
    size = len(choices) ** ncells
    if size > cfg.cap:
        raise SpaceTooLarge(size, cfg.cap)
    for flat in itertools.product(choices, repeat=ncells):
        yield {
            name: flat[i * cfg.horizon:(i + 1) * cfg.horizon]
            for i, name in enumerate(inputs)
        }


def _spec_constants_and_ops(spec: Spec):
    constants, ops = set(), set()

    def walk(e):
        match e:
            case Const(value):
                constants.add(value)
            case Var():
                pass
            case Prev(_, default) | Hold(_, default):
                walk(default)
            case BinOp(op, lhs, rhs):
                ops.add(op)
                walk(lhs)
                walk(rhs)

    for eq in spec.equations:
        walk(eq.body)
    return constants, ops


def domain_closure(spec: Spec, domain, cap: int):
    """Close the value domain plus the spec's constants under the operators
    the spec uses, up to a size cap.  Returns (values, capped)."""
    constants, ops = _spec_constants_and_ops(spec)
    values = set(domain) | constants
    while True:
        fresh = set()
        for op in sorted(ops):
            for a in values:
                for b in values:
                    v = apply_binop(op, a, b)
                    if v not in values:
                        fresh.add(v)
        if not fresh:
            return tuple(sorted(values)), False
        values |= fresh
        if len(values) > cap:
            return tuple(sorted(values))[:cap], True


_UNKNOWN = object()  # forced cell whose value is not yet determined


def find_solution(spec: Spec, rho_in: InMap,
                  cfg: OracleConfig) -> Optional[OutMap]:
    """First satisfying output map for this input map, or None."""
    horizon = cfg.horizon
    points = {
        eq.output: pacing_points(eq.pacing, rho_in, horizon)
        for eq in spec.equations
    }
    cells = {
        eq.output: [_UNKNOWN if n in points[eq.output] else None
                    for n in range(horizon)]
        for eq in spec.equations
    }
    by_name = {eq.output: eq for eq in spec.equations}

    def defined_at(name, n):
        if name in rho_in:
            return rho_in[name][n] is not None
        return n in points[name]

    def value_at(name, n):
        # only call where defined_at holds
        return rho_in[name][n] if name in rho_in else cells[name][n]

    def eval3(e, n):
        """Three-valued evaluation: int, None (no value), or _UNKNOWN
        (a value exists but is not determined yet)."""
        match e:
            case Const(value):
                return value
            case Var(name):
                return value_at(name, n) if defined_at(name, n) else None
            case Prev(target, default):
                d = eval3(default, n)
                if not defined_at(target, n):
                    return None
                for k in range(n - 1, -1, -1):
                    if defined_at(target, k):
                        return value_at(target, k)
                return d
            case Hold(target, default):
                d = eval3(default, n)
                for k in range(n, -1, -1):
                    if defined_at(target, k):
                        return value_at(target, k)
                return d
            case BinOp(op, lhs, rhs):
                a = eval3(lhs, n)
                b = eval3(rhs, n)
                if a is None or b is None:
                    return None
                if a is _UNKNOWN or b is _UNKNOWN:
                    return _UNKNOWN
                return apply_binop(op, a, b)
        raise TypeError(f"not a stream expression: {e!r}")

    # propagate forced values: a defined cell must equal its expression
    changed = True
    while changed:
        changed = False
        for eq in spec.equations:
            for n in sorted(points[eq.output]):
                if cells[eq.output][n] is not _UNKNOWN:
                    continue
                v = eval3(eq.body, n)
                if v is None:
                    # the cell must be defined yet its expression has no
                    # value: unsatisfiable for this input map
                    return None
                if v is not _UNKNOWN:
                    cells[eq.output][n] = v
                    changed = True

    open_cells = [
        (i, n)
        for i, name in enumerate(spec.outputs)
        for n in range(horizon)
        if cells[name][n] is _UNKNOWN
    ]
    values, _capped = domain_closure(spec, cfg.domain, cfg.closure_cap)
    size = len(values) ** len(open_cells)
    if size > cfg.cap:
        raise SpaceTooLarge(size, cfg.cap)

    outputs = list(spec.outputs)
    for assignment in itertools.product(values, repeat=len(open_cells)):
        trial = {name: list(w) for name, w in cells.items()}
        for (i, n), v in zip(open_cells, assignment):
            trial[outputs[i]][n] = v
        rho_out = {name: tuple(w) for name, w in trial.items()}
        if satisfies(spec, rho_in, rho_out):
            return rho_out
    return None


def check_consistency(spec: Spec, cfg: OracleConfig) -> OracleVerdict:
    """Search every enumerated input map for a satisfying output map; the
    first map with none becomes a counterexample (re-verified by an
    independent second search)."""
    checked = 0
    for rho_in in enumerate_inputs(spec.inputs, cfg):
        if find_solution(spec, rho_in, cfg) is None:
            assert find_solution(spec, rho_in, cfg) is None
            return OracleVerdict(checked, counterexample=rho_in)
        checked += 1
    return OracleVerdict(checked)
