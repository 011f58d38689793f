# Denotational reference semantics over finite-horizon streams.
#
# A stream cell is either an int or None (no value at that time point).
# All maps in one evaluation context share a single horizon T; time
# indices range over 0..T-1.

from typing import Dict, Optional, Tuple

from .syntax import (
    And, BinOp, Const, Hold, In, Or, Prev, Spec, Top, Var,
)

OptVal = Optional[int]
FiniteStream = Tuple[OptVal, ...]
InMap = Dict[str, FiniteStream]
OutMap = Dict[str, FiniteStream]
# Partial output maps are dicts where absent keys mean "no stream at all"
# (as opposed to a stream that is everywhere undefined).
ParMap = Dict[str, FiniteStream]


def horizon_of(*maps: Dict[str, FiniteStream]) -> int:
    for m in maps:
        for w in m.values():
            return len(w)
    return 0


def last(w: FiniteStream, n: int) -> OptVal:
    """Last defined value of w at or before n, or None."""
    assert 0 <= n < len(w)
    for k in range(n, -1, -1):
        if w[k] is not None:
            return w[k]
    return None


def hold_op(w: FiniteStream, n: int, v: OptVal) -> OptVal:
    """Asynchronous access: last defined value at or before n, else the
    default v (which may itself be None)."""
    got = last(w, n)
    return got if got is not None else v


def prev_op(w: FiniteStream, n: int, v: OptVal) -> OptVal:
    """Synchronous access to the previous value: undefined unless w(n) is
    defined; then the last value strictly before n, else the default v."""
    assert 0 <= n < len(w)
    if w[n] is None:
        return None
    if n > 0:
        got = last(w, n - 1)
        if got is not None:
            return got
    return v


def apply_binop(op: str, a: int, b: int) -> int:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "<":
        return int(a < b)
    if op == "==":
        return int(a == b)
    raise ValueError(f"unknown operator {op!r}")


def eval_expr(e, rho_in: InMap, rho_out: OutMap, n: int) -> OptVal:
    """Value of e at time n; operators are strict in None."""
    def lookup(name):
        return rho_in[name] if name in rho_in else rho_out[name]

    match e:
        case Const(value):
            return value
        case Var(name):
            return lookup(name)[n]
        case Prev(target, default):
            return prev_op(lookup(target), n, eval_expr(default, rho_in, rho_out, n))
        case Hold(target, default):
            return hold_op(lookup(target), n, eval_expr(default, rho_in, rho_out, n))
        case BinOp(op, lhs, rhs):
            a = eval_expr(lhs, rho_in, rho_out, n)
            b = eval_expr(rhs, rho_in, rho_out, n)
            if a is None or b is None:
                return None
            return apply_binop(op, a, b)
    raise TypeError(f"not a stream expression: {e!r}")


def eval_expr_partial(e, rho_in: InMap, rho_par: ParMap, n: int) -> OptVal:
    """Like eval_expr, but any access to an output absent from rho_par is
    undefined at the access site (even under hold)."""
    match e:
        case Const(value):
            return value
        case Var(name):
            if name in rho_in:
                return rho_in[name][n]
            return rho_par[name][n] if name in rho_par else None
        case Prev(target, default):
            d = eval_expr_partial(default, rho_in, rho_par, n)
            if target in rho_in:
                return prev_op(rho_in[target], n, d)
            if target not in rho_par:
                return None
            return prev_op(rho_par[target], n, d)
        case Hold(target, default):
            d = eval_expr_partial(default, rho_in, rho_par, n)
            if target in rho_in:
                return hold_op(rho_in[target], n, d)
            if target not in rho_par:
                return None
            return hold_op(rho_par[target], n, d)
        case BinOp(op, lhs, rhs):
            a = eval_expr_partial(lhs, rho_in, rho_par, n)
            b = eval_expr_partial(rhs, rho_in, rho_par, n)
            if a is None or b is None:
                return None
            return apply_binop(op, a, b)
    raise TypeError(f"not a stream expression: {e!r}")


def pacing_points(tau, rho_in: InMap, horizon: int) -> set:
    """Time points at which tau requires a value, for this input map."""
    match tau:
        case Top():
            return set(range(horizon))
        case In(name):
            return {n for n in range(horizon) if rho_in[name][n] is not None}
        case And(lhs, rhs):
            return (pacing_points(lhs, rho_in, horizon)
                    & pacing_points(rhs, rho_in, horizon))
        case Or(lhs, rhs):
            return (pacing_points(lhs, rho_in, horizon)
                    | pacing_points(rhs, rho_in, horizon))
    raise TypeError(f"not a pacing annotation: {tau!r}")


def well_paced(w: FiniteStream, tau, rho_in: InMap) -> bool:
    """Defined exactly at the pacing's time points."""
    points = pacing_points(tau, rho_in, len(w))
    return all((n in points) == (w[n] is not None) for n in range(len(w)))


def less_defined(w1: FiniteStream, w2: FiniteStream) -> bool:
    """w1 agrees with w2 wherever w1 is defined."""
    assert len(w1) == len(w2)
    return all(a is None or a == b for a, b in zip(w1, w2))


def satisfies(spec: Spec, rho_in: InMap, rho_out: OutMap) -> bool:
    """The satisfaction predicate: each output is well-paced and agrees with
    its defining expression at every defined point."""
    for eq in spec.equations:
        w = rho_out[eq.output]
        if not well_paced(w, eq.pacing, rho_in):
            return False
        denot = tuple(
            eval_expr(eq.body, rho_in, rho_out, n) for n in range(len(w)))
        if not less_defined(w, denot):
            return False
    return True


def totalize(rho_par: ParMap, rho_tot: OutMap) -> OutMap:
    """Complete a partial output map, falling back to rho_tot outside its
    domain."""
    out = dict(rho_tot)
    out.update(rho_par)
    return out
