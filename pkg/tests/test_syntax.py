import random

import pytest

from streampace.syntax import (
    And, BinOp, Const, Equation, Hold, In, Or, Prev, Spec, Top, Var,
    WellFormednessError, free_vars, is_valid_ident, pacing_vars, validate,
)
from randspec import random_expr, random_spec


def test_free_vars_const():
    assert free_vars(Const(5)) == set()


def test_free_vars_prev_collects_target_and_default():
    assert free_vars(Prev("x", Var("b"))) == {"x", "b"}


def test_free_vars_union_of_subtrees():
    e = BinOp("+", Var("a"), Hold("y", Const(0)))
    assert free_vars(e) == {"a", "y"}


def naive_idents(e):
    # independent second traversal, worklist style
    out, todo = set(), [e]
    while todo:
        node = todo.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, (Prev, Hold)):
            out.add(node.target)
            todo.append(node.default)
        elif isinstance(node, BinOp):
            todo.extend([node.lhs, node.rhs])
    return out


def test_free_vars_matches_naive_traversal():
    rng = random.Random(11)
    for _ in range(200):
        e = random_expr(rng, ["a", "b", "x", "y"])
        assert free_vars(e) == naive_idents(e)


def test_ident_validity():
    assert is_valid_ident("battery_lvl")
    assert is_valid_ident("_x1")
    assert not is_valid_ident("1x")
    assert not is_valid_ident("")
    for word in ("input", "output", "prev", "hold", "or", "true"):
        assert not is_valid_ident(word)


def eq(out, pacing, body):
    return Equation(out, pacing, body)


def test_validate_ok():
    spec = Spec(("a",), (eq("x", In("a"), Var("a")),))
    validate(spec)  # no exception


def test_validate_duplicate_output():
    spec = Spec(("a",), (eq("x", In("a"), Var("a")),
                         eq("x", In("a"), Var("a"))))
    with pytest.raises(WellFormednessError) as exc:
        validate(spec)
    assert exc.value.kind == "DuplicateOutput"
    assert exc.value.name == "x"


def test_validate_undeclared_in_pacing():
    spec = Spec(("a",), (eq("x", In("b"), Var("a")),))
    with pytest.raises(WellFormednessError) as exc:
        validate(spec)
    assert exc.value.kind == "UndeclaredInPacing"
    assert exc.value.name == "b"


def test_validate_duplicate_input():
    with pytest.raises(WellFormednessError) as exc:
        validate(Spec(("a", "a"), ()))
    assert exc.value.kind == "DuplicateInput"


def test_validate_input_output_clash():
    spec = Spec(("a",), (eq("a", In("a"), Const(0)),))
    with pytest.raises(WellFormednessError) as exc:
        validate(spec)
    assert exc.value.kind == "InputOutputClash"


def test_validate_undeclared_in_body():
    spec = Spec(("a",), (eq("x", In("a"), Var("z")),))
    with pytest.raises(WellFormednessError) as exc:
        validate(spec)
    assert exc.value.kind == "UndeclaredInBody"
    assert exc.value.name == "z"


def test_generated_specs_validate_and_injected_violations_fail():
    rng = random.Random(7)
    for _ in range(100):
        spec = random_spec(rng)
        validate(spec)
        # inject a violation: rename one output to clash with an input
        victim = rng.choice(spec.equations)
        broken = Spec(
            spec.inputs,
            tuple(Equation(spec.inputs[0], e.pacing, e.body)
                  if e is victim else e
                  for e in spec.equations))
        with pytest.raises(WellFormednessError):
            validate(broken)


def test_pacing_vars():
    tau = Or(And(In("a"), Top()), In("b"))
    assert pacing_vars(tau) == {"a", "b"}
