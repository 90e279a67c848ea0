import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithterm.terms import (
    BinOp,
    BudgetExceededError,
    Const,
    EvalStats,
    ParseError,
    UnboundVariableError,
    Var,
    build_extraction_term,
    evaluate,
    parse,
    render,
    term_from_json,
    term_to_json,
    variables,
)


def ev(src, **env):
    return evaluate(parse(src), env)


# --- evaluation conventions -------------------------------------------------


def test_zero_power_zero_is_one():
    assert ev("0^0") == 1


def test_floor_division_by_zero_is_zero():
    assert ev("5 / 0") == 0
    assert ev("0 / 0") == 0


def test_mod_zero_is_identity():
    assert ev("7 % 0") == 7


def test_mod_one_is_zero():
    assert ev("7 % 1") == 0


def test_truncated_subtraction_clamps():
    assert ev("3 -. 5") == 0
    assert ev("5 -. 3") == 2
    assert ev("3 -. 3") == 0


def test_mod_matches_its_definition():
    for x in range(20):
        for y in range(6):
            expected = x - y * (x // y) if y else x
            assert ev(f"{x} % {y}") == expected


def test_basic_arithmetic_and_precedence():
    assert ev("1 + 2*3") == 7
    assert ev("2^3^2") == 512  # right associative
    assert ev("3 + 5 % 4") == 0  # mod binds loosest
    assert ev("2*3 -. 4 / 2") == 4
    assert ev("(1 + 2)*3") == 9


def test_variables_and_env():
    assert ev("n^2 + n", n=5) == 30
    assert ev("a*b", a=6, b=7) == 42
    with pytest.raises(UnboundVariableError):
        ev("n + 1")
    with pytest.raises(ValueError):
        evaluate(Var("n"), {"n": -1})


def test_constants_are_natural():
    with pytest.raises(ValueError):
        Const(-1)
    with pytest.raises(TypeError):
        Const("3")


def test_power_budget():
    with pytest.raises(BudgetExceededError):
        ev("2^(2^100)")
    # small budgets also stop products
    big = BinOp("mul", Const(2**100), Const(2**100))
    with pytest.raises(BudgetExceededError):
        evaluate(big, bit_budget=150)


def test_eval_stats_track_peak():
    stats = EvalStats()
    evaluate(parse("2^10 + 1"), stats=stats)
    assert stats.peak_bits == 11


# --- parsing ----------------------------------------------------------------


def test_parse_rejects_plain_minus():
    with pytest.raises(ParseError) as err:
        parse("3 - 2")
    assert "-." in str(err.value)
    assert err.value.position == 2


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse("1 + ")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse("(1 + 2")
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse("1 ? 2")
    assert err.value.position == 2
    with pytest.raises(ParseError) as err:
        parse("1 2")
    assert "trailing" in str(err.value)


def test_fl_is_an_identity_marker():
    assert parse("fl(6 / 4)") == BinOp("floordiv", Const(6), Const(4))
    assert parse("fl(n)") == Var("n")
    assert ev("fl(7 / 2)") == 3


def test_parse_fixture_like_term():
    t = parse("fl(3^(n^2 + n) / (3^(2*n) -. (3^n + 1))) % 3^n")
    assert evaluate(t, {"n": 7}) == 13  # F(7)


def test_unknown_operator_node_rejected():
    with pytest.raises(ValueError):
        BinOp("sub", Const(1), Const(1))


# --- rendering --------------------------------------------------------------


def test_render_text_examples():
    t = parse("fl(3^(n^2 + n) / (3^(2*n) -. (3^n + 1))) % 3^n")
    assert render(t) == "fl(3^(n^2 + n) / (3^(2*n) -. (3^n + 1))) % 3^n"
    assert render(parse("2*(1 -. n) + 3")) == "2*(1 -. n) + 3"
    assert render(parse("(1 + 2)*3")) == "(1 + 2)*3"
    assert render(parse("2^(n + 1)")) == "2^(n + 1)"


def test_render_latex():
    t = parse("fl(2^n / 3) % 5")
    out = render(t, "latex")
    assert r"\left\lfloor" in out and r"\frac{2^{n}}{3}" in out and r"\bmod" in out
    assert render(parse("1 -. 2"), "latex") == r"1 \dotdiv 2"
    assert render(parse("2*n"), "latex") == r"2 \cdot n"


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render(Const(1), "html")


def test_json_round_trip():
    t = parse("fl((2*9^(n^2 + 2*n) -. 2*9^(n^2 + n)) / (9^(2*n) -. (2*9^n + 1))) % 9^n")
    data = json.loads(render(t, "json"))
    assert term_from_json(data) == t
    assert term_to_json(Const(5)) == {"const": "5"}
    assert term_from_json({"var": "n"}) == Var("n")
    with pytest.raises(ValueError):
        term_from_json({"op": "add", "args": [{"const": "1"}]})
    with pytest.raises(ValueError):
        term_from_json({"what": 1})


def random_term(rng, depth=0):
    """Random closed-ish term over small constants and the variable n."""
    if depth > 4 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return Const(rng.randrange(0, 20))
        return Var(rng.choice(["n", "k", "x"]))
    op = rng.choice(["add", "truncsub", "mul", "floordiv", "mod", "pow"])
    left = random_term(rng, depth + 1)
    right = random_term(rng, depth + 1)
    return BinOp(op, left, right)


def test_render_parse_round_trip_seeded():
    rng = random.Random(1729)
    for _ in range(1000):
        t = random_term(rng)
        assert parse(render(t)) == t


@st.composite
def term_strategy(draw, depth=0):
    if depth > 3 or draw(st.booleans()):
        if draw(st.booleans()):
            return Const(draw(st.integers(min_value=0, max_value=99)))
        return Var(draw(st.sampled_from(["n", "m"])))
    op = draw(st.sampled_from(["add", "truncsub", "mul", "floordiv", "mod", "pow"]))
    return BinOp(op, draw(term_strategy(depth + 1)), draw(term_strategy(depth + 1)))


@given(term_strategy())
def test_render_parse_round_trip_property(t):
    assert parse(render(t)) == t


@given(term_strategy())
def test_round_trip_preserves_value(t):
    env = {"n": 3, "m": 2}
    try:
        expected = evaluate(t, env)
    except BudgetExceededError:
        return
    assert evaluate(parse(render(t)), env) == expected


def test_variables():
    t = parse("n^2 + k*n")
    assert variables(t) == {"n", "k"}
    assert variables(Const(3)) == set()


# --- extraction term construction -------------------------------------------


def test_build_extraction_term_fibonacci_shape():
    t = build_extraction_term((0, 1), (), (1,), (0, 1, 1), 2, 3)
    assert render(t) == "fl(3^(n^2 + n) / (3^(2*n) -. (3^n + 1))) % 3^n"
    for n, f in enumerate([0, 1, 1, 2, 3, 5, 8, 13]):
        assert evaluate(t, {"n": n}) == f


def test_build_extraction_term_without_minus_parts():
    # naturals: A = z, B = (1 - z)^2 has plus side (1, 0, 1) and minus (0, 2)
    t = build_extraction_term((0, 1), (), (1, 0, 1), (0, 2), 2, 4)
    assert render(t) == "fl(4^(n^2 + n) / (4^(2*n) + 1 -. 2*4^n)) % 4^n"
    assert parse("fl(4^(n^2 + n) / ((4^(2*n) + 1) -. 2*4^n)) % 4^n") == t
    assert evaluate(t, {"n": 9}) == 9


def test_build_extraction_term_validation():
    with pytest.raises(ValueError):
        build_extraction_term((0, 1), (), (1,), (0, 1, 1), 2, 1)  # base too small
    with pytest.raises(ValueError):
        build_extraction_term((0, 1), (), (1,), (0, 1, 1), 3, 3)  # wrong h
    with pytest.raises(ValueError):
        build_extraction_term((0, 0, 1), (), (1,), (0, 1), 1, 3)  # numerator too deep
    with pytest.raises(ValueError):
        build_extraction_term((-1,), (), (1,), (0, 1), 1, 3)  # signed coefficient
    with pytest.raises(ValueError):
        build_extraction_term((), (), (1,), (0, 1), 1, 3)  # empty numerator
