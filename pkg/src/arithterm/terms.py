"""Term syntax over natural numbers: AST, evaluator, parser, renderers.

The term language is the closure of natural constants and variables under
addition, truncated subtraction, multiplication, floor division, power and
the remainder derived from floor division.  Conventions:

    x -. y  = max(x - y, 0)
    x / y   = floor(x / y), and x / 0 = 0
    x ^ y   with 0 ^ 0 = 1
    x % y   = x -. y * (x / y), hence x % 0 = x and x % 1 = 0

The evaluator works on Python integers and therefore never overflows, but a
bit budget guards against accidentally materializing astronomically large
powers; crossing it raises BudgetExceededError instead of hanging.

Concrete syntax accepted by ``parse``:

    term   := sum (('%' sum))*
    sum    := product (('+' | '-.') product)*
    product:= power (('*' | '/') power)*
    power  := atom ('^' power)?
    atom   := NAT | IDENT | '(' term ')' | 'fl' '(' term ')'

``/`` always floors, so ``fl`` is semantically the identity; the renderer
prints every division as ``fl(x / y)`` to show where a floor is doing work,
and parsing simply unwraps the marker, so rendered terms round-trip.
Plain '-' is not an operator here; the parser points at it and suggests '-.'.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

Term = Union["Const", "Var", "BinOp"]

_OPS = ("add", "truncsub", "mul", "floordiv", "pow", "mod")

DEFAULT_BIT_BUDGET = 1 << 26


class BudgetExceededError(RuntimeError):
    """Evaluation would produce an integer beyond the configured bit budget."""


class UnboundVariableError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unbound variable: {self.name}"


@dataclass(frozen=True, slots=True)
class Const:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise TypeError("constant must be an int")
        if self.value < 0:
            raise ValueError("constants are natural numbers")


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"bad variable name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str
    left: Term
    right: Term

    def __post_init__(self):
        if self.op not in _OPS:
            raise ValueError(f"unknown operator: {self.op!r}")


@dataclass
class EvalStats:
    """Mutable scratch record an evaluation can fill in."""

    peak_bits: int = 0

    def note(self, value: int) -> None:
        bits = value.bit_length()
        if bits > self.peak_bits:
            self.peak_bits = bits


def evaluate(
    term: Term,
    env: Mapping[str, int] | None = None,
    *,
    bit_budget: int = DEFAULT_BIT_BUDGET,
    stats: EvalStats | None = None,
) -> int:
    """Value of ``term`` under ``env``; every intermediate is a natural number."""
    env = env or {}
    for name, value in env.items():
        if value < 0:
            raise ValueError(f"environment value for {name!r} must be >= 0")

    def go(t: Term) -> int:
        match t:
            case Const(value=v):
                return v
            case Var(name=name):
                try:
                    return env[name]
                except KeyError:
                    raise UnboundVariableError(name) from None
            case BinOp(op=op, left=left, right=right):
                a = go(left)
                if op == "pow":
                    e = go(right)
                    if a > 1 and e * a.bit_length() > bit_budget:
                        raise BudgetExceededError(
                            f"power needs about {e * a.bit_length()} bits, budget is {bit_budget}"
                        )
                    out = a**e
                else:
                    b = go(right)
                    if op == "add":
                        out = a + b
                    elif op == "truncsub":
                        out = a - b if a > b else 0
                    elif op == "mul":
                        if a.bit_length() + b.bit_length() > bit_budget:
                            raise BudgetExceededError(
                                f"product needs about {a.bit_length() + b.bit_length()} bits"
                            )
                        out = a * b
                    elif op == "floordiv":
                        out = a // b if b else 0
                    else:  # mod
                        out = a % b if b else a
                if stats is not None:
                    stats.note(out)
                return out
        raise TypeError(f"not a term: {t!r}")

    return go(term)


# --- parsing ---------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "num" | "ident" | "op" | "lparen" | "rparen" | "end"
    text: str
    pos: int


def _tokenize(src: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(_Token("num", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(_Token("ident", src[i:j], i))
            i = j
            continue
        if ch == "-":
            if i + 1 < n and src[i + 1] == ".":
                toks.append(_Token("op", "-.", i))
                i += 2
                continue
            raise ParseError("'-' is not an operator here, use '-.' for truncated subtraction", i)
        if ch in "+*/^%":
            toks.append(_Token("op", ch, i))
            i += 1
            continue
        if ch == "(":
            toks.append(_Token("lparen", ch, i))
            i += 1
            continue
        if ch == ")":
            toks.append(_Token("rparen", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(_Token("end", "", n))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> _Token:
        t = self.next()
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            raise ParseError(f"expected {want!r}, found {t.text!r}", t.pos)
        return t

    def term(self) -> Term:
        left = self.sum_()
        while self.peek().kind == "op" and self.peek().text == "%":
            self.next()
            left = BinOp("mod", left, self.sum_())
        return left

    def sum_(self) -> Term:
        left = self.product()
        while self.peek().kind == "op" and self.peek().text in ("+", "-."):
            op = self.next().text
            right = self.product()
            left = BinOp("add" if op == "+" else "truncsub", left, right)
        return left

    def product(self) -> Term:
        left = self.power()
        while self.peek().kind == "op" and self.peek().text in ("*", "/"):
            op = self.next().text
            right = self.power()
            left = BinOp("mul" if op == "*" else "floordiv", left, right)
        return left

    def power(self) -> Term:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.next()
            return BinOp("pow", base, self.power())
        return base

    def atom(self) -> Term:
        t = self.next()
        if t.kind == "num":
            return Const(int(t.text))
        if t.kind == "ident":
            if t.text == "fl":
                self.expect("lparen")
                inner = self.term()
                self.expect("rparen")
                return inner
            return Var(t.text)
        if t.kind == "lparen":
            inner = self.term()
            self.expect("rparen")
            return inner
        raise ParseError(f"expected a term, found {t.text!r}" if t.text else "unexpected end of input", t.pos)


def parse(src: str) -> Term:
    p = _Parser(src)
    out = p.term()
    tail = p.peek()
    if tail.kind != "end":
        raise ParseError(f"trailing input {tail.text!r}", tail.pos)
    return out


# --- rendering ---------------------------------------------------------------

# binding strength of each operator in the concrete syntax
_PREC = {"mod": 0, "add": 1, "truncsub": 1, "mul": 2, "floordiv": 2, "pow": 3}
_TEXT = {"add": " + ", "truncsub": " -. ", "mul": "*", "floordiv": " / ", "mod": " % ", "pow": "^"}


def _render_text(t: Term, need: int) -> str:
    match t:
        case Const(value=v):
            return str(v)
        case Var(name=name):
            return name
        case BinOp(op="floordiv", left=left, right=right):
            # the floor marker brackets its argument, so the whole thing is
            # atomic; the children still need product-level precedence so
            # the inner '/' reparses in the right place
            return f"fl({_render_text(left, 2)} / {_render_text(right, 3)})"
        case BinOp(op=op, left=left, right=right):
            prec = _PREC[op]
            if op == "pow":
                body = f"{_render_text(left, 4)}^{_render_text(right, 3)}"
            else:
                body = f"{_render_text(left, prec)}{_TEXT[op]}{_render_text(right, prec + 1)}"
            return f"({body})" if prec < need else body
    raise TypeError(f"not a term: {t!r}")


def _render_latex(t: Term, need: int) -> str:
    match t:
        case Const(value=v):
            return str(v)
        case Var(name=name):
            return name
        case BinOp(op="floordiv", left=left, right=right):
            return (
                r"\left\lfloor\frac{" + _render_latex(left, 0) + "}{" + _render_latex(right, 0) + r"}\right\rfloor"
            )
        case BinOp(op="pow", left=left, right=right):
            return _render_latex(left, 4) + "^{" + _render_latex(right, 0) + "}"
        case BinOp(op=op, left=left, right=right):
            glue = {"add": " + ", "truncsub": r" \dotdiv ", "mul": r" \cdot ", "mod": r" \bmod "}[op]
            prec = _PREC[op]
            body = _render_latex(left, prec) + glue + _render_latex(right, prec + 1)
            return r"\left(" + body + r"\right)" if prec < need else body
    raise TypeError(f"not a term: {t!r}")


def term_to_json(t: Term) -> dict:
    match t:
        case Const(value=v):
            return {"const": str(v)}
        case Var(name=name):
            return {"var": name}
        case BinOp(op=op, left=left, right=right):
            return {"op": op, "args": [term_to_json(left), term_to_json(right)]}
    raise TypeError(f"not a term: {t!r}")


def term_from_json(data: dict) -> Term:
    if not isinstance(data, dict):
        raise ValueError("term JSON must be an object")
    if "const" in data:
        return Const(int(data["const"]))
    if "var" in data:
        return Var(data["var"])
    if "op" in data:
        args = data.get("args", ())
        if len(args) != 2:
            raise ValueError("operator node needs exactly two arguments")
        return BinOp(data["op"], term_from_json(args[0]), term_from_json(args[1]))
    raise ValueError(f"unrecognized term node: {data!r}")


def render(t: Term, fmt: str = "text") -> str:
    if fmt == "text":
        return _render_text(t, 0)
    if fmt == "latex":
        return _render_latex(t, 0)
    if fmt == "json":
        return json.dumps(term_to_json(t))
    raise ValueError(f"unknown format: {fmt!r}")


def variables(t: Term) -> set[str]:
    out: set[str] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, BinOp):
            stack.append(node.left)
            stack.append(node.right)
    return out


# --- construction of extraction terms ----------------------------------------


def _nat_poly_terms(coeffs: tuple[int, ...], h: int, base: int, var: str) -> Iterator[Term]:
    """Terms base^(n^2 + j*n) weighted by coeffs, j = h - i, i ascending."""
    n = Var(var)
    nsq = BinOp("pow", n, Const(2))
    for i, coeff in enumerate(coeffs):
        if coeff == 0:
            continue
        j = h - i
        if j == 0:
            expo: Term = nsq
        elif j == 1:
            expo = BinOp("add", nsq, n)
        else:
            expo = BinOp("add", nsq, BinOp("mul", Const(j), n))
        powt: Term = BinOp("pow", Const(base), expo)
        yield powt if coeff == 1 else BinOp("mul", Const(coeff), powt)


def _nat_den_terms(coeffs: tuple[int, ...], h: int, base: int, var: str) -> Iterator[Term]:
    """Terms base^(j*n) weighted by coeffs, j = h - i, i ascending."""
    n = Var(var)
    for i, coeff in enumerate(coeffs):
        if coeff == 0:
            continue
        j = h - i
        if j == 0:
            yield Const(coeff)
            continue
        expo = n if j == 1 else BinOp("mul", Const(j), n)
        powt: Term = BinOp("pow", Const(base), expo)
        yield powt if coeff == 1 else BinOp("mul", Const(coeff), powt)


def _sum_terms(parts: Iterator[Term]) -> Term | None:
    acc: Term | None = None
    for part in parts:
        acc = part if acc is None else BinOp("add", acc, part)
    return acc


def build_extraction_term(
    a_plus: tuple[int, ...],
    a_minus: tuple[int, ...],
    b_plus: tuple[int, ...],
    b_minus: tuple[int, ...],
    h: int,
    base: int,
    var: str = "n",
) -> Term:
    """Assemble fl(numerator / denominator) % base^n from split coefficients.

    Coefficient tuples are ascending in i, all entries natural.  ``h`` must
    equal the degree of (b_plus - b_minus), the numerator difference must
    have degree below h, and exponents are formed as n^2 + (h-i)n on the
    numerator side and (h-i)n on the denominator side, so all stay natural.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if any(c < 0 for c in a_plus + a_minus + b_plus + b_minus):
        raise ValueError("split coefficients must be natural")

    def deg(plus: tuple[int, ...], minus: tuple[int, ...]) -> int:
        top = -1
        for i in range(max(len(plus), len(minus))):
            p = plus[i] if i < len(plus) else 0
            m = minus[i] if i < len(minus) else 0
            if p != m:
                top = i
        return top

    if deg(b_plus, b_minus) != h:
        raise ValueError("h must be the degree of the denominator difference")
    if deg(a_plus, a_minus) >= h:
        raise ValueError("numerator difference degree must be below h")

    num_plus = _sum_terms(_nat_poly_terms(a_plus, h, base, var))
    num_minus = _sum_terms(_nat_poly_terms(a_minus, h, base, var))
    den_plus = _sum_terms(_nat_den_terms(b_plus, h, base, var))
    den_minus = _sum_terms(_nat_den_terms(b_minus, h, base, var))
    if num_plus is None or den_plus is None:
        raise ValueError("positive parts must be nonzero")

    num = num_plus if num_minus is None else BinOp("truncsub", num_plus, num_minus)
    den = den_plus if den_minus is None else BinOp("truncsub", den_plus, den_minus)
    quot = BinOp("floordiv", num, den)
    modulus = BinOp("pow", Const(base), Var(var))
    return BinOp("mod", quot, modulus)
