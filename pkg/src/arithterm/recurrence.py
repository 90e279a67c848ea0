"""Linear recurrences with constant rational coefficients.

A sequence s is described here by

    s(n + d) + coeffs[0] * s(n + d - 1) + ... + coeffs[d - 1] * s(n) = 0

together with the first d values s(0..d-1), which must be integers.  The
last coefficient must be nonzero, so the order is exact.  All evaluation is
done with Fraction arithmetic and it is a hard error if any term of the
sequence fails to be an integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polys import Polynomial, RationalFunction

Coeff = int | Fraction | str


class NonIntegerTermError(ValueError):
    """A recurrence produced a non-integer value at some index."""

    def __init__(self, index: int, value: Fraction):
        super().__init__(f"term at index {index} is not an integer: {value}")
        self.index = index
        self.value = value


def _as_fraction(value: Coeff) -> Fraction:
    # str is accepted so JSON specs can carry exact values like "-1/2"
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected int, str or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Recurrence:
    """Recurrence order, coefficient vector, and integer initial segment."""

    order: int
    coeffs: tuple[Fraction, ...]
    init: tuple[int, ...]

    def __init__(self, order: int, coeffs: Iterable[Coeff], init: Iterable[int | str]):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        init = tuple(int(v) for v in init)
        if order < 1:
            raise ValueError("order must be at least 1")
        if len(coeffs) != order:
            raise ValueError(f"expected {order} coefficients, got {len(coeffs)}")
        if len(init) != order:
            raise ValueError(f"expected {order} initial values, got {len(init)}")
        if coeffs[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "init", init)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
            "init": [str(v) for v in self.init],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Recurrence":
        try:
            return cls(int(data["order"]), data["coeffs"], data["init"])
        except KeyError as exc:
            raise ValueError(f"recurrence spec is missing field {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "Recurrence":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("recurrence spec must be a JSON object")
        return cls.from_json_dict(data)


@dataclass(frozen=True, slots=True)
class SequenceWindow:
    """A contiguous prefix s(0..len-1) of a sequence, tagged with its source."""

    values: tuple[int, ...]
    source: str = "recurrence"

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def eval_oracle(rec: Recurrence, count: int) -> SequenceWindow:
    """First ``count`` terms of the sequence, computed exactly.

    Raises NonIntegerTermError as soon as a rational non-integer shows up;
    the recurrence then does not define an integer sequence.
    """
    if count < 0:
        raise ValueError("count must be a natural number")
    vals: list[int] = list(rec.init[:count])
    window: list[Fraction] = [Fraction(v) for v in vals]
    for n in range(len(vals), count):
        nxt = -sum(rec.coeffs[i] * window[n - 1 - i] for i in range(rec.order))
        if nxt.denominator != 1:
            raise NonIntegerTermError(n, nxt)
        vals.append(nxt.numerator)
        window.append(nxt)
    return SequenceWindow(tuple(vals))


def generating_function(rec: Recurrence) -> RationalFunction:
    """Ordinary generating function of the sequence as a reduced fraction.

    The denominator is built directly from the recurrence coefficients and
    the numerator collects the first d coefficients of the product of the
    series with that denominator; its degree is below d by construction.
    """
    d = rec.order
    den = Polynomial([Fraction(1), *rec.coeffs])
    s = [Fraction(v) for v in rec.init]
    num_coeffs = []
    for n in range(d):
        acc = s[n]
        for i in range(1, min(n, d) + 1):
            acc += rec.coeffs[i - 1] * s[n - i]
        num_coeffs.append(acc)
    return RationalFunction(Polynomial(num_coeffs), den)


def gf_shift(f: RationalFunction, c: int) -> RationalFunction:
    """Generating function of n -> s(n) + c^(n+1)."""
    if c < 0:
        raise ValueError("shift must be a natural number")
    if c == 0:
        return f
    return f + RationalFunction(Polynomial([c]), Polynomial([1, -c]))


def recurrence_from_denominator(den: Polynomial, init: Sequence[int]) -> Recurrence:
    """Recurrence whose sequence has generating function (.)/den.

    The denominator must have a nonzero constant term; it is normalized so
    that the constant term becomes 1 and the remaining coefficients give the
    recurrence vector.
    """
    if den[0] == 0:
        raise ValueError("denominator constant term must be nonzero")
    scaled = den.scaled(1 / den[0])
    d = scaled.degree()
    if d < 1:
        raise ValueError("denominator must have positive degree")
    coeffs = tuple(scaled[k] for k in range(1, d + 1))
    if len(init) != d:
        raise ValueError(f"expected {d} initial values, got {len(init)}")
    return Recurrence(d, coeffs, tuple(init))


def floor_root(x: int, k: int) -> int:
    """Largest integer r with r^k <= x, for x >= 0, k >= 1."""
    if x < 0:
        raise ValueError("x must be a natural number")
    if x < 2 or k == 1:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while r**k > x:
        r = (r * (k - 1) + x // r ** (k - 1)) // k
    while (r + 1) ** k <= x:
        r += 1
    return r


def growth_constant(rec: Recurrence) -> int:
    """Small integer c >= 1 with |s(n)| < c^(n+1) for all n.

    Start from one more than the floor of d * sum|coeffs| (which dominates
    the recurrence step inductively once the initial terms comply) and bump
    until the d initial terms satisfy |s(k)| < c^(k+1) as well.  All checks
    are exact integer comparisons.
    """
    d = rec.order
    total = sum(abs(c) for c in rec.coeffs) * d
    c = max(total.numerator // total.denominator + 1, 1)
    while True:
        if all(abs(v) < c ** (k + 1) for k, v in enumerate(rec.init)):
            return c
        # smallest c violating term k needs c^(k+1) > |s(k)|
        c = max(floor_root(abs(v), k + 1) + 1 for k, v in enumerate(rec.init))


def is_provably_nonnegative(rec: Recurrence, probe: int = 8) -> bool:
    """Conservative check that s(n) >= 0 for every n.

    True is only returned with a proof in hand; False just means no proof
    was found, not that the sequence goes negative.  Three routes:

    1. all recurrence coefficients are <= 0 and all initial terms >= 0,
       so every new term is a nonnegative combination of earlier ones;
    2. same criterion after replaying a short prefix, in case only the
       first few terms needed special handling;
    3. order 2 with s(n+2) = p*s(n+1) + q*s(n), q < 0: a linear minorant
       s(n+1) >= L*s(n) survives the step when 0 <= L <= p and
       L*(p - L) >= -q, so one valid base pair settles everything after it.
    """
    window = eval_oracle(rec, probe + rec.order).values
    if any(v < 0 for v in window):
        return False
    if all(c <= 0 for c in rec.coeffs):
        return True
    if rec.order == 2:
        p, q = -rec.coeffs[0], -rec.coeffs[1]
        if p > 0 > q:
            for lam in (Fraction(1), p / 2, 2 * (-q) / p):
                if not (0 <= lam <= p and lam * (p - lam) >= -q):
                    continue
                for k in range(len(window) - 1):
                    if window[k + 1] >= lam * window[k] >= 0:
                        return True
    return False
