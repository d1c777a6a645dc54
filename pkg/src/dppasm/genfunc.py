"""Exact polynomials in ``q`` and the product formulas for DPP counts."""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping

from .errors import InternalInvariantViolation, NonExactPolynomialDivision

__all__ = [
    "QPolynomial", "q_bracket", "q_factorial", "count_formula",
    "q_count_formula", "nosp_gf_formula", "empirical_gf",
]


class QPolynomial:
    """Polynomial with integer coefficients in one variable ``q``.

    Immutable; coefficients are stored sparsely without zeros.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = enumerate(coefficients)
        c = {}
        for e, v in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if v:
                c[int(e)] = c.get(int(e), 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        return cls({exponent: coefficient})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    def coefficient_list(self) -> list[int]:
        return [self._c.get(e, 0) for e in range(self.degree + 1)]

    def __call__(self, q: int) -> int:
        return sum(v * q**e for e, v in self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPolynomial({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division over the integers.

        Raises :class:`NonExactPolynomialDivision` if a quotient coefficient
        would not be an integer.
        """
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        d = divisor.degree
        lead = divisor._c[d]
        rem = self.coefficient_list()
        quot = [0] * max(len(rem) - d, 0)
        for e in range(len(rem) - 1, d - 1, -1):
            if not rem[e]:
                continue
            f, r = divmod(rem[e], lead)
            if r:
                raise NonExactPolynomialDivision(
                    f"leading coefficient {lead} does not divide {rem[e]}")
            quot[e - d] = f
            for e2, v in divisor._c.items():
                rem[e - d + e2] -= f * v
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        quot, rem = self.divmod(divisor)
        if rem:
            raise NonExactPolynomialDivision(f"({self}) / ({divisor}) leaves remainder {rem}")
        return quot

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                term = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(term if v > 0 else f"-{term}")
            else:
                out.append(("+ " if v > 0 else "- ") + term)
        return " ".join(out)

    def __repr__(self):
        return f"QPolynomial({self._c!r})"

    _TERM = re.compile(r"^(?:(\d+)\*?)?(q(?:\^(\d+))?)?$")

    @classmethod
    def parse(cls, text: str) -> "QPolynomial":
        """Inverse of ``str``: accepts e.g. ``1 + 2*q - q^3``."""
        tokens = text.replace("-", " - ").replace("+", " + ").split()
        c: dict[int, int] = {}
        sign = 1
        expect_term = True
        for tok in tokens:
            if tok in "+-":
                if tok == "-":
                    sign = -sign
                expect_term = True
                continue
            m = cls._TERM.match(tok)
            if not expect_term or not m or not (m.group(1) or m.group(2)):
                raise ValueError(f"cannot parse polynomial term {tok!r} in {text!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            exp = 0 if not m.group(2) else int(m.group(3) or 1)
            c[exp] = c.get(exp, 0) + sign * coef
            sign, expect_term = 1, False
        if expect_term and tokens:
            raise ValueError(f"dangling operator in {text!r}")
        return cls(c)


ONE = QPolynomial({0: 1})


def q_bracket(k: int, step: int = 1) -> QPolynomial:
    """``1 + q^step + ... + q^((k-1)*step)``."""
    if k < 1 or step < 1:
        raise ValueError("q_bracket needs k >= 1 and step >= 1")
    return QPolynomial({i * step: 1 for i in range(k)})


def q_factorial(k: int) -> QPolynomial:
    out = ONE
    for i in range(2, k + 1):
        out = out * q_bracket(i)
    return out


def count_formula(n: int) -> int:
    """Number of DPPs of order ``n`` (equivalently ``n x n`` ASMs)."""
    num = math.prod(math.factorial(3 * j + 1) for j in range(n))
    den = math.prod(math.factorial(n + j) for j in range(n))
    value, rem = divmod(num, den)
    if rem:
        raise InternalInvariantViolation(f"product formula not integral at n={n}")
    return value


def q_count_formula(n: int) -> QPolynomial:
    """q-analogue of :func:`count_formula`, the weight generating function of DPPs.

    The numerator is divided by one bracket of the denominator at a time;
    every step must be exact.
    """
    num = ONE
    for j in range(n):
        num = num * q_factorial(3 * j + 1)
    for j in range(n):
        for i in range(2, n + j + 1):
            num = num.exact_div(q_bracket(i))
    return num


def nosp_gf_formula(n: int) -> QPolynomial:
    """Weight generating function of DPPs of order ``n`` with no special parts."""
    out = ONE
    for i in range(1, n + 1):
        out = out * q_bracket(i, i)
    return out


def empirical_gf(weights: Iterable[int]) -> QPolynomial:
    c: dict[int, int] = {}
    for w in weights:
        c[w] = c.get(w, 0) + 1
    return QPolynomial(c)
