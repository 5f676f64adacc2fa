"""Univariate polynomials in ``d`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class ExactPolynomial:
    """Polynomial ``sum(c[t] * d**t)`` with :class:`~fractions.Fraction` coefficients.

    Immutable and hashable. The zero polynomial has an empty coefficient
    tuple and degree ``-1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        self._coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, ExactPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return ExactPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (Fraction(0),) * (n - len(self._coeffs))
        b = other._coeffs + (Fraction(0),) * (n - len(other._coeffs))
        return ExactPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ExactPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self._coeffs]})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "d") -> str:
        """Render as e.g. ``9*d - 11`` or ``1/2*d^2 + 3/2*d + 1``."""
        if not self._coeffs:
            return "0"
        parts = []
        for t in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[t]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if t == 0:
                body = str(mag)
            else:
                mono = var if t == 1 else f"{var}^{t}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        """Coefficient list, constant term first; non-integers as ``"p/q"``."""
        return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
                for c in self._coeffs]
