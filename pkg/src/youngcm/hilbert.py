"""Hilbert polynomials and functions of diagram structures.

A box of weight ``w`` contributes ``O_X(-w)`` to the structure sheaf of the
multiple structure, where ``X`` is the ``n``-dimensional support, so every
invariant here is a sum over boxes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .diagram import Diagram, diagonal_profile
from .errors import BoxNotInDiagram, DimensionError
from .polynomial import ExactPolynomial


@lru_cache(maxsize=None)
def b_poly(n: int, i: int) -> ExactPolynomial:
    """``binom(n + d - i, n)`` as a polynomial in ``d``: the Euler
    characteristic of ``O_{P^n}(d - i)``.

    ``n = -1`` (empty support) gives the zero polynomial.
    """
    if n == -1:
        return ExactPolynomial()
    if n < 0:
        raise ValueError(f"support dimension must be >= -1, got {n}")
    d = ExactPolynomial.variable()
    out = ExactPolynomial.constant(1)
    for t in range(1, n + 1):
        out = out * (d + (t - i))
    return out * Fraction(1, factorial(n))


def hilbert_polynomial(d: Diagram, n: int) -> ExactPolynomial:
    total = ExactPolynomial()
    for weight, count in Counter(sum(b) for b in d.boxes).items():
        total = total + count * b_poly(n, weight)
    return total


def hilbert_function(d: Diagram, n: int, deg: int) -> int:
    """Dimension of the degree-``deg`` part of the coordinate ring.

    Boxes heavier than ``deg`` contribute nothing.
    """
    if n < 0 or deg < 0:
        raise ValueError("n and deg must be non-negative")
    return sum(comb(n + deg - w, n) for w in (sum(b) for b in d.boxes) if w <= deg)


def multiplicity(d: Diagram) -> int:
    return len(d.boxes)


@dataclass(frozen=True)
class StructureDecomposition:
    """``O_Y`` as the direct sum of ``O_X(-w)`` over the box weights ``w``."""

    support_dim: int
    weights: tuple

    def hilbert_polynomial(self) -> ExactPolynomial:
        total = ExactPolynomial()
        for w in self.weights:
            total = total + b_poly(self.support_dim, w)
        return total

    def __str__(self):
        if not self.weights:
            return "0"
        return " + ".join(
            f"O_X({-w})^{c}" if c > 1 else f"O_X({-w})"
            for w, c in sorted(Counter(self.weights).items())
        )


def structure_decomposition(d: Diagram, n: int) -> StructureDecomposition:
    return StructureDecomposition(n, tuple(sorted(sum(b) for b in d.boxes)))


class _Zero:
    """The product landed in the ideal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = _Zero()


def algebra_multiply(d: Diagram, a, b):
    """Multiply two basis monomials of the coordinate ring of ``d``.

    Returns the box ``a + b`` or :data:`ZERO` when that box is outside ``d``.
    """
    a, b = tuple(a), tuple(b)
    for box in (a, b):
        if box not in d.boxes:
            raise BoxNotInDiagram(f"{box} is not a box of the diagram")
    c = tuple(x + y for x, y in zip(a, b))
    return c if c in d.boxes else ZERO


def hilbert_equivalent(a: Diagram, b: Diagram) -> bool:
    """Same Hilbert function, i.e. the same number of boxes on every diagonal."""
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return diagonal_profile(a) == diagonal_profile(b)


R_equivalent = hilbert_equivalent
