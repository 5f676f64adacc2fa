"""Brute-force checks that do not go through the diagram formulas.

Hilbert functions are obtained by listing every monomial of a given degree
and testing it against every generator; Hilbert polynomials by Lagrange
interpolation of those counts; resolutions by expanding the Hilbert series
numerator. Only the enumeration is vectorized with numpy.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import comb

import numpy as np

from .diagram import Diagram
from .errors import InconsistentValues, ResourceLimit
from .ideal import MonomialIdeal
from .polynomial import ExactPolynomial

DEFAULT_CAP = 10**7
CAP_ENV = "YOUNGCM_ORACLE_CAP"


def resource_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


_CACHE = {}
_CACHE_MAX_ENTRIES = 200_000  # per array; bigger tables are rebuilt on demand


def _exponent_vectors(d: int, k: int) -> np.ndarray:
    """All exponent vectors of total degree ``d`` in ``k`` variables, one per row."""
    key = (d, k)
    if key in _CACHE:
        return _CACHE[key]
    if k == 1:
        out = np.array([[d]], dtype=np.int64)
    else:
        blocks = []
        for first in range(d, -1, -1):
            rest = _exponent_vectors(d - first, k - 1)
            blocks.append(np.hstack([np.full((rest.shape[0], 1), first, dtype=np.int64), rest]))
        out = np.vstack(blocks)
    out.setflags(write=False)
    if out.size <= _CACHE_MAX_ENTRIES:
        _CACHE[key] = out
    return out


def monomials_of_degree(d: int, k: int) -> np.ndarray:
    return _exponent_vectors(d, k)


def standard_monomial_count(ideal: MonomialIdeal, d: int, cap: int | None = None) -> int:
    """Number of degree-``d`` monomials in all variables that no generator divides."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    k = len(ideal.vars)
    total = comb(d + k - 1, k - 1)
    cap = resource_cap() if cap is None else cap
    if total > cap:
        raise ResourceLimit(f"{total} monomials of degree {d} in {k} variables exceeds cap {cap}")
    monos = _exponent_vectors(d, k)
    inside = np.zeros(monos.shape[0], dtype=bool)
    for g in ideal.gens:
        inside |= np.all(monos >= np.asarray(g, dtype=np.int64), axis=1)
    return int(monos.shape[0] - inside.sum())


def degree_table(ideal: MonomialIdeal, max_d: int, cap: int | None = None) -> list:
    """``[standard_monomial_count(ideal, d) for d in 0..max_d]``."""
    return [standard_monomial_count(ideal, d, cap) for d in range(max_d + 1)]


def stabilization_bound(ideal: MonomialIdeal) -> int:
    """Sum of generator degrees; the Hilbert function is polynomial from here on.

    The Taylor resolution bounds the degree of the Hilbert series numerator
    by the degree of the lcm of all generators, which this dominates.
    """
    return sum(sum(g) for g in ideal.gens)


def _lagrange(points) -> list:
    """Coefficients (constant first) of the interpolating polynomial."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, c in enumerate(basis):
            coeffs[t] += yi * c / denom
    return coeffs


def interpolate_polynomial(values, start: int, degree_bound: int) -> ExactPolynomial:
    """Polynomial of degree at most ``degree_bound`` through ``(start + t, values[start + t])``.

    ``values`` is a full degree table indexed from degree 0. Every value past
    the first ``degree_bound + 1`` is used as a consistency check; at least
    one is required.
    """
    pts = [(d, Fraction(values[d])) for d in range(start, len(values))]
    need = degree_bound + 2
    if len(pts) < need:
        raise ValueError(f"need {need} values from degree {start}, have {len(pts)}")
    coeffs = _lagrange(pts[:degree_bound + 1])
    poly = ExactPolynomial(coeffs)
    for d, v in pts[degree_bound + 1:]:
        if poly(d) != v:
            raise InconsistentValues(
                f"value {v} at degree {d} is off the interpolant {poly}; "
                f"start {start} may be below the stabilization degree")
    return poly


def k_polynomial_check(d2: Diagram, pair) -> bool:
    """Expand ``(1-t)^2 * sum_d h(d) t^d`` for the standard monomials of ``k[x, y]``
    and compare with ``1 - sum_j t^gen_j + sum_i t^syz_i``."""
    if d2.dim != 2:
        raise ValueError("expected a 2D diagram")
    top = max([d2.max_weight + 1] + list(pair.gen_degrees) + list(pair.syz_degrees))
    series = [0] * (top + 3)
    for deg in range(top + 1):
        series[deg] = sum(1 for a in range(deg + 1) if (a, deg - a) in d2.boxes)
    lhs = [0] * (len(series) + 2)
    for t, h in enumerate(series):
        lhs[t] += h
        lhs[t + 1] -= 2 * h
        lhs[t + 2] += h
    rhs = [0] * len(lhs)
    rhs[0] += 1
    for a in pair.gen_degrees:
        rhs[a] -= 1
    for b in pair.syz_degrees:
        rhs[b] += 1
    return lhs == rhs
