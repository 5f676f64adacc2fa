"""Degenerating the union of two coplanar structures onto a single support.

``X = V(x, y)`` and ``Z = V(z, y)`` are two copies of ``P^n`` in the
hyperplane ``y = 0`` of ``P^(n+2)``. A partition ``lam`` gives a structure on
``X`` with ideal generated by ``x^lam_j * y^j``, and ``mu`` a structure on
``Z`` generated by ``z^mu_j * y^j``. Moving ``Z`` onto ``X`` (``z -> x``)
gives a flat family whose special fiber is the structure of ``lam + mu``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, Partition, partition_sum, partition_to_diagram, three_dim_diagram
from .errors import InvalidRange
from .hilbert import b_poly, hilbert_polynomial
from .ideal import MonomialIdeal, VariableList, ideal_from_diagram, ideal_intersection
from .polynomial import ExactPolynomial


@dataclass(frozen=True)
class FamilySetup:
    lam: Partition
    mu: Partition
    n: int = 1

    def __post_init__(self):
        for name in ("lam", "mu"):
            value = getattr(self, name)
            if not isinstance(value, Partition):
                object.__setattr__(self, name, Partition(tuple(value)))
        if self.n < 0:
            raise ValueError("support dimension must be non-negative")

    @property
    def ring(self) -> VariableList:
        """``x, y, z`` and the remaining ``n`` coordinates ``w1..wn``."""
        return VariableList(("x", "y", "z") + tuple(f"w{i + 1}" for i in range(self.n)), 3)


def structure_on_x(f: FamilySetup) -> MonomialIdeal:
    """Ideal of ``lam`` on ``X = V(x, y)`` inside :attr:`FamilySetup.ring`."""
    ring = f.ring
    return ideal_from_diagram(
        partition_to_diagram(f.lam), VariableList(("x", "y"), 2)).embed(ring)


def structure_on_z(f: FamilySetup) -> MonomialIdeal:
    """Ideal of ``mu`` on ``Z = V(z, y)``; the diagram's x axis is ``z``."""
    ring = f.ring
    return ideal_from_diagram(
        partition_to_diagram(f.mu), VariableList(("z", "y"), 2)).embed(ring)


def intersection_structure(f: FamilySetup) -> Diagram:
    return three_dim_diagram(f.lam, f.mu)


@dataclass(frozen=True)
class FlatnessResult:
    holds: bool
    hilb_lam: ExactPolynomial
    hilb_mu: ExactPolynomial
    hilb_intersection: ExactPolynomial
    hilb_sum: ExactPolynomial

    def __bool__(self):
        return self.holds


def flatness_check(f: FamilySetup) -> FlatnessResult:
    """Compare ``Hilb(lam) + Hilb(mu) - Hilb(lam cap mu)`` with ``Hilb(lam + mu)``.

    The intersection lives on ``P^(n-1)``, which is empty for ``n = 0``.
    """
    h_lam = hilbert_polynomial(partition_to_diagram(f.lam), f.n)
    h_mu = hilbert_polynomial(partition_to_diagram(f.mu), f.n)
    h_cap = hilbert_polynomial(intersection_structure(f), f.n - 1)
    h_sum = hilbert_polynomial(partition_to_diagram(partition_sum(f.lam, f.mu)), f.n)
    return FlatnessResult(h_lam + h_mu - h_cap == h_sum, h_lam, h_mu, h_cap, h_sum)


def generic_fiber_ideal(f: FamilySetup) -> MonomialIdeal:
    """Ideal of the union of the two structures (intersection of their ideals)."""
    return ideal_intersection(structure_on_x(f), structure_on_z(f))


def closed_form_generators(f: FamilySetup) -> MonomialIdeal:
    """``y^j * x^lam_j * z^mu_j`` for ``j = 0..max(len lam, len mu)``, minimalized."""
    ring = f.ring
    rows = max(len(f.lam), len(f.mu))
    pad = (0,) * f.n
    gens = frozenset((f.lam.part(j), j, f.mu.part(j)) + pad for j in range(rows + 1))
    return MonomialIdeal(ring, gens)


def special_fiber_ideal(f: FamilySetup) -> MonomialIdeal:
    """The limit ``z -> x`` of the union, as an ideal in ``x, y`` and support variables.

    The ring keeps the names of :attr:`FamilySetup.ring` but marks only
    ``x, y`` as thickening variables, so ``z`` becomes a support coordinate.
    """
    generic = generic_fiber_ideal(f).substitute("z", "x")
    return MonomialIdeal(VariableList(generic.vars.names, 2), generic.gens)


def binomial_identity_check(n: int, i: int, j: int) -> bool:
    """``b_j - b_i = sum_{k=j}^{i-1} binom(n - 1 + d - k, n - 1)`` for ``j <= i``.

    Each term is one box of the intersection diagram on ``P^(n-1)``.
    """
    if n < 1:
        raise InvalidRange("n must be at least 1")
    if i < j or j < 0:
        raise InvalidRange(f"need 0 <= j <= i, got i={i}, j={j}")
    lhs = b_poly(n, j) - b_poly(n, i)
    rhs = ExactPolynomial()
    for k in range(j, i):
        rhs = rhs + b_poly(n - 1, k)
    return lhs == rhs
