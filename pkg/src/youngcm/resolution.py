"""Minimal free resolutions of 2D staircase ideals and Hilbert scheme dimensions.

A codimension-two CM monomial ideal has a resolution

    0 -> (+)_i S(-syz_i) -> (+)_j S(-gen_j) -> I -> 0

with generator degrees the weights of the inner corners of its diagram and
syzygy degrees the weights of the outer corners.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .diagram import Diagram, inner_corners, outer_corners
from .errors import DimensionError, EmptyDiagram, InvalidPair
from .hilbert import hilbert_equivalent


def _decreasing(seq) -> tuple:
    return tuple(sorted((int(v) for v in seq), reverse=True))


@dataclass(frozen=True)
class DegreePair:
    """Generator and syzygy degrees, each stored weakly decreasing."""

    gen_degrees: tuple
    syz_degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "gen_degrees", _decreasing(self.gen_degrees))
        object.__setattr__(self, "syz_degrees", _decreasing(self.syz_degrees))

    def to_json(self) -> dict:
        return {"gen_degrees": list(self.gen_degrees), "syz_degrees": list(self.syz_degrees)}

    def __str__(self):
        return f"({list(self.gen_degrees)}, {list(self.syz_degrees)})"


def _check_2d_nonempty(d: Diagram):
    if d.dim != 2:
        raise DimensionError(f"resolutions are computed for 2D diagrams, got dim {d.dim}")
    if not d.boxes:
        raise EmptyDiagram("the empty diagram gives the unit ideal")


def degree_pair(d: Diagram) -> DegreePair:
    _check_2d_nonempty(d)
    return DegreePair(
        tuple(sum(c) for c in inner_corners(d)),
        tuple(sum(c) for c in outer_corners(d)),
    )


def validate_pair(p: DegreePair) -> bool:
    """Whether ``p`` comes from some Young diagram.

    Needs one more generator than syzygies, ``syz[i] > gen[i] >= gen[i+1]``
    and equal degree sums.
    """
    a, b = p.gen_degrees, p.syz_degrees
    if len(a) != len(b) + 1:
        return False
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        return False
    if any(b[i] <= a[i] for i in range(len(b))):
        return False
    return sum(a) == sum(b)


def staircase_from_pair(p: DegreePair) -> Diagram:
    """A diagram realizing ``p``.

    The generator of degree ``a_k`` sits at ``(X_k, Y_k)`` with
    ``X_k = sum_{i<k} (b_i - a_i)`` and ``Y_k = sum_{i<=k} a_i - sum_{i<k} b_i``;
    the syzygy ``b_k`` sits at ``(X_{k+1}, Y_k)``.
    """
    if not validate_pair(p):
        raise InvalidPair(f"{p} is not the degree pair of any Young diagram")
    a, b = p.gen_degrees, p.syz_degrees
    corners = []
    x = 0
    y = a[0]
    corners.append((x, y))
    for k in range(1, len(a)):
        x += b[k - 1] - a[k - 1]
        y += a[k] - b[k - 1]
        corners.append((x, y))
    width, height = corners[-1][0], corners[0][1]
    boxes = frozenset(
        (i, j) for i in range(width) for j in range(height)
        if not any(i >= cx and j >= cy for cx, cy in corners)
    )
    return Diagram(2, boxes)


def reduce_pair(p: DegreePair) -> DegreePair:
    """Cancel every generator degree that equals a syzygy degree."""
    a, b = Counter(p.gen_degrees), Counter(p.syz_degrees)
    common = a & b
    return DegreePair(tuple((a - common).elements()), tuple((b - common).elements()))


def resolution_equivalent(a: Diagram, b: Diagram) -> bool:
    """Equivalence generated by cancelling equal generator/syzygy degrees.

    Cancellation is multiset difference, so the reduced pair is a normal form.
    """
    return reduce_pair(degree_pair(a)) == reduce_pair(degree_pair(b))


r_equivalent = resolution_equivalent


def hilbert_scheme_dimension(d: Diagram, n: int) -> int:
    """Dimension of the Hilbert scheme of ``P^(n+2)`` at the point of ``d``.

    Ellingsrud's formula for arithmetically CM codimension-two subschemes.
    Pairs with equal degrees count in both cross sums and diagonal pairs in
    both self sums.
    """
    if n < 0:
        raise ValueError("support dimension must be non-negative")
    p = degree_pair(d)
    N = n + 2
    gens, syz = p.gen_degrees, p.syz_degrees

    def over(xs, ys):
        return sum(comb(x - y + N, N) for x in xs for y in ys if x >= y)

    return over(syz, gens) + over(gens, syz) - over(syz, syz) - over(gens, gens) + 1


def same_component(a: Diagram, b: Diagram) -> bool:
    """Whether the two structures lie on one irreducible Hilbert scheme component."""
    by_hilbert = hilbert_equivalent(a, b)
    if a.dim != 2:
        raise DimensionError(f"expected 2D diagrams, got dim {a.dim}")
    if not a.boxes or not b.boxes:
        return by_hilbert
    by_resolution = resolution_equivalent(a, b)
    if by_hilbert != by_resolution:
        raise AssertionError(f"equivalences disagree on {a} and {b}")
    return by_hilbert


def format_resolution(p: DegreePair) -> str:
    """``0 -> S(-6)^2 -> S(-5)^2 + S(-2) -> I -> 0``."""
    def terms(degrees):
        if not degrees:
            return "0"
        counts = Counter(degrees)
        return " + ".join(
            f"S({-v})^{counts[v]}" if counts[v] > 1 else f"S({-v})"
            for v in sorted(counts, reverse=True)
        )
    if not p.syz_degrees:
        return f"0 -> {terms(p.gen_degrees)} -> I -> 0"
    return f"0 -> {terms(p.syz_degrees)} -> {terms(p.gen_degrees)} -> I -> 0"
