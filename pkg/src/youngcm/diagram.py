"""Young diagrams of arbitrary dimension and partitions.

Boxes are tuples of non-negative integers, the lower corner of the box in
each axis. Axis 0 is x (columns, to the right), axis 1 is y (rows, upward)
and axis 2 is z. A partition ``(l0, l1, ...)`` is the 2D diagram whose row
``j`` holds the boxes ``(0, j), ..., (l_j - 1, j)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable

from .errors import DimensionError, NotAnInnerCorner, ParseError

Box = tuple  # tuple[int, ...]


def box_weight(box: Box) -> int:
    """Sum of the coordinates of ``box``; the degree of its monomial."""
    return sum(box)


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,4,3,2"``, ``"[7,7,4,2]"`` or ``"(3,1)"``; ``"[]"`` is empty."""
        body = text.strip()
        if body[:1] in "[(" and body[-1:] in "])":
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls(())
        if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", body):
            raise ParseError(f"malformed partition {text!r}")
        try:
            return cls(tuple(int(p) for p in body.split(",")))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, j):
        return self.parts[j]

    def part(self, j: int) -> int:
        """Zero-padded part access."""
        return self.parts[j] if 0 <= j < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        width = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(width)))

    def columns(self) -> list:
        """The one-column partitions ``(1, ..., 1)`` summing to this one."""
        return [Partition((1,) * h) for h in self.conjugate().parts]

    def __add__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return partition_sum(self, other)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Diagram:
    """An ``dim``-dimensional Young diagram: a finite, downward-closed box set."""

    dim: int
    boxes: frozenset = frozenset()

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"diagram dimension must be positive, got {self.dim}")
        boxes = frozenset(tuple(int(c) for c in b) for b in self.boxes)
        for b in boxes:
            if len(b) != self.dim:
                raise DimensionError(f"box {b} does not have dimension {self.dim}")
            if any(c < 0 for c in b):
                raise ValueError(f"box {b} has a negative coordinate")
        object.__setattr__(self, "boxes", boxes)
        for b in boxes:
            for t in range(self.dim):
                if b[t] > 0 and _step(b, t, -1) not in boxes:
                    raise ValueError(
                        f"not a Young diagram: {b} present but {_step(b, t, -1)} missing")

    @classmethod
    def empty(cls, dim: int = 2) -> "Diagram":
        return cls(dim, frozenset())

    def __len__(self):
        return len(self.boxes)

    def __contains__(self, box):
        return tuple(box) in self.boxes

    def __iter__(self):
        return iter(sorted(self.boxes))

    def __bool__(self):
        return bool(self.boxes)

    @property
    def max_weight(self) -> int:
        """Largest box weight, or -1 for the empty diagram."""
        return max((sum(b) for b in self.boxes), default=-1)

    def layer(self, k: int) -> "Diagram":
        """Boxes of a 3D diagram with third coordinate ``k``, as a 2D diagram."""
        if self.dim != 3:
            raise DimensionError("layers are defined for 3D diagrams")
        return Diagram(2, frozenset(b[:2] for b in self.boxes if b[2] == k))

    def layers(self) -> list:
        height = max((b[2] for b in self.boxes), default=-1) + 1
        return [self.layer(k) for k in range(height)]

    def permute_axes(self, perm) -> "Diagram":
        """New diagram whose axis ``t`` is axis ``perm[t]`` of this one."""
        return Diagram(self.dim, frozenset(tuple(b[p] for p in perm) for b in self.boxes))

    def __str__(self):
        if self.dim == 2:
            return str(diagram_to_partition(self))
        return f"Diagram(dim={self.dim}, {len(self)} boxes)"


def _step(box, axis, delta):
    out = list(box)
    out[axis] += delta
    return tuple(out)


def _check_same_dim(a: Diagram, b: Diagram):
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def partition_to_diagram(p) -> Diagram:
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    return Diagram(2, frozenset((i, j) for j, row in enumerate(p.parts) for i in range(row)))


def diagram_to_partition(d: Diagram) -> Partition:
    if d.dim != 2:
        raise DimensionError(f"partitions correspond to 2D diagrams, got dim {d.dim}")
    rows = Counter(j for _, j in d.boxes)
    return Partition(tuple(rows[j] for j in range(len(rows))))


def diagram_union(a: Diagram, b: Diagram) -> Diagram:
    _check_same_dim(a, b)
    return Diagram(a.dim, a.boxes | b.boxes)


def diagram_intersection(a: Diagram, b: Diagram) -> Diagram:
    _check_same_dim(a, b)
    return Diagram(a.dim, a.boxes & b.boxes)


def diagonal_profile(d: Diagram) -> tuple:
    """``counts[k]`` is the number of boxes of weight ``k``."""
    counts = [0] * (d.max_weight + 1)
    for b in d.boxes:
        counts[sum(b)] += 1
    return tuple(counts)


def truncate_at_diagonal(d: Diagram, k: int) -> Diagram:
    if k < 0:
        raise ValueError("diagonal index must be non-negative")
    return Diagram(d.dim, frozenset(b for b in d.boxes if sum(b) <= k))


def inner_corners(d: Diagram) -> frozenset:
    """Boxes outside ``d`` whose lower neighbour along every positive axis is in ``d``.

    These are the exponent vectors of the minimal generators of the ideal.
    """
    if not d.boxes:
        return frozenset({(0,) * d.dim})
    candidates = {_step(b, t, 1) for b in d.boxes for t in range(d.dim)}
    return frozenset(
        c for c in candidates
        if c not in d.boxes
        and all(c[t] == 0 or _step(c, t, -1) in d.boxes for t in range(d.dim))
    )


def outer_corners(d: Diagram) -> frozenset:
    """Boxes ``(i, j)`` outside a 2D diagram with ``(i-1, j)`` and ``(i, j-1)``
    outside but ``(i-1, j-1)`` inside; these index the syzygies."""
    if d.dim != 2:
        raise DimensionError("outer corners are defined for 2D diagrams")
    out = set()
    for i, j in d.boxes:
        c = (i + 1, j + 1)
        if c not in d.boxes and (i, j + 1) not in d.boxes and (i + 1, j) not in d.boxes:
            out.add(c)
    return frozenset(out)


def thicken(d: Diagram, chosen: Iterable) -> Diagram:
    """Add a subset of the inner corners to ``d``."""
    chosen = frozenset(tuple(c) for c in chosen)
    bad = chosen - inner_corners(d)
    if bad:
        raise NotAnInnerCorner(f"not inner corners of the diagram: {sorted(bad)}")
    return Diagram(d.dim, d.boxes | chosen)


def partition_sum(a: Partition, b: Partition) -> Partition:
    """Partswise sum, padding the shorter partition with zeros."""
    return Partition(tuple(x + y for x, y in zip_longest(a.parts, b.parts, fillvalue=0)))


def three_dim_diagram(lam: Partition, mu: Partition) -> Diagram:
    """Boxes ``(i, j, k)`` with ``(i, j)`` in the diagram of ``mu`` and ``k < lam_j``."""
    return Diagram(3, frozenset(
        (i, j, k)
        for j, row in enumerate(mu.parts)
        for i in range(row)
        for k in range(lam.part(j))
    ))


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def partitions_up_to(n: int):
    """All partitions of size ``0..n``, the empty partition first."""
    for size in range(n + 1):
        yield from partitions_of(size)
