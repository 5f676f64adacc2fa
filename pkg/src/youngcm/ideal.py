"""Monomial ideals over a named variable list and the diagram dictionary.

A :class:`VariableList` splits its names into ``codim`` leading thickening
variables (the generators of the support ideal) and trailing support
variables. Cohen-Macaulay structures are the ideals generated by monomials
in the thickening variables alone that contain a pure power of each of
them; those correspond one-to-one with ``codim``-dimensional Young diagrams,
monomials outside the ideal being the boxes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .diagram import (
    Diagram,
    diagonal_profile,
    inner_corners,
    truncate_at_diagonal,
)
from .errors import DimensionError, NotCofinite, NotSupportedIdeal, VariableMismatch


@dataclass(frozen=True)
class VariableList:
    names: tuple
    codim: int

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if not 1 <= self.codim <= len(names):
            raise ValueError(f"codim must be between 1 and {len(names)}, got {self.codim}")

    @classmethod
    def parse(cls, text: str, codim: int) -> "VariableList":
        return cls(tuple(n.strip() for n in text.split(",") if n.strip()), codim)

    @classmethod
    def standard(cls, codim: int = 2, support: int = 0) -> "VariableList":
        """``x, y`` (or ``x1..xm``) followed by ``z0..z{support-1}``."""
        thick = ("x", "y", "z")[:codim] if codim <= 3 else tuple(f"x{i + 1}" for i in range(codim))
        return cls(thick + tuple(f"z{i}" for i in range(support)), codim)

    def __len__(self):
        return len(self.names)

    @property
    def support_count(self) -> int:
        return len(self.names) - self.codim

    def index(self, name: str) -> int:
        return self.names.index(name)


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable) -> frozenset:
    """Drop every generator divisible by another one."""
    gens = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    kept = []
    for g in gens:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (exponent tuples).

    Generators are minimalized on construction, so two ideals are equal
    exactly when their generator sets are. The unit ideal has the single
    generator ``(0, ..., 0)``; the zero ideal has none.
    """

    vars: VariableList
    gens: frozenset

    def __post_init__(self):
        n = len(self.vars)
        for g in self.gens:
            if len(g) != n or any(e < 0 for e in g):
                raise ValueError(f"generator {g} does not fit variables {self.vars.names}")
        object.__setattr__(self, "gens", minimalize(self.gens))

    def contains(self, monomial) -> bool:
        return any(divides(g, monomial) for g in self.gens)

    @property
    def is_unit(self) -> bool:
        return (0,) * len(self.vars) in self.gens

    def sorted_gens(self) -> list:
        return sorted(self.gens, reverse=True)

    def embed(self, vars: VariableList) -> "MonomialIdeal":
        """The same generators in a larger ring, matching variables by name."""
        missing = set(self.vars.names) - set(vars.names)
        if missing:
            raise VariableMismatch(f"variables {sorted(missing)} absent from target ring")
        pos = [vars.index(name) for name in self.vars.names]
        out = []
        for g in self.gens:
            e = [0] * len(vars)
            for p, v in zip(pos, g):
                e[p] = v
            out.append(tuple(e))
        return MonomialIdeal(vars, frozenset(out))

    def substitute(self, source: str, target: str) -> "MonomialIdeal":
        """Apply the ring map ``source -> target`` to the generators."""
        s, t = self.vars.index(source), self.vars.index(target)
        out = []
        for g in self.gens:
            e = list(g)
            e[t] += e[s]
            e[s] = 0
            out.append(tuple(e))
        return MonomialIdeal(self.vars, frozenset(out))

    def __str__(self):
        return "(" + format_ideal(self) + ")"


@dataclass(frozen=True)
class FiltrationLayer:
    level: int
    twists: tuple


def format_monomial(exponents, names) -> str:
    factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exponents) if e]
    return "*".join(factors) if factors else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    """Comma-separated generators, e.g. ``x^4, x^3*y^2, x^2*y^3, y^4``."""
    return ", ".join(format_monomial(g, ideal.vars.names) for g in ideal.sorted_gens())


def _check_vars(a: MonomialIdeal, b: MonomialIdeal):
    if a.vars != b.vars:
        raise VariableMismatch(f"{a.vars.names}/{a.vars.codim} vs {b.vars.names}/{b.vars.codim}")


def ideal_from_diagram(d: Diagram, vars: VariableList) -> MonomialIdeal:
    if d.dim != vars.codim:
        raise DimensionError(f"diagram has dim {d.dim}, variables have codim {vars.codim}")
    pad = (0,) * vars.support_count
    return MonomialIdeal(vars, frozenset(c + pad for c in inner_corners(d)))


def diagram_from_ideal(ideal: MonomialIdeal) -> Diagram:
    m = ideal.vars.codim
    for g in ideal.gens:
        if any(g[m:]):
            raise NotSupportedIdeal(f"generator {g} involves a support variable")
    bounds = []
    for t in range(m):
        powers = [g[t] for g in ideal.gens if all(e == 0 for s, e in enumerate(g) if s != t)]
        if not powers:
            raise NotCofinite(f"no pure power of {ideal.vars.names[t]} among the generators")
        bounds.append(min(powers))
    pad = (0,) * ideal.vars.support_count
    boxes = frozenset(
        b for b in itertools.product(*(range(k) for k in bounds))
        if not ideal.contains(b + pad)
    )
    return Diagram(m, boxes)


def is_cm_structure(ideal: MonomialIdeal) -> bool:
    try:
        diagram_from_ideal(ideal)
    except (NotSupportedIdeal, NotCofinite):
        return False
    return not ideal.is_unit


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_vars(a, b)
    return MonomialIdeal(a.vars, a.gens | b.gens)


def ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_vars(a, b)
    lcms = {tuple(max(x, y) for x, y in zip(g, h)) for g in a.gens for h in b.gens}
    return MonomialIdeal(a.vars, frozenset(lcms))


def product_with_support_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """``I * (x_1, ..., x_m)`` for the thickening variables ``x_t``."""
    out = []
    for g in ideal.gens:
        for t in range(ideal.vars.codim):
            e = list(g)
            e[t] += 1
            out.append(tuple(e))
    return MonomialIdeal(ideal.vars, frozenset(out))


def infinitesimal_neighbourhood(m: int, k: int, vars: VariableList | None = None) -> Diagram:
    """All ``m``-dimensional boxes of weight at most ``k``; the ideal is ``I_X^(k+1)``."""
    if vars is not None and vars.codim != m:
        raise DimensionError(f"codim {vars.codim} does not match m={m}")
    if k < 0:
        raise ValueError("k must be non-negative")
    boxes = frozenset(b for b in itertools.product(range(k + 1), repeat=m) if sum(b) <= k)
    return Diagram(m, boxes)


def s1_filtration(d: Diagram) -> list:
    """Truncations of ``d`` at diagonals ``0..max weight``; the last one is ``d``."""
    return [truncate_at_diagonal(d, k) for k in range(d.max_weight + 1)]


def filtration_layers(d: Diagram) -> list:
    """The successive quotients of the S1-filtration as sums of twists.

    Layer ``j`` is ``O_X(-(j+1))`` repeated once per box of weight ``j+1``.
    """
    profile = diagonal_profile(d)
    return [FiltrationLayer(j, (j + 1,) * profile[j + 1]) for j in range(len(profile) - 1)]
