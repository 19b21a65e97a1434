"""
Seifert fiber space descriptors and their fundamental group presentations.

Orientable base of genus g with k boundary circles and exceptional fibers
(p_i, alpha_i)::

    < a_1, b_1, ..., a_g, b_g, c_1..c_n, d_1..d_k, h |
      [a_i, h], [b_i, h], [c_j, h], [d_s, h],
      c_j^p_j = h^alpha_j,
      [a_1, b_1]...[a_g, b_g] c_1...c_n d_1...d_k = h^b >

Non-orientable base with g crosscaps replaces the a/b pairs by v_1..v_g with
v_j h v_j^-1 = h^-1 and the long relator v_1^2...v_g^2 c_1...c_n d_1...d_k = h^b.
Commutators are [x, y] = x y x^-1 y^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .words import InputError, Presentation, Word, free_reduce


@dataclass(frozen=True)
class SeifertInvariant:
    p: int
    alpha: int

    def __post_init__(self):
        if self.p < 2:
            raise InputError(f"fiber index must be >= 2, got {self.p}")
        if gcd(self.p, self.alpha) != 1:
            raise InputError(f"Seifert invariant ({self.p}, {self.alpha}) is not coprime")


@dataclass(frozen=True)
class SeifertData:
    base_genus: int = 0
    base_orientable: bool = True
    boundary_count: int = 0
    fibers: tuple[SeifertInvariant, ...] = field(default_factory=tuple)
    euler_b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(
            f if isinstance(f, SeifertInvariant) else SeifertInvariant(*f) for f in self.fibers))
        if self.base_genus < 0 or self.boundary_count < 0:
            raise InputError("genus and boundary count must be non-negative")
        if not self.base_orientable and self.base_genus < 1:
            raise InputError("a non-orientable base needs at least one crosscap")

    @property
    def n_fibers(self) -> int:
        return len(self.fibers)

    def base_euler_characteristic(self) -> int:
        if self.base_orientable:
            return 2 - 2 * self.base_genus - self.boundary_count
        return 2 - self.base_genus - self.boundary_count

    def generator_names(self) -> tuple[str, ...]:
        names: list[str] = []
        if self.base_orientable:
            for i in range(1, self.base_genus + 1):
                names += [f"a{i}", f"b{i}"]
        else:
            names += [f"v{i}" for i in range(1, self.base_genus + 1)]
        names += [f"c{i}" for i in range(1, self.n_fibers + 1)]
        names += [f"d{i}" for i in range(1, self.boundary_count + 1)]
        names.append("h")
        return tuple(names)

    def describe(self) -> str:
        if self.base_orientable:
            base = f"orientable genus {self.base_genus}"
        else:
            base = f"non-orientable genus {self.base_genus}"
        fibers = ", ".join(f"({f.p},{f.alpha})" for f in self.fibers) or "none"
        return f"base {base}, {self.boundary_count} boundary, fibers {fibers}, b={self.euler_b}"


@lru_cache(maxsize=256)
def seifert_presentation(d: SeifertData) -> Presentation:
    names = d.generator_names()
    idx = {name: i for i, name in enumerate(names)}
    h = idx["h"]

    def w(*pairs):
        return free_reduce(pairs)

    rels: list[Word] = []
    long_rel: list[tuple[int, int]] = []
    if d.base_orientable:
        for i in range(1, d.base_genus + 1):
            a, b = idx[f"a{i}"], idx[f"b{i}"]
            rels.append(w((a, 1), (h, 1), (a, -1), (h, -1)))
            rels.append(w((b, 1), (h, 1), (b, -1), (h, -1)))
            long_rel += [(a, 1), (b, 1), (a, -1), (b, -1)]
    else:
        for i in range(1, d.base_genus + 1):
            v = idx[f"v{i}"]
            rels.append(w((v, 1), (h, 1), (v, -1), (h, 1)))
            long_rel.append((v, 2))
    for j in range(1, d.n_fibers + 1):
        c = idx[f"c{j}"]
        rels.append(w((c, 1), (h, 1), (c, -1), (h, -1)))
    for s in range(1, d.boundary_count + 1):
        ds = idx[f"d{s}"]
        rels.append(w((ds, 1), (h, 1), (ds, -1), (h, -1)))
    for j, f in enumerate(d.fibers, 1):
        rels.append(w((idx[f"c{j}"], f.p), (h, -f.alpha)))
    long_rel += [(idx[f"c{j}"], 1) for j in range(1, d.n_fibers + 1)]
    long_rel += [(idx[f"d{s}"], 1) for s in range(1, d.boundary_count + 1)]
    long_rel.append((h, -d.euler_b))
    rels.append(w(*long_rel))
    return Presentation(names, tuple(rels))


def orbifold_euler_characteristic(d: SeifertData) -> Fraction:
    return d.base_euler_characteristic() - sum(Fraction(1) - Fraction(1, f.p) for f in d.fibers)


def degenerate_shape(d: SeifertData) -> str | None:
    """
    Name the reason d cannot be an irreducible piece with infinite torsion-free
    group, or None if it can.
    """
    if d.base_orientable and d.base_genus == 0:
        if d.boundary_count == 0 and d.n_fibers <= 2:
            return "lens space (or S2xS1) shape: sphere base with at most two exceptional fibers"
        if d.boundary_count == 1 and d.n_fibers <= 1:
            return "solid torus shape: disk base with at most one exceptional fiber"
    if d.boundary_count == 0 and orbifold_euler_characteristic(d) > 0:
        return "closed piece with positive orbifold Euler characteristic has finite group or is not prime"
    return None
