"""
Whole-manifold classification from prime and JSJ decomposition data.

Order-two generalized torsion is decided factor by factor (a connected sum
has it iff some prime factor does) and, inside an irreducible factor, by
its Seifert pieces alone.  The R-group test is likewise factor by factor,
and for 3-manifold groups the R-bar test coincides with it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Union

from .seifert import Status, Verdict, gt_order2_status, r_group_piece_conditions
from .sfs import SeifertData, degenerate_shape
from .words import InputError


@dataclass(frozen=True)
class HyperbolicPiece:
    cusps: int = 0

    def __post_init__(self):
        if self.cusps < 0:
            raise InputError("cusp count must be non-negative")


@dataclass(frozen=True)
class SeifertPiece:
    data: SeifertData


JSJPiece = Union[SeifertPiece, HyperbolicPiece]


@dataclass(frozen=True)
class Irreducible:
    jsj_pieces: tuple
    torsion_free: bool = True
    label: str = ""

    def __post_init__(self):
        if not self.jsj_pieces:
            raise InputError("an irreducible piece needs at least one JSJ piece")


@dataclass(frozen=True)
class Spherical:
    group_order: int
    cyclic: bool
    label: str = ""

    def __post_init__(self):
        if self.group_order < 1:
            raise InputError("spherical group order must be positive")


@dataclass(frozen=True)
class S2xS1:
    label: str = ""


@dataclass(frozen=True)
class SolidTorus:
    label: str = ""


PrimePiece = Union[Irreducible, Spherical, S2xS1, SolidTorus]


@dataclass(frozen=True)
class ManifoldDescriptor:
    connected_sum: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "connected_sum", tuple(self.connected_sum))
        if not self.connected_sum:
            raise InputError("a manifold needs at least one prime piece")

    def seifert_pieces(self) -> list[SeifertData]:
        return [j.data for p in self.connected_sum if isinstance(p, Irreducible)
                for j in p.jsj_pieces if isinstance(j, SeifertPiece)]


def _check_irreducible(piece: Irreducible):
    if not piece.torsion_free:
        raise InputError("irreducible piece flagged with torsion: describe finite groups as spherical pieces")
    for j in piece.jsj_pieces:
        if isinstance(j, SeifertPiece):
            shape = degenerate_shape(j.data)
            if shape is not None:
                raise InputError(f"degenerate Seifert piece: {shape}")
        elif not isinstance(j, HyperbolicPiece):
            raise InputError(f"unknown JSJ piece {j!r}")


def finite_admits_order2(order: int, cyclic: bool) -> bool:
    """A finite 3-manifold group has an element of order two unless it is cyclic of odd order."""
    if order < 1:
        raise ValueError("order must be positive")
    if order == 1:
        return False
    return not (cyclic and order % 2 == 1)


def prime_admits_gt_order2(piece) -> Verdict:
    if isinstance(piece, S2xS1):
        return Verdict(Status.NO, "pi1 = Z")
    if isinstance(piece, SolidTorus):
        return Verdict(Status.NO, "pi1 = Z")
    if isinstance(piece, Spherical):
        if finite_admits_order2(piece.group_order, piece.cyclic):
            return Verdict(Status.YES, "finite group with an element of order two")
        return Verdict(Status.NO, "finite cyclic group of odd order" if piece.group_order > 1 else "trivial group")
    if isinstance(piece, Irreducible):
        _check_irreducible(piece)
        seifert = [j.data for j in piece.jsj_pieces if isinstance(j, SeifertPiece)]
        if not seifert:
            return Verdict(Status.NO, "no Seifert piece")
        verdicts = [gt_order2_status(d) for d in seifert]
        for v in verdicts:
            if v.status is Status.YES:
                return v
        unknown = [v for v in verdicts if v.status is Status.UNKNOWN]
        if unknown:
            return unknown[0]
        return Verdict(Status.NO, verdicts[0].reason if len(verdicts) == 1 else
                       "no Seifert piece has an even-index fiber or a non-orientable base")
    raise InputError(f"unknown prime piece {piece!r}")


def admits_gt_order2(m: ManifoldDescriptor) -> Verdict:
    """Yes if some prime factor says yes; else Unknown if any factor is unknown; else No."""
    verdicts = [prime_admits_gt_order2(p) for p in m.connected_sum]
    for v in verdicts:
        if v.status is Status.YES:
            return v
    for v in verdicts:
        if v.status is Status.UNKNOWN:
            return v
    if len(verdicts) == 1:
        return verdicts[0]
    return Verdict(Status.NO, "every prime factor: " + "; ".join(v.reason for v in verdicts))


def prime_is_r_group(piece) -> Status:
    if isinstance(piece, (S2xS1, SolidTorus)):
        return Status.YES
    if isinstance(piece, Spherical):
        return Status.YES if piece.group_order == 1 else Status.NO
    if isinstance(piece, Irreducible):
        _check_irreducible(piece)
        for j in piece.jsj_pieces:
            if isinstance(j, SeifertPiece) and any(r_group_piece_conditions(j.data)):
                return Status.NO
        return Status.YES
    raise InputError(f"unknown prime piece {piece!r}")


def is_r_group(m: ManifoldDescriptor) -> Status:
    """Unique roots (x^n = y^n with n != 0 forces x = y), decided factor by factor."""
    statuses = [prime_is_r_group(p) for p in m.connected_sum]
    if Status.NO in statuses:
        return Status.NO
    if Status.UNKNOWN in statuses:
        return Status.UNKNOWN
    return Status.YES


def is_rbar_group(m: ManifoldDescriptor) -> Status:
    # equivalent to the R-group property for 3-manifold groups only
    return is_r_group(m)


def random_seifert_data(rng, closed: bool | None = None) -> SeifertData:
    """A random non-degenerate Seifert piece; ``rng`` is a random.Random."""
    while True:
        orientable = rng.random() < 0.6
        genus = rng.randint(0 if orientable else 1, 2)
        boundary = rng.randint(0, 2) if closed is None else (0 if closed else rng.randint(1, 2))
        fibers = []
        for _ in range(rng.randint(0, 3)):
            p = rng.randint(2, 6)
            alpha = rng.choice([a for a in range(-p + 1, p) if a and gcd(a, p) == 1])
            fibers.append((p, alpha))
        d = SeifertData(genus, orientable, boundary, tuple(fibers), rng.randint(-2, 2))
        if degenerate_shape(d) is None:
            return d


def random_descriptor(rng, max_factors: int = 3, closed: bool | None = False) -> ManifoldDescriptor:
    """
    Random manifold descriptor.  Seifert pieces default to having boundary
    so every piece has an exact backend.
    """
    pieces = []
    for _ in range(rng.randint(1, max_factors)):
        kind = rng.choices(["irreducible", "spherical", "s2xs1", "solid_torus"], [6, 2, 1, 1])[0]
        if kind == "irreducible":
            jsj = []
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.7:
                    jsj.append(SeifertPiece(random_seifert_data(rng, closed)))
                else:
                    jsj.append(HyperbolicPiece(rng.randint(0, 3)))
            pieces.append(Irreducible(tuple(jsj)))
        elif kind == "spherical":
            order = rng.randint(1, 24)
            pieces.append(Spherical(order, rng.random() < 0.6 or order == 1))
        elif kind == "s2xs1":
            pieces.append(S2xS1())
        else:
            pieces.append(SolidTorus())
    return ManifoldDescriptor(tuple(pieces))
