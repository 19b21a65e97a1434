"""
Piece-level decisions for Seifert fiber spaces: constructive witnesses for
order-two generalized torsion, the horizontal-cover Riemann-Hurwitz check,
and the two conditions that stop a piece's group from being an R-group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .backends import Backend, ExtensionBackend, RewritingBackend, UndecidableError, verify_pair
from .extension import ExtensionGroup
from .homology import order2_necessary
from .sfs import (SeifertData, SeifertInvariant, degenerate_shape, orbifold_euler_characteristic,
                  seifert_presentation)
from .words import InputError, Presentation, Word, enumerate_words

__all__ = [
    "SeifertData", "SeifertInvariant", "seifert_presentation", "orbifold_euler_characteristic",
    "CaseTag", "GTWitness", "Status", "Verdict", "check_horizontal_cover", "horizontal_base_solutions",
    "gt_order2_status", "witness_nonorientable_base", "witness_even_fiber", "r_group_piece_conditions",
    "piece_backends",
]

# Limits for completing closed-piece presentations; closed pieces that do not
# complete within them get an Unknown verdict rather than a slow run.
CLOSED_KB_LIMITS = {"max_rules": 600, "max_rule_len": 40, "max_iterations": 20000}
PROBE_MAX_LEN = 3


class CaseTag(enum.Enum):
    EVEN_FIBER_FOLDED_LOOP = "even-fiber-folded-loop"
    TWO_EVEN_FIBERS = "two-even-fibers"
    NONORIENTABLE_BASE_REGULAR_FIBER = "nonorientable-base-regular-fiber"
    HORIZONTAL_KLEIN_BOTTLE = "horizontal-klein-bottle"
    ORACLE_FOUND = "oracle-found"


@dataclass(frozen=True)
class GTWitness:
    g: Word
    c: Word
    case: CaseTag
    presentation: Presentation = field(repr=False)
    fibers: tuple[int, ...] = ()  # 0-based indices of the exceptional fibers involved
    verified: bool = False
    backend: str = ""

    def g_text(self) -> str:
        return self.presentation.format_word(self.g)

    def c_text(self) -> str:
        return self.presentation.format_word(self.c)


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str = ""
    witness: GTWitness | None = None

    def __post_init__(self):
        # witness-free Yes is reserved for finite factors, where an honest
        # torsion element of order two exists but no presentation is given
        if self.status is Status.YES and self.witness is not None and not self.witness.verified:
            raise ValueError("a Yes verdict needs a verified witness")
        if self.status is Status.YES and self.witness is None and not self.reason:
            raise ValueError("a Yes verdict needs a witness or a stated reason")


# Riemann-Hurwitz -------------------------------------------------------------

def check_horizontal_cover(base_euler_char: int, cone_orders) -> bool:
    """chi(B) = sum (1 - 1/alpha_i), in exact rational arithmetic."""
    if any(a < 2 for a in cone_orders):
        raise ValueError("cone orders must be >= 2")
    return Fraction(base_euler_char) == sum((1 - Fraction(1, a) for a in cone_orders), Fraction(0))


_CLOSED_NONORIENTABLE = {1: "RP2", 0: "KleinBottle"}


def horizontal_base_solutions() -> list[tuple[str, tuple[int, ...]]]:
    """
    Closed non-orientable bases (chi >= 0, so RP2 or the Klein bottle) with
    cone orders making chi(B) = sum (1 - 1/alpha_i).

    Each term lies in [1/2, 1), so n cone points contribute at least n/2;
    n >= 3 would exceed chi <= 1, leaving n in {0, 1, 2} to exhaust.
    """
    out = []
    for chi, name in sorted(_CLOSED_NONORIENTABLE.items(), key=lambda kv: kv[0]):
        if check_horizontal_cover(chi, []):
            out.append((name, ()))
        # n = 1: 1 - 1/alpha lies strictly in (0, 1); never an integer
        # n = 2: 1/a1 + 1/a2 = 2 - chi with 2 <= a1 <= a2, so a1 <= 2 / (2 - chi)
        if chi < 2:
            a1_max = int(Fraction(2, 2 - chi))
            for a1 in range(2, a1_max + 1):
                rest = 2 - chi - Fraction(1, a1)
                if rest > 0 and rest.numerator == 1 and rest.denominator >= a1:
                    a2 = rest.denominator
                    if check_horizontal_cover(chi, [a1, a2]):
                        out.append((name, (a1, a2)))
    return out


# backends ----------------------------------------------------------------------

@lru_cache(maxsize=128)
def _extension_group(d: SeifertData) -> ExtensionGroup:
    return ExtensionGroup(d)


@lru_cache(maxsize=64)
def _rewriting_backend(d: SeifertData, max_rules: int, max_rule_len: int, max_iterations: int) -> RewritingBackend:
    return RewritingBackend(seifert_presentation(d), max_rules=max_rules, max_rule_len=max_rule_len,
                            max_iterations=max_iterations)


def piece_backends(d: SeifertData, kb_limits: dict | None = None) -> list[Backend]:
    """Exact backends first (extension when the base has boundary), then rewriting."""
    out: list[Backend] = []
    if d.boundary_count >= 1:
        out.append(ExtensionBackend(_extension_group(d)))
    limits = dict(CLOSED_KB_LIMITS, **(kb_limits or {}))
    out.append(_rewriting_backend(d, limits["max_rules"], limits["max_rule_len"], limits["max_iterations"]))
    return out


def _verify(d: SeifertData, g: Word, c: Word) -> tuple[bool, str]:
    backends = [ExtensionBackend(_extension_group(d))] if d.boundary_count >= 1 else piece_backends(d)
    for backend in backends:
        try:
            return verify_pair(backend, g, c), backend.name
        except UndecidableError:
            continue
    return False, ""


# witnesses ---------------------------------------------------------------------

def witness_nonorientable_base(d: SeifertData) -> GTWitness:
    """The regular fiber h is inverted by the first crosscap generator."""
    if d.base_orientable:
        raise ValueError("witness_nonorientable_base needs a non-orientable base")
    pres = seifert_presentation(d)
    g, c = pres.gen("h"), pres.gen("v1")
    ok, backend = _verify(d, g, c)
    return GTWitness(g, c, CaseTag.NONORIENTABLE_BASE_REGULAR_FIBER, pres, (), ok, backend)


def _probe_words(d: SeifertData, fiber_index: int):
    pres = seifert_presentation(d)
    allowed = [i for i, name in enumerate(pres.generators) if name not in ("h", f"c{fiber_index + 1}")]
    for w in enumerate_words(len(allowed), PROBE_MAX_LEN):
        if w:
            yield Word(tuple((allowed[g], e) for g, e in w.letters))


def witness_even_fiber(d: SeifertData, fiber_index: int, probe: Word | None = None) -> GTWitness | None:
    """
    Build a pair whose conjugator is c_i^m for the fiber (2m, alpha_i).

    With a probe word w: g = c_i^m w c_i^m w^-1 h^-alpha_i.
    Without one, pair c_i with the next even fiber (2n, alpha_j):
    g = c_i^m c_j^n h^-(alpha_i + alpha_j)/2.
    Returns None when the backend does not confirm the pair.
    """
    fiber = d.fibers[fiber_index]
    if fiber.p % 2:
        raise ValueError(f"fiber {fiber_index} has odd index {fiber.p}")
    pres = seifert_presentation(d)
    m = fiber.p // 2
    ci = pres.gen(f"c{fiber_index + 1}", m)
    h = pres.index("h")
    if probe is None:
        others = [j for j, f in enumerate(d.fibers) if j != fiber_index and f.p % 2 == 0]
        if not others:
            return None
        j = others[0]
        other = d.fibers[j]
        g = ci * pres.gen(f"c{j + 1}", other.p // 2) * Word.gen(h, -(fiber.alpha + other.alpha) // 2)
        case, fibers = CaseTag.TWO_EVEN_FIBERS, (fiber_index, j)
    else:
        g = ci * probe * ci * probe.inverse() * Word.gen(h, -fiber.alpha)
        case, fibers = CaseTag.EVEN_FIBER_FOLDED_LOOP, (fiber_index,)
    ok, backend = _verify(d, g, ci)
    if not ok:
        return None
    return GTWitness(g, ci, case, pres, fibers, True, backend)


# verdicts ----------------------------------------------------------------------

NO_REASON = "orientable base and no exceptional fiber of even index"


def gt_order2_status(d: SeifertData, assume_infinite_torsion_free: bool = True) -> Verdict:
    """Order-two generalized torsion in pi_1 of one Seifert piece."""
    shape = degenerate_shape(d)
    if shape is not None:
        raise InputError(f"degenerate Seifert piece: {shape}")
    if not assume_infinite_torsion_free:
        return Verdict(Status.UNKNOWN, "piece not asserted irreducible with infinite torsion-free group")
    even = [i for i, f in enumerate(d.fibers) if f.p % 2 == 0]
    if d.base_orientable and not even:
        return Verdict(Status.NO, NO_REASON)
    if not d.base_orientable:
        w = witness_nonorientable_base(d)
        if w.verified:
            return Verdict(Status.YES, "non-orientable base", w)
    for i in even:
        w = witness_even_fiber(d, i)
        if w is not None:
            return Verdict(Status.YES, "two exceptional fibers of even index", w)
    for i in even:
        for probe in _probe_words(d, i):
            w = witness_even_fiber(d, i, probe)
            if w is not None:
                return Verdict(Status.YES, "exceptional fiber of even index", w)
    return Verdict(Status.UNKNOWN, "necessary condition holds but no construction could be verified")


class PieceConditions(NamedTuple):
    has_exceptional: bool
    nonorientable_base: bool


def r_group_piece_conditions(d: SeifertData) -> PieceConditions:
    return PieceConditions(d.n_fibers >= 1, not d.base_orientable)


def witness_passes_homology(w: GTWitness) -> bool:
    return order2_necessary(w.presentation, w.g)
