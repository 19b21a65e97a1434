"""
Brute-force search for generalized torsion pairs of order two.

Candidates (g, c) are scanned in shortlex order of g, then c.  Words that
evaluate to an element already seen are skipped, so each element is
represented by its shortlex-least word and the first hit is the
shortlex-least pair.  An exhausted search says nothing beyond its bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backends import Backend, KleinBackend, SubstitutionBackend, UndecidableError, verify_pair
from .homology import order2_necessary
from .seifert import GTWitness, Status, Verdict, gt_order2_status, piece_backends
from .sfs import SeifertData, seifert_presentation
from .words import Word, enumerate_words

__all__ = [
    "SearchBounds", "SearchResult", "search_gt_order2", "all_pairs", "cross_validate",
    "CrossValidationError", "CrossValidationReport", "verify_pair", "klein_isomorphism_backend",
]


@dataclass(frozen=True)
class SearchBounds:
    max_g_len: int
    max_c_len: int
    budget: int | None = None  # maximum equality tests

    def __post_init__(self):
        if self.max_g_len < 1 or self.max_c_len < 1 or (self.budget is not None and self.budget < 1):
            raise ValueError("search bounds must be positive")


@dataclass
class SearchResult:
    bounds: SearchBounds
    g: Word | None = None
    c: Word | None = None
    tests: int = 0
    g_candidates: int = 0
    complete: bool = True  # False when the budget cut the scan short

    @property
    def found(self) -> bool:
        return self.g is not None

    @property
    def exhausted(self) -> bool:
        return self.g is None


def _distinct(backend: Backend, max_len: int):
    """(word, element) for the shortlex-least word of each element reached."""
    gens = backend.search_generators
    letter = {}
    for g in gens:
        letter[g, 1] = backend.element(Word.gen(g, 1))
        letter[g, -1] = backend.element(Word.gen(g, -1))
    # shortlex order visits every prefix before its extensions, so each word
    # costs a single multiplication
    prefix_cache = {(): backend.element(Word())}
    seen = set()
    for w in enumerate_words(len(gens), max_len):
        word = Word(tuple((gens[g], e) for g, e in w.letters))
        if word.letters:
            g, e = word.letters[-1]
            step = 1 if e > 0 else -1
            prefix = word.letters[:-1] + (((g, e - step),) if e != step else ())
            x = backend.mul(prefix_cache[prefix], letter[g, step])
        else:
            x = prefix_cache[()]
        if len(word) < max_len:
            prefix_cache[word.letters] = x
        if x not in seen:
            seen.add(x)
            yield word, x


def search_gt_order2(backend: Backend, bounds: SearchBounds, prefilter: bool = True) -> SearchResult:
    """
    First (g, c) with g != 1 and c^-1 g c g = 1 within the word-length bounds.

    ``prefilter`` drops g with 2[g] != 0 in H_1, which never removes a pair.
    """
    if not backend.exact:
        raise UndecidableError("search needs an exact backend")
    result = SearchResult(bounds)
    pres = backend.presentation
    conjugators = list(_distinct(backend, bounds.max_c_len))
    for gw, g in _distinct(backend, bounds.max_g_len):
        if backend.is_identity(g):
            continue
        if prefilter and not order2_necessary(pres, gw):
            continue
        result.g_candidates += 1
        g_inv = backend.inv(g)
        for cw, c in conjugators:
            if bounds.budget is not None and result.tests >= bounds.budget:
                result.complete = False
                return result
            result.tests += 1
            # g^c = g^-1  <=>  g c = c g^-1
            if backend.mul(g, c) == backend.mul(c, g_inv):
                result.g, result.c = gw, cw
                return result
    return result


def all_pairs(backend: Backend, bounds: SearchBounds) -> set:
    """Every verified (g, c) as element pairs, over words within the bounds."""
    out = set()
    conjugators = [c for _, c in _distinct(backend, bounds.max_c_len)]
    for _, g in _distinct(backend, bounds.max_g_len):
        if backend.is_identity(g):
            continue
        g_inv = backend.inv(g)
        for c in conjugators:
            if backend.mul(g, c) == backend.mul(c, g_inv):
                out.add((g, c))
    return out


def klein_isomorphism_backend(d: SeifertData) -> Backend | None:
    """
    The twisted I-bundle over the Klein bottle, in either fibration, mapped
    onto the closed-form Klein group; None for other pieces.
    """
    if d == SeifertData(1, False, 1, (), d.euler_b):
        # v1 -> a, h -> b, d1 = v1^-2 h^e
        images = {"v1": "a", "h": "b", "d1": f"a^-2*b^{d.euler_b}" if d.euler_b else "a^-2"}
    elif d == SeifertData(0, True, 1, ((2, 1), (2, 1)), 0):
        # c1 -> a, c2 -> b^-1 a, h = c1^2 -> a^2, d1 = (c1 c2)^-1
        images = {"c1": "a", "c2": "b^-1*a", "h": "a^2", "d1": "a^-1*b*a^-1"}
    else:
        return None
    return SubstitutionBackend(seifert_presentation(d), KleinBackend(), images, name="klein-isomorphism")


class CrossValidationError(AssertionError):
    """Piece classifier and brute-force oracle disagree."""


@dataclass
class CrossValidationReport:
    data: SeifertData
    verdict: Verdict | None = None
    search: SearchResult | None = None
    backend: str = ""
    witness_checks: dict = field(default_factory=dict)  # backend name -> bool
    oracle_checks: dict = field(default_factory=dict)
    skipped: str = ""

    @property
    def consistent(self) -> bool:
        return not self.skipped

    def summary(self) -> str:
        if self.skipped:
            return f"skipped ({self.skipped})"
        outcome = "found" if self.search.found else "exhausted"
        return f"consistent({self.verdict.status.value}) oracle={outcome}"


def _second_backends(d: SeifertData, primary: Backend) -> list[Backend]:
    out = []
    iso = klein_isomorphism_backend(d)
    if iso is not None:
        out.append(iso)
    for b in piece_backends(d):
        if b.name != primary.name and b.exact:
            out.append(b)
    return out


def _check_everywhere(backends, g: Word, c: Word) -> dict:
    checks = {}
    for b in backends:
        try:
            checks[b.name] = verify_pair(b, g, c)
        except UndecidableError:
            pass
    return checks


def cross_validate(d: SeifertData, bounds: SearchBounds = SearchBounds(6, 3)) -> CrossValidationReport:
    """
    Run the piece classifier and the oracle on one piece and insist they agree.

    Yes must come with a witness that every available exact backend accepts;
    No must come with an exhausted search.  Disagreement raises
    CrossValidationError.
    """
    report = CrossValidationReport(d)
    exact = [b for b in piece_backends(d) if b.exact]
    if not exact:
        report.skipped = "no exact backend for this piece"
        return report
    primary = exact[0]
    report.backend = primary.name
    report.verdict = verdict = gt_order2_status(d)
    report.search = search = search_gt_order2(primary, bounds)
    others = _second_backends(d, primary)
    if verdict.status is Status.YES:
        w: GTWitness = verdict.witness
        report.witness_checks = _check_everywhere([primary] + others, w.g, w.c)
        if not all(report.witness_checks.values()) or not report.witness_checks.get(primary.name):
            raise CrossValidationError(f"{d.describe()}: witness rejected {report.witness_checks}")
    if verdict.status is Status.NO and search.found:
        raise CrossValidationError(
            f"{d.describe()}: classifier says no but oracle found "
            f"g={primary.presentation.format_word(search.g)} c={primary.presentation.format_word(search.c)}")
    if search.found:
        report.oracle_checks = _check_everywhere([primary] + others, search.g, search.c)
        if not all(report.oracle_checks.values()):
            raise CrossValidationError(f"{d.describe()}: oracle pair rejected {report.oracle_checks}")
    return report
