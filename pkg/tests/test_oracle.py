import pytest

from gtorsion.backends import KleinBackend, RewritingBackend, UndecidableError, verify_pair
from gtorsion.catalog import BOUNDARY_FIXTURES, TREFOIL, TWISTED_I_BUNDLE_DISK
from gtorsion.klein import KLEIN_PRESENTATION, KleinElement, k_is_gt_pair
from gtorsion.oracle import SearchBounds, all_pairs, cross_validate, klein_isomorphism_backend, search_gt_order2
from gtorsion.seifert import piece_backends
from gtorsion.sfs import SeifertData, seifert_presentation
from gtorsion.words import Word, parse_presentation


def test_klein_search_finds_b_a():
    res = search_gt_order2(KleinBackend(), SearchBounds(3, 3))
    assert res.found
    assert (KLEIN_PRESENTATION.format_word(res.g), KLEIN_PRESENTATION.format_word(res.c)) == ("b", "a")


def test_free_group_search_is_exhausted():
    backend = RewritingBackend(parse_presentation("gens: x y\n"))
    res = search_gt_order2(backend, SearchBounds(4, 4))
    assert res.exhausted and res.complete


def test_twisted_i_bundle_pair_maps_to_klein_form():
    backend = piece_backends(TWISTED_I_BUNDLE_DISK)[0]
    res = search_gt_order2(backend, SearchBounds(4, 2))
    assert res.found
    iso = klein_isomorphism_backend(TWISTED_I_BUNDLE_DISK)
    g, c = iso.element(res.g), iso.element(res.c)
    assert g.i == 0 and g.j != 0 and c.i % 2 == 1


def test_klein_witness_set_equals_closed_form():
    found = all_pairs(KleinBackend(), SearchBounds(4, 4))
    box = range(-4, 5)
    expected = {(KleinElement(0, j), KleinElement(k, l))
                for j in box for k in box for l in box
                if j and abs(j) <= 4 and abs(k) + abs(l) <= 4 and k % 2}
    assert found == expected
    assert all(k_is_gt_pair(g, c) for g, c in found)


@pytest.mark.parametrize("name,d,_", BOUNDARY_FIXTURES[:9], ids=lambda x: str(x))
def test_prefilter_never_changes_the_result(name, d, _):
    backend = piece_backends(d)[0]
    bounds = SearchBounds(4, 2)
    a = search_gt_order2(backend, bounds, prefilter=True)
    b = search_gt_order2(backend, bounds, prefilter=False)
    assert (a.g, a.c) == (b.g, b.c)
    assert a.tests <= b.tests


def test_search_is_deterministic():
    backend = piece_backends(TREFOIL)[0]
    runs = {(r.g, r.c, r.tests) for r in (search_gt_order2(backend, SearchBounds(5, 3)) for _ in range(3))}
    assert len(runs) == 1


def test_budget_reports_partial_coverage():
    backend = RewritingBackend(parse_presentation("gens: x y\n"))
    res = search_gt_order2(backend, SearchBounds(4, 4, budget=10))
    assert res.exhausted and not res.complete and res.tests == 10


def test_bounds_validation():
    with pytest.raises(ValueError):
        SearchBounds(0, 3)
    with pytest.raises(ValueError):
        SearchBounds(3, 3, budget=0)


def test_verify_pair_rejects_identity():
    for backend in (KleinBackend(), piece_backends(TREFOIL)[0]):
        assert not verify_pair(backend, Word(), Word.gen(0))


def test_verify_pair_trefoil_xy_form():
    # the trefoil group as <x, y | x^2 = y^3> with x = c1, y = c2
    backend = piece_backends(TREFOIL)[0]
    pres = backend.presentation
    assert verify_pair(backend, pres.word("c1*c2*c1*c2^-1*c1^-2"), pres.word("c1"))


def test_partial_rewriting_cannot_refute():
    backend = RewritingBackend(seifert_presentation(TREFOIL), max_iterations=300)
    assert not backend.exact
    pres = backend.presentation
    # homologically trivial but non-trivial: the backend must not guess
    with pytest.raises(UndecidableError):
        backend.is_trivial(pres.word("c1*c2*c1^-1*c2^-1"))
    # non-zero homology class settles non-triviality
    assert not backend.is_trivial(pres.word("c1"))
    with pytest.raises(UndecidableError):
        search_gt_order2(backend, SearchBounds(2, 2))


@pytest.mark.parametrize("name,d,_", BOUNDARY_FIXTURES[:9], ids=lambda x: str(x))
def test_cross_validation_small_bounds(name, d, _):
    report = cross_validate(d, SearchBounds(4, 2))
    assert report.consistent
    if report.verdict.witness is not None:
        assert all(report.witness_checks.values())


def test_cross_validation_skips_without_exact_backend():
    report = cross_validate(SeifertData(0, True, 0, ((2, 1), (3, 1), (7, 1))), SearchBounds(2, 2))
    assert not report.consistent and report.skipped


def test_klein_isomorphism_respects_relators():
    for d in (TWISTED_I_BUNDLE_DISK, SeifertData(1, False, 1, ()), SeifertData(1, False, 1, (), 3)):
        iso = klein_isomorphism_backend(d)
        for r in iso.presentation.relators:
            assert iso.is_trivial(r)
    assert klein_isomorphism_backend(TREFOIL) is None
