import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gtorsion.catalog import BOUNDARY_FIXTURES, TREFOIL, TWISTED_I_BUNDLE_MOBIUS
from gtorsion.extension import ExtensionGroup, UnsupportedBackendError
from gtorsion.rewriting import knuth_bendix
from gtorsion.sfs import SeifertData
from gtorsion.words import enumerate_words, free_reduce

PIECES = [d for _, d, _ in BOUNDARY_FIXTURES] + [SeifertData(1, False, 2, ((2, 1),), 1),
                                                  SeifertData(1, True, 1, ((3, -1),), -2)]


def random_word(rng, ngens, length):
    return free_reduce((rng.randrange(ngens), rng.choice((-2, -1, 1, 2))) for _ in range(length))


@pytest.mark.parametrize("d", PIECES, ids=lambda d: d.describe())
def test_relators_evaluate_to_identity(d):
    g = ExtensionGroup(d)
    for r in g.presentation.relators:
        assert g.eval(r).is_identity(), g.presentation.format_word(r)


@pytest.mark.parametrize("d", PIECES, ids=lambda d: d.describe())
def test_eval_is_a_homomorphism(d, rng):
    g = ExtensionGroup(d)
    n = g.presentation.ngens
    for _ in range(1000 // len(PIECES) + 1):
        u, v = random_word(rng, n, rng.randint(0, 8)), random_word(rng, n, rng.randint(0, 8))
        assert g.eval(u * v) == g.mul(g.eval(u), g.eval(v))
        assert g.eval(u.inverse()) == g.inv(g.eval(u))


@pytest.mark.parametrize("d", PIECES, ids=lambda d: d.describe())
def test_fiber_is_central_or_inverted(d, rng):
    g = ExtensionGroup(d)
    h = g.h_power(1)
    for _ in range(50):
        x = g.eval(random_word(rng, g.presentation.ngens, rng.randint(0, 6)))
        expected = h if g.character(x.orb) == 1 else g.inv(h)
        assert g.conj(h, x) == expected


@pytest.mark.parametrize("d", PIECES, ids=lambda d: d.describe())
def test_torsion_free(d, rng):
    g = ExtensionGroup(d)
    for _ in range(100):
        x = g.eval(random_word(rng, g.presentation.ngens, rng.randint(1, 6)))
        if x.is_identity():
            continue
        for n in range(2, 7):
            assert not g.power(x, n).is_identity()


def test_associativity_on_trefoil():
    g = ExtensionGroup(TREFOIL)
    words = list(enumerate_words(g.presentation.ngens, 2))[:40]
    els = [g.eval(w) for w in words]
    for x, y, z in itertools.product(els[:15], repeat=3):
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))


def test_agrees_with_completed_rewriting_on_short_words():
    d = TWISTED_I_BUNDLE_MOBIUS
    g = ExtensionGroup(d)
    rws = knuth_bendix(g.presentation)
    assert rws.confluent
    by_element, by_normal_form = {}, {}
    for w in enumerate_words(g.presentation.ngens, 5):
        x, nf = g.eval(w), rws.normal_form(w)
        assert by_element.setdefault(x, nf) == nf
        assert by_normal_form.setdefault(nf, x) == x


def test_cyclic_exponents_are_canonical():
    g = ExtensionGroup(TREFOIL)
    c1 = g.word("c1")
    assert g.power(c1, 2) == g.h_power(1)
    x = g.word("c2^2")
    assert x.orb == ((1, -1),) and x.fib == 1


def test_mobius_fiber_inversion():
    g = ExtensionGroup(TWISTED_I_BUNDLE_MOBIUS)
    assert g.conj(g.word("h"), g.word("v1")) == g.word("h^-1")


def test_closed_piece_is_rejected():
    with pytest.raises(UnsupportedBackendError):
        ExtensionGroup(SeifertData(2, True, 0, ()))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.sampled_from([-3, -1, 1, 2])), max_size=10))
def test_to_word_round_trip(raw):
    g = ExtensionGroup(TREFOIL)
    x = g.eval(free_reduce(raw))
    assert g.eval(g.to_word(x)) == x
