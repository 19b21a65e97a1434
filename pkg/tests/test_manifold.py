import itertools
import random

import pytest

from gtorsion.catalog import GENUS2_CLOSED, TREFOIL, TWISTED_I_BUNDLE_MOBIUS, manifold_fixtures, prime_fixtures
from gtorsion.manifold import (HyperbolicPiece, Irreducible, ManifoldDescriptor, S2xS1, SeifertPiece, SolidTorus,
                               Spherical, admits_gt_order2, finite_admits_order2, is_r_group, is_rbar_group,
                               random_descriptor)
from gtorsion.seifert import Status
from gtorsion.sfs import SeifertData
from gtorsion.words import InputError

PRIMES = prime_fixtures()


def m(*pieces):
    return ManifoldDescriptor(pieces)


def irr(*ds):
    return Irreducible(tuple(SeifertPiece(d) if isinstance(d, SeifertData) else d for d in ds))


def or3(a, b):
    if Status.YES in (a, b):
        return Status.YES
    if Status.UNKNOWN in (a, b):
        return Status.UNKNOWN
    return Status.NO


def test_examples():
    assert admits_gt_order2(m(irr(TREFOIL))).status is Status.YES
    assert admits_gt_order2(m(Spherical(5, True), irr(GENUS2_CLOSED))).status is Status.NO
    v = admits_gt_order2(m(irr(HyperbolicPiece(1))))
    assert (v.status, v.reason) == (Status.NO, "no Seifert piece")
    assert admits_gt_order2(m(S2xS1())).reason == "pi1 = Z"


def test_finite_truth_table():
    assert not finite_admits_order2(5, True)
    assert finite_admits_order2(8, True)
    assert finite_admits_order2(3, False)
    assert not finite_admits_order2(1, True)
    with pytest.raises(ValueError):
        finite_admits_order2(0, True)


def test_r_group_examples():
    assert is_r_group(m(irr(GENUS2_CLOSED))) is Status.YES
    assert is_r_group(m(irr(TREFOIL))) is Status.NO
    assert is_r_group(m(irr(TWISTED_I_BUNDLE_MOBIUS))) is Status.NO
    assert is_r_group(m(S2xS1(), SolidTorus())) is Status.YES
    assert is_r_group(m(Spherical(1, True))) is Status.YES
    assert is_r_group(m(Spherical(7, True))) is Status.NO


def test_torsion_flag_is_an_input_error():
    bad = m(Irreducible((SeifertPiece(GENUS2_CLOSED),), torsion_free=False))
    with pytest.raises(InputError):
        is_r_group(bad)
    with pytest.raises(InputError):
        admits_gt_order2(bad)


def test_descriptor_invariants():
    with pytest.raises(InputError):
        ManifoldDescriptor(())
    with pytest.raises(InputError):
        Irreducible(())
    with pytest.raises(InputError):
        Spherical(0, True)
    with pytest.raises(InputError):
        HyperbolicPiece(-1)


def test_degenerate_seifert_piece_rejected():
    with pytest.raises(InputError):
        admits_gt_order2(m(irr(SeifertData(0, True, 1, ()))))


@pytest.mark.parametrize("p,q", list(itertools.combinations_with_replacement(range(len(PRIMES)), 2)))
def test_connected_sum_is_or(p, q):
    a, b = PRIMES[p][1], PRIMES[q][1]
    va, vb = admits_gt_order2(m(a)).status, admits_gt_order2(m(b)).status
    assert admits_gt_order2(m(a, b)).status is or3(va, vb)
    assert admits_gt_order2(m(b, a)).status is or3(va, vb)


@pytest.mark.parametrize("name,piece", [p for p in PRIMES if isinstance(p[1], Irreducible)], ids=lambda x: str(x))
def test_hyperbolic_piece_never_changes_verdict(name, piece):
    before = admits_gt_order2(m(piece)).status
    after = admits_gt_order2(m(Irreducible(piece.jsj_pieces + (HyperbolicPiece(2),)))).status
    assert before is after


def test_r_group_excludes_order_two_torsion(seed):
    rng = random.Random(seed)
    cases = [d for _, d in manifold_fixtures()] + [random_descriptor(rng) for _ in range(200)]
    for d in cases:
        r = is_r_group(d)
        assert is_rbar_group(d) is r
        if r is Status.YES:
            assert admits_gt_order2(d).status is not Status.YES


def test_random_descriptor_is_seeded(seed):
    a = [random_descriptor(random.Random(seed)) for _ in range(5)]
    b = [random_descriptor(random.Random(seed)) for _ in range(5)]
    assert a == b
