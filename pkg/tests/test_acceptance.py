"""
Acceptance gate: one test per criterion, each reporting a PASS/FAIL line
in the terminal summary (and on stdout under ``-s``).
"""

import itertools
import random
import time
from contextlib import contextmanager


from conftest import ACCEPTANCE_RESULTS
from gtorsion.backends import ExtensionBackend, RewritingBackend, verify_pair
from gtorsion.catalog import (BOUNDARY_FIXTURES, TREFOIL, TWISTED_I_BUNDLE_DISK, TWISTED_I_BUNDLE_MOBIUS,
                              manifold_fixtures, prime_fixtures)
from gtorsion.extension import ExtensionGroup
from gtorsion.homology import abelianization, diagonal, matmul, order2_necessary, smith_normal_form
from gtorsion.klein import (KLEIN_PRESENTATION, KleinElement, k_commutes, k_conj, k_from_word, k_is_gt_pair,
                            k_mul, k_pow)
from gtorsion.manifold import (HyperbolicPiece, Irreducible, ManifoldDescriptor, S2xS1, SolidTorus,
                               admits_gt_order2, finite_admits_order2, is_r_group, is_rbar_group,
                               random_descriptor)
from gtorsion.oracle import SearchBounds, cross_validate, klein_isomorphism_backend, search_gt_order2
from gtorsion.rewriting import knuth_bendix
from gtorsion.seifert import Status, gt_order2_status, horizontal_base_solutions, check_horizontal_cover
from gtorsion.sfs import seifert_presentation
from gtorsion.words import enumerate_words, parse_presentation


@contextmanager
def criterion(n: int, budget_s: float | None = None):
    """Record PASS/FAIL for criterion n; the body asserts, the budget is wall-clock seconds."""
    t0 = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        ok = budget_s is None or elapsed < budget_s
        detail = f"{elapsed:.2f}s" + (f" (limit {budget_s:g}s)" if budget_s else "")
    except AssertionError as e:
        detail = f"{type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}"
        raise
    finally:
        ACCEPTANCE_RESULTS[n] = (ok, detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"criterion {n} over its time limit: {detail}"


def or3(statuses):
    if Status.YES in statuses:
        return Status.YES
    if Status.UNKNOWN in statuses:
        return Status.UNKNOWN
    return Status.NO


def test_criterion_1_klein_pairs_exhaustive():
    with criterion(1, 1.0):
        mismatches = 0
        box = range(-4, 5)
        for i, j, k, l in itertools.product(box, repeat=4):
            g, c = KleinElement(i, j), KleinElement(k, l)
            expected = i == 0 and j != 0 and k % 2 == 1
            mismatches += k_is_gt_pair(g, c) != expected
        assert mismatches == 0, f"{mismatches} mismatches"


def test_criterion_2_rewriting_matches_klein():
    with criterion(2, 10.0):
        rws = knuth_bendix(KLEIN_PRESENTATION)
        assert rws.confluent, rws.reason
        words = list(enumerate_words(2, 5))
        nf = [rws.normal_form(w) for w in words]
        kl = [k_from_word(w) for w in words]
        mismatches = sum((nf[a] == nf[b]) != (kl[a] == kl[b])
                         for a in range(len(words)) for b in range(a, len(words)))
        assert mismatches == 0, f"{mismatches} mismatches over {len(words)} words"


def test_criterion_3_homology(rng):
    with criterion(3):
        klein = abelianization(KLEIN_PRESENTATION)
        assert (klein.free_rank, klein.torsion) == (1, (2,)), str(klein)
        assert abelianization(seifert_presentation(TWISTED_I_BUNDLE_DISK)) == klein
        for _ in range(500):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
            u, d, v = smith_normal_form(m)
            assert matmul(matmul(u, m), v) == d, m
            assert all(d[i][j] == 0 for i in range(r) for j in range(c) if i != j), m
            nz = [x for x in diagonal(d) if x]
            assert all(x > 0 for x in nz) and diagonal(d)[:len(nz)] == nz, m
            assert all(b % a == 0 for a, b in zip(nz, nz[1:])), m


def test_criterion_4_riemann_hurwitz():
    with criterion(4):
        assert horizontal_base_solutions() == [("KleinBottle", ()), ("RP2", (2, 2))]
        assert not check_horizontal_cover(1, [2, 3])
        assert not check_horizontal_cover(1, [2])
        assert check_horizontal_cover(0, [])
        assert check_horizontal_cover(1, [2, 2])


def test_criterion_5_constructive_witnesses():
    with criterion(5, 30.0):
        cases = [
            (TREFOIL, "c1*c2*c1*c2^-1*h^-1", "c1"),
            (TWISTED_I_BUNDLE_MOBIUS, "h", "v1"),
            (TWISTED_I_BUNDLE_DISK, "c1*c2*h^-1", "c1"),
        ]
        for d, g_text, c_text in cases:
            pres = seifert_presentation(d)
            g, c = pres.word(g_text), pres.word(c_text)
            w = gt_order2_status(d).witness
            assert (w.g_text(), w.c_text()) == (g_text, c_text), d.describe()
            assert verify_pair(ExtensionBackend(ExtensionGroup(d)), g, c), d.describe()
            assert order2_necessary(pres, g), d.describe()
            rewriting = RewritingBackend(pres, max_rules=600, max_rule_len=40, max_iterations=20000)
            if rewriting.exact:
                assert verify_pair(rewriting, g, c), d.describe()
            else:
                # completion fails here; the partial system still derives c^-1 g c g = 1
                assert rewriting.rws.proves_trivial(c.inverse() * g * c * g), d.describe()
            iso = klein_isomorphism_backend(d)
            if iso is not None:
                assert verify_pair(iso, g, c), d.describe()
        assert RewritingBackend(seifert_presentation(TWISTED_I_BUNDLE_MOBIUS)).exact


def test_criterion_6_cross_validation_battery():
    with criterion(6):
        assert len(BOUNDARY_FIXTURES) >= 8
        shapes = {(d.base_orientable, min(2, sum(f.p % 2 == 0 for f in d.fibers))) for _, d, _ in BOUNDARY_FIXTURES}
        assert {(True, 0), (True, 1), (True, 2), (False, 0)} <= shapes
        for name, d, expected in BOUNDARY_FIXTURES:
            report = cross_validate(d, SearchBounds(6, 3))
            assert report.consistent, name
            assert report.verdict.status is expected, name
            assert report.search.found == (expected is Status.YES), name
            assert report.search.complete, name
        free = search_gt_order2(RewritingBackend(parse_presentation("gens: x y\n")), SearchBounds(6, 3))
        assert free.exhausted and free.complete


def test_criterion_7_r_groups(rng):
    with criterion(7):
        cases = [d for _, d in manifold_fixtures()] + [random_descriptor(rng) for _ in range(200)]
        for m in cases:
            r = is_r_group(m)
            assert is_rbar_group(m) is r, m
            if r is Status.YES:
                assert admits_gt_order2(m).status is not Status.YES, m
        for order in range(1, 40):
            assert finite_admits_order2(order, True) == (order % 2 == 0)
            assert finite_admits_order2(order, False) == (order > 1)
        assert not finite_admits_order2(1, True) and not finite_admits_order2(1, False)


def test_criterion_8_composition():
    with criterion(8):
        primes = [p for _, p in prime_fixtures()]
        status = {p: admits_gt_order2(ManifoldDescriptor((p,))).status for p in primes}
        for a, b in itertools.product(primes, repeat=2):
            assert admits_gt_order2(ManifoldDescriptor((a, b))).status is or3([status[a], status[b]]), (a, b)
        for p in primes:
            if isinstance(p, Irreducible):
                bigger = Irreducible(p.jsj_pieces + (HyperbolicPiece(1),))
                assert admits_gt_order2(ManifoldDescriptor((bigger,))).status is status[p], p
        for p in (S2xS1(), SolidTorus()):
            m = ManifoldDescriptor((p,))
            assert admits_gt_order2(m).status is Status.NO
            assert is_r_group(m) is Status.YES


def test_criterion_9_pair_calculus(seed):
    with criterion(9, 5.0):
        rng = random.Random(seed)

        def element():
            return KleinElement(rng.randint(-8, 8), rng.randint(-8, 8))

        def pair():
            return KleinElement(0, rng.choice([x for x in range(-8, 9) if x])), \
                KleinElement(2 * rng.randint(-4, 4) + 1, rng.randint(-8, 8))

        for _ in range(1000):
            g, c = pair()
            x = element()
            assert k_is_gt_pair(k_conj(g, x), k_conj(c, x)), (g, c, x)
        for _ in range(1000):
            g, c = pair()
            n = rng.choice([k for k in range(-5, 6) if k])
            assert k_is_gt_pair(k_pow(g, n), c), (g, c, n)
        for _ in range(1000):
            g, c = pair()
            z = element()
            if k_commutes(z, g):
                assert k_is_gt_pair(g, k_mul(z, c)) == (z.i % 2 == 0), (g, c, z)
            # elements of even a-exponent always centralise b-powers
            z = KleinElement(2 * rng.randint(-4, 4), rng.randint(-8, 8))
            assert k_commutes(z, g) and k_is_gt_pair(g, k_mul(z, c)), (g, c, z)
        for _ in range(1000):
            x = element()
            n = rng.choice([k for k in range(-6, 7) if k])
            assert (k_pow(x, n) == KleinElement(0, 0)) == (x == KleinElement(0, 0)), (x, n)
