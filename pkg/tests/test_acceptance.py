"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Numerical tolerances are pinned here; elapsed time is printed for
reference but never asserted.
"""

import json
import random
import time
from contextlib import contextmanager

from freebialg import words as W
from freebialg.algebra import (
    AlgebraElement,
    TensorElement,
    standard_delta_compat_check,
    varphi_alg,
)
from freebialg.bialgebra import (
    DirectSumElement,
    coassoc_check,
    comodule_check,
    counit_axiom_check,
    counit_check,
    delta_phi,
    verify_cancellation,
    wcs_check,
)
from freebialg.cli import run as cli_run
from freebialg.corpus import random_direct_sum, random_reduced_word
from freebialg.morphisms import (
    alpha,
    alpha_endo,
    beta,
    beta_endo,
    bialgebra_morphism_check,
    max_term_deviation,
)
from freebialg import reps as R
from freebialg.words import INFINITE

SEED = 0


@contextmanager
def criterion(name: str):
    state = {"ok": False}
    started = time.monotonic()
    try:
        yield state
        state["ok"] = True
    finally:
        elapsed = time.monotonic() - started
        verdict = "PASS" if state["ok"] else "FAIL"
        print(f"ACCEPTANCE {name}: {verdict} ({elapsed:.3f}s)")


def test_01_coproduct_of_g2_rank6():
    with criterion("01 four-term-coproduct"):
        t = delta_phi(DirectSumElement.from_word(W.gen(6, 2)))
        assert t.exact
        expected = {
            (1, 6): TensorElement.from_pair(W.gen(1, 1), W.gen(6, 2)),
            (2, 3): TensorElement.from_pair(W.gen(2, 1), W.gen(3, 2)),
            (3, 2): TensorElement.from_pair(W.gen(3, 1), W.gen(2, 2)),
            (6, 1): TensorElement.from_pair(W.gen(6, 2), W.gen(1, 1)),
        }
        assert t.components == expected
        assert str(t) == (
            "F1(x)F6: g1(x)g2 (+) F2(x)F3: g1(x)g2 (+) "
            "F3(x)F2: g1(x)g2 (+) F6(x)F1: g2(x)g1"
        )


def test_02_coassociativity_suite():
    with criterion("02 coassociativity"):
        for n in range(1, 25):
            for k in range(1, n + 1):
                assert coassoc_check(DirectSumElement.from_word(W.gen(n, k)))[2]
        rng = random.Random(SEED)
        for _ in range(200):
            x = random_direct_sum(rng, max_rank=12, max_len=5)
            lhs, rhs, equal = coassoc_check(x)
            assert equal and lhs.exact and rhs.exact


def test_03_counit_suite():
    with criterion("03 counit-law"):
        for n in range(1, 25):
            for k in range(1, n + 1):
                assert counit_check(DirectSumElement.from_word(W.gen(n, k)))
        rng = random.Random(SEED)
        for _ in range(200):
            assert counit_check(random_direct_sum(rng, max_rank=12, max_len=5))


def test_04_wcs_axioms():
    with criterion("04 wcs-axioms"):
        for n in range(1, 5):
            for m in range(1, 5):
                for l in range(1, 5):
                    for k in range(1, n * m * l + 1):
                        assert wcs_check(n, m, l, W.gen(n * m * l, k))
        for n in range(1, 13):
            for k in range(1, n + 1):
                assert counit_axiom_check(n, W.gen(n, k))


def test_05_kernel_identities():
    with criterion("05 kernel-identities"):
        z = W.reduce(4, [(1, 1), (2, -1), (4, 1), (3, -1)])
        p, q = W.phi(2, 2, z)
        assert p.is_unit and q.is_unit
        for n in (2, 3):
            for m in (2, 3):
                for i in range(1, n + 1):
                    for l in range(1, n + 1):
                        for j in range(1, m + 1):
                            for k in range(1, m + 1):
                                w = W.kernel_witness(n, m, i, l, j, k)
                                diff = AlgebraElement.from_word(w) - AlgebraElement.unit(n * m)
                                assert varphi_alg(n, m, diff).is_zero
                                if i != l and j != k:
                                    assert not w.is_unit
                                    assert not diff.is_zero


def test_06_cancellation_witnesses():
    with criterion("06 cancellation-law"):
        for n in (1, 2):
            for m in (1, 2):
                for x in W.enumerate_ball(n, 3):
                    for y in W.enumerate_ball(m, 3):
                        assert verify_cancellation(x, y)
        rng = random.Random(SEED)
        for _ in range(100):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            x = random_reduced_word(rng, n, 5)
            y = random_reduced_word(rng, m, 5)
            assert verify_cancellation(x, y)


def test_07_comodule_identity():
    with criterion("07 comodule-identity"):
        for k in range(1, 25):
            for n in range(1, 4):
                for m in range(1, 4):
                    assert comodule_check(n, m, W.gen(INFINITE, k))


def test_08_permutation_representation_suite():
    with criterion("08 permutation-representations"):
        for n in (2, 3):
            ball = W.enumerate_ball(n, 4)
            for i in range(1, n + 1):
                for w in ball:
                    assert R.gns_coeff_check(n, i, w)
        for n in (2, 3):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    expected = 1 if i == j else 0
                    assert R.fixed_vector_dim(n, i, j, 3) == expected
        ball2 = W.enumerate_ball(2, 3)
        for i in (1, 2):
            for j in (1, 2):
                for x in ball2:
                    for y in ball2:
                        assert R.cyclicity_check(2, 2, i, j, x, y)


def test_09_intertwiner_relation():
    with criterion("09 intertwiner"):
        rng = random.Random(SEED)
        for _ in range(200):
            x = random_reduced_word(rng, 2, 4)
            h = random_reduced_word(rng, 4, 4)
            g = random_reduced_word(rng, 4, 4)
            assert R.intertwine_check(2, 2, x, h, g)
        kernel = W.kernel_witness(2, 2, 1, 2, 1, 2)
        assert R.U_map(2, 2, W.unit(2), kernel) == R.U_map(2, 2, W.unit(2), W.unit(4))


def test_10_gram_psd():
    with criterion("10 gram-psd"):
        tol = 1e-9
        for n in (2, 3):
            ball = W.enumerate_ball(n, 2)
            for i in range(1, n + 1):
                min_eig, ok = R.gram_psd(R.PDFunction(n, i), ball, tol)
                assert ok, (n, i, min_eig)
        ball4 = W.enumerate_ball(4, 2)
        for i in (1, 2):
            for j in (1, 2):
                min_eig, ok = R.gram_psd(
                    lambda z, i=i, j=j: R.f_pullback_eval(2, i, 2, j, z), ball4, tol
                )
                assert ok, (i, j, min_eig)


def test_11_automorphism_suite():
    with criterion("11 automorphisms"):
        endo = beta_endo()
        for n in range(1, 25):
            for k in range(1, n + 1):
                x = DirectSumElement.from_word(W.gen(n, k))
                assert bialgebra_morphism_check(endo, x)
        rng = random.Random(SEED)
        for _ in range(100):
            x = random_direct_sum(rng, max_rank=12, max_len=5)
            assert beta(beta(x)) == x
        ts = (0.3, 1.0, 2.5)
        for t in ts:
            for n in range(1, 13):
                for k in range(1, n + 1):
                    x = DirectSumElement.from_word(W.gen(n, k))
                    assert bialgebra_morphism_check(alpha_endo(t), x, 1e-9)
        corpus = [
            DirectSumElement.from_word(W.gen(n, k))
            for n in range(1, 13)
            for k in range(1, n + 1)
        ]
        for t in ts:
            for s in ts:
                for x in corpus:
                    dev = max_term_deviation(alpha(t, alpha(s, x)), alpha(t + s, x))
                    assert dev <= 1e-9
                    comm = max_term_deviation(beta(alpha(t, x)), alpha(t, beta(x)))
                    assert comm <= 1e-9


def test_12_standard_comultiplication_compatibility():
    with criterion("12 diagonal-compatibility"):
        for n in range(1, 5):
            for m in range(1, 5):
                for k in range(1, n * m + 1):
                    a = AlgebraElement.from_word(W.gen(n * m, k))
                    assert standard_delta_compat_check(n, m, a)


# -- criterion 13: reported findings, brute-force confirmed ----------------------


def _brute_pair_image(letters, m):
    """Letter-level pair image: signed integer arithmetic only."""

    def cancel(seq):
        out = []
        for s in seq:
            if out and out[-1] == -s:
                out.pop()
            else:
                out.append(s)
        return out

    first, second = [], []
    for s in letters:
        k = abs(s)
        i, j = (k - 1) // m + 1, (k - 1) % m + 1
        sign = 1 if s > 0 else -1
        first.append(i * sign)
        second.append(j * sign)
    return cancel(first), cancel(second)


def test_13a_indicator_probe_finding():
    with criterion("13a indicator-probe-finding"):
        # brute-force confirmation: c1 c2^-1 c4 c3^-1 has trivial pair image
        letters = [1, -2, 4, -3]
        p, q = _brute_pair_image(letters, 2)
        assert p == [] and q == []
        # pullback of f1 x f1 is therefore 1; the word is not a power of c1
        assert any(abs(s) != 1 for s in letters)

        found = R.claim_probe_pd(2, 2, 1, 1, 4)
        z = W.reduce(4, [(1, 1), (2, -1), (4, 1), (3, -1)])
        assert (z, 1, 0) in found

        report, code = cli_run(["probe", "claims", "--radius", "4"])
        assert code == 0
        tensor_1111 = next(
            r
            for r in report["reports"]
            if r["claim"] == "prop-indicator-tensor"
            and r["params"] == {"n": 2, "m": 2, "i": 1, "j": 1}
        )
        assert {
            "z": [[1, 1], [2, -1], [4, 1], [3, -1]],
            "pullback": 1,
            "direct": 0,
        } in tensor_1111["disagreements"]
        json.dumps(report)  # report must be serializable as emitted


def test_13b_orbit_probe_finding():
    with criterion("13b orbit-probe-finding"):
        # brute force: left-apply the moves c3^-1, c2^-1, c4, c1 to (1, 1)
        def cancel(seq):
            out = []
            for s in seq:
                if out and out[-1] == -s:
                    out.pop()
                else:
                    out.append(s)
            return out

        pair = ([], [])
        for move in (-3, -2, 4, 1):
            mp, mq = _brute_pair_image([move], 2)
            pair = (cancel(mp + pair[0]), cancel(mq + pair[1]))
        assert pair == ([1, 2, -1, -2], [])

        orbit = R.orbit_bfs(2, 2, (W.unit(2), W.unit(2)), 4)
        commutator = W.reduce(2, [(1, 1), (2, 1), (1, -1), (2, -1)])
        assert (commutator, W.unit(2)) in orbit

        report, code = cli_run(["probe", "claims", "--radius", "4"])
        assert code == 0
        orbit_report = next(
            r for r in report["reports"] if r["claim"] == "prop-orbit-separation"
        )
        assert orbit_report["disagreements"]
