"""Tests for the graded coproduct, counit, unitization, coaction, and the
axiom checkers."""

import random

import pytest

from freebialg import words as W
from freebialg.algebra import AlgebraElement, TensorElement, varphi_alg
from freebialg.bialgebra import (
    DirectSumElement,
    UnitizedElement,
    coaction,
    coassoc_check,
    comodule_check,
    counit,
    counit_axiom_check,
    counit_check,
    delta_phi,
    factor_pairs,
    unitized_counit,
    unitized_delta,
    unitized_tensor_mul,
    verify_cancellation,
    wcs_check,
)
from freebialg.corpus import random_direct_sum, random_reduced_word
from freebialg.scalars import QI
from freebialg.words import INFINITE


def dsum_word(n, k):
    return DirectSumElement.from_word(W.gen(n, k))


def test_factor_pairs():
    assert factor_pairs(6) == [(1, 6), (2, 3), (3, 2), (6, 1)]
    assert factor_pairs(1) == [(1, 1)]
    assert factor_pairs(7) == [(1, 7), (7, 1)]


def ordered_divisor_count(n):
    return sum(1 for m in range(1, n + 1) if n % m == 0)


# -- delta_phi ------------------------------------------------------------------


def test_delta_of_g2_rank6_is_the_four_term_sum():
    t = delta_phi(dsum_word(6, 2))
    assert t.keys() == [(1, 6), (2, 3), (3, 2), (6, 1)]
    assert t.component(1, 6) == TensorElement.from_pair(W.gen(1, 1), W.gen(6, 2))
    assert t.component(2, 3) == TensorElement.from_pair(W.gen(2, 1), W.gen(3, 2))
    assert t.component(3, 2) == TensorElement.from_pair(W.gen(3, 1), W.gen(2, 2))
    assert t.component(6, 1) == TensorElement.from_pair(W.gen(6, 2), W.gen(1, 1))


def test_delta_on_rank1_is_diagonal():
    t = delta_phi(dsum_word(1, 1))
    assert t.keys() == [(1, 1)]
    assert t.component(1, 1) == TensorElement.from_pair(W.gen(1, 1), W.gen(1, 1))


def test_delta_of_g3_rank4():
    t = delta_phi(dsum_word(4, 3))
    assert t.component(1, 4) == TensorElement.from_pair(W.gen(1, 1), W.gen(4, 3))
    assert t.component(2, 2) == TensorElement.from_pair(W.gen(2, 2), W.gen(2, 1))
    assert t.component(4, 1) == TensorElement.from_pair(W.gen(4, 3), W.gen(1, 1))


def test_delta_summand_count_is_ordered_divisor_count():
    for n in range(1, 25):
        t = delta_phi(dsum_word(n, 1))
        assert t.term_count() == ordered_divisor_count(n)


def test_delta_is_multiplicative_within_one_rank():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 8)
        x = DirectSumElement.from_algebra(
            AlgebraElement.from_word(random_reduced_word(rng, n, 4))
        )
        y = DirectSumElement.from_algebra(
            AlgebraElement.from_word(random_reduced_word(rng, n, 4))
        )
        assert delta_phi(x * y) == delta_phi(x) * delta_phi(y)


def test_delta_commutes_with_star():
    rng = random.Random(8)
    for _ in range(60):
        x = random_direct_sum(rng, max_rank=8, max_len=4)
        assert delta_phi(x.star()) == delta_phi(x).star()


def test_noncocommutativity_witness():
    t = delta_phi(dsum_word(6, 2))
    assert t.flip() != t


# -- counit ---------------------------------------------------------------------


def test_counit_examples():
    assert counit(dsum_word(1, 1)) == QI(1)
    assert counit(DirectSumElement.from_word(W.gen(1, 1, 5))) == QI(1)
    assert counit(dsum_word(3, 2)) == QI(0)
    x = DirectSumElement.from_algebra(
        AlgebraElement.from_word(W.gen(1, 1, 2), 3)
        - AlgebraElement.from_word(W.gen(1, 1, -1))
    )
    assert counit(x) == QI(2)


# -- coassociativity --------------------------------------------------------------


def test_coassoc_g2_rank6_nine_terms():
    lhs, rhs, equal = coassoc_check(dsum_word(6, 2))
    assert equal
    count = sum(len(el) for el in lhs.components.values())
    assert count == 9  # ordered triple factorizations of 6


def test_coassoc_trivial_rank1():
    lhs, rhs, equal = coassoc_check(dsum_word(1, 1))
    assert equal
    g = W.gen(1, 1)
    assert list(lhs.components[(1, 1, 1)].terms) == [(g, g, g)]


def test_coassoc_on_product_word():
    x = DirectSumElement.from_algebra(
        AlgebraElement.from_word(W.gen(4, 2) * W.gen(4, 3))
    )
    assert coassoc_check(x)[2]


def test_coassoc_generators_all_ranks():
    for n in range(1, 25):
        for k in range(1, n + 1):
            assert coassoc_check(dsum_word(n, k))[2]


def test_coassoc_random_corpus():
    rng = random.Random(0)
    for _ in range(200):
        x = random_direct_sum(rng, max_rank=12, max_len=5)
        assert coassoc_check(x)[2]


# -- counit law --------------------------------------------------------------------


def test_counit_check_examples():
    assert counit_check(dsum_word(6, 2))
    assert counit_check(DirectSumElement.zero())
    rng = random.Random(9)
    w = random_reduced_word(rng, 12, 4)
    assert counit_check(DirectSumElement.from_word(w))


def test_counit_check_random_corpus():
    rng = random.Random(0)
    for _ in range(200):
        assert counit_check(random_direct_sum(rng, max_rank=12, max_len=5))


# -- mixed coassociativity and counit axioms ------------------------------------------


def test_wcs_check_examples():
    assert wcs_check(2, 2, 2, W.gen(8, 7))
    assert wcs_check(3, 2, 4, W.unit(24))
    assert wcs_check(2, 3, 2, W.gen(12, 5))


def test_wcs_check_generator_grid():
    for n in range(1, 4):
        for m in range(1, 4):
            for l in range(1, 4):
                for k in range(1, n * m * l + 1):
                    assert wcs_check(n, m, l, W.gen(n * m * l, k))


def test_counit_axiom_examples():
    assert counit_axiom_check(3, W.gen(3, 2))
    assert counit_axiom_check(5, W.unit(5))
    assert counit_axiom_check(4, W.gen(4, 1) * W.gen(4, 3, -1))


def test_counit_axiom_generators():
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert counit_axiom_check(n, W.gen(n, k))


# -- unitization -------------------------------------------------------------------------


def test_unitized_delta_of_unit():
    t, lam = unitized_delta(UnitizedElement.adjoined_unit())
    assert t.is_zero and lam == QI(1)


def test_unitized_delta_of_body_element():
    x = UnitizedElement(dsum_word(6, 2))
    t, lam = unitized_delta(x)
    assert lam == QI(0) and t == delta_phi(dsum_word(6, 2))


def test_unitized_counit_examples():
    assert unitized_counit(UnitizedElement.adjoined_unit()) == QI(1)
    assert unitized_counit(UnitizedElement(dsum_word(3, 2))) == QI(0)
    x = UnitizedElement(dsum_word(1, 1), QI(2))
    assert unitized_counit(x) == QI(3)


def test_unitized_delta_multiplicative():
    rng = random.Random(10)
    for _ in range(80):
        a = UnitizedElement(random_direct_sum(rng, max_rank=6, max_len=3), rng.randint(-2, 2))
        b = UnitizedElement(random_direct_sum(rng, max_rank=6, max_len=3), rng.randint(-2, 2))
        lhs = unitized_delta(a * b)
        rhs = unitized_tensor_mul(unitized_delta(a), unitized_delta(b))
        assert lhs[0] == rhs[0] and lhs[1] == rhs[1]
        assert unitized_counit(a * b) == unitized_counit(a) * unitized_counit(b)


def test_unitized_requires_exact():
    rng = random.Random(11)
    x = random_direct_sum(rng, max_rank=3, max_len=2).to_approx()
    with pytest.raises(ValueError):
        UnitizedElement(x)


# -- cancellation law -----------------------------------------------------------------------


def test_verify_cancellation_examples():
    assert verify_cancellation(W.gen(2, 1), W.gen(2, 2))
    assert verify_cancellation(W.unit(1), W.unit(1))


def test_verify_cancellation_random():
    rng = random.Random(12)
    for _ in range(100):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        assert verify_cancellation(
            random_reduced_word(rng, n, 5), random_reduced_word(rng, m, 5)
        )


# -- coaction ----------------------------------------------------------------------------------


def test_coaction_examples():
    fam = coaction(AlgebraElement.from_word(W.gen(INFINITE, 1)), 2)
    assert fam[1] == TensorElement.from_pair(W.gen(INFINITE, 1), W.gen(1, 1))
    assert fam[2] == TensorElement.from_pair(W.gen(INFINITE, 1), W.gen(2, 1))

    fam = coaction(AlgebraElement.unit(INFINITE), 3)
    for n in (1, 2, 3):
        assert fam[n] == TensorElement.from_pair(W.unit(INFINITE), W.unit(n))

    fam = coaction(AlgebraElement.from_word(W.gen(INFINITE, 7)), 2)
    assert fam[2] == TensorElement.from_pair(W.gen(INFINITE, 4), W.gen(2, 1))


def test_coaction_validates_truncation():
    with pytest.raises(ValueError):
        coaction(AlgebraElement.unit(INFINITE), 0)


def test_comodule_check_examples():
    assert comodule_check(2, 2, W.gen(INFINITE, 7))
    assert comodule_check(3, 2, W.unit(INFINITE))
    assert comodule_check(2, 3, W.gen(INFINITE, 10))


def test_comodule_check_generators():
    for k in range(1, 25):
        for n in range(1, 4):
            for m in range(1, 4):
                assert comodule_check(n, m, W.gen(INFINITE, k))


# -- graded containers ---------------------------------------------------------------------------


def test_direct_sum_products_vanish_across_ranks():
    x = dsum_word(2, 1)
    y = dsum_word(3, 1)
    assert (x * y).is_zero
    assert (x * x).component(2) == AlgebraElement.from_word(W.gen(2, 1, 2))


def test_direct_sum_json_roundtrip():
    rng = random.Random(13)
    x = random_direct_sum(rng, max_rank=5, max_len=3)
    assert DirectSumElement.from_json(x.to_json()) == x


def test_direct_sum_rejects_mode_mixing():
    a = AlgebraElement.from_word(W.gen(2, 1))
    b = AlgebraElement.from_word(W.gen(3, 1)).to_approx()
    with pytest.raises(ValueError):
        DirectSumElement([(2, a), (3, b)])


def test_varphi_alg_matches_delta_component():
    rng = random.Random(14)
    for _ in range(50):
        n = rng.choice((4, 6, 8, 9, 12))
        a = AlgebraElement.from_word(random_reduced_word(rng, n, 4))
        t = delta_phi(DirectSumElement.from_algebra(a))
        for m, l in factor_pairs(n):
            assert t.component(m, l) == varphi_alg(m, l, a)
