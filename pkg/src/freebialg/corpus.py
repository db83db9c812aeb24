"""Seeded random corpora shared by the verification suites and the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement
from .bialgebra import DirectSumElement
from .scalars import QI
from .words import Rank, ReducedWord, Syllable

__all__ = [
    "random_reduced_word",
    "random_exact_scalar",
    "random_algebra_element",
    "random_direct_sum",
]


def random_reduced_word(
    rng: random.Random, ambient: Rank | int, max_len: int, max_gen: int | None = None
) -> ReducedWord:
    """A uniformly-lengthed non-backtracking random walk, hence exactly
    reduced.  For infinite rank a generator cutoff is required."""
    ambient = ambient if isinstance(ambient, Rank) else Rank(ambient)
    span = max_gen if ambient.is_infinite else ambient.n
    if span is None:
        raise ValueError("infinite rank needs max_gen")
    length = rng.randint(0, max_len)
    sylls: list[Syllable] = []
    for _ in range(length):
        while True:
            g = rng.randint(1, span)
            e = rng.choice((1, -1))
            if not sylls:
                break
            last = sylls[-1]
            if last.gen != g or (last.exp > 0) == (e > 0):
                break
        if sylls and sylls[-1].gen == g:
            sylls[-1] = Syllable(g, sylls[-1].exp + e)
        else:
            sylls.append(Syllable(g, e))
    return ReducedWord(ambient, tuple(sylls))


def random_exact_scalar(rng: random.Random, span: int = 3) -> QI:
    """A small nonzero Gaussian rational with denominators 1 or 2."""
    while True:
        re = Fraction(rng.randint(-span, span), rng.randint(1, 2))
        im = Fraction(rng.randint(-span, span), rng.randint(1, 2))
        if re or im:
            return QI(re, im)


def random_algebra_element(
    rng: random.Random, n: int, max_len: int = 5, max_terms: int = 3
) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_reduced_word(rng, n, max_len)
        terms[w] = random_exact_scalar(rng)
    return AlgebraElement(n, terms)


def random_direct_sum(
    rng: random.Random,
    max_rank: int = 12,
    max_len: int = 5,
    max_terms: int = 3,
    parts: int = 2,
) -> DirectSumElement:
    comps = []
    for _ in range(parts):
        n = rng.randint(1, max_rank)
        comps.append((n, random_algebra_element(rng, n, max_len, max_terms)))
    return DirectSumElement(comps)
