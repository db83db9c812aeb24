"""Reduced words in finitely or countably generated free groups.

A word is stored run-length encoded as a sequence of syllables ``g^e`` with
nonzero integer exponents and distinct adjacent generator indices.  This is
the unique normal form of a free-group element, so equality of words is
equality of group elements.  Generator indices are 1-based.

The maps between a free group of composite rank and pairs of lower-rank free
groups follow the index decomposition ``k = m*(i-1) + j`` with
``1 <= j <= m``; see :func:`phi` and :func:`phi_inf`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Rank",
    "INFINITE",
    "Syllable",
    "ReducedWord",
    "PairWord",
    "unit",
    "gen",
    "reduce",
    "multiply",
    "inverse",
    "phi",
    "phi_inf",
    "kernel_witness",
    "lift_first",
    "lift_second",
    "cancellation_witness_left",
    "cancellation_witness_right",
    "cyclicity_witness",
    "enumerate_ball",
]


@dataclass(frozen=True)
class Rank:
    """Number of free generators; ``n=None`` encodes countably infinite rank."""

    n: int | None = None

    def __post_init__(self):
        if self.n is not None and (not isinstance(self.n, int) or self.n < 1):
            raise ValueError(f"finite rank must be a positive integer, got {self.n!r}")

    @property
    def is_infinite(self) -> bool:
        return self.n is None

    def allows(self, gen_index: int) -> bool:
        if gen_index < 1:
            return False
        return self.n is None or gen_index <= self.n

    def __str__(self):
        return "Finf" if self.n is None else f"F{self.n}"

    def to_json(self):
        return "inf" if self.n is None else self.n

    @classmethod
    def from_json(cls, data) -> "Rank":
        return INFINITE if data == "inf" else cls(int(data))


INFINITE = Rank(None)


def _as_rank(ambient: Rank | int) -> Rank:
    return ambient if isinstance(ambient, Rank) else Rank(ambient)


class Syllable(NamedTuple):
    gen: int
    exp: int


@dataclass(frozen=True)
class ReducedWord:
    """A freely reduced word; the empty syllable sequence is the group unit.

    >>> w = reduce(Rank(2), [(1, 1), (2, 1), (2, -1), (1, 1)])
    >>> str(w)
    'g1^2'
    """

    ambient: Rank
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        sylls = tuple(Syllable(*s) for s in self.syllables)
        object.__setattr__(self, "syllables", sylls)
        prev = 0
        for s in sylls:
            if s.exp == 0:
                raise ValueError("zero exponent in reduced word")
            if not self.ambient.allows(s.gen):
                raise ValueError(f"generator index {s.gen} out of range for {self.ambient}")
            if s.gen == prev:
                raise ValueError("adjacent syllables share a generator; word not reduced")
            prev = s.gen

    # -- structure ---------------------------------------------------------

    @property
    def is_unit(self) -> bool:
        return not self.syllables

    @property
    def letter_length(self) -> int:
        return sum(abs(s.exp) for s in self.syllables)

    @property
    def exponent_sum(self) -> int:
        return sum(s.exp for s in self.syllables)

    def letters(self) -> Iterator[Syllable]:
        """Yield single-letter syllables ``g^{+-1}`` left to right."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield Syllable(g, step)

    def sort_key(self):
        return (self.letter_length, self.syllables)

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        return multiply(self, other)

    def inverse(self) -> "ReducedWord":
        return ReducedWord(
            self.ambient, tuple(Syllable(g, -e) for g, e in reversed(self.syllables))
        )

    __invert__ = inverse

    def __pow__(self, k: int) -> "ReducedWord":
        if k == 0:
            return ReducedWord(self.ambient)
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = multiply(out, base)
        return out

    # -- text and JSON -----------------------------------------------------

    def __str__(self):
        if not self.syllables:
            return "1"
        return "*".join(
            f"g{g}" if e == 1 else f"g{g}^{e}" for g, e in self.syllables
        )

    def to_json(self) -> list:
        return [[g, e] for g, e in self.syllables]

    @classmethod
    def from_json(cls, ambient: Rank, data: list) -> "ReducedWord":
        return reduce(ambient, [(int(g), int(e)) for g, e in data])


class PairWord(NamedTuple):
    """An element of a direct product of two free groups."""

    first: ReducedWord
    second: ReducedWord


def unit(ambient: Rank | int) -> ReducedWord:
    return ReducedWord(_as_rank(ambient))


def gen(ambient: Rank | int, i: int, exp: int = 1) -> ReducedWord:
    """The word ``g_i^exp`` (the unit when ``exp == 0``)."""
    ambient = _as_rank(ambient)
    if exp == 0:
        return ReducedWord(ambient)
    return ReducedWord(ambient, (Syllable(i, exp),))


def _push(stack: list[Syllable], g: int, e: int) -> None:
    if e == 0:
        return
    if stack and stack[-1].gen == g:
        merged = stack[-1].exp + e
        stack.pop()
        if merged:
            stack.append(Syllable(g, merged))
    else:
        stack.append(Syllable(g, e))


def reduce(ambient: Rank | int, letters: Iterable[tuple[int, int]]) -> ReducedWord:
    """Freely reduce a raw syllable sequence to its normal form.

    Zero exponents in the input are skipped.  Idempotent: feeding the
    syllables of a :class:`ReducedWord` back in returns an equal word.

    >>> str(reduce(2, [(1, 1), (1, -1)]))
    '1'
    """
    ambient = _as_rank(ambient)
    stack: list[Syllable] = []
    for g, e in letters:
        if not ambient.allows(g):
            raise ValueError(f"generator index {g} out of range for {ambient}")
        _push(stack, g, e)
    return ReducedWord(ambient, tuple(stack))


def multiply(w1: ReducedWord, w2: ReducedWord) -> ReducedWord:
    """Group product of two words over the same ambient rank."""
    if w1.ambient != w2.ambient:
        raise ValueError(f"ambient mismatch: {w1.ambient} vs {w2.ambient}")
    stack = list(w1.syllables)
    for g, e in w2.syllables:
        _push(stack, g, e)
    return ReducedWord(w1.ambient, tuple(stack))


def inverse(w: ReducedWord) -> ReducedWord:
    return w.inverse()


def _split_index(k: int, m: int) -> tuple[int, int]:
    # k = m*(i-1) + j with 1 <= j <= m
    i, j = divmod(k - 1, m)
    return i + 1, j + 1


def phi(n: int, m: int, z: ReducedWord) -> PairWord:
    """Map a word of rank ``n*m`` to a pair of words of ranks ``n`` and ``m``.

    The generator ``g_k`` with ``k = m*(i-1) + j`` goes to the pair
    ``(g_i, g_j)``; the map extends multiplicatively and each component is
    returned freely reduced.

    >>> z = reduce(4, [(1, 1), (2, -1), (4, 1), (3, -1)])
    >>> p, q = phi(2, 2, z)
    >>> p.is_unit and q.is_unit
    True
    """
    if z.ambient != Rank(n * m):
        raise ValueError(f"expected a word of rank {n * m}, got ambient {z.ambient}")
    left: list[Syllable] = []
    right: list[Syllable] = []
    for k, e in z.syllables:
        i, j = _split_index(k, m)
        _push(left, i, e)
        _push(right, j, e)
    return PairWord(
        ReducedWord(Rank(n), tuple(left)), ReducedWord(Rank(m), tuple(right))
    )


def phi_inf(n: int, z: ReducedWord) -> PairWord:
    """Infinite-rank analogue of :func:`phi`: ``g_{n*(i-1)+j} -> (g_i, g_j)``
    with the first component of infinite rank and the second of rank ``n``.
    """
    if not z.ambient.is_infinite:
        raise ValueError(f"expected an infinite-rank word, got ambient {z.ambient}")
    left: list[Syllable] = []
    right: list[Syllable] = []
    for k, e in z.syllables:
        i, j = _split_index(k, n)
        _push(left, i, e)
        _push(right, j, e)
    return PairWord(
        ReducedWord(INFINITE, tuple(left)), ReducedWord(Rank(n), tuple(right))
    )


def kernel_witness(n: int, m: int, i: int, l: int, j: int, k: int) -> ReducedWord:
    """The commutator-like word ``c_{m(i-1)+j} c_{m(i-1)+k}^-1 c_{m(l-1)+k}
    c_{m(l-1)+j}^-1`` of rank ``n*m``.

    Its image under ``phi(n, m, .)`` is the trivial pair for every choice of
    indices, and the word itself is nontrivial exactly when ``i != l`` and
    ``j != k``.
    """
    if not (1 <= i <= n and 1 <= l <= n):
        raise ValueError(f"row indices must lie in 1..{n}")
    if not (1 <= j <= m and 1 <= k <= m):
        raise ValueError(f"column indices must lie in 1..{m}")
    return reduce(
        n * m,
        [
            (m * (i - 1) + j, 1),
            (m * (i - 1) + k, -1),
            (m * (l - 1) + k, 1),
            (m * (l - 1) + j, -1),
        ],
    )


def lift_first(x: ReducedWord, m: int) -> tuple[ReducedWord, ReducedWord]:
    """Lift ``x`` of rank ``n`` through the first slot: return ``(y, z)`` with
    ``phi(n, m, z) = (x, y)`` and ``y`` a power of the first rank-``m``
    generator.

    Each letter ``g_i^e`` of ``x`` is sent to ``g_{m(i-1)+1}^e``, so the
    second slot collects only first-column generators.
    """
    if x.ambient.is_infinite:
        raise ValueError("lift requires a finite-rank word")
    n = x.ambient.n
    z = reduce(n * m, [(m * (g - 1) + 1, e) for g, e in x.syllables])
    y = gen(m, 1, x.exponent_sum)
    return y, z


def lift_second(y: ReducedWord, n: int) -> tuple[ReducedWord, ReducedWord]:
    """Lift ``y`` of rank ``m`` through the second slot: return ``(x, z)``
    with ``phi(n, m, z) = (x, y)`` and ``x`` a power of the first rank-``n``
    generator.  Letters ``g_j^e`` of ``y`` map to first-row generators
    ``g_j^e`` of rank ``n*m``.
    """
    if y.ambient.is_infinite:
        raise ValueError("lift requires a finite-rank word")
    m = y.ambient.n
    z = reduce(n * m, [(g, e) for g, e in y.syllables])
    x = gen(n, 1, y.exponent_sum)
    return x, z


def cancellation_witness_left(
    x: ReducedWord, y: ReducedWord
) -> tuple[ReducedWord, ReducedWord]:
    """Return ``(xp, z)`` with ``phi(z) * (xp, 1) = (x, y)`` componentwise.

    Built from :func:`lift_second`: if ``phi(z) = (x2, y)`` then
    ``xp = x2^-1 * x`` corrects the first slot.
    """
    n = x.ambient.n
    if n is None or y.ambient.n is None:
        raise ValueError("cancellation witnesses require finite ranks")
    x2, z = lift_second(y, n)
    xp = multiply(x2.inverse(), x)
    return xp, z


def cancellation_witness_right(
    x: ReducedWord, y: ReducedWord
) -> tuple[ReducedWord, ReducedWord]:
    """Return ``(yp, z)`` with ``phi(z) * (1, yp) = (x, y)`` componentwise."""
    m = y.ambient.n
    if m is None or x.ambient.n is None:
        raise ValueError("cancellation witnesses require finite ranks")
    y2, z = lift_first(x, m)
    yp = multiply(y2.inverse(), y)
    return yp, z


def cyclicity_witness(
    n: int, m: int, i: int, j: int, x: ReducedWord, y: ReducedWord
) -> ReducedWord:
    """A word ``z`` of rank ``n*m`` with ``phi(z) = (x, y * g_j^s)`` for some
    integer ``s``.

    Take ``(xp, zp)`` from :func:`cancellation_witness_left` and append, for
    each letter ``g_t^e`` of ``xp``, the generator ``g_{m(t-1)+j}^e``.  The
    appended part maps to ``(xp, g_j^s)``, so the first slot closes up to
    ``x`` exactly while the second slot moves inside the cyclic subgroup
    generated by ``g_j``.  The index ``i`` only names the coset space the
    caller acts on; the construction does not depend on it.
    """
    if not (1 <= i <= n and 1 <= j <= m):
        raise ValueError("subgroup indices out of range")
    if x.ambient != Rank(n) or y.ambient != Rank(m):
        raise ValueError("ambient mismatch with declared ranks")
    xp, zp = cancellation_witness_left(x, y)
    tail = reduce(n * m, [(m * (g - 1) + j, e) for g, e in xp.syllables])
    return multiply(zp, tail)


def enumerate_ball(
    ambient: Rank | int, radius: int, max_gen: int | None = None
) -> list[ReducedWord]:
    """All reduced words of letter length at most ``radius``, each exactly
    once, in length-graded deterministic order.

    For infinite ambient rank a ``max_gen`` cutoff is required; the ball then
    ranges over the first ``max_gen`` generators.
    """
    ambient = _as_rank(ambient)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if ambient.is_infinite:
        if max_gen is None:
            raise ValueError("enumerating an infinite-rank ball requires max_gen")
        span = max_gen
    else:
        span = ambient.n
    letters = [(g, e) for g in range(1, span + 1) for e in (1, -1)]
    out = [ReducedWord(ambient)]
    frontier = out[:]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            last = w.syllables[-1] if w.syllables else None
            for g, e in letters:
                # skip the letter cancelling the last one
                if last is not None and last.gen == g and (last.exp > 0) != (e > 0):
                    continue
                sylls = list(w.syllables)
                _push(sylls, g, e)
                nxt.append(ReducedWord(ambient, tuple(sylls)))
        out.extend(nxt)
        frontier = nxt
    return out
