"""Representation-level machinery: cyclic-subgroup indicator functions,
coset permutation actions, regular representations, the pulled-back tensor
action, and the claim probes built on them.

Everything here is basis combinatorics over finitely supported vectors with
exact coefficients; floating point appears only in the Gram-matrix
eigenvalue routine.  Probes report disagreements instead of asserting the
claimed identities, so a discrepancy is data rather than a test failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

import numpy as np

from .scalars import QI, ZERO
from .words import (
    Rank,
    ReducedWord,
    enumerate_ball,
    gen,
    multiply,
    phi,
    unit,
)
from .words import cyclicity_witness as _cyclicity_witness

__all__ = [
    "PDFunction",
    "Coset",
    "CosetBasis",
    "GroupBasis",
    "PairGroupBasis",
    "CosetPairBasis",
    "SuppVector",
    "f_eval",
    "f_pullback_eval",
    "claim_probe_pd",
    "gram_psd",
    "coset_normal_form",
    "L_action",
    "gns_coeff_check",
    "fixed_vector_dim",
    "cyclicity_check",
    "lambda_action",
    "tensor_rep_action",
    "orbit_bfs",
    "U_map",
    "U_apply",
    "intertwine_check",
]


@dataclass(frozen=True)
class PDFunction:
    """Indicator of the cyclic subgroup generated by ``g_i`` inside the
    rank-``n`` free group; positive definite, value 1 on powers of ``g_i``."""

    n: int
    i: int

    def __post_init__(self):
        if not 1 <= self.i <= self.n:
            raise ValueError(f"generator index {self.i} out of range for F{self.n}")

    def __call__(self, w: ReducedWord) -> int:
        return f_eval(self, w)


def f_eval(f: PDFunction, w: ReducedWord) -> int:
    if w.ambient != Rank(f.n):
        raise ValueError(f"word lives in {w.ambient}, expected F{f.n}")
    if w.is_unit:
        return 1
    if len(w.syllables) == 1 and w.syllables[0].gen == f.i:
        return 1
    return 0


def f_pullback_eval(n: int, i: int, m: int, j: int, z: ReducedWord) -> int:
    """Pull the product indicator back through the rank splitting: evaluate
    the pair image of ``z`` against the indicators on each factor."""
    p, q = phi(n, m, z)
    return f_eval(PDFunction(n, i), p) * f_eval(PDFunction(m, j), q)


def claim_probe_pd(
    n: int, m: int, i: int, j: int, radius: int
) -> list[tuple[ReducedWord, int, int]]:
    """Scan the radius ball of the rank-``n*m`` group and compare the pulled
    back indicator with the direct indicator of ``g_{m(i-1)+j}``.

    Returns every disagreement as ``(word, pullback, direct)``; an empty list
    means the two sides agree on the whole ball.  Any word outside the cyclic
    subgroup whose pair image lands in the product of the two cyclic
    subgroups gives pullback 1 and direct 0; the shortest such words have
    length 3, and the nontrivial kernel words of length 4 are among them.
    """
    direct = PDFunction(n * m, m * (i - 1) + j)
    out = []
    for z in enumerate_ball(n * m, radius):
        pb = f_pullback_eval(n, i, m, j, z)
        dv = f_eval(direct, z)
        if pb != dv:
            out.append((z, pb, dv))
    return out


def gram_psd(
    f: Callable[[ReducedWord], float],
    sample: Iterable[ReducedWord],
    tol: float = 1e-9,
) -> tuple[float, bool]:
    """Minimum eigenvalue of the Gram matrix ``[f(s^-1 t)]`` over the sample,
    and whether it clears ``-tol``.  The evaluator must be real symmetric
    (``f(w^-1) = f(w)``), which holds for the indicators used here.
    """
    words = list(sample)
    if not words:
        raise ValueError("sample must be nonempty")
    size = len(words)
    mat = np.empty((size, size), dtype=float)
    for a, s in enumerate(words):
        s_inv = s.inverse()
        for b, t in enumerate(words):
            mat[a, b] = float(f(multiply(s_inv, t)))
    eigs = np.linalg.eigvalsh(mat)
    min_eig = float(eigs[0])
    return min_eig, min_eig >= -tol


@dataclass(frozen=True)
class Coset:
    """A left coset of the cyclic subgroup ``<g_i>`` in canonical form: the
    representative never ends in a ``g_i`` syllable."""

    n: int
    i: int
    rep: ReducedWord

    def __post_init__(self):
        if self.rep.syllables and self.rep.syllables[-1].gen == self.i:
            raise ValueError("coset representative not in canonical form")

    def __str__(self):
        return f"[{self.rep}]"


def coset_normal_form(n: int, i: int, w: ReducedWord) -> Coset:
    """Strip the maximal trailing power of ``g_i``; two words land on equal
    cosets exactly when they differ by a right factor in ``<g_i>``."""
    if w.ambient != Rank(n):
        raise ValueError(f"word lives in {w.ambient}, expected F{n}")
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for F{n}")
    sylls = w.syllables
    if sylls and sylls[-1].gen == i:
        sylls = sylls[:-1]
    return Coset(n, i, ReducedWord(w.ambient, sylls))


# -- basis descriptors and vectors ------------------------------------------


@dataclass(frozen=True)
class CosetBasis:
    n: int
    i: int

    def check(self, label):
        if not isinstance(label, Coset) or (label.n, label.i) != (self.n, self.i):
            raise ValueError(f"label {label!r} does not belong to {self}")
        return label


@dataclass(frozen=True)
class GroupBasis:
    n: int

    def check(self, label):
        if not isinstance(label, ReducedWord) or label.ambient != Rank(self.n):
            raise ValueError(f"label {label!r} does not belong to {self}")
        return label


@dataclass(frozen=True)
class PairGroupBasis:
    n: int
    m: int

    def check(self, label):
        g, h = label
        if g.ambient != Rank(self.n) or h.ambient != Rank(self.m):
            raise ValueError(f"label {label!r} does not belong to {self}")
        return (g, h)


@dataclass(frozen=True)
class CosetPairBasis:
    left: CosetBasis
    right: CosetBasis

    def check(self, label):
        a, b = label
        return (self.left.check(a), self.right.check(b))


class SuppVector:
    """A finitely supported vector over a labeled basis with exact
    coefficients; permutation actions on these never truncate."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, c in items:
            label = basis.check(label)
            if not isinstance(c, QI):
                c = QI(c)
            acc[label] = acc[label] + c if label in acc else c
        self.basis = basis
        self.terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def basis_vector(cls, basis, label) -> "SuppVector":
        return cls(basis, {label: QI(1)})

    def map_labels(self, fn) -> "SuppVector":
        """Push the vector through a basis-label map, merging collisions."""
        return SuppVector(self.basis, ((fn(k), v) for k, v in self.terms.items()))

    def __add__(self, other: "SuppVector") -> "SuppVector":
        if self.basis != other.basis:
            raise ValueError("vectors live over different bases")
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged[k] + v if k in merged else v
        return SuppVector(self.basis, merged)

    def __sub__(self, other):
        return self + other.scale(QI(-1))

    def scale(self, c) -> "SuppVector":
        return SuppVector(self.basis, {k: c * v for k, v in self.terms.items()})

    def inner(self, other: "SuppVector") -> QI:
        """Standard inner product, conjugate linear in the first argument."""
        if self.basis != other.basis:
            raise ValueError("vectors live over different bases")
        total = ZERO
        small, big = self.terms, other.terms
        for k, v in small.items():
            w = big.get(k)
            if w is not None:
                total = total + v.conjugate() * w
        return total

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SuppVector):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e{lbl}" for lbl, c in self.terms.items())


# -- actions -----------------------------------------------------------------


def L_action(n: int, i: int, x: ReducedWord, v: SuppVector) -> SuppVector:
    """Left translation on coset basis vectors: ``e_[w] -> e_[x w]``."""
    basis = v.basis
    if basis != CosetBasis(n, i):
        raise ValueError(f"vector is not over the coset basis of F{n}/<g{i}>")
    if x.ambient != Rank(n):
        raise ValueError(f"acting word lives in {x.ambient}, expected F{n}")
    return SuppVector(
        basis,
        (
            (coset_normal_form(n, i, multiply(x, c.rep)), coeff)
            for c, coeff in v.terms.items()
        ),
    )


def gns_coeff_check(n: int, i: int, w: ReducedWord) -> bool:
    """Compare the diagonal matrix coefficient of the coset action at the
    base point with the subgroup indicator; the two are computed along
    independent routes (coset normal form vs. syllable pattern)."""
    basis = CosetBasis(n, i)
    e0 = SuppVector.basis_vector(basis, coset_normal_form(n, i, unit(n)))
    moved = L_action(n, i, w, e0)
    coeff = e0.inner(moved)
    return coeff == QI(f_eval(PDFunction(n, i), w))


def fixed_vector_dim(n: int, i: int, j: int, radius: int) -> int:
    """Dimension of the space of vectors supported on cosets with
    representative length at most ``radius`` that the translation by ``g_j``
    fixes.

    A fixed vector must be constant along ``g_j``-orbits and vanish on any
    orbit that escapes the support window, so the dimension equals the number
    of ``g_j``-cycles lying entirely inside the window.  For ``j == i`` the
    base coset is the unique finite orbit; for ``j != i`` every orbit is
    infinite.
    """
    window = {coset_normal_form(n, i, w) for w in enumerate_ball(n, radius)}
    gj = gen(n, j)

    def step(c: Coset) -> Coset:
        return coset_normal_form(n, i, multiply(gj, c.rep))

    visited: set[Coset] = set()
    cycles = 0
    for start in sorted(window, key=lambda c: c.rep.sort_key()):
        if start in visited:
            continue
        path = [start]
        cur = step(start)
        while cur in window and cur not in visited and cur != start:
            path.append(cur)
            cur = step(cur)
        visited.update(path)
        if cur == start:
            cycles += 1
    return cycles


def cyclicity_check(
    n: int, m: int, i: int, j: int, x: ReducedWord, y: ReducedWord
) -> bool:
    """Act with the witness word on the base tensor vector of the two coset
    spaces and compare against the target elementary tensor vector."""
    basis = CosetPairBasis(CosetBasis(n, i), CosetBasis(m, j))
    base = (
        coset_normal_form(n, i, unit(n)),
        coset_normal_form(m, j, unit(m)),
    )
    z = _cyclicity_witness(n, m, i, j, x, y)
    p, q = phi(n, m, z)
    moved = SuppVector.basis_vector(basis, base).map_labels(
        lambda lbl: (
            coset_normal_form(n, i, multiply(p, lbl[0].rep)),
            coset_normal_form(m, j, multiply(q, lbl[1].rep)),
        )
    )
    target = SuppVector.basis_vector(
        basis,
        (coset_normal_form(n, i, x), coset_normal_form(m, j, y)),
    )
    return moved == target


def lambda_action(n: int, x: ReducedWord, v: SuppVector) -> SuppVector:
    """Left regular representation on group basis vectors."""
    basis = v.basis
    if basis != GroupBasis(n):
        raise ValueError(f"vector is not over the group basis of F{n}")
    if x.ambient != Rank(n):
        raise ValueError(f"acting word lives in {x.ambient}, expected F{n}")
    return SuppVector(basis, ((multiply(x, g), c) for g, c in v.terms.items()))


def tensor_rep_action(n: int, m: int, z: ReducedWord, v: SuppVector) -> SuppVector:
    """Pulled-back action of a rank-``n*m`` word on the pair-group basis:
    the pair image translates each factor."""
    basis = v.basis
    if basis != PairGroupBasis(n, m):
        raise ValueError(f"vector is not over the pair basis of F{n} x F{m}")
    p, q = phi(n, m, z)
    return SuppVector(
        basis,
        (((multiply(p, g), multiply(q, h)), c) for (g, h), c in v.terms.items()),
    )


def orbit_bfs(
    n: int, m: int, start: tuple[ReducedWord, ReducedWord], radius: int
) -> set[tuple[ReducedWord, ReducedWord]]:
    """All pairs reachable from ``start`` by at most ``radius`` left
    multiplications with pair images of rank-``n*m`` generators or their
    inverses."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    g0, h0 = start
    if g0.ambient != Rank(n) or h0.ambient != Rank(m):
        raise ValueError("start pair does not match the declared ranks")
    moves = []
    for k in range(1, n * m + 1):
        for e in (1, -1):
            moves.append(phi(n, m, gen(n * m, k, e)))
    seen = {start}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for g, h in frontier:
            for p, q in moves:
                pair = (multiply(p, g), multiply(q, h))
                if pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        frontier = nxt
    return seen


def U_map(
    n: int, m: int, x: ReducedWord, g: ReducedWord
) -> tuple[ReducedWord, ReducedWord]:
    """Basis-level intertwiner candidate: send the rank-``n*m`` basis word
    ``g`` with pair image ``(p, q)`` to the pair label ``(p x, q)``.

    The map identifies basis words with equal pair images, so it is not
    injective once the splitting has a kernel.
    """
    p, q = phi(n, m, g)
    return multiply(p, x), q


def U_apply(n: int, m: int, x: ReducedWord, v: SuppVector) -> SuppVector:
    """Linear extension of :func:`U_map` from the rank-``n*m`` group basis
    to the pair-group basis."""
    if v.basis != GroupBasis(n * m):
        raise ValueError(f"vector is not over the group basis of F{n * m}")
    target = PairGroupBasis(n, m)
    return SuppVector(target, ((U_map(n, m, x, g), c) for g, c in v.terms.items()))


def intertwine_check(
    n: int, m: int, x: ReducedWord, h: ReducedWord, g: ReducedWord
) -> bool:
    """Check the intertwining relation on one basis vector: mapping after
    translating by ``h`` agrees with acting by ``h`` after mapping."""
    basis = PairGroupBasis(n, m)
    direct = SuppVector.basis_vector(basis, U_map(n, m, x, multiply(h, g)))
    routed = tensor_rep_action(
        n, m, h, SuppVector.basis_vector(basis, U_map(n, m, x, g))
    )
    return direct == routed
