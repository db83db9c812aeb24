"""Exact linear algebra over free-group bases.

Elements are finitely supported linear combinations of reduced words (or
pairs / triples of words for tensors) with either exact Gaussian-rational or
approximate complex coefficients.  The two coefficient modes never mix
inside one element or one operation; converting is always explicit via
``to_approx``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .scalars import QI, ZERO
from .words import INFINITE, Rank, ReducedWord, multiply, phi, phi_inf

__all__ = [
    "DEFAULT_TOL",
    "AlgebraElement",
    "TensorElement",
    "TripleTensorElement",
    "tensor",
    "varphi_alg",
    "varphi_inf_alg",
    "standard_delta",
    "standard_delta_compat_check",
    "apply_tensor_right",
]

DEFAULT_TOL = 1e-9


def _exact_scalar(c) -> QI:
    if isinstance(c, QI):
        return c
    if isinstance(c, (int, Fraction)):
        return QI(c)
    raise TypeError(
        f"exact elements take QI, int or Fraction coefficients, got {type(c).__name__}"
    )


def _approx_scalar(c) -> complex:
    if isinstance(c, (complex, float, int)):
        return complex(c)
    if isinstance(c, (QI, Fraction)):
        return complex(c)
    raise TypeError(f"cannot use {type(c).__name__} as an approximate coefficient")


class _Linear:
    """Shared machinery for finitely supported linear combinations.

    Subclasses fix the label type (a word, or a tuple of words), validate it
    against their ambient ranks, and provide printing hooks.
    """

    __slots__ = ("terms", "exact", "tol")

    def __init__(self, terms=(), exact: bool = True, tol: float = DEFAULT_TOL):
        coerce = _exact_scalar if exact else _approx_scalar
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, c in items:
            label = self._check_label(label)
            c = coerce(c)
            if label in acc:
                acc[label] = acc[label] + c
            else:
                acc[label] = c
        if exact:
            cleaned = {k: v for k, v in acc.items() if v}
        else:
            cleaned = {k: v for k, v in acc.items() if abs(v) > tol}
        self.terms = cleaned
        self.exact = exact
        self.tol = tol

    # subclass hooks
    def _check_label(self, label):
        raise NotImplementedError

    def _make(self, terms):
        raise NotImplementedError

    def _space(self):
        raise NotImplementedError

    def _label_str(self, label) -> str:
        raise NotImplementedError

    @staticmethod
    def _label_key(label):
        raise NotImplementedError

    # common surface
    def _require_compatible(self, other):
        if type(other) is not type(self) or self._space() != other._space():
            raise ValueError("elements live in different spaces")
        if self.exact != other.exact:
            raise ValueError("cannot mix exact and approximate elements")

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, label):
        label = self._check_label(label)
        zero = ZERO if self.exact else 0j
        return self.terms.get(label, zero)

    def __add__(self, other):
        self._require_compatible(other)
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged[k] + v if k in merged else v
        return self._make(merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._make({k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = _exact_scalar(c) if self.exact else _approx_scalar(c)
        return self._make({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self._space() != other._space() or self.exact != other.exact:
            return False
        if self.exact:
            return self.terms == other.terms
        return self.allclose(other, max(self.tol, other.tol))

    __hash__ = None

    def allclose(self, other, tol: float) -> bool:
        if self._space() != other._space():
            return False
        for k in self.terms.keys() | other.terms.keys():
            a = complex(self.terms.get(k, 0))
            b = complex(other.terms.get(k, 0))
            if abs(a - b) > tol:
                return False
        return True

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self._label_key(kv[0]))

    def _linear_str(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for label, c in self._sorted_terms():
            body = self._label_str(label)
            parts.append(_format_term(c, body, first=not parts))
        return "".join(parts)


def _format_term(c, body: str, first: bool) -> str:
    """Render one term of a linear combination in the element grammar."""
    if isinstance(c, QI):
        if not c.im:
            re = c.re
            if first:
                if re == 1:
                    return body
                return f"{re}*{body}"
            mag = abs(re)
            sep = " - " if re < 0 else " + "
            return sep + (body if mag == 1 else f"{mag}*{body}")
        coeff = str(c)
    else:
        sign = "+" if c.imag >= 0 else "-"
        coeff = f"({c.real!r}{sign}{abs(c.imag)!r}i)"
    piece = f"{coeff}*{body}"
    return piece if first else " + " + piece


class AlgebraElement(_Linear):
    """A finitely supported linear combination of reduced words of one rank,
    with convolution product and the star involution of the group algebra.
    """

    __slots__ = ("ambient",)

    def __init__(self, ambient: Rank | int, terms=(), exact: bool = True, tol: float = DEFAULT_TOL):
        self.ambient = ambient if isinstance(ambient, Rank) else Rank(ambient)
        super().__init__(terms, exact, tol)

    @classmethod
    def zero(cls, ambient, exact: bool = True, tol: float = DEFAULT_TOL):
        return cls(ambient, (), exact, tol)

    @classmethod
    def unit(cls, ambient, exact: bool = True):
        amb = ambient if isinstance(ambient, Rank) else Rank(ambient)
        return cls(amb, {ReducedWord(amb): QI(1) if exact else 1.0}, exact)

    @classmethod
    def from_word(cls, w: ReducedWord, coeff=1, exact: bool = True):
        return cls(w.ambient, {w: coeff}, exact)

    def _check_label(self, label):
        if not isinstance(label, ReducedWord) or label.ambient != self.ambient:
            raise ValueError(f"term {label!r} does not live in {self.ambient}")
        return label

    def _make(self, terms):
        return AlgebraElement(self.ambient, terms, self.exact, self.tol)

    def _space(self):
        return self.ambient

    def _label_str(self, label):
        return str(label)

    @staticmethod
    def _label_key(label):
        return label.sort_key()

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._require_compatible(other)
            acc: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = multiply(w1, w2)
                    c = c1 * c2
                    acc[w] = acc[w] + c if w in acc else c
            return self._make(acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "AlgebraElement":
        """Antilinear antimultiplicative involution: conjugate coefficients,
        invert words."""
        return self._make({w.inverse(): c.conjugate() for w, c in self.terms.items()})

    def to_approx(self, tol: float = DEFAULT_TOL) -> "AlgebraElement":
        if not self.exact:
            return self
        return AlgebraElement(
            self.ambient, {w: complex(c) for w, c in self.terms.items()}, False, tol
        )

    def __str__(self):
        return f"{self.ambient}: {self._linear_str()}"

    def to_json(self) -> dict:
        out = []
        for w, c in self._sorted_terms():
            entry = {"word": w.to_json()}
            if self.exact:
                entry.update(c.to_json())
            else:
                entry.update({"re": c.real, "im": c.imag})
            out.append(entry)
        return {"rank": self.ambient.to_json(), "terms": out}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        ambient = Rank.from_json(data["rank"])
        terms = {}
        for entry in data["terms"]:
            w = ReducedWord.from_json(ambient, entry["word"])
            re, im = entry["re"], entry["im"]
            if isinstance(re, str):
                c = QI(Fraction(re), Fraction(im))
            else:
                c = complex(re, im)
            terms[w] = terms.get(w, 0) + c if w in terms else c
        exact = all(isinstance(v, QI) for v in terms.values())
        return cls(ambient, terms, exact)


class TensorElement(_Linear):
    """A finitely supported combination of word pairs: the algebraic tensor
    product of two group algebras, with slotwise product and involution."""

    __slots__ = ("ambients",)

    def __init__(self, ambients, terms=(), exact: bool = True, tol: float = DEFAULT_TOL):
        a, b = ambients
        self.ambients = (
            a if isinstance(a, Rank) else Rank(a),
            b if isinstance(b, Rank) else Rank(b),
        )
        super().__init__(terms, exact, tol)

    @classmethod
    def zero(cls, ambients, exact: bool = True, tol: float = DEFAULT_TOL):
        return cls(ambients, (), exact, tol)

    @classmethod
    def from_pair(cls, w1: ReducedWord, w2: ReducedWord, coeff=1, exact: bool = True):
        return cls((w1.ambient, w2.ambient), {(w1, w2): coeff}, exact)

    def _check_label(self, label):
        w1, w2 = label
        if w1.ambient != self.ambients[0] or w2.ambient != self.ambients[1]:
            raise ValueError(f"tensor term {label!r} does not match {self.ambients}")
        return (w1, w2)

    def _make(self, terms):
        return TensorElement(self.ambients, terms, self.exact, self.tol)

    def _space(self):
        return self.ambients

    def _label_str(self, label):
        return f"{label[0]}(x){label[1]}"

    @staticmethod
    def _label_key(label):
        return (label[0].sort_key(), label[1].sort_key())

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._require_compatible(other)
            acc: dict = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    key = (multiply(a1, a2), multiply(b1, b2))
                    c = c1 * c2
                    acc[key] = acc[key] + c if key in acc else c
            return self._make(acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "TensorElement":
        return self._make(
            {
                (w1.inverse(), w2.inverse()): c.conjugate()
                for (w1, w2), c in self.terms.items()
            }
        )

    def flip(self) -> "TensorElement":
        """Swap the two tensor slots."""
        return TensorElement(
            (self.ambients[1], self.ambients[0]),
            {(w2, w1): c for (w1, w2), c in self.terms.items()},
            self.exact,
            self.tol,
        )

    def to_approx(self, tol: float = DEFAULT_TOL) -> "TensorElement":
        if not self.exact:
            return self
        return TensorElement(
            self.ambients, {k: complex(c) for k, c in self.terms.items()}, False, tol
        )

    def __str__(self):
        return f"{self.ambients[0]}(x){self.ambients[1]}: {self._linear_str()}"

    def to_json(self) -> dict:
        out = []
        for (w1, w2), c in self._sorted_terms():
            entry = {"words": [w1.to_json(), w2.to_json()]}
            if self.exact:
                entry.update(c.to_json())
            else:
                entry.update({"re": c.real, "im": c.imag})
            out.append(entry)
        return {
            "ranks": [self.ambients[0].to_json(), self.ambients[1].to_json()],
            "terms": out,
        }


class TripleTensorElement(_Linear):
    """Three-fold analogue of :class:`TensorElement`; target of the iterated
    coproduct and of the mixed coassociativity checks."""

    __slots__ = ("ambients",)

    def __init__(self, ambients, terms=(), exact: bool = True, tol: float = DEFAULT_TOL):
        a, b, c = ambients
        self.ambients = tuple(r if isinstance(r, Rank) else Rank(r) for r in (a, b, c))
        super().__init__(terms, exact, tol)

    @classmethod
    def from_triple(cls, w1, w2, w3, coeff=1, exact: bool = True):
        return cls((w1.ambient, w2.ambient, w3.ambient), {(w1, w2, w3): coeff}, exact)

    def _check_label(self, label):
        if any(w.ambient != r for w, r in zip(label, self.ambients)):
            raise ValueError(f"triple term {label!r} does not match {self.ambients}")
        return tuple(label)

    def _make(self, terms):
        return TripleTensorElement(self.ambients, terms, self.exact, self.tol)

    def _space(self):
        return self.ambients

    def _label_str(self, label):
        return "(x)".join(str(w) for w in label)

    @staticmethod
    def _label_key(label):
        return tuple(w.sort_key() for w in label)

    def __str__(self):
        header = "(x)".join(str(r) for r in self.ambients)
        return f"{header}: {self._linear_str()}"


def tensor(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    """Bilinear outer product of two algebra elements."""
    if a.exact != b.exact:
        raise ValueError("cannot tensor exact with approximate elements")
    acc: dict = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            acc[(w1, w2)] = c1 * c2
    return TensorElement(
        (a.ambient, b.ambient), acc, a.exact, max(a.tol, b.tol)
    )


def varphi_alg(n: int, m: int, a: AlgebraElement) -> TensorElement:
    """Linear extension of the word map ``phi(n, m, .)``.

    A unital star homomorphism from the rank-``n*m`` group algebra into the
    tensor product of the rank-``n`` and rank-``m`` algebras.  Distinct words
    may collide in the image, so coefficients accumulate.
    """
    if a.ambient != Rank(n * m):
        raise ValueError(f"element lives in {a.ambient}, expected F{n * m}")
    acc: dict = {}
    for w, c in a.terms.items():
        key = tuple(phi(n, m, w))
        acc[key] = acc[key] + c if key in acc else c
    return TensorElement((Rank(n), Rank(m)), acc, a.exact, a.tol)


def varphi_inf_alg(n: int, a: AlgebraElement) -> TensorElement:
    """Linear extension of ``phi_inf(n, .)`` on infinite-rank elements."""
    if not a.ambient.is_infinite:
        raise ValueError(f"element lives in {a.ambient}, expected Finf")
    acc: dict = {}
    for w, c in a.terms.items():
        key = tuple(phi_inf(n, w))
        acc[key] = acc[key] + c if key in acc else c
    return TensorElement((INFINITE, Rank(n)), acc, a.exact, a.tol)


def standard_delta(a: AlgebraElement) -> TensorElement:
    """The diagonal comultiplication ``w -> w (x) w`` extended linearly."""
    return TensorElement(
        (a.ambient, a.ambient),
        {(w, w): c for w, c in a.terms.items()},
        a.exact,
        a.tol,
    )


def _acc(d: dict, key, c) -> None:
    d[key] = d[key] + c if key in d else c


def standard_delta_compat_check(n: int, m: int, a: AlgebraElement) -> bool:
    """Check that splitting then diagonally doubling agrees with diagonally
    doubling then splitting both slots and flipping the middle pair.

    Both routes land in the four-fold tensor over ranks (n, n, m, m); the
    comparison is exact.
    """
    lhs: dict = {}
    for (w1, w2), c in varphi_alg(n, m, a).terms.items():
        _acc(lhs, (w1, w1, w2, w2), c)
    rhs: dict = {}
    for (u, v), c in standard_delta(a).terms.items():
        pu, qu = phi(n, m, u)
        pv, qv = phi(n, m, v)
        _acc(rhs, (pu, pv, qu, qv), c)
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs == rhs


def apply_tensor_right(t: TensorElement, b: AlgebraElement, slot: str) -> TensorElement:
    """Multiply ``b`` from the right into one tensor slot of ``t``.

    ``slot`` is ``"left"`` or ``"right"``; the other slot is multiplied by
    the unit.  This is the elementary-tensor factorization pattern used by
    the cancellation-law checks.
    """
    if slot not in ("left", "right"):
        raise ValueError("slot must be 'left' or 'right'")
    idx = 0 if slot == "left" else 1
    if b.ambient != t.ambients[idx]:
        raise ValueError(f"{b.ambient} does not match tensor slot {t.ambients[idx]}")
    if b.exact != t.exact:
        raise ValueError("cannot mix exact and approximate elements")
    acc: dict = {}
    for (w1, w2), c in t.terms.items():
        for u, d in b.terms.items():
            key = (multiply(w1, u), w2) if idx == 0 else (w1, multiply(w2, u))
            _acc(acc, key, c * d)
    return TensorElement(t.ambients, acc, t.exact, max(t.tol, b.tol))
