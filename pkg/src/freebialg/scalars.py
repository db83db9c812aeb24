"""Exact Gaussian-rational scalars.

All identity checking in this package runs over Q(i): complex numbers whose
real and imaginary parts are `fractions.Fraction`s, so equality of algebra
elements is decidable and exact.  Floating point enters only through the
explicitly approximate element mode and the spectral routines.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["QI", "ZERO", "ONE", "I"]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise TypeError(
        f"exact scalar parts must be int, Fraction or str, got {type(v).__name__}"
    )


class QI:
    """A complex number with rational real and imaginary parts.

    Instances are immutable, hashable, and support the ring operations plus
    conjugation and integer powers.  Floats are rejected on construction:
    converting an exact value to floating point is always explicit
    (``complex(q)``).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("QI values are immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, QI):
            return other
        if isinstance(other, (int, Fraction)):
            return QI(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QI(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QI(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QI(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            # inverse of a unit-modulus scalar is its conjugate
            if self.re * self.re + self.im * self.im != 1:
                raise ValueError("negative powers require unit modulus")
            return self.conjugate() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def __repr__(self):
        return f"QI({self.re!s}, {self.im!s})"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, data: dict) -> "QI":
        return cls(Fraction(data["re"]), Fraction(data["im"]))


ZERO = QI(0)
ONE = QI(1)
I = QI(0, 1)
