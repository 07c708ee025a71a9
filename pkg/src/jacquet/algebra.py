"""Exact scalars and formal linear combinations.

Everything downstream works in Grothendieck groups, i.e. free modules over
the rationals with a distinguished basis of labels.  This module supplies
the two scalar types (half-integers for exponents, rationals for
coefficients), the free-module container ``FormalSum``, and exact inversion
of triangular matrices.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, Iterable, Iterator, Mapping, Sequence, TypeVar

# Coefficients are plain stdlib rationals: always reduced, denominator > 0.
Rational = Fraction


class SingularMatrixError(ValueError):
    """Raised when a triangular matrix has a zero diagonal entry."""


@dataclass(frozen=True, order=True, slots=True)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value so arithmetic is exact.

    >>> HalfInt(3) + HalfInt.whole(1)
    HalfInt(5)
    >>> str(HalfInt(3)), str(HalfInt(4))
    ('3/2', '2')
    """

    twice: int

    @staticmethod
    def whole(n: int) -> "HalfInt":
        return HalfInt(2 * n)

    @staticmethod
    def of(numerator: int, denominator: int = 1) -> "HalfInt":
        """Build numerator/denominator, which must lie in (1/2)Z."""
        twice, rem = divmod(2 * numerator, denominator)
        if rem:
            raise ValueError(f"{numerator}/{denominator} is not a half-integer")
        return HalfInt(twice)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def as_int(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice + _twice(other))

    def __radd__(self, other: int) -> "HalfInt":
        return HalfInt(self.twice + _twice(other))

    def __sub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice - _twice(other))

    def __rsub__(self, other: int) -> "HalfInt":
        return HalfInt(_twice(other) - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __mul__(self, n: int) -> "HalfInt":
        if not isinstance(n, int):
            return NotImplemented
        return HalfInt(self.twice * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def _twice(value: "HalfInt | int") -> int:
    if isinstance(value, HalfInt):
        return value.twice
    if isinstance(value, int):
        return 2 * value
    raise TypeError(f"cannot mix HalfInt with {type(value).__name__}")


def half(numerator: int) -> HalfInt:
    """Shorthand for numerator/2."""
    return HalfInt(numerator)


def parse_half(text: str) -> HalfInt:
    """Parse "3/2", "-1/2" or "2" into a HalfInt."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return HalfInt.of(int(num), int(den))
    return HalfInt.whole(int(text))


def label_key(label):
    """Total-order key for basis labels: defers to ``sort_key`` when present."""
    sk = getattr(label, "sort_key", None)
    if sk is not None:
        return sk()
    if isinstance(label, tuple):
        return tuple(label_key(part) for part in label)
    return label


L = TypeVar("L")
M = TypeVar("M")


class FormalSum(Generic[L]):
    """A finitely supported map label -> Rational, the free QQ-module on labels.

    Canonical form: zero coefficients are never stored, and iteration follows
    the label order given by :func:`label_key`.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[L, Rational] | None = None):
        clean: dict[L, Rational] = {}
        if terms:
            for label, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[label] = coeff
        self._terms = clean

    @staticmethod
    def zero() -> "FormalSum[L]":
        return FormalSum()

    @staticmethod
    def term(label: L, coeff: Rational | int = 1) -> "FormalSum[L]":
        return FormalSum({label: Fraction(coeff)})

    @staticmethod
    def from_terms(pairs: Iterable[tuple[L, Rational | int]]) -> "FormalSum[L]":
        acc: dict[L, Fraction] = {}
        for label, coeff in pairs:
            acc[label] = acc.get(label, Fraction(0)) + Fraction(coeff)
        return FormalSum(acc)

    def coeff(self, label: L) -> Rational:
        return self._terms.get(label, Fraction(0))

    def items(self) -> list[tuple[L, Rational]]:
        return sorted(self._terms.items(), key=lambda kv: label_key(kv[0]))

    def labels(self) -> list[L]:
        return sorted(self._terms, key=label_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[L]:
        return iter(self.labels())

    def __contains__(self, label: L) -> bool:
        return label in self._terms

    def __add__(self, other: "FormalSum[L]") -> "FormalSum[L]":
        if not isinstance(other, FormalSum):
            return NotImplemented
        acc = dict(self._terms)
        for label, coeff in other._terms.items():
            acc[label] = acc.get(label, Fraction(0)) + coeff
        return FormalSum(acc)

    def __sub__(self, other: "FormalSum[L]") -> "FormalSum[L]":
        return self + (-other)

    def __neg__(self) -> "FormalSum[L]":
        return FormalSum({label: -c for label, c in self._terms.items()})

    def scale(self, coeff: Rational | int) -> "FormalSum[L]":
        coeff = Fraction(coeff)
        if not coeff:
            return FormalSum()
        return FormalSum({label: coeff * c for label, c in self._terms.items()})

    def __mul__(self, coeff: Rational | int) -> "FormalSum[L]":
        return self.scale(coeff)

    __rmul__ = __mul__

    def bind(self, f: Callable[[L], "FormalSum[M]"]) -> "FormalSum[M]":
        """Linear extension: apply ``f`` to each basis label, keep coefficients."""
        acc: dict[M, Fraction] = {}
        for label, coeff in self._terms.items():
            for out_label, out_coeff in f(label)._terms.items():
                acc[out_label] = acc.get(out_label, Fraction(0)) + coeff * out_coeff
        return FormalSum(acc)

    def map_labels(self, f: Callable[[L], M]) -> "FormalSum[M]":
        return self.bind(lambda lbl: FormalSum.term(f(lbl)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        body = " + ".join(f"{c}*{label!r}" for label, c in self.items())
        return f"FormalSum({body})"


Matrix = list[list[Rational]]


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[Rational]], b: Sequence[Sequence[Rational]]) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            if a[i][t]:
                for j in range(m):
                    if b[t][j]:
                        out[i][j] += a[i][t] * b[t][j]
    return out


def invert_triangular(matrix: Sequence[Sequence[Rational | int]],
                      order: Sequence[int] | None = None) -> Matrix:
    """Exact inverse of a matrix that is triangular under ``order``.

    ``order`` permutes rows and columns simultaneously before inversion (and
    the result is mapped back), so callers may keep their own basis order.
    The matrix must be lower or upper triangular after reordering; the
    inverse is computed by substitution, which keeps denominators to divisors
    of the diagonal product.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    perm = list(order) if order is not None else list(range(n))
    if sorted(perm) != list(range(n)):
        raise ValueError("order is not a permutation")
    m = [[Fraction(matrix[perm[i]][perm[j]]) for j in range(n)] for i in range(n)]

    lower = all(not m[i][j] for i in range(n) for j in range(i + 1, n))
    upper = all(not m[i][j] for i in range(n) for j in range(i))
    if not (lower or upper):
        raise ValueError("matrix is not triangular in the supplied order")
    for i in range(n):
        if not m[i][i]:
            raise SingularMatrixError(f"zero diagonal entry at position {i}")

    if upper and not lower:
        inv_t = _invert_lower([[m[j][i] for j in range(n)] for i in range(n)])
        inv = [[inv_t[j][i] for j in range(n)] for i in range(n)]
    else:
        inv = _invert_lower(m)

    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = inv[i][j]
    return out


def _invert_lower(m: Matrix) -> Matrix:
    n = len(m)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1, 1) / m[j][j]
        for i in range(j + 1, n):
            s = Fraction(0)
            for k in range(j, i):
                if m[i][k] and inv[k][j]:
                    s += m[i][k] * inv[k][j]
            if s:
                inv[i][j] = -s / m[i][i]
    return inv
