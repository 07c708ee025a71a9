"""Segment combinatorics on the general linear side.

Irreducible representations of GL with supercuspidal support in a single
twist class of a fixed cuspidal rho are indexed by multisegments in a normal
form: segments listed with weakly increasing left endpoints, ties broken by
the right endpoint.  We work throughout in the basis of induced products of
segment representations ("standard" GL modules), where the Jacquet functor
acts by peeling segment heads and the comultiplication splits each segment
independently.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import FormalSum, HalfInt


class SelfDualType(enum.Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    NONE = "none"


@dataclass(frozen=True, slots=True)
class RhoKey:
    """Stand-in for an irreducible unitary supercuspidal of GL_dim.

    Only the isomorphism-class id, the dimension of the associated Galois
    representation, and its self-duality type participate in any algorithm
    here, so the representation itself is never materialised.
    """

    id: str
    dim: int = 1
    self_dual: SelfDualType = SelfDualType.ORTHOGONAL

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("rho dimension must be >= 1")

    def sort_key(self):
        return (self.id, self.dim, self.self_dual.value)

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True, slots=True)
class Segment:
    """The set {x, x-1, ..., y} of half-integers, tagged by a cuspidal key.

    Labels the essentially discrete series rho|.|^center St(rho, length).
    """

    rho: RhoKey
    x: HalfInt
    y: HalfInt

    def __post_init__(self):
        if (self.x.twice - self.y.twice) % 2 != 0:
            raise ValueError(f"segment endpoints differ by a non-integer: {self}")
        if self.x < self.y:
            raise ValueError(f"empty segment [{self.x},{self.y}]")

    @property
    def length(self) -> int:
        return (self.x.twice - self.y.twice) // 2 + 1

    @property
    def center(self) -> HalfInt:
        return HalfInt((self.x.twice + self.y.twice) // 2)

    @property
    def gl_dim(self) -> int:
        return self.rho.dim * self.length

    def dual(self) -> "Segment":
        return Segment(self.rho, -self.y, -self.x)

    def exponents(self) -> list[HalfInt]:
        """Head-to-tail exponent run x, x-1, ..., y."""
        return [HalfInt(t) for t in range(self.x.twice, self.y.twice - 1, -2)]

    def behead(self) -> "Segment | None":
        """Drop the leading exponent; None when the segment is a single point."""
        if self.x == self.y:
            return None
        return Segment(self.rho, self.x - 1, self.y)

    def drop_tail(self) -> "Segment | None":
        if self.x == self.y:
            return None
        return Segment(self.rho, self.x, self.y + 1)

    def sort_key(self):
        return (self.rho.sort_key(), self.x.twice, self.y.twice)

    def __str__(self) -> str:
        return f"{self.rho.id}:[{self.x},{self.y}]"


def segment_from_run(rho: RhoKey, head: HalfInt, count: int) -> Segment | None:
    """Segment with exponents head, head-1, ..., of the given length (None if 0)."""
    if count == 0:
        return None
    return Segment(rho, head, head - (count - 1))


def steinberg(rho: RhoKey, a: int) -> Segment:
    """The segment [(a-1)/2, -(a-1)/2] of the discrete series St(rho, a)."""
    if a < 1:
        raise ValueError("Steinberg size must be positive")
    return Segment(rho, HalfInt(a - 1), HalfInt(1 - a))


class GLLabel:
    """A multisegment in normal form: the basis of the GL Grothendieck ring.

    Segments are grouped by cuspidal key; within one key they follow the
    normal-form order (left endpoints weakly increasing, right endpoints
    weakly increasing on ties).  Products over distinct keys commute and are
    irreducible, so the flat sorted tuple is a faithful canonical form.
    """

    __slots__ = ("segments",)

    def __init__(self, segments: Iterable[Segment] = ()):
        self.segments: tuple[Segment, ...] = tuple(
            sorted(segments, key=Segment.sort_key))

    ONE: "GLLabel"

    def is_one(self) -> bool:
        return not self.segments

    def part(self, rho: RhoKey) -> tuple[Segment, ...]:
        return tuple(s for s in self.segments if s.rho == rho)

    def rho_keys(self) -> list[RhoKey]:
        seen: dict[RhoKey, None] = {}
        for seg in self.segments:
            seen.setdefault(seg.rho, None)
        return sorted(seen, key=RhoKey.sort_key)

    def exponent_vector(self, rho: RhoKey) -> tuple[HalfInt, ...]:
        """Concatenated head-to-tail runs of the rho-part, in normal-form order."""
        out: list[HalfInt] = []
        for seg in self.part(rho):
            out.extend(seg.exponents())
        return tuple(out)

    def multiplicity(self, rho: RhoKey) -> int:
        return sum(s.length for s in self.part(rho))

    @property
    def gl_dim(self) -> int:
        return sum(s.gl_dim for s in self.segments)

    def __mul__(self, other: "GLLabel") -> "GLLabel":
        return GLLabel(self.segments + other.segments)

    def sort_key(self):
        return (self.gl_dim, tuple(s.sort_key() for s in self.segments))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GLLabel) and self.segments == other.segments

    def __hash__(self) -> int:
        return hash(self.segments)

    def __str__(self) -> str:
        if not self.segments:
            return "1"
        return ",".join(str(s) for s in self.segments)

    def __repr__(self) -> str:
        return f"GLLabel({self})"


GLLabel.ONE = GLLabel()


def normalize_multisegment(segments: Iterable[Segment]) -> GLLabel:
    """Sort an unordered multiset of segments into the normal form."""
    return GLLabel(segments)


def contragredient(label: GLLabel) -> GLLabel:
    return GLLabel(s.dual() for s in label.segments)


def gl_jacquet_delta(label: GLLabel, rho: RhoKey, x: HalfInt) -> FormalSum[GLLabel]:
    """Degree-one Jacquet step on the standard basis: remove one head equal to x.

    Extended multiplicatively over the segments of the label; identical
    segments contribute with multiplicity.
    """
    acc: FormalSum[GLLabel] = FormalSum.zero()
    segs = label.segments
    for i, seg in enumerate(segs):
        if seg.rho == rho and seg.x == x:
            rest = segs[:i] + segs[i + 1:]
            shorter = seg.behead()
            if shorter is not None:
                rest = rest + (shorter,)
            acc = acc + FormalSum.term(GLLabel(rest))
    return acc


def gl_jacquet_vector(label: GLLabel, rho: RhoKey,
                      ys: Sequence[HalfInt]) -> FormalSum[GLLabel]:
    out = FormalSum.term(label)
    for y in ys:
        out = out.bind(lambda lbl, y=y: gl_jacquet_delta(lbl, rho, y))
        if out.is_zero():
            break
    return out


def jac_dim(ys: Sequence[HalfInt], label: GLLabel, rho: RhoKey) -> int:
    """Dimension of the iterated degree-one Jacquet module along ys.

    Zero unless len(ys) exhausts the rho-part; the surviving coefficient
    sits on the label with the rho-part removed.
    """
    if label.multiplicity(rho) != len(ys):
        return 0
    target = GLLabel(s for s in label.segments if s.rho != rho)
    coeff = gl_jacquet_vector(label, rho, ys).coeff(target)
    assert coeff.denominator == 1
    return int(coeff)


def _segment_splits(seg: Segment) -> list[tuple[GLLabel, Segment | None]]:
    """All head/tail splits of one segment: (head run as label, remainder)."""
    out = []
    for m in range(seg.length + 1):
        head = segment_from_run(seg.rho, seg.x, m)
        tail = segment_from_run(seg.rho, seg.x - m, seg.length - m)
        out.append((GLLabel([head]) if head else GLLabel.ONE, tail))
    return out


def mstar_gl(label: GLLabel) -> FormalSum[tuple[GLLabel, GLLabel]]:
    """Full comultiplication on the standard basis.

    Each segment independently chooses a split point; left parts multiply
    together, right parts multiply together.
    """
    acc = FormalSum.term((GLLabel.ONE, GLLabel.ONE))
    for seg in label.segments:
        choices = FormalSum.from_terms(
            ((left, GLLabel([tail]) if tail else GLLabel.ONE), 1)
            for left, tail in _segment_splits(seg))
        acc = _tensor_mul(acc, choices)
    return acc


def _tensor_mul(a: FormalSum[tuple[GLLabel, GLLabel]],
                b: FormalSum[tuple[GLLabel, GLLabel]]) -> FormalSum[tuple[GLLabel, GLLabel]]:
    return FormalSum.from_terms(
        (((la * lb), (ra * rb)), ca * cb)
        for (la, ra), ca in a.items()
        for (lb, rb), cb in b.items())


def segment_big_mstar(seg: Segment) -> FormalSum[tuple[GLLabel, Segment | None]]:
    """Composite coproduct of a single segment.

    Terms are indexed by a pair (k, l) with k + l <= length: the left factor
    is the dual tail run of length k times the head run of length l, and the
    remainder is the middle piece (None when k + l = length).
    """
    terms: list[tuple[tuple[GLLabel, Segment | None], int]] = []
    n = seg.length
    for k in range(n + 1):
        for l in range(n + 1 - k):
            dual_run = segment_from_run(seg.rho, -seg.y, k)
            head_run = segment_from_run(seg.rho, seg.x, l)
            left = GLLabel([s for s in (dual_run, head_run) if s is not None])
            middle = segment_from_run(seg.rho, seg.x - l, n - k - l)
            terms.append(((left, middle), 1))
    return FormalSum.from_terms(terms)


def big_mstar(label: GLLabel) -> FormalSum[tuple[GLLabel, GLLabel]]:
    """Jacquet coproduct adapted to classical-group induction.

    Definitionally (m (x) id) o (contragredient (x) m*) o swap o m*; on a
    single segment this collapses to :func:`segment_big_mstar`, and it is
    multiplicative across segments.
    """
    acc = FormalSum.term((GLLabel.ONE, GLLabel.ONE))
    for seg in label.segments:
        per_seg = FormalSum.from_terms(
            ((left, GLLabel([mid]) if mid else GLLabel.ONE), c)
            for (left, mid), c in segment_big_mstar(seg).items())
        acc = _tensor_mul(acc, per_seg)
    return acc


def big_mstar_by_definition(label: GLLabel) -> FormalSum[tuple[GLLabel, GLLabel]]:
    """Reference implementation straight from the defining composition."""
    acc: FormalSum[tuple[GLLabel, GLLabel]] = FormalSum.zero()
    for (left, right), c in mstar_gl(label).items():
        swapped_then_dualised = contragredient(right)
        for (l2, r2), c2 in mstar_gl(left).items():
            acc = acc + FormalSum.term((swapped_then_dualised * l2, r2), c * c2)
    return acc


def all_omega_labels(rho: RhoKey, pool: Sequence[Segment], max_size: int) -> list[GLLabel]:
    """All multisegment labels over a finite segment pool with total size bounded."""
    out: list[GLLabel] = [GLLabel.ONE]
    seen = {GLLabel.ONE}

    def extend(start: int, current: list[Segment], size: int):
        for i in range(start, len(pool)):
            seg = pool[i]
            if size + seg.length > max_size:
                continue
            current.append(seg)
            lbl = GLLabel(current)
            if lbl not in seen:
                seen.add(lbl)
                out.append(lbl)
            extend(i, current, size + seg.length)
            current.pop()

    extend(0, [], 0)
    return out


def segment_pool(rho: RhoKey, heads: Sequence[HalfInt], max_len: int) -> list[Segment]:
    """Finite universe of segments with endpoints drawn from the given heads."""
    pool = []
    for x, y in itertools.product(heads, repeat=2):
        if x >= y and (x.twice - y.twice) % 2 == 0:
            seg = Segment(rho, x, y)
            if seg.length <= max_len:
                pool.append(seg)
    return pool
