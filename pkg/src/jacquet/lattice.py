"""The basis of the classical-group Grothendieck group.

Basis elements are standard-module labels: a multiset of segments of
positive center (plus tempered satellites of center zero and bad parity)
induced against a tempered core of good parity.  Two normalisation moves
make the labelling canonical at the semisimplification level: a segment of
negative center is replaced by its contragredient partner, and a segment of
center zero and good parity is a Steinberg factor whose induction is
semisimple, so it is absorbed into the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import FormalSum, HalfInt
from .parameters import (Parameter, Signs, decompose_tempered_induction,
                         is_good_parity, is_nonzero)
from .segments import Segment


@dataclass(frozen=True, slots=True)
class TemperedLabel:
    """A nonzero packet member pi(phi, signs)."""

    phi: Parameter
    signs: Signs

    def __post_init__(self):
        if not is_nonzero(self.phi, self.signs):
            raise ValueError(f"zero label pi({self.phi}, {self.signs})")

    def sort_key(self):
        return (self.phi.sort_key(), self.signs)

    def __str__(self) -> str:
        body = ",".join(f"({s.rho.id},{s.a})^{'+' if sg == 1 else '-'}"
                        for s, sg in zip(self.phi.summands, self.signs))
        return "pi{" + body + "}"


class StandardLabel:
    """Segments (positive center or satellites) induced against a tempered core."""

    __slots__ = ("segments", "core")

    def __init__(self, segments: Iterable[Segment], core: TemperedLabel):
        self.segments: tuple[Segment, ...] = tuple(
            sorted(segments, key=_standard_segment_key))
        self.core = core
        for seg in self.segments:
            if seg.center.twice < 0:
                raise ValueError(f"segment {seg} has negative center")
            if seg.center.twice == 0 and is_good_parity(
                    core.phi.group, seg.rho, seg.length):
                raise ValueError(f"unabsorbed Steinberg factor {seg}")

    @property
    def is_tempered(self) -> bool:
        return all(s.center.twice == 0 for s in self.segments)

    @property
    def gl_dim(self) -> int:
        return sum(s.gl_dim for s in self.segments)

    def sort_key(self):
        return (tuple(s.sort_key() for s in self.segments), self.core.sort_key())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, StandardLabel)
                and self.segments == other.segments
                and self.core == other.core)

    def __hash__(self) -> int:
        return hash((self.segments, self.core))

    def __str__(self) -> str:
        if not self.segments:
            return str(self.core)
        segs = " x ".join(str(s) for s in self.segments)
        return f"{segs} |x {self.core}"

    def __repr__(self) -> str:
        return f"StandardLabel({self})"


def _standard_segment_key(seg: Segment):
    # canonical listing: centers descending, then cuspidal key, then head
    return (-seg.center.twice, seg.rho.sort_key(), seg.x.twice, seg.y.twice)


VirtualGRep = FormalSum[StandardLabel]


def tempered_sum(phi: Parameter, signs: Signs) -> VirtualGRep:
    """pi(phi, signs) as a virtual representation; zero labels vanish."""
    if not is_nonzero(phi, signs):
        return FormalSum.zero()
    return FormalSum.term(StandardLabel((), TemperedLabel(phi, signs)))


def normalize_standard(segments: Iterable[Segment],
                       core_sum: FormalSum[TemperedLabel]) -> VirtualGRep:
    """Canonicalise a raw induction-datum into the standard basis.

    Negative-center segments are dualised (semisimplifications of induced
    modules are invariant under replacing a factor by its contragredient);
    center-zero good-parity segments are Steinberg factors whose induction
    is semisimple and is replaced by the sum of its summands.
    """
    kept: list[Segment] = []
    absorb: list[Segment] = []
    group = None
    for label in core_sum:
        group = label.phi.group
        break
    for seg in segments:
        if seg.center.twice < 0:
            seg = seg.dual()
        if seg.center.twice == 0 and group is not None and is_good_parity(
                group, seg.rho, seg.length):
            absorb.append(seg)
        else:
            kept.append(seg)

    cores = core_sum
    for seg in sorted(absorb, key=Segment.sort_key):
        def absorb_one(label: TemperedLabel, seg=seg) -> FormalSum[TemperedLabel]:
            members = decompose_tempered_induction(
                seg.rho, seg.length, label.phi, label.signs)
            return FormalSum.from_terms(
                (TemperedLabel(phi, signs), 1) for phi, signs in members)
        cores = cores.bind(absorb_one)

    return cores.bind(lambda core: FormalSum.term(StandardLabel(kept, core)))


def attach(segments: Iterable[Segment], v: VirtualGRep) -> VirtualGRep:
    """Prepend segments to every label of a virtual representation and renormalise."""
    segments = tuple(segments)
    if not segments:
        return v

    def per_label(label: StandardLabel) -> VirtualGRep:
        return normalize_standard(segments + label.segments,
                                  FormalSum.term(label.core))

    return v.bind(per_label)


def induct_segment(seg: Segment, v: VirtualGRep) -> VirtualGRep:
    return attach([seg], v)


def is_canonical(label: StandardLabel) -> bool:
    """Validator used by the test sweeps."""
    group = label.core.phi.group
    for seg in label.segments:
        if seg.center.twice < 0:
            return False
        if seg.center.twice == 0 and is_good_parity(group, seg.rho, seg.length):
            return False
    return (label.segments == tuple(sorted(label.segments, key=_standard_segment_key))
            and is_nonzero(label.core.phi, label.core.signs))
