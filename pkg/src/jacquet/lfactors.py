"""Adjoint L-factor combinatorics: genericity and standard-module structure.

The adjoint L-function of a parameter decomposes along the constituents of
its symmetric (odd orthogonal groups) or alternating (symplectic groups)
square.  Only constituents trivial on the Weil group can contribute the
pole at s = 1 that obstructs genericity, and those are pure combinatorics
in the summand sizes and shifts: a factor zeta(s + e) with e = t + (b-1)/2
per constituent S_b|.|^t.  Genericity in turn decides irreducibility of
standard modules; for the remaining small cases the socle is an explicit
pair of tempered labels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import FormalSum, HalfInt
from .functors import jac_rho_x
from .lattice import StandardLabel, TemperedLabel, VirtualGRep, normalize_standard, tempered_sum
from .parameters import (GroupType, Parameter, Signs, add_copies,
                         is_good_parity, is_nonzero, remove_copies)
from .segments import RhoKey, Segment, SelfDualType, segment_from_run


@dataclass(frozen=True, slots=True)
class TwistedParam:
    """A parameter in Langlands form: shifted self-dual pieces around a core.

    Each twisted entry (rho, a, s) with s > 0 implicitly carries its dual at
    shift -s; satellites are tempered pairs at shift zero whose type does not
    match the group.  The core is a good-parity parameter.
    """

    twisted: tuple[tuple[RhoKey, int, HalfInt], ...]
    satellites: tuple[tuple[RhoKey, int], ...]
    core: Parameter

    def __post_init__(self):
        for rho, a, s in self.twisted:
            if s.twice <= 0:
                raise ValueError(f"twisted entry ({rho.id},{a}) needs shift > 0")

    @property
    def group(self) -> GroupType:
        return self.core.group

    @property
    def dim(self) -> int:
        d = self.core.dim
        d += sum(2 * rho.dim * a for rho, a, _ in self.twisted)
        d += sum(2 * rho.dim * a for rho, a in self.satellites)
        return d


def twisted_param_of(label: StandardLabel) -> TwistedParam:
    """Read the full parameter off a standard label."""
    twisted = []
    satellites = []
    for seg in label.segments:
        if seg.center.twice > 0:
            twisted.append((seg.rho, seg.length, seg.center))
        else:
            satellites.append((seg.rho, seg.length))
    twisted.sort(key=lambda e: (-e[2].twice, e[0].sort_key(), e[1]))
    return TwistedParam(tuple(twisted), tuple(satellites), label.core.phi)


@dataclass(frozen=True, slots=True)
class AdjointPiece:
    """One constituent S_b|.|^t of the adjoint square, trivial on the Weil group."""

    source: str
    b: int
    t: HalfInt

    @property
    def exponent(self) -> HalfInt:
        return self.t + HalfInt(self.b - 1)

    def sort_key(self):
        return (self.exponent.twice, self.b, self.t.twice, self.source)


def _entries(p: TwistedParam) -> list[tuple[RhoKey, int, HalfInt, bool]]:
    """Explicit summand list (rho, a, shift, is_dual_slot) of the parameter."""
    out: list[tuple[RhoKey, int, HalfInt, bool]] = []
    for rho, a, s in p.twisted:
        out.append((rho, a, s, False))
        out.append((rho, a, -s, True))
    for rho, a in p.satellites:
        out.append((rho, a, HalfInt(0), False))
        out.append((rho, a, HalfInt(0), True))
    for summand in p.core.summands:
        out.append((summand.rho, summand.a, HalfInt(0), False))
    return out


def _tensor_sizes(a: int, b: int) -> range:
    """Clebsch-Gordan: S_a (x) S_b = sum of S_c, c = |a-b|+1, |a-b|+3, ..., a+b-1."""
    return range(abs(a - b) + 1, a + b, 2)


def _sym_sizes(a: int) -> range:
    """Sym^2 S_a = S_{2a-1} + S_{2a-5} + ..."""
    return range(2 * a - 1, 0, -4)


def _alt_sizes(a: int) -> range:
    """Alt^2 S_a = S_{2a-3} + S_{2a-7} + ..."""
    return range(2 * a - 3, 0, -4)


def _pairs_to_one(rho1, dual1: bool, rho2, dual2: bool) -> bool:
    """Does rho1 (x) rho2 contain the trivial character (exactly once)?"""
    if rho1 != rho2:
        return False
    if rho1.self_dual is SelfDualType.NONE:
        return dual1 != dual2
    return True


def zeta_transparent(rho: RhoKey) -> bool:
    """One-dimensional orthogonal keys are treated as unramified characters."""
    return rho.dim == 1 and rho.self_dual is SelfDualType.ORTHOGONAL


def adjoint_constituents(p: TwistedParam) -> list[AdjointPiece]:
    """Constituents of the adjoint square that are trivial on the Weil group.

    Off-diagonal pairs of summands with matching cuspidal data contribute a
    full Clebsch-Gordan string at the sum of shifts; each self-dual summand
    contributes its symmetric or alternating square string according to
    whether the types of rho and of the adjoint representation agree.  This
    list is exhaustive for pole detection; it is the complete decomposition
    exactly when every cuspidal key is an unramified character
    (see :func:`zeta_transparent`).
    """
    entries = _entries(p)
    sym_adjoint = p.group is GroupType.SO_ODD
    pieces: list[AdjointPiece] = []
    for i in range(len(entries)):
        rho_i, a_i, s_i, dual_i = entries[i]
        for j in range(i + 1, len(entries)):
            rho_j, a_j, s_j, dual_j = entries[j]
            if _pairs_to_one(rho_i, dual_i, rho_j, dual_j):
                t = s_i + s_j
                for b in _tensor_sizes(a_i, a_j):
                    pieces.append(AdjointPiece(f"pair:{i},{j}", b, t))
        if rho_i.self_dual is SelfDualType.NONE:
            continue
        # one copy of the trivial sits in Sym^2(rho) iff rho is orthogonal
        rho_orth = rho_i.self_dual is SelfDualType.ORTHOGONAL
        use_sym_of_sl2 = rho_orth == sym_adjoint
        sizes = _sym_sizes(a_i) if use_sym_of_sl2 else _alt_sizes(a_i)
        for b in sizes:
            pieces.append(AdjointPiece(f"diag:{i}", b, s_i * 2))
    pieces.sort(key=AdjointPiece.sort_key)
    return pieces


@dataclass(frozen=True)
class ZetaExponents:
    """Multiset of e with L(s) = prod zeta(s + e); complete only if flagged."""

    exponents: tuple[tuple[HalfInt, int], ...]
    complete: bool

    def as_dict(self) -> dict[HalfInt, int]:
        return dict(self.exponents)

    def __str__(self) -> str:
        factors = []
        for e, mult in self.exponents:
            if e.twice == 0:
                arg = "s"
            elif e.twice > 0:
                arg = f"s+{e}"
            else:
                arg = f"s-{-e}"
            factors.append(f"zeta({arg})" + (f"^{mult}" if mult > 1 else ""))
        body = "*".join(factors) if factors else "1"
        if not self.complete:
            body += "  [pole-relevant part only]"
        return body


def zeta_exponents(p: TwistedParam) -> ZetaExponents:
    keys = {rho for rho, _, _ in p.twisted}
    keys |= {rho for rho, _ in p.satellites}
    keys |= {s.rho for s in p.core.summands}
    complete = all(zeta_transparent(rho) for rho in keys) and len({k.id for k in keys}) <= 1
    counts: dict[HalfInt, int] = {}
    for piece in adjoint_constituents(p):
        counts[piece.exponent] = counts.get(piece.exponent, 0) + 1
    exps = tuple(sorted(counts.items(), key=lambda kv: kv[0].twice))
    return ZetaExponents(exps, complete)


def is_generic(p: TwistedParam) -> bool:
    """No constituent with exponent -1, i.e. no zeta(s-1) pole at s = 1.

    Pole relevance only needs the matching-key pairs and the self-dual
    diagonal terms, so this is decidable for every parameter we can name.
    """
    return all(piece.exponent.twice != -2 for piece in adjoint_constituents(p))


class Verdict(enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class StdModuleReport:
    verdict: Verdict
    reason: str
    length: Optional[int] = None


def std_irreducible(rho: RhoKey, x: HalfInt, core: TemperedLabel) -> StdModuleReport:
    """Irreducibility of the standard module <rho; x, ..., -(x-1)> x| core.

    Decision ladder: a generic parameter makes every standard module in its
    packet irreducible; when (rho, 2x+1) sits in the core parameter and the
    degree-one Jacquet module at x vanishes, the module is irreducible by
    the Jacquet-vanishing criterion; the trivial character with a
    non-generic parameter is reducible (the converse of the generic case);
    and a missing (rho, 2x+1) of good parity forces a tempered socle, giving
    length 2 or 3.
    """
    if x.twice <= 0:
        raise ValueError("the twisted segment needs x > 0")
    phi, signs = core.phi, core.signs
    label = StandardLabel([segment_from_run(rho, x, x.twice)], core)
    full = twisted_param_of(label)

    if is_generic(full):
        return StdModuleReport(Verdict.IRREDUCIBLE, "generic parameter")

    a = x.twice + 1
    if phi.contains(rho, a):
        jac = jac_rho_x(tempered_sum(phi, signs), rho, x)
        if jac.is_zero():
            return StdModuleReport(
                Verdict.IRREDUCIBLE,
                f"({rho.id},{a}) in the parameter and Jac at x={x} vanishes")

    if all(s == 1 for s in signs):
        return StdModuleReport(
            Verdict.REDUCIBLE,
            "trivial character with non-generic parameter")

    if not phi.contains(rho, a) and is_good_parity(phi.group, rho, a):
        socle = _socle_labels(rho, x, phi, signs)
        return StdModuleReport(
            Verdict.REDUCIBLE,
            "tempered socle with the shifted parameter",
            length=1 + len(socle))

    return StdModuleReport(Verdict.UNDETERMINED, "no applicable criterion")


def _socle_labels(rho: RhoKey, x: HalfInt, phi: Parameter,
                  signs: Signs) -> list[tuple[Parameter, Signs]]:
    """Surviving extensions of the character to phi + (rho,2x-1) + (rho,2x+1)."""
    a = x.twice + 1
    out = []
    for s in (1, -1):
        additions = [(rho, a, s)]
        if a - 2 >= 1:
            additions.append((rho, a - 2, s))
        phi2, signs2 = add_copies(phi, signs, additions)
        if is_nonzero(phi2, signs2):
            out.append((phi2, signs2))
    return out


class HypothesisViolationError(ValueError):
    pass


def small_standard_composition(seg: Segment, core: TemperedLabel
                               ) -> list[VirtualGRep]:
    """Composition series of the two families of small standard modules.

    For the half-shifted Steinberg segment x, x-1, ..., -(x-1) with
    (rho, 2x+1) absent from the core parameter, the socle consists of the
    surviving tempered labels with both shifted summands adjoined and the
    cosocle is the Langlands quotient.  For a single exponent rho|.|^x with
    a discrete core containing (rho, 2x-1) but not (rho, 2x+1), the socle is
    the single label with the summand promoted.  Factors are listed socle
    first and sum to the standard module.
    """
    phi, signs = core.phi, core.signs
    rho, x = seg.rho, seg.x
    a = x.twice + 1
    module = normalize_standard([seg], FormalSum.term(core))

    if seg.y == -(x - 1) and x.twice >= 1:
        if phi.contains(rho, a):
            raise HypothesisViolationError(
                f"({rho.id},{a}) already occurs in the core parameter")
        if not is_good_parity(phi.group, rho, a):
            raise HypothesisViolationError(
                f"({rho.id},{a}) is not of good parity for the group")
        factors = [tempered_sum(phi2, signs2)
                   for phi2, signs2 in _socle_labels(rho, x, phi, signs)]
    elif seg.y == seg.x and x.twice > 0:
        if phi.contains(rho, a):
            raise HypothesisViolationError(
                f"({rho.id},{a}) occurs in the core parameter")
        if not is_good_parity(phi.group, rho, a):
            raise HypothesisViolationError(
                f"({rho.id},{a}) is not of good parity for the group")
        if a - 2 >= 1 and not phi.contains(rho, a - 2):
            raise HypothesisViolationError(
                f"({rho.id},{a - 2}) missing from the core parameter")
        if any(phi.multiplicity(s.rho, s.a) > 1 for s in phi.summands):
            raise HypothesisViolationError("core parameter is not discrete")
        if a - 2 >= 1:
            s = _sign_of(phi, signs, rho, a - 2)
            phi1, signs1 = remove_copies(phi, signs, rho, a - 2, 1)
            phi2, signs2 = add_copies(phi1, signs1, [(rho, a, s)])
        else:
            phi2, signs2 = add_copies(phi, signs, [(rho, a, 1)])
        if not is_nonzero(phi2, signs2):
            raise HypothesisViolationError("transported character vanishes")
        factors = [tempered_sum(phi2, signs2)]
    else:
        raise HypothesisViolationError(
            f"segment {seg} matches neither small-module family")

    socle_total: VirtualGRep = FormalSum.zero()
    for f in factors:
        socle_total = socle_total + f
    quotient = module - socle_total
    return [f for f in factors if not f.is_zero()] + [quotient]


def _sign_of(phi: Parameter, signs: Signs, rho: RhoKey, a: int) -> int:
    for summand, s in zip(phi.summands, signs):
        if summand.rho == rho and summand.a == a:
            return s
    raise KeyError((rho.id, a))
