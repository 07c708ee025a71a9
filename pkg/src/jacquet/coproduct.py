"""Assembly of full Jacquet coproducts from degree-one data.

For a tempered label and a fixed cuspidal rho, the degree-m piece of the
rho-isotypic coproduct is recovered from iterated degree-one functors by
inverting a triangular matrix of Jacquet dimensions indexed by admissible
exponent tuples.  Pieces for distinct rho compose, and GL factors of a
standard label are pushed through with the adapted coproduct of their
segments.  The matrices depend only on the multiset of summand sizes, so
they are cached (optionally on disk, see ``load_matrix_cache``).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import FormalSum, HalfInt, Rational, invert_triangular
from .functors import jac_vector
from .lattice import StandardLabel, TemperedLabel, VirtualGRep, normalize_standard
from .lfactors import is_generic, std_irreducible, twisted_param_of, Verdict
from .segments import (GLLabel, RhoKey, Segment, jac_dim, segment_big_mstar,
                       segment_from_run)

KTuple = tuple[int, ...]

VirtualBiRep = FormalSum  # FormalSum[tuple[GLLabel, StandardLabel]]


class NonGenericStandardError(ValueError):
    """The label names the irreducible quotient of a reducible standard module."""


def k_sets(a_list: Sequence[int], m: int) -> list[KTuple]:
    """Admissible depth tuples against the sorted summand sizes a_list.

    Entries satisfy 0 <= k_i <= a_i, are weakly decreasing on blocks of equal
    a_i, and sum to m; listed in descending lexicographic order.
    """
    out: list[KTuple] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(a_list):
            if remaining == 0:
                out.append(prefix)
            return
        hi = min(a_list[i], remaining)
        if i > 0 and a_list[i - 1] == a_list[i]:
            hi = min(hi, prefix[-1])
        if remaining > sum(a_list[i:]):
            return
        for k in range(hi, -1, -1):
            rec(i + 1, remaining - k, prefix + (k,))

    rec(0, m, ())
    out.sort(reverse=True)
    return out


def x_of_k(a_list: Sequence[int], k: KTuple) -> tuple[HalfInt, ...]:
    """Exponent vector: per summand the run (a_i-1)/2, (a_i-3)/2, ... of length k_i."""
    out: list[HalfInt] = []
    for a, depth in zip(a_list, k):
        head = HalfInt(a - 1)
        out.extend(HalfInt(head.twice - 2 * j) for j in range(depth))
    return tuple(out)


def delta_label(rho: RhoKey, a_list: Sequence[int], k: KTuple) -> GLLabel:
    """The standard GL module whose segments are the runs of x_of_k."""
    segs = []
    for a, depth in zip(a_list, k):
        seg = segment_from_run(rho, HalfInt(a - 1), depth)
        if seg is not None:
            segs.append(seg)
    return GLLabel(segs)


@dataclass(frozen=True)
class JacMatrix:
    order: tuple[KTuple, ...]
    entries: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[Rational, ...], ...]


_matrix_cache: dict[tuple[tuple[int, ...], int], JacMatrix] = {}
# internal key for dimension counts; the matrix does not depend on rho
_DIM_RHO = RhoKey("_dim", 1)


def jac_matrix(a_list: Sequence[int], m: int) -> JacMatrix:
    """Jacquet-dimension matrix and its exact inverse for the degree-m piece.

    Entry (k,l) is the dimension of the iterated degree-one Jacquet module
    of the standard GL module of l along the exponent vector of k.  In the
    descending order of k_sets the matrix is lower triangular with diagonal
    a product of factorials.
    """
    key = (tuple(a_list), m)
    cached = _matrix_cache.get(key)
    if cached is not None:
        return cached
    order = tuple(k_sets(a_list, m))
    vectors = {k: x_of_k(a_list, k) for k in order}
    labels = {k: delta_label(_DIM_RHO, a_list, k) for k in order}
    entries = tuple(
        tuple(jac_dim(vectors[k], labels[l], _DIM_RHO) for l in order)
        for k in order)
    inverse = tuple(tuple(row) for row in invert_triangular(
        [list(row) for row in entries]))
    result = JacMatrix(order, entries, inverse)
    _matrix_cache[key] = result
    return result


def mu_star_rho(label: StandardLabel, rho: RhoKey) -> VirtualBiRep:
    """rho-isotypic Jacquet coproduct of one basis label.

    Segments of type rho contribute their adapted single-segment coproduct;
    other segments pass to the right factor untouched; the tempered core is
    expanded by the matrix method.
    """
    pieces: VirtualBiRep = FormalSum.term((GLLabel.ONE, ()))
    for seg in label.segments:
        if seg.rho == rho:
            per_seg = FormalSum.from_terms(
                ((left, (mid,) if mid is not None else ()), c)
                for (left, mid), c in segment_big_mstar(seg).items())
        else:
            per_seg = FormalSum.term((GLLabel.ONE, (seg,)))
        pieces = FormalSum.from_terms(
            (((la * lb), ra + rb), ca * cb)
            for (la, ra), ca in pieces.items()
            for (lb, rb), cb in per_seg.items())

    core_part = _mu_star_rho_tempered(label.core, rho)
    out: VirtualBiRep = FormalSum.zero()
    for (left, mids), c in pieces.items():
        for (cleft, cright), cc in core_part.items():
            contribution = normalize_standard(
                mids + cright.segments, FormalSum.term(cright.core))
            out = out + FormalSum.from_terms(
                (((left * cleft), lab), c * cc * coeff)
                for lab, coeff in contribution.items())
    return out


def _mu_star_rho_tempered(core: TemperedLabel, rho: RhoKey) -> VirtualBiRep:
    a_list = core.phi.a_values(rho)
    total = sum(a_list)
    base = FormalSum.term(StandardLabel((), core))
    out: VirtualBiRep = FormalSum.zero()
    for m in range(total + 1):
        mat = jac_matrix(a_list, m)
        vectors = [jac_vector(base, rho, x_of_k(a_list, l)) for l in mat.order]
        for i, k in enumerate(mat.order):
            delta = delta_label(rho, a_list, k)
            combo: VirtualGRep = FormalSum.zero()
            for j, coeff in enumerate(mat.inverse[i]):
                if coeff:
                    combo = combo + vectors[j].scale(coeff)
            out = out + FormalSum.from_terms(
                ((delta, lab), c) for lab, c in combo.items())
    return out


def _irreducibility_gate(label: StandardLabel) -> None:
    """Labels must name irreducible modules for the coproduct to apply.

    Tempered labels (no segments, or satellites only) always qualify; a
    twisted label qualifies when its parameter is generic, or when it is a
    single half-shifted Steinberg certified irreducible by Jacquet vanishing.
    """
    if label.is_tempered:
        return
    if is_generic(twisted_param_of(label)):
        return
    twisted = [s for s in label.segments if s.center.twice > 0]
    if len(twisted) == 1:
        seg = twisted[0]
        if seg.y.twice == -(seg.x.twice - 2):  # shape x, x-1, ..., -(x-1)
            report = std_irreducible(seg.rho, seg.x, label.core)
            if report.verdict is Verdict.IRREDUCIBLE:
                return
    raise NonGenericStandardError(
        f"cannot compute the full coproduct of {label}: the parameter is not "
        "generic and no irreducibility certificate applies")


def mu_star_full(v: VirtualGRep) -> VirtualBiRep:
    """Full Jacquet coproduct, composed over all cuspidal supports present."""
    out: VirtualBiRep = FormalSum.zero()
    for label, coeff in v.items():
        _irreducibility_gate(label)
        rhos = sorted({seg.rho for seg in label.segments}
                      | set(label.core.phi.rho_keys()), key=RhoKey.sort_key)
        state: VirtualBiRep = FormalSum.term((GLLabel.ONE, label), coeff)
        for rho in rhos:
            state = _compose_rho(state, rho)
        out = out + state
    return out


def _compose_rho(state: VirtualBiRep, rho: RhoKey) -> VirtualBiRep:
    acc: VirtualBiRep = FormalSum.zero()
    for (left, label), c in state.items():
        for (l2, lab2), c2 in mu_star_rho(label, rho).items():
            acc = acc + FormalSum.term(((left * l2), lab2), c * c2)
    return acc


def gl_degree(pair: tuple[GLLabel, StandardLabel]) -> int:
    return pair[0].gl_dim


def jac_P_k(v: VirtualGRep, k: int) -> VirtualBiRep:
    """Degree-k graded piece of the full coproduct (GL factor of dimension k)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    full = mu_star_full(v)
    return FormalSum.from_terms(
        (pair, c) for pair, c in full.items() if gl_degree(pair) == k)


def load_matrix_cache(directory: str) -> None:
    """Warm the matrix cache from a JSON file left by an earlier run."""
    path = os.path.join(directory, "jac_matrices.json")
    if not os.path.exists(path):
        return
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return
    for entry in raw:
        a_list, m = tuple(entry["a"]), entry["m"]
        order = tuple(tuple(k) for k in entry["order"])
        entries = tuple(tuple(row) for row in entry["entries"])
        inverse = tuple(tuple(Fraction(s) for s in row) for row in entry["inverse"])
        _matrix_cache[(a_list, m)] = JacMatrix(order, entries, inverse)


def save_matrix_cache(directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, "jac_matrices.json")
    payload = []
    for (a_list, m), mat in sorted(_matrix_cache.items()):
        payload.append({
            "a": list(a_list),
            "m": m,
            "order": [list(k) for k in mat.order],
            "entries": [list(row) for row in mat.entries],
            "inverse": [[str(c) for c in row] for row in mat.inverse],
        })
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
