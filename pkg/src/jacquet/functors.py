"""The degree-one Jacquet functor on virtual representations.

``jac_rho_x`` extracts, from the semisimplified Jacquet module with respect
to the maximal parabolic of GL-rank dim(rho), the summands whose GL factor
is rho|.|^x.  On a label with GL segments the exponent is pulled out of a
segment head, a contragredient tail, or the core; on a tempered label the
answer is governed by the multiplicity m of (rho, 2x+1) in the parameter:

  * m = 0, or x < 0:      zero;
  * m = 1, x > 0:         a single label with (rho, 2x+1) downgraded to
                          (rho, 2x-1) (deleted at x = 1/2), or zero when the
                          transported character dies;
  * m = 2, x > 0:         one induced term plus a difference of the two
                          downgraded labels attached to the pair of
                          characters agreeing away from the doubled summand;
  * m = 1 or 2, x = 0:    zero, resp. plain removal of the pair;
  * m >= 3:               reduce to multiplicity delta = m mod 2 in {1, 2}
                          at the cost of Steinberg factors.

All outputs are canonical virtual sums in the standard basis.
"""

from __future__ import annotations

from .algebra import FormalSum, HalfInt
from .lattice import (StandardLabel, TemperedLabel, VirtualGRep, attach,
                      normalize_standard, tempered_sum)
from .parameters import downgrade_copy, remove_copies
from .segments import RhoKey, Segment, segment_from_run, steinberg

_tempered_cache: dict[tuple, VirtualGRep] = {}


def clear_cache() -> None:
    _tempered_cache.clear()


def jac_rho_x(v: VirtualGRep, rho: RhoKey, x: HalfInt) -> VirtualGRep:
    return v.bind(lambda label: _jac_label(label, rho, x))


def jac_vector(v: VirtualGRep, rho: RhoKey, xs) -> VirtualGRep:
    for x in xs:
        if v.is_zero():
            break
        v = jac_rho_x(v, rho, x)
    return v


def _jac_label(label: StandardLabel, rho: RhoKey, x: HalfInt) -> VirtualGRep:
    if not label.segments:
        return _jac_tempered(label.core, rho, x)

    out: VirtualGRep = FormalSum.zero()
    segs = label.segments
    for i, seg in enumerate(segs):
        if seg.rho != rho:
            continue
        rest = segs[:i] + segs[i + 1:]
        # head extraction: rho|.|^x x| (segment beheaded)
        if seg.x == x:
            shorter = seg.behead()
            kept = rest + (shorter,) if shorter else rest
            out = out + normalize_standard(kept, FormalSum.term(label.core))
        # contragredient-tail extraction: the dual run starts at -y
        if -seg.y == x:
            shorter = seg.drop_tail()
            kept = rest + (shorter,) if shorter else rest
            out = out + normalize_standard(kept, FormalSum.term(label.core))

    core_jac = _jac_tempered(label.core, rho, x)
    if not core_jac.is_zero():
        out = out + attach(segs, core_jac)
    return out


def _jac_tempered(label: TemperedLabel, rho: RhoKey, x: HalfInt) -> VirtualGRep:
    key = (label.phi, label.signs, rho, x)
    cached = _tempered_cache.get(key)
    if cached is None:
        cached = _jac_tempered_impl(label, rho, x)
        _tempered_cache[key] = cached
    return cached


def _jac_tempered_impl(label: TemperedLabel, rho: RhoKey, x: HalfInt) -> VirtualGRep:
    if x.twice < 0:
        return FormalSum.zero()
    a = x.twice + 1  # 2x + 1
    phi, signs = label.phi, label.signs
    m = phi.multiplicity(rho, a)
    if m == 0:
        return FormalSum.zero()

    if m >= 3:
        delta = 2 - (m % 2)
        drop2 = remove_copies(phi, signs, rho, a, 2)
        first = _segment_times(rho, x, tempered_sum(*drop2)).scale(m - delta)
        small = TemperedLabel(*remove_copies(phi, signs, rho, a, m - delta))
        rec = _jac_tempered(small, rho, x)
        if not rec.is_zero():
            sts = [steinberg(rho, a)] * ((m - delta) // 2)
            rec = attach(sts, rec)
        return first + rec

    if x.twice == 0:
        if m == 1:
            return FormalSum.zero()
        return tempered_sum(*remove_copies(phi, signs, rho, a, 2))

    if m == 1:
        return tempered_sum(*downgrade_copy(phi, signs, rho, a))

    # m = 2, x > 0
    phi0, signs0 = remove_copies(phi, signs, rho, a, 2)
    induced = _segment_times(rho, x, tempered_sum(phi0, signs0))
    plus = tempered_sum(*downgrade_copy(phi, signs, rho, a))
    flipped = tuple(-sg if (su.rho == rho and su.a == a) else sg
                    for su, sg in zip(phi.summands, signs))
    minus = tempered_sum(*downgrade_copy(phi, flipped, rho, a))
    return induced + plus - minus


def _segment_times(rho: RhoKey, x: HalfInt, v: VirtualGRep) -> VirtualGRep:
    """Attach the run x, x-1, ..., -(x-1) (empty at x = 0)."""
    if v.is_zero():
        return v
    seg = segment_from_run(rho, x, x.twice)
    if seg is None:
        return v
    return attach([seg], v)
