import itertools

import pytest

from conftest import H, RHO1, RHO_S, seg
from jacquet.algebra import FormalSum, HalfInt
from jacquet.segments import (GLLabel, Segment, all_omega_labels, big_mstar,
                              big_mstar_by_definition, contragredient,
                              gl_jacquet_delta, jac_dim, mstar_gl,
                              normalize_multisegment, segment_pool, steinberg)


def gl(*segments) -> GLLabel:
    return GLLabel(segments)


def test_segment_validation():
    with pytest.raises(ValueError):
        seg(RHO1, 1, 3)       # x < y
    with pytest.raises(ValueError):
        seg(RHO1, 2, 1)       # endpoints differ by 1/2
    s = seg(RHO1, 3, -1)
    assert s.length == 3 and s.center == H(1)
    assert s.dual() == seg(RHO1, 1, -3)
    assert steinberg(RHO1, 4) == seg(RHO1, 3, -3)


def test_normalize_ordering():
    assert normalize_multisegment([]) == GLLabel.ONE
    got = normalize_multisegment([seg(RHO1, 3, 3), seg(RHO1, 1, 1)])
    assert got.segments == (seg(RHO1, 1, 1), seg(RHO1, 3, 3))
    # equal left endpoints: right endpoint ascending
    got = normalize_multisegment([seg(RHO1, 3, 1), seg(RHO1, 3, -1)])
    assert got.segments == (seg(RHO1, 3, -1), seg(RHO1, 3, 1))


def test_exponent_vector():
    lbl = gl(seg(RHO1, 1, 1), seg(RHO1, 3, -1))
    assert lbl.exponent_vector(RHO1) == (H(1), H(3), H(1), H(-1))
    assert lbl.multiplicity(RHO1) == 4
    assert lbl.multiplicity(RHO_S) == 0


def test_gl_jacquet_examples():
    lbl = gl(seg(RHO1, 3, 1))
    assert gl_jacquet_delta(lbl, RHO1, H(3)) == FormalSum.term(gl(seg(RHO1, 1, 1)))
    assert gl_jacquet_delta(lbl, RHO1, H(1)).is_zero()
    doubled = gl(seg(RHO1, 3, 3), seg(RHO1, 3, 3))
    assert gl_jacquet_delta(doubled, RHO1, H(3)) == \
        FormalSum.term(gl(seg(RHO1, 3, 3)), 2)
    # distinct cuspidal keys never interact
    assert gl_jacquet_delta(gl(seg(RHO_S, 3, 1)), RHO1, H(3)).is_zero()


def test_jac_dim_examples():
    assert jac_dim((H(3), H(1)), gl(seg(RHO1, 3, 1)), RHO1) == 1
    assert jac_dim((H(1), H(1)), gl(seg(RHO1, 1, 1), seg(RHO1, 1, 1)), RHO1) == 2
    assert jac_dim((H(3), H(1)), gl(seg(RHO1, 1, 1), seg(RHO1, 3, 3)), RHO1) == 1
    assert jac_dim((H(1),), gl(seg(RHO1, 3, 3)), RHO1) == 0


def test_mstar_examples():
    assert mstar_gl(GLLabel.ONE) == FormalSum.term((GLLabel.ONE, GLLabel.ONE))
    got = mstar_gl(gl(seg(RHO1, 3, 1)))
    assert got == FormalSum.from_terms([
        ((GLLabel.ONE, gl(seg(RHO1, 3, 1))), 1),
        ((gl(seg(RHO1, 3, 3)), gl(seg(RHO1, 1, 1))), 1),
        ((gl(seg(RHO1, 3, 1)), GLLabel.ONE), 1),
    ])
    # product of two single-segment splits: four terms, all coefficient 1
    got = mstar_gl(gl(seg(RHO1, 1, 1), seg(RHO1, 3, 3)))
    assert len(got) == 4
    assert got.coeff((gl(seg(RHO1, 1, 1)), gl(seg(RHO1, 3, 3)))) == 1


def test_mstar_grading_and_counit():
    lbl = gl(seg(RHO1, 3, -1), seg(RHO1, 1, 1))
    total = lbl.multiplicity(RHO1)
    for (left, right), c in mstar_gl(lbl).items():
        assert left.multiplicity(RHO1) + right.multiplicity(RHO1) == total
    assert mstar_gl(lbl).coeff((GLLabel.ONE, lbl)) == 1
    assert mstar_gl(lbl).coeff((lbl, GLLabel.ONE)) == 1


def test_big_mstar_unit_and_single_point():
    assert big_mstar(GLLabel.ONE) == FormalSum.term((GLLabel.ONE, GLLabel.ONE))
    got = big_mstar(gl(seg(RHO1, 1, 1)))
    assert got == FormalSum.from_terms([
        ((GLLabel.ONE, gl(seg(RHO1, 1, 1))), 1),
        ((gl(seg(RHO1, 1, 1)), GLLabel.ONE), 1),
        ((gl(seg(RHO1, -1, -1)), GLLabel.ONE), 1),
    ])


def test_big_mstar_steinberg_two():
    got = big_mstar(gl(seg(RHO1, 1, -1)))
    expected = FormalSum.from_terms([
        ((GLLabel.ONE, gl(seg(RHO1, 1, -1))), 1),
        ((gl(seg(RHO1, 1, 1)), gl(seg(RHO1, 1, 1))), 1),
        ((gl(seg(RHO1, 1, 1)), gl(seg(RHO1, -1, -1))), 1),
        ((gl(seg(RHO1, 1, -1)), GLLabel.ONE), 2),
        ((gl(seg(RHO1, 1, 1), seg(RHO1, 1, 1)), GLLabel.ONE), 1),
    ])
    assert got == expected


def _pool():
    heads = [H(t) for t in (-1, 1, 3)]
    return segment_pool(RHO1, heads, max_len=3)


def test_big_mstar_matches_definition():
    for lbl in all_omega_labels(RHO1, _pool(), max_size=3):
        assert big_mstar(lbl) == big_mstar_by_definition(lbl), str(lbl)


def test_big_mstar_multiplicative():
    pool = _pool()
    small = [GLLabel([s]) for s in pool[:4]]
    for a, b in itertools.product(small, repeat=2):
        lhs = big_mstar(a * b)
        rhs = FormalSum.from_terms(
            (((la * lb), (ra * rb)), ca * cb)
            for (la, ra), ca in big_mstar(a).items()
            for (lb, rb), cb in big_mstar(b).items())
        assert lhs == rhs


def test_contragredient_involution():
    for lbl in all_omega_labels(RHO1, _pool(), max_size=3):
        assert contragredient(contragredient(lbl)) == lbl


def test_coassociativity_small():
    for lbl in all_omega_labels(RHO1, _pool(), max_size=4):
        lhs = FormalSum.from_terms(
            (((l2, r2), right), c * c2)
            for (left, right), c in mstar_gl(lbl).items()
            for (l2, r2), c2 in mstar_gl(left).items())
        rhs = FormalSum.from_terms(
            ((left, (l2, r2)), c * c2)
            for (left, right), c in mstar_gl(lbl).items()
            for (l2, r2), c2 in mstar_gl(right).items())
        flat_l = FormalSum.from_terms((((a, b, r)), c) for ((a, b), r), c in lhs.items())
        flat_r = FormalSum.from_terms((((l, a, b)), c) for (l, (a, b)), c in rhs.items())
        assert flat_l == flat_r, str(lbl)


def test_factorial_diagonal_and_sublex_vanishing():
    """Jacquet dimensions vanish below the defining vector and are factorials on it."""
    by_support = {}
    for lbl in all_omega_labels(RHO1, _pool(), max_size=4):
        if lbl.is_one():
            continue
        support = tuple(sorted(e.twice for e in lbl.exponent_vector(RHO1)))
        by_support.setdefault(support, []).append(lbl)
    checked = 0
    for group in by_support.values():
        for a, b in itertools.product(group, repeat=2):
            va, vb = a.exponent_vector(RHO1), b.exponent_vector(RHO1)
            dim = jac_dim(va, b, RHO1)
            if a == b:
                expected = 1
                counts = {}
                for s in b.segments:
                    counts[s] = counts.get(s, 0) + 1
                for c in counts.values():
                    for k in range(2, c + 1):
                        expected *= k
                assert dim == expected, str(b)
            elif [e.twice for e in va] < [e.twice for e in vb]:
                assert dim == 0, (str(a), str(b))
            checked += 1
    assert checked > 100
