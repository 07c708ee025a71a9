"""Shared builders for the test suite.

Conventions used throughout the tests: ``RHO1`` is the unramified character
(dimension 1, orthogonal), ``RHO_S`` a two-dimensional symplectic cuspidal,
``RHO_T`` a two-dimensional orthogonal one.  ``H(t)`` is the half-integer
t/2, so H(3) == 3/2.
"""

from __future__ import annotations

import itertools

import pytest

from jacquet.algebra import FormalSum, HalfInt
from jacquet.lattice import StandardLabel, TemperedLabel, tempered_sum
from jacquet.parameters import GroupType, Parameter, Summand
from jacquet.segments import RhoKey, Segment, SelfDualType

RHO1 = RhoKey("1", 1, SelfDualType.ORTHOGONAL)
RHO_S = RhoKey("s", 2, SelfDualType.SYMPLECTIC)
RHO_T = RhoKey("t", 2, SelfDualType.ORTHOGONAL)
RHO_N = RhoKey("n", 2, SelfDualType.NONE)


def H(twice: int) -> HalfInt:
    return HalfInt(twice)


def seg(rho: RhoKey, x_twice: int, y_twice: int) -> Segment:
    return Segment(rho, HalfInt(x_twice), HalfInt(y_twice))


def param(group: GroupType, rho: RhoKey, *sizes: int) -> Parameter:
    return Parameter(group, [Summand(rho, a) for a in sizes])


def so_param(rho: RhoKey, *sizes: int) -> Parameter:
    return param(GroupType.SO_ODD, rho, *sizes)


def pi(phi: Parameter, *signs: int) -> FormalSum:
    """pi(phi, signs) as a virtual representation (possibly zero)."""
    return tempered_sum(phi, tuple(signs))


def core(phi: Parameter, *signs: int) -> TemperedLabel:
    return TemperedLabel(phi, tuple(signs))


def std(segments, label: TemperedLabel) -> StandardLabel:
    return StandardLabel(segments, label)


def one_label(group: GroupType = GroupType.SO_ODD) -> TemperedLabel:
    """The unique representation of the rank-zero group."""
    return TemperedLabel(Parameter(group, []), ())


def pi_pair(rho: RhoKey, group: GroupType, c: int, d: int, eps: int) -> FormalSum:
    """Packet member of S_c + S_d with both signs eps, zero sizes dropped.

    With a dropped size the label survives only for eps = +1.
    """
    sizes = [a for a in (c, d) if a > 0]
    if eps == -1 and len(sizes) < 2:
        return FormalSum.zero()
    phi = param(group, rho, *sizes)
    return tempered_sum(phi, (eps,) * len(sizes))


def multisets(values, max_size: int):
    for size in range(max_size + 1):
        yield from itertools.combinations_with_replacement(values, size)


GOOD_FLAVORS = [
    # (group, rho, admissible small sizes)
    (GroupType.SO_ODD, RHO1, (2, 4, 6)),
    (GroupType.SO_ODD, RHO_S, (1, 3, 5)),
    (GroupType.SP, RHO1, (1, 3, 5)),
    (GroupType.SP, RHO_S, (2, 4, 6)),
]


@pytest.fixture(autouse=True)
def _quiet_sp_dimension_warnings():
    import warnings
    with warnings.catch_warnings():
        warnings.filterwarnings(
            "ignore", message="symplectic parameter has even total dimension")
        yield
