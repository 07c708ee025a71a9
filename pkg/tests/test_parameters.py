import itertools

import pytest

from conftest import GOOD_FLAVORS, RHO1, RHO_S, RHO_T, multisets, param, so_param
from jacquet.parameters import (BadParityError, GroupType, Parameter, Summand,
                                UnknownRhoError, build_parameter,
                                decompose_tempered_induction, descends,
                                is_good_parity, is_nonzero, list_packet)

RHOS = {"1": RHO1, "s": RHO_S, "t": RHO_T}


def test_build_parameter_examples():
    phi = build_parameter(GroupType.SO_ODD, [("1", 2), ("1", 4), ("1", 4)], RHOS)
    assert phi.dim == 10
    assert [s.a for s in phi.summands] == [2, 4, 4]

    phi = build_parameter(GroupType.SO_ODD, [("1", 2), ("1", 4), ("1", 6)], RHOS)
    assert phi.dim == 12

    with pytest.raises(BadParityError):
        build_parameter(GroupType.SO_ODD, [("1", 3)], RHOS)
    with pytest.raises(UnknownRhoError):
        build_parameter(GroupType.SO_ODD, [("x", 2)], RHOS)


def test_parity_table():
    # odd orthogonal groups need symplectic summands, symplectic groups orthogonal ones
    assert is_good_parity(GroupType.SO_ODD, RHO1, 2)
    assert not is_good_parity(GroupType.SO_ODD, RHO1, 3)
    assert is_good_parity(GroupType.SO_ODD, RHO_S, 3)
    assert not is_good_parity(GroupType.SO_ODD, RHO_S, 2)
    assert is_good_parity(GroupType.SP, RHO1, 3)
    assert not is_good_parity(GroupType.SP, RHO1, 2)
    assert is_good_parity(GroupType.SP, RHO_S, 2)
    assert not is_good_parity(GroupType.SP, rho=RHO_T, a=2)
    from jacquet.segments import RhoKey, SelfDualType
    assert not is_good_parity(GroupType.SO_ODD, RhoKey("n", 2, SelfDualType.NONE), 2)


def test_sp_even_dimension_warns():
    import warnings
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        build_parameter(GroupType.SP, [("1", 1), ("1", 3)], RHOS)
    assert any("determinant" in str(w.message) for w in caught)


def test_packet_examples():
    phi = so_param(RHO1, 2, 4, 4)
    packet = list_packet(phi)
    assert packet == [(1, 1, 1), (1, -1, -1)]

    phi = so_param(RHO1, 2, 4, 6)
    assert len(list_packet(phi)) == 4

    phi = so_param(RHO1, 4)
    assert list_packet(phi) == [(1,)]


def test_packet_size_law():
    """2^(r-1) members when some multiplicity is odd, 2^r when all are even."""
    for group, rho, sizes in GOOD_FLAVORS:
        for combo in multisets(sizes, 4):
            if not combo:
                continue
            phi = param(group, rho, *combo)
            r = len(phi.classes())
            if all(mult % 2 == 0 for _, mult in phi.classes()):
                expected = 2 ** r
            else:
                expected = 2 ** (r - 1)
            assert len(list_packet(phi)) == expected, str(phi)


def test_is_nonzero_examples():
    phi = so_param(RHO1, 2, 4, 4)
    assert not is_nonzero(phi, (1, 1, -1))    # does not descend
    assert not is_nonzero(phi, (-1, 1, 1))    # central value -1
    phi = so_param(RHO1, 2, 4, 6)
    assert is_nonzero(phi, (-1, 1, -1))


def test_is_nonzero_reindexing_invariance():
    phi = so_param(RHO1, 4, 2, 4)  # builder sorts; copies are interchangeable
    assert phi.summands == so_param(RHO1, 2, 4, 4).summands
    assert is_nonzero(phi, (1, 1, 1))


def test_decompose_examples():
    # already-present summand: a single extension
    phi0 = so_param(RHO1, 2, 4)
    members = decompose_tempered_induction(RHO1, 4, phi0, (1, 1))
    assert len(members) == 1
    phi, signs = members[0]
    assert [s.a for s in phi.summands] == [2, 4, 4, 4] and signs == (1, 1, 1, 1)

    # absent summand: two extensions split by the new sign
    phi0 = so_param(RHO1, 4, 4)
    for eps in (1, -1):
        members = decompose_tempered_induction(RHO1, 2, phi0, (eps, eps))
        assert len(members) == 2
        new_signs = sorted(m[1][0] for m in members)
        assert new_signs == [-1, 1]

    # empty core: both constant sign patterns satisfy the central condition
    empty = so_param(RHO1)
    members = decompose_tempered_induction(RHO1, 2, empty, ())
    assert len(members) == 2


def test_decompose_always_one_or_two_and_nonzero():
    for group, rho, sizes in GOOD_FLAVORS[:2]:
        for combo in multisets(sizes, 2):
            phi0 = param(group, rho, *combo)
            for signs in list_packet(phi0):
                for a in sizes:
                    members = decompose_tempered_induction(rho, a, phi0, signs)
                    expected = 1 if phi0.contains(rho, a) else 2
                    assert len(members) == expected
                    for phi, s in members:
                        assert is_nonzero(phi, s)


def test_decompose_rejects_bad_parity():
    with pytest.raises(BadParityError):
        decompose_tempered_induction(RHO1, 3, so_param(RHO1, 2), (1,))
