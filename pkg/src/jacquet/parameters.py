"""Discrete-series building blocks: parameters of good parity and their characters.

A parameter here is a multiset of summands (rho, a), each standing for the
irreducible bounded representation rho (x) S_a of the Weil-Deligne group,
all self-dual of the type matched to the group.  Characters live on the
enhanced two-group with one generator per summand copy; a character labels
an actual irreducible representation exactly when it takes equal values on
isomorphic copies and its total product of signs is +1.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .segments import RhoKey, SelfDualType

Signs = tuple[int, ...]


class GroupType(enum.Enum):
    SO_ODD = "SOodd"
    SP = "Sp"


class BadParityError(ValueError):
    def __init__(self, group: GroupType, rho: RhoKey, a: int):
        self.group, self.rho, self.a = group, rho, a
        super().__init__(
            f"summand ({rho.id}, {a}) is not of good parity for {group.value}: "
            f"rho is {rho.self_dual.value}, a = {a}")


class UnknownRhoError(KeyError):
    pass


def is_good_parity(group: GroupType, rho: RhoKey, a: int) -> bool:
    """Whether rho (x) S_a is self-dual of the same type as the dual group.

    Odd orthogonal groups have symplectic parameters, symplectic groups have
    orthogonal ones; rho (x) S_a is symplectic when exactly one factor is.
    """
    if a < 1:
        return False
    if rho.self_dual is SelfDualType.ORTHOGONAL:
        summand_symplectic = a % 2 == 0
    elif rho.self_dual is SelfDualType.SYMPLECTIC:
        summand_symplectic = a % 2 == 1
    else:
        return False
    if group is GroupType.SO_ODD:
        return summand_symplectic
    return not summand_symplectic


@dataclass(frozen=True, slots=True)
class Summand:
    rho: RhoKey
    a: int

    def sort_key(self):
        return (self.rho.sort_key(), self.a)

    @property
    def dim(self) -> int:
        return self.rho.dim * self.a


class Parameter:
    """A good-parity parameter: sorted multiset of summands plus the group type."""

    __slots__ = ("group", "summands")

    def __init__(self, group: GroupType, summands: Iterable[Summand]):
        self.group = group
        self.summands: tuple[Summand, ...] = tuple(
            sorted(summands, key=Summand.sort_key))

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    def multiplicity(self, rho: RhoKey, a: int) -> int:
        return sum(1 for s in self.summands if s.rho == rho and s.a == a)

    def contains(self, rho: RhoKey, a: int) -> bool:
        return self.multiplicity(rho, a) > 0

    def classes(self) -> list[tuple[Summand, int]]:
        """Distinct summands with multiplicities, in canonical order."""
        out: list[tuple[Summand, int]] = []
        for s in self.summands:
            if out and out[-1][0] == s:
                out[-1] = (s, out[-1][1] + 1)
            else:
                out.append((s, 1))
        return out

    def rho_keys(self) -> list[RhoKey]:
        seen: dict[RhoKey, None] = {}
        for s in self.summands:
            seen.setdefault(s.rho, None)
        return sorted(seen, key=RhoKey.sort_key)

    def a_values(self, rho: RhoKey) -> tuple[int, ...]:
        return tuple(s.a for s in self.summands if s.rho == rho)

    def sort_key(self):
        return (self.group.value, tuple(s.sort_key() for s in self.summands))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Parameter)
                and self.group == other.group
                and self.summands == other.summands)

    def __hash__(self) -> int:
        return hash((self.group, self.summands))

    def __str__(self) -> str:
        body = ",".join(f"({s.rho.id},{s.a})" for s in self.summands)
        return f"{self.group.value}[{body}]"

    def __repr__(self) -> str:
        return f"Parameter({self})"


def build_parameter(group: GroupType, raw: Sequence[tuple[str, int]],
                    rho_table: dict[str, RhoKey]) -> Parameter:
    """Validate a user-supplied summand list against the parity table.

    For symplectic groups the total dimension should be odd once the
    implicit determinant-balancing character is accounted for; multisets
    violating that only draw a warning since nothing downstream depends
    on it.
    """
    summands = []
    for rho_id, a in raw:
        if rho_id not in rho_table:
            raise UnknownRhoError(rho_id)
        rho = rho_table[rho_id]
        if a < 1 or not is_good_parity(group, rho, a):
            raise BadParityError(group, rho, a)
        summands.append(Summand(rho, a))
    phi = Parameter(group, summands)
    if group is GroupType.SP and phi.dim % 2 == 0 and phi.summands:
        warnings.warn(
            "symplectic parameter has even total dimension; the implicit "
            "determinant-balancing character is not modelled", stacklevel=2)
    return phi


def descends(phi: Parameter, signs: Signs) -> bool:
    """True when the sign vector is constant on isomorphic summand copies."""
    for i in range(1, len(phi.summands)):
        if phi.summands[i] == phi.summands[i - 1] and signs[i] != signs[i - 1]:
            return False
    return True


def central_value(signs: Signs) -> int:
    value = 1
    for s in signs:
        value *= s
    return value


def is_nonzero(phi: Parameter, signs: Signs) -> bool:
    """Whether the pair (phi, signs) labels an actual irreducible representation."""
    if len(signs) != len(phi.summands):
        raise ValueError("sign vector length does not match the summand list")
    return descends(phi, signs) and central_value(signs) == 1


def list_packet(phi: Parameter) -> list[Signs]:
    """All sign vectors labelling the members of the packet of phi.

    One free sign per distinct summand, subject to the product of all signs
    (with multiplicity) being +1.  The count is 2^(r-1) when some summand has
    odd multiplicity and 2^r otherwise, r the number of distinct summands.
    """
    classes = phi.classes()
    packet: list[Signs] = []
    for choice in _sign_choices(len(classes)):
        signs: list[int] = []
        total = 1
        for (summand, mult), s in zip(classes, choice):
            signs.extend([s] * mult)
            total *= s ** mult
        if total == 1:
            packet.append(tuple(signs))
    return packet


def _sign_choices(r: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for _ in range(r):
        out = [c + (s,) for c in out for s in (1, -1)]
    return out


def class_sign(phi: Parameter, signs: Signs, rho: RhoKey, a: int) -> int:
    for summand, s in zip(phi.summands, signs):
        if summand.rho == rho and summand.a == a:
            return s
    raise KeyError(f"({rho.id},{a}) not in parameter")


def remove_copies(phi: Parameter, signs: Signs, rho: RhoKey, a: int,
                  count: int) -> tuple[Parameter, Signs]:
    """Delete ``count`` copies of (rho, a), keeping the remaining signs."""
    pairs = list(zip(phi.summands, signs))
    kept: list[tuple[Summand, int]] = []
    remaining = count
    for summand, s in pairs:
        if remaining and summand.rho == rho and summand.a == a:
            remaining -= 1
            continue
        kept.append((summand, s))
    if remaining:
        raise ValueError(f"parameter has fewer than {count} copies of ({rho.id},{a})")
    return _rebuild(phi.group, kept)


def downgrade_copy(phi: Parameter, signs: Signs, rho: RhoKey,
                   a: int) -> tuple[Parameter, Signs]:
    """Replace one copy of (rho, a) by (rho, a-2), transporting its sign.

    At a = 2 the replacement is the zero representation: the summand and its
    sign disappear and the character simply restricts.
    """
    pairs = list(zip(phi.summands, signs))
    for i, (summand, s) in enumerate(pairs):
        if summand.rho == rho and summand.a == a:
            if a - 2 >= 1:
                pairs[i] = (Summand(rho, a - 2), s)
            else:
                del pairs[i]
            return _rebuild(phi.group, pairs)
    raise ValueError(f"({rho.id},{a}) not in parameter")


def add_copies(phi: Parameter, signs: Signs, additions: Sequence[tuple[RhoKey, int, int]]
               ) -> tuple[Parameter, Signs]:
    """Adjoin summands (rho, a) with prescribed signs."""
    pairs = list(zip(phi.summands, signs))
    for rho, a, s in additions:
        pairs.append((Summand(rho, a), s))
    return _rebuild(phi.group, pairs)


def _rebuild(group: GroupType, pairs: list[tuple[Summand, int]]
             ) -> tuple[Parameter, Signs]:
    pairs = sorted(pairs, key=lambda p: p[0].sort_key())
    phi = Parameter(group, (p[0] for p in pairs))
    return phi, tuple(p[1] for p in pairs)


def decompose_tempered_induction(rho: RhoKey, a: int, phi0: Parameter,
                                 signs0: Signs) -> list[tuple[Parameter, Signs]]:
    """Members of the packet of phi0 + (rho (x) S_a)^2 inside St(rho,a) x| pi0.

    The induced representation is semisimple; its summands are the packet
    members whose character restricts to the given one and kills the central
    element.  There are two when (rho, a) is new to phi0, one when it is
    already present (the new copies are then forced to carry the old sign).
    """
    if not is_good_parity(phi0.group, rho, a):
        raise BadParityError(phi0.group, rho, a)
    if not is_nonzero(phi0, signs0):
        raise ValueError("core character does not label a representation")
    if phi0.contains(rho, a):
        s = class_sign(phi0, signs0, rho, a)
        candidates = [s]
    else:
        candidates = [1, -1]
    out = []
    for s in candidates:
        phi, signs = add_copies(phi0, signs0, [(rho, a, s), (rho, a, s)])
        if is_nonzero(phi, signs):
            out.append((phi, signs))
    return out
