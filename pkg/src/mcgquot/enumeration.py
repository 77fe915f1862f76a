"""Enumerate the finite non-abelian simple groups up to an order bound.

Every family is walked outward (alternating degree, Lie rank, field size)
until its orders exceed the bound; termination leans on strict monotonicity
of the order in rank and in q, which is asserted while iterating rather
than assumed.  Results are canonicalized, deduplicated and sorted by
(order, canonical name), so coincidences such as B_n(2^m) = C_n(2^m) or
A_3(2) = Alt(8) never produce duplicates, while the genuinely distinct
order-20160 pair Alt(8) / A(2,4) keeps both members.

Family sub-enumerations are independent and the final merge is a
deterministic sort, so the result does not depend on traversal order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import catalog
from .catalog import GroupId

# Beyond this bound the rank-1 family A_1(q) alone has on the order of
# pi(cbrt(bound)) members, which stops being a listable result.
ENUMERATION_BOUND_LIMIT = 10**18


class BoundTooLarge(ValueError):
    """Raised when an enumeration bound exceeds the supported range."""


@dataclass(frozen=True)
class EnumerationResult:
    """Sorted, deduplicated list of (group, order) with order <= bound."""

    bound: int
    groups: tuple[tuple[GroupId, int], ...]

    def ids(self) -> tuple[GroupId, ...]:
        return tuple(g for g, _ in self.groups)


def prime_powers_up_to(limit: int) -> list[int]:
    """All prime powers q with 2 <= q <= limit, ascending."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = b"\x00" * len(range(p * p, limit + 1, p))
    powers = []
    for p in range(2, limit + 1):
        if sieve[p]:
            v = p
            while v <= limit:
                powers.append(v)
                if v > limit // p:
                    break
                v *= p
    powers.sort()
    return powers


def prime_powers_ascending():
    """Unbounded ascending prime-power generator (segmented sieve growth)."""
    limit, emitted = 64, 0
    while True:
        powers = prime_powers_up_to(limit)
        yield from powers[emitted:]
        emitted = len(powers)
        limit *= 4


def _valid_q(family: str, q: int) -> bool:
    decomp = catalog.prime_power_decomposition(q)
    if decomp is None:
        return False
    p, k = decomp
    char = {"2B2": 2, "2F4": 2, "2G2": 3}.get(family)
    if char is not None:
        return p == char and k % 2 == 1
    return True


def _family_min_q(family: str) -> int:
    return 3 if family == "2G2" else 2


def _family_members_below(family: str, bound: int):
    """Yield (GroupId, adjoint order) for one Lie family, asserting monotonicity."""
    fixed = family in catalog.FIXED_RANK_FAMILIES
    rank = catalog.FIXED_RANK_FAMILIES[family] if fixed else catalog._ENUM_MIN_RANK[family]
    prev_min_order = 0
    while True:
        shape = catalog.universal_order_shape(family, rank)
        min_universal = shape.evaluate(_family_min_q(family))
        assert min_universal > prev_min_order, "order must grow with rank"
        prev_min_order = min_universal
        # The center divisor never exceeds rank + 1, so once the universal
        # order clears that slack the whole rank is out of range.
        if min_universal > bound * (rank + 1):
            return
        prev_order = 0
        for q in prime_powers_ascending():
            if not _valid_q(family, q):
                continue
            universal = shape.evaluate(q)
            assert universal > prev_order, "order must grow with q"
            prev_order = universal
            if universal > bound * (rank + 1):
                break
            adjoint = universal // catalog.center_divisor(family, rank, q)
            if adjoint > bound:
                continue
            gid = GroupId.lie(family, rank, q)
            if catalog.is_simple(gid):
                yield gid, adjoint
        if fixed:
            return
        rank += 1


def enumerate_simple_below(bound: int) -> EnumerationResult:
    """All finite non-abelian simple groups of order <= bound.

    Covers alternating groups, all sixteen Lie families (adjoint versions,
    non-simple parameter points skipped), the 26 sporadic groups and the
    Tits group; everything canonicalized and deduplicated.
    """
    if bound < 60:
        raise ValueError(f"bound must be at least 60 = |Alt(5)|, got {bound}")
    if bound > ENUMERATION_BOUND_LIMIT:
        raise BoundTooLarge(
            f"bound {bound} exceeds the supported enumeration range "
            f"{ENUMERATION_BOUND_LIMIT}"
        )
    found: dict[GroupId, int] = {}

    n = 5
    while math.factorial(n) // 2 <= bound:
        found[GroupId.alternating(n)] = math.factorial(n) // 2
        n += 1

    for family in catalog.LIE_FAMILIES:
        for gid, value in _family_members_below(family, bound):
            canonical = catalog.canonicalize(gid)
            existing = found.setdefault(canonical, value)
            assert existing == value == catalog.order(canonical)

    for name in catalog.sporadic_names():
        record = catalog.sporadic_table()[name]
        if record.order <= bound:
            found[GroupId.sporadic(name)] = record.order

    if catalog.TITS_ORDER <= bound:
        found[GroupId.tits()] = catalog.order(GroupId.tits())

    ordered = tuple(sorted(found.items(), key=lambda kv: (kv[1], catalog.format_group_name(kv[0]))))
    return EnumerationResult(bound, ordered)


def g_of(g: GroupId) -> int:
    """The least genus with order(g) < |Sp_2g(2)|."""
    value = catalog.order(g)
    genus = 1
    while value >= catalog.sp_order(genus):
        genus += 1
    return genus
