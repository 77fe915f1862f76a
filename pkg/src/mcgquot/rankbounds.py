"""Upper bounds on p-ranks of Lie-type groups via cyclotomic multiplicities.

For an odd prime p coprime to q, the p-rank of the adjoint group (largest n
with an elementary abelian p^n subgroup) is bounded by the multiplicity of
the cyclotomic polynomial Phi_{m0} in the universal order polynomial, where
m0 is the multiplicative order of q mod p.  For the Suzuki-Ree families the
order is factored as a formal polynomial in sqrt(q), and the relevant
multiplicity is the total one contributed by Phi_{m0}(q) under q = s^2.

The bound never exceeds the untwisted rank, because no factor x^n - w of
the stored shapes is divisible by the square of a cyclotomic.

The sporadic rank filter is data-driven: the published rank tables single
out exactly eleven sporadic groups whose 3- or 4-rank reaches their
threshold genus; every other sporadic group is excluded by rank alone.
"""

from __future__ import annotations

from . import catalog
from .catalog import GroupId, SporadicRecord


class NotCoprime(ValueError):
    """Raised when the base and modulus share a factor."""


class InvalidPrime(ValueError):
    """Raised for p = 2 or p equal to the defining characteristic."""


def multiplicative_order(q: int, p: int) -> int:
    """Least m >= 1 with q^m = 1 mod p."""
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if q % p == 0:
        raise NotCoprime(f"{q} and {p} are not coprime")
    m, acc = 1, q % p
    while acc != 1:
        acc = acc * q % p
        m += 1
    return m


def p_rank_upper_bound(g: GroupId, p: int) -> int:
    """Upper bound on the p-rank of an adjoint Lie-type group.

    Returns the multiplicity of the cyclotomic polynomial attached to the
    multiplicative order of q mod p in the universal order shape.  Refuses
    p = 2 and p dividing q; the underlying lemma assumes odd p coprime to
    the characteristic.
    """
    if g.kind != "lie" or g.version != "adjoint":
        raise ValueError("p-rank bound applies to adjoint Lie-type groups")
    if p == 2 or not catalog.is_prime(p):
        raise InvalidPrime(f"need an odd prime, got {p}")
    if g.q % p == 0:
        raise InvalidPrime(f"{p} is the defining characteristic of {g}")
    m0 = multiplicative_order(g.q, p)
    shape = catalog.rank_bound_shape(g.family, g.rank)
    factors = shape.cyclotomic_factorization()
    if g.family in ("2B2", "2G2", "2F4"):
        # Under q = s^2: Phi_d(q) = Phi_d(s) * Phi_2d(s) for odd d, and
        # Phi_2d(s) alone for even d.
        if m0 % 2 == 1:
            return factors.multiplicity(m0) + factors.multiplicity(2 * m0)
        return factors.multiplicity(2 * m0)
    return factors.multiplicity(m0)


def sporadic_rank_excluded(record: SporadicRecord | str) -> bool:
    """True iff all m-ranks (m >= 3) of the group stay below its threshold genus.

    Ground truth is membership in the eleven-row centralizer table: rows
    absent from it are excluded purely by the rank criterion.
    """
    if isinstance(record, str):
        record = catalog.sporadic_table()[record]
    return record.g_k is None
