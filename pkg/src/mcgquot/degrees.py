"""Minimal permutation degrees and natural projective-module dimensions.

Only the three degree values the exclusion argument consumes are stored:
the rank-g symplectic and orthogonal groups over GF(2).  Everything else
answers ``None`` (unknown) rather than guessing.
"""

from __future__ import annotations

from . import catalog
from .catalog import GroupId, InvalidParameters


class NotClassical(ValueError):
    """Raised when a projective dimension is requested for a non-classical group."""


class GenusTooSmall(ValueError):
    """Raised for genus below 3, where the minimal-index theorem does not apply."""


_CLASSICAL = ("A", "2A", "B", "C", "D", "2D")


def natural_proj_dim(g: GroupId) -> int:
    """Dimension of the natural projective module of a classical adjoint group.

    A_n and 2A_n act on n+1 dimensions, B_n on 2n+1, and C_n, D_n, 2D_n on
    2n.  The rank-2 case B_2 = C_2 is taken in its symplectic form (4
    dimensions), which canonicalization enforces.
    """
    c = catalog.canonicalize(g)
    if c.kind != "lie" or c.family not in _CLASSICAL:
        raise NotClassical(f"{g} is not a classical group of Lie type")
    if c.family in ("A", "2A"):
        return c.rank + 1
    if c.family == "B":
        return 2 * c.rank + 1
    return 2 * c.rank


def mcg_min_index(g: int) -> int:
    """2^(g-1) (2^g - 1), the least index of a proper finite-index subgroup
    of the genus-g mapping class group (g >= 3)."""
    if g < 3:
        raise GenusTooSmall(f"the minimal-index bound needs genus >= 3, got {g}")
    return (1 << (g - 1)) * ((1 << g) - 1)


def min_perm_degree(g: GroupId, genus: int) -> int | None:
    """Minimal faithful permutation degree, for the three relevant families.

    C_genus(2) and D_genus(2) act minimally on 2^(genus-1) (2^genus - 1)
    points, 2D_genus(2) on one point fewer.  All other groups return None
    (unknown): the full degree table is out of scope.

    The family point is matched before canonical folding, so 2D(3,2) at
    genus 3 answers 27 even though it canonicalizes to C(2,3); D(3,2) is
    alternating Alt(8) and answers None (its minimal degree is 8, not the
    rank-3 interval form).
    """
    if genus < 3:
        raise GenusTooSmall(f"degrees are tabulated for genus >= 3, got {genus}")
    if g.kind != "lie" or g.q != 2 or g.rank != genus or g.version != "adjoint":
        return None
    base = (1 << (genus - 1)) * ((1 << genus) - 1)
    family = "C" if (g.family == "B" and genus >= 2) else g.family
    if family == "C":
        return base
    if family == "D" and genus >= 4:
        return base
    if family == "2D":
        return base - 1
    return None
