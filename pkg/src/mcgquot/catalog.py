"""Identification and exact orders of the finite simple groups.

The catalog knows the four CFSG families: cyclic groups of prime order,
alternating groups, the sixteen families of groups of Lie type (adjoint and
universal versions), the 26 sporadic groups, and the Tits group.  Orders of
Lie-type groups are stored as cyclotomic factorizations of the universal
order polynomial q^N * prod (q^n_i - w_i) and evaluated exactly; adjoint
orders divide out the center.

Exceptional isomorphisms between small members of different families are
folded by :func:`canonicalize`, which picks one representative per
isomorphism class (alternating form preferred, then the lexicographically
earlier family point).

The whole catalog is immutable data built on import; every query is a pure
function, so the module is thread-safe without locks.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from importlib import resources

from .intpoly import CycloFactorization, IntPoly, factor_into_cyclotomics


class InvalidParameters(ValueError):
    """Raised for group parameters outside the catalog's domain."""


class UnknownGroup(KeyError):
    """Raised for sporadic names not in the table."""


class GroupParseError(ValueError):
    """Raised when a group name does not parse; carries the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"cannot parse {text!r} at position {pos}: {message}")
        self.text = text
        self.pos = pos


class DataIntegrityError(ValueError):
    """Raised when the embedded sporadic table fails a cross-check."""


# ---------------------------------------------------------------------------
# primality helpers (deterministic for everything we ever see)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _int_nth_root(x: int, k: int) -> int:
    if k == 1:
        return x
    r = int(round(x ** (1.0 / k)))
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k and p prime, or None."""
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        r = _int_nth_root(q, k)
        if r**k == q and is_prime(r):
            return r, k
    return None


# ---------------------------------------------------------------------------
# Lie families

VARIABLE_RANK_FAMILIES = ("A", "2A", "B", "C", "D", "2D")
FIXED_RANK_FAMILIES = {
    "G2": 2, "F4": 4, "E6": 6, "2E6": 6, "E7": 7, "E8": 8,
    "2B2": 2, "2G2": 2, "2F4": 4, "3D4": 4,
}
LIE_FAMILIES = VARIABLE_RANK_FAMILIES + tuple(FIXED_RANK_FAMILIES)

# Minimum rank accepted per variable-rank family.  D_3/2D_3 are accepted as
# aliases of A_3/2A_3 (same Dynkin diagram) because the centralizer tables
# use the 2D_3 name; enumeration starts D-type at rank 4.
_MIN_RANK = {"A": 1, "2A": 2, "B": 2, "C": 2, "D": 3, "2D": 3}
_ENUM_MIN_RANK = {"A": 1, "2A": 2, "B": 2, "C": 2, "D": 4, "2D": 4}

# BN-pair (relative) rank of the twisted exceptional families; equals the
# untwisted rank for everything else.  This is the rank the parabolic /
# centralizer descent argument sees.
_BN_RANK = {"2B2": 1, "2G2": 1, "2F4": 2, "3D4": 2, "2E6": 4}

# Suzuki-Ree constraints: field must be an odd power of the listed prime.
_ODD_POWER_CHAR = {"2B2": 2, "2F4": 2, "2G2": 3}

_PHI3_OF_X4 = IntPoly((1, 0, 0, 0, 1, 0, 0, 0, 1))  # x^8 + x^4 + 1 = (x^4-w)(x^4-w^2), w^3=1


def _exponents(family: str, rank: int) -> tuple[int, tuple[IntPoly, ...]]:
    """q-power and factor list of the universal order, as polynomials in q."""
    n = rank
    if family == "A":
        return n * (n + 1) // 2, tuple(IntPoly.x_power_minus(i, 1) for i in range(2, n + 2))
    if family == "2A":
        return n * (n + 1) // 2, tuple(
            IntPoly.x_power_minus(i, (-1) ** i) for i in range(2, n + 2)
        )
    if family in ("B", "C"):
        return n * n, tuple(IntPoly.x_power_minus(2 * i, 1) for i in range(1, n + 1))
    if family == "D":
        return n * (n - 1), (IntPoly.x_power_minus(n, 1),) + tuple(
            IntPoly.x_power_minus(2 * i, 1) for i in range(1, n)
        )
    if family == "2D":
        return n * (n - 1), (IntPoly.x_power_minus(n, -1),) + tuple(
            IntPoly.x_power_minus(2 * i, 1) for i in range(1, n)
        )
    if family == "G2":
        return 6, (IntPoly.x_power_minus(2, 1), IntPoly.x_power_minus(6, 1))
    if family == "F4":
        return 24, tuple(IntPoly.x_power_minus(d, 1) for d in (2, 6, 8, 12))
    if family == "E6":
        return 36, tuple(IntPoly.x_power_minus(d, 1) for d in (2, 5, 6, 8, 9, 12))
    if family == "2E6":
        return 36, tuple(
            IntPoly.x_power_minus(d, w)
            for d, w in ((2, 1), (5, -1), (6, 1), (8, 1), (9, -1), (12, 1))
        )
    if family == "E7":
        return 63, tuple(IntPoly.x_power_minus(d, 1) for d in (2, 6, 8, 10, 12, 14, 18))
    if family == "E8":
        return 120, tuple(IntPoly.x_power_minus(d, 1) for d in (2, 8, 12, 14, 18, 20, 24, 30))
    if family == "3D4":
        return 12, (_PHI3_OF_X4, IntPoly.x_power_minus(6, 1), IntPoly.x_power_minus(2, 1))
    if family == "2B2":
        return 2, (IntPoly.x_power_minus(2, -1), IntPoly.x_power_minus(1, 1))
    if family == "2G2":
        return 3, (IntPoly.x_power_minus(3, -1), IntPoly.x_power_minus(1, 1))
    if family == "2F4":
        return 12, tuple(
            IntPoly.x_power_minus(d, w) for d, w in ((6, -1), (4, 1), (3, -1), (1, 1))
        )
    raise InvalidParameters(f"unknown Lie family {family!r}")


def _sqrt_form_exponents(family: str) -> tuple[int, tuple[IntPoly, ...]]:
    """Suzuki-Ree order shapes written in s = sqrt(q); used for rank bounds."""
    if family == "2B2":
        return 4, (IntPoly.x_power_minus(4, -1), IntPoly.x_power_minus(2, 1))
    if family == "2G2":
        return 6, (IntPoly.x_power_minus(6, -1), IntPoly.x_power_minus(2, 1))
    if family == "2F4":
        return 24, tuple(
            IntPoly.x_power_minus(d, w) for d, w in ((12, -1), (8, 1), (6, -1), (2, 1))
        )
    raise InvalidParameters(f"{family} has no sqrt-convention order form")


@dataclass(frozen=True)
class OrderShape:
    """Universal order as q^q_power times the given polynomial factors.

    ``factor_count`` counts factors of the canonical x^n - w form (the degree-8
    composite in triality D4 splits as two conjugate factors) and always
    equals the untwisted rank.
    """

    family: str
    rank: int
    q_power: int
    atoms: tuple[IntPoly, ...]
    factor_count: int

    def cyclotomic_factorization(self) -> CycloFactorization:
        fact = CycloFactorization(self.q_power, ())
        for atom in self.atoms:
            fact = fact.merged_with(factor_into_cyclotomics(atom))
        return fact

    def evaluate(self, q: int) -> int:
        value = q**self.q_power
        for atom in self.atoms:
            value *= atom.evaluate(q)
        return value


@functools.cache
def universal_order_shape(family: str, rank: int) -> OrderShape:
    """The universal-version order shape as a polynomial in q."""
    _check_family_rank(family, rank)
    q_power, atoms = _exponents(family, rank)
    count = len(atoms) + (1 if family == "3D4" else 0)
    return OrderShape(family, rank, q_power, atoms, count)


@functools.cache
def rank_bound_shape(family: str, rank: int) -> OrderShape:
    """Order shape in the variable the rank-bound lemma factors over.

    For the Suzuki-Ree families this is the formal polynomial in sqrt(q);
    for everything else it coincides with the universal shape in q.
    """
    if family in _ODD_POWER_CHAR:
        _check_family_rank(family, rank)
        q_power, atoms = _sqrt_form_exponents(family)
        return OrderShape(family, rank, q_power, atoms, len(atoms))
    return universal_order_shape(family, rank)


def _check_family_rank(family: str, rank: int) -> None:
    if family in FIXED_RANK_FAMILIES:
        if rank != FIXED_RANK_FAMILIES[family]:
            raise InvalidParameters(f"{family} has rank {FIXED_RANK_FAMILIES[family]}, not {rank}")
    elif family in _MIN_RANK:
        if rank < _MIN_RANK[family]:
            raise InvalidParameters(f"{family} requires rank >= {_MIN_RANK[family]}, got {rank}")
    else:
        raise InvalidParameters(f"unknown Lie family {family!r}")


def bn_rank(family: str, rank: int) -> int:
    """Relative (BN-pair) rank; differs from ``rank`` only for twisted families."""
    return _BN_RANK.get(family, rank)


def center_divisor(family: str, rank: int, q: int) -> int:
    """|universal| / |adjoint| for the given family point."""
    _validate_lie(family, rank, q)
    if family == "A":
        return math.gcd(rank + 1, q - 1)
    if family == "2A":
        return math.gcd(rank + 1, q + 1)
    if family in ("B", "C", "E7"):
        return math.gcd(2, q - 1)
    if family == "D":
        return math.gcd(4, q**rank - 1)
    if family == "2D":
        return math.gcd(4, q**rank + 1)
    if family == "E6":
        return math.gcd(3, q - 1)
    if family == "2E6":
        return math.gcd(3, q + 1)
    return 1


def _validate_lie(family: str, rank: int, q: int) -> None:
    _check_family_rank(family, rank)
    decomp = prime_power_decomposition(q)
    if decomp is None:
        raise InvalidParameters(f"field size {q} is not a prime power")
    p, k = decomp
    if family in _ODD_POWER_CHAR:
        if p != _ODD_POWER_CHAR[family] or k % 2 == 0:
            raise InvalidParameters(
                f"{family} is defined only over fields of odd-exponent order in characteristic "
                f"{_ODD_POWER_CHAR[family]}; got {q}"
            )


# ---------------------------------------------------------------------------
# group identifiers

@dataclass(frozen=True)
class GroupId:
    """Algebraic identifier of a group from the classification.

    Use the constructors :meth:`cyclic`, :meth:`alternating`, :meth:`lie`,
    :meth:`sporadic`, :meth:`tits`.  Structural equality of canonicalized
    ids is isomorphism on the catalog's domain.
    """

    kind: str
    n: int = 0
    family: str = ""
    rank: int = 0
    q: int = 0
    version: str = ""
    name: str = ""

    @staticmethod
    def cyclic(p: int) -> "GroupId":
        if not is_prime(p):
            raise InvalidParameters(f"cyclic simple groups have prime order, got {p}")
        return GroupId(kind="cyclic", n=p)

    @staticmethod
    def alternating(n: int) -> "GroupId":
        if n < 3:
            raise InvalidParameters(f"alternating degree must be >= 3, got {n}")
        return GroupId(kind="alternating", n=n)

    @staticmethod
    def lie(family: str, rank: int, q: int, version: str = "adjoint") -> "GroupId":
        _validate_lie(family, rank, q)
        if version not in ("adjoint", "universal"):
            raise InvalidParameters(f"version must be adjoint or universal, got {version!r}")
        return GroupId(kind="lie", family=family, rank=rank, q=q, version=version)

    @staticmethod
    def sporadic(name: str) -> "GroupId":
        if name not in _EXPECTED_NAMES:
            raise UnknownGroup(name)
        return GroupId(kind="sporadic", name=name)

    @staticmethod
    def tits() -> "GroupId":
        return GroupId(kind="tits")

    def __str__(self) -> str:
        return format_group_name(self)


# Adjoint points that fail to be simple (small-field degenerations).
_NON_SIMPLE_ADJOINT = {
    ("A", 1, 2), ("A", 1, 3), ("C", 2, 2), ("2A", 2, 2),
    ("G2", 2, 2), ("2B2", 2, 2), ("2G2", 2, 3), ("2F4", 4, 2),
}

# Folding rules between isomorphic family points, applied to adjoint ids
# until a fixed point is reached.  Alternating representatives win; the
# rank-2 symplectic form C_2 is preferred for the B_2 = C_2 diagram, and
# rank-1 PSL is preferred over its aliases.
_LIE_FOLDS: dict[tuple[str, int, int], GroupId] = {}


def _install_folds() -> None:
    _LIE_FOLDS[("A", 1, 4)] = GroupId.alternating(5)
    _LIE_FOLDS[("A", 1, 5)] = GroupId.alternating(5)
    _LIE_FOLDS[("A", 1, 9)] = GroupId.alternating(6)
    _LIE_FOLDS[("A", 2, 2)] = GroupId.lie("A", 1, 7)
    _LIE_FOLDS[("A", 3, 2)] = GroupId.alternating(8)
    _LIE_FOLDS[("2A", 3, 2)] = GroupId.lie("C", 2, 3)


_install_folds()


def canonicalize(g: GroupId) -> GroupId:
    """Unique representative of g's isomorphism class."""
    if g.kind != "lie":
        return g
    family, rank, q, version = g.family, g.rank, g.q, g.version
    if version == "universal":
        if center_divisor(family, rank, q) == 1:
            version = "adjoint"
        else:
            return g  # proper covers are their own class
    while True:
        if family == "B" and rank == 2:
            family = "C"  # identical Dynkin diagrams
            continue
        if family == "B" and rank >= 3 and q % 2 == 0:
            family = "C"  # B_n(2^m) and C_n(2^m) are isomorphic
            continue
        if family == "D" and rank == 3:
            family = "A"  # D_3 = A_3 diagram
            continue
        if family == "2D" and rank == 3:
            family = "2A"
            continue
        fold = _LIE_FOLDS.get((family, rank, q))
        if fold is None:
            return GroupId(kind="lie", family=family, rank=rank, q=q, version=version)
        if fold.kind != "lie":
            return fold
        family, rank, q = fold.family, fold.rank, fold.q


def is_simple(g: GroupId) -> bool:
    """Simplicity per the classification, with the small exceptional points."""
    if g.kind == "cyclic":
        return True
    if g.kind == "alternating":
        return g.n >= 5
    if g.kind in ("sporadic", "tits"):
        return True
    c = canonicalize(g)
    if c.kind != "lie":
        return is_simple(c)
    if c.version == "universal":
        return False  # center_divisor > 1, a proper central extension
    return (c.family, c.rank, c.q) not in _NON_SIMPLE_ADJOINT


def order(g: GroupId) -> int:
    """Exact order of the group."""
    if g.kind == "cyclic":
        return g.n
    if g.kind == "alternating":
        return math.factorial(g.n) // 2
    if g.kind == "sporadic":
        return sporadic_table()[g.name].order
    if g.kind == "tits":
        return universal_order_shape("2F4", 4).evaluate(2) // 2
    shape = universal_order_shape(g.family, g.rank)
    value = shape.evaluate(g.q)
    if g.version == "adjoint":
        value //= center_divisor(g.family, g.rank, g.q)
    return value


def sp_order(g: int) -> int:
    """|Sp_2g(2)| = 2^(g^2) * prod_{i=1..g} (2^(2i) - 1)."""
    if g < 1:
        raise InvalidParameters(f"genus must be >= 1, got {g}")
    value = 1 << (g * g)
    for i in range(1, g + 1):
        value *= (1 << (2 * i)) - 1
    return value


# Reference decimal strings for the |Sp_2g(2)| column, g = 2..10, transcribed
# digit-for-digit from the published table of orders.
SP_TABLE_ROWS: dict[int, str] = {
    2: "720",
    3: "1451520",
    4: "47377612800",
    5: "24815256521932800",
    6: "208114637736580743168000",
    7: "27930968965434591767112450048000",
    8: "59980383884075203672726385914533642240000",
    9: "2060902435720151186326095525680721766346957783040000",
    10: "1132992015386677099994486205757869431795095310094129168384000000",
}

# Independently known order of the Tits group, cross-checked against
# |2F4(2)| / 2 by the verification suite.
TITS_ORDER = 17971200


# ---------------------------------------------------------------------------
# sporadic table

@dataclass(frozen=True)
class SporadicRecord:
    """One row of the sporadic table.

    ``g_k`` and ``centralizer_factors`` are present exactly for the eleven
    groups whose 3- or 4-rank reaches g_k; the factors are the non-abelian
    simple factors of centralizers of elements of order 2 or 3.
    """

    name: str
    order: int
    factorization: tuple[tuple[int, int], ...]
    g_k: int | None
    centralizer_factors: tuple[GroupId, ...] | None


_EXPECTED_NAMES = (
    "M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL", "He",
    "Ru", "Suz", "ON", "Co3", "Co2", "Fi22", "HN", "Ly", "Th", "Fi23",
    "Co1", "J4", "Fi24", "B", "M",
)

DISPLAY_NAMES = {"Fi24": "Fi24'", "ON": "O'N"}


def _parse_factorization(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for term in text.split():
        base, _, exp = term.partition("^")
        out.append((int(base), int(exp) if exp else 1))
    return tuple(out)


def load_sporadic_table(source_text: str) -> dict[str, SporadicRecord]:
    """Parse and cross-check the sporadic data table.

    Raises DataIntegrityError on any inconsistency: wrong row count, unknown
    name, non-prime factor base, factorization product differing from the
    decimal order, or non-ascending orders.
    """
    records: dict[str, SporadicRecord] = {}
    previous_order = 0
    for raw in source_text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 5:
            raise DataIntegrityError(f"malformed row: {raw!r}")
        name, order_text, fact_text, gk_text, factors_text = parts
        if name in records:
            raise DataIntegrityError(f"duplicate sporadic name {name}")
        value = int(order_text)
        factorization = _parse_factorization(fact_text)
        product = 1
        for base, exp in factorization:
            if not is_prime(base):
                raise DataIntegrityError(f"{name}: factor base {base} is not prime")
            product *= base**exp
        if product != value:
            raise DataIntegrityError(
                f"{name}: factorization product {product} != stated order {value}"
            )
        if value <= previous_order:
            raise DataIntegrityError(f"{name}: orders must be strictly ascending")
        previous_order = value
        g_k = None if gk_text == "-" else int(gk_text)
        factors: tuple[GroupId, ...] | None = None
        if factors_text != "-":
            factors = tuple(parse_group_name(tok) for tok in factors_text.split())
        if (g_k is None) != (factors is None):
            raise DataIntegrityError(f"{name}: gK and factor list must appear together")
        records[name] = SporadicRecord(name, value, factorization, g_k, factors)
    if tuple(records) != _EXPECTED_NAMES:
        raise DataIntegrityError(
            f"expected the 26 sporadic groups in table order, got {tuple(records)}"
        )
    if sum(1 for r in records.values() if r.g_k is not None) != 11:
        raise DataIntegrityError("exactly 11 rows must carry rank data")
    return records


@functools.cache
def sporadic_table() -> dict[str, SporadicRecord]:
    text = resources.files("mcgquot").joinpath("data/sporadic_groups.txt").read_text()
    return load_sporadic_table(text)


def sporadic_names() -> tuple[str, ...]:
    return _EXPECTED_NAMES


# ---------------------------------------------------------------------------
# name grammar

_NAME_RE = re.compile(r"[23]?[A-Za-z][A-Za-z0-9]*'?")

_FAMILY_TOKENS = set(LIE_FAMILIES)


def parse_group_name(text: str) -> GroupId:
    """Parse the CLI group grammar.

    Accepted forms: ``Alt(n)``, ``Sp(2g,q)`` (sugar for ``C(g,q)``), variable
    rank families ``A(n,q) 2A(n,q) B(n,q) C(n,q) D(n,q) 2D(n,q)``, fixed-rank
    families ``G2(q) 2G2(q) F4(q) 2F4(q) E6(q) 2E6(q) E7(q) E8(q) 2B2(q)
    3D4(q)``, bare sporadic names (``M11`` ... ``M``; ``Fi24'`` and ``O'N``
    are accepted aliases), and ``Tits``.
    """
    s = text.strip()
    match = _NAME_RE.match(s)
    if not match:
        raise GroupParseError(text, 0, "expected a group name")
    head = match.group(0)
    rest = s[match.end():]
    if not rest:
        if head == "Tits":
            return GroupId.tits()
        name = {"Fi24'": "Fi24", "O'N": "ON"}.get(head, head)
        if name in _EXPECTED_NAMES:
            return GroupId.sporadic(name)
        raise GroupParseError(text, 0, f"unknown group name {head!r}")
    args_match = re.fullmatch(r"\((\d+(?:,\d+)*)\)", rest)
    if not args_match:
        raise GroupParseError(text, match.end(), "expected parenthesized integer arguments")
    args = [int(a) for a in args_match.group(1).split(",")]
    try:
        if head == "Alt":
            if len(args) != 1:
                raise GroupParseError(text, match.end(), "Alt takes one argument")
            return GroupId.alternating(args[0])
        if head == "Sp":
            if len(args) != 2:
                raise GroupParseError(text, match.end(), "Sp takes (2g, q)")
            if args[0] % 2 or args[0] < 4:
                raise GroupParseError(text, match.end(), "Sp dimension must be even and >= 4")
            return GroupId.lie("C", args[0] // 2, args[1])
        if head in FIXED_RANK_FAMILIES:
            if len(args) != 1:
                raise GroupParseError(text, match.end(), f"{head} takes one argument (q)")
            return GroupId.lie(head, FIXED_RANK_FAMILIES[head], args[0])
        if head in _FAMILY_TOKENS:
            if len(args) != 2:
                raise GroupParseError(text, match.end(), f"{head} takes (rank, q)")
            return GroupId.lie(head, args[0], args[1])
    except InvalidParameters as exc:
        raise GroupParseError(text, match.end(), str(exc)) from exc
    raise GroupParseError(text, 0, f"unknown family or group {head!r}")


def format_group_name(g: GroupId) -> str:
    """Canonical text form, inverse to :func:`parse_group_name`."""
    if g.kind == "cyclic":
        return f"Cyclic({g.n})"
    if g.kind == "alternating":
        return f"Alt({g.n})"
    if g.kind == "sporadic":
        return g.name
    if g.kind == "tits":
        return "Tits"
    suffix = ",universal" if g.version == "universal" else ""
    if g.family in FIXED_RANK_FAMILIES:
        return f"{g.family}({g.q}{suffix})"
    return f"{g.family}({g.rank},{g.q}{suffix})"


def sort_key(g: GroupId) -> tuple:
    """Deterministic ordering: by order, then canonical name."""
    return (order(g), format_group_name(g))
