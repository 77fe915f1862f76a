"""Finite-field matrix oracles: eigenspaces, invariant flags, braid scans.

Given an invertible matrix with no eigenspace of dimension >= n-1 (over the
splitting field of its characteristic polynomial), :func:`invariant_flag`
constructs a nested pair of subspaces U <= U' with all three of dim U,
dim U'/U, dim V/U' at most n-2, preserved by everything commuting with the
matrix.  The construction is deterministic: eigenvalues are ordered by
their integer encoding, which is a fixed total order on the splitting
field (lexicographic in the coefficient vector over the prime field, most
significant digit last).

The scan entry points are exhaustive oracles over small general linear
groups and over families of braid-relation candidates; they are the
package's hot loops and run on the kernel backends of
:mod:`mcgquot.ffkernels`.

Subspaces are stored as row-reduced basis matrices (one basis vector per
row), so two subspaces are equal iff their arrays are identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import ffkernels as kernels
from .ff import (
    DTYPE,
    FiniteField,
    embedding,
    find_roots,
    get_field,
    irreducible_factors,
    poly_add,
    poly_divmod,
    poly_mul,
    poly_sub,
    poly_trim,
)


class PreconditionViolated(ValueError):
    """Raised when a matrix has an eigenspace of dimension >= n-1.

    In that situation no flag is needed: the big eigenspace itself is the
    invariant subspace the downstream argument wants.
    """


NoFlagNeeded = PreconditionViolated


class TooLarge(ValueError):
    """Raised when a centralizer enumeration exceeds its budget."""


# ---------------------------------------------------------------------------
# basic matrix helpers

def identity(F: FiniteField, n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def mat(F: FiniteField, rows) -> np.ndarray:
    a = np.array(rows, dtype=DTYPE)
    if (a >= F.q).any():
        raise ValueError(f"entry out of range for {F}")
    return a


def mat_sub(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return F.tables.add[a, F.tables.neg[b]]


def mat_scale(F: FiniteField, c: int, a: np.ndarray) -> np.ndarray:
    return F.tables.mul[c, a]

def mat_add(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return F.tables.add[a, b]


def mat_rank(F: FiniteField, a: np.ndarray) -> int:
    _, rank = kernels.rref(a, F.tables)
    return rank


def is_invertible(F: FiniteField, a: np.ndarray) -> bool:
    return mat_rank(F, a) == a.shape[0]


def embed_matrix(F: FiniteField, L: FiniteField, a: np.ndarray) -> np.ndarray:
    return embedding(F, L)[a]


def nullspace(F: FiniteField, m: np.ndarray) -> np.ndarray:
    """Row-reduced basis of {x : m x = 0}, one solution vector per row."""
    r, rank = kernels.rref(m, F.tables)
    cols = m.shape[1]
    pivots = [int(np.nonzero(r[i])[0][0]) for i in range(rank)]
    free = [j for j in range(cols) if j not in pivots]
    if not free:
        return np.zeros((0, cols), dtype=DTYPE)
    basis = np.zeros((len(free), cols), dtype=DTYPE)
    for b, j in enumerate(free):
        basis[b, j] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = F.neg(int(r[i, j]))
    reduced, rk = kernels.rref(basis, F.tables)
    return reduced[:rk]


def row_space(F: FiniteField, rows: np.ndarray) -> np.ndarray:
    r, rank = kernels.rref(rows, F.tables)
    return r[:rank]


def row_space_contains(F: FiniteField, space: np.ndarray, rows: np.ndarray) -> bool:
    if space.shape[0] == 0:
        return not rows.any()
    stacked = np.vstack([space, rows])
    return mat_rank(F, stacked) == space.shape[0]


def apply_to_rows(F: FiniteField, y: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Image of row-encoded vectors under the linear map v -> y v."""
    return kernels.mat_mul(rows, np.ascontiguousarray(y.T), F.tables)


# ---------------------------------------------------------------------------
# characteristic polynomial

def char_poly(F: FiniteField, x: np.ndarray) -> tuple[int, ...]:
    """det(tI - X), monic, as a coefficient tuple over F.

    Laplace expansion over the polynomial ring with memoization on column
    subsets; fine for the n <= 5 matrices this package handles.
    """
    n = x.shape[0]

    def entry(i: int, j: int) -> tuple[int, ...]:
        c0 = F.neg(int(x[i, j]))
        return poly_trim((c0, 1)) if i == j else poly_trim((c0,))

    full = (1 << n) - 1
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def minor(mask: int) -> tuple[int, ...]:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = n - bin(mask).count("1")
        acc: tuple[int, ...] = ()
        pos = 0
        for col in range(n):
            if mask & (1 << col):
                term = poly_mul(F, entry(row, col), minor(mask & ~(1 << col)))
                acc = poly_add(F, acc, term) if pos % 2 == 0 else poly_sub(F, acc, term)
                pos += 1
        memo[mask] = acc
        return acc

    return minor(full)


# ---------------------------------------------------------------------------
# eigen data over the splitting field

@dataclass(frozen=True)
class EigenEntry:
    value: int
    algebraic_multiplicity: int
    eigen_dim: int
    generalized_dims: tuple[int, ...]


@dataclass(frozen=True)
class EigenData:
    """Eigenvalues of a matrix over the splitting field of its char poly."""

    base: FiniteField
    field: FiniteField
    matrix: np.ndarray = field(repr=False)
    char_coeffs: tuple[int, ...]
    entries: tuple[EigenEntry, ...]

    def max_eigen_dim(self) -> int:
        return max(e.eigen_dim for e in self.entries)

    def eigenspace(self, value: int) -> np.ndarray:
        n = self.matrix.shape[0]
        shifted = mat_sub(self.field, self.matrix, self.field.tables.mul[value, identity(self.field, n)])
        return nullspace(self.field, shifted)

    def generalized_kernel(self, value: int, power: int) -> np.ndarray:
        n = self.matrix.shape[0]
        shifted = mat_sub(self.field, self.matrix, self.field.tables.mul[value, identity(self.field, n)])
        acc = shifted
        for _ in range(power - 1):
            acc = kernels.mat_mul(acc, shifted, self.field.tables)
        return nullspace(self.field, acc)


def splitting_field_of(F: FiniteField, coeffs: tuple[int, ...]) -> FiniteField:
    import math

    m = math.lcm(*(len(f) - 1 for f, _ in irreducible_factors(F, coeffs)))
    return get_field(F.p, F.k * m)


def eigen_data(F: FiniteField, x: np.ndarray, char_coeffs: tuple[int, ...] | None = None) -> EigenData:
    """Eigenvalues, eigenspace dimensions and generalized kernel dimensions.

    All computed over the splitting field, so the eigenvalue list is
    complete and the algebraic multiplicities sum to n.
    """
    cp = char_coeffs if char_coeffs is not None else char_poly(F, x)
    L = splitting_field_of(F, cp)
    emb = embedding(F, L)
    xl = emb[x]
    cpl = tuple(int(emb[c]) for c in cp)
    n = x.shape[0]
    entries = []
    for value in find_roots(L, cpl):
        mult = 0
        rest = cpl
        linear = poly_trim((L.neg(value), 1))
        while True:
            quot, rem = poly_divmod(L, rest, linear)
            if rem:
                break
            rest, mult = quot, mult + 1
        shifted = mat_sub(L, xl, L.tables.mul[value, identity(L, n)])
        dims = []
        acc = shifted
        while True:
            dim = n - mat_rank(L, acc)
            dims.append(dim)
            if dim >= mult or len(dims) >= n:
                break
            acc = kernels.mat_mul(acc, shifted, L.tables)
        entries.append(EigenEntry(int(value), mult, dims[0], tuple(dims)))
    assert sum(e.algebraic_multiplicity for e in entries) == n, "char poly must split"
    return EigenData(base=F, field=L, matrix=xl, char_coeffs=cpl, entries=tuple(entries))


# ---------------------------------------------------------------------------
# the invariant flag construction

@dataclass(frozen=True)
class Flag:
    """A nested pair of subspaces over the splitting field, rref-encoded."""

    field: FiniteField
    u: np.ndarray
    u_prime: np.ndarray

    @property
    def dim_u(self) -> int:
        return self.u.shape[0]

    @property
    def dim_u_prime(self) -> int:
        return self.u_prime.shape[0]

    def dimension_triple(self, n: int) -> tuple[int, int, int]:
        """(dim U, dim U'/U, dim V/U')."""
        return (self.dim_u, self.dim_u_prime - self.dim_u, n - self.dim_u_prime)


def invariant_flag(F: FiniteField, x: np.ndarray, data: EigenData | None = None) -> Flag:
    """The canonical commutant-invariant flag of a matrix.

    Case analysis on the number of distinct eigenvalues (over the splitting
    field); raises :class:`PreconditionViolated` when some eigenspace has
    dimension >= n-1, in which case no flag is needed.
    """
    n = x.shape[0]
    if n < 3:
        raise ValueError(f"the flag construction needs dimension >= 3, got {n}")
    ed = data if data is not None else eigen_data(F, x)
    if ed.max_eigen_dim() >= n - 1:
        raise PreconditionViolated(
            f"eigenspace of dimension {ed.max_eigen_dim()} >= {n - 1}: no flag needed"
        )
    L = ed.field
    entries = sorted(ed.entries, key=lambda e: e.value)
    if len(entries) == 1:
        e = entries[0]
        space = ed.eigenspace(e.value)
        if e.eigen_dim == 1:
            u = space
            u_prime = ed.generalized_kernel(e.value, 2)
            assert u_prime.shape[0] == 2, "single Jordan block: ker^2 has dimension 2"
        else:
            u = u_prime = space
    elif len(entries) == 2:
        small, large = sorted(entries, key=lambda e: (e.eigen_dim, e.value))
        mu_space = ed.eigenspace(small.value)
        if small.eigen_dim == 1:
            u = mu_space
            lam_space = ed.eigenspace(large.value)
            u_prime = row_space(L, np.vstack([mu_space, lam_space]))
            assert u_prime.shape[0] == 1 + large.eigen_dim, "eigenspace sum is direct"
        else:
            assert small.eigen_dim <= n // 2 <= n - 2
            u = u_prime = mu_space
    else:
        first, second = entries[0], entries[1]
        u = ed.eigenspace(first.value)
        u_prime = row_space(L, np.vstack([u, ed.eigenspace(second.value)]))
    return Flag(field=L, u=u, u_prime=u_prime)


# ---------------------------------------------------------------------------
# centralizers

def commutant_basis(F: FiniteField, x: np.ndarray) -> list[np.ndarray]:
    """Basis of the algebra {y : xy = yx}, via the n^2 x n^2 linear system."""
    n = x.shape[0]
    system = np.zeros((n * n, n * n), dtype=DTYPE)
    for i in range(n):
        for j in range(n):
            row = i * n + j
            for k in range(n):
                for l in range(n):
                    c = 0
                    if l == j:
                        c = int(x[i, k])
                    if k == i:
                        c = F.sub(c, int(x[l, j]))
                    system[row, k * n + l] = c
    return [vec.reshape(n, n).copy() for vec in nullspace(F, system)]


def span_combinations(F: FiniteField, basis: list[np.ndarray]) -> np.ndarray:
    """All q^len(basis) linear combinations of the basis matrices, batched."""
    n = basis[0].shape[0]
    count = F.q ** len(basis)
    codes = np.arange(count, dtype=np.int64)
    acc = np.zeros((count, n, n), dtype=DTYPE)
    for i, b in enumerate(basis):
        coeff = ((codes // F.q**i) % F.q).astype(DTYPE)
        acc = F.tables.add[acc, F.tables.mul[coeff[:, None, None], b[None, :, :]]]
    return acc


def batched_det(F: FiniteField, mats: np.ndarray) -> np.ndarray:
    """Determinants of a batch of n x n matrices (permutation expansion, n <= 4)."""
    import itertools

    n = mats.shape[1]
    if n > 4:
        raise ValueError("batched determinants are implemented for n <= 4")
    total = np.zeros(mats.shape[0], dtype=DTYPE)
    for perm in itertools.permutations(range(n)):
        prod = mats[:, 0, perm[0]]
        for i in range(1, n):
            prod = F.tables.mul[prod, mats[:, i, perm[i]]]
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        if inversions % 2:
            prod = F.tables.neg[prod]
        total = F.tables.add[total, prod]
    return total


def all_matrices(F: FiniteField, n: int) -> np.ndarray:
    """Every n x n matrix over F, as one (q^(n^2), n, n) array."""
    count = F.q ** (n * n)
    codes = np.arange(count, dtype=np.int64)
    out = np.zeros((count, n, n), dtype=DTYPE)
    for idx in range(n * n):
        out[:, idx // n, idx % n] = (codes // F.q**idx) % F.q
    return out


def centralizer(F: FiniteField, x: np.ndarray, budget: int = 2**18) -> list[np.ndarray]:
    """All invertible y with xy = yx, in deterministic enumeration order.

    Small instances are brute-forced over every matrix; larger ones solve
    the commutant system and enumerate the algebra.  Raises
    :class:`TooLarge` when both enumerations exceed the budget.
    """
    n = x.shape[0]
    if F.q ** (n * n) <= budget:
        everything = all_matrices(F, n)
        left = kernels.batched_mat_mul(np.broadcast_to(x, everything.shape).copy(), everything, F.tables)
        right = kernels.batched_mat_mul(everything, np.broadcast_to(x, everything.shape).copy(), F.tables)
        commuting = everything[(left == right).all(axis=(1, 2))]
        keep = batched_det(F, commuting) != 0
        return [y.copy() for y in commuting[keep]]
    basis = commutant_basis(F, x)
    if F.q ** len(basis) > budget:
        raise TooLarge(
            f"centralizer enumeration over GF({F.q}) needs {F.q}^{len(basis)} elements"
        )
    candidates = span_combinations(F, basis)
    keep = batched_det(F, candidates) != 0
    return [y.copy() for y in candidates[keep]]


def centralizer_order_in_gl(F: FiniteField, x: np.ndarray, budget: int = 2**18) -> int:
    return len(centralizer(F, x, budget))


# ---------------------------------------------------------------------------
# braid checks

def braid_check(F: FiniteField, p: np.ndarray, q: np.ndarray) -> bool:
    """Whether p q p = q p q holds exactly."""
    pq = kernels.mat_mul(p, q, F.tables)
    qp = kernels.mat_mul(q, p, F.tables)
    pqp = kernels.mat_mul(pq, p, F.tables)
    qpq = kernels.mat_mul(qp, q, F.tables)
    return bool((pqp == qpq).all())


@dataclass(frozen=True)
class TripleProductReport:
    """Outcome of the 3-cycle lift identity scan over a field's units."""

    q: int
    pairs_checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def triple_product_scan(F: FiniteField) -> TripleProductReport:
    """Check P Q P = diag(d/e, 1, e/d) for the 3-cycle lifts.

    P has rows (0, d, 0), (0, 0, 1/d), (1, 0, 0) and Q the same with e; the
    product identity holds for every pair of units d, e.
    """
    violations = []
    pairs = 0
    for d in F.units():
        for e in F.units():
            p = mat(F, [[0, d, 0], [0, 0, F.inv(d)], [1, 0, 0]])
            q = mat(F, [[0, e, 0], [0, 0, F.inv(e)], [1, 0, 0]])
            expected = mat(
                F,
                [
                    [F.div(d, e), 0, 0],
                    [0, 1, 0],
                    [0, 0, F.div(e, d)],
                ],
            )
            pqp = kernels.mat_mul(kernels.mat_mul(p, q, F.tables), p, F.tables)
            pairs += 1
            if not (pqp == expected).all():
                violations.append(f"d={d} e={e}: got {pqp.tolist()}")
    return TripleProductReport(q=F.q, pairs_checked=pairs, violations=tuple(violations))


@dataclass(frozen=True)
class BraidPairRecord:
    mu: int
    unequal_braid_pairs: int
    witness: tuple[tuple, tuple] | None


@dataclass(frozen=True)
class GoldenBraidReport:
    """Exhaustive unequal-braid-pair scan over upper-triangular matrices.

    For each unit mu != 1 the scan runs over all pairs of upper-triangular
    3x3 matrices with diagonal (1, 1, mu) and records whether any unequal
    pair satisfies the braid relation.  The observed set of such mu is
    compared against the root sets of the two candidate equations
    mu^2 - mu - 1 = 0 and mu^2 - mu + 1 = 0; exhaustive computation shows
    the braid relation is governed by the latter (over the scanned fields
    the sixth-root equation, not the golden-ratio one).
    """

    q: int
    characteristic: int
    records: tuple[BraidPairRecord, ...]
    mus_with_pairs: tuple[int, ...]
    golden_equation_roots: tuple[int, ...]
    sixth_root_equation_roots: tuple[int, ...]

    @property
    def matches_golden_equation(self) -> bool:
        return self.mus_with_pairs == self.golden_equation_roots

    @property
    def matches_sixth_root_equation(self) -> bool:
        return self.mus_with_pairs == self.sixth_root_equation_roots


def _upper_triangular_family(F: FiniteField, mu: int) -> np.ndarray:
    """All q^3 upper-triangular matrices with diagonal (1, 1, mu)."""
    q = F.q
    count = q**3
    codes = np.arange(count, dtype=np.int64)
    mats = np.zeros((count, 3, 3), dtype=DTYPE)
    mats[:, 0, 0] = 1
    mats[:, 1, 1] = 1
    mats[:, 2, 2] = mu
    mats[:, 0, 1] = codes % q
    mats[:, 0, 2] = (codes // q) % q
    mats[:, 1, 2] = (codes // q**2) % q
    return mats


def golden_braid_scan(F: FiniteField, chunk: int = 96) -> GoldenBraidReport:
    """Scan all unit diagonals mu != 1 for unequal braid pairs."""
    records = []
    for mu in F.units():
        if mu == 1:
            continue
        mats = _upper_triangular_family(F, mu)
        n = mats.shape[0]
        pair_count = 0
        witness = None
        for start in range(0, n, chunk):
            block = mats[start : start + chunk]
            b = block.shape[0]
            left = np.repeat(block, n, axis=0)
            right = np.tile(mats, (b, 1, 1))
            pq = kernels.batched_mat_mul(left, right, F.tables)
            qp = kernels.batched_mat_mul(right, left, F.tables)
            pqp = kernels.batched_mat_mul(pq, left, F.tables)
            qpq = kernels.batched_mat_mul(qp, right, F.tables)
            eq = (pqp == qpq).all(axis=(1, 2))
            idx = np.nonzero(eq)[0]
            for flat in idx:
                i, j = start + int(flat) // n, int(flat) % n
                if i == j:
                    continue
                pair_count += 1
                if witness is None:
                    witness = (
                        tuple(map(tuple, mats[i].tolist())),
                        tuple(map(tuple, mats[j].tolist())),
                    )
        records.append(BraidPairRecord(mu=mu, unequal_braid_pairs=pair_count, witness=witness))

    def roots(constant_term_sign: int) -> tuple[int, ...]:
        minus_one = F.neg(1)
        out = []
        for mu in F.units():
            if mu == 1:
                continue
            c = minus_one if constant_term_sign < 0 else 1
            value = F.add(F.add(F.mul(mu, mu), F.mul(minus_one, mu)), c)
            if value == 0:
                out.append(mu)
        return tuple(out)

    return GoldenBraidReport(
        q=F.q,
        characteristic=F.p,
        records=tuple(records),
        mus_with_pairs=tuple(r.mu for r in records if r.unequal_braid_pairs),
        golden_equation_roots=roots(-1),
        sixth_root_equation_roots=roots(+1),
    )


# ---------------------------------------------------------------------------
# exhaustive flag scan over GL_n(q)

@dataclass(frozen=True)
class FlagScanReport:
    n: int
    q: int
    gl_size: int
    eligible: int
    skipped_large_eigenspace: int
    violations: tuple[str, ...]
    full_group_checks: int
    backend: str

    @property
    def ok(self) -> bool:
        return not self.violations


def gl_matrices(F: FiniteField, n: int) -> np.ndarray:
    """All invertible n x n matrices over F (enumeration order)."""
    everything = all_matrices(F, n)
    keep = np.fromiter(
        (mat_rank(F, m) == n for m in everything), count=len(everything), dtype=bool
    )
    return everything[keep]


def _flag_violations(F: FiniteField, x: np.ndarray, flag: Flag, full_budget: int) -> tuple[list[str], int]:
    n = x.shape[0]
    L = flag.field
    problems = []
    if not row_space_contains(L, flag.u_prime, flag.u):
        problems.append("U not contained in U'")
    triple = flag.dimension_triple(n)
    if max(triple) > n - 2 or flag.dim_u < 1:
        problems.append(f"dimension triple {triple} violates the n-2 bound")
    xl = embed_matrix(F, L, x)
    basis = commutant_basis(L, xl)
    for b in basis:
        for space in (flag.u, flag.u_prime):
            image = apply_to_rows(L, b, space)
            if not row_space_contains(L, space, image):
                problems.append("commutant basis element moves the flag")
    full_checked = 0
    if L.q ** len(basis) <= full_budget:
        # Literal group-level check: every invertible element of the
        # commutant must fix both subspaces.  Containment of the stacked
        # images is equivalent (invertible maps preserve dimension).
        candidates = span_combinations(L, basis)
        invertible = candidates[batched_det(L, candidates) != 0]
        full_checked = len(invertible)
        for space in (flag.u, flag.u_prime):
            images = kernels.batched_mat_mul(
                np.broadcast_to(space, (len(invertible),) + space.shape).copy(),
                np.ascontiguousarray(invertible.transpose(0, 2, 1)),
                L.tables,
            )
            stacked = np.vstack([space, images.reshape(-1, space.shape[1])])
            if mat_rank(L, stacked) != space.shape[0]:
                problems.append("a centralizer element moves the flag")
    return problems, full_checked


def scan_flags(n: int, q: int, full_budget: int = 4096) -> FlagScanReport:
    """Verify the flag construction against every eligible element of GL_n(q).

    For each invertible matrix without a large eigenspace the constructed
    flag is checked for containment, the three dimension bounds, and
    invariance under a basis of the commutant over the splitting field
    (which spans every centralizing matrix); where the full centralizer
    group is small enough it is also enumerated and checked element by
    element.
    """
    from .ff import field_of_size

    F = field_of_size(q)
    gl = gl_matrices(F, n)
    eligible = 0
    skipped = 0
    full_checks = 0
    violations: list[str] = []
    for x in gl:
        cp = char_poly(F, x)
        ed = eigen_data(F, x, cp)
        if ed.max_eigen_dim() >= n - 1:
            skipped += 1
            continue
        eligible += 1
        flag = invariant_flag(F, x, ed)
        problems, full = _flag_violations(F, x, flag, full_budget)
        full_checks += full
        for p in problems:
            violations.append(f"X={x.tolist()}: {p}")
    return FlagScanReport(
        n=n,
        q=q,
        gl_size=len(gl),
        eligible=eligible,
        skipped_large_eigenspace=skipped,
        violations=tuple(violations),
        full_group_checks=full_checks,
        backend=kernels.active_backend(),
    )
