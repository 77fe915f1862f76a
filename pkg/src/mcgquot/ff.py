"""Explicit finite fields GF(p^k) with table-driven arithmetic.

Elements of GF(p^k) are integers 0 .. p^k - 1 encoding coefficient vectors
base p (little-endian) over a deterministic irreducible modulus: the
lexicographically smallest monic irreducible of degree k.  Each field
carries dense numpy operation tables, which is what makes the matrix
kernels in :mod:`mcgquot.ffkernels` work, and embeddings into extension
fields GF(p^(k*m)) computed from a root of the modulus.

Fields are cached and immutable; all operations are pure functions.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .catalog import is_prime
from .ffkernels import DTYPE

FIELD_SIZE_LIMIT = 4096


class FieldTooLarge(ValueError):
    """Raised when a requested field exceeds the dense-table regime."""


# -- polynomial helpers over GF(p) with int coefficient lists (modulus search)

def _pmod_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % p
    # reduce modulo the monic polynomial mod
    k = len(mod) - 1
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * mod[j]) % p
    return _pmod_trim(out[:k] if len(out) > k else out)


def _pmod_powmod(a, e, mod, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _pmod_mulmod(result, base, mod, p)
        base = _pmod_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _pmod_sub(a, b, p):
    n = max(len(a), len(b))
    return _pmod_trim(
        [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    )


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Rabin test: x^(p^k) = x mod f, and x^(p^(k/t)) != x for prime t | k."""
    k = len(mod) - 1
    x = [0, 1]
    acc = x
    powers = {}
    for i in range(1, k + 1):
        acc = _pmod_powmod(acc, p, mod, p)
        powers[i] = acc
    if _pmod_sub(powers[k], x, p):
        return False
    for t in range(2, k + 1):
        if k % t == 0 and is_prime(t):
            if not _pmod_sub(powers[k // t], x, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        coeffs = [(code // p**i) % p for i in range(k)] + [1]
        if coeffs[0] == 0:
            continue  # divisible by x
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class OpTables:
    """Dense operation tables; the kernels index straight into these."""

    add: np.ndarray
    mul: np.ndarray
    inv: np.ndarray
    neg: np.ndarray


@dataclass(frozen=True, eq=False)
class FiniteField:
    """GF(p^k) with integer-encoded elements and dense tables."""

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    tables: OpTables = field(repr=False)
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    # -- scalar arithmetic -------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.tables.add[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.tables.add[a, self.tables.neg[b]])

    def neg(self, a: int) -> int:
        return int(self.tables.neg[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.tables.mul[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverting 0 in a finite field")
        return int(self.tables.inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverting 0 in a finite field")
            return 0 if e else 1
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.k))

    def from_coeffs(self, coeffs) -> int:
        return sum(int(c) % self.p * self.p**i for i, c in enumerate(coeffs))

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _build_tables(p: int, k: int, modulus: tuple[int, ...]) -> tuple[OpTables, np.ndarray, np.ndarray]:
    q = p**k
    # addition/negation are digitwise mod p
    digits = np.zeros((q, k), dtype=np.int64)
    codes = np.arange(q)
    for i in range(k):
        digits[:, i] = (codes // p**i) % p
    weights = np.array([p**i for i in range(k)], dtype=np.int64)
    add = (((digits[:, None, :] + digits[None, :, :]) % p) * weights).sum(axis=2)
    neg = (((-digits) % p) * weights).sum(axis=1)

    # multiplication via discrete logs for a primitive element
    mod_list = list(modulus)

    def mul_scalar(a: int, b: int) -> int:
        da = [(a // p**i) % p for i in range(k)]
        db = [(b // p**i) % p for i in range(k)]
        prod = _pmod_mulmod(_pmod_trim(da), _pmod_trim(db), mod_list, p)
        return sum(c * p**i for i, c in enumerate(prod))

    unit_factors = set()
    m = q - 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            unit_factors.add(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        unit_factors.add(m)

    def element_order_is_full(g: int) -> bool:
        for prime in unit_factors:
            acc, e = 1, (q - 1) // prime
            base = g
            while e:
                if e & 1:
                    acc = mul_scalar(acc, base)
                base = mul_scalar(base, base)
                e >>= 1
            if acc == 1:
                return False
        return True

    generator = next(g for g in range(2, q) if element_order_is_full(g)) if q > 2 else 1
    exp = np.zeros(q - 1, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    acc = 1
    for i in range(q - 1):
        exp[i] = acc
        log[acc] = i
        acc = mul_scalar(acc, generator)
    assert acc == 1, "generator order mismatch"

    mul = np.zeros((q, q), dtype=np.int64)
    la = log[1:]
    mul[1:, 1:] = exp[(la[:, None] + la[None, :]) % (q - 1)]
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = exp[(-la) % (q - 1)]

    tables = OpTables(
        add=add.astype(DTYPE), mul=mul.astype(DTYPE),
        inv=inv.astype(DTYPE), neg=neg.astype(DTYPE),
    )
    return tables, exp.astype(DTYPE), log.astype(DTYPE)


@functools.cache
def get_field(p: int, k: int = 1) -> FiniteField:
    """The finite field GF(p^k), built once and cached."""
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    q = p**k
    if q > FIELD_SIZE_LIMIT:
        raise FieldTooLarge(f"GF({q}) exceeds the dense-table limit {FIELD_SIZE_LIMIT}")
    modulus = _smallest_irreducible(p, k)
    tables, exp, log = _build_tables(p, k, modulus)
    return FiniteField(p=p, k=k, q=q, modulus=modulus, tables=tables, exp=exp, log=log)


def field_of_size(q: int) -> FiniteField:
    from .catalog import prime_power_decomposition

    decomp = prime_power_decomposition(q)
    if decomp is None:
        raise ValueError(f"{q} is not a prime power")
    return get_field(*decomp)


@functools.cache
def embedding(small: FiniteField, big: FiniteField) -> np.ndarray:
    """Field embedding GF(p^k) -> GF(p^(k*m)) as an element lookup array.

    Sends the chosen generator-of-definition (the residue of x) to a fixed
    root of ``small.modulus`` in ``big``; any root gives a field embedding,
    and the first one in element order is used for determinism.
    """
    if small.p != big.p or big.k % small.k != 0:
        raise ValueError(f"no embedding GF({small.q}) -> GF({big.q})")
    if small is big or small.k == big.k:
        return np.arange(small.q, dtype=DTYPE)
    root = next(
        e for e in big.elements() if poly_eval(big, tuple(small.modulus), e) == 0
    )
    table = np.zeros(small.q, dtype=DTYPE)
    for a in small.elements():
        acc = 0
        for c in reversed(small.to_coeffs(a)):
            acc = big.add(big.mul(acc, root), c)
        table[a] = acc
    return table


# ---------------------------------------------------------------------------
# polynomials over a field: coefficient tuples, constant term first

def poly_trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_degree(a) -> int:
    return len(a) - 1


def poly_add(F: FiniteField, a, b):
    if len(a) < len(b):
        a, b = b, a
    return poly_trim(tuple(F.add(c, b[i]) if i < len(b) else c for i, c in enumerate(a)))


def poly_neg(F: FiniteField, a):
    return tuple(F.neg(c) for c in a)


def poly_sub(F: FiniteField, a, b):
    return poly_add(F, a, poly_neg(F, b))


def poly_mul(F: FiniteField, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(c, d))
    return poly_trim(out)


def poly_divmod(F: FiniteField, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lead_inv = len(b) - 1, F.inv(b[-1])
    if len(a) - 1 < db:
        return (), poly_trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            t = F.mul(c, lead_inv)
            quot[i - db] = t
            for j, d in enumerate(b):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(t, d))
    return poly_trim(quot), poly_trim(a[:db])


def poly_eval(F: FiniteField, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_monic(F: FiniteField, a):
    if not a:
        return a
    inv = F.inv(a[-1])
    return tuple(F.mul(c, inv) for c in a)


def find_roots(F: FiniteField, a) -> list[int]:
    """All roots in F, without multiplicity, by scanning the field."""
    return [x for x in F.elements() if poly_eval(F, a, x) == 0]


def irreducible_factors(F: FiniteField, a) -> list[tuple[tuple[int, ...], int]]:
    """Monic irreducible factors with multiplicities, for degree <= 5.

    Linear factors come from root scanning; the root-free residual is
    trial-divided by monic quadratics, which settles every degree up to 5
    (a root-free, quadratic-free polynomial of degree <= 5 is irreducible).
    """
    if poly_degree(a) > 5:
        raise ValueError("factoring is implemented for degree <= 5 only")
    rest = poly_monic(F, a)
    factors: list[tuple[tuple[int, ...], int]] = []
    for r in find_roots(F, rest):
        linear = (F.neg(r), 1)
        count = 0
        while True:
            quot, rem = poly_divmod(F, rest, linear)
            if rem:
                break
            rest, count = quot, count + 1
        factors.append((linear, count))
    changed = True
    while changed and poly_degree(rest) >= 4:
        changed = False
        for code in range(F.q * F.q):
            cand = (code % F.q, code // F.q, 1)
            if find_roots(F, cand):
                continue
            quot, rem = poly_divmod(F, rest, cand)
            if not rem:
                count = 1
                rest = quot
                while True:
                    quot, rem = poly_divmod(F, rest, cand)
                    if rem:
                        break
                    rest, count = quot, count + 1
                factors.append((cand, count))
                changed = True
                break
    if poly_degree(rest) >= 1:
        factors.append((rest, 1))
    factors.sort(key=lambda fc: (len(fc[0]), fc[0]))
    return factors


def splitting_degree(F: FiniteField, a) -> int:
    """Degree over F of the splitting field of a."""
    return math.lcm(*(poly_degree(f) for f, _ in irreducible_factors(F, a)))
