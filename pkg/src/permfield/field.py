"""Exact arithmetic in GF(p^n).

An element is stored as an integer in [0, p^n): its base-p digits, least
significant first, are the coefficients of the residue polynomial modulo a
monic irreducible modulus.  Enumeration order, element indices and table
indices therefore all coincide.

Fields up to a configurable size (2^20 elements by default) are built with
discrete-log, antilog and absolute-trace tables, which back the vectorized
numpy kernels (``pow_all``, ``add_vec``, ``mul_scalar_vec``) used by the
exhaustive-search code elsewhere in the package.  Larger fields still work
through the scalar polynomial routines, only slower.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    LogOfZero,
    NonMonic,
    NotADivisor,
    NotPrime,
    ReducibleModulus,
    TableUnavailable,
)

#: hard cap on the field size accepted at construction
MAX_Q = 2 ** 32

#: log/antilog/trace tables are built eagerly for fields up to this size
LOG_TABLE_MAX_Q = 2 ** 20


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending (trial division)."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, constant term first)
# ---------------------------------------------------------------------------

def _pol_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pol_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _pol_trim(out)


def _pol_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pol_trim(out)


def _pol_divmod(a: Sequence[int], b: Sequence[int], p: int):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    binv = pow(b[-1], -1, p)
    while len(a) >= len(b) and _pol_trim(a):
        if len(a) < len(b):
            break
        c = (a[-1] * binv) % p
        k = len(a) - len(b)
        if c:
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
        a.pop()
    return _pol_trim(q), _pol_trim(a)


def _pol_mod(a, b, p):
    return _pol_divmod(a, b, p)[1]


def _pol_gcd(a, b, p) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pol_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(x * inv) % p for x in a]
    return a


def _pol_powmod(a, e: int, f, p) -> list[int]:
    result = [1]
    base = _pol_mod(a, f, p)
    while e:
        if e & 1:
            result = _pol_mod(_pol_mul(result, base, p), f, p)
        base = _pol_mod(_pol_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Deterministic irreducibility test over F_p for a monic polynomial.

    Checks x^(p^d) == x mod f together with gcd(f, x^(p^(d/r)) - x) = 1 for
    every prime r dividing the degree d.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    c = _pol_trim([int(x) % p for x in coeffs])
    if len(c) < 2:
        raise NonMonic("polynomial must be monic of degree >= 1")
    if c[-1] != 1:
        raise NonMonic("leading coefficient must be 1")
    d = len(c) - 1
    if d == 1:
        return True
    # frob[j] = x^(p^j) mod c
    x = [0, 1]
    frob = [x]
    for _ in range(d):
        frob.append(_pol_powmod(frob[-1], p, c, p))
    for r in prime_factors(d):
        g = _pol_gcd(c, _pol_sub(frob[d // r], x, p), p)
        if len(g) != 1:
            return False
    return _pol_sub(frob[d], x, p) == []


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    # lexicographically smallest monic irreducible, coefficients compared
    # constant term first
    if n == 1:
        return (0, 1)
    for c0 in range(1, p):  # constant term 0 would make x a factor
        for rest in itertools.product(range(p), repeat=n - 1):
            cand = (c0, *rest, 1)
            if is_irreducible(cand, p):
                return cand
    raise AssertionError("no irreducible polynomial found, which is impossible")


def _mul2(a: int, b: int, mod_int: int, n: int) -> int:
    # carry-less multiply-and-reduce for p = 2; elements are bit masks
    r = 0
    top = 1 << n
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= mod_int
    return r


@dataclass(frozen=True)
class FieldSpec:
    """Construction data of a field: characteristic, degree and modulus
    (coefficients constant-term first, monic)."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}


class FieldElement:
    """Canonical residue of GF(p^n); equality is coefficient-wise."""

    __slots__ = ("ctx", "idx")

    def __init__(self, ctx: "FieldCtx", idx: int):
        self.ctx = ctx
        self.idx = idx

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.idx_to_coeffs(self.idx)

    def __bool__(self) -> bool:
        return self.idx != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.ctx.spec == other.ctx.spec
            and self.idx == other.idx
        )

    def __hash__(self) -> int:
        return hash((self.ctx.spec, self.idx))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._add_idx(self.idx, self.ctx._coerce(other)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        c = self.ctx
        return FieldElement(c, c._add_idx(self.idx, c._neg_idx(c._coerce(other))))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._neg_idx(self.idx))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._mul_idx(self.idx, self.ctx._coerce(other)))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        c = self.ctx
        return FieldElement(c, c._mul_idx(self.idx, c._inv_idx(c._coerce(other))))

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return FieldElement(self.ctx, self.ctx._pow_idx(self.ctx._inv_idx(self.idx), -e))
        return FieldElement(self.ctx, self.ctx._pow_idx(self.idx, e))

    def __repr__(self) -> str:
        return f"F{self.ctx.q}{list(self.coeffs)}"


class FieldCtx:
    """A fully materialized GF(p^n): modulus, primitive element and (for
    small fields) log/antilog/trace tables.  Immutable after construction;
    safe to share across threads."""

    def __init__(self, spec: FieldSpec, log_table_threshold: int = LOG_TABLE_MAX_Q):
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.p ** spec.n
        self.modulus = spec.modulus
        self._ppows = tuple(spec.p ** i for i in range(spec.n + 1))
        if self.p == 2:
            self._mod_int = sum(c << i for i, c in enumerate(spec.modulus))
        else:
            self._mod_int = None
        self._exp: Optional[np.ndarray] = None
        self._log: Optional[np.ndarray] = None
        self._tr: Optional[np.ndarray] = None
        gen_idx = self._find_generator()
        if self.q <= log_table_threshold:
            self._build_tables(gen_idx)
        self.generator = FieldElement(self, gen_idx)
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    # -- identity / bookkeeping ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.spec == other.spec \
            and self.generator.idx == other.generator.idx

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"FieldCtx(GF({self.p}^{self.n}), modulus={list(self.modulus)})"

    @property
    def has_tables(self) -> bool:
        return self._log is not None

    @property
    def trace_table(self) -> Optional[np.ndarray]:
        """Absolute trace of every element, as integers in [0, p)."""
        return self._tr

    # -- element conversion ----------------------------------------------

    def idx_to_coeffs(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            idx, r = divmod(idx, self.p)
            out.append(r)
        return tuple(out)

    def coeffs_to_idx(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.n:
            raise ValueError(f"at most {self.n} coefficients expected")
        return sum((int(c) % self.p) * self._ppows[i] for i, c in enumerate(coeffs))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        return FieldElement(self, self.coeffs_to_idx(coeffs))

    def from_index(self, idx: int) -> FieldElement:
        if not 0 <= idx < self.q:
            raise ValueError(f"index {idx} out of range")
        return FieldElement(self, idx)

    def from_int(self, c: int) -> FieldElement:
        """The prime-subfield constant c mod p."""
        return FieldElement(self, c % self.p)

    def elements(self) -> Iterator[FieldElement]:
        """All q elements exactly once, ascending enumeration order,
        starting at 0."""
        for i in range(self.q):
            yield FieldElement(self, i)

    def label(self, x) -> str:
        """Stable display label: "0" or a power of the chosen generator."""
        idx = self._coerce(x)
        if idx == 0:
            return "0"
        if self._log is not None:
            return f"w^{int(self._log[idx])}"
        return str(list(self.idx_to_coeffs(idx)))

    def _coerce(self, x) -> int:
        if isinstance(x, FieldElement):
            if x.ctx.spec != self.spec:
                raise ValueError("element belongs to a different field")
            return x.idx
        return int(x)

    # -- scalar arithmetic on indices --------------------------------------

    def _add_idx(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out = 0
        for pi in self._ppows[: self.n]:
            out += (((a // pi) + (b // pi)) % self.p) * pi
        return out

    def _neg_idx(self, a: int) -> int:
        if self.p == 2:
            return a
        out = 0
        for pi in self._ppows[: self.n]:
            out += ((self.p - (a // pi) % self.p) % self.p) * pi
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        # polynomial multiply-and-reduce, independent of tables
        if self.p == 2:
            return _mul2(a, b, self._mod_int, self.n)
        prod = _pol_mul(self.idx_to_coeffs(a), self.idx_to_coeffs(b), self.p)
        return self.coeffs_to_idx(_pol_mod(prod, list(self.modulus), self.p))

    def _mul_idx(self, a: int, b: int) -> int:
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])
        return self._mul_raw(a, b)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1  # empty-product convention
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 0
        e %= self.q - 1
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])
        return self._pow_raw(a, e)

    def _inv_idx(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        p = self.p
        r0, r1 = list(self.modulus), list(self.idx_to_coeffs(a))
        t0, t1 = [], [1]
        while _pol_trim(r1):
            qpol, rem = _pol_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, _pol_sub(t0, _pol_mul(qpol, t1, p), p)
        cinv = pow(r0[0], -1, p)  # r0 is a nonzero constant: gcd(a, modulus)
        inv = [(x * cinv) % p for x in t0]
        return self.coeffs_to_idx(_pol_mod(inv, list(self.modulus), p))

    # -- public element operations ----------------------------------------

    def add(self, a, b) -> FieldElement:
        return FieldElement(self, self._add_idx(self._coerce(a), self._coerce(b)))

    def sub(self, a, b) -> FieldElement:
        return FieldElement(self, self._add_idx(self._coerce(a), self._neg_idx(self._coerce(b))))

    def neg(self, a) -> FieldElement:
        return FieldElement(self, self._neg_idx(self._coerce(a)))

    def mul(self, a, b) -> FieldElement:
        return FieldElement(self, self._mul_idx(self._coerce(a), self._coerce(b)))

    def inv(self, a) -> FieldElement:
        return FieldElement(self, self._inv_idx(self._coerce(a)))

    def div(self, a, b) -> FieldElement:
        return FieldElement(self, self._mul_idx(self._coerce(a), self._inv_idx(self._coerce(b))))

    def pow(self, a, e: int) -> FieldElement:
        """a^e with the exponent reduced mod q-1 for nonzero a; 0^0 = 1."""
        return FieldElement(self, self._pow_idx(self._coerce(a), e))

    def trace(self, x, r: int = 1) -> FieldElement:
        """Trace onto the subfield of degree r: sum of x^(p^(r*i))."""
        if r < 1 or self.n % r != 0:
            raise NotADivisor(f"r={r} does not divide n={self.n}")
        pr = self.p ** r
        acc = c = self._coerce(x)
        for _ in range(self.n // r - 1):
            c = self._pow_idx(c, pr)
            acc = self._add_idx(acc, c)
        return FieldElement(self, acc)

    def norm(self, x, r: int = 1) -> FieldElement:
        """Norm onto the subfield of degree r: product of x^(p^(r*i))."""
        if r < 1 or self.n % r != 0:
            raise NotADivisor(f"r={r} does not divide n={self.n}")
        pr = self.p ** r
        acc = c = self._coerce(x)
        for _ in range(self.n // r - 1):
            c = self._pow_idx(c, pr)
            acc = self._mul_idx(acc, c)
        return FieldElement(self, acc)

    def trace_int(self, x) -> int:
        """Absolute trace as an integer in [0, p)."""
        idx = self._coerce(x)
        if self._tr is not None:
            return int(self._tr[idx])
        return self.trace(idx, 1).idx

    def dlog(self, x) -> int:
        idx = self._coerce(x)
        if idx == 0:
            raise LogOfZero("0 has no discrete logarithm")
        if self._log is None:
            raise TableUnavailable(
                f"field of size {self.q} was built without log tables"
            )
        return int(self._log[idx])

    def subfield_elements(self, r: int) -> np.ndarray:
        """Indices of the subfield of degree r (fixed points of x -> x^(p^r)),
        ascending."""
        if r < 1 or self.n % r != 0:
            raise NotADivisor(f"r={r} does not divide n={self.n}")
        pr = self.p ** r
        if self.has_tables:
            vals = self.pow_all(pr)
            return np.nonzero(vals == np.arange(self.q, dtype=np.int64))[0]
        return np.array(
            [i for i in range(self.q) if self._pow_idx(i, pr) == i], dtype=np.int64
        )

    def second_generator(self) -> Optional[FieldElement]:
        """The next primitive element after the chosen generator in
        enumeration order, or None when there is no other."""
        if self._log is None:
            raise TableUnavailable("second generator needs log tables")
        for i in range(1, self.q):
            if i != self.generator.idx and math.gcd(int(self._log[i]), self.q - 1) == 1:
                return FieldElement(self, i)
        return None

    # -- vectorized kernels over the whole field ---------------------------

    def pow_all(self, e: int) -> np.ndarray:
        """x^e for every x in enumeration order (0^0 = 1)."""
        q = self.q
        if e == 0:
            return np.ones(q, dtype=np.int64)
        if self._log is None:
            return np.array([self._pow_idx(i, e) for i in range(q)], dtype=np.int64)
        out = np.zeros(q, dtype=np.int64)
        r = e % (q - 1)
        if r == 0:
            out[1:] = 1
        else:
            out[1:] = self._exp[(self._log[1:] * r) % (q - 1)]
        return out

    def add_vec(self, a: np.ndarray, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros_like(a)
        for pi in self._ppows[: self.n]:
            out += (((a // pi) + (b // pi)) % self.p) * pi
        return out

    def neg_vec(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a
        out = np.zeros_like(a)
        for pi in self._ppows[: self.n]:
            out += ((self.p - (a // pi) % self.p) % self.p) * pi
        return out

    def mul_scalar_vec(self, c, vec: np.ndarray) -> np.ndarray:
        """c * vec elementwise for a scalar c (may be an element or index)."""
        c = self._coerce(c)
        if c == 0:
            return np.zeros_like(vec)
        if self._log is None:
            return np.array([self._mul_raw(c, int(v)) for v in vec], dtype=np.int64)
        out = np.zeros_like(vec)
        nz = vec != 0
        logc = int(self._log[c])
        out[nz] = self._exp[(self._log[vec[nz]] + logc) % (self.q - 1)]
        return out

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._log is None:
            return np.array(
                [self._mul_raw(int(x), int(y)) for x, y in zip(a, b)], dtype=np.int64
            )
        out = np.zeros_like(a)
        nz = (a != 0) & (b != 0)
        out[nz] = self._exp[(self._log[a[nz]] + self._log[b[nz]]) % (self.q - 1)]
        return out

    # -- construction internals ---------------------------------------------

    def _find_generator(self) -> int:
        fac = prime_factors(self.q - 1)
        for cand in range(1, self.q):
            if all(self._pow_raw(cand, (self.q - 1) // r) != 1 for r in fac):
                return cand
        raise AssertionError("no primitive element found, which is impossible")

    def _build_tables(self, gen_idx: int) -> None:
        q = self.q
        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        cur = 1
        if self.p == 2:
            mod_int, n = self._mod_int, self.n
            for i in range(q - 1):
                exp[i] = cur
                cur = _mul2(cur, gen_idx, mod_int, n)
        else:
            for i in range(q - 1):
                exp[i] = cur
                cur = self._mul_raw(cur, gen_idx)
        assert cur == 1, "generator order is not q-1"
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self._exp, self._log = exp, log
        # absolute trace by F_p-linearity over the power basis
        basis_tr = [self.trace(self._ppows[i], 1).idx for i in range(self.n)]
        idxs = np.arange(q, dtype=np.int64)
        tr = np.zeros(q, dtype=np.int64)
        for i in range(self.n):
            tr += ((idxs // self._ppows[i]) % self.p) * basis_tr[i]
        self._tr = tr % self.p


def build_field(
    p: int,
    n: int,
    modulus: Optional[Sequence[int]] = None,
    log_table_threshold: int = LOG_TABLE_MAX_Q,
) -> FieldCtx:
    """Construct GF(p^n).

    When no modulus is given, the lexicographically smallest monic
    irreducible of degree n is chosen (coefficients compared constant term
    first), so repeated builds are identical.  The generator is the first
    element of multiplicative order q-1 in enumeration order.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    q = p ** n
    if q > MAX_Q:
        raise FieldTooLarge(f"q = {p}^{n} exceeds the 2^32 construction cap")
    if modulus is None:
        mod = _smallest_irreducible(p, n)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != n + 1 or mod[-1] != 1:
            raise NonMonic(f"modulus must be monic of degree {n}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"{list(mod)} is reducible over F_{p}")
    return FieldCtx(FieldSpec(p, n, mod), log_table_threshold)


def field_from_spec(obj: dict) -> FieldCtx:
    """Build a field from a parsed spec file: {"p": ..., "n": ...,
    "modulus": [...]} with "modulus" optional, coefficients constant term
    first."""
    unknown = set(obj) - {"p", "n", "modulus"}
    if unknown:
        raise ValueError(f"unknown field-spec keys: {sorted(unknown)}")
    return build_field(int(obj["p"]), int(obj["n"]), obj.get("modulus"))


def subfield_embedding(small: FieldCtx, big: FieldCtx):
    """Field embedding of GF(p^k) into GF(p^n) for k | n.

    Returns (emb, inv) where emb[i] is the big-field index of the image of
    small-field element i, and inv maps image indices back.  The embedding
    sends the small field's defining root to the first root of the small
    modulus inside the big field, so it is deterministic.
    """
    if small.p != big.p or big.n % small.n != 0:
        raise NotADivisor(
            f"GF({small.p}^{small.n}) does not embed in GF({big.p}^{big.n})"
        )
    vals = np.zeros(big.q, dtype=np.int64)
    for j, c in enumerate(small.modulus):
        if c:
            vals = big.add_vec(vals, big.mul_scalar_vec(c % big.p, big.pow_all(j)))
    roots = np.nonzero(vals == 0)[0]
    beta = int(roots.min())
    bpow = [1]
    for _ in range(small.n - 1):
        bpow.append(big._mul_idx(bpow[-1], beta))
    emb = np.zeros(small.q, dtype=np.int64)
    for i in range(small.q):
        acc = 0
        for j, c in enumerate(small.idx_to_coeffs(i)):
            if c:
                acc = big._add_idx(acc, big._mul_idx(c, bpow[j]))
        emb[i] = acc
    inv = {int(v): i for i, v in enumerate(emb)}
    return emb, inv
