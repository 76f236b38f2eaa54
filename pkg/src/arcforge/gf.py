"""Exact arithmetic in the Galois field GF(p^h).

Elements are represented by their canonical integer index in [0, q),
obtained by evaluating the coefficient vector of the element (little-endian,
base p) at p.  For prime fields the index is just the residue.  Extension
fields multiply through discrete-log tables built at construction time.

All scalar operations take and return plain ints; the ``*_arr`` variants
operate elementwise on numpy integer arrays and are what the plane and
search layers use.
"""

from __future__ import annotations

import math
from functools import reduce

import numpy as np

ORDER_CAP = 2**31


class NotPrime(ValueError):
    """The requested characteristic is not a prime number."""


class DegreeZero(ValueError):
    """The requested extension degree is below 1."""


class OrderOverflow(ValueError):
    """p**h exceeds the supported field order cap."""


class ZeroInverse(ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, h) with q = p**h and p prime, or None."""
    if q < 2:
        return None
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            h = 0
            n = q
            while n % p == 0:
                n //= p
                h += 1
            return (p, h) if n == 1 and is_prime(p) else None
    return (q, 1)


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p) -- coefficient lists, little-endian
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_divmod(out, mod, p)[1]


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    _poly_trim(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(da - db + 1, 0)
    while da >= db:
        c = a[da] * inv_lead % p
        quo[da - db] = c
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        _poly_trim(a)
        da = len(a) - 1
    return quo, a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while _poly_trim(b):
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _poly_powmod_x(e: int, mod: list[int], p: int) -> list[int]:
    """x**e reduced mod ``mod`` over GF(p)."""
    result = [1]
    base = _poly_divmod([0, 1], mod, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Monic-polynomial irreducibility over GF(p).

    Checks gcd(x^(p^d) - x, f) = 1 for every d up to deg(f)/2, which rules
    out any factor of degree <= deg(f)/2 (and in particular any root).
    """
    h = len(coeffs) - 1
    if h < 1 or coeffs[-1] != 1:
        return False
    if h == 1:
        return True
    if coeffs[0] == 0:  # divisible by x
        return False
    for d in range(1, h // 2 + 1):
        xp = _poly_powmod_x(p**d, coeffs, p)
        # x^(p^d) - x
        g = list(xp) + [0] * max(0, 2 - len(xp))
        g[1] = (g[1] - 1) % p
        if len(_poly_gcd(coeffs, g, p)) > 1:
            return False
    return True


def least_irreducible(p: int, h: int) -> list[int]:
    """Lexicographically least monic irreducible of degree h over GF(p).

    Candidates are compared on (c_{h-1}, ..., c_0) after the forced
    leading 1, so the enumeration index k maps to c_i = (k // p^i) % p.
    """
    if h == 1:
        return [0, 1]  # the formal polynomial x
    for k in range(p**h):
        coeffs = [(k // p**i) % p for i in range(h)] + [1]
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class Field:
    """GF(p^h) with elements as canonical integer indices in [0, q).

    Immutable after construction; safe to share across workers.
    """

    def __init__(self, p: int, h: int, modulus: list[int] | None = None):
        if h < 1:
            raise DegreeZero(f"extension degree must be >= 1, got {h}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        q = p**h
        if q > ORDER_CAP:
            raise OrderOverflow(f"p**h = {q} exceeds cap {ORDER_CAP}")
        self.p = p
        self.h = h
        self.q = q
        if modulus is None:
            modulus = least_irreducible(p, h)
        else:
            modulus = list(modulus)
            if len(modulus) != h + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {h}")
            if any(not 0 <= c < p for c in modulus):
                raise ValueError("modulus coefficients out of range")
            if h > 1 and not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = tuple(modulus)
        self._idx_dtype = np.int32 if q < 46341 else np.int64
        self._log = None
        self._alog = None
        self._inv_table = None
        if h > 1:
            self._build_log_tables()

    def __repr__(self):
        return f"Field(p={self.p}, h={self.h}, q={self.q})"

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus))

    def __hash__(self):
        return hash((self.p, self.h, self.modulus))

    # -- element <-> coefficient view ------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Little-endian coefficient vector of element index ``a``."""
        self._check(a)
        p = self.p
        return tuple((a // p**i) % p for i in range(self.h))

    def element(self, coeffs) -> int:
        """Element index of a little-endian coefficient vector."""
        if len(coeffs) > self.h or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficient vector {coeffs!r}")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"element index {a} outside [0, {self.q})")

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.h == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        for _ in range(self.h):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        if self.h == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p, out, mult = self.p, 0, 1
        for _ in range(self.h):
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.h == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._alog[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        if self.h == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._alog[(self.q - 1 - int(self._log[a])) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    # -- vectorized arithmetic on index arrays -----------------------------

    def add_arr(self, a, b):
        if self.h == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        p, out, mult = self.p, 0, 1
        for _ in range(self.h):
            out = out + ((a + b) % p) * mult
            a = a // p
            b = b // p
            mult *= p
        return out

    def neg_arr(self, a):
        if self.h == 1:
            return (self.p - a) % self.p
        if self.p == 2:
            return a  # ops never mutate their inputs, aliasing is safe
        p, out, mult = self.p, 0, 1
        for _ in range(self.h):
            out = out + ((p - a % p) % p) * mult
            a = a // p
            mult *= p
        return out

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        if self.h == 1:
            return np.asarray(a, dtype=self._idx_dtype) * b % self.p
        s = (self._log[a] + self._log[b]) % (self.q - 1)
        out = self._alog[s]
        return np.where((a == 0) | (b == 0), 0, out)

    def _fermat_inv_arr(self, a):
        out = np.ones_like(np.asarray(a, dtype=np.int64))
        base = np.asarray(a, dtype=np.int64)
        e = self.p - 2
        while e:
            if e & 1:
                out = out * base % self.p
            base = base * base % self.p
            e >>= 1
        return out.astype(self._idx_dtype)

    def inv_arr(self, a):
        if self.h > 1:
            return self._alog[(self.q - 1 - self._log[a]) % (self.q - 1)]
        if self.p > 1 << 22:  # table would be large; 0 maps to 0 either way
            return self._fermat_inv_arr(a)
        if self._inv_table is None:
            self._inv_table = self._build_prime_inv_table()
        return self._inv_table[a]

    # -- table construction ------------------------------------------------

    def _mul_coeffs(self, a: tuple, b: tuple) -> tuple:
        p, h = self.p, self.h
        prod = [0] * (2 * h - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce by the monic modulus
        for d in range(2 * h - 2, h - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(h):
                    prod[d - h + i] = (prod[d - h + i] - c * self.modulus[i]) % p
        return tuple(prod[:h])

    def _build_log_tables(self) -> None:
        q = self.q
        idx = lambda cs: reduce(lambda acc, c: acc * self.p + c, reversed(cs), 0)
        for g in range(2, q):
            g_coeffs = self.coeffs(g)
            log = np.zeros(q, dtype=np.int64)
            alog = np.zeros(q - 1, dtype=self._idx_dtype)
            cur = tuple([1] + [0] * (self.h - 1))
            order = 0
            for k in range(q - 1):
                ci = idx(cur)
                alog[k] = ci
                log[ci] = k
                cur = self._mul_coeffs(cur, g_coeffs)
                order = k + 1
                if cur == tuple([1] + [0] * (self.h - 1)):
                    break
            if order == q - 1:
                self._log = log
                self._alog = alog
                return
        raise AssertionError("no generator found")  # unreachable for true fields

    def _build_prime_inv_table(self):
        out = self._fermat_inv_arr(np.arange(self.p, dtype=np.int64))
        out[0] = 0  # never a valid lookup; normalization masks zeros
        return out


def field_new(p: int, h: int) -> Field:
    """Field with the lexicographically least irreducible modulus."""
    return Field(p, h)


def field_of_order(q: int) -> Field:
    """Field of order q, factoring q = p**h automatically."""
    ph = factor_prime_power(q)
    if ph is None:
        raise NotPrime(f"{q} is not a prime power")
    return Field(*ph)
