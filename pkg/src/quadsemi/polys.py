"""Dense univariate polynomial arithmetic over a Field.

A polynomial is a little-endian list of encoded field elements with no
trailing zeros; [] is the zero polynomial and degree([]) is -1.  The
functions here are the ground-truth layer of the package: schoolbook
multiplication, Euclidean division, gcd, iterated q-th powers, and the
deterministic Rabin irreducibility test.  Speed matters for the
exhaustive sweeps, so multiplication and reduction carry fast paths for
prime fields (plain integer residues) and for small extension fields
(flat lookup tables); the generic path works for any Field.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .field import Field


def normalize(coeffs) -> list[int]:
    """Strip trailing zeros, returning a canonical coefficient list."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(f) -> int:
    return len(f) - 1


def poly_eval(field: Field, f, x: int) -> int:
    acc = 0
    if field.e == 1:
        p = field.p
        for c in reversed(f):
            acc = (acc * x + c) % p
        return acc
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_add(field: Field, a, b) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return normalize(out)


def poly_neg(field: Field, a) -> list[int]:
    return [field.neg(c) for c in a]


def poly_sub(field: Field, a, b) -> list[int]:
    return poly_add(field, a, poly_neg(field, b))


def poly_scale(field: Field, c: int, a) -> list[int]:
    if c == 0:
        return []
    return normalize([field.mul(c, x) for x in a])


def poly_mul(field: Field, a, b) -> list[int]:
    if not a or not b:
        return []
    if field.e == 1:
        p = field.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return [c % p for c in out]
    mul_t = field._mul_t
    if mul_t is not None:
        add_t = field._add_t
        q = field.q
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                row = ai * q
                for j, bj in enumerate(b):
                    if bj:
                        k = i + j
                        out[k] = add_t[out[k] * q + mul_t[row + bj]]
        return out
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return out


def poly_divmod(field: Field, a, b) -> tuple[list[int], list[int]]:
    """Quotient and remainder; b may be any nonzero polynomial."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], normalize(r)
    lead_inv = field.inv(b[-1])
    quot = [0] * (len(r) - db)
    if field.e == 1:
        p = field.p
        for k in range(len(r) - db - 1, -1, -1):
            c = r[k + db] % p
            if c:
                c = c * lead_inv % p
                quot[k] = c
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - c * b[j]) % p
        return normalize(quot), normalize(r)
    for k in range(len(r) - db - 1, -1, -1):
        c = field.mul(r[k + db], lead_inv)
        if c:
            quot[k] = c
            for j in range(db + 1):
                r[k + j] = field.sub(r[k + j], field.mul(c, b[j]))
    return normalize(quot), normalize(r)


def poly_rem(field: Field, a, b) -> list[int]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    db = len(b) - 1
    if len(a) - 1 < db:
        return normalize(a)
    r = list(a)
    if field.e == 1 and b[-1] == 1:
        # monic divisor over a prime field: the tight inner loop of the
        # whole package
        p = field.p
        for k in range(len(r) - db - 1, -1, -1):
            c = r[k + db] % p
            if c:
                for j in range(db):
                    r[k + j] = (r[k + j] - c * b[j]) % p
        return normalize(r[:db])
    return poly_divmod(field, a, b)[1]


def poly_monic(field: Field, a) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    return poly_scale(field, field.inv(a[-1]), a)


def poly_gcd(field: Field, a, b) -> list[int]:
    """Monic greatest common divisor."""
    a = normalize(a)
    b = normalize(b)
    while b:
        a, b = b, poly_rem(field, a, b)
    return poly_monic(field, a)


def poly_pow_mod(field: Field, base, n: int, modulus) -> list[int]:
    """base**n reduced modulo a nonzero polynomial, n >= 0."""
    if n < 0:
        raise ValueError("negative exponent")
    result = poly_rem(field, [1], modulus)
    acc = poly_rem(field, base, modulus)
    while n:
        if n & 1:
            result = poly_rem(field, poly_mul(field, result, acc), modulus)
        n >>= 1
        if n:
            acc = poly_rem(field, poly_mul(field, acc, acc), modulus)
    return result


def _require_monic(f, what: str) -> None:
    if len(f) < 2 or f[-1] != 1:
        raise ValueError(f"{what} requires a monic polynomial of degree >= 1")


def frobenius_power(field: Field, k: int, f) -> list[int]:
    """Canonical representative of x**(q**k) in the quotient ring by f.

    Computed as k successive q-th powerings so intermediate degrees never
    exceed deg f.
    """
    _require_monic(f, "frobenius_power")
    if k < 0:
        raise ValueError("k must be >= 0")
    cur = poly_rem(field, [0, 1], f)
    for _ in range(k):
        cur = poly_pow_mod(field, cur, field.q, f)
    return cur


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rabin_irreducible(field: Field, f) -> bool:
    """Deterministic irreducibility test for a monic f of degree >= 1.

    f is irreducible over F_q iff x**(q**n) = x (mod f) and, for every
    prime r dividing n = deg f, gcd(x**(q**(n/r)) - x, f) = 1.  The q-th
    powers are built incrementally, so a failed gcd aborts early.
    """
    _require_monic(f, "rabin_irreducible")
    return _rabin_cached(field, tuple(f))


@lru_cache(maxsize=1 << 17)
def _rabin_cached(field: Field, coeffs: tuple[int, ...]) -> bool:
    f = list(coeffs)
    n = len(f) - 1
    q = field.q
    gcd_points = {n // r for r in _prime_factors(n)}
    x = [0, 1]
    cur = poly_rem(field, x, f)
    for k in range(1, n + 1):
        cur = poly_pow_mod(field, cur, q, f)
        if k in gcd_points:
            if degree(poly_gcd(field, poly_sub(field, cur, x), f)) != 0:
                return False
    return not poly_rem(field, poly_sub(field, cur, x), f)
