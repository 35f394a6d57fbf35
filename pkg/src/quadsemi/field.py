"""Exact arithmetic in F_q for odd prime powers q = p^e.

Field elements are encoded as plain integers in [0, q).  For e > 1 the
integer is read as e base-p digits, little-endian: digit i is the
coefficient of the i-th power of the residue class of x modulo the
defining polynomial.  For e = 1 the encoding is the usual integer
residue.  All operations are pure functions of the encoded values, so a
Field instance can be shared freely between threads or worker processes.

Fields of even characteristic are rejected: the quadratic-residue
machinery this package is built around needs 2 to be invertible.
"""

from __future__ import annotations

import itertools

# Full add/mul lookup tables are built for extension fields up to this
# order; beyond it every operation falls back to digit-vector arithmetic.
_TABLE_LIMIT = 1024

# Square membership table policy: materialize up to this order, use
# Euler's criterion on the fly above it.
_SQUARE_TABLE_LIMIT = 1 << 20

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _digits_of(value: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _digit_mulmod(xd: list[int], yd: list[int], mod: tuple[int, ...], p: int, e: int) -> list[int]:
    # schoolbook product of two degree < e digit vectors, reduced by the
    # monic defining polynomial
    t = [0] * (2 * e - 1)
    for i, xi in enumerate(xd):
        if xi:
            for j, yj in enumerate(yd):
                t[i + j] += xi * yj
    for k in range(2 * e - 2, e - 1, -1):
        c = t[k] % p
        if c:
            off = k - e
            for j in range(e):
                t[off + j] -= c * mod[j]
    return [t[j] % p for j in range(e)]


class Field:
    """Immutable arithmetic context for F_q, q = p^e with p an odd prime.

    Construct through :func:`make_field`, which validates the inputs and
    selects the defining polynomial.  ``modulus`` is stored little-endian
    with length e + 1 and leading coefficient 1; for prime fields it is
    the trivial (0, 1), i.e. the polynomial x.
    """

    __slots__ = ("p", "e", "q", "modulus", "_add_t", "_mul_t", "_square_t")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._add_t = None
        self._mul_t = None
        q = self.q
        if e > 1 and q <= _TABLE_LIMIT:
            self._build_tables()
        if q <= _SQUARE_TABLE_LIMIT:
            sq = bytearray(q)
            for x in range(q):
                sq[self.mul(x, x)] = 1
            self._square_t = bytes(sq)
        else:
            self._square_t = None

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        mod = self.modulus
        digits = [_digits_of(v, p, e) for v in range(q)]
        add_t = [0] * (q * q)
        mul_t = [0] * (q * q)
        weights = [p**i for i in range(e)]
        for x in range(q):
            xd = digits[x]
            row = x * q
            for y in range(x, q):
                yd = digits[y]
                s = sum(w * ((a + b) % p) for w, a, b in zip(weights, xd, yd))
                add_t[row + y] = s
                add_t[y * q + x] = s
                md = _digit_mulmod(xd, yd, mod, p, e)
                m = sum(w * d for w, d in zip(weights, md))
                mul_t[row + y] = m
                mul_t[y * q + x] = m
        self._add_t = add_t
        self._mul_t = mul_t

    # -- element codec -------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        """Base-p digit vector (length e, little-endian) of an element."""
        return tuple(_digits_of(x, self.p, self.e))

    def from_digits(self, digits) -> int:
        ds = list(digits)
        if len(ds) != self.e or any(not 0 <= d < self.p for d in ds):
            raise ValueError(f"expected {self.e} digits in [0, {self.p})")
        value = 0
        for d in reversed(ds):
            value = value * self.p + d
        return value

    def _check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValueError(f"element {x!r} out of range for F_{self.q}")
        return x

    # -- arithmetic ----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        if self._add_t is not None:
            return self._add_t[x * self.q + y]
        xd = _digits_of(x, self.p, self.e)
        yd = _digits_of(y, self.p, self.e)
        return self.from_digits([(a + b) % self.p for a, b in zip(xd, yd)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def neg(self, x: int) -> int:
        if self.e == 1:
            return -x % self.p
        p = self.p
        return self.from_digits([-d % p for d in _digits_of(x, p, self.e)])

    def mul(self, x: int, y: int) -> int:
        if self.e == 1:
            return x * y % self.p
        if self._mul_t is not None:
            return self._mul_t[x * self.q + y]
        xd = _digits_of(x, self.p, self.e)
        yd = _digits_of(y, self.p, self.e)
        return self.from_digits(_digit_mulmod(xd, yd, self.modulus, self.p, self.e))

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.e == 1:
            return pow(x, self.p - 2, self.p)
        return self.pow(x, self.q - 2)

    def pow(self, x: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(x), -n)
        if self.e == 1:
            return pow(x, n, self.p)
        result = 1
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- residues and enumeration ---------------------------------------

    def is_square(self, x: int) -> bool:
        """Quadratic-residue test; 0 counts as a square (0 = 0^2)."""
        if self._square_t is not None:
            return bool(self._square_t[x])
        return self.euler_is_square(x)

    def euler_is_square(self, x: int) -> bool:
        """Euler's criterion computed directly, bypassing any table."""
        if x == 0:
            return True
        return self.pow(x, (self.q - 1) // 2) == 1

    def elements(self) -> range:
        """All q elements in increasing encoded order."""
        return range(self.q)

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"Field(p={self.p})"
        return f"Field(p={self.p}, e={self.e}, modulus={list(self.modulus)})"


def _find_modulus(prime_field: Field, e: int) -> tuple[int, ...]:
    # smallest monic irreducible of degree e, candidates ordered by the
    # coefficient tuple (constant term first)
    from .polys import rabin_irreducible

    for tail in itertools.product(range(prime_field.p), repeat=e):
        cand = list(tail) + [1]
        if rabin_irreducible(prime_field, cand):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found; unreachable for prime p")


def make_field(p: int, e: int = 1, modulus=None) -> Field:
    """Build the field F_{p^e} for an odd prime p.

    When e > 1 and no modulus is supplied, the lexicographically smallest
    monic irreducible polynomial of degree e over F_p is chosen (ordered
    by coefficient tuple from the constant term up), so repeated runs and
    independent processes agree on the element encoding.  A supplied
    modulus must be monic of degree e and is verified irreducible.
    """
    if p == 2:
        raise ValueError("even characteristic unsupported")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")

    if e == 1:
        if modulus is not None:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != 2 or tuple(modulus)[-1] != 1:
                raise ValueError("modulus for a prime field must be monic of degree 1")
        else:
            mod = (0, 1)
        return Field(p, 1, mod)

    prime_field = Field(p, 1, (0, 1))
    if modulus is None:
        mod = _find_modulus(prime_field, e)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {e} (length {e + 1}, leading 1)")
        if any(not 0 <= c < p for c in mod):
            raise ValueError(f"modulus coefficients must lie in [0, {p})")
        from .polys import rabin_irreducible

        if not rabin_irreducible(prime_field, list(mod)):
            raise ValueError("supplied modulus is reducible over F_p")
    return Field(p, e, mod)
