"""Small exact-integer helpers: checked naturals, primality, divisors.

Everything here works on Python ints.  The numpy sieves are only used to
build lookup tables; results are always plain ints.
"""
from __future__ import annotations

from math import isqrt

import numpy as np

from .errors import ArithmeticOverflow, InvalidInput

#: Largest value any intermediate quantity may take (signed 64-bit range,
#: so results can always be stored in an int64 array).
MAX_NATURAL = 2**63 - 1

#: Largest p accepted by the enumerations and solvers.  Keeps x**2 and 4*y*z
#: exact in 64 bits.
MAX_P = 2**62

# Smallest-prime-factor table is grown on demand up to this bound; larger
# arguments fall back to trial division.
_SPF_CAP = 1 << 22
_spf: memoryview | None = None
_spf_len = 0


def checked(value: int) -> int:
    """Return ``value`` unchanged, or raise if it leaves ``[0, MAX_NATURAL]``."""
    if value < 0:
        raise InvalidInput(f"expected a natural number, got {value}")
    if value > MAX_NATURAL:
        raise ArithmeticOverflow(f"{value} exceeds the supported range 2**63-1")
    return value


def check_p(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise InvalidInput(f"expected an integer, got {p!r}")
    p = int(p)
    if p < 1:
        raise InvalidInput(f"expected p >= 1, got {p}")
    if p > MAX_P:
        raise ArithmeticOverflow(f"p = {p} exceeds the supported bound 2**62")
    return p


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    r = isqrt(n)
    while d <= r:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def prime_sieve(n: int) -> np.ndarray:
    """Boolean array ``s`` of length ``n + 1`` with ``s[k]`` true iff k is prime."""
    s = np.ones(max(n + 1, 2), dtype=bool)
    s[:2] = False
    for k in range(2, isqrt(n) + 1):
        if s[k]:
            s[k * k :: k] = False
    return s[: n + 1]


def primes_1mod4(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi and p % 4 == 1, ascending."""
    if hi < max(lo, 5):
        return []
    s = prime_sieve(hi)
    ps = np.flatnonzero(s)
    ps = ps[(ps >= lo) & (ps % 4 == 1)]
    return [int(p) for p in ps]


def _spf_table(n: int) -> memoryview | None:
    global _spf, _spf_len
    if n > _SPF_CAP:
        return None
    if n >= _spf_len:
        size = min(max(2 * n, 1 << 16), _SPF_CAP) + 1
        spf = np.zeros(size, dtype=np.int64)
        for k in range(2, isqrt(size - 1) + 1):
            if spf[k] == 0:
                block = spf[k * k :: k]
                block[block == 0] = k
        untouched = spf == 0
        spf[untouched] = np.arange(size)[untouched]
        _spf = memoryview(spf)
        _spf_len = size
    return _spf


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorisation of ``m >= 1`` as ascending ``(prime, exponent)`` pairs."""
    if m < 1:
        raise InvalidInput(f"cannot factor {m}")
    out: list[tuple[int, int]] = []
    table = _spf_table(m)
    if table is not None:
        while m > 1:
            q = table[m]
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            out.append((q, e))
        return out
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def divisors(m: int) -> list[int]:
    """All positive divisors of ``m``, ascending."""
    divs = [1]
    for q, e in factorize(m):
        divs = [d * q**i for d in divs for i in range(e + 1)]
    divs.sort()
    return divs


def divisor_pairs(m: int) -> list[tuple[int, int]]:
    """Every ``(d, m // d)`` with ``d | m``, ordered by ``d``."""
    return [(d, m // d) for d in divisors(m)]


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
