"""Windmill triples: the set S_p = {(x, y, z) : x^2 + 4yz = p} and its maps.

A triple (x, y, z) is drawn as an x-by-x square with four y-by-z arms, the
y side lying along the square.  ``zag`` swaps the two windmills sharing an
outer shape; ``zig`` swaps the arm dimensions.  Both are involutions on
S_p, zag with the single fixed point (1, 1, (p - 1)/4) when p is a prime
1 mod 4, which forces |S_p| odd and hence a fixed point (x, y, y) of zig,
i.e. p = x^2 + (2y)^2.
"""
from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from . import involution as inv
from .arith import check_p, checked, divisor_pairs, is_prime
from .errors import BadResidue, BoundaryCase


class Triple(NamedTuple):
    x: int
    y: int
    z: int


class WindmillType(enum.IntEnum):
    T1 = 1  # 2y < x
    T2 = 2  # y < x < 2y
    T3 = 3  # x == y
    T4 = 4  # x < y < x + z
    T5 = 5  # x + z < y


#: Types exchanged by zag.
DUAL_TYPE = {
    WindmillType.T1: WindmillType.T5,
    WindmillType.T5: WindmillType.T1,
    WindmillType.T2: WindmillType.T4,
    WindmillType.T4: WindmillType.T2,
    WindmillType.T3: WindmillType.T3,
}


def area(t: Triple) -> int:
    x, y, z = t
    return checked(x * x + 4 * y * z)


def enumerate_S(p: int) -> inv.FiniteSubset[Triple]:
    """All positive triples with x^2 + 4yz = p, in lexicographic order.

    For each x with p - x^2 a positive multiple of 4, the (y, z) are the
    divisor pairs of m = (p - x^2) / 4.
    """
    p = check_p(p)
    out = []
    x = 1
    while x * x < p:
        rest = p - x * x
        if rest % 4 == 0:
            for y, z in divisor_pairs(rest // 4):
                out.append(Triple(x, y, z))
        x += 1
    return inv.FiniteSubset._from_sorted(tuple(out))


def zag(t: Triple) -> Triple:
    # Non-strict tests in this order keep the map total; on S_p with p prime
    # the boundaries y = x + z and 2y = x never occur.
    x, y, z = t
    if y >= x + z:
        return Triple(x + 2 * z, z, y - x - z)
    if 2 * y >= x:
        return Triple(2 * y - x, y, z + x - y)
    return Triple(x - 2 * y, z + x - y, y)


def zig(t: Triple) -> Triple:
    x, y, z = t
    return Triple(x, z, y)


def classify(t: Triple) -> WindmillType:
    x, y, z = t
    if x == 2 * y or y == x + z:
        raise BoundaryCase(f"{tuple(t)} lies on a type boundary")
    if 2 * y < x:
        return WindmillType.T1
    if y < x:
        return WindmillType.T2
    if y == x:
        return WindmillType.T3
    if y < x + z:
        return WindmillType.T4
    return WindmillType.T5


def zag_fixed_point(p: int, k: int) -> Triple:
    """The fixed point (1, 1, k) of zag on S_p, for p = 4k + 1.

    A zag fixed point needs x = y (second branch), and then p = x(x + 4z)
    with p prime forces x = 1.
    """
    if p != 4 * k + 1:
        raise BadResidue(f"{p} != 4*{k} + 1")
    return Triple(1, 1, k)


# -- vectorised kernels -----------------------------------------------------


def triples_array(s: inv.FiniteSubset[Triple]) -> np.ndarray:
    return np.array(s.elements, dtype=np.int64).reshape(-1, 3)


def triple_keys(arr: np.ndarray, base: int) -> np.ndarray:
    """Order-preserving int64 encoding; every component must be < base."""
    x, y, z = arr.T
    return (x * base + y) * base + z


def zag_array(arr: np.ndarray) -> np.ndarray:
    x, y, z = arr.T
    first = y >= x + z
    second = ~first & (2 * y >= x)
    out = np.empty_like(arr)
    out[:, 0] = np.where(first, x + 2 * z, np.where(second, 2 * y - x, x - 2 * y))
    out[:, 1] = np.where(first, z, np.where(second, y, z + x - y))
    out[:, 2] = np.where(first, y - x - z, np.where(second, z + x - y, y))
    return out


def zig_array(arr: np.ndarray) -> np.ndarray:
    return arr[:, [0, 2, 1]]


# -- the reader's obligations ----------------------------------------------


def check_obligations(p: int) -> dict[str, bool]:
    """Every fact about S_p used by the zag/zig argument, as named booleans.

    Intended for primes p = 1 mod 4; for other p some checks fail, which
    is the expected outcome.
    """
    s = enumerate_S(p)
    k = (p - 1) // 4
    checks: dict[str, bool] = {}
    checks["p_prime_1mod4"] = is_prime(p) and p % 4 == 1
    checks["S_bounded"] = all(max(t) < p for t in s)
    checks["S_positive"] = all(min(t) >= 1 for t in s)
    checks["zag_involution"] = inv.is_involution_on(s, zag)
    checks["zig_involution"] = inv.is_involution_on(s, zig)
    checks["area_preserved"] = all(area(zag(t)) == p and area(zig(t)) == p for t in s)
    checks["no_boundary"] = all(t.x != 2 * t.y and t.y != t.x + t.z for t in s)
    if checks["zag_involution"]:
        fixed = inv.fixed_points(s, zag)
        checks["zag_unique_fixed_point"] = fixed.elements == (Triple(1, 1, k),)
    else:
        checks["zag_unique_fixed_point"] = False
    if checks["no_boundary"]:
        checks["type_duality"] = all(DUAL_TYPE[classify(t)] == classify(zag(t)) for t in s)
    else:
        checks["type_duality"] = False
    checks["S_odd"] = len(s) % 2 == 1
    if checks["zig_involution"]:
        checks["zig_has_fixed_point"] = len(inv.fixed_points(s, zig)) >= 1
    else:
        checks["zig_has_fixed_point"] = False
    return checks
