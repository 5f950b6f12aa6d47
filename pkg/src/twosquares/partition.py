"""Partitions of p whose parts take exactly two values.

A quadruple (a1, f1, a2, f2) with a1 > a2 stands for the partition of
p = a1*f1 + a2*f2 into f1 parts equal to a1 and f2 parts equal to a2, i.e.
a Young diagram with two steps.  Conjugating the diagram (``tau``) has a
single fixed point when p is an odd prime, so the whole set is odd.  Split
by comparing f1 with f2:

* f1 < f2: ``double_swap`` pairs everything off, so this part is even;
* f1 = f2: forced f1 = f2 = 1, giving (p - 1)/2 elements;
* f1 > f2: what is left is odd, so ``simple_swap`` has a fixed point
  (a, a, b, b), and p = a^2 + b^2.

The object-level functions mirror the windmill module.  The ``*_array``
kernels do the same work on ``(n, 4)`` int64 arrays and are what makes
exhaustive checks over thousands of primes affordable.
"""
from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from . import involution as inv
from .arith import check_p, checked, divisor_pairs, is_prime
from .errors import ArithmeticOverflow, NotOddPrime


class Quad(NamedTuple):
    a1: int
    f1: int
    a2: int
    f2: int


class Stratum(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def stratum_of(q: Quad) -> Stratum:
    if q.f1 < q.f2:
        return Stratum.LESS
    if q.f1 == q.f2:
        return Stratum.EQUAL
    return Stratum.GREATER


def y_area(q: Quad) -> int:
    a1, f1, a2, f2 = q
    return checked(a1 * f1 + a2 * f2)


def enumerate_P2(p: int) -> inv.FiniteSubset[Quad]:
    """All (a1, f1, a2, f2) with a1 > a2 >= 1, f1, f2 >= 1 and area p."""
    p = check_p(p)
    out = []
    a1 = 2
    while a1 + 1 <= p:
        f1 = 1
        while a1 * f1 < p:
            for a2, f2 in divisor_pairs(p - a1 * f1):
                if a2 >= a1:
                    break
                out.append(Quad(a1, f1, a2, f2))
            f1 += 1
        a1 += 1
    return inv.FiniteSubset._from_sorted(tuple(out))


def tau(q: Quad) -> Quad:
    """Conjugate (transpose) the two-step Young diagram."""
    a1, f1, a2, f2 = q
    return Quad(f1 + f2, a2, f1, a1 - a2)


def tau_fixed_point(p: int) -> Quad:
    # Fixed points satisfy a1 = f1 + f2 and a2 = f1, so p = f1(f1 + 2 f2)
    # and primality leaves f1 = 1.
    _require_odd_prime(p)
    return Quad((p + 1) // 2, 1, 1, (p - 1) // 2)


def stratify(
    s: inv.FiniteSubset[Quad],
) -> tuple[inv.FiniteSubset[Quad], inv.FiniteSubset[Quad], inv.FiniteSubset[Quad]]:
    """Return the (LESS, EQUAL, GREATER) parts of ``s``."""
    return (
        s.where(lambda q: q.f1 < q.f2),
        s.where(lambda q: q.f1 == q.f2),
        s.where(lambda q: q.f1 > q.f2),
    )


def double_swap(q: Quad) -> Quad:
    a1, f1, a2, f2 = q
    return Quad(f2, a2, f1, a1)


def simple_swap(q: Quad) -> Quad:
    a1, f1, a2, f2 = q
    return Quad(f1, a1, f2, a2)


def equal_stratum_element(p: int, n: int) -> Quad:
    """The n-th element (p - n - 1, 1, n + 1, 1) of the EQUAL stratum."""
    return Quad(p - (n + 1), 1, n + 1, 1)


def enumerate_equal_stratum(p: int) -> inv.FiniteSubset[Quad]:
    _require_odd_prime(p)
    return inv.FiniteSubset(equal_stratum_element(p, n) for n in range((p - 1) // 2))


def _require_odd_prime(p: int) -> None:
    if not (p % 2 == 1 and is_prime(p)):
        raise NotOddPrime(f"{p} is not an odd prime")


# -- vectorised kernels -----------------------------------------------------

# Divisor pairs (a, f) of every n <= _table_limit, sorted by (n, a), stored
# CSR style: pairs of n live at _pairs[_offsets[n]:_offsets[n + 1]].
_table_limit = 0
_pairs = np.zeros((0, 2), dtype=np.int64)
_offsets = np.zeros(1, dtype=np.int64)


def _divisor_table(limit: int) -> tuple[np.ndarray, np.ndarray]:
    global _table_limit, _pairs, _offsets
    if limit > _table_limit:
        size = max(limit, 2 * _table_limit, 1024)
        a = np.arange(1, size + 1, dtype=np.int64)
        counts = size // a
        a_rep = np.repeat(a, counts)
        starts = np.cumsum(counts) - counts
        f = np.arange(len(a_rep), dtype=np.int64) - np.repeat(starts, counts) + 1
        n = a_rep * f
        order = np.lexsort((a_rep, n))
        _pairs = np.stack([a_rep[order], f[order]], axis=1)
        _offsets = np.zeros(size + 2, dtype=np.int64)
        np.cumsum(np.bincount(n, minlength=size + 1), out=_offsets[1:])
        _table_limit = size
    return _pairs, _offsets


def enumerate_P2_array(p: int) -> np.ndarray:
    """Same set as :func:`enumerate_P2`, as a lexicographically sorted (n, 4) array.

    Each element splits p as n1 + n2 with n1 = a1*f1 and n2 = a2*f2, so the
    set is the union over n1 of (divisor pairs of n1) x (divisor pairs of
    p - n1), filtered by a1 > a2.
    """
    p = check_p(p)
    if p < 3:
        return np.zeros((0, 4), dtype=np.int64)
    if p >= 2**21:
        raise ArithmeticOverflow(f"p = {p} too large for the array kernels")
    pairs, offsets = _divisor_table(p)
    n1 = np.arange(1, p, dtype=np.int64)
    n2 = p - n1
    d1 = offsets[n1 + 1] - offsets[n1]
    d2 = offsets[n2 + 1] - offsets[n2]
    counts = d1 * d2
    total = int(counts.sum())
    block = np.repeat(np.arange(p - 1), counts)
    k = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    width = d2[block]
    i = offsets[n1[block]] + k // width
    j = offsets[n2[block]] + k % width
    keep = pairs[i, 0] > pairs[j, 0]
    i, j = i[keep], j[keep]
    arr = np.empty((len(i), 4), dtype=np.int64)
    arr[:, 0:2] = pairs[i]
    arr[:, 2:4] = pairs[j]
    return arr[np.argsort(quad_keys(arr, p), kind="stable")]


def quad_keys(arr: np.ndarray, p: int) -> np.ndarray:
    """Order-preserving int64 keys for quads of area ``p``.

    Rows with a component outside [1, p) or with area != p cannot be members
    of P2^p and get key -1.  On the remaining rows (a1, f1, a2) already
    determines f2, so three base-p digits suffice.
    """
    a1, f1, a2, f2 = arr.T
    valid = np.ones(len(arr), dtype=bool)
    for col in (a1, f1, a2, f2):
        valid &= (col >= 1) & (col < p)
    with np.errstate(over="ignore"):
        valid &= a1 * f1 + a2 * f2 == p
    keys = (a1 * p + f1) * p + a2
    return np.where(valid, keys, -1)


def tau_array(arr: np.ndarray) -> np.ndarray:
    a1, f1, a2, f2 = arr.T
    return np.stack([f1 + f2, a2, f1, a1 - a2], axis=1)


def double_swap_array(arr: np.ndarray) -> np.ndarray:
    return arr[:, [3, 2, 1, 0]]


def simple_swap_array(arr: np.ndarray) -> np.ndarray:
    return arr[:, [1, 0, 3, 2]]


def equal_stratum_array(p: int) -> np.ndarray:
    _require_odd_prime(p)
    n = np.arange((p - 1) // 2, dtype=np.int64)
    ones = np.ones_like(n)
    arr = np.stack([p - (n + 1), ones, n + 1, ones], axis=1)
    return arr[::-1]


def strata_masks(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    f1, f2 = arr[:, 1], arr[:, 3]
    return f1 < f2, f1 == f2, f1 > f2


def _array_perm(arr: np.ndarray, image: np.ndarray, p: int) -> np.ndarray | None:
    try:
        return inv.encoded_involution(quad_keys(arr, p), quad_keys(image, p))
    except inv.NotAnInvolution:
        return None


def greater_fixed_points_array(arr: np.ndarray, p: int) -> np.ndarray:
    """Fixed points of ``simple_swap`` on the GREATER rows of ``arr``."""
    greater = arr[strata_masks(arr)[2]]
    perm = inv.encoded_involution(quad_keys(greater, p), quad_keys(simple_swap_array(greater), p))
    return greater[inv.encoded_fixed_mask(perm)]


# -- the reader's obligations ----------------------------------------------


def check_obligations(p: int, vectorized: bool = True) -> dict[str, bool]:
    """Every fact about P2^p used by the partition argument, as named booleans."""
    if vectorized:
        return _check_array(p)
    return _check_objects(p)


def _check_array(p: int) -> dict[str, bool]:
    arr = enumerate_P2_array(p)
    checks: dict[str, bool] = {}
    checks["p_prime_1mod4"] = is_prime(p) and p % 4 == 1
    checks["P2_bounded"] = bool(len(arr) == 0 or (arr.min() >= 1 and arr.max() < p))
    tau_img = tau_array(arr)
    checks["tau_area_preserved"] = bool(np.all(tau_img[:, 0] * tau_img[:, 1] + tau_img[:, 2] * tau_img[:, 3] == p))
    perm = _array_perm(arr, tau_img, p)
    checks["tau_involution"] = perm is not None
    if perm is not None and checks["p_prime_1mod4"]:
        fixed = arr[inv.encoded_fixed_mask(perm)]
        checks["tau_unique_fixed_point"] = len(fixed) == 1 and Quad(*map(int, fixed[0])) == tau_fixed_point(p)
    else:
        checks["tau_unique_fixed_point"] = False
    checks["P2_odd"] = len(arr) % 2 == 1

    less_m, equal_m, greater_m = strata_masks(arr)
    less, equal, greater = arr[less_m], arr[equal_m], arr[greater_m]
    perm = _array_perm(less, double_swap_array(less), p)
    checks["less_involution"] = perm is not None
    checks["less_fixed_point_free"] = perm is not None and not inv.encoded_fixed_mask(perm).any()
    checks["less_even"] = len(less) % 2 == 0

    if checks["p_prime_1mod4"]:
        expected = equal_stratum_array(p)
        checks["equal_enumerated"] = np.array_equal(equal, expected)
    else:
        checks["equal_enumerated"] = False
    checks["equal_size"] = len(equal) == (p - 1) // 2
    checks["equal_even"] = len(equal) % 2 == 0
    checks["greater_odd"] = len(greater) % 2 == 1

    perm = _array_perm(greater, simple_swap_array(greater), p)
    checks["greater_involution"] = perm is not None
    if perm is not None:
        fixed = greater[inv.encoded_fixed_mask(perm)]
        a1, f1, a2, f2 = fixed.T
        checks["greater_has_fixed_point"] = len(fixed) >= 1
        checks["greater_fixed_points_square"] = bool(
            np.all((a1 == f1) & (a2 == f2) & (a1 * a1 + a2 * a2 == p))
        )
    else:
        checks["greater_has_fixed_point"] = False
        checks["greater_fixed_points_square"] = False
    return checks


def _check_objects(p: int) -> dict[str, bool]:
    s = enumerate_P2(p)
    checks: dict[str, bool] = {}
    checks["p_prime_1mod4"] = is_prime(p) and p % 4 == 1
    checks["P2_bounded"] = all(1 <= c < p for q in s for c in q)
    checks["tau_area_preserved"] = all(y_area(tau(q)) == p for q in s)
    checks["tau_involution"] = inv.is_involution_on(s, tau)
    if checks["tau_involution"] and checks["p_prime_1mod4"]:
        fixed = inv.fixed_points(s, tau)
        checks["tau_unique_fixed_point"] = fixed.elements == (tau_fixed_point(p),)
    else:
        checks["tau_unique_fixed_point"] = False
    checks["P2_odd"] = len(s) % 2 == 1

    less, equal, greater = stratify(s)
    checks["less_involution"] = inv.is_involution_on(less, double_swap)
    checks["less_fixed_point_free"] = checks["less_involution"] and len(inv.fixed_points(less, double_swap)) == 0
    checks["less_even"] = len(less) % 2 == 0
    if checks["p_prime_1mod4"]:
        checks["equal_enumerated"] = equal == enumerate_equal_stratum(p)
    else:
        checks["equal_enumerated"] = False
    checks["equal_size"] = len(equal) == (p - 1) // 2
    checks["equal_even"] = len(equal) % 2 == 0
    checks["greater_odd"] = len(greater) % 2 == 1

    checks["greater_involution"] = inv.is_involution_on(greater, simple_swap)
    if checks["greater_involution"]:
        fixed = inv.fixed_points(greater, simple_swap)
        checks["greater_has_fixed_point"] = len(fixed) >= 1
        checks["greater_fixed_points_square"] = all(
            q.a1 == q.f1 and q.a2 == q.f2 and q.a1**2 + q.a2**2 == p for q in fixed
        )
    else:
        checks["greater_has_fixed_point"] = False
        checks["greater_fixed_points_square"] = False
    return checks
