"""Write a prime p = 1 (mod 4) as a^2 + b^2 by running either proof.

``decompose_zagier`` and ``decompose_christopher`` do not search for a and
b: they build the finite sets, confirm each involution fact the argument
relies on, and read the answer off the fixed point the argument promises.
``decompose_oracle`` is the independent brute force used to check them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt
from typing import Union

from . import involution as inv
from . import partition, windmill
from .arith import check_p, is_prime
from .errors import BadResidue, InvariantViolation, NoDecomposition, NotPrime
from .partition import Quad
from .windmill import Triple


class Route(str, enum.Enum):
    ZAGIER = "zagier"
    CHRISTOPHER = "christopher"
    ORACLE = "oracle"


@dataclass(frozen=True)
class PrimeWitness:
    """A prime p together with k such that p = 4k + 1."""

    p: int
    k: int

    def __post_init__(self):
        if self.p != 4 * self.k + 1:
            raise BadResidue(f"{self.p} != 4*{self.k} + 1")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")


@dataclass(frozen=True)
class Decomposition:
    """p = a^2 + b^2 with a >= b, plus the fixed point it came from."""

    p: int
    a: int
    b: int
    route: Route
    witness: Union[Triple, Quad, None] = None

    def __post_init__(self):
        if self.a * self.a + self.b * self.b != self.p:
            raise InvariantViolation(f"{self.a}^2 + {self.b}^2 != {self.p}")
        if self.a < self.b:
            raise InvariantViolation("decompositions are stored with a >= b")

    @property
    def pair(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "b": self.b,
            "route": self.route.value,
            "witness": None if self.witness is None else list(self.witness),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Decomposition":
        route = Route(d["route"])
        w = d.get("witness")
        if w is not None:
            w = Triple(*w) if len(w) == 3 else Quad(*w)
        return cls(d["p"], d["a"], d["b"], route, w)


def _normalized(p: int, a: int, b: int, route: Route, witness=None) -> Decomposition:
    a, b = max(a, b), min(a, b)
    return Decomposition(p, a, b, route, witness)


def check_prime_1mod4(p: int) -> PrimeWitness:
    p = check_p(p)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 4 != 1:
        raise BadResidue(f"{p} ≡ {p % 4} (mod 4); the theorem needs p ≡ 1 (mod 4)")
    return PrimeWitness(p, (p - 1) // 4)


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise InvariantViolation(what)


def decompose_zagier(w: PrimeWitness) -> Decomposition:
    p, k = w.p, w.k
    s = windmill.enumerate_S(p)
    _expect(inv.is_involution_on(s, windmill.zag), "zag is not an involution on S_p")
    fixed = inv.fixed_points(s, windmill.zag)
    _expect(fixed.elements == (windmill.zag_fixed_point(p, k),), "zag fixed point is not unique")
    # one fixed point, so |S_p| is odd by the parity lemma
    _expect(inv.parity_lemma_check(s, windmill.zag), "parity lemma failed for zag")
    _expect(len(s) % 2 == 1, "|S_p| is even")
    _expect(inv.is_involution_on(s, windmill.zig), "zig is not an involution on S_p")
    t = inv.find_fixed_point(s, windmill.zig)
    _expect(t.y == t.z, "zig fixed point has y != z")
    return _normalized(p, t.x, 2 * t.y, Route.ZAGIER, t)


def decompose_christopher(w: PrimeWitness, vectorized: bool = True) -> Decomposition:
    """Run the partition argument.

    ``vectorized`` picks the array kernels (fast, used for large p) or the
    object-level sets; both check the same facts.
    """
    if vectorized:
        q = _christopher_array(w.p)
    else:
        q = _christopher_objects(w.p)
    _expect(q.a1 == q.f1 and q.a2 == q.f2, "simple_swap fixed point is not (a, a, b, b)")
    return _normalized(w.p, q.a1, q.a2, Route.CHRISTOPHER, q)


def _christopher_objects(p: int) -> Quad:
    s = partition.enumerate_P2(p)
    _expect(inv.is_involution_on(s, partition.tau), "tau is not an involution on P2")
    fixed = inv.fixed_points(s, partition.tau)
    _expect(fixed.elements == (partition.tau_fixed_point(p),), "tau fixed point is not unique")
    _expect(len(s) % 2 == 1, "|P2| is even")
    less, equal, greater = partition.stratify(s)
    _expect(len(inv.fixed_points(less, partition.double_swap)) == 0, "double_swap has a fixed point")
    _expect(len(less) % 2 == 0, "|LESS| is odd")
    _expect(equal == partition.enumerate_equal_stratum(p), "EQUAL stratum mismatch")
    _expect(len(equal) == (p - 1) // 2, "|EQUAL| != (p-1)/2")
    _expect(len(greater) % 2 == 1, "|GREATER| is even")
    return inv.find_fixed_point(greater, partition.simple_swap)


def _christopher_array(p: int) -> Quad:
    checks = partition.check_obligations(p, vectorized=True)
    failed = [name for name, ok in checks.items() if not ok]
    _expect(not failed, f"partition checks failed: {failed}")
    arr = partition.enumerate_P2_array(p)
    fixed = partition.greater_fixed_points_array(arr, p)
    return Quad(*map(int, fixed[0]))


def decompose_oracle(p: int) -> Decomposition:
    """Brute force: try every a <= sqrt(p) and test p - a^2 for squareness."""
    p = check_p(p)
    for a in range(isqrt(p), 0, -1):
        rest = p - a * a
        b = isqrt(rest)
        if b * b == rest:
            return _normalized(p, a, b, Route.ORACLE)
    raise NoDecomposition(f"{p} is not a sum of two squares")


@dataclass
class VerificationReport:
    p: int
    checks: dict[str, bool] = field(default_factory=dict)
    sizes: dict[str, int] = field(default_factory=dict)
    decompositions: dict[str, Decomposition] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "passed": self.passed,
            "checks": dict(self.checks),
            "sizes": dict(self.sizes),
            "decompositions": {k: v.to_dict() for k, v in self.decompositions.items()},
        }


def verify_pipeline(w: PrimeWitness) -> VerificationReport:
    """Check every claim both proofs make about ``w.p``; never raises on failure."""
    p = w.p
    report = VerificationReport(p)
    for name, ok in windmill.check_obligations(p).items():
        report.checks[f"windmill.{name}"] = ok
    for name, ok in partition.check_obligations(p).items():
        report.checks[f"partition.{name}"] = ok

    s = windmill.enumerate_S(p)
    arr = partition.enumerate_P2_array(p)
    less, equal, greater = partition.strata_masks(arr)
    report.sizes = {
        "S": len(s),
        "P2": len(arr),
        "LESS": int(less.sum()),
        "EQUAL": int(equal.sum()),
        "GREATER": int(greater.sum()),
    }

    for route, solve in (
        (Route.ZAGIER, decompose_zagier),
        (Route.CHRISTOPHER, decompose_christopher),
        (Route.ORACLE, lambda w: decompose_oracle(w.p)),
    ):
        try:
            report.decompositions[route.value] = solve(w)
            report.checks[f"route.{route.value}"] = True
        except (InvariantViolation, NoDecomposition):
            report.checks[f"route.{route.value}"] = False
    pairs = {d.pair for d in report.decompositions.values()}
    report.checks["routes_agree"] = len(pairs) == 1 and len(report.decompositions) == 3
    return report
