"""Fermat's two-squares theorem, done by counting fixed points of involutions.

Two constructions are provided: Zagier's windmill involution on
S_p = {x^2 + 4yz = p} and a partition-theoretic one on partitions of p
whose parts take exactly two values.  Each decomposes a prime p = 1 mod 4
as a^2 + b^2 by checking its involutions and reading off a fixed point.
"""
from .errors import (
    ArithmeticOverflow,
    BadResidue,
    BoundaryCase,
    EvenCardinality,
    FixedPointArgument,
    InvalidInput,
    InvariantViolation,
    NoDecomposition,
    NotAnInvolution,
    NotMember,
    NotOddPrime,
    NotPrime,
    TooLarge,
    TwoSquaresError,
)
from .involution import FiniteSubset, OrbitReport
from .partition import Quad, Stratum
from .solver import (
    Decomposition,
    PrimeWitness,
    Route,
    check_prime_1mod4,
    decompose_christopher,
    decompose_oracle,
    decompose_zagier,
    verify_pipeline,
)
from .windmill import Triple, WindmillType

__version__ = "0.1.0"
