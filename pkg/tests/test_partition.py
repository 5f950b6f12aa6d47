import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_P2, sieve_primes
from twosquares import involution as inv
from twosquares import partition as P
from twosquares.errors import NotOddPrime
from twosquares.partition import Quad

ODD_PRIMES = [p for p in sieve_primes(400) if p > 2]
PRIMES_1MOD4 = [p for p in ODD_PRIMES if p % 4 == 1]

# frozen from oracles.brute_P2: p -> (|P2|, |LESS|, |EQUAL|, |GREATER|)
P2_SIZES = {3: (1, 0, 1, 0), 5: (5, 2, 2, 1), 13: (37, 24, 6, 7), 17: (59, 40, 8, 11), 29: (141, 100, 14, 27)}


class TestYArea:
    @pytest.mark.parametrize("q, expected", [((9, 1, 1, 8), 17), ((2, 2, 1, 1), 5), ((4, 2, 3, 3), 17)])
    def test_examples(self, q, expected):
        assert P.y_area(Quad(*q)) == expected

    @given(st.integers(2, 10**6), st.integers(1, 10**6))
    def test_unit_frequencies(self, a1, a2):
        assert P.y_area(Quad(a1, 1, a2, 1)) == a1 + a2


class TestEnumerateP2:
    def test_p5(self):
        assert P.enumerate_P2(5).elements == ((2, 1, 1, 3), (2, 2, 1, 1), (3, 1, 1, 2), (3, 1, 2, 1), (4, 1, 1, 1))

    def test_p3(self):
        assert P.enumerate_P2(3).elements == ((2, 1, 1, 1),)

    @pytest.mark.parametrize("p", sorted(P2_SIZES))
    def test_sizes(self, p):
        assert len(P.enumerate_P2(p)) == P2_SIZES[p][0]

    @pytest.mark.parametrize("p", range(1, 24))
    def test_matches_brute_force(self, p):
        assert [tuple(q) for q in P.enumerate_P2(p)] == brute_P2(p)

    @pytest.mark.parametrize("p", list(range(1, 40)) + [97, 101, 211, 400])
    def test_array_matches_objects(self, p):
        arr = P.enumerate_P2_array(p)
        assert [tuple(r) for r in arr.tolist()] == [tuple(q) for q in P.enumerate_P2(p)]


class TestTau:
    def test_examples(self):
        assert P.tau(Quad(9, 1, 1, 8)) == (9, 1, 1, 8)
        assert P.tau(Quad(4, 2, 3, 3)) == (5, 3, 2, 1)
        assert P.tau(Quad(2, 2, 1, 1)) == (3, 1, 2, 1)

    @pytest.mark.parametrize("p, expected", [(17, (9, 1, 1, 8)), (5, (3, 1, 1, 2)), (3, (2, 1, 1, 1))])
    def test_fixed_point(self, p, expected):
        assert P.tau_fixed_point(p) == expected
        assert inv.fixed_points(P.enumerate_P2(p), P.tau).elements == (expected,)

    @pytest.mark.parametrize("p", [1, 2, 9, 15])
    def test_fixed_point_needs_odd_prime(self, p):
        with pytest.raises(NotOddPrime):
            P.tau_fixed_point(p)

    @pytest.mark.parametrize("p", ODD_PRIMES)
    def test_involution_with_unique_fixed_point(self, p):
        s = P.enumerate_P2(p)
        assert inv.is_involution_on(s, P.tau)
        assert all(P.y_area(P.tau(q)) == p for q in s)
        assert inv.fixed_points(s, P.tau).elements == (P.tau_fixed_point(p),)
        assert len(s) % 2 == 1


class TestStratify:
    def test_p5(self):
        less, equal, greater = P.stratify(P.enumerate_P2(5))
        assert less.elements == ((2, 1, 1, 3), (3, 1, 1, 2))
        assert equal.elements == ((3, 1, 2, 1), (4, 1, 1, 1))
        assert greater.elements == ((2, 2, 1, 1),)

    def test_p17_equal(self):
        assert len(P.stratify(P.enumerate_P2(17))[1]) == 8

    def test_empty(self):
        assert tuple(map(len, P.stratify(inv.FiniteSubset()))) == (0, 0, 0)

    @pytest.mark.parametrize("p", sorted(P2_SIZES))
    def test_sizes(self, p):
        assert tuple(map(len, P.stratify(P.enumerate_P2(p)))) == P2_SIZES[p][1:]

    def test_stratum_of(self):
        assert P.stratum_of(Quad(2, 1, 1, 3)) is P.Stratum.LESS
        assert P.stratum_of(Quad(3, 1, 2, 1)) is P.Stratum.EQUAL
        assert P.stratum_of(Quad(2, 2, 1, 1)) is P.Stratum.GREATER


class TestSwaps:
    def test_double_swap(self):
        assert P.double_swap(Quad(3, 1, 1, 2)) == (2, 1, 1, 3)
        assert P.double_swap(Quad(2, 1, 1, 3)) == (3, 1, 1, 2)
        less = P.stratify(P.enumerate_P2(5))[0]
        assert len(inv.fixed_points(less, P.double_swap)) == 0

    def test_simple_swap(self):
        assert P.simple_swap(Quad(2, 2, 1, 1)) == (2, 2, 1, 1)
        assert P.simple_swap(Quad(5, 2, 1, 3)) == (2, 5, 3, 1)
        greater = P.stratify(P.enumerate_P2(13))[2]
        assert inv.fixed_points(greater, P.simple_swap).elements == ((3, 3, 2, 2),)

    def test_swaps_not_involutions_on_whole_set(self):
        s = P.enumerate_P2(5)
        assert not inv.is_involution_on(s, P.simple_swap)
        assert not inv.is_involution_on(s, P.double_swap)


class TestEqualStratum:
    def test_p5(self):
        assert P.enumerate_equal_stratum(5).elements == ((3, 1, 2, 1), (4, 1, 1, 1))

    def test_p3(self):
        assert P.enumerate_equal_stratum(3).elements == ((2, 1, 1, 1),)

    def test_p17(self):
        s = P.enumerate_equal_stratum(17)
        assert len(s) == 8
        assert set(s) == {(17 - (n + 1), 1, n + 1, 1) for n in range(8)}

    def test_injective(self):
        qs = [P.equal_stratum_element(101, n) for n in range(50)]
        assert len(set(qs)) == 50

    @pytest.mark.parametrize("p", ODD_PRIMES)
    def test_equals_stratum(self, p):
        assert P.enumerate_equal_stratum(p) == P.stratify(P.enumerate_P2(p))[1]

    def test_rejects(self):
        with pytest.raises(NotOddPrime):
            P.enumerate_equal_stratum(21)


@pytest.mark.parametrize("p", PRIMES_1MOD4)
def test_obligations_both_paths(p):
    fast = P.check_obligations(p, vectorized=True)
    slow = P.check_obligations(p, vectorized=False)
    assert fast == slow
    assert all(fast.values()), [k for k, v in fast.items() if not v]


@pytest.mark.parametrize("p", [7, 11, 19, 23])
def test_obligations_p_3mod4(p):
    # everything up to the last step holds for odd primes, but the GREATER
    # part is even and simple_swap has no fixed point
    checks = P.check_obligations(p)
    assert checks["tau_unique_fixed_point"] is False  # gated on p = 1 mod 4
    assert checks["tau_involution"] and checks["P2_odd"] and checks["less_fixed_point_free"]
    assert not checks["greater_odd"]
    assert not checks["greater_has_fixed_point"]


def test_quad_keys_invalid_rows():
    arr = np.array([[4, 2, 3, 3], [0, 2, 3, 3], [4, 2, 3, 4], [17, 1, 1, 0]], dtype=np.int64)
    keys = P.quad_keys(arr, 17)
    assert keys[0] >= 0 and list(keys[1:]) == [-1, -1, -1]


def test_parity_chain():
    for p in PRIMES_1MOD4:
        arr = P.enumerate_P2_array(p)
        less, equal, greater = (int(m.sum()) for m in P.strata_masks(arr))
        assert len(arr) % 2 == 1 and less % 2 == 0 and equal % 2 == 0
        assert greater % 2 == 1
        fixed = P.greater_fixed_points_array(arr, p)
        for a1, f1, a2, f2 in fixed.tolist():
            assert a1 == f1 and a2 == f2 and a1 * a1 + a2 * a2 == p
