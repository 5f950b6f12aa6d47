import pytest

from oracles import sieve_primes, two_square_pairs
from twosquares import solver
from twosquares.errors import BadResidue, InvariantViolation, NoDecomposition, NotPrime
from twosquares.solver import Decomposition, PrimeWitness, Route

PRIMES_1MOD4 = [p for p in sieve_primes(2000) if p % 4 == 1]


class TestCheckPrime:
    def test_examples(self):
        assert solver.check_prime_1mod4(17) == PrimeWitness(17, 4)
        assert solver.check_prime_1mod4(13) == PrimeWitness(13, 3)

    def test_bad_residue(self):
        with pytest.raises(BadResidue, match="7 ≡ 3"):
            solver.check_prime_1mod4(7)

    @pytest.mark.parametrize("n", [1, 9, 21, 25, 1001])
    def test_not_prime(self, n):
        with pytest.raises(NotPrime):
            solver.check_prime_1mod4(n)

    def test_witness_validates(self):
        with pytest.raises(BadResidue):
            PrimeWitness(17, 3)
        with pytest.raises(NotPrime):
            PrimeWitness(21, 5)


class TestZagier:
    @pytest.mark.parametrize(
        "p, ab, witness", [(17, (4, 1), (1, 2, 2)), (5, (2, 1), (1, 1, 1)), (13, (3, 2), (3, 1, 1))]
    )
    def test_examples(self, p, ab, witness):
        d = solver.decompose_zagier(solver.check_prime_1mod4(p))
        assert (d.a, d.b) == ab
        assert d.witness == witness
        assert d.route is Route.ZAGIER

    @pytest.mark.parametrize("p", PRIMES_1MOD4)
    def test_witness_structure(self, p):
        d = solver.decompose_zagier(solver.check_prime_1mod4(p))
        x, y, z = d.witness
        assert y == z and x % 2 == 1
        assert {d.a, d.b} == {x, 2 * y}


class TestChristopher:
    @pytest.mark.parametrize(
        "p, ab, witness", [(5, (2, 1), (2, 2, 1, 1)), (13, (3, 2), (3, 3, 2, 2)), (17, (4, 1), (4, 4, 1, 1))]
    )
    @pytest.mark.parametrize("vectorized", [True, False])
    def test_examples(self, p, ab, witness, vectorized):
        d = solver.decompose_christopher(solver.check_prime_1mod4(p), vectorized=vectorized)
        assert (d.a, d.b) == ab
        assert d.witness == witness

    @pytest.mark.parametrize("p", PRIMES_1MOD4[:40])
    def test_paths_agree(self, p):
        w = solver.check_prime_1mod4(p)
        assert solver.decompose_christopher(w) == solver.decompose_christopher(w, vectorized=False)

    @pytest.mark.parametrize("p", PRIMES_1MOD4)
    def test_witness_structure(self, p):
        a1, f1, a2, f2 = solver.decompose_christopher(solver.check_prime_1mod4(p)).witness
        assert a1 == f1 > a2 == f2 >= 1


class TestOracle:
    def test_examples(self):
        assert (solver.decompose_oracle(17).a, solver.decompose_oracle(17).b) == (4, 1)
        assert (solver.decompose_oracle(2).a, solver.decompose_oracle(2).b) == (1, 1)

    @pytest.mark.parametrize("n", [3, 7, 21, 6])
    def test_none(self, n):
        with pytest.raises(NoDecomposition):
            solver.decompose_oracle(n)

    @pytest.mark.parametrize("n", range(1, 300))
    def test_against_exhaustive_pairs(self, n):
        pairs = two_square_pairs(n)
        if pairs:
            d = solver.decompose_oracle(n)
            assert (d.a, d.b) in pairs
        else:
            with pytest.raises(NoDecomposition):
                solver.decompose_oracle(n)


@pytest.mark.parametrize("p", PRIMES_1MOD4)
def test_route_agreement(p):
    w = solver.check_prime_1mod4(p)
    pairs = {
        solver.decompose_zagier(w).pair,
        solver.decompose_christopher(w).pair,
        solver.decompose_oracle(p).pair,
    }
    assert len(pairs) == 1


class TestDecomposition:
    def test_soundness_enforced(self):
        with pytest.raises(InvariantViolation):
            Decomposition(17, 4, 2, Route.ORACLE)
        with pytest.raises(InvariantViolation):
            Decomposition(17, 1, 4, Route.ORACLE)

    def test_dict_round_trip(self):
        w = solver.check_prime_1mod4(29)
        for d in (solver.decompose_zagier(w), solver.decompose_christopher(w), solver.decompose_oracle(29)):
            assert Decomposition.from_dict(d.to_dict()) == d


class TestVerifyPipeline:
    def test_p17(self):
        report = solver.verify_pipeline(solver.check_prime_1mod4(17))
        assert report.passed, report.failed
        assert report.sizes["S"] == 5
        assert report.sizes["EQUAL"] == 8

    def test_p5(self):
        report = solver.verify_pipeline(solver.check_prime_1mod4(5))
        assert report.passed
        assert report.sizes["S"] == 1

    def test_p29(self):
        report = solver.verify_pipeline(solver.check_prime_1mod4(29))
        assert report.passed
        assert {d.pair for d in report.decompositions.values()} == {frozenset((5, 2))}

    def test_covers_both_proofs(self):
        checks = solver.verify_pipeline(solver.check_prime_1mod4(13)).checks
        for name in (
            "windmill.S_bounded",
            "windmill.zag_involution",
            "windmill.zig_involution",
            "windmill.zag_unique_fixed_point",
            "windmill.no_boundary",
            "windmill.type_duality",
            "windmill.S_odd",
            "partition.tau_involution",
            "partition.tau_unique_fixed_point",
            "partition.equal_size",
            "partition.less_fixed_point_free",
            "partition.greater_odd",
            "routes_agree",
        ):
            assert checks[name], name
