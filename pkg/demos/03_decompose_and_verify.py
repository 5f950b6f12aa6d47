# Decomposing primes three ways and auditing every step.
#
# Run from the repository root:  python3 demos/03_decompose_and_verify.py
import json
import time

from twosquares import solver
from twosquares.arith import primes_1mod4
from twosquares.errors import BadResidue, NotPrime

# each route checks its own chain of facts before returning
w = solver.check_prime_1mod4(29)
for d in (solver.decompose_zagier(w), solver.decompose_christopher(w), solver.decompose_oracle(29)):
    print(d.route.value, d.a, d.b, d.witness)

# decompositions serialize cleanly
d = solver.decompose_zagier(solver.check_prime_1mod4(1000033))
print(json.dumps(d.to_dict()))
assert solver.Decomposition.from_dict(d.to_dict()) == d

# the hypothesis p = 1 mod 4 is enforced
for bad in (7, 21):
    try:
        solver.check_prime_1mod4(bad)
    except (BadResidue, NotPrime) as exc:
        print(f"{bad}: {type(exc).__name__}: {exc}")

# the full audit: every obligation of both arguments, plus route agreement
report = solver.verify_pipeline(solver.check_prime_1mod4(13))
print("checks passed:", sum(report.checks.values()), "of", len(report.checks))
print("sizes:", report.sizes)

t0 = time.perf_counter()
reports = [solver.verify_pipeline(solver.check_prime_1mod4(p)) for p in primes_1mod4(1, 2000)]
print(f"{len(reports)} primes up to 2000 audited in {time.perf_counter() - t0:.2f} s;",
      "all passed" if all(r.passed for r in reports) else "FAILURES")
