# Partitions with two distinct part sizes, and the three involutions on them.
#
# Run from the repository root:  python3 demos/02_partitions.py
import numpy as np

from twosquares import involution as inv
from twosquares import partition as P

# (a1, f1, a2, f2) means f1 parts of size a1 and f2 parts of size a2, a1 > a2
p = 17
s = P.enumerate_P2(p)
print(f"|P2_{p}| =", len(s))
print("first few:", s.elements[:6])

# conjugation transposes the Young diagram; only one diagram is self-conjugate
q = P.Quad(4, 2, 3, 3)
print(q, "-> tau ->", P.tau(q), "-> tau ->", P.tau(P.tau(q)))
print("tau fixed:", inv.fixed_points(s, P.tau).elements)

# split by comparing the two multiplicities
less, equal, greater = P.stratify(s)
print("sizes LESS/EQUAL/GREATER:", len(less), len(equal), len(greater))

# LESS pairs off under double_swap, EQUAL has even size (p-1)/2
print("double_swap fixed on LESS:", len(inv.fixed_points(less, P.double_swap)))
print("EQUAL == {q(n)}:", equal == P.enumerate_equal_stratum(p))

# GREATER is odd, so simple_swap has a fixed point (a, a, b, b): p = a^2 + b^2
(fixed,) = inv.fixed_points(greater, P.simple_swap)
print("simple_swap fixed:", fixed, f"-> {fixed.a1}^2 + {fixed.a2}^2 = {fixed.a1**2 + fixed.a2**2}")

# the same with arrays, for a prime where objects get slow
p = 4001
arr = P.enumerate_P2_array(p)
sizes = [int(m.sum()) for m in P.strata_masks(arr)]
print(f"|P2_{p}| = {len(arr)}, strata {sizes}")
print("GREATER fixed:", P.greater_fixed_points_array(arr, p).tolist())

# the count outgrows p log p: the printed ratio keeps climbing
for n in (101, 1009, 4001):
    print(n, len(P.enumerate_P2_array(n)), round(len(P.enumerate_P2_array(n)) / (n * np.log(n)), 3))
