# Windmills and the two involutions on S_p.
#
# Run from the repository root:  python3 demos/01_windmills.py
from collections import Counter

import numpy as np

from twosquares import involution as inv
from twosquares.windmill import Triple, classify, enumerate_S, triple_keys, triples_array, zag, zag_array, zig

# S_17 holds every way to build a windmill of area 17: a central x-by-x
# square plus four y-by-z arms, x^2 + 4yz = 17.
s = enumerate_S(17)
print("S_17 =", list(s))

# zag swaps windmills sharing an outline; it is an involution with one fixed point
for t in s:
    print(f"{tuple(t)} -> zag {tuple(zag(t))}   type {classify(t).name} -> {classify(zag(t)).name}")
print("zag fixed:", inv.fixed_points(s, zag).elements)

# zig swaps the arm dimensions. S_17 is odd, so zig must fix something too
report = inv.orbit_decomposition(s, zig)
print("zig 2-cycles:", report.two_cycles)
print("zig fixed:", report.fixed_points.elements)
x, y, _ = report.fixed_points[0]
print(f"17 = {x}^2 + 4*{y}^2 = {x}^2 + {2 * y}^2")

# a bigger prime, done with the array kernels
p = 10009
arr = triples_array(enumerate_S(p))
keys = triple_keys(arr, p)
perm = inv.encoded_involution(keys, triple_keys(zag_array(arr), p))
print(f"|S_{p}| = {len(arr)}, zag fixed rows:", arr[inv.encoded_fixed_mask(perm)].tolist())

# how the five windmill types are distributed
types = Counter(classify(Triple(*row)).name for row in arr.tolist())
print("types:", dict(sorted(types.items())))
print("T1/T5 balance:", types["T1"] == types["T5"], " T2/T4 balance:", types["T2"] == types["T4"])
print("largest x:", int(np.max(arr[:, 0])))
