"""Why the Moore-Penrose pseudoinverse is the wrong generalization for the RGA.

For singular matrices the classical RGA does not exist, so a generalized
inverse has to stand in for the matrix inverse. The obvious candidate is the
Moore-Penrose pseudoinverse, but it respects Euclidean geometry, not units:
rescale one variable (celsius to fahrenheit, meters to centimeters) and the
MP-based RGA reshuffles. The unit-consistent inverse keeps the RGA invariant,
as it must be for the result to mean anything physical.
"""

import numpy as np

from ucrga import rga_mp, rga_uc

np.set_printoptions(precision=4, suppress=True)

# a rank-1 plant: all interactions identical by symmetry
ones = np.ones((3, 3))
print("all-ones plant (rank 1): every pairing should look the same")
print()
print("MP-RGA:")
print(rga_mp(ones).rga)
print("UC-RGA:")
print(rga_uc(ones).rga)
print()
print("both give 1/9 everywhere, summing to 1 = rank. So far so good.")
print()

# Change units: first output and first input both rescaled by 2. The system
# itself has not changed at all.
scaled = ones.copy()
scaled[0, :] *= 2.0
scaled[:, 0] *= 2.0
print("same plant, first row and column rescaled by 2:")
print(scaled)
print()
print("MP-RGA moves (now claims pairing (1,1) dominates):")
print(rga_mp(scaled).rga)
print()
print("UC-RGA does not move:")
print(rga_uc(scaled).rga)
print()

mp_shift = np.abs(rga_mp(scaled).rga - rga_mp(ones).rga).max()
uc_shift = np.abs(rga_uc(scaled).rga - rga_uc(ones).rga).max()
print(f"max MP-RGA shift under the unit change: {mp_shift:.4f}")
print(f"max UC-RGA shift under the unit change: {uc_shift:.2e}")
