"""Generalized RGAs on rectangular and rank-deficient matrices.

A clean sanity check for any generalized RGA: put two descriptions of the
same system side by side, differing only in units. The two blocks of the
result must be identical, because they describe identical physics. The
unit-consistent route passes; the Moore-Penrose route fails by shifting
interaction weight toward whichever copy has the larger numbers.
"""

import numpy as np

from ucrga import rga_mp, rga_strict, rga_uc, rga_summary

np.set_printoptions(precision=4, suppress=True)

plant = np.array(
    [
        [7.0, 4.0, 8.0],
        [7.0, 2.0, 5.0],
        [3.0, 8.0, 8.0],
    ]
)
rescaled = plant * np.array([3.0, 4.0, 2.0])  # same system, different input units
wide = np.hstack([plant, rescaled])

print("wide 3x6 matrix: [plant | plant with rescaled columns]")
print(wide)
print()

uc = rga_uc(wide)
print("UC-RGA (blocks identical, each half the square-plant RGA):")
print(uc.rga)
print("max block difference:", np.abs(uc.rga[:, :3] - uc.rga[:, 3:]).max())
print("element sum:", round(uc.element_sum, 12), "= rank", uc.numerical_rank)
print()

mp = rga_mp(wide)
print("MP-RGA (blocks differ although they describe the same system):")
print(mp.rga)
print("max block difference:", np.abs(mp.rga[:, :3] - mp.rga[:, 3:]).max())
print()

print("for reference, the square plant's strict RGA:")
print(rga_strict(plant).rga)
print()

# Rank-1 two-by-two: the system is constrained to one dimension, so the two
# pairings are equivalent and the UC-RGA is the constant quarter matrix.
rank_one = np.array([[1.0, 2.0], [3.0, 6.0]])
print("rank-1 2x2 plant:")
print(rank_one)
print("UC-RGA:")
print(rga_uc(rank_one).rga)
print()

# With an all-zero row the row sums can no longer all match the column sums;
# only the element-sum-equals-rank rule survives, and the summary marks the
# sum checks informational instead of failing hard.
degenerate = np.array([[2.0, -5.0], [0.0, 0.0]])
result = rga_uc(degenerate)
print("plant with a dead output row:")
print(degenerate)
print("UC-RGA:", result.rga.tolist())
print("row sums:", result.row_sums, " column sums:", result.col_sums)
for check in rga_summary(result).checks:
    tag = "informational" if check.informational else "hard"
    print(f"  {check.name}: value {check.value:.3g} ({tag}, {'pass' if check.passed else 'fail'})")
