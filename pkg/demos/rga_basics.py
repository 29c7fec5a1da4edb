"""Relative gain array basics on a small nonsingular plant.

The RGA of a gain matrix tells you how strongly each input-output pairing
interacts with the rest of the system: entry (i, j) compares the gain from
input j to output i with all other loops open versus closed. Two structural
facts make it trustworthy: every row and column sums to 1, and the answer
does not depend on the units chosen for the variables.
"""

import numpy as np

from ucrga import rga_strict

np.set_printoptions(precision=4, suppress=True)

# a 3x3 plant: three actuators driving three measured outputs
plant = np.array(
    [
        [7.0, 4.0, 8.0],
        [7.0, 2.0, 5.0],
        [3.0, 8.0, 8.0],
    ]
)

result = rga_strict(plant)
print("plant gain matrix:")
print(plant)
print()
print("relative gain array:")
print(result.rga)
print()
print("row sums:   ", result.row_sums)
print("column sums:", result.col_sums)
print("element sum:", result.element_sum, "(equals the rank, here the full dimension)")
print()

# Now express the inputs in different units: say the first actuator command
# moves from volts to millivolts and so on. That rescales columns of the
# plant, and the RGA must not move.
unit_change = np.array([3.0, 4.0, 2.0])
rescaled = plant * unit_change

print("same plant with rescaled input units (columns times 3, 4, 2):")
print(rescaled)
print()
print("its RGA is identical:")
print(rga_strict(rescaled).rga)
print()
print("max difference:", np.abs(result.rga - rga_strict(rescaled).rga).max())
