#!/usr/bin/env python3
"""The one-sided shift: a frame image from a non-invertible operator.

Everything here runs in exact rational arithmetic on finitely-supported
sequences, so the identities hold with zero residual, not to a tolerance.

down maps e_n to e_{n-1} (killing e_1); up maps e_n to e_{n+1}.  Then
down(up(h)) = h for every h, yet neither factor is invertible: the
down-images {down(e_n)} form a tight frame with bound exactly 1 while
the up-images {up(e_n)} never reach e_1, refuting any lower bound.
"""

from fractions import Fraction

from framekit import (RationalComplex, SparseSeq, delta, shift_down, shift_up,
                      verify_shift_counterexample, verify_tlstar_obstruction)

# down kills e_1 but moves every higher index one step down
print("down(e_1) =", shift_down(delta(1)).entries)
print("down(e_5) =", shift_down(delta(5)).entries)

# one-sided inverse: down(up(h)) = h exactly, up(down(e_1)) = 0
h = SparseSeq({2: RationalComplex.of(Fraction(3, 7)),
               9: RationalComplex.of(0, Fraction(-5, 3))})
print("\ndown(up(h)) == h:", shift_down(shift_up(h)) == h)
print("up(down(e_1)):", shift_up(shift_down(delta(1))).entries, "(mass lost)")

# tight-frame identity, both sides summed independently and exactly
energy = Fraction(0)
for n in range(1, 11):
    energy += h.inner(shift_down(delta(n))).abs_sq()
print(f"\nsum_n |<h, down(e_n)>|^2 = {energy} = ||h||^2 = {h.norm_sq()}")

# the up-images never produce a first coefficient: e_1 is orthogonal to
# the whole family, so no positive lower frame bound can exist
misses = sum(delta(1).inner(shift_up(delta(n))).abs_sq() for n in range(1, 60))
print(f"sum_n |<e_1, up(e_n)>|^2 = {misses} < 1 = ||e_1||^2")

# aggregate reports over seeded random sparse inputs - every check exact
rep = verify_shift_counterexample(max_index=1000, trials=300, seed=42)
print("\nshift counterexample checks:", rep.checks)

rep = verify_tlstar_obstruction(trials=300, seed=42, max_index=500)
print("coefficient-map obstruction checks:", rep.checks)
