#!/usr/bin/env python3
"""Norm collapse: why I + c E_y T_x cannot be surjective when x y is integral.

The witness f_n has n pieces of the form (-1)^k c^k e^{2 pi i k y t} on
[k x, (k+1) x).  Applying I + c E_y T_x telescopes all but the first and
last pieces away, so the image norm is a constant 2x while ||f_n||^2 = n x
grows.  The ratio 2/n refutes every candidate lower bound, and an operator
bounded below by no positive constant cannot be surjective.

Interval endpoints, frequencies and phases are exact rationals here: the
telescoping cancellation and both norms come out exactly, not just to
rounding accuracy.
"""

from fractions import Fraction

from framekit import build_witness, collapse_report, norm_sq
from framekit.gabor_continuous import add, modulate_translate, normalize

# look at the witness for n = 6, x = 1, y = 1, c = 1
f = build_witness(6, 1, 1, 0)
print("witness pieces (interval, frequency, coefficient):")
for p in f.pieces:
    print(f"  [{p.left}, {p.right})  freq {p.freq}  coef {p.coefficient()}")
print("||f||^2 =", norm_sq(f), "(exact rational)")

image = normalize(add(f, modulate_translate(f, 1, 1, 0)))
print("\nafter I + E_1 T_1, only two pieces survive:")
for p in image.pieces:
    print(f"  [{p.left}, {p.right})  freq {p.freq}  coef {p.coefficient()}")
print("||(I + E_1 T_1) f||^2 =", norm_sq(image))

# the collapse across n, for rational parameters with x y integral
rep = collapse_report(10, Fraction(1, 2), 2, Fraction(1, 7))
print("\nx=1/2, y=2, c=e^{2 pi i/7}:  (norm, image norm, ratio)")
for row in rep.rows:
    print(f"  n={row.n:2d}  {row.norm_sq!s:>6}  {row.numerator!s:>4}"
          f"  {row.ratio!s:>6}")
print("checks:", rep.checks)

# contrast: x y not an integer, the telescoping identity fails and the
# image mass is whatever it is - reported, not asserted
rep = collapse_report(4, 1, Fraction(1, 2), 0)
print(f"\ncontrast x=1, y=1/2 (xy not integral): image norm at n=4 is "
      f"{rep.rows[-1].numerator}, not 2x = 2")
