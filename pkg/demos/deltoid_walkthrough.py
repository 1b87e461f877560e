"""Symmetries of the deltoid and its similarity with a transformed copy.

Run with:  python3 demos/deltoid_walkthrough.py
"""

from curvesim.arith import Poly, RatFunc
from curvesim.curve import ParamCurve
from curvesim.detect import build_delta_nonzero_system, similar_gen, symmetries
from curvesim.moebius import Moebius, moebius_apply_curve
from curvesim.report import format_witness, witness_report

t = Poly.x()
den = (t ** 2 + 1) ** 2
deltoid = ParamCurve(RatFunc(-t ** 4 - 6 * t ** 2 + 3, den), RatFunc(8 * t ** 3, den))

print("deltoid:", deltoid)
print()
print("== symmetries ==")
ws = symmetries(deltoid)
for i, w in enumerate(ws, 1):
    print(format_witness(witness_report(w, 6), i))

# z'(0) = 0 for this parametrization; the shifted one z(t - 1) is regular at 0
z1 = moebius_apply_curve(deltoid, Moebius(1, -1))
system = build_delta_nonzero_system(z1, z1)
print()
print("condition system on z(t - 1):")
print("  Delta(b) =", system.delta_cap)
print("  Q(b)     =", system.Q)

image = ParamCurve(RatFunc(t ** 4 + 4 * t ** 3 + 2 * t ** 2 + 1, den),
                   RatFunc(5 * t ** 4 + 14 * t ** 2 + 1, 2 * den))
print()
print("== similarities between z(t - 1) and a transformed deltoid ==")
for i, w in enumerate(similar_gen(z1, image), 1):
    print(format_witness(witness_report(w, 6), i))
