"""Global and partial similarity of two piecewise deltoid arcs.

Run with:  python3 demos/piecewise_demo.py
"""

from fractions import Fraction

from curvesim.arith import Poly, RatFunc
from curvesim.curve import ParamCurve
from curvesim.moebius import Moebius, moebius_apply_curve
from curvesim.piecewise import PiecewiseCurve, global_similar, partial_similar
from curvesim.report import interval_str

t = Poly.x()
den = (t ** 2 + 1) ** 2
deltoid = ParamCurve(RatFunc(-t ** 4 - 6 * t ** 2 + 3, den), RatFunc(8 * t ** 3, den))
z1 = moebius_apply_curve(deltoid, Moebius(1, -1))
z2 = ParamCurve(RatFunc(t ** 4 + 4 * t ** 3 + 2 * t ** 2 + 1, den),
                RatFunc(5 * t ** 4 + 14 * t ** 2 + 1, 2 * den))

arcs = PiecewiseCurve([(z1, (-1, 0)), (z1, (0, 1))])
# breakpoints -1, 0, 1 moved by t -> t - 1
image = PiecewiseCurve([(z2, (-2, -1)), (z2, (-1, 0))])
short = PiecewiseCurve([(z2, (-2, -1)), (z2, (-1, Fraction(-1, 10)))])

print("global, matching breakpoints:")
for w in global_similar(arcs, image):
    print("  ", w.similarity, " phi =", w.moebius)

print("global, shortened target:", global_similar(arcs, short))
print("partial, shortened target:")
for m in partial_similar(arcs, short):
    print(f"   segment {m.i} -> {m.j}: {m.witness.similarity}  J' = {interval_str(m.overlap)}")
