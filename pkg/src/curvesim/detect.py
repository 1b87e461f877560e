"""Similarity detection between rational curves.

Given proper parametrizations z1, z2 the searched similarities f come
with a Moebius map phi such that z2(phi(t)) = f(z1(t)).  With phi(0) = beta
the whole witness is a rational function of beta; the identity above then
becomes a family of polynomial conditions P_l(beta) = 0.  Their gcd, with
the spurious factors coming from denominators removed, has as real roots
exactly the parameters of the similarities.

Two families of phi are searched:

* ``phi(t) = (alpha*t + beta) / (gamma*t + 1)`` (``delta != 0``), solved in
  closed form from first and second derivatives at t = 0;
* ``phi(t) = (beta*t + alpha) / t`` (``delta = 0``), reduced to the affine
  search ``phi(t) = alpha*t + beta`` for the curve t -> z1(1/t).

Orientation-reversing maps are found by running the same searches with
conj(z1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import cmath
import math
from math import lcm as ilcm

from .arith import (
    GaussianRational,
    Poly,
    RatFunc,
    _to_zz,
    poly_exquo,
    poly_gcd,
    poly_gcd_many,
    re_im_split,
)
from .curve import ParamCurve, precondition, taylor2, validate
from .errors import InternalDegenerate, PreconditionViolated, UnequalDegrees
from .moebius import Moebius, moebius_substitute
from .realroots import (
    AlgComplex,
    AlgebraicReal,
    evaluate_at,
    isolate_real_roots,
    reduce_mod_minpoly,
    sign_at,
)
from .similarity import Orientation, Similarity, is_isometry

__all__ = [
    "Branch",
    "ConditionSystem",
    "SimilarityWitness",
    "build_linear_affine_system",
    "build_delta_nonzero_system",
    "lift_witnesses",
    "verify_witness",
    "check_identity",
    "similar_pol",
    "similar_gen",
    "similar",
    "symmetries",
]

BETA = Poly.x()


class Branch(str, Enum):
    LINEAR_AFFINE = "linear-affine"
    DELTA_NONZERO_PRESERVING = "delta-nonzero-preserving"
    DELTA_NONZERO_REVERSING = "delta-nonzero-reversing"
    DELTA_ZERO_PRESERVING = "delta-zero-preserving"
    DELTA_ZERO_REVERSING = "delta-zero-reversing"


@dataclass(eq=False)
class ConditionSystem:
    """Everything computed for one search, as functions of beta."""

    kind: str
    alpha: RatFunc
    a: tuple
    b: tuple
    condition_numerators: list
    P: Poly
    Q: Poly
    strip: list
    xi: Poly | None = None
    gamma: RatFunc | None = None
    delta_cap: RatFunc | None = None
    A: Fraction | None = None
    B: Fraction | None = None
    C: RatFunc | None = None
    D: RatFunc | None = None

    def moebius_at(self, beta: AlgebraicReal) -> Moebius:
        al = evaluate_at(self.alpha, beta)
        b0 = evaluate_at(BETA, beta)
        if self.gamma is None:
            return Moebius(al, b0, 0, 1)
        return Moebius(al, b0, evaluate_at(self.gamma, beta), 1)

    def similarity_at(self, beta: AlgebraicReal, orientation) -> Similarity:
        a = AlgComplex(evaluate_at(self.a[0], beta), evaluate_at(self.a[1], beta))
        b = AlgComplex(evaluate_at(self.b[0], beta), evaluate_at(self.b[1], beta))
        return Similarity(orientation, a, b)


@dataclass(eq=False)
class SimilarityWitness:
    """A similarity f with its parameter change phi: z2(phi(t)) = f(z1(t))."""

    beta: AlgebraicReal
    moebius: Moebius
    similarity: Similarity
    branch: Branch
    verified: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def orientation(self) -> Orientation:
        return self.similarity.orientation

    def inverted(self) -> "SimilarityWitness":
        return SimilarityWitness(self.beta, self.moebius.inverse(),
                                 self.similarity.inverse(), self.branch,
                                 self.verified, dict(self.notes))

    def reparametrized(self, mu: Moebius) -> "SimilarityWitness":
        """The same similarity with parameter change phi o mu."""
        phi = self.moebius.compose(mu)
        return SimilarityWitness(self.beta, phi, self.similarity, self.branch,
                                 self.verified, dict(self.notes))

    def same_as(self, other: "SimilarityWitness") -> bool:
        if self.orientation != other.orientation:
            return False
        fa, fb = self.similarity.numeric()
        ga, gb = other.similarity.numeric()
        if abs(fa - ga) > 1e-6 * (1 + abs(fa)) or abs(fb - gb) > 1e-6 * (1 + abs(fb)):
            return False
        return self.similarity == other.similarity and self.moebius == other.moebius

    def __repr__(self):
        return (f"SimilarityWitness({self.branch.value}, {self.similarity!r}, "
                f"phi={self.moebius!r}, beta={self.beta!r})")


# ---------------------------------------------------------------------------
# construction of the condition systems
# ---------------------------------------------------------------------------

def _int_poly(p: Poly) -> Poly:
    return Poly(_to_zz(p.c)[1]) if p else Poly()


def _common(parts):
    """Integer numerators and common integer denominator of rational functions."""
    den = Poly((1,))
    for f in parts:
        den = _plcm(den, f.den)
    nums = [f.num * poly_exquo(den, f.den) for f in parts]
    scale = 1
    for p in nums + [den]:
        for c in p.c:
            scale = ilcm(scale, Fraction(c).denominator)
    return [p.scale(scale) for p in nums], den.scale(scale)


def _plcm(a: Poly, b: Poly) -> Poly:
    if a.degree() == 0:
        return b.monic()
    if b.degree() == 0:
        return a.monic()
    return poly_exquo(a * b, poly_gcd(a, b)).monic()


def _tcoeffs(p_t: Poly, q_beta: Poly) -> Poly:
    """The product p(t) * q(beta) as a polynomial in t over Q[beta]."""
    return Poly([q_beta.scale(c) for c in p_t.c])


def _derivative_data(z2: ParamCurve):
    """Complex rational functions z2, z2' and z2''/(2 z2') of beta."""
    n, d = z2.num, z2.den
    m = n.derivative() * d - n * d.derivative()
    z2_val = RatFunc(n, d)
    z2_d1 = RatFunc(m, d * d)
    half_ratio = RatFunc(m.derivative() * d - (m * d.derivative()).scale(2), (m * d).scale(2))
    return z2_val, z2_d1, half_ratio


def _point_data(z1: ParamCurve):
    t = taylor2(z1.num, z1.den)
    if t is None or t[1] == 0 or t[2] == 0:
        raise PreconditionViolated("z1 needs z1(0) finite and z1'(0), z1''(0) nonzero")
    return tuple(GaussianRational.coerce(v) for v in t)


def _scale_complex(f: RatFunc, c: GaussianRational) -> RatFunc:
    return RatFunc(f.num.scale(c), f.den, reduced=True)


def _condition_numerators(z1: ParamCurve, z2: ParamCurve, alpha: RatFunc,
                          gamma: RatFunc | None, a, b) -> list:
    """Coefficients in t of N2(phi)*D1 - D2(phi)*(a*N1 + b*D1), cleared."""
    if gamma is None:
        (an,), L = _common([alpha])
        gn = Poly()
    else:
        (an, gn), L = _common([alpha, gamma])
    U = Poly((BETA * L, an))
    V = Poly((L, gn)) if gamma is not None else Poly((L,))
    d = z2.degree()
    upow = [Poly((Poly((1,)),))]
    vpow = [Poly((Poly((1,)),))]
    for _ in range(d):
        upow.append(upow[-1] * U)
        vpow.append(vpow[-1] * V)
    terms = [upow[k] * vpow[d - k] for k in range(d + 1)]

    def hom(p: Poly) -> Poly:
        acc = Poly()
        for k in range(d + 1):
            c = p.coeff(k)
            if c != 0:
                acc = acc + Poly([q.scale(c) for q in terms[k].c])
        return acc

    n2r, n2i = hom(z2.num.real_part()), hom(z2.num.imag_part())
    d2 = hom(z2.den)
    (arn, ain), ad = _common(list(a))
    (brn, bin_), bd = _common(list(b))
    d1, n1r, n1i = z1.den, z1.num.real_part(), z1.num.imag_part()
    adbd = ad * bd
    lhs = _tcoeffs(d1, adbd)
    real_rhs = _tcoeffs(n1r, bd * arn) - _tcoeffs(n1i, bd * ain) + _tcoeffs(d1, ad * brn)
    imag_rhs = _tcoeffs(n1i, bd * arn) + _tcoeffs(n1r, bd * ain) + _tcoeffs(d1, ad * bin_)
    er = n2r * lhs - d2 * real_rhs
    ei = n2i * lhs - d2 * imag_rhs
    # The t-fraction with monic denominator D2(phi)*D1 has coefficients
    # c / (ad * bd * lc_t(D2(phi))); reduce each of them.
    multiplier = _int_poly(adbd * d2.lc())
    out = []
    for e in (er, ei):
        for c in e.c:
            if c:
                c = _int_poly(c)
                g = poly_gcd(c, multiplier)
                out.append(_int_poly(poly_exquo(c, g)) if g.degree() > 0 else c)
    return out


def _strip(P: Poly, strip: list) -> Poly:
    Q = P
    for s in strip:
        if not s or s.degree() <= 0:
            continue
        g = poly_gcd(Q, s)
        while g.degree() > 0:
            Q = poly_exquo(Q, g)
            g = poly_gcd(Q, s)
    return _int_poly(Q)


def _numerator_gcd(parts) -> Poly:
    nums, _ = _common(list(parts))
    return poly_gcd_many(nums)


def build_linear_affine_system(z1: ParamCurve, z2: ParamCurve) -> ConditionSystem:
    """Search for phi(t) = alpha*t + beta."""
    c0, c1, c2 = _point_data(z1)
    z2_val, z2_d1, half_ratio = _derivative_data(z2)
    k = c2 / c1
    # alpha must equal the real number (z1''/z1')(0) * (z2'/z2'')(beta)
    s = RatFunc(half_ratio.den.scale(k), half_ratio.num.scale(2))
    alpha, alpha_im = re_im_split(s)
    xi = _int_poly(alpha_im.num)
    pr, pi = re_im_split(_scale_complex(z2_d1, c1.inverse()))
    a = (pr * alpha, pi * alpha)
    xr, xi_ = re_im_split(z2_val)
    b = (xr - (a[0] * c0.re - a[1] * c0.im), xi_ - (a[0] * c0.im + a[1] * c0.re))
    nums = _condition_numerators(z1, z2, alpha, None, a, b)
    P = poly_gcd_many(([xi] if xi else []) + nums)
    if not P:
        raise InternalDegenerate("all conditions vanish identically")
    strip = [alpha.den, _common(list(a))[1], _common(list(b))[1], alpha.num,
             _numerator_gcd(a)]
    Q = _strip(P, strip)
    return ConditionSystem("linear-affine", alpha, a, b, nums, _int_poly(P), Q,
                           [_int_poly(s) for s in strip], xi=xi)


def build_delta_nonzero_system(z1: ParamCurve, z2: ParamCurve) -> ConditionSystem:
    """Search for phi(t) = (alpha*t + beta)/(gamma*t + 1)."""
    c0, c1, c2 = _point_data(z1)
    z2_val, z2_d1, half_ratio = _derivative_data(z2)
    AB = -(c2 / (c1 * 2))
    A, B = AB.re, AB.im
    if B == 0:
        raise PreconditionViolated("z1 needs nonzero curvature at t = 0")
    C, D = re_im_split(half_ratio)
    if not D:
        raise InternalDegenerate("Im(z2''/(2 z2')) vanishes identically")
    delta_cap = RatFunc(Poly((-B,))) / D
    gamma = delta_cap * C + A
    alpha = delta_cap + gamma * RatFunc(BETA)
    pr, pi = re_im_split(_scale_complex(z2_d1, c1.inverse()))
    a = (pr * delta_cap, pi * delta_cap)
    xr, xi_ = re_im_split(z2_val)
    b = (xr - (a[0] * c0.re - a[1] * c0.im), xi_ - (a[0] * c0.im + a[1] * c0.re))
    nums = _condition_numerators(z1, z2, alpha, gamma, a, b)
    P = poly_gcd_many(nums)
    if not P:
        raise InternalDegenerate("all conditions vanish identically")
    strip = [delta_cap.den, alpha.den, gamma.den, _common(list(a))[1],
             _common(list(b))[1], delta_cap.num, _numerator_gcd(a)]
    Q = _strip(P, strip)
    return ConditionSystem("delta-nonzero", alpha, a, b, nums, _int_poly(P), Q,
                           [_int_poly(s) for s in strip], gamma=gamma,
                           delta_cap=delta_cap, A=A, B=B, C=C, D=D)


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def verify_witness(w: SimilarityWitness, system: ConditionSystem) -> bool:
    """All conditions vanish at beta and no stripped polynomial does."""
    beta = w.beta
    for p in system.condition_numerators:
        if reduce_mod_minpoly(p, beta):
            return False
    if system.xi is not None and reduce_mod_minpoly(system.xi, beta):
        return False
    return all(sign_at(s, beta) != 0 for s in system.strip if s)


def lift_witnesses(system: ConditionSystem, branch: Branch,
                   orientation=Orientation.PRESERVING) -> list[SimilarityWitness]:
    if not system.Q:
        raise InternalDegenerate("Q vanishes identically")
    out = []
    for beta in isolate_real_roots(system.Q):
        w = SimilarityWitness(beta, system.moebius_at(beta),
                              system.similarity_at(beta, orientation), branch)
        w.verified = verify_witness(w, system)
        if w.verified:
            out.append(w)
    return out


def check_identity(z1: ParamCurve, z2: ParamCurve, w: SimilarityWitness) -> bool:
    """Direct exact check of z2(phi(t)) = f(z1(t)) by substitution."""
    n, d = moebius_substitute(z2.num, z2.den, w.moebius, z2.degree())
    f = w.similarity
    n1 = z1.num if f.preserving else z1.num.conjugate()
    lhs = n * z1.den
    rhs = d * (n1.scale(f.a) + z1.den.scale(f.b))
    return not (lhs - rhs)


# ---------------------------------------------------------------------------
# drivers
# ---------------------------------------------------------------------------

_ORIENTATIONS = (Orientation.PRESERVING, Orientation.REVERSING)


def _orient(z: ParamCurve, o: Orientation) -> ParamCurve:
    return z if o is Orientation.PRESERVING else z.conjugate()


def similar_pol(z1: ParamCurve, z2: ParamCurve) -> list[SimilarityWitness]:
    """Similarities whose parameter change is affine, phi(t) = alpha*t + beta.

    z1 must satisfy z1(0) finite, z1'(0) != 0 and z1''(0) != 0.
    """
    if z1.degree() != z2.degree():
        raise UnequalDegrees(f"degrees {z1.degree()} and {z2.degree()} differ")
    out = []
    for o in _ORIENTATIONS:
        system = build_linear_affine_system(_orient(z1, o), z2)
        out.extend(lift_witnesses(system, Branch.LINEAR_AFFINE, o))
    return out


def _merge(ws: list[SimilarityWitness]) -> list[SimilarityWitness]:
    out: list[SimilarityWitness] = []
    for w in ws:
        if not any(w.same_as(v) for v in out):
            out.append(w)
    return out


def _similar_gen_core(z1: ParamCurve, z2: ParamCurve) -> list[SimilarityWitness]:
    z1p, mu = precondition(z1, "gen")
    mu_inv = mu.inverse()
    recip = Moebius.reciprocal()
    out = []
    for o in _ORIENTATIONS:
        w1 = _orient(z1p, o)
        branch = (Branch.DELTA_NONZERO_PRESERVING if o is Orientation.PRESERVING
                  else Branch.DELTA_NONZERO_REVERSING)
        system = build_delta_nonzero_system(w1, z2)
        for w in lift_witnesses(system, branch, o):
            out.append(w.reparametrized(mu_inv))
        n, d = moebius_substitute(w1.num, w1.den, recip, w1.degree())
        w1inv = ParamCurve.from_complex(n, d)
        branch = (Branch.DELTA_ZERO_PRESERVING if o is Orientation.PRESERVING
                  else Branch.DELTA_ZERO_REVERSING)
        system = build_linear_affine_system(w1inv, z2)
        for w in lift_witnesses(system, branch, o):
            w.branch = branch
            out.append(w.reparametrized(recip.compose(mu_inv)))
    merged = _merge(out)
    for w in merged:
        # the search ran on z1 o mu; witnesses already refer to z1 itself
        w.notes["precondition"] = mu
    return merged


def _ordered(ws: list[SimilarityWitness]) -> list[SimilarityWitness]:
    """Preserving maps first, then by rotation angle of a in [0, 2*pi)."""
    def key(w):
        a, b = w.similarity.numeric()
        ang = cmath.phase(a) % (2 * math.pi)
        if ang > 2 * math.pi - 1e-12:
            ang = 0.0
        return (not w.similarity.preserving, round(ang, 9), abs(a), b.real, b.imag)
    return sorted(ws, key=key)


def similar_gen(z1: ParamCurve, z2: ParamCurve, *, check: bool = True,
                swap: bool = True) -> list[SimilarityWitness]:
    """All similarities f with z2(phi(t)) = f(z1(t)) for a Moebius map phi."""
    if check:
        validate(z1)
        validate(z2)
    if z1.degree() != z2.degree():
        raise UnequalDegrees(f"degrees {z1.degree()} and {z2.degree()} differ")
    if swap and z2.bitsize() > z1.bitsize():
        ws = [w.inverted() for w in _similar_gen_core(z2, z1)]
        for w in ws:
            w.notes["swapped"] = True
        return _ordered(ws)
    return _ordered(_similar_gen_core(z1, z2))


def similar(z1: ParamCurve, z2: ParamCurve, **kw) -> list[SimilarityWitness]:
    """Verdict-level entry point; unequal degrees mean no similarity."""
    try:
        return similar_gen(z1, z2, **kw)
    except UnequalDegrees:
        return []


def symmetries(z: ParamCurve, *, check: bool = True) -> list[SimilarityWitness]:
    """Symmetries of the curve: similarities from z to itself."""
    ws = similar_gen(z, z, check=check, swap=False)
    for w in ws:
        if not is_isometry(w.similarity):
            raise InternalDegenerate("a self-similarity that is not an isometry")
    return ws
