# Rational approximations for erf/erfc follow FreeBSD's msun s_erf.c.
#
# /* @(#)s_erf.c 5.1 93/09/24 */
# /*
#  * ====================================================
#  * Copyright (C) 1993 by Sun Microsystems, Inc. All rights reserved.
#  *
#  * Developed at SunPro, a Sun Microsystems, Inc. business.
#  * Permission to use, copy, modify, and distribute this
#  * software is freely granted, provided that this notice
#  * is preserved.
#  * ====================================================
#  */
"""
Numerical kernel: erf, erfc, the standard normal CDF, folded-normal moments
and non-central chi-square moments.

erf/erfc accept scalars or numpy arrays and return the same shape (a Python
float for scalar input). Non-finite input raises ValidationError.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from config.settings import NUMERICS
from utils.errors import NumericalError, ValidationError

half = 0.5
one = 1.0
two = 2.0
tiny = 1e-300

SQRT2 = math.sqrt(2.0)
SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

erx = 8.45062911510467529297e-01
efx = 1.28379167095512586316e-01

# Coefficients for approximation to erf on [0, 0.84375]
pp = Polynomial([
    1.28379167095512558561e-01,
    -3.25042107247001499370e-01,
    -2.84817495755985104766e-02,
    -5.77027029648944159157e-03,
    -2.37630166566501626084e-05,
])
qq = Polynomial([
    one,
    3.97917223959155352819e-01,
    6.50222499887672944485e-02,
    5.08130628187576562776e-03,
    1.32494738004321644526e-04,
    -3.96022827877536812320e-06,
])

# Coefficients for approximation to erf in [0.84375, 1.25]
pa = Polynomial([
    -2.36211856075265944077e-03,
    4.14856118683748331666e-01,
    -3.72207876035701323847e-01,
    3.18346619901161753674e-01,
    -1.10894694282396677476e-01,
    3.54783043256182359371e-02,
    -2.16637559486879084300e-03,
])
qa = Polynomial([
    one,
    1.06420880400844228286e-01,
    5.40397917702171048937e-01,
    7.18286544141962662868e-02,
    1.26171219808761642112e-01,
    1.36370839120290507362e-02,
    1.19844998467991074170e-02,
])

# Coefficients for approximation to erfc in [1.25, 1/0.35]
ra = Polynomial([
    -9.86494403484714822705e-03,
    -6.93858572707181764372e-01,
    -1.05586262253232909814e01,
    -6.23753324503260060396e01,
    -1.62396669462573470355e02,
    -1.84605092906711035994e02,
    -8.12874355063065934246e01,
    -9.81432934416914548592e00,
])
sa = Polynomial([
    one,
    1.96512716674392571292e01,
    1.37657754143519042600e02,
    4.34565877475229228821e02,
    6.45387271733267880336e02,
    4.29008140027567833386e02,
    1.08635005541779435134e02,
    6.57024977031928170135e00,
    -6.04244152148580987438e-02,
])

# Coefficients for approximation to erfc in [1/0.35, 28]
rb = Polynomial([
    -9.86494292470009928597e-03,
    -7.99283237680523006574e-01,
    -1.77579549177547519889e01,
    -1.60636384855821916062e02,
    -6.37566443368389627722e02,
    -1.02509513161107724954e03,
    -4.83519191608651397019e02,
])
sb = Polynomial([
    one,
    3.03380607434824582924e01,
    3.25792512996573918826e02,
    1.53672958608443695994e03,
    3.19985821950859553908e03,
    2.55305040643316442583e03,
    4.74528541206955367215e02,
    -2.24409524465858183362e01,
])

SMALL = 0.84375
MEDIUM = 1.25
SPLIT = 1 / 0.35
ERF_SATURATION = 6.0
ERFC_UNDERFLOW = 28.0


def _as_array(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValidationError("special functions require finite input")
    return arr


def _to_output(out: np.ndarray, like: np.ndarray):
    if like.ndim == 0:
        return float(out)
    return out


def _tail_exp(a: np.ndarray) -> np.ndarray:
    """exp(-a^2 - 0.5625 + R/S) for a >= 1.25, the shared erfc tail kernel.

    a^2 is split as z^2 + (a - z)(a + z) with z carrying only the high word
    of a, so the large exponent is formed without rounding error.
    """
    s = one / (a * a)
    near = a < SPLIT
    ratio = np.where(near, ra(s) / sa(s), rb(s) / sb(s))
    z = (np.ascontiguousarray(a).view(np.uint64) & np.uint64(0xFFFFFFFF00000000)).view(np.float64)
    return np.exp(-z * z - 0.5625) * np.exp((z - a) * (z + a) + ratio)


def erf(x):
    """Error function; odd by construction, +-1 beyond |x| >= 6."""
    arr = _as_array(x)
    a = np.abs(np.atleast_1d(arr))
    out = np.empty_like(a)

    tiny_mask = a < 2.0**-28
    small = (a >= 2.0**-28) & (a < SMALL)
    mid = (a >= SMALL) & (a < MEDIUM)
    tail = (a >= MEDIUM) & (a < ERF_SATURATION)
    big = a >= ERF_SATURATION

    out[tiny_mask] = a[tiny_mask] + efx * a[tiny_mask]
    if small.any():
        z = a[small] * a[small]
        out[small] = a[small] + a[small] * (pp(z) / qq(z))
    if mid.any():
        s = a[mid] - one
        out[mid] = erx + pa(s) / qa(s)
    if tail.any():
        out[tail] = one - _tail_exp(a[tail]) / a[tail]
    out[big] = one

    # result computed on |x|; copysign keeps erf(-x) == -erf(x) bit for bit
    out = np.copysign(out, np.atleast_1d(arr))
    return _to_output(out.reshape(arr.shape), arr)


def erfc(x):
    """Complementary error function without cancellation for large x."""
    arr = _as_array(x)
    xs = np.atleast_1d(arr)
    a = np.abs(xs)
    out = np.empty_like(a)

    tiny_mask = a < 2.0**-56
    small = (a >= 2.0**-56) & (a < SMALL)
    mid = (a >= SMALL) & (a < MEDIUM)
    tail = (a >= MEDIUM) & (a < ERFC_UNDERFLOW)
    big = a >= ERFC_UNDERFLOW

    out[tiny_mask] = one - xs[tiny_mask]
    if small.any():
        v = xs[small]
        z = v * v
        y = pp(z) / qq(z)
        below_quarter = v < 0.25
        r = v * y + (v - half)
        out[small] = np.where(below_quarter, one - (v + v * y), half - r)
    if mid.any():
        s = a[mid] - one
        ratio = pa(s) / qa(s)
        out[mid] = np.where(xs[mid] >= 0, (one - erx) - ratio, one + (erx + ratio))
    if tail.any():
        r = _tail_exp(a[tail]) / a[tail]
        out[tail] = np.where(xs[tail] > 0, r, two - r)
    out[big] = np.where(xs[big] > 0, 0.0, two)

    return _to_output(out.reshape(arr.shape), arr)


def normal_cdf(x):
    """Standard normal CDF, (1 + erf(x / sqrt 2)) / 2.

    Beyond |x| >= 1 the complementary form is used so the tails keep full
    relative precision.
    """
    arr = _as_array(x)
    z = np.atleast_1d(arr) / SQRT2
    out = np.empty_like(z)
    inner = np.abs(z) < 1 / SQRT2
    outer = ~inner
    out[inner] = half + half * erf(z[inner])
    tail = half * erfc(np.abs(z[outer]))
    out[outer] = np.where(z[outer] > 0, one - tail, tail)
    return _to_output(out.reshape(arr.shape), arr)


# -------------------------------------------------------------------
# Folded normal
# -------------------------------------------------------------------

@dataclass(frozen=True)
class FoldedNormalParams:
    """|X| with X ~ N(mu, sigma^2)."""
    mu: float
    sigma: float

    def __post_init__(self):
        mu, sigma = float(self.mu), float(self.sigma)
        if not math.isfinite(mu):
            raise ValidationError(f"mu must be finite, got {mu!r}")
        if not math.isfinite(sigma) or sigma <= 0:
            raise ValidationError(f"sigma must be finite and > 0, got {sigma!r}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)


def folded_normal_excess(p: FoldedNormalParams) -> float:
    """E|X| - |mu| = sigma sqrt(2/pi) exp(-mu^2 / 2 sigma^2) - |mu| erfc(|mu| / (sqrt 2 sigma)).

    Non-negative (Jensen); tiny cancellation residue is clamped to zero.
    """
    m = abs(p.mu)
    t = m / (SQRT2 * p.sigma)
    excess = p.sigma * SQRT_2_OVER_PI * math.exp(-t * t) - m * erfc(t)
    return max(excess, 0.0)


def folded_normal_mean(p: FoldedNormalParams) -> float:
    """sigma sqrt(2/pi) exp(-mu^2 / 2 sigma^2) + mu erf(mu / (sqrt 2 sigma)).

    Evaluated as |mu| + excess, which is the same expression with the
    mu * erf term rewritten as |mu| (1 - erfc); the result is never below |mu|.
    """
    return abs(p.mu) + folded_normal_excess(p)


def folded_normal_variance(p: FoldedNormalParams) -> float:
    """mu^2 + sigma^2 - E|X|^2, evaluated as sigma^2 - c (2|mu| + c) with c the excess."""
    c = folded_normal_excess(p)
    sigma2 = p.sigma * p.sigma
    variance = sigma2 - c * (2.0 * abs(p.mu) + c)
    return clamp_variance(variance, sigma2)


def clamp_variance(variance: float, scale: float) -> float:
    """Clamp cancellation noise in [-rtol * scale, 0) to zero; reject anything below."""
    if variance >= 0:
        return variance
    if variance >= -NUMERICS.variance_clamp_rtol * scale:
        return 0.0
    raise NumericalError(f"negative variance {variance!r} (scale {scale!r})")


# -------------------------------------------------------------------
# Non-central chi-square
# -------------------------------------------------------------------

@dataclass(frozen=True)
class NoncentralChiSquareParams:
    """Sum of `dof` squared unit-variance normals with noncentrality `lam`."""
    dof: int
    lam: float

    def __post_init__(self):
        if isinstance(self.dof, bool) or int(self.dof) != self.dof or self.dof < 1:
            raise ValidationError(f"dof must be an integer >= 1, got {self.dof!r}")
        object.__setattr__(self, "dof", int(self.dof))
        lam = float(self.lam)
        if not math.isfinite(lam) or lam < 0:
            raise ValidationError(f"noncentrality must be finite and >= 0, got {self.lam!r}")
        object.__setattr__(self, "lam", lam)


def noncentral_chisq_mean(p: NoncentralChiSquareParams) -> float:
    return p.dof + p.lam


def noncentral_chisq_variance(p: NoncentralChiSquareParams) -> float:
    return 2.0 * p.dof + 4.0 * p.lam
