"""The Lorentzian area form and the hyperboloid of area-pi bodies.

form_A is the bilinear form (1/2pi) int (h1 h2 - h1' h2'); on support
functions it is the mixed area divided by pi.  Bodies of area pi sit on the
hyperboloid {A(h) = 1, pi0(h) > 0} and acosh of the form is their distance.
The form has signature (1, -, -, ...) on pi-periodic functions, which makes
the reversed Cauchy-Schwarz inequality (the Minkowski inequality for bodies)
hold exactly -- also for the discretized form, provided all operands are
evaluated through the same route.  form_A therefore dispatches: closed-form
mixed areas when both operands carry shape tags, and the Parseval sum on
coefficients otherwise.
"""

import math
from dataclasses import dataclass

import numpy as np

from .shapes import Segment, mixed_area
from .supportfn import (
    DEFAULT_GRID,
    EvenFn,
    GridMismatchError,
    combine,
    from_segment,
    scaled,
)

FORM_UNIT_TOL = 1e-10
CLAMP_TOL = 1e-12
INVARIANT_TOL = 1e-9


class IsotropicVectorError(ValueError):
    """Normalization of a vector with nonpositive form value (zero-area body)."""


class HyperbolicInvariantError(ValueError):
    """The form of two hyperboloid points fell materially below 1."""


def acosh1p(x):
    """acosh(1 + x) for x >= 0 without cancellation near 0."""
    if x < 0.0:
        raise ValueError("acosh1p needs a nonnegative argument, got %r" % (x,))
    return math.log1p(x + math.sqrt(2.0 * x + x * x))


def _spectral_weights(M):
    n = np.arange(M // 2 + 1, dtype=float)
    w = 2.0 * (1.0 - n**2)
    w[0] = 1.0
    w[-1] = 1.0 - n[-1] ** 2
    return w


def form_A_spectral(h1, h2=None):
    """The Parseval form of the samples: a0 a0' + (1/2) sum (1-n^2)(an an' + bn bn')."""
    if h2 is None or h2 is h1:
        c = h1._coeffs
        return float(np.dot(_spectral_weights(h1.grid), (c * np.conj(c)).real))
    if h1.grid != h2.grid:
        raise GridMismatchError("grids differ: %d vs %d" % (h1.grid, h2.grid))
    c1, c2 = h1._coeffs, h2._coeffs
    return float(np.dot(_spectral_weights(h1.grid), (c1 * np.conj(c2)).real))


def _form_exact(h1, h2):
    if h2 is None or h2 is h1:
        return h1.scale**2 * h1.shape_tag.area() / math.pi
    return h1.scale * h2.scale * mixed_area(h1.shape_tag, h2.shape_tag) / math.pi


def form_A(h1, h2=None, method="auto"):
    """The Lorentzian area form A(h1, h2); A(h) when h2 is omitted.

    method: "auto" uses exact mixed areas when both operands carry shape
    tags and the spectral sum otherwise; "spectral" and "exact" force a
    route ("exact" requires tags).
    """
    if method == "spectral":
        return form_A_spectral(h1, h2)
    both_tagged = h1.shape_tag is not None and (h2 is None or h2.shape_tag is not None)
    if method == "exact":
        if not both_tagged:
            raise ValueError("exact form needs shape tags on every operand")
        return _form_exact(h1, h2)
    if method != "auto":
        raise ValueError("unknown method %r" % (method,))
    if both_tagged:
        if h2 is not None and h1.grid != h2.grid:
            raise GridMismatchError("grids differ: %d vs %d" % (h1.grid, h2.grid))
        return _form_exact(h1, h2)
    return form_A_spectral(h1, h2)


def pi0(h, method="auto"):
    """Mean of h over the circle: A(h, 1), perimeter/(2 pi) for bodies."""
    if method == "auto" and h.shape_tag is not None:
        return h.scale * h.shape_tag.perimeter() / (2.0 * math.pi)
    return float(h.samples.mean())


def h1_seminorms(h):
    """Full-period Parseval integrals (int h^2, int h'^2) over [0, 2pi).

    Unnormalized, so that (1/2pi)(L2sq - dL2sq) reproduces form_A exactly.
    """
    c = h._coeffs
    n = np.arange(h.grid // 2 + 1, dtype=float)
    p = 2.0 * (c * np.conj(c)).real
    p[0] *= 0.5
    p[-1] *= 0.5
    l2 = 2.0 * math.pi * float(p.sum())
    dl2 = 2.0 * math.pi * float(np.dot(n**2, p))
    return l2, dl2


@dataclass(frozen=True)
class HPoint:
    """A point of the hyperboloid: A(fn) = 1 and pi0(fn) >= 1."""

    fn: EvenFn

    def __post_init__(self):
        a = form_A(self.fn)
        if abs(a - 1.0) > FORM_UNIT_TOL:
            raise ValueError("not normalized: A(fn) = %.17g" % a)
        p = pi0(self.fn)
        if p < 1.0 - INVARIANT_TOL:
            raise ValueError("pi0(fn) = %.17g < 1 breaks the hyperboloid invariant" % p)


def normalize(h):
    """Project h onto the hyperboloid: h / sqrt(A(h)).

    Raises IsotropicVectorError for isotropic or negative vectors, e.g. the
    support function of a segment (zero area).
    """
    a = form_A(h)
    p = pi0(h)
    if a <= 0.0 or p <= 0.0:
        raise IsotropicVectorError(
            "isotropic or negative vector: A(h) = %.3g, pi0(h) = %.3g" % (a, p)
        )
    return HPoint(scaled(h, 1.0 / math.sqrt(a)))


def _cosh_between(p, q, method="auto"):
    a12 = form_A(p.fn, q.fn, method=method)
    a11 = form_A(p.fn, method=method)
    a22 = form_A(q.fn, method=method)
    return a12 / math.sqrt(a11 * a22)


def hyper_dist(p, q, method="auto"):
    """Hyperbolic distance acosh A(p, q) between hyperboloid points.

    The form value is normalized by sqrt(A(p)A(q)) (unity within the HPoint
    tolerance) so that mixed exact/spectral operands still satisfy the
    reversed Cauchy-Schwarz bound.  Values within CLAMP_TOL below 1 are
    round-off and clamp to 1; anything below 1 - 1e-9 is a real invariant
    violation and raises.
    """
    x = _cosh_between(p, q, method=method)
    if x < 1.0 - INVARIANT_TOL:
        raise HyperbolicInvariantError(
            "A(p, q) = %.17g < 1: reversed Cauchy-Schwarz violated" % x
        )
    return acosh1p(max(0.0, x - 1.0))


def geodesic_point(p, q, t):
    """The point (1-t)p + t q on the chord, renormalized to the hyperboloid.

    The affine parameter t is not arclength, but the image point lies on the
    metric geodesic: d(p, r) + d(r, q) = d(p, q).
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1], got %r" % (t,))
    if p.fn is q.fn or np.array_equal(p.fn.samples, q.fn.samples):
        return p
    if t == 0.0:
        return p
    if t == 1.0:
        return q
    return normalize(combine(1.0 - t, p.fn, t, q.fn))


def _direction_angle(d):
    theta = getattr(d, "theta", d)
    return float(theta)


def project_disc_to_segment_geodesic(nu, omega, M=DEFAULT_GRID):
    """Nearest point of the geodesic joining two boundary directions to the disc.

    The geodesic through two segment classes consists of area-pi
    parallelograms a*v + b*w; the perimeter 2(a+b) with ab pinned by the area
    is minimal exactly at a = b, so the projection is the rhombus homothetic
    to v + w, returned area-normalized.
    """
    t1, t2 = _direction_angle(nu), _direction_angle(omega)
    delta = abs(t1 - t2) % math.pi
    delta = min(delta, math.pi - delta)
    if delta < 1e-12:
        raise ValueError("equal directions span no geodesic")
    a = 0.5 * math.sqrt(math.pi / math.sin(delta))
    s1 = from_segment(Segment(a * np.array([math.cos(t1), math.sin(t1)])), M)
    s2 = from_segment(Segment(a * np.array([math.cos(t2), math.sin(t2)])), M)
    return normalize(combine(1.0, s1, 1.0, s2))
