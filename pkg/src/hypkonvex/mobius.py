"""PSL2(R): action on the circle, on support functions, and on the half-plane.

A Mobius element is a real 2x2 unit-determinant matrix up to sign.  It acts
on bodies by the linear map, on circle functions by
rho(A)h(x) = |A^T x| h(A^T x / |A^T x|), and on the Poincare upper half-plane
by homography.  The orbit of the unit disc is the family of area-pi ellipses,
giving an embedding iota of the hyperbolic plane into the hyperboloid of
bodies whose extrinsic distance comes out in closed form through complete
elliptic integrals.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .shapes import Ellipse
from .specfun import agm_KE_from_complement
from .supportfn import (
    DEFAULT_GRID,
    EvenFn,
    SpectralTailWarning,
    _interp,
    _tail_energy_fraction,
    from_ellipse,
    grid_angles,
)
from .lorentz import acosh1p, normalize

DET_TOL = 1e-12


@dataclass(frozen=True)
class Mobius:
    """Element of PSL2(R): entries with ad - bc = 1, canonically signed.

    The stored representative makes the first nonzero of (a, b, c, d)
    positive, so equality of group elements is equality of fields.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        vals = (float(self.a), float(self.b), float(self.c), float(self.d))
        det = vals[0] * vals[3] - vals[1] * vals[2]
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("entries must be finite")
        if abs(det - 1.0) > DET_TOL:
            raise ValueError("determinant must be 1, got %.17g" % det)
        for v in vals:
            if v != 0.0:
                if v < 0.0:
                    vals = tuple(-x for x in vals)
                break
        for name, v in zip(("a", "b", "c", "d"), vals):
            object.__setattr__(self, name, v)

    @property
    def matrix(self):
        return np.array([[self.a, self.b], [self.c, self.d]])

    @classmethod
    def from_matrix(cls, m):
        """Normalize a positive-determinant matrix into PSL2(R)."""
        m = np.asarray(m, dtype=float)
        det = float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
        if det <= 0.0:
            raise ValueError("matrix must have positive determinant, got %.17g" % det)
        m = m / math.sqrt(det)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def rotation(cls, phi):
        return cls(math.cos(phi), -math.sin(phi), math.sin(phi), math.cos(phi))

    @classmethod
    def axial(cls, s):
        """diag(e^{s/2}, e^{-s/2}): translation length s along the imaginary axis."""
        return cls(math.exp(0.5 * s), 0.0, 0.0, math.exp(-0.5 * s))

    def inverse(self):
        return Mobius(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other):
        return Mobius.from_matrix(self.matrix @ other.matrix)


@dataclass(frozen=True)
class HalfPlanePoint:
    """Point x + iy of the Poincare upper half-plane (y > 0)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)) or self.y <= 0.0:
            raise ValueError("need finite x and y > 0, got (%r, %r)" % (self.x, self.y))


BASEPOINT = HalfPlanePoint(0.0, 1.0)


def act_circle(m, theta):
    """The projective action on the circle: the angle of M u / |M u|."""
    scalar = np.ndim(theta) == 0
    theta = np.asarray(theta, dtype=float)
    u = np.stack([np.cos(theta), np.sin(theta)])
    w = m.matrix @ u
    ang = np.arctan2(w[1], w[0]) % (2.0 * math.pi)
    return float(ang) if scalar else ang


def rho_act(m, h):
    """The isometric action on circle functions: |m^T u| h(angle(m^T u)).

    Shape tags transport exactly (ellipse matrix -> mA, segment -> mv,
    polygon -> m vertices).  Untagged functions are resampled by
    trigonometric interpolation; a warning fires when the input spectrum is
    not resolved, since the action shears spectra.
    """
    if h.shape_tag is not None:
        moved = h.shape_tag.transform(m.matrix)
        samples = h.scale * moved.support(grid_angles(h.grid))
        return EvenFn(samples, shape_tag=moved, scale=h.scale)
    frac = _tail_energy_fraction(h)
    if frac > 0.01:
        warnings.warn(
            "input spectrum unresolved (top quarter holds %.2f%% energy); "
            "the sheared result will alias" % (100.0 * frac),
            SpectralTailWarning,
        )
    theta = grid_angles(h.grid)
    u = np.stack([np.cos(theta), np.sin(theta)])
    w = m.matrix.T @ u
    r = np.hypot(w[0], w[1])
    ang = np.arctan2(w[1], w[0])
    return EvenFn(r * _interp(h._coeffs, h.grid, ang))


def halfplane_apply(m, z):
    """Homographic image (az + b)/(cz + d) of a half-plane point."""
    w = complex(m.a * z.x + m.b, m.a * z.y) / complex(m.c * z.x + m.d, m.c * z.y)
    return HalfPlanePoint(w.real, w.imag)


def mobius_from_halfplane(z):
    """The upper-triangular section [[sqrt(y), x/sqrt(y)], [0, 1/sqrt(y)]] with m(i) = z."""
    r = math.sqrt(z.y)
    return Mobius(r, z.x / r, 0.0, 1.0 / r)


def dist_h2(z1, z2):
    """Hyperbolic-plane distance acosh(||B^{-1}A||_F^2 / 2) via the sections.

    Evaluated through ||C||_F^2/2 - 1 = ((a-d)^2 + (b+c)^2)/2, which is exact
    for det C = 1 and keeps nearby points cancellation-free.
    """
    if z1 == z2:
        return 0.0
    c = mobius_from_halfplane(z2).inverse() @ mobius_from_halfplane(z1)
    x = 0.5 * ((c.a - c.d) ** 2 + (c.b + c.c) ** 2)
    return acosh1p(x)


def iota(z, M=DEFAULT_GRID):
    """Embed the hyperbolic plane: a half-plane point goes to its area-pi ellipse."""
    return normalize(from_ellipse(Ellipse(mobius_from_halfplane(z).matrix), M))


def _quadrature_grid(m, max_grid):
    s = np.linalg.svd(m.matrix, compute_uv=False)
    width = s[1] / s[0]
    need = max(4096.0, 48.0 / width)
    return min(1 << math.ceil(math.log2(need)), max_grid)


def iota_dist_quadrature(m, max_grid=2**22):
    """Extrinsic distance acosh((1/2pi) int |m^T u|) by periodic trapezoid.

    The integrand is analytic for nondegenerate m, so the trapezoid rule is
    spectrally accurate; the grid adapts to the singular-value ratio, which
    sets the width of the strip of analyticity.
    """
    mq = _quadrature_grid(m, max_grid)
    theta = 2.0 * math.pi * np.arange(mq) / mq
    w = m.matrix.T @ np.stack([np.cos(theta), np.sin(theta)])
    mean = float(np.hypot(w[0], w[1]).mean())
    return acosh1p(max(0.0, mean - 1.0))


def iota_dist_closed(s):
    """Extrinsic distance between embedded points at hyperbolic distance s.

    acosh((2/pi) e^{s/2} E(k)) with complementary modulus k' = e^{-s}; the
    diagonal case extends to any pair by equivariance of the embedding.
    """
    if s < 0.0:
        raise ValueError("s must be nonnegative, got %r" % (s,))
    if s == 0.0:
        return 0.0
    _, E = agm_KE_from_complement(math.exp(-s))
    x = (2.0 / math.pi) * math.exp(0.5 * s) * E - 1.0
    return acosh1p(max(0.0, x))
