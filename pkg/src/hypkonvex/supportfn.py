"""Even circle functions on a uniform grid, with exact shape tags.

An EvenFn holds M samples of a pi-periodic function on [0, 2pi) -- the kind
of function a symmetric convex body produces as its support function.  The
samples are canonical; Fourier coefficients are derived on demand and cached.
A function constructed from an ellipse, segment, or polygon also carries the
shape (plus a scalar multiplier), and every operation that can use the closed
form does, so those bodies never suffer interpolation error.  Untagged
functions go through the spectral machinery: trigonometric interpolation for
off-grid values and rfft-based differentiation.
"""

import math
import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .shapes import Ellipse, Polygon, Segment, minkowski_sum, shoelace_area

DEFAULT_GRID = 2048
EVEN_TOL = 1e-12
CONVEXITY_TOL = 1e-8

_CHUNK = 4096  # bound the interpolation work matrix


class GridMismatchError(ValueError):
    """Two grid functions with different sample counts were combined."""


class NotSupportFunctionError(ValueError):
    """An operation that needs a support function got a non-convex input."""


class SpectralTailWarning(UserWarning):
    """The top of the spectrum carries enough energy to distrust derivatives."""


def _check_grid(M):
    if M < 8 or M % 4 != 0:
        raise ValueError("grid size must be a multiple of 4 and at least 8, got %r" % (M,))


def grid_angles(M):
    _check_grid(M)
    return 2.0 * np.pi * np.arange(M) / M


@dataclass(frozen=True, eq=False)
class EvenFn:
    """Samples of a pi-periodic function at angles 2*pi*j/M, j = 0..M-1.

    ``shape_tag`` is an optional exact descriptor; when present the function
    equals ``scale * support(shape)`` and closed forms take over.
    """

    samples: np.ndarray
    shape_tag: object = None
    scale: float = 1.0

    def __post_init__(self):
        s = np.array(self.samples, dtype=float)
        if s.ndim != 1 or not np.all(np.isfinite(s)):
            raise ValueError("samples must be a finite 1-d array")
        _check_grid(s.size)
        top = 1.0 + float(np.abs(s).max()) if s.size else 1.0
        if np.abs(s - np.roll(s, s.size // 2)).max() > EVEN_TOL * top:
            raise ValueError("samples are not pi-periodic within tolerance")
        if self.shape_tag is not None and not isinstance(self.shape_tag, (Ellipse, Segment, Polygon)):
            raise TypeError("shape tag must be an Ellipse, Segment, or Polygon")
        if self.scale < 0.0:
            raise ValueError("scale must be nonnegative")
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    @property
    def grid(self):
        return self.samples.size

    @cached_property
    def _coeffs(self):
        # rfft/M; the cache is populated once, re-computation is idempotent.
        c = np.fft.rfft(self.samples) / self.grid
        c.setflags(write=False)
        return c


def _tag_samples(shape, scale, M):
    return scale * shape.support(grid_angles(M))


def from_samples(values, M=None):
    """Wrap raw samples; M, when given, cross-checks the array length."""
    v = np.asarray(values, dtype=float)
    if M is not None and v.size != M:
        raise GridMismatchError("expected %d samples, got %d" % (M, v.size))
    return EvenFn(v)


def constant(value, M=DEFAULT_GRID):
    return EvenFn(np.full(M, float(value)))


def unit_disc(M=DEFAULT_GRID):
    """The constant function 1, tagged as the unit disc."""
    return from_ellipse(Ellipse(np.eye(2)), M)


def from_ellipse(e, M=DEFAULT_GRID):
    """Support samples |A^T u| of the ellipse e = A·D."""
    if not isinstance(e, Ellipse):
        e = Ellipse(e)
    return EvenFn(_tag_samples(e, 1.0, M), shape_tag=e, scale=1.0)


def from_segment(s, M=DEFAULT_GRID):
    """Support samples |<u, v>| of the segment [-v, v]."""
    if not isinstance(s, Segment):
        s = Segment(s)
    return EvenFn(_tag_samples(s, 1.0, M), shape_tag=s, scale=1.0)


def from_polygon(p, M=DEFAULT_GRID):
    """Support samples max_v <u, v> of a symmetric convex polygon."""
    if not isinstance(p, Polygon):
        p = Polygon(p)
    return EvenFn(_tag_samples(p, 1.0, M), shape_tag=p, scale=1.0)


def scaled(h, c):
    """c*h with the tag preserved exactly."""
    if c < 0.0:
        raise ValueError("scaling coefficient must be nonnegative")
    if h.shape_tag is not None and c > 0.0:
        f = c * h.scale
        return EvenFn(_tag_samples(h.shape_tag, f, h.grid), shape_tag=h.shape_tag, scale=f)
    return EvenFn(c * h.samples)


def _scaled_polygonal(h, c):
    """Fold c*scale into Segment/Polygon geometry for exact Minkowski sums."""
    f = c * h.scale
    if isinstance(h.shape_tag, Segment):
        return Segment(f * h.shape_tag.endpoint)
    return h.shape_tag.scaled(f)


def combine(c1, h1, c2, h2):
    """The nonnegative combination c1*h1 + c2*h2.

    Adding support functions adds the bodies (Minkowski sum), so when both
    operands are segments or polygons the result carries the exact sum
    polygon as its tag; anything else is returned untagged.
    """
    if h1.grid != h2.grid:
        raise GridMismatchError("grids differ: %d vs %d" % (h1.grid, h2.grid))
    if c1 < 0.0 or c2 < 0.0:
        raise ValueError("combination coefficients must be nonnegative")
    if c2 == 0.0:
        return scaled(h1, c1)
    if c1 == 0.0:
        return scaled(h2, c2)
    polygonal = (Segment, Polygon)
    if isinstance(h1.shape_tag, polygonal) and isinstance(h2.shape_tag, polygonal):
        total = minkowski_sum(_scaled_polygonal(h1, c1), _scaled_polygonal(h2, c2))
        return EvenFn(_tag_samples(total, 1.0, h1.grid), shape_tag=total, scale=1.0)
    return EvenFn(c1 * h1.samples + c2 * h2.samples)


def signed_diff(h1, h2):
    """h1 - h2, a general even function (support-function tags cannot survive)."""
    if h1.grid != h2.grid:
        raise GridMismatchError("grids differ: %d vs %d" % (h1.grid, h2.grid))
    return EvenFn(h1.samples - h2.samples)


def _interp(coeffs, M, theta):
    """Evaluate the trigonometric interpolant at arbitrary angles.

    Exact for trig polynomials resolved by the grid; the coefficient tail
    below 1e-15 of the peak is dropped, which keeps band-limited inputs
    cheap without losing accuracy.
    """
    theta = np.asarray(theta, dtype=float)
    flat = np.atleast_1d(theta).ravel()
    half = M // 2
    mags = np.abs(coeffs)
    peak = mags.max()
    out = np.full(flat.shape, coeffs[0].real)
    if peak > 0.0:
        sig = np.nonzero(mags > 1e-15 * peak)[0]
        nmax = int(sig[-1])
        n_up = min(nmax, half - 1)
        if n_up >= 1:
            n = np.arange(1, n_up + 1)
            c = coeffs[1 : n_up + 1]
            for lo in range(0, flat.size, _CHUNK):
                blk = flat[lo : lo + _CHUNK]
                out[lo : lo + _CHUNK] += 2.0 * (np.exp(1j * np.outer(blk, n)) @ c).real
        if nmax == half:
            out += coeffs[half].real * np.cos(half * flat)
    return out.reshape(theta.shape) if theta.ndim else float(out[0])


def eval_at(h, theta):
    """Value of h at arbitrary angles: closed form when tagged, else
    trigonometric interpolation through the samples."""
    if h.shape_tag is not None:
        v = h.scale * h.shape_tag.support(theta)
        return float(v) if np.ndim(theta) == 0 else v
    return _interp(h._coeffs, h.grid, theta)


def eval_deriv(h, theta):
    """dh/dtheta at arbitrary angles (closed form when tagged)."""
    if h.shape_tag is not None:
        v = h.scale * h.shape_tag.support_deriv(theta)
        return float(v) if np.ndim(theta) == 0 else v
    d = 1j * np.arange(h.grid // 2 + 1) * h._coeffs
    d[-1] = 0.0  # the sawtooth mode has no consistent odd derivative
    return _interp(d, h.grid, theta)


@dataclass(frozen=True)
class FourierTable:
    """Real trigonometric coefficients, indexed by harmonic; a[0] is the mean."""

    a: np.ndarray
    b: np.ndarray

    @property
    def a0(self):
        return float(self.a[0])


def fourier(h):
    """Coefficient table of h; odd harmonics must vanish (pi-periodicity)."""
    c = h._coeffs
    half = h.grid // 2
    a = np.empty(half + 1)
    b = np.zeros(half + 1)
    a[0] = c[0].real
    a[1:half] = 2.0 * c[1:half].real
    b[1:half] = -2.0 * c[1:half].imag
    a[half] = c[half].real
    odd = np.hypot(a[1::2], b[1::2]).max() if half >= 1 else 0.0
    top = float(np.abs(h.samples).max())
    if odd > 1e-10 * max(1.0, top):
        raise ValueError("odd harmonics present: the function is not pi-periodic")
    a.setflags(write=False)
    b.setflags(write=False)
    return FourierTable(a=a, b=b)


def synthesize(table, M):
    """Inverse of fourier(): rebuild grid samples from a coefficient table."""
    half = M // 2
    if table.a.size != half + 1:
        raise GridMismatchError("table has %d harmonics, grid wants %d" % (table.a.size - 1, half))
    c = np.empty(half + 1, dtype=complex)
    c[0] = table.a[0]
    c[1:half] = 0.5 * (table.a[1:half] - 1j * table.b[1:half])
    c[half] = table.a[half]
    return EvenFn(np.fft.irfft(c * M, n=M))


def _curvature_density(h):
    """Grid values of h'' + h via the spectral multiplier (1 - n^2).

    Machine-accurate for band-limited input; oscillatory on kinked input,
    where the distributional h''+h has point masses.
    """
    n = np.arange(h.grid // 2 + 1, dtype=float)
    return np.fft.irfft((1.0 - n**2) * h._coeffs * h.grid, n=h.grid)


def is_support_function(h):
    """Convexity check: h is a support function iff h'' + h >= 0.

    Returns (flag, min of the spectrally computed h''+h over the grid).  The
    spectral density is only meaningful for spectrally resolved functions;
    kinked bodies (polygons, segments) should be judged by their tags or by
    chord_convexity_defect.
    """
    g = _curvature_density(h)
    gmin = float(g.min())
    tol = CONVEXITY_TOL * (1.0 + float(np.abs(h.samples).max()))
    return gmin >= -tol, gmin


def chord_convexity_defect(h):
    """Minimum of (h(t-d) + h(t+d) - 2cos(d)h(t)) / (2 - 2cos(d)) on the grid.

    Every support function satisfies the chord inequality exactly at any
    grid spacing (sublinearity of the homogeneous extension), so this is a
    kink-proof convexity gate; for smooth h it approximates min(h''+h).
    """
    s = h.samples
    d = 2.0 * np.pi / h.grid
    defect = np.roll(s, 1) + np.roll(s, -1) - 2.0 * math.cos(d) * s
    return float(defect.min() / (2.0 - 2.0 * math.cos(d)))


def _tail_energy_fraction(h):
    c = h._coeffs
    p = 2.0 * np.abs(c) ** 2
    p[0] = 0.0
    p[-1] = np.abs(c[-1]) ** 2
    total = p.sum()
    if total == 0.0:
        return 0.0
    cut = int(round(0.75 * (h.grid // 2)))
    return float(p[cut:].sum() / total)


def support_split(h, strict=False):
    """Write h as a difference of support functions, h = s1 - s2.

    Takes c = max(0, -min(h''+h)) so that s1 = h + c and s2 = c are both
    convex.  Warns (or raises under strict) when the top quarter of the
    spectrum carries more than 1% of the energy, because the spectral h''
    is then untrustworthy.
    """
    frac = _tail_energy_fraction(h)
    if frac > 0.01:
        msg = "top-quarter spectrum carries %.2f%% of the energy" % (100.0 * frac)
        if strict:
            raise NotSupportFunctionError(msg)
        warnings.warn(msg, SpectralTailWarning)
    c = max(0.0, -float(_curvature_density(h).min()))
    s1 = EvenFn(h.samples + c)
    s2 = constant(c, h.grid)
    return c, s1, s2


def boundary_curve(h, n_points=DEFAULT_GRID):
    """Boundary of the body with support function h as an (n, 2) polyline.

    Points are c(t) = h(t) u(t) + h'(t) u_perp(t); tagged shapes use their
    closed-form boundary.  Raises NotSupportFunctionError when h fails the
    convexity gate.
    """
    _check_grid(n_points)
    theta = grid_angles(n_points)
    if h.shape_tag is not None:
        return h.scale * h.shape_tag.boundary(theta)
    tol = CONVEXITY_TOL * (1.0 + float(np.abs(h.samples).max()))
    if chord_convexity_defect(h) < -tol:
        raise NotSupportFunctionError("input is not a support function (h''+h < 0 somewhere)")
    vals = _interp(h._coeffs, h.grid, theta)
    dvals = eval_deriv(h, theta)
    u = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    uperp = np.stack([-np.sin(theta), np.cos(theta)], axis=1)
    return vals[:, None] * u + dvals[:, None] * uperp


def polygon_mixed_area_oracle(p, q):
    """Mixed area of two polygons by polarizing shoelace areas.

    Uses the exact Minkowski sum (edge merge), fully independent of both the
    spectral form and the surface-measure formula.
    """
    if not isinstance(p, Polygon) or not isinstance(q, Polygon):
        raise TypeError("the oracle takes two Polygon instances")
    total = minkowski_sum(p, q)
    return 0.5 * (shoelace_area(total.vertices) - p.area() - q.area())
