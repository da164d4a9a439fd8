"""Verification suites: inequalities, kernel identities, and asymptotics.

Each suite draws seeded random cases, evaluates one family of checks, and
returns a SuiteReport.  Violations are normalized per case by the check's own
absolute tolerance or window, so a suite passes iff its max normalized
violation is at most 1; reports are byte-stable for a fixed (seed, grid).
"""

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .limits import empirical_dim_estimate, hausdorff_dim_estimate
from .lorentz import form_A, h1_seminorms, normalize
from .mobius import (
    BASEPOINT,
    HalfPlanePoint,
    Mobius,
    dist_h2,
    halfplane_apply,
    iota,
    iota_dist_closed,
    rho_act,
)
from .shapes import Ellipse, Polygon, convex_hull
from .specfun import agm_KE_from_complement
from .supportfn import (
    DEFAULT_GRID,
    EvenFn,
    from_ellipse,
    from_polygon,
    grid_angles,
    scaled,
    support_split,
    unit_disc,
)

HALF_CURVATURE_RATIO = math.sqrt(3.0 / 8.0)


# ---------------------------------------------------------------------------
# reports

@dataclass
class SuiteReport:
    """Outcome of one suite; passes iff max_violation <= tolerance.

    Violations are normalized by per-case absolute tolerances (stored in the
    records), so ``tolerance`` is 1.0 throughout.
    """

    suite: str
    seed: int
    grid: int
    cases: int
    max_violation: float
    tolerance: float
    passed: bool
    records: list = field(default_factory=list)

    def to_dict(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "grid": self.grid,
            "cases": self.cases,
            "max_violation": self.max_violation,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "records": self.records,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)


def _digest(*parts):
    h = hashlib.sha256()
    for p in parts:
        h.update(np.ascontiguousarray(np.asarray(p, dtype=float)).tobytes())
    return h.hexdigest()[:12]


class _Collector:
    def __init__(self):
        self.records = []
        self.worst = 0.0

    def _push(self, rec, ratio):
        self.worst = max(self.worst, ratio)
        self.records.append(rec)

    def add(self, check, digest, value, tol, **extra):
        """A bound check: |value| must stay within tol."""
        rec = {"check": check, "digest": digest, "value": value, "tol": tol}
        rec.update(extra)
        self._push(rec, abs(value) / tol)

    def add_lower(self, check, digest, value, threshold, **extra):
        """value must exceed threshold; normalized so value == threshold -> 1."""
        rec = {"check": check, "digest": digest, "value": value, "threshold": threshold}
        rec.update(extra)
        self._push(rec, 2.0 - value / threshold)

    def add_window(self, check, digest, value, lo, hi, **extra):
        rec = {"check": check, "digest": digest, "value": value, "window": [lo, hi]}
        rec.update(extra)
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        self._push(rec, abs(value - mid) / half)

    def report(self, suite, seed, grid):
        return SuiteReport(
            suite=suite,
            seed=seed,
            grid=grid,
            cases=len(self.records),
            max_violation=self.worst,
            tolerance=1.0,
            passed=self.worst <= 1.0,
            records=self.records,
        )


# ---------------------------------------------------------------------------
# seeded generators

def random_ellipse(rng, s_max=3.0):
    """Unit-determinant matrix R1 diag(e^{s/2}, e^{-s/2}) R2, condition <= e^{s_max}."""
    r1 = Mobius.rotation(rng.uniform(0.0, 2.0 * math.pi)).matrix
    r2 = Mobius.rotation(rng.uniform(0.0, 2.0 * math.pi)).matrix
    s = rng.uniform(0.0, s_max)
    return Ellipse(r1 @ np.diag([math.exp(0.5 * s), math.exp(-0.5 * s)]) @ r2)


def random_polygon(rng, max_pairs=8, max_aspect=6.0):
    """Symmetric convex polygon: hull of +-(lognormal radius) vertex pairs.

    Slivers are rejected (support ratio above ``max_aspect``); they carry
    slowly decaying spectra that drown the grid's resolution.
    """
    probe = np.linspace(0.0, math.pi, 32, endpoint=False)
    while True:
        pairs = int(rng.integers(3, max_pairs + 1))
        ang = rng.uniform(0.0, math.pi, pairs)
        rad = np.exp(rng.normal(0.0, 0.35, pairs))
        pts = rad[:, None] * np.stack([np.cos(ang), np.sin(ang)], axis=1)
        pts = np.concatenate([pts, -pts])
        try:
            hull = convex_hull(pts)
            if hull.shape[0] < 4:
                continue
            poly = Polygon(hull)
        except ValueError:
            continue
        sup = poly.support(probe)
        if sup.max() / sup.min() <= max_aspect:
            return poly


def random_mobius(rng, norm_bound=3.0):
    """Unit-determinant matrix with spectral norm at most norm_bound."""
    s_cap = 2.0 * math.log(norm_bound)
    r1 = rng.uniform(0.0, 2.0 * math.pi)
    r2 = rng.uniform(0.0, 2.0 * math.pi)
    s = rng.uniform(0.0, s_cap)
    return Mobius.rotation(r1) @ Mobius.axial(s) @ Mobius.rotation(r2)


def random_band_limited(rng, grid=DEFAULT_GRID, max_harmonic=16, mean=0.0):
    """Even band-limited function with 1/n-damped Gaussian coefficients."""
    theta = grid_angles(grid)
    vals = np.full(grid, float(mean))
    for n in range(2, max_harmonic + 1, 2):
        an, bn = rng.normal(size=2) / n
        vals += an * np.cos(n * theta) + bn * np.sin(n * theta)
    return EvenFn(vals)


def random_support_fn(rng, grid=DEFAULT_GRID, max_harmonic=16):
    """Random smooth support function via the convexifying split."""
    h = random_band_limited(rng, grid, max_harmonic, mean=rng.uniform(1.0, 2.0))
    _, s1, _ = support_split(h)
    return EvenFn(s1.samples + 0.05 * (1.0 + float(np.abs(s1.samples).max())))


def random_tagged_body(rng, grid=DEFAULT_GRID):
    """Support function of a random ellipse or polygon (always tagged)."""
    if int(rng.integers(0, 2)) == 0:
        return from_ellipse(random_ellipse(rng), grid)
    return from_polygon(random_polygon(rng), grid)


def random_body_fn(rng, grid=DEFAULT_GRID):
    """Support function of a random body: ellipse, polygon, or smooth blob."""
    kind = int(rng.integers(0, 3))
    if kind == 0:
        return from_ellipse(random_ellipse(rng), grid)
    if kind == 1:
        return from_polygon(random_polygon(rng), grid)
    return random_support_fn(rng, grid)


# ---------------------------------------------------------------------------
# single-shot operations

def jacobian_circle(t, theta):
    """Jacobian of the circle action of diag(e^-t, e^t): 1/|cosh t - sinh t e^{i theta}|^2.

    The squared norm expands to cosh^2 t - 2 sinh t cosh t cos(theta) + sinh^2 t
    = cosh(2t) - sinh(2t) cos(theta), evaluated as
    e^{-2t} + 2 sinh(2t) sin^2(theta/2) to stay cancellation-free.
    """
    theta = np.asarray(theta, dtype=float)
    den = math.exp(-2.0 * t) + 2.0 * math.sinh(2.0 * t) * np.sin(0.5 * theta) ** 2
    out = 1.0 / den
    return float(out) if out.ndim == 0 else out


def _kernel_grid(t, cap=2**22):
    # resolve the e^{-2t}-wide analyticity strip: trapezoid error ~ e^{-M e^{-2t}}
    need = max(8192.0, 24.0 * math.exp(2.0 * t))
    return min(1 << math.ceil(math.log2(need)), cap)


@dataclass(frozen=True)
class KernelValues:
    """The four kernels at parameter t, all in the cosh domain."""

    i1: float
    i2: float
    closed: float
    kern2: float

    @property
    def gap(self):
        return self.kern2 - self.closed


def kernels_compare(t):
    """Evaluate the boundary-kernel integral, the ellipse-orbit integral, the
    elliptic closed form 2 e^t E(k)/pi, and the exponential kernel e^t.

    The first three agree (the embeddings are isometric to each other); the
    fourth comes from a reducible construction and stays strictly above.
    """
    if t <= 0.0:
        raise ValueError("t must be positive, got %r" % (t,))
    m = _kernel_grid(t)
    j = np.arange(m)
    theta = 2.0 * math.pi * j / m
    # sin(pi j/m) via the fold sin(pi min(j, m-j)/m): well-conditioned at both
    # ends, where the integrand peaks
    half_sin = np.sin(math.pi * np.minimum(j, m - j) / m)
    base = math.exp(-2.0 * t) + 2.0 * math.sinh(2.0 * t) * half_sin**2
    i1 = float(np.mean(base**-1.5))
    i2 = float(np.mean(np.hypot(math.exp(t) * np.cos(theta), math.exp(-t) * np.sin(theta))))
    _, E = agm_KE_from_complement(math.exp(-2.0 * t))
    closed = 2.0 * math.exp(t) * E / math.pi
    kern2 = math.exp(0.5 * dist_h2(halfplane_apply(Mobius.axial(2.0 * t), BASEPOINT), BASEPOINT))
    return KernelValues(i1=i1, i2=i2, closed=closed, kern2=kern2)


def minkowski_extended_test(bodies, coeffs, method="auto"):
    """Signed-coefficient extension of the Minkowski inequality.

    For bodies K_0..K_n of positive area and reals c_1..c_n the quantity
    (sum_k c_k A(h_k, h_0))^2 - A(h_0) sum_ij c_i c_j A(h_i, h_j) is
    nonnegative.  Returns the residual scaled by the square of the largest
    term, so tolerances are dimensionless.
    """
    bodies = list(bodies)
    coeffs = np.asarray(coeffs, dtype=float)
    if len(bodies) != coeffs.size + 1:
        raise ValueError("need n+1 bodies for n coefficients")
    areas = [form_A(b, method=method) for b in bodies]
    if min(areas) <= 0.0:
        raise ValueError("every body must have positive area")
    h0, rest = bodies[0], bodies[1:]
    cross = np.array([form_A(h, h0, method=method) for h in rest])
    gram = np.array([[form_A(hi, hj, method=method) for hj in rest] for hi in rest])
    lhs = float(coeffs @ cross) ** 2
    rhs = areas[0] * float(coeffs @ gram @ coeffs)
    scale = max(lhs, areas[0] * float(np.abs(coeffs) @ np.abs(gram) @ np.abs(coeffs)), 1e-300)
    return (lhs - rhs) / scale


def ellipse_sum_test(e1, e2, c1=1.0, c2=1.0, grid=DEFAULT_GRID):
    """Fourth-harmonic-and-up energy fraction of (c1 supp(e1) + c2 supp(e2))^2.

    The squared support of an ellipse is a quadratic form in (cos, sin), all
    of whose energy sits in harmonics 0 and 2; energy at 4 and beyond
    certifies that the Minkowski sum is not an ellipse.
    """
    h = c1 * from_ellipse(e1, grid).samples + c2 * from_ellipse(e2, grid).samples
    c = np.fft.rfft(h * h) / grid
    power = 2.0 * np.abs(c) ** 2
    power[0] *= 0.5
    power[-1] *= 0.5
    return float(power[4:].sum() / power.sum())


def curvature_scale_estimate(s_values):
    """Ratios iota_dist_closed(s)/s and their two-point Richardson limit.

    The ratios approach sqrt(3/8) with O(s^2) error; eliminating the s^2
    term from the two smallest s gives the reported extrapolation.
    """
    s = sorted(float(v) for v in s_values)
    if not s or s[0] <= 0.0:
        raise ValueError("s values must be positive")
    ratios = [iota_dist_closed(v) / v for v in s]
    if len(s) >= 2:
        (sb, rb), (sa, ra) = (s[0], ratios[0]), (s[1], ratios[1])
        extrapolated = (rb * sa**2 - ra * sb**2) / (sa**2 - sb**2)
    else:
        extrapolated = ratios[0]
    return ratios, extrapolated


# ---------------------------------------------------------------------------
# suites

def quasi_iso_suite(s_max=40.0, n_points=400, seed=0, grid=DEFAULT_GRID):
    """Sandwich acosh(2e^{s/2}/pi) <= d(s) <= acosh(e^{s/2}) and |d - s/2| <= 1/2."""
    if s_max > 40.0:
        raise ValueError("s_max is capped at 40 (cosh overflow guard)")
    col = _Collector()
    prev = -1.0
    for s in np.linspace(0.0, s_max, n_points):
        s = float(s)
        d = iota_dist_closed(s)
        dig = _digest([s])
        upper = math.acosh(math.exp(0.5 * s)) if s > 0 else 0.0
        col.add("upper-envelope", dig, max(0.0, d - upper), 1e-12, s=s, d=d)
        low_arg = 2.0 * math.exp(0.5 * s) / math.pi
        if low_arg >= 1.0:
            col.add("lower-envelope", dig, max(0.0, math.acosh(low_arg) - d), 1e-12, s=s, d=d)
        col.add("additive-band", dig, d - 0.5 * s, 0.5, s=s)
        col.add("monotone", dig, max(0.0, prev - d), 1e-12)
        prev = d
    return col.report("quasiiso", seed, grid)


def _kernels_suite(seed=0, grid=DEFAULT_GRID):
    col = _Collector()
    for k in range(1, 51):
        t = 0.1 * k
        kv = kernels_compare(t)
        dig = _digest([t])
        col.add("kern1-vs-closed", dig, kv.i1 - kv.closed, 1e-9, t=t)
        col.add("kern3-vs-closed", dig, kv.i2 - kv.closed, 1e-9, t=t)
        col.add("kern2-identity", dig, kv.kern2 - math.exp(t), 1e-12, t=t)
        _, E = agm_KE_from_complement(math.exp(-2.0 * t))
        ref_gap = math.exp(t) * (1.0 - 2.0 * E / math.pi)
        # record both cosh-domain and distance-domain values: acosh is badly
        # conditioned at large t, so the gap is judged in the cosh domain
        col.add_lower(
            "kern2-above-closed",
            dig,
            kv.gap,
            0.01 * ref_gap,
            t=t,
            cosh_closed=kv.closed,
            cosh_kern2=kv.kern2,
            dist_closed=math.acosh(kv.closed),
            dist_kern2=math.acosh(kv.kern2),
        )
    for t in (0.25, 0.5, 1.0, 2.0, 5.0):
        m = _kernel_grid(t)
        j = np.arange(m)
        # the integrand is symmetric about pi; folding keeps sin(theta/2)
        # well-conditioned at the right-end peak
        theta = 2.0 * math.pi * np.minimum(j, m - j) / m
        total = float(np.mean(jacobian_circle(t, theta)))
        col.add("jacobian-unit-mass", _digest([t]), total - 1.0, 1e-12, t=t)
    return col.report("kernels", seed, grid)


def _curvature_suite(seed=0, grid=DEFAULT_GRID):
    col = _Collector()
    ratios, extrapolated = curvature_scale_estimate([5e-4, 1e-3, 1e-2])
    col.add("ratio-at-1e-2", _digest([1e-2]), ratios[2] - HALF_CURVATURE_RATIO, 1e-4)
    col.add("richardson", _digest([5e-4, 1e-3]), extrapolated - HALF_CURVATURE_RATIO, 1e-8)
    s = 1e-3
    w = Mobius.axial(s).matrix.T @ np.stack([np.cos(grid_angles(8192)), np.sin(grid_angles(8192))])
    cosh_val = float(np.hypot(w[0], w[1]).mean())
    col.add("small-s-expansion", _digest([s]), cosh_val - (1.0 + 3.0 * s * s / 16.0), 1e-13)
    return col.report("curvature", seed, grid)


def _pair_method(h1, h2):
    # One form per comparison: exact only when every operand carries a tag.
    if h1.shape_tag is not None and h2.shape_tag is not None:
        return "auto"
    return "spectral"


def _minkowski_suite(seed=0, grid=DEFAULT_GRID):
    rng = np.random.default_rng(seed)
    col = _Collector()
    for _ in range(1000):
        h1 = random_body_fn(rng, grid)
        h2 = random_body_fn(rng, grid)
        method = _pair_method(h1, h2)
        a11 = form_A(h1, method=method)
        a22 = form_A(h2, method=method)
        a12 = form_A(h1, h2, method=method)
        scale = max(a12 * a12, a11 * a22)
        resid = (a12 * a12 - a11 * a22) / scale
        col.add("reversed-cs", _digest(h1.samples, h2.samples), min(0.0, resid), 1e-12)
    for _ in range(50):
        h = random_body_fn(rng, grid)
        lam = float(rng.uniform(0.2, 5.0))
        h2 = scaled(h, lam)
        method = _pair_method(h, h2)
        a11 = form_A(h, method=method)
        a22 = form_A(h2, method=method)
        a12 = form_A(h, h2, method=method)
        defect = (a12 * a12 - a11 * a22) / max(a12 * a12, a11 * a22)
        col.add("homothetic-equality", _digest(h.samples, [lam]), defect, 1e-12)
    return col.report("minkowski", seed, grid)


def _extended_suite(seed=0, grid=DEFAULT_GRID):
    rng = np.random.default_rng(seed)
    col = _Collector()
    for _ in range(500):
        n = int(rng.integers(1, 6))
        bodies = [random_tagged_body(rng, grid) for _ in range(n + 1)]
        coeffs = rng.uniform(-2.0, 2.0, n)
        resid = minkowski_extended_test(bodies, coeffs)
        dig = _digest(coeffs, *[b.samples for b in bodies])
        col.add("signed-minkowski", dig, min(0.0, resid), 1e-9, n=n)
    return col.report("extended", seed, grid)


def _wirtinger_suite(seed=0, grid=DEFAULT_GRID):
    rng = np.random.default_rng(seed)
    col = _Collector()
    for _ in range(1000):
        h = random_band_limited(rng, grid, max_harmonic=24, mean=0.0)
        l2, dl2 = h1_seminorms(h)
        viol = max(0.0, l2 - 0.25 * dl2) / (0.25 * dl2)
        col.add("poincare-wirtinger", _digest(h.samples), viol, 1e-12)
    return col.report("wirtinger", seed, grid)


def _encadrement_suite(seed=0, grid=DEFAULT_GRID):
    rng = np.random.default_rng(seed)
    col = _Collector()
    for _ in range(1000):
        h = random_band_limited(rng, grid, max_harmonic=24, mean=0.0)
        l2, dl2 = h1_seminorms(h)
        h1sq = l2 + dl2
        neg_a = -form_A(h)
        scale = h1sq / (2.0 * math.pi)
        dig = _digest(h.samples)
        col.add("lower-bracket", dig, max(0.0, 3.0 / (16.0 * math.pi) * h1sq - neg_a) / scale, 1e-12)
        col.add("upper-bracket", dig, max(0.0, neg_a - h1sq / (2.0 * math.pi)) / scale, 1e-12)
    return col.report("encadrement", seed, grid)


def _equivariance_suite(seed=0, grid=DEFAULT_GRID):
    rng = np.random.default_rng(seed)
    col = _Collector()
    for _ in range(200):
        m = random_mobius(rng)
        h1 = random_band_limited(rng, grid, mean=1.5)
        h2 = random_band_limited(rng, grid, mean=1.5)
        before = form_A(h1, h2)
        after = form_A(rho_act(m, h1), rho_act(m, h2))
        col.add("form-invariance", _digest(m.matrix, h1.samples, h2.samples), after - before, 1e-8)
    for _ in range(200):
        m = random_mobius(rng)
        z = HalfPlanePoint(float(rng.uniform(-2.0, 2.0)), float(math.exp(rng.uniform(-1.5, 1.5))))
        lhs = rho_act(m, iota(z, grid).fn)
        rhs = iota(halfplane_apply(m, z), grid).fn
        diff = float(np.abs(lhs.samples - rhs.samples).max())
        col.add("iota-equivariance", _digest(m.matrix, [z.x, z.y]), diff, 1e-10)
    for _ in range(100):
        # Each factor bounded by sqrt(3) so the composition stays within the
        # norm-3 regime the grid resolves; a second shear multiplies spectra.
        m1, m2 = random_mobius(rng, math.sqrt(3.0)), random_mobius(rng, math.sqrt(3.0))
        h = random_band_limited(rng, grid, mean=1.5)
        lhs = rho_act(m1 @ m2, h)
        rhs = rho_act(m1, rho_act(m2, h))
        diff = float(np.abs(lhs.samples - rhs.samples).max())
        col.add("group-law", _digest(m1.matrix, m2.matrix, h.samples), diff, 1e-9)
    phi = float(rng.uniform(0.0, 2.0 * math.pi))
    moved = rho_act(Mobius.rotation(phi), unit_disc(grid))
    col.add("disc-fixed", _digest([phi]), float(np.abs(moved.samples - 1.0).max()), 1e-12)
    rot = Mobius.rotation(math.pi * (math.sqrt(5.0) - 1.0))
    done = 0
    while done < 100:
        p = normalize(random_body_fn(rng, grid))
        if float(np.ptp(p.fn.samples)) < 1e-2:
            continue
        move = float(np.abs(rho_act(rot, p.fn).samples - p.fn.samples).max())
        col.add_lower("nonconstant-moves", _digest(p.fn.samples), move, 1e-6)
        done += 1
    return col.report("equivariance", seed, grid)


def _halfplane_of_ellipse(e):
    return halfplane_apply(Mobius.from_matrix(e.matrix), BASEPOINT)


def _ellipse_h2_dist(e1, e2):
    return dist_h2(_halfplane_of_ellipse(e1), _halfplane_of_ellipse(e2))


def _gram_rank_suite(seed=0, grid=DEFAULT_GRID):
    rng = np.random.default_rng(seed)
    col = _Collector()
    for n in range(2, 7):
        for _ in range(50):
            mats = []
            while len(mats) < n + 1:
                e = random_ellipse(rng)
                if all(_ellipse_h2_dist(e, o) > 0.7 for o in mats):
                    mats.append(e)
            fns = [from_ellipse(e, grid) for e in mats]
            g = np.array([[form_A(a, b) for b in fns] for a in fns])
            gn = g / np.abs(g).max(axis=1, keepdims=True)
            det = abs(float(np.linalg.det(gn)))
            col.add_lower("gram-nonsingular", _digest(*[e.matrix for e in mats]), det, 1e-10, n=n)
    return col.report("gram-rank", seed, grid)


def _ellipse_sum_suite(seed=0, grid=DEFAULT_GRID):
    # Moderate elongations and a separation floor: near-aligned slivers are
    # genuinely non-homothetic yet their relative fourth-harmonic energy is
    # suppressed like aspect^-4, below any fixed detection threshold.
    rng = np.random.default_rng(seed)
    col = _Collector()
    for _ in range(20):
        e1 = random_ellipse(rng, 1.2)
        rot = Mobius.rotation(rng.uniform(0.0, 2.0 * math.pi)).matrix
        e2 = Ellipse(e1.matrix @ rot)  # same body, different representative
        lam = float(rng.uniform(0.5, 2.0))
        energy = ellipse_sum_test(e1, e2, 1.0, lam, grid)
        col.add("homothetic-energy", _digest(e1.matrix, rot, [lam]), energy, 1e-12)
    done = 0
    while done < 20:
        e1, e2 = random_ellipse(rng, 1.2), random_ellipse(rng, 1.2)
        if _ellipse_h2_dist(e1, e2) < 0.6:
            continue
        energy = ellipse_sum_test(e1, e2, 1.0, 1.0, grid)
        dig = _digest(e1.matrix, e2.matrix)
        col.add_lower("non-ellipse-energy", dig, energy, 1e-6)
        m = random_mobius(rng, 1.3)
        moved = ellipse_sum_test(e1.transform(m.matrix), e2.transform(m.matrix), 1.0, 1.0, grid)
        col.add_lower("verdict-invariance", dig, moved, 1e-6)
        done += 1
    return col.report("ellipse-sum", seed, grid)


def _dimension_suite(seed=0, grid=DEFAULT_GRID):
    col = _Collector()
    slope, resid = hausdorff_dim_estimate(4, 12)
    col.add_window("analytic-slope", _digest([4, 12]), slope, 1.98, 2.02, residual=resid)
    emp_slope, js, counts = empirical_dim_estimate(4, 12, 100_000)
    col.add("empirical-vs-analytic", _digest(js), emp_slope - slope, 0.1, counts=counts)
    control, _ = hausdorff_dim_estimate(4, 12, metric="round")
    col.add_window("control-slope", _digest([0]), control, 0.99, 1.01)
    for lam in (0.5, 3.0):
        scaled_slope, _ = hausdorff_dim_estimate(4, 12, metric="visual", lam=lam)
        col.add("scale-invariance", _digest([lam]), scaled_slope - slope, 0.02, lam=lam)
    return col.report("dimension", seed, grid)


SUITES = {
    "minkowski": _minkowski_suite,
    "extended": _extended_suite,
    "wirtinger": _wirtinger_suite,
    "encadrement": _encadrement_suite,
    "curvature": _curvature_suite,
    "quasiiso": lambda seed=0, grid=DEFAULT_GRID: quasi_iso_suite(40.0, 400, seed, grid),
    "kernels": _kernels_suite,
    "dimension": _dimension_suite,
    "ellipse-sum": _ellipse_sum_suite,
    "gram-rank": _gram_rank_suite,
    "equivariance": _equivariance_suite,
}


def run_suite(name, seed=0, grid=DEFAULT_GRID):
    if name not in SUITES:
        raise KeyError("unknown suite %r (have: %s)" % (name, ", ".join(sorted(SUITES))))
    return SUITES[name](seed=seed, grid=grid)
