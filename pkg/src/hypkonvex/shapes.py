"""Exact primitives for plane symmetric convex bodies.

Three shape families carry closed forms: ellipses (linear images of the unit
disc), symmetric segments, and symmetric convex polygons.  Each knows its
support function, support derivative, boundary parametrization, perimeter,
area, and how to transform under a linear map.  Mixed areas between any two
tagged shapes are available in closed form, which is what keeps segment and
polygon computations free of grid error.
"""

import math
from dataclasses import dataclass

import numpy as np

from .specfun import agm_KE_from_complement

DET_TOL = 1e-9
SYM_TOL = 1e-12


def _freeze(arr):
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


def _unit_vectors(theta):
    theta = np.asarray(theta, dtype=float)
    return np.stack([np.cos(theta), np.sin(theta)])


@dataclass(frozen=True)
class Ellipse:
    """The body A·D, the image of the closed unit disc under ``matrix``.

    The determinant must be 1 up to ``DET_TOL`` so the body has area pi.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = _freeze(self.matrix)
        if m.shape != (2, 2) or not np.all(np.isfinite(m)):
            raise ValueError("ellipse matrix must be a finite 2x2 array")
        det = float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
        if abs(det - 1.0) > DET_TOL:
            raise ValueError("ellipse matrix must have unit determinant, got det=%.17g" % det)
        object.__setattr__(self, "matrix", m)

    def support(self, theta):
        v = self.matrix.T @ _unit_vectors(theta)
        return np.hypot(v[0], v[1])

    def support_deriv(self, theta):
        u = _unit_vectors(np.atleast_1d(theta))
        uperp = np.stack([-u[1], u[0]])
        w = self.matrix.T @ u
        out = np.einsum("ij,ij->j", self.matrix.T @ uperp, w) / np.hypot(w[0], w[1])
        return out if np.ndim(theta) else out[0]

    def boundary(self, theta):
        # The support point in direction u is A (A^T u / |A^T u|).
        w = self.matrix.T @ _unit_vectors(theta)
        return (self.matrix @ (w / np.hypot(w[0], w[1]))).T

    def semi_axes(self):
        s = np.linalg.svd(self.matrix, compute_uv=False)
        return float(s[0]), float(s[1])

    def perimeter(self):
        s1, s2 = self.semi_axes()
        _, E = agm_KE_from_complement(min(1.0, s2 / s1))
        return 4.0 * s1 * E

    def area(self):
        return math.pi * float(np.linalg.det(self.matrix))

    def transform(self, m):
        return Ellipse(np.asarray(m, dtype=float) @ self.matrix)


@dataclass(frozen=True)
class Segment:
    """The degenerate body [-v, v] for a nonzero endpoint v."""

    endpoint: np.ndarray

    def __post_init__(self):
        v = _freeze(self.endpoint)
        if v.shape != (2,) or not np.all(np.isfinite(v)):
            raise ValueError("segment endpoint must be a finite 2-vector")
        if np.hypot(v[0], v[1]) == 0.0:
            raise ValueError("segment endpoint must be nonzero")
        object.__setattr__(self, "endpoint", v)

    def support(self, theta):
        u = _unit_vectors(theta)
        return np.abs(self.endpoint @ u)

    def support_deriv(self, theta):
        u = _unit_vectors(theta)
        uperp = np.stack([-u[1], u[0]])
        return np.sign(self.endpoint @ u) * (self.endpoint @ uperp)

    def boundary(self, theta):
        u = _unit_vectors(theta)
        return np.outer(np.sign(self.endpoint @ u), self.endpoint)

    def perimeter(self):
        # Degenerate convex body: the boundary runs down and back.
        return 4.0 * float(np.hypot(*self.endpoint))

    def area(self):
        return 0.0

    def edges(self):
        """Surface measure as (length, outward unit normal) pairs."""
        v = self.endpoint
        length = float(np.hypot(v[0], v[1]))
        n = np.array([v[1], -v[0]]) / length
        return [(2.0 * length, n), (2.0 * length, -n)]

    def transform(self, m):
        return Segment(np.asarray(m, dtype=float) @ self.endpoint)


@dataclass(frozen=True)
class Polygon:
    """A symmetric strictly convex polygon with counterclockwise vertices."""

    vertices: np.ndarray

    def __post_init__(self):
        v = _freeze(self.vertices)
        if v.ndim != 2 or v.shape[1] != 2 or not np.all(np.isfinite(v)):
            raise ValueError("polygon vertices must be a finite (n, 2) array")
        n = v.shape[0]
        if n < 4 or n % 2 != 0:
            raise ValueError("a symmetric polygon needs an even vertex count >= 4")
        scale = float(np.abs(v).max())
        if np.abs(v[(np.arange(n) + n // 2) % n] + v).max() > SYM_TOL * max(1.0, scale):
            raise ValueError("polygon vertex set is not symmetric about the origin")
        e = np.roll(v, -1, axis=0) - v
        cross = e[:, 0] * np.roll(e[:, 1], -1) - e[:, 1] * np.roll(e[:, 0], -1)
        if np.any(cross <= SYM_TOL * max(1.0, scale) ** 2):
            raise ValueError("polygon must be strictly convex in counterclockwise order")
        object.__setattr__(self, "vertices", v)

    def support(self, theta):
        u = _unit_vectors(theta)
        return np.max(self.vertices @ u, axis=0)

    def support_deriv(self, theta):
        u = _unit_vectors(np.atleast_1d(theta))
        uperp = np.stack([-u[1], u[0]])
        idx = np.argmax(self.vertices @ u, axis=0)
        out = np.einsum("ij,ij->i", uperp.T, self.vertices[idx])
        return out if np.ndim(theta) else out[0]

    def boundary(self, theta):
        u = _unit_vectors(theta)
        return self.vertices[np.argmax(self.vertices @ u, axis=0)]

    def edges(self):
        v = self.vertices
        e = np.roll(v, -1, axis=0) - v
        lengths = np.hypot(e[:, 0], e[:, 1])
        normals = np.stack([e[:, 1], -e[:, 0]], axis=1) / lengths[:, None]
        return [(float(l), n) for l, n in zip(lengths, normals)]

    def perimeter(self):
        e = np.roll(self.vertices, -1, axis=0) - self.vertices
        return float(np.hypot(e[:, 0], e[:, 1]).sum())

    def area(self):
        return shoelace_area(self.vertices)

    def transform(self, m):
        return Polygon(self.vertices @ np.asarray(m, dtype=float).T)

    def scaled(self, c):
        return Polygon(c * self.vertices)


def shoelace_area(vertices):
    """Signed shoelace area; positive for counterclockwise order."""
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - y * np.roll(x, -1)))


def convex_hull(points):
    """Strict convex hull (collinear points dropped), counterclockwise."""
    pts = sorted({(float(x), float(y)) for x, y in points})
    if len(pts) < 3:
        raise ValueError("need at least three distinct points")

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) > 0:
                    break
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return np.array(lower[:-1] + upper[:-1], dtype=float)


def _edge_fan(shape):
    """Edge vectors traversed counterclockwise (a segment degenerates to two)."""
    if isinstance(shape, Segment):
        v = shape.endpoint
        return [2.0 * v, -2.0 * v]
    v = shape.vertices
    return list(np.roll(v, -1, axis=0) - v)


def minkowski_sum(a, b):
    """Exact Minkowski sum of segments/polygons by merging edge fans.

    Returns a Polygon, or a Segment when both inputs are parallel segments.
    The sum of a symmetric body with a symmetric body is symmetric, which
    pins the translation of the merged edge path exactly.
    """
    if isinstance(a, Segment) and isinstance(b, Segment):
        va, vb = a.endpoint, b.endpoint
        la, lb = float(np.hypot(*va)), float(np.hypot(*vb))
        if abs(va[0] * vb[1] - va[1] * vb[0]) <= SYM_TOL * la * lb:
            return Segment((la + lb) / la * va)

    edges = _edge_fan(a) + _edge_fan(b)
    edges.sort(key=lambda e: math.atan2(e[1], e[0]))

    merged = []
    for e in edges:
        if merged:
            p = merged[-1]
            np_, ne = np.hypot(p[0], p[1]), np.hypot(e[0], e[1])
            if abs(p[0] * e[1] - p[1] * e[0]) <= 1e-12 * np_ * ne and p @ e > 0:
                merged[-1] = p + e
                continue
        merged.append(np.asarray(e, dtype=float))
    k = len(merged)
    if k % 2 != 0:
        raise ValueError("edge fan of a symmetric sum must be even")

    # Walk half the fan from an arbitrary basepoint; central symmetry fixes
    # the translation (vertex i and i + k/2 must be antipodal) and the second
    # half is the exact mirror of the first.
    path = np.zeros((k // 2, 2))
    for i in range(1, k // 2):
        path[i] = path[i - 1] + merged[i - 1]
    center = 0.5 * (path[0] + path[-1] + merged[k // 2 - 1])
    half = path - center
    return Polygon(np.concatenate([half, -half]))


def mixed_area(a, b):
    """Mixed area of two tagged shapes, in closed form.

    Polarizes the planar area: a(K, L) = (area(K+L) - area(K) - area(L)) / 2.
    Polygonal operands contribute through their surface measure, ellipses
    through singular values and the elliptic perimeter formula.
    """
    if a is b:
        return a.area()
    if isinstance(b, (Polygon, Segment)):
        return 0.5 * sum(length * float(a.support(math.atan2(n[1], n[0]))) for length, n in b.edges())
    if isinstance(a, (Polygon, Segment)):
        return mixed_area(b, a)
    # Two ellipses: reduce to ellipse-against-disc through C = B^{-1} A,
    # using a(T K1, T K2) = det(T) a(K1, K2) and a(K, D) = per(K)/2.
    c = np.linalg.solve(b.matrix, a.matrix)
    s = np.linalg.svd(c, compute_uv=False)
    _, E = agm_KE_from_complement(min(1.0, s[1] / s[0]))
    return float(np.linalg.det(b.matrix)) * 2.0 * s[0] * E
