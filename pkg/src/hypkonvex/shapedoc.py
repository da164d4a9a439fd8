"""Reading and writing body descriptions (ShapeDoc JSON).

Four document types:

    {"type": "ellipse", "matrix": [[a, b], [c, d]]}
    {"type": "segment", "endpoint": [x, y]}
    {"type": "polygon", "vertices": [[x1, y1], ...]}
    {"type": "samples", "grid": M, "values": [...]}

Parsers reject ellipse matrices with determinant away from 1 and asymmetric
or non-convex polygons.
"""

import json
import warnings

import numpy as np

from .shapes import Ellipse, Polygon, Segment
from .supportfn import (
    EvenFn,
    SpectralTailWarning,
    _interp,
    from_ellipse,
    from_polygon,
    from_segment,
)


class ShapeDocError(ValueError):
    """Malformed or invalid shape document."""


def parse_shapedoc(text):
    """Parse a ShapeDoc JSON string into a shape or raw-sample description."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ShapeDocError("invalid JSON: %s" % exc) from exc
    if not isinstance(doc, dict) or "type" not in doc:
        raise ShapeDocError("a shape document is an object with a 'type' field")
    kind = doc["type"]
    try:
        if kind == "ellipse":
            return Ellipse(np.asarray(doc["matrix"], dtype=float))
        if kind == "segment":
            return Segment(np.asarray(doc["endpoint"], dtype=float))
        if kind == "polygon":
            return Polygon(np.asarray(doc["vertices"], dtype=float))
        if kind == "samples":
            grid = int(doc["grid"])
            values = np.asarray(doc["values"], dtype=float)
            if values.size != grid:
                raise ShapeDocError("grid %d does not match %d values" % (grid, values.size))
            return EvenFn(values)
    except ShapeDocError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeDocError("invalid %s document: %s" % (kind, exc)) from exc
    raise ShapeDocError("unknown shape type %r" % (kind,))


def load_shapedoc(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_shapedoc(fh.read())


def to_even_fn(doc, M):
    """Realize a parsed document on an M-point grid.

    Raw samples on a different grid are transferred by trigonometric
    interpolation, with a warning (kinked bodies should ship as shapes).
    """
    if isinstance(doc, Ellipse):
        return from_ellipse(doc, M)
    if isinstance(doc, Segment):
        return from_segment(doc, M)
    if isinstance(doc, Polygon):
        return from_polygon(doc, M)
    if isinstance(doc, EvenFn):
        if doc.grid == M:
            return doc
        warnings.warn(
            "resampling raw samples from grid %d to %d" % (doc.grid, M),
            SpectralTailWarning,
        )
        theta = 2.0 * np.pi * np.arange(M) / M
        return EvenFn(_interp(doc._coeffs, doc.grid, theta))
    raise ShapeDocError("cannot realize %r" % (doc,))


def dump_shapedoc(obj):
    """Serialize a shape or EvenFn back into a ShapeDoc dictionary."""
    if isinstance(obj, Ellipse):
        return {"type": "ellipse", "matrix": obj.matrix.tolist()}
    if isinstance(obj, Segment):
        return {"type": "segment", "endpoint": obj.endpoint.tolist()}
    if isinstance(obj, Polygon):
        return {"type": "polygon", "vertices": obj.vertices.tolist()}
    if isinstance(obj, EvenFn):
        return {"type": "samples", "grid": obj.grid, "values": obj.samples.tolist()}
    raise ShapeDocError("cannot serialize %r" % (obj,))
