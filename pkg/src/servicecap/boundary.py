"""Piecewise-linear boundaries of two-file capacity regions.

A boundary is the clockwise chain of extreme points of a convex,
coordinate-monotone region in the first quadrant, walked from the
rate-b axis intercept to the rate-a axis intercept.  Flat initial
segments and one final vertical drop are legal (a square region is
(0, s), (s, s), (s, 0)); interior vertical segments are not.
"""

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)


def _frac_pair(v):
    x, y = v
    return Fraction(x), Fraction(y)


@dataclass(frozen=True)
class PiecewiseBoundary:
    """Vertex chain of a region boundary, exact rationals throughout."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(_frac_pair(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("empty boundary")
        if any(x < 0 or y < 0 for x, y in verts):
            raise ValueError("boundary leaves the first quadrant")
        if verts[0][0] != 0:
            raise ValueError("boundary must start on the rate-b axis")
        if verts[-1][1] != 0:
            raise ValueError("boundary must end on the rate-a axis")
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if (x0, y0) == (x1, y1):
                raise ValueError("repeated vertex")
            if x1 < x0 or y1 > y0:
                raise ValueError("boundary must step right and down")
        for i, ((x0, y0), (x1, y1)) in enumerate(zip(verts, verts[1:])):
            if x0 == x1 and i != len(verts) - 2:
                raise ValueError("vertical segment allowed only as the final drop")
        slopes = [(y1 - y0, x1 - x0) for (x0, y0), (x1, y1) in zip(verts, verts[1:])
                  if x1 != x0]
        for (dy0, dx0), (dy1, dx1) in zip(slopes, slopes[1:]):
            if dy0 * dx1 < dy1 * dx0:  # slope increases: not concave
                raise ValueError("boundary must be concave")

    @property
    def max_rate_a(self) -> Fraction:
        return self.vertices[-1][0]

    @property
    def max_rate_b(self) -> Fraction:
        return self.vertices[0][1]

    def value_at(self, x) -> Fraction:
        """Largest supported rate b at rate a = x (0 beyond the boundary's reach)."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("rate must be non-negative")
        if x > self.max_rate_a:
            return _ZERO
        best = _ZERO
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x0 <= x <= x1 and x0 != x1:
                best = max(best, y0 + (y1 - y0) * (x - x0) / (x1 - x0))
            elif x == x0:
                best = max(best, y0)
        if x == self.vertices[-1][0]:
            best = max(best, self.vertices[-1][1])
        return best if len(self.vertices) > 1 else self.vertices[0][1]

    def normalize(self) -> "PiecewiseBoundary":
        """Drop repeated and interior collinear vertices."""
        out = []
        for v in self.vertices:
            if out and out[-1] == v:
                continue
            while len(out) >= 2:
                (x0, y0), (x1, y1) = out[-2], out[-1]
                if (x1 - x0) * (v[1] - y1) == (y1 - y0) * (v[0] - x1):
                    out.pop()
                else:
                    break
            out.append(v)
        return PiecewiseBoundary(tuple(out))

    def abscissae(self) -> tuple:
        return tuple(sorted({x for x, _ in self.vertices}))


def chain_from_region_vertices(points) -> PiecewiseBoundary:
    """Boundary chain of a convex, lower-closed region given all its vertices.

    Takes the upper concave envelope of the vertex set and appends the
    final drop to the rate-a axis when the region's right edge is
    vertical.
    """
    pts = sorted({_frac_pair(p) for p in points})
    if not pts:
        raise ValueError("no vertices")
    by_x = {}
    for x, y in pts:
        if x not in by_x or y > by_x[x]:
            by_x[x] = y
    tops = sorted(by_x.items())
    hull = []
    for x, y in tops:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (y - y1) >= (y1 - y0) * (x - x1):  # non-right turn
                hull.pop()
            else:
                break
        hull.append((x, y))
    if hull[-1][1] != 0:
        hull.append((hull[-1][0], _ZERO))
    return PiecewiseBoundary(tuple(hull))
