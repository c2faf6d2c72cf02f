"""Exact planar geometry: convex polygons, half-plane clipping and arc/segment boundaries.

Everything here works on plain ``(k, 2)`` numpy arrays of counter-clockwise vertices.
:class:`MixedBoundary` describes convex regions whose boundary is made of straight
segments and circular arcs (``K ∩ RB``, ``conv{K, RB}``, rounded squares) and
evaluates their area, centroid and L_p-affine surface area without discretization.
"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import quad

from .errors import InvalidBody, OriginNotInterior

TWO_PI = 2.0 * math.pi

# ----------------------------------------------------------------------------
# Polygons
# ----------------------------------------------------------------------------


def signed_area(vertices: np.ndarray) -> float:
    """Shoelace area, positive for counter-clockwise order."""
    x, y = vertices[:, 0], vertices[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def polygon_area(vertices: np.ndarray) -> float:
    if len(vertices) < 3:
        return 0.0
    return abs(signed_area(vertices))


def polygon_centroid(vertices: np.ndarray) -> np.ndarray:
    x, y = vertices[:, 0], vertices[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    a = 0.5 * cross.sum()
    cx = ((x + xn) * cross).sum() / (6.0 * a)
    cy = ((y + yn) * cross).sum() / (6.0 * a)
    return np.array([cx, cy])


def polygon_perimeter(vertices: np.ndarray) -> float:
    return float(np.linalg.norm(np.roll(vertices, -1, axis=0) - vertices, axis=1).sum())


def order_ccw(points: np.ndarray) -> np.ndarray:
    """Sort points of a convex polygon counter-clockwise around their mean."""
    center = points.mean(axis=0)
    angles = np.arctan2(points[:, 1] - center[1], points[:, 0] - center[0])
    return points[np.argsort(angles, kind="stable")]


def clip_halfplane(vertices: np.ndarray, normal: np.ndarray, offset: float) -> np.ndarray:
    """Clip a convex polygon to {x : <x, normal> <= offset} (one Sutherland-Hodgman pass)."""
    if len(vertices) == 0:
        return vertices
    s = vertices @ normal - offset
    inside = s <= 0.0
    if inside.all():
        return vertices
    if not inside.any():
        return np.empty((0, 2))
    nxt = np.roll(vertices, -1, axis=0)
    s_next = np.roll(s, -1)
    crossing = inside != np.roll(inside, -1)
    with np.errstate(divide="ignore", invalid="ignore"):
        frac = np.where(crossing, s / (s - s_next), 0.0)
    hits = vertices + frac[:, None] * (nxt - vertices)
    # interleave: vertex i, then the crossing on edge i -> i+1
    points = np.empty((2 * len(vertices), 2))
    points[0::2] = vertices
    points[1::2] = hits
    mask = np.empty(2 * len(vertices), dtype=bool)
    mask[0::2] = inside
    mask[1::2] = crossing
    return points[mask]


def clip_halfplanes(vertices: np.ndarray, normals: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """Intersect a convex polygon with a family of half-planes."""
    out = vertices
    for normal, offset in zip(normals, offsets, strict=True):
        out = clip_halfplane(out, normal, float(offset))
        if len(out) < 3:
            return np.empty((0, 2))
    return out


def cap_area(vertices: np.ndarray, u: np.ndarray, t: float) -> float:
    """Area of the cap {x in P : <x, u> >= t}."""
    return polygon_area(clip_halfplane(vertices, -u, -t))


def _plateau_ends(mask: np.ndarray) -> tuple[int, int]:
    """First and last index (counter-clockwise) of a cyclically contiguous index set."""
    idx = np.flatnonzero(mask)
    k = len(mask)
    first = next(int(i) for i in idx if not mask[(i - 1) % k])
    last = next(int(i) for i in idx if not mask[(i + 1) % k])
    return first, last


def _chain(start: int, stop: int, k: int) -> np.ndarray:
    return np.arange(start, start + (stop - start) % k + 1) % k


def cap_offset(vertices: np.ndarray, u: np.ndarray, area: float) -> float:
    """Offset t with |{x in P : <x, u> >= t}| = area, exactly.

    The chord length of P orthogonal to u is piecewise linear between vertex levels, so
    the cap area is piecewise quadratic in t and inverted in closed form.
    """
    s = vertices @ u
    w = vertices @ np.array([-u[1], u[0]])
    k = len(s)
    tol = 1e-12 * (float(np.abs(s).max()) + 1.0)
    bot_first, bot_last = _plateau_ends(s <= s.min() + tol)
    top_first, top_last = _plateau_ends(s >= s.max() - tol)
    rise = _chain(bot_last, top_first, k)
    fall = _chain(top_last, bot_first, k)[::-1]
    levels = np.unique(np.r_[s[rise], s[fall]])
    width = np.abs(np.interp(levels, s[rise], w[rise]) - np.interp(levels, s[fall], w[fall]))
    pieces = 0.5 * (width[:-1] + width[1:]) * np.diff(levels)
    from_top = np.r_[np.cumsum(pieces[::-1])[::-1], 0.0]
    if area >= from_top[0]:
        return float(levels[0])
    if area <= 0.0:
        return float(levels[-1])
    j = int(np.clip(np.searchsorted(-from_top, -area) - 1, 0, len(levels) - 2))
    need = area - from_top[j + 1]
    if need <= 0.0:
        return float(levels[j + 1])
    span = levels[j + 1] - levels[j]
    w_hi, w_lo = width[j + 1], width[j]
    qa = (w_lo - w_hi) / (2.0 * span)
    tau = 2.0 * need / (w_hi + math.sqrt(max(w_hi * w_hi + 4.0 * qa * need, 0.0)))
    return float(levels[j + 1] - tau)


def disk_cap_area(s: float) -> float:
    """Area of {y in B_2^2 : y_1 >= s} for the unit disk."""
    s = min(1.0, max(-1.0, s))
    return math.acos(s) - s * math.sqrt(1.0 - s * s)


def unit(theta: np.ndarray | float) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    return np.stack([np.cos(theta), np.sin(theta)], axis=-1)


def regular_polygon(k: int, circumradius: float = 1.0, phase: float = 0.0) -> np.ndarray:
    theta = phase + TWO_PI * np.arange(k) / k
    return circumradius * unit(theta)


# ----------------------------------------------------------------------------
# Segment / arc boundaries
# ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Segment:
    """Straight boundary piece traversed from ``start`` to ``end`` (counter-clockwise body)."""

    start: np.ndarray
    end: np.ndarray

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.end - self.start))

    @property
    def normal(self) -> np.ndarray:
        d = self.end - self.start
        return np.array([d[1], -d[0]]) / np.linalg.norm(d)


@dataclass(frozen=True, eq=False)
class Arc:
    """Circular arc with outward normal angles ``theta0 .. theta0 + sweep``."""

    center: np.ndarray
    radius: float
    theta0: float
    sweep: float

    def point(self, theta: float) -> np.ndarray:
        return self.center + self.radius * unit(theta)

    @property
    def start(self) -> np.ndarray:
        return self.point(self.theta0)

    @property
    def end(self) -> np.ndarray:
        return self.point(self.theta0 + self.sweep)

    @property
    def length(self) -> float:
        return self.radius * self.sweep

    def covers(self, phi: np.ndarray) -> np.ndarray:
        """True where the angle ``phi`` is an outward normal of the arc."""
        if self.sweep >= TWO_PI - 1e-15:
            return np.ones_like(phi, dtype=bool)
        return np.mod(phi - self.theta0, TWO_PI) <= self.sweep


Piece = Segment | Arc


def _arc_green(arc: Arc) -> tuple[float, float, float]:
    """Contributions of one arc to (2A, 2 int x dA, 2 int y dA) via Green's theorem."""
    cx, cy = float(arc.center[0]), float(arc.center[1])
    r = arc.radius
    t0, t1 = arc.theta0, arc.theta0 + arc.sweep
    s0, s1, c0, c1 = math.sin(t0), math.sin(t1), math.cos(t0), math.cos(t1)
    area2 = r * cx * (s1 - s0) - r * cy * (c1 - c0) + r * r * (t1 - t0)

    def int_cos2(t: float) -> float:
        return t / 2.0 + math.sin(2.0 * t) / 4.0

    def int_sin2(t: float) -> float:
        return t / 2.0 - math.sin(2.0 * t) / 4.0

    def int_cos3(t: float) -> float:
        return math.sin(t) - math.sin(t) ** 3 / 3.0

    def int_sin3(t: float) -> float:
        return -math.cos(t) + math.cos(t) ** 3 / 3.0

    # int x^2 dy and int y^2 dx along the arc
    x2dy = (
        cx * cx * r * (s1 - s0)
        + 2 * cx * r * r * (int_cos2(t1) - int_cos2(t0))
        + r**3 * (int_cos3(t1) - int_cos3(t0))
    )
    y2dx = -(
        cy * cy * r * (-(c1 - c0))
        + 2 * cy * r * r * (int_sin2(t1) - int_sin2(t0))
        + r**3 * (int_sin3(t1) - int_sin3(t0))
    )
    return area2, x2dy, -y2dx


def _segment_green(seg: Segment) -> tuple[float, float, float]:
    x0, y0 = float(seg.start[0]), float(seg.start[1])
    dx, dy = float(seg.end[0] - x0), float(seg.end[1] - y0)
    area2 = x0 * (y0 + dy) - (x0 + dx) * y0
    x2dy = dy * (x0 * x0 + x0 * dx + dx * dx / 3.0)
    y2dx = dx * (y0 * y0 + y0 * dy + dy * dy / 3.0)
    return area2, x2dy, -y2dx


def asp_exponents_2d(p: float) -> tuple[float, float]:
    """Exponents (a, b) of r^a h^b in the planar normal-angle integrand."""
    if math.isinf(p):
        return 0.0, -2.0
    return 2.0 / (2.0 + p), -2.0 * (p - 1.0) / (2.0 + p)


@dataclass(frozen=True, eq=False)
class MixedBoundary:
    """Convex planar body bounded by counter-clockwise segments and circular arcs."""

    pieces: tuple[Piece, ...]
    label: str = ""

    dim = 2

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_polygon(cls, vertices: np.ndarray, label: str = "") -> "MixedBoundary":
        v = np.asarray(vertices, dtype=float)
        pieces = tuple(Segment(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))
        return cls(pieces, label)

    @classmethod
    def disk(cls, radius: float, center: np.ndarray | None = None, label: str = "") -> "MixedBoundary":
        c = np.zeros(2) if center is None else np.asarray(center, dtype=float)
        return cls((Arc(c, radius, 0.0, TWO_PI),), label)

    @classmethod
    def polygon_cap_ball(cls, vertices: np.ndarray, radius: float, label: str = "") -> "MixedBoundary":
        """Boundary of P ∩ R·B_2^2 for a convex polygon P containing the origin."""
        v = np.asarray(vertices, dtype=float)
        inside: list[Segment] = []
        for i in range(len(v)):
            p0, p1 = v[i], v[(i + 1) % len(v)]
            d = p1 - p0
            a, b, c = d @ d, 2.0 * (p0 @ d), p0 @ p0 - radius * radius
            disc = b * b - 4.0 * a * c
            if disc <= 0.0:
                continue
            root = math.sqrt(disc)
            lo = max(0.0, (-b - root) / (2.0 * a))
            hi = min(1.0, (-b + root) / (2.0 * a))
            if hi - lo > 1e-14:
                inside.append(Segment(p0 + lo * d, p0 + hi * d))
        if not inside:
            return cls.disk(radius, label=label)
        pieces: list[Piece] = []
        for i, seg in enumerate(inside):
            pieces.append(seg)
            nxt = inside[(i + 1) % len(inside)]
            if np.linalg.norm(seg.end - nxt.start) > 1e-12 * radius:
                a0 = math.atan2(seg.end[1], seg.end[0])
                a1 = math.atan2(nxt.start[1], nxt.start[0])
                pieces.append(Arc(np.zeros(2), radius, a0, (a1 - a0) % TWO_PI))
        return cls(tuple(pieces), label)

    @classmethod
    def polygon_hull_ball(cls, vertices: np.ndarray, radius: float, label: str = "") -> "MixedBoundary":
        """Boundary of conv{P, R·B_2^2} for a convex polygon P containing the origin."""
        v = np.asarray(vertices, dtype=float)
        outer = v[np.linalg.norm(v, axis=1) > radius * (1.0 + 1e-12)]
        if len(outer) == 0:
            return cls.disk(radius, label=label)
        pieces: list[Piece] = []
        q = len(outer)
        for i in range(q):
            a, b = outer[i], outer[(i + 1) % q]
            if q > 1:
                seg = Segment(a, b)
                if a @ seg.normal >= radius * (1.0 - 1e-12):
                    pieces.append(seg)
                    continue
            alpha = math.atan2(a[1], a[0]) + math.acos(radius / np.linalg.norm(a))
            beta = math.atan2(b[1], b[0]) - math.acos(radius / np.linalg.norm(b))
            sweep = (beta - alpha) % TWO_PI
            arc = Arc(np.zeros(2), radius, alpha, sweep)
            pieces.extend([Segment(a, arc.start), arc, Segment(arc.end, b)])
        return cls(tuple(p for p in pieces if p.length > 1e-15), label)

    @classmethod
    def rounded_square(cls, eps: float, half: float = 1.0, label: str = "") -> "MixedBoundary":
        """(half - eps)-square Minkowski-summed with eps·B, i.e. [-half, half]^2 with rounded corners."""
        if not 0.0 < eps <= half:
            raise InvalidBody(f"rounding radius must lie in (0, {half}], got {eps}")
        k = half - eps
        corners = [np.array([k, k]), np.array([-k, k]), np.array([-k, -k]), np.array([k, -k])]
        pieces: list[Piece] = []
        for j, c in enumerate(corners):
            theta = j * math.pi / 2.0
            side = eps * unit(theta)
            pieces.append(Segment(corners[j - 1] + side, c + side))
            pieces.append(Arc(c, eps, theta, math.pi / 2.0))
        return cls(tuple(p for p in pieces if p.length > 1e-15), label)

    # -- measures ------------------------------------------------------------

    @cached_property
    def _green(self) -> tuple[float, float, float]:
        total = np.zeros(3)
        for piece in self.pieces:
            total += _segment_green(piece) if isinstance(piece, Segment) else _arc_green(piece)
        return float(total[0]), float(total[1]), float(total[2])

    def area(self) -> float:
        return 0.5 * self._green[0]

    def centroid(self) -> np.ndarray:
        area2, mx, my = self._green
        # int x dA = 1/2 int x^2 dy, int y dA = -1/2 int y^2 dx
        return np.array([mx, my]) / area2

    def perimeter(self) -> float:
        return float(sum(piece.length for piece in self.pieces))

    # -- support and radial functions ----------------------------------------

    def support(self, u: np.ndarray) -> np.ndarray | float:
        u = np.asarray(u, dtype=float)
        dirs = np.atleast_2d(u)
        phi = np.arctan2(dirs[:, 1], dirs[:, 0])
        best = np.full(len(dirs), -np.inf)
        for piece in self.pieces:
            best = np.maximum(best, dirs @ piece.start)
            best = np.maximum(best, dirs @ piece.end)
            if isinstance(piece, Arc):
                arc_val = dirs @ piece.center + piece.radius
                best = np.where(piece.covers(phi), np.maximum(best, arc_val), best)
        return best if u.ndim == 2 else float(best[0])

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        u = np.asarray(u, dtype=float)
        dirs = np.atleast_2d(u)
        best = np.zeros(len(dirs))
        for piece in self.pieces:
            if isinstance(piece, Segment):
                d = piece.end - piece.start
                det = dirs[:, 0] * (-d[1]) - dirs[:, 1] * (-d[0])
                with np.errstate(divide="ignore", invalid="ignore"):
                    t = (piece.start[0] * (-d[1]) - piece.start[1] * (-d[0])) / det
                    s = (dirs[:, 0] * piece.start[1] - dirs[:, 1] * piece.start[0]) / det
                ok = np.isfinite(t) & (s >= -1e-12) & (s <= 1 + 1e-12) & (t > 0)
            else:
                uc = dirs @ piece.center
                disc = uc * uc - piece.center @ piece.center + piece.radius**2
                t = uc + np.sqrt(np.maximum(disc, 0.0))
                hit = t[:, None] * dirs - piece.center
                ok = (disc >= 0) & piece.covers(np.arctan2(hit[:, 1], hit[:, 0]))
            best = np.where(ok, np.maximum(best, np.where(ok, t, 0.0)), best)
        return best if u.ndim == 2 else float(best[0])

    # -- transformations -----------------------------------------------------

    def translated(self, shift: np.ndarray) -> "MixedBoundary":
        s = np.asarray(shift, dtype=float)
        moved: list[Piece] = []
        for piece in self.pieces:
            if isinstance(piece, Segment):
                moved.append(Segment(piece.start + s, piece.end + s))
            else:
                moved.append(Arc(piece.center + s, piece.radius, piece.theta0, piece.sweep))
        return MixedBoundary(tuple(moved), self.label)

    def scaled(self, factor: float) -> "MixedBoundary":
        scaled: list[Piece] = []
        for piece in self.pieces:
            if isinstance(piece, Segment):
                scaled.append(Segment(factor * piece.start, factor * piece.end))
            else:
                scaled.append(Arc(factor * piece.center, factor * piece.radius, piece.theta0, piece.sweep))
        return MixedBoundary(tuple(scaled), self.label)

    def polygon(self, points_per_arc: int = 256) -> np.ndarray:
        """Vertices of an inscribed polygon approximation."""
        pts: list[np.ndarray] = []
        for piece in self.pieces:
            if isinstance(piece, Segment):
                pts.append(piece.start[None, :])
            else:
                k = max(2, int(math.ceil(points_per_arc * piece.sweep / TWO_PI)))
                theta = piece.theta0 + piece.sweep * np.arange(k) / k
                pts.append(piece.center + piece.radius * unit(theta))
        return np.vstack(pts)

    # -- affine surface area -------------------------------------------------

    def asp(self, p: float) -> float:
        """L_p-affine surface area about the origin.

        Arcs are integrated piece by piece; flat pieces contribute 0 for p > 0 and
        p < -2, +inf for -2 < p < 0, and <x, N>·length for p = 0.
        """
        if float(np.min(self.support(unit(TWO_PI * np.arange(720) / 720)))) <= 0.0:
            raise OriginNotInterior(f"origin is not interior to {self.label or 'the boundary'}")
        a, b = asp_exponents_2d(p)
        total = 0.0
        for piece in self.pieces:
            if isinstance(piece, Segment):
                if p == 0:
                    total += float(piece.start @ piece.normal) * piece.length
                elif -2.0 < p < 0.0:
                    return math.inf
                continue
            rho = piece.radius
            offset = piece.center

            def integrand(theta: float, rho: float = rho, offset: np.ndarray = offset) -> float:
                h = offset[0] * math.cos(theta) + offset[1] * math.sin(theta) + rho
                return float(rho**a * h**b)

            value, _ = quad(integrand, piece.theta0, piece.theta0 + piece.sweep, epsabs=0.0, epsrel=1e-12, limit=200)
            total += value
        return total
