"""Exact planar geometry kernel.

All predicates are decided exactly. Coordinates are Python ints or
``fractions.Fraction`` (``Fraction`` is the package's Coord type: reduced,
positive denominator, structural equality). Scenes store integer coordinates
internally so the hot predicates run on machine/bignum ints; derived points
(line intersections, triangle vertices) are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import VerticalLine

# orientation results
CCW = 1
COLLINEAR = 0
CW = -1

Coord = Fraction  # canonical exact rational; plain ints mix freely


def as_coord(value) -> Fraction:
    """Convert ints, strings like ``3/4`` or ``0.25``, and floats exactly."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Point:
    x: object  # int | Fraction
    y: object

    def __iter__(self):
        yield self.x
        yield self.y

    def shear(self, lam) -> "Point":
        """x -> x + lam*y, y unchanged (affine, orientation preserving)."""
        return Point(self.x + lam * self.y, self.y)

    def unshear(self, lam) -> "Point":
        return Point(self.x - lam * self.y, self.y)

    def neg(self) -> "Point":
        return Point(-self.x, -self.y)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of (a, b, c): CCW=1, COLLINEAR=0, CW=-1."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if d > 0:
        return CCW
    if d < 0:
        return CW
    return COLLINEAR


def cross(ox, oy, ax, ay, bx, by):
    """Raw cross product (a-o) x (b-o)."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def dot(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (bx - ox) + (ay - oy) * (by - oy)


def point_between_strict(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies strictly inside segment ab; assumes p collinear with ab."""
    return dot(p.x, p.y, a.x, a.y, b.x, b.y) < 0


def open_segments_intersect(p: Point, q: Point, a: Point, b: Point) -> bool:
    """Does the OPEN segment pq meet the CLOSED segment ab?

    Endpoint touches of ab against the interior of pq count; p or q lying on
    ab does not by itself count.
    """
    o1 = orient(p, q, a)
    o2 = orient(p, q, b)
    if o1 == 0 and o2 == 0:
        # all four points collinear: 1-D overlap of [a,b] with (p,q)
        dx, dy = q.x - p.x, q.y - p.y
        ta = (a.x - p.x) * dx + (a.y - p.y) * dy
        tb = (b.x - p.x) * dx + (b.y - p.y) * dy
        lo, hi = (ta, tb) if ta <= tb else (tb, ta)
        span = dx * dx + dy * dy
        return hi > 0 and lo < span
    if o1 == 0:
        return point_between_strict(p, q, a)
    if o2 == 0:
        return point_between_strict(p, q, b)
    if o1 == o2:
        return False  # a, b strictly on the same side of line pq
    # ab properly crosses line pq; crossing point is interior to pq iff
    # p and q are strictly on opposite sides of line ab
    o3 = orient(a, b, p)
    o4 = orient(a, b, q)
    return o3 != 0 and o3 == -o4


def closed_segments_intersect(p: Point, q: Point, a: Point, b: Point) -> bool:
    """Do the CLOSED segments pq and ab share a point?"""
    o1 = orient(p, q, a)
    o2 = orient(p, q, b)
    o3 = orient(a, b, p)
    o4 = orient(a, b, q)
    if o1 != o2 and o1 != 0 and o2 != 0 and o3 != o4 and o3 != 0 and o4 != 0:
        return True
    def on(u, v, w, o):  # w on closed segment uv given collinearity sign o
        return o == 0 and dot(w.x, w.y, u.x, u.y, v.x, v.y) <= 0
    return on(p, q, a, o1) or on(p, q, b, o2) or on(a, b, p, o3) or on(a, b, q, o4)


@dataclass(frozen=True, slots=True)
class Line:
    """Line a*x + b*y = c with canonical integer coefficients.

    Canonical form: a, b, c integers with gcd 1 and the first nonzero of
    (a, b) positive, so equal lines compare equal structurally.
    """

    a: int
    b: int
    c: int

    @staticmethod
    def from_coeffs(a, b, c) -> "Line":
        fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
        if fa == 0 and fb == 0:
            raise ValueError("degenerate line: (a, b) == (0, 0)")
        den = fa.denominator * fb.denominator * fc.denominator
        ia, ib, ic = int(fa * den), int(fb * den), int(fc * den)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        if g:
            ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return Line(ia, ib, ic)

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        a = q.y - p.y
        b = p.x - q.x
        c = a * p.x + b * p.y
        return Line.from_coeffs(a, b, c)

    def eval(self, p: Point):
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> int:
        """+1 above, 0 on, -1 below (above = larger y at equal x); requires b != 0."""
        v = self.eval(p)
        if v == 0:
            return 0
        s = 1 if v > 0 else -1
        return s if self.b > 0 else -s

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def y_at(self, x) -> Fraction:
        if self.b == 0:
            raise VerticalLine("vertical line has no y(x)")
        return Fraction(self.c - self.a * x, self.b)

    def intersect(self, other: "Line") -> Point | None:
        det = self.a * other.b - other.a * self.b
        if det == 0:
            return None
        x = Fraction(self.c * other.b - other.c * self.b, det)
        y = Fraction(self.a * other.c - other.a * self.c, det)
        return Point(x, y)

    def slope_intercept(self):
        """(m, k) with y = m*x + k; raises VerticalLine if vertical."""
        if self.b == 0:
            raise VerticalLine("vertical line has no slope form")
        return (Fraction(-self.a, self.b), Fraction(self.c, self.b))


@dataclass(frozen=True, slots=True)
class DualQuad:
    """Dual-plane images (u1*, u2*, d1*, d2*) of a triangle's bounding lines."""

    u1: Point
    u2: Point
    d1: Point
    d2: Point


def dual_of_line(line: Line) -> Point:
    """Map line y = m*x + k to the dual point (m, -k)."""
    m, k = line.slope_intercept()
    return Point(m, -k)


def dual_of_point(p: Point) -> Line:
    """Map point (a, b) to the dual line y = a*x - b."""
    return Line.from_coeffs(p.x, -1, p.y)


@dataclass(frozen=True)
class Triangle:
    """A covering triangle with half-open edge/vertex inclusion flags.

    Vertices are CCW. ``apex`` is one of the vertices (the sweep's pivot
    endpoint q). Edge i runs from vertex i to vertex (i+1)%3; vertex i is
    shared by edges i and (i+2)%3. An open edge/vertex is NOT contained.
    """

    v0: Point
    v1: Point
    v2: Point
    apex: Point
    owner: int
    side: str  # "above" | "below"
    edge_open: tuple = (False, False, False)
    vertex_open: tuple = (False, False, False)
    gen_pair: tuple | None = None  # (u_endpoint_idx, v_endpoint_idx) rejection-sampling pair
    _edges: tuple = field(default=None, repr=False, compare=False)

    @staticmethod
    def make(v0, v1, v2, apex, owner, side, gen_pair=None) -> "Triangle":
        o = orient(v0, v1, v2)
        if o == 0:
            raise ValueError("degenerate triangle")
        if o < 0:
            v1, v2 = v2, v1
        return Triangle(v0, v1, v2, apex, owner, side, gen_pair=gen_pair)

    def __post_init__(self):
        if self.apex not in (self.v0, self.v1, self.v2):
            raise ValueError("apex must be a triangle vertex")
        object.__setattr__(self, "_edges", tuple(
            Line.through(a, b) for a, b in ((self.v0, self.v1), (self.v1, self.v2), (self.v2, self.v0))
        ))

    @property
    def vertices(self):
        return (self.v0, self.v1, self.v2)

    def edge_lines(self):
        return self._edges

    def with_flags(self, edge_open, vertex_open) -> "Triangle":
        return Triangle(self.v0, self.v1, self.v2, self.apex, self.owner, self.side,
                        tuple(edge_open), tuple(vertex_open), self.gen_pair)

    def bounding_lines(self):
        """((u1, u2), (d1, d2)): below/above bounding lines, duplicated so that
        u1 == u2 or d1 == d2."""
        uppers, lowers = [], []
        verts = self.vertices
        for i, ln in enumerate(self._edges):
            if ln.is_vertical:
                raise VerticalLine("triangle has a vertical side")
            third = verts[(i + 2) % 3]
            if ln.side(third) > 0:
                lowers.append(ln)  # triangle above the line: bounds from below
            else:
                uppers.append(ln)
        if len(lowers) == 1:
            lowers = lowers * 2
        if len(uppers) == 1:
            uppers = uppers * 2
        return (lowers[0], lowers[1]), (uppers[0], uppers[1])

    def contains(self, p: Point) -> bool:
        """Membership honoring the inclusion flags."""
        zeros = 0
        zero_idx = -1
        zero_idx2 = -1
        verts = self.vertices
        for i in range(3):
            a = verts[i]
            b = verts[(i + 1) % 3]
            s = orient(a, b, p)
            if s < 0:
                return False
            if s == 0:
                if zeros == 0:
                    zero_idx = i
                else:
                    zero_idx2 = i
                zeros += 1
        if zeros == 0:
            return True
        if zeros == 1:
            return not self.edge_open[zero_idx]
        # two zero signs: p is the vertex shared by the two edges
        pair = {zero_idx, zero_idx2}
        if pair == {0, 2}:
            return not self.vertex_open[0]
        if pair == {0, 1}:
            return not self.vertex_open[1]
        return not self.vertex_open[2]

    def contains_closed(self, p: Point) -> bool:
        verts = self.vertices
        for i in range(3):
            if orient(verts[i], verts[(i + 1) % 3], p) < 0:
                return False
        return True

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def canonical_key(self):
        """Geometry-only key for multiset comparisons (ignores flags/pairs)."""
        vs = sorted((Fraction(v.x), Fraction(v.y)) for v in self.vertices)
        key = tuple((v[0].numerator, v[0].denominator, v[1].numerator, v[1].denominator) for v in vs)
        return (self.owner, self.side) + key

    def map_points(self, fn, owner=None) -> "Triangle":
        """Apply an affine point map (used for un-shear / reflection)."""
        return Triangle.make(fn(self.v0), fn(self.v1), fn(self.v2), fn(self.apex),
                             self.owner if owner is None else owner, self.side,
                             gen_pair=self.gen_pair)


def point_in_triangle(p: Point, t: Triangle) -> bool:
    return t.contains(p)


def dualize_triangle(t: Triangle) -> DualQuad:
    """Dual images of the four bounding lines; requires no vertical side.

    With the mapping point (a,b) <-> line y = a*x - b, a point p lies in the
    closed triangle iff dual(p) passes below-or-on u1*,u2* and above-or-on
    d1*,d2* -- equivalently u1*,u2* lie above-or-on the line p* and d1*,d2*
    below-or-on it.
    """
    (u1, u2), (d1, d2) = t.bounding_lines()
    return DualQuad(dual_of_line(u1), dual_of_line(u2), dual_of_line(d1), dual_of_line(d2))


def dual_contains(q: DualQuad, p: Point) -> bool:
    """The four half-plane requirements of the duality, all closed."""
    pline = dual_of_point(p)
    return (pline.side(q.u1) >= 0 and pline.side(q.u2) >= 0
            and pline.side(q.d1) <= 0 and pline.side(q.d2) <= 0)


def apply_shear(obj, lam):
    """Shear x -> x + lam*y. Accepts Point or iterable of Points."""
    if isinstance(obj, Point):
        return obj.shear(lam)
    return type(obj)(p.shear(lam) for p in obj)


def pseudo_angle_key(dx, dy):
    """Exact total CCW order on directions, starting at the +x axis.

    Keys compare equal iff the directions are equal. Within each half turn
    -dx/dy is monotone in the polar angle; the half's axis direction sorts
    first via a shorter tuple.
    """
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    half = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
    if dy == 0:
        return (half, 0)
    return (half, 1, Fraction(-dx, dy))


def direction_compare(d1, d2) -> int:
    """Compare directions (dx, dy) CCW starting at +x axis; returns -1/0/1."""
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = d1[0] * d2[1] - d1[1] * d2[0]
    if c > 0:
        return -1  # d1 before d2 (d2 is CCW of d1)
    if c < 0:
        return 1
    return 0
