"""Scene representation, validation, shear normalization and the file format.

A scene is a set of pairwise disjoint closed segments (no shared endpoints),
none vertical after shearing, with all endpoint x-coordinates distinct, plus
four segments forming an enclosing rectangle (with tiny corner gaps so the
closed segments stay disjoint).

Internally every coordinate is an integer: user coordinates are sheared by
x -> x + lam*y and scaled by a common denominator. Counts and booleans are
invariant under this map; file output is always un-sheared user coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ValidationError
from .geom import Point, as_coord, closed_segments_intersect, orient, dot

FILE_HEADER = "viscover v1"
ENCLOSURE_MARGIN = Fraction(1, 10)
GAP_DENOM = 2 ** 20  # corner/construction gap = extent / GAP_DENOM


def fmt_rat(value) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True, slots=True)
class Segment:
    """Scene segment in internal (sheared, integer) coordinates, a.x < b.x."""

    id: int
    a: Point
    b: Point

    @property
    def endpoints(self):
        return (self.a, self.b)


class Scene:
    """Validated immutable scene.

    ``segments`` are in internal coordinates; ``to_user``/``to_internal``
    convert. Endpoint ids are 2*sid (left) and 2*sid+1 (right).
    """

    def __init__(self, segments, enclosure_ids, lam, scale, user_segments):
        self.segments = segments
        self.enclosure_ids = tuple(enclosure_ids)
        self.lam = lam
        self.scale = scale
        self._user_segments = user_segments  # list of (Point, Point), file order
        self.n = len(segments)
        self._endpoints = []
        for seg in segments:
            self._endpoints.append(seg.a)
            self._endpoints.append(seg.b)

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_user_segments(user_pairs, enclosure_ids=None, validate=True) -> "Scene":
        """Build a scene from user-coordinate endpoint pairs.

        Adds an enclosure automatically when ``enclosure_ids`` is None and no
        existing enclosure is detected.
        """
        pairs = [(Point(as_coord(p.x), as_coord(p.y)), Point(as_coord(q.x), as_coord(q.y)))
                 for p, q in user_pairs]
        for i, (p, q) in enumerate(pairs):
            if p == q:
                raise ValidationError(f"segment {i} has zero length", [i])
        if enclosure_ids is None:
            enclosure_ids = _find_enclosure(pairs)
            if enclosure_ids is None:
                pairs, enclosure_ids = _add_enclosure(pairs)
        lam = _choose_shear(pairs)
        scale = _common_scale(pairs, lam)
        segments = []
        for i, (p, q) in enumerate(pairs):
            ip = _to_internal(p, lam, scale)
            iq = _to_internal(q, lam, scale)
            if ip.x > iq.x:
                ip, iq = iq, ip
            segments.append(Segment(i, ip, iq))
        scene = Scene(segments, enclosure_ids, lam, scale, pairs)
        if validate:
            scene._validate()
        return scene

    def _validate(self):
        xs = {}
        for seg in self.segments:
            for p in seg.endpoints:
                if p.x in xs:
                    raise ValidationError(
                        f"endpoint x-coordinates of segments {xs[p.x]} and {seg.id} "
                        "coincide after shear", [xs[p.x], seg.id])
                xs[p.x] = seg.id
        segs = self.segments
        for i in range(len(segs)):
            a = segs[i]
            for j in range(i + 1, len(segs)):
                b = segs[j]
                if closed_segments_intersect(a.a, a.b, b.a, b.b):
                    raise ValidationError(
                        f"segments {a.id} and {b.id} are not disjoint", [a.id, b.id])
        box = self.user_enclosure_box()
        if box is None:
            raise ValidationError("enclosure ids do not form a rectangle", self.enclosure_ids)
        x0, y0, x1, y1 = box
        encl = set(self.enclosure_ids)
        for sid, (p, q) in enumerate(self._user_segments):
            if sid in encl:
                continue
            for pt in (p, q):
                if not (x0 < pt.x < x1 and y0 < pt.y < y1):
                    raise ValidationError(
                        f"segment {sid} is not strictly inside the enclosure", [sid])

    # -- coordinate transforms -------------------------------------------

    def to_internal(self, p: Point) -> Point:
        """User point -> internal integer (or rational) point."""
        x = (as_coord(p.x) + self.lam * as_coord(p.y)) * self.scale
        y = as_coord(p.y) * self.scale
        xi = int(x) if x.denominator == 1 else x
        yi = int(y) if y.denominator == 1 else y
        return Point(xi, yi)

    def to_user(self, p: Point) -> Point:
        y = Fraction(p.y, self.scale) if not isinstance(p.y, Fraction) else p.y / self.scale
        x = (Fraction(p.x) if not isinstance(p.x, Fraction) else p.x) / self.scale - self.lam * y
        return Point(x, y)

    # -- accessors ---------------------------------------------------------

    def endpoint(self, eid: int) -> Point:
        return self._endpoints[eid]

    @property
    def endpoints(self):
        return self._endpoints

    def endpoint_ids(self):
        return range(len(self._endpoints))

    def segment_of_endpoint(self, eid: int) -> int:
        return eid // 2

    def user_segment(self, sid: int):
        return self._user_segments[sid]

    def user_enclosure_box(self):
        """(x0, y0, x1, y1) of the enclosure rectangle in user coordinates."""
        h, v = [], []
        for sid in self.enclosure_ids:
            p, q = self._user_segments[sid]
            if p.y == q.y:
                h.append(p.y)
            elif p.x == q.x:
                v.append(p.x)
            else:
                return None
        if len(h) != 2 or len(v) != 2:
            return None
        return (min(v), min(h), max(v), max(h))

    def is_on_segment(self, p: Point) -> bool:
        """p in internal coordinates; True iff p lies on some closed segment."""
        for seg in self.segments:
            if orient(seg.a, seg.b, p) == 0 and dot(p.x, p.y, seg.a.x, seg.a.y, seg.b.x, seg.b.y) <= 0:
                return True
        return False

    def reflected(self) -> "Scene":
        """Point-reflection through the origin of the internal coordinates.

        Preserves ids; used by the mirrored (below-side) covering sweep.
        """
        segs = [Segment(s.id, s.b.neg(), s.a.neg()) for s in self.segments]
        scene = Scene.__new__(Scene)
        scene.segments = segs
        scene.enclosure_ids = self.enclosure_ids
        scene.lam = self.lam
        scene.scale = self.scale
        scene._user_segments = self._user_segments
        scene.n = self.n
        scene._endpoints = []
        for seg in segs:
            scene._endpoints.append(seg.a)
            scene._endpoints.append(seg.b)
        return scene

    # -- serialization -----------------------------------------------------

    def serialize(self) -> str:
        lines = [FILE_HEADER]
        for p, q in self._user_segments:
            lines.append(" ".join(fmt_rat(v) for v in (p.x, p.y, q.x, q.y)))
        return "\n".join(lines) + "\n"


def _find_enclosure(pairs):
    """Detect an existing enclosure: one horizontal segment on each of the
    bbox's top/bottom, one vertical on each side, everything else strictly
    inside. Returns the four ids or None."""
    if len(pairs) < 5:
        return None
    xs = [pt.x for p, q in pairs for pt in (p, q)]
    ys = [pt.y for p, q in pairs for pt in (p, q)]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    bottom = top = left = right = None
    for sid, (p, q) in enumerate(pairs):
        if p.y == q.y == y0:
            if bottom is not None:
                return None
            bottom = sid
        elif p.y == q.y == y1:
            if top is not None:
                return None
            top = sid
        elif p.x == q.x == x0:
            if left is not None:
                return None
            left = sid
        elif p.x == q.x == x1:
            if right is not None:
                return None
            right = sid
    if None in (bottom, top, left, right):
        return None
    ids = {bottom, top, left, right}
    for sid, (p, q) in enumerate(pairs):
        if sid in ids:
            continue
        for pt in (p, q):
            if not (x0 < pt.x < x1 and y0 < pt.y < y1):
                return None
    return (bottom, top, left, right)


def _add_enclosure(pairs):
    xs = [pt.x for p, q in pairs for pt in (p, q)]
    ys = [pt.y for p, q in pairs for pt in (p, q)]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    extent = max(x1 - x0, y1 - y0)
    if extent == 0:
        extent = Fraction(1)
    margin = extent * ENCLOSURE_MARGIN
    if margin == 0:
        margin = Fraction(1)
    gx0, gx1 = x0 - margin, x1 + margin
    gy0, gy1 = y0 - margin, y1 + margin
    gap = (max(gx1 - gx0, gy1 - gy0)) / GAP_DENOM
    new = list(pairs)
    new.append((Point(gx0 + gap, gy0), Point(gx1 - gap, gy0)))  # bottom
    new.append((Point(gx0 + gap, gy1), Point(gx1 - gap, gy1)))  # top
    new.append((Point(gx0, gy0 + gap), Point(gx0, gy1 - gap)))  # left
    new.append((Point(gx1, gy0 + gap), Point(gx1, gy1 - gap)))  # right
    k = len(pairs)
    return new, (k, k + 1, k + 2, k + 3)


def _choose_shear(pairs) -> Fraction:
    """First lambda in 1/2, 1/4, ... giving distinct sheared x for all endpoints."""
    lam = Fraction(1, 2)
    for _ in range(64):
        seen = set()
        ok = True
        for p, q in pairs:
            for pt in (p, q):
                sx = pt.x + lam * pt.y
                if sx in seen:
                    ok = False
                    break
                seen.add(sx)
            if not ok:
                break
        if ok:
            return lam
        lam /= 2
    raise ValidationError("could not find a shear factor (degenerate input)")


def _common_scale(pairs, lam) -> int:
    from math import lcm

    denom = 1
    for p, q in pairs:
        for pt in (p, q):
            sx = pt.x + lam * pt.y
            denom = lcm(denom, sx.denominator, pt.y.denominator)
    return denom


def _to_internal(p: Point, lam, scale) -> Point:
    x = (p.x + lam * p.y) * scale
    y = p.y * scale
    return Point(int(x), int(y))


def parse_scene(text: str) -> Scene:
    """Parse the line-oriented scene format (see package docs)."""
    lines = text.splitlines()
    body = [ln.strip() for ln in lines]
    body = [ln for ln in body if ln and not ln.startswith("#")]
    if not body or body[0] != FILE_HEADER:
        raise ParseError(f"missing header line {FILE_HEADER!r}")
    pairs = []
    for lineno, ln in enumerate(body[1:], start=2):
        parts = ln.split()
        if len(parts) != 4:
            raise ParseError(f"line {lineno}: expected 4 rationals, got {len(parts)}")
        try:
            vals = [as_coord(s) for s in parts]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        pairs.append((Point(vals[0], vals[1]), Point(vals[2], vals[3])))
    if not pairs:
        raise ParseError("scene file contains no segments")
    return Scene.from_user_segments(pairs)
