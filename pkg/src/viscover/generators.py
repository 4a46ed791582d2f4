"""Scene generators: random scenes, the quartic stress scene, and the
Hopcroft point-on-line gadget."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DegenerateInput, GenerationFailure
from .geom import Line, Point, as_coord, closed_segments_intersect
from .scene import GAP_DENOM, Scene


def gen_random(n: int, seed: int, extent=100) -> Scene:
    """n pairwise-disjoint integer-coordinate segments inside [0, extent]^2.

    Deterministic in seed. Raises GenerationFailure when the extent is too
    small to place n disjoint segments within the retry budget.
    """
    if n < 1:
        raise GenerationFailure("n must be >= 1")
    extent = int(extent)
    if extent < 4:
        raise GenerationFailure("extent too small")
    rng = random.Random(seed)
    max_len = max(2, extent // max(3, round(n ** 0.5)))
    placed = []
    for _ in range(n):
        for attempt in range(600):
            ax = rng.randint(0, extent)
            ay = rng.randint(0, extent)
            bx = ax + rng.randint(-max_len, max_len)
            by = ay + rng.randint(-max_len, max_len)
            if (bx, by) == (ax, ay):
                continue
            if not (0 <= bx <= extent and 0 <= by <= extent):
                continue
            a, b = Point(ax, ay), Point(bx, by)
            if any(closed_segments_intersect(a, b, p, q) for p, q in placed):
                continue
            placed.append((a, b))
            break
        else:
            raise GenerationFailure(
                f"could not place segment {len(placed)} of {n} (extent {extent} too small?)")
    return Scene.from_user_segments(placed)


def gen_quartic(n: int):
    """Fig.-2-style stress scene: two fences of short collinear segments whose
    pairwise visibility edges extend onto a distinguished tall segment.

    Returns (scene, star_id); the EVG incidence count of the distinguished
    segment grows quadratically in n.
    """
    if n < 8:
        raise DegenerateInput("gen_quartic requires n >= 8")
    k_a = (n - 1) // 2
    k_b = n - 1 - k_a
    pairs = []
    for i in range(k_a):
        pairs.append((Point(10, 4 * i), Point(10, 4 * i + 1)))
    for j in range(k_b):
        pairs.append((Point(20, 4 * j), Point(20, 4 * j + 1)))
    lo = -4 * k_a - 2
    hi = 8 * k_b + 2
    star = len(pairs)
    pairs.append((Point(30, lo), Point(30, hi)))
    scene = Scene.from_user_segments(pairs)
    return scene, star


def gen_hopcroft(lines, gap=None, x_max=10):
    """Point-on-line gadget: 3n+O(1) segments and a special segment s0 such
    that a query point with x > 0 sees s0 iff it lies on one of the input
    lines (up to the finite gap width; see the package docs).

    Precondition (checked): no vertical input lines, no duplicate lines, and
    every pairwise intersection has x >= 0 (the paper's normalization).
    Returns (scene, s0_id).
    """
    lines = list(lines)
    if len(lines) < 2:
        raise DegenerateInput("need at least 2 lines")
    params = []
    for ln in lines:
        if not isinstance(ln, Line):
            raise DegenerateInput("inputs must be Line objects")
        if ln.is_vertical:
            raise DegenerateInput("vertical input lines are not supported")
        params.append(ln.slope_intercept())
    if len(set(params)) != len(params):
        raise DegenerateInput("duplicate input lines")
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            m1, k1 = params[i]
            m2, k2 = params[j]
            if m1 == m2:
                continue
            x = (k2 - k1) / (m1 - m2)
            if x < 0:
                raise DegenerateInput(
                    f"lines {i} and {j} intersect at x={x} < 0; normalize input first")

    walls = [Fraction(-3), Fraction(-2), Fraction(-1)]
    s0_x = Fraction(-4)
    x_left = Fraction(-5)
    x_right = as_coord(x_max)
    if x_right <= 1:
        raise DegenerateInput("x_max must exceed 1")

    ys = [m * x + k for m, k in params for x in (x_left, x_right)]
    y_lo = min(ys) - 2
    y_hi = max(ys) + 2
    extent = max(x_right - x_left, y_hi - y_lo)
    gap = extent / GAP_DENOM if gap is None else as_coord(gap)
    if gap <= 0:
        raise DegenerateInput("gap must be positive")

    pairs = []
    s0_lo = min(m * s0_x + k for m, k in params) - 1
    s0_hi = max(m * s0_x + k for m, k in params) + 1
    s0_id = len(pairs)
    pairs.append((Point(s0_x, s0_lo), Point(s0_x, s0_hi)))

    for w in walls:
        crossings = sorted(m * w + k for m, k in params)
        for i in range(len(crossings) - 1):
            if crossings[i + 1] - crossings[i] <= 2 * gap:
                raise DegenerateInput(
                    f"lines too close at wall x={w}; reduce the gap parameter")
        cuts = [y_lo + gap]
        for y in crossings:
            cuts.append(y - gap / 2)
            cuts.append(y + gap / 2)
        cuts.append(y_hi - gap)
        for i in range(0, len(cuts), 2):
            lo, hi = cuts[i], cuts[i + 1]
            if hi <= lo:
                raise DegenerateInput("gap too large for wall layout")
            pairs.append((Point(w, lo), Point(w, hi)))

    k0 = len(pairs)
    pairs.append((Point(x_left + gap, y_lo), Point(x_right - gap, y_lo)))
    pairs.append((Point(x_left + gap, y_hi), Point(x_right - gap, y_hi)))
    pairs.append((Point(x_left, y_lo + gap), Point(x_left, y_hi - gap)))
    pairs.append((Point(x_right, y_lo + gap), Point(x_right, y_hi - gap)))
    scene = Scene.from_user_segments(pairs, enclosure_ids=(k0, k0 + 1, k0 + 2, k0 + 3))
    return scene, s0_id
