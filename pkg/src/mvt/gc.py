"""Circuit-ideal and Grassmann-Cayley-ideal generator emission.

Circuit generators: one bracket per collinear triple; parallel pairs and
loops are emitted as coordinate-minor descriptors (a 2x2 minor is not a
3-bracket).  GC generators come from triples of concurrent lines; deeper
levels substitute degree-2 points by the meet of their two lines.  The
curated recipes reproduce the printed Pascal and Pappus generator sets.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bracket import (BracketPoly, gc_bracket, meet_node, substitute_point,
                      det3, format_poly)


@dataclass(frozen=True)
class MinorGenerator:
    """The three 2x2 coordinate minors of the pair (a, b): rank {a,b} <= 1."""
    a: int
    b: int

    def evaluate(self, cfg):
        u, v = cfg[self.a], cfg[self.b]
        return (u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0])

    def vanishes(self, cfg):
        return all(x == 0 for x in self.evaluate(cfg))

    def __str__(self):
        return "minors2x2(%d,%d)" % (self.a, self.b)


@dataclass(frozen=True)
class CoordGenerator:
    """The three coordinate entries of a loop point."""
    a: int

    def evaluate(self, cfg):
        return cfg[self.a]

    def vanishes(self, cfg):
        return all(x == 0 for x in self.evaluate(cfg))

    def __str__(self):
        return "coords(%d)" % self.a


class BracketGenerator:
    """A bracket polynomial generator with an evaluation hook."""

    def __init__(self, poly):
        self.poly = poly

    def evaluate(self, cfg):
        return self.poly.evaluate(cfg)

    def vanishes(self, cfg):
        return self.evaluate(cfg) == 0

    def __str__(self):
        return format_poly(self.poly)

    def __eq__(self, other):
        return isinstance(other, BracketGenerator) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)


def circuit_generators(m):
    """Generators of the circuit ideal, triples first in line order."""
    out = [BracketGenerator(BracketPoly.bracket(*tri))
           for tri in m.triangles_ordered()]
    for cls in m.classes:
        for a, b in itertools.combinations(cls, 2):
            out.append(MinorGenerator(a, b))
    for p in sorted(m.loops):
        out.append(CoordGenerator(p))
    return out


def _line_pair(m, line, x, which=0):
    """The two smallest points != x on `line` (which=0); `which` shifts the
    selection for recipes that use other representatives."""
    pts = sorted(m.line_points(line) - {x})
    return pts[which], pts[which + 1]


def concurrency_poly(m, x, three_lines):
    """(p1 p2 ^ p3 p4) v p5 p6 for the three lines through x, pairs taken as
    the two smallest points != x per line in stored line order."""
    (a, b), (c, d), (e, f) = [_line_pair(m, l, x) for l in three_lines]
    return gc_bracket([meet_node(a, b, c, d), e, f])


def gc_generators(m, depth=1):
    """Emit GC generators up to the given substitution depth.

    Depth 1: one concurrency polynomial per point of degree >= 3 and 3-subset
    of its lines.  Each further level substitutes every degree-2 point whose
    two lines both carry two other points, keeping earlier levels.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    level = []
    for x in sorted(p for p in m.ground() if m.degree(p) >= 3):
        for trip in itertools.combinations(m.lines_through(x), 3):
            level.append(concurrency_poly(m, x, trip))
    out = list(level)
    for _ in range(depth - 1):
        nxt = []
        subs = []
        for x in sorted(p for p in m.ground() if m.degree(p) == 2):
            l1, l2 = m.lines_through(x)
            if len(m.line_points(l1)) >= 3 and len(m.line_points(l2)) >= 3:
                subs.append((x, _line_pair(m, l1, x), _line_pair(m, l2, x)))
        for poly in level:
            for x, pair1, pair2 in subs:
                if poly.has_symbol(x):
                    cand = substitute_point(poly, x, pair1, pair2)
                    if not cand.is_zero() and cand not in out and cand not in nxt:
                        nxt.append(cand)
        out.extend(nxt)
        level = nxt
    return out


# -- curated recipes -------------------------------------------------------------
#
# Each entry is (sign, expression items, printed polynomial text); the
# expression expands (with the stored sign) to the printed form, checked by
# identity_test in the suite.  Pairs are ordered exactly as needed to
# reproduce the printed monomials.

PASCAL_RECIPE = [
    # the hexagon polynomial: bracket of the three meets behind 7, 8, 9
    (-1, (meet_node(1, 5, 2, 4), meet_node(1, 6, 3, 4), meet_node(3, 5, 2, 6)),
     "[1,5,3][1,4,2][5,4,6][3,2,6]-[1,5,4][1,3,2][5,3,6][4,2,6]"),
    (1, (7, meet_node(5, 3, 2, 6), meet_node(3, 4, 6, 1)),
     "[5,2,6][3,6,1][7,3,4]-[3,2,6][3,6,1][7,5,4]+[3,2,6][4,6,1][7,5,3]"),
    # the polynomial of 8 v (51 ^ 24) v (35 ^ 62), not printed in expanded form
    (1, (8, meet_node(5, 1, 2, 4), meet_node(3, 5, 6, 2)),
     "-[1,2,5][2,3,5][4,6,8]-[1,2,5][2,4,8][3,5,6]+[1,4,5][2,3,5][2,6,8]"),
    # 9 v (43 ^ 16) v (24 ^ 51)
    (1, (9, meet_node(4, 3, 1, 6), meet_node(2, 4, 5, 1)),
     "-[1,2,4][1,3,4][5,6,9]-[1,2,4][1,5,9][3,4,6]+[1,3,4][1,6,9][2,4,5]"),
    (1, (7, 9, meet_node(3, 4, 6, 1)),
     "[7,4,9][3,6,1]-[4,6,1][7,3,9]"),
    # 7 v 8 v (35 ^ 62)
    (1, (7, 8, meet_node(3, 5, 6, 2)),
     "-[2,3,5][6,7,8]+[2,7,8][3,5,6]"),
    # 9 v 8 v (15 ^ 42)
    (1, (9, 8, meet_node(1, 5, 4, 2)),
     "-[1,2,5][4,8,9]+[1,4,5][2,8,9]"),
]

PAPPUS_RECIPE = [
    (1, (meet_node(2, 3, 5, 7), 6, 8), "[2,3,5][7,6,8]-[2,3,7][5,6,8]"),
    (1, (meet_node(1, 3, 4, 7), 6, 9), "[1,3,4][7,6,9]-[1,3,7][4,6,9]"),
    (1, (meet_node(1, 2, 4, 8), 5, 9), "[1,2,4][8,5,9]-[1,2,8][4,5,9]"),
    (1, (meet_node(2, 4, 1, 5), 8, 9), "[2,4,1][5,8,9]-[2,4,5][1,8,9]"),
    (1, (meet_node(7, 9, 1, 6), 3, 4), "[7,9,1][6,3,4]-[7,9,6][1,3,4]"),
    (1, (meet_node(2, 6, 3, 5), 7, 8), "[2,6,3][5,7,8]-[2,6,5][3,7,8]"),
    (1, (meet_node(2, 7, 3, 8), 5, 6), "[2,7,3][8,5,6]-[2,7,8][3,5,6]"),
    (1, (meet_node(4, 6, 1, 7), 3, 9), "[4,6,1][7,3,9]-[4,6,7][1,3,9]"),
    (1, (meet_node(2, 9, 1, 8), 4, 5), "[2,9,1][8,4,5]-[2,9,8][1,4,5]"),
]

RECIPES = {"pascal-7": PASCAL_RECIPE, "pappus-9": PAPPUS_RECIPE}

RECIPES_BY_CONFIG = {"pascal": "pascal-7", "pappus": "pappus-9"}


def curated_generators(name):
    """The curated GC generator list for `name` ('pascal-7' or 'pappus-9')."""
    out = []
    for sign, items, _ in RECIPES[name]:
        poly = gc_bracket(list(items))
        out.append(poly if sign > 0 else poly.scale(-1))
    return out


def curated_printed(name):
    """The printed polynomial texts available for the recipe."""
    return [text for _, _, text in RECIPES[name]]


def generators_vanish_on(gens, cfg):
    return all(g.vanishes(cfg) if hasattr(g, "vanishes")
               else g.evaluate(cfg) == 0 for g in gens)
