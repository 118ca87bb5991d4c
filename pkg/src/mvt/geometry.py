"""Exact rational 3-vector configurations.

A configuration assigns each ground-set point an exact rational 3-vector
(zero vector = loop).  This module decides circuit-variety and realization
membership, computes meets, normalizes projective frames, constructs
realizations by propagation, and evaluates one-parameter limit families.
"""

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .bracket import det3, rand_fraction
from .matroid import MatroidError

ZERO = (Fraction(0), Fraction(0), Fraction(0))
E1 = (Fraction(1), Fraction(0), Fraction(0))
E2 = (Fraction(0), Fraction(1), Fraction(0))
E3 = (Fraction(0), Fraction(0), Fraction(1))


def vec(x, y, z):
    return (Fraction(x), Fraction(y), Fraction(z))


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def is_zero(u):
    return all(x == 0 for x in u)


def scale(u, c):
    return (u[0] * c, u[1] * c, u[2] * c)


def add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def proj_equal(u, v):
    """Up-to-scalar equality of nonzero vectors: vanishing cross product."""
    return not is_zero(u) and not is_zero(v) and is_zero(cross(u, v))


def meet_vectors(v1, v2, v3, v4):
    """[v1,v2,v3] v4 - [v1,v2,v4] v3: the meet of the spans <v1,v2>, <v3,v4>."""
    a = det3(v1, v2, v3)
    b = det3(v1, v2, v4)
    return tuple(a * x - b * y for x, y in zip(v4, v3))


def rank_of(cfg, pts):
    vecs = [cfg[p] for p in pts if not is_zero(cfg[p])]
    if not vecs:
        return 0
    base = vecs[0]
    rest = [v for v in vecs[1:] if not is_zero(cross(base, v))]
    if not rest:
        return 1
    second = rest[0]
    for v in rest[1:]:
        if det3(base, second, v) != 0:
            return 3
    return 2


def includes_dependencies(cfg, m):
    """Every circuit of size <= 3 has vanishing minors (4-circuits come free)."""
    for p in m.loops:
        if not is_zero(cfg[p]):
            return False
    for cls in m.classes:
        for a, b in itertools.combinations(cls, 2):
            if not is_zero(cross(cfg[a], cfg[b])):
                return False
    for tri in m.triangles():
        a, b, c = sorted(tri)
        if det3(cfg[a], cfg[b], cfg[c]) != 0:
            return False
    return True


def is_realization(cfg, m):
    """Dependencies match exactly in both directions."""
    if not includes_dependencies(cfg, m):
        return False
    for p in m.nonloops():
        if is_zero(cfg[p]):
            return False
    reps = sorted(min(c) for c in m.classes)
    for a, b in itertools.combinations(reps, 2):
        if is_zero(cross(cfg[a], cfg[b])):
            return False
    if m.rank_cap == 3:
        for a, b, c in itertools.combinations(reps, 3):
            if m.is_independent({a, b, c}) and det3(cfg[a], cfg[b], cfg[c]) == 0:
                return False
    return True


def normalize_frame(cfg, basis):
    """Linear transform + column scalings sending the four frame points to
    e1, e2, e3, (1,1,1); all columns are rescaled to leading coefficient 1.

    Returns (transform rows, scalings dict, new VectorConfig).
    """
    b1, b2, b3, b4 = basis
    for trip in itertools.combinations(basis, 3):
        if det3(*(cfg[p] for p in trip)) == 0:
            raise MatroidError("degenerate frame: %s dependent" % (sorted(trip),))
    # solve cfg[b4] = a*cfg[b1] + b*cfg[b2] + c*cfg[b3]
    den = det3(cfg[b1], cfg[b2], cfg[b3])
    a = det3(cfg[b4], cfg[b2], cfg[b3]) / den
    b = det3(cfg[b1], cfg[b4], cfg[b3]) / den
    c = det3(cfg[b1], cfg[b2], cfg[b4]) / den
    cols = [scale(cfg[b1], a), scale(cfg[b2], b), scale(cfg[b3], c)]
    t = _invert3(cols)
    out = {}
    scalings = {}
    for p, v in cfg.items():
        w = _apply3(t, v)
        s = next((x for x in w if x != 0), None)
        if s is not None:
            scalings[p] = s
            w = scale(w, Fraction(1) / s)
        out[p] = w
    return t, scalings, out


def _invert3(cols):
    det = det3(*cols)
    if det == 0:
        raise MatroidError("singular frame matrix")
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    cof = [[(m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
             - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]) / det
            for j in range(3)] for i in range(3)]
    return cof


def _apply3(rows, v):
    return tuple(sum(rows[i][j] * v[j] for j in range(3)) for i in range(3))


# -- constructive realization -----------------------------------------------------------


@dataclass(frozen=True)
class RealizationCertificate:
    outcome: str                 # "realization" | "infeasible" | "inconclusive"
    config: dict = None
    witness: Fraction = None
    trace: tuple = ()
    stuck_point: int = None


def _placement_order(m):
    """Deepest Q-chain level first, unplaceable fixpoint points before all.

    Processing in this order, a point of a solvable configuration never sees
    more than two determined lines, so propagation cannot hit a concurrency
    conflict there; fixpoint points (non-solvable cores) come first and carry
    the frame.
    """
    chain = m.q_chain_sets()
    level = {}
    for k, pts in enumerate(chain):
        for p in pts:
            level[p] = k
    fix = chain[-1]
    def key(p):
        if p in fix:
            return (0, 0, p)
        return (1, -level.get(p, 0), p)
    return sorted(m.ground(), key=key), fix


def _rand_on_line(rng, u, v):
    while True:
        t = rand_fraction(rng)
        w = add(u, scale(v, t))
        if not is_zero(w):
            return w


def propagate_realization(m, seed=0, max_attempts=25):
    """Constructive realization of a simple configuration.

    Points are processed in the solvable-chain order; a point on >= 2
    determined lines is forced via meets, on one line it is drawn on that
    line, otherwise freely.  A point on >= 3 determined lines triggers a
    concurrency check: a conflict among frame-forced values only is returned
    as `infeasible` with the nonzero determinant, a conflict involving free
    random draws as `inconclusive`.
    """
    if not m.is_simple():
        raise MatroidError("propagate_realization expects a simple matroid")
    if m.rank_cap <= 2:
        return _propagate_degenerate(m, seed)
    last = None
    for attempt in range(max_attempts):
        rng = random.Random(seed * 1000003 + attempt)
        cert = _propagate_once(m, rng)
        if cert.outcome == "infeasible":
            return cert
        if cert.outcome == "realization" and is_realization(cert.config, m):
            return cert
        last = cert
    if last is not None and last.outcome == "inconclusive":
        return last
    return RealizationCertificate("inconclusive", stuck_point=0)


def _propagate_degenerate(m, seed):
    rng = random.Random(seed * 1000003)
    cfg = {}
    if m.rank_cap == 2:
        used = set()
        for p in m.ground():
            t = rand_fraction(rng)
            while t in used:
                t = rand_fraction(rng)
            used.add(t)
            cfg[p] = (Fraction(1), t, Fraction(0))
    elif m.rank_cap == 1:
        for p in m.ground():
            cfg[p] = E1
    else:
        for p in m.ground():
            cfg[p] = ZERO
    return RealizationCertificate("realization", config=cfg)


def _propagate_once(m, rng):
    order, fix = _placement_order(m)
    frame = _greedy_frame(m, [p for p in order if p in fix]) if fix else ()
    cfg = {}
    tainted = set()
    trace = []
    frame_vecs = (E1, E2, E3, vec(1, 1, 1))
    lines = [m.line_points(l) for l in m.lines]
    for p in order:
        if p in frame:
            cfg[p] = frame_vecs[frame.index(p)]
            trace.append((p, "frame"))
            continue
        det_lines = []
        for l in lines:
            placed = sorted(x for x in l if x in cfg and not is_zero(cfg[x]))
            pairs = [(a, b) for a, b in itertools.combinations(placed, 2)
                     if not is_zero(cross(cfg[a], cfg[b]))]
            if p in l and pairs:
                det_lines.append((l, pairs[0]))
        # distinct spans only
        spans = []
        for l, (a, b) in det_lines:
            if not any(proj_equal_span(cfg[a], cfg[b], cfg[c], cfg[d])
                       for _, (c, d) in spans):
                spans.append((l, (a, b)))
        if len(spans) >= 2:
            (l1, (a, b)), (l2, (c, d)) = spans[0], spans[1]
            v = meet_vectors(cfg[a], cfg[b], cfg[c], cfg[d])
            if is_zero(v):
                return RealizationCertificate("inconclusive", stuck_point=p)
            v = normalize_col(v)
            clean = not any(x in tainted for x in (a, b, c, d))
            for l3, (e, f) in spans[2:]:
                w = det3(cfg[e], cfg[f], v)
                if w != 0:
                    if clean and e not in tainted and f not in tainted:
                        return RealizationCertificate(
                            "infeasible", witness=w,
                            trace=tuple(trace + [(p, "conflict", sorted(l3))]))
                    return RealizationCertificate("inconclusive", stuck_point=p)
            cfg[p] = v
            if not clean:
                tainted.add(p)
            trace.append((p, "forced"))
        elif len(spans) == 1:
            (l1, (a, b)) = spans[0]
            cfg[p] = _rand_on_line(rng, cfg[a], cfg[b])
            tainted.add(p)
            trace.append((p, "on-line"))
        else:
            cfg[p] = rand_vec_nonzero(rng)
            tainted.add(p)
            trace.append((p, "free"))
    return RealizationCertificate("realization", config=cfg, trace=tuple(trace))


def proj_equal_span(a1, a2, b1, b2):
    """The spans <a1,a2> and <b1,b2> coincide (all rank-2)."""
    n1 = cross(a1, a2)
    n2 = cross(b1, b2)
    return proj_equal(n1, n2)


def rand_vec_nonzero(rng):
    while True:
        v = (rand_fraction(rng), rand_fraction(rng), rand_fraction(rng))
        if not is_zero(v):
            return v


def normalize_col(v):
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    s = next((x for x in v if x != 0), None)
    if s is None:
        return v
    return scale(v, Fraction(1) / s)


def _greedy_frame(m, candidates):
    """First four points (in the given order) with every triple independent."""
    chosen = []
    for p in candidates:
        if all(m.is_independent(set(t) | {p})
               for t in itertools.combinations(chosen, 2)):
            if all(m.is_independent({a, p}) for a in chosen):
                chosen.append(p)
        if len(chosen) == 4:
            return tuple(chosen)
    return tuple(chosen[:4]) if len(chosen) >= 4 else tuple(chosen)


# -- JSON ----------------------------------------------------------------------------


def config_to_json(cfg):
    return json.dumps({str(p): [str(x) for x in v] for p, v in sorted(cfg.items())},
                      sort_keys=True)


def config_from_json(text):
    data = json.loads(text)
    return {int(p): tuple(Fraction(x) for x in v) for p, v in data.items()}


# -- univariate rational polynomials and limit families ------------------------------------


class Poly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c):
        return Poly([c])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def shift_down(self, k):
        return Poly(self.coeffs[k:])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([ (self.coeffs[i] if i < len(self.coeffs) else 0)
                      + (other.coeffs[i] if i < len(other.coeffs) else 0)
                      for i in range(n)])

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __call__(self, x):
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(%s)" % (list(self.coeffs),)


def pdet3(u, v, w):
    """Determinant of three polynomial 3-vectors, as a Poly."""
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def pcross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


class ProjectiveFamily:
    """Per-point 3-vectors of polynomials in one parameter over Q."""

    def __init__(self, columns):
        self.columns = {}
        for p, col in columns.items():
            col = tuple(c if isinstance(c, Poly) else Poly(c) for c in col)
            if all(c.is_zero() for c in col):
                raise MatroidError("column %r is identically zero" % (p,))
            self.columns[int(p)] = col

    def points(self):
        return sorted(self.columns)

    def at(self, eps):
        return {p: tuple(c(eps) for c in col) for p, col in self.columns.items()}

    def limit(self):
        """Per column: divide by the minimal epsilon power, evaluate at 0."""
        out = {}
        for p, col in self.columns.items():
            k = min(c.valuation() for c in col if not c.is_zero())
            out[p] = tuple(c.shift_down(k)(Fraction(0)) for c in col)
        return out

    def to_json(self):
        return json.dumps({str(p): [[str(c) for c in poly.coeffs] for poly in col]
                           for p, col in sorted(self.columns.items())}, sort_keys=True)

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        return ProjectiveFamily({int(p): tuple(Poly([Fraction(c) for c in cs])
                                               for cs in col)
                                 for p, col in data.items()})


def family_member_check(fam, m):
    """Circuit minors vanish identically; basis minors are nonzero polynomials."""
    cols = fam.columns
    if set(cols) != set(m.ground()):
        return False
    for p in m.loops:
        if not all(c.is_zero() for c in cols[p]):
            return False
    for cls in m.classes:
        for a, b in itertools.combinations(cls, 2):
            if any(not c.is_zero() for c in pcross(cols[a], cols[b])):
                return False
    for tri in m.triangles():
        a, b, c = sorted(tri)
        if not pdet3(cols[a], cols[b], cols[c]).is_zero():
            return False
    reps = sorted(min(c) for c in m.classes)
    for a, b in itertools.combinations(reps, 2):
        if all(c.is_zero() for c in pcross(cols[a], cols[b])):
            return False
    if m.rank_cap == 3:
        for a, b, c in itertools.combinations(reps, 3):
            if m.is_independent({a, b, c}) and pdet3(cols[a], cols[b], cols[c]).is_zero():
                return False
    return True


def family_limit(fam):
    return fam.limit()
