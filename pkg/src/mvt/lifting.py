"""Liftability matrices, exact kernel dimensions, and lifting-ideal counts.

The liftability matrix has one row per 3-circuit and one column per point;
the row of a circuit {c1<c2<c3} is [c2,c3,q], -[c1,c3,q], [c1,c2,q] in the
columns c1, c2, c3 and zero elsewhere.  In per-column mode the q of column i
is renamed q_i.  Kernels are computed by exact Gaussian elimination over the
rationals; for nilpotent configurations the kernel dimension has the closed
form #{i : w_i = 0} over a degree-<=1 ordering, which must agree with the
structural recursion dim(M) = dim(M|S_M) + sum_l (2 - rk(S_l)) + #isolated.
"""

import itertools
import math
import random
from fractions import Fraction

from .bracket import BracketPoly, rand_fraction
from .geometry import includes_dependencies, is_zero, add, scale
from .matroid import MatroidError


class LiftMatrix:

    def __init__(self, m, mode="single"):
        if mode not in ("single", "per-column"):
            raise MatroidError("mode must be 'single' or 'per-column'")
        self.matroid = m
        self.mode = mode
        self.rows = [tuple(t) for t in m.triangles_ordered()]
        self.cols = list(m.ground())
        self.entries = {}
        for r, (c1, c2, c3) in enumerate(self.rows):
            for col, poly in ((c1, BracketPoly.bracket(c2, c3, self._q(c1))),
                              (c2, BracketPoly.bracket(c1, c3, self._q(c2)).scale(-1)),
                              (c3, BracketPoly.bracket(c1, c2, self._q(c3)))):
                self.entries[(r, col)] = poly

    def _q(self, col):
        return "q%d" % col if self.mode == "per-column" else "q"

    def shape(self):
        return (len(self.rows), len(self.cols))

    def entry(self, r, col):
        return self.entries.get((r, col), BracketPoly.zero())

    def text(self):
        """One row per line, entries separated by single spaces."""
        lines = []
        for r in range(len(self.rows)):
            lines.append(" ".join(str(self.entry(r, c)) if (r, c) in self.entries
                                  else "0" for c in self.cols))
        return "\n".join(lines)

    def evaluate(self, cfg, q):
        """Rational matrix at a configuration and lifting direction(s).

        `q` is a single 3-vector (both modes) or a dict {point: vector}
        (per-column mode).
        """
        if isinstance(q, dict):
            asg = dict(cfg)
            for col, v in q.items():
                asg["q%d" % col] = v
            if self.mode == "single":
                vals = set(map(tuple, q.values()))
                if len(vals) != 1:
                    raise MatroidError("single-q mode needs a single q vector")
                asg["q"] = next(iter(q.values()))
        else:
            asg = dict(cfg)
            asg["q"] = q
            for col in self.cols:
                asg["q%d" % col] = q
        return [[self.entry(r, c).evaluate(asg) for c in self.cols]
                for r in range(len(self.rows))]


def lift_matrix(m, mode="single"):
    return LiftMatrix(m, mode)


# -- exact linear algebra ----------------------------------------------------------


def rref(mat):
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    rows = [list(map(Fraction, r)) for r in mat]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(mat, ncols=None):
    """Basis of the right kernel of a rational matrix."""
    if not mat:
        if ncols is None:
            raise MatroidError("empty matrix needs an explicit column count")
        return [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
    ncols = len(mat[0])
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def kernel_dim(mat, ncols=None):
    return len(kernel_basis(mat, ncols))


def lift_space(m, cfg, q):
    """(basis, dim) of the lifting space ker(M_q^gamma(m))."""
    lm = lift_matrix(m)
    mat = lm.evaluate(cfg, q)
    basis = kernel_basis(mat, ncols=m.d)
    return basis, len(basis)


def lift_and_check(m, cfg, q, z):
    """Geometric side of the kernel equivalence: the lifted configuration
    {gamma_i + z_i q} includes the dependencies of m."""
    lifted = {p: add(cfg[p], scale(q, z[p - 1])) for p in m.ground()}
    return includes_dependencies(lifted, m)


# -- dimension formula -------------------------------------------------------------


def dim_recursion(m):
    """dim(M) = dim(M|S_M) + sum_l (2 - rk(S_l)) + #{p : no line}, for
    nilpotent M (simple)."""
    if not m.is_simple():
        raise MatroidError("dimension formula expects a simple matroid")
    if not m.is_nilpotent():
        raise MatroidError("dimension formula expects a nilpotent matroid")
    return _dim_rec(frozenset(m.ground()),
                    [frozenset(l) for l in m._full_lines()])


def _dim_rec(pts, lines):
    if not pts:
        return 0
    deg = {p: sum(1 for l in lines if p in l) for p in pts}
    s = frozenset(p for p in pts if deg[p] >= 2)
    inner = [l & s for l in lines]
    inner = [l for l in inner if len(l) >= 3]
    ded = []
    for l in inner:
        if l not in ded:
            ded.append(l)
    total = _dim_rec(s, ded)
    for l in lines:
        total += 2 - min(len(l & s), 2)
    total += sum(1 for p in pts if deg[p] == 0)
    return total


def dim_ordering_count(m):
    """#{i : w_i = 0} for a prefix-degree-<=1 ordering (nilpotent m)."""
    res = m.nilpotent_ordering()
    if res is None:
        raise MatroidError("ordering count expects a nilpotent matroid")
    order, degs = res
    return sum(1 for w in degs if w == 0)


def dim_formula(m):
    """The closed-form lifting dimension; recursion and ordering count must agree."""
    a = dim_recursion(m)
    b = dim_ordering_count(m)
    if a != b:
        raise MatroidError("recursion (%d) and ordering count (%d) disagree" % (a, b))
    return a


def generic_collinear_config(m, seed=0):
    """Points (1, t_i, 0) with distinct random t_i, plus a q off the line."""
    rng = random.Random(seed)
    used = set()
    cfg = {}
    for p in m.ground():
        t = rand_fraction(rng)
        while t in used:
            t = rand_fraction(rng)
        used.add(t)
        cfg[p] = (Fraction(1), t, Fraction(0))
    while True:
        q = (rand_fraction(rng), rand_fraction(rng), rand_fraction(rng))
        if q[2] != 0:
            return cfg, q


def lift_dim_at(m, seed=0):
    """Exact kernel dimension under the generic collinear protocol."""
    if not m.is_simple():
        raise MatroidError("the generic collinear protocol expects a simple matroid")
    cfg, q = generic_collinear_config(m, seed)
    _, dim = lift_space(m, cfg, q)
    return dim


# -- generator counting -------------------------------------------------------------


def lifting_generator_count(spec):
    """Total number of lifting polynomials for a declarative spec.

    Each entry (rows, cols, minor, alphabet, mult) contributes
    mult * C(cols, minor) * alphabet**cols; the two printed counts are data:
    Pascal C(9,7)*3^9 and Pappus C(9,7)*3^9 + 9*C(8,6)*3^8.
    """
    total = 0
    for rows, cols, minor, alphabet, mult in spec:
        total += mult * math.comb(cols, minor) * alphabet ** cols
    return total


COUNT_SPECS = {
    "pascal": [(7, 9, 7, 3, 1)],
    "pappus": [(9, 9, 7, 3, 1), (6, 8, 6, 3, 9)],
}


def lifting_generator_matrices(m, name):
    """The per-column matrices behind the printed generator counts."""
    if name == "pascal":
        return [lift_matrix(m, "per-column")]
    if name == "pappus":
        out = [lift_matrix(m, "per-column")]
        for i in range(1, 10):
            out.append(lift_matrix(m.delete({i}), "per-column"))
        return out
    raise MatroidError("no lifting-matrix family for %r" % name)
