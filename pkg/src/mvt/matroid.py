"""Rank-<=3 matroids as point-line data.

A matroid here is (ground size d, loops, parallel classes, lines, rank cap).
Points are 1-based.  Lines are stored over class representatives (the smallest
point of each class); a line as a point set is the union of its classes.
rank_cap < 3 encodes total degeneration: 2 means every triple of non-loops is
dependent (all classes on one implicit line), 1 means all non-loops are
mutually parallel, 0 means everything is a loop.
"""

import itertools
import json


class MatroidError(ValueError):
    pass


class Matroid:

    __slots__ = ("d", "loops", "classes", "lines", "rank_cap", "_rep", "_cls_of")

    def __init__(self, d, loops=(), parallels=(), lines=(), rank_cap=3):
        if not (isinstance(d, int) and d >= 1):
            raise MatroidError("ground size must be a positive integer")
        self.d = d
        loops = frozenset(loops)
        if not all(isinstance(p, int) and 1 <= p <= d for p in loops):
            raise MatroidError("loops out of range")
        self.loops = loops

        nonloops = set(range(1, d + 1)) - loops
        seen = set()
        classes = []
        for cls in parallels:
            cls = tuple(sorted(set(cls)))
            if not cls:
                continue
            if any(p in loops or p in seen or not (1 <= p <= d) for p in cls):
                raise MatroidError("parallel classes must partition the non-loops")
            seen.update(cls)
            classes.append(cls)
        for p in sorted(nonloops - seen):
            classes.append((p,))
        classes.sort(key=min)
        self.classes = tuple(classes)

        rep = {}
        cls_of = {}
        for cls in self.classes:
            r = min(cls)
            for p in cls:
                rep[p] = r
                cls_of[p] = cls
        self._rep = rep
        self._cls_of = cls_of

        if rank_cap not in (0, 1, 2, 3):
            raise MatroidError("rank_cap must be 0..3")
        if rank_cap == 0 and self.classes:
            raise MatroidError("rank_cap 0 requires all points to be loops")
        if rank_cap == 1 and len(self.classes) != 1:
            raise MatroidError("rank_cap 1 requires a single parallel class")
        if rank_cap >= 1 and not self.classes:
            raise MatroidError("rank_cap %d needs non-loop points" % rank_cap)
        if rank_cap == 2 and len(self.classes) < 2:
            raise MatroidError("rank_cap 2 needs at least two classes")
        self.rank_cap = rank_cap

        norm_lines = []
        reps = set(rep[p] for p in rep)
        seen_lines = set()
        for line in lines:
            lset = frozenset(line)
            if lset - reps:
                raise MatroidError("lines must be sets of class representatives")
            if len(lset) < 3:
                raise MatroidError("every line needs at least 3 classes")
            if lset in seen_lines:
                continue
            seen_lines.add(lset)
            norm_lines.append(lset)
        if norm_lines and rank_cap != 3:
            raise MatroidError("lines are only allowed at rank_cap 3")
        for l1, l2 in itertools.combinations(norm_lines, 2):
            if len(l1 & l2) > 1:
                raise MatroidError("two lines share more than one class")
        if rank_cap == 3:
            if len(self.classes) < 3:
                raise MatroidError("rank_cap 3 needs an independent triple")
            if any(len(l) == len(self.classes) for l in norm_lines):
                raise MatroidError("a line containing every class means rank 2")
        self.lines = tuple(norm_lines)

    # -- construction helpers --------------------------------------------------

    @staticmethod
    def from_parts(d, loops=(), parallels=(), lines=()):
        """Build a matroid, inferring the rank cap from the data.

        `lines` may be given as arbitrary point sets; they are projected onto
        class representatives, undersized lines are dropped, and total
        collinearity collapses into rank_cap < 3.
        """
        loops = frozenset(loops)
        seen = set()
        classes = []
        for cls in parallels:
            cls = tuple(sorted(set(cls) - loops))
            if cls:
                classes.append(cls)
                seen.update(cls)
        for p in range(1, d + 1):
            if p not in loops and p not in seen:
                classes.append((p,))
        rep = {}
        for cls in classes:
            for p in cls:
                rep[p] = min(cls)
        norm = []
        for line in lines:
            lset = frozenset(rep[p] for p in line if p in rep)
            if len(lset) >= 3 and lset not in norm:
                norm.append(lset)
        ncls = len(classes)
        if ncls == 0:
            return Matroid(d, loops, (), (), 0)
        if ncls == 1:
            return Matroid(d, loops, classes, (), 1)
        if ncls == 2 or any(len(l) == ncls for l in norm):
            return Matroid(d, loops, classes, (), 2)
        return Matroid(d, loops, classes, tuple(sorted(norm, key=sorted)), 3)

    def _full_lines(self):
        """Lines as full point sets, with the implicit rank-2 line made explicit."""
        if self.rank_cap == 3:
            return [self.line_points(l) for l in self.lines]
        if self.rank_cap == 2 and len(self.classes) >= 3:
            return [frozenset(self._rep)]
        return []

    # -- basic queries -----------------------------------------------------------

    def ground(self):
        return range(1, self.d + 1)

    def nonloops(self):
        return frozenset(self._rep)

    def representative(self, p):
        return self._rep.get(p)

    def class_of(self, p):
        return self._cls_of.get(p, (p,))

    def is_simple(self):
        return not self.loops and all(len(c) == 1 for c in self.classes)

    def line_points(self, line):
        pts = set()
        for r in line:
            pts.update(self._cls_of[r])
        return frozenset(pts)

    def lines_through(self, p):
        r = self._rep.get(p)
        if r is None:
            return ()
        return tuple(l for l in self.lines if r in l)

    def degree(self, p):
        if self.rank_cap == 2 and p in self._rep and len(self.classes) >= 3:
            return 1
        return len(self.lines_through(p))

    def s_points(self):
        return frozenset(p for p in self.ground() if self.degree(p) >= 2)

    def q_points(self):
        return frozenset(p for p in self.ground() if self.degree(p) >= 3)

    def rank(self, pts):
        pts = set(pts)
        if not pts <= set(self.ground()):
            raise MatroidError("points out of range")
        reps = set(self._rep[p] for p in pts if p in self._rep)
        if not reps:
            return 0
        if self.rank_cap <= 2:
            return min(len(reps), self.rank_cap)
        if len(reps) <= 2:
            return len(reps)
        if any(reps <= l for l in self.lines):
            return 2
        return 3

    def is_dependent(self, pts):
        pts = set(pts)
        return self.rank(pts) < len(pts)

    def is_independent(self, pts):
        return not self.is_dependent(pts)

    def triangles(self):
        """All 3-circuits as frozensets of points."""
        return set(frozenset(t) for t in self.triangles_ordered())

    def triangles_ordered(self):
        """3-circuits as sorted tuples, following the stored line order."""
        out = []
        seen = set()
        if self.rank_cap == 3:
            linereps = [sorted(l) for l in self.lines]
        elif self.rank_cap == 2 and len(self.classes) >= 3:
            linereps = [sorted(min(c) for c in self.classes)]
        else:
            linereps = []
        for line in linereps:
            for reps in itertools.combinations(line, 3):
                for pts in itertools.product(*(self._cls_of[r] for r in reps)):
                    t = tuple(sorted(pts))
                    if t not in seen:
                        seen.add(t)
                        out.append(t)
        return out

    def circuits_upto(self, k):
        """Circuits of size <= k (k <= 4) as a set of frozensets."""
        if not 0 <= k <= 4:
            raise MatroidError("k must be 0..4")
        out = set()
        if k >= 1:
            out.update(frozenset((p,)) for p in self.loops)
        if k >= 2:
            for cls in self.classes:
                out.update(frozenset(pr) for pr in itertools.combinations(cls, 2))
        if k >= 3:
            out.update(self.triangles())
        if k >= 4 and self.rank_cap == 3:
            reps = sorted(min(c) for c in self.classes)
            for quad in itertools.combinations(reps, 4):
                qs = set(quad)
                if any(len(qs & l) >= 3 for l in self.lines):
                    continue
                for pts in itertools.product(*(self._cls_of[r] for r in quad)):
                    out.add(frozenset(pts))
        return out

    # -- submatroids ---------------------------------------------------------------

    def restrict(self, pts):
        """Restriction to `pts`, reindexed to 1..|pts|."""
        pts = sorted(set(pts))
        if not pts:
            raise MatroidError("cannot restrict to the empty set")
        if not set(pts) <= set(self.ground()):
            raise MatroidError("points out of range")
        idx = {p: i + 1 for i, p in enumerate(pts)}
        loops = [idx[p] for p in self.loops if p in idx]
        classes = [tuple(idx[p] for p in cls if p in idx) for cls in self.classes]
        lines = [[idx[p] for p in l if p in idx] for l in self._full_lines()]
        return Matroid.from_parts(len(pts), loops, [c for c in classes if c], lines)

    def delete(self, pts):
        pts = set(pts)
        return self.restrict(set(self.ground()) - pts)

    def set_loops(self, pts):
        """Matroid with the points of `pts` turned into loops."""
        pts = set(pts)
        if not pts <= set(self.ground()):
            raise MatroidError("points out of range")
        if not pts:
            return self
        loops = self.loops | pts
        classes = [tuple(p for p in cls if p not in pts) for cls in self.classes]
        lines = [l - pts for l in self._full_lines()]
        return Matroid.from_parts(self.d, loops, [c for c in classes if c], lines)

    def reduce(self):
        """Simple version: drop loops, keep one representative per class.

        Returns (simple matroid reindexed, loops, parallel classes).
        """
        reps = sorted(min(c) for c in self.classes)
        if not reps:
            raise MatroidError("no non-loop points to reduce to")
        idx = {r: i + 1 for i, r in enumerate(reps)}
        lines = [[idx[self._rep[p]] for p in l if self._rep[p] in idx]
                 for l in self._full_lines()]
        m = Matroid.from_parts(len(reps), (), (), lines)
        return m, self.loops, self.classes

    def identify_points(self, p, q):
        """Merge the classes of p and q; colliding lines are merged (freest choice)."""
        return identify_classes(self, [(p, q)])

    def pi_config(self, i):
        """All points except i on one line, the line-mates of i identified."""
        if not 1 <= i <= self.d:
            raise MatroidError("point out of range")
        if self._rep.get(i) is None:
            raise MatroidError("pi_config expects a non-loop point")
        mates = [tuple(sorted(l - {i})) for l in self._full_lines() if i in l]
        merged = _merge_overlapping(mates)
        covered = set().union(*map(set, merged)) if merged else set()
        rest = set(self.ground()) - self.loops - {i} - covered
        merged.extend((p,) for p in sorted(rest))
        big_line = [min(grp) for grp in merged]
        return Matroid.from_parts(self.d, self.loops, list(merged) + [(i,)], [big_line])

    # -- chains and orderings ----------------------------------------------------------

    def _chain(self, min_degree):
        """Point sets of the S-chain (min_degree 2) or Q-chain (min_degree 3).

        Works on class representatives (the reduced view), keeps original
        labels, and stops at a fixpoint or the empty set.
        """
        pts = frozenset(min(c) for c in self.classes)
        lines = [frozenset(self._rep[p] for p in l) for l in self._full_lines()]
        chain = [pts]
        while pts:
            deg = {p: sum(1 for l in lines if p in l) for p in pts}
            nxt = frozenset(p for p in pts if deg[p] >= min_degree)
            if nxt == pts:
                break
            pts = nxt
            survivors = []
            for l in lines:
                l2 = l & pts
                if len(l2) >= 3 and l2 not in survivors:
                    survivors.append(l2)
            lines = survivors
            chain.append(pts)
        return chain

    def s_chain_sets(self):
        return self._chain(2)

    def q_chain_sets(self):
        return self._chain(3)

    def nilpotency_chain(self):
        """The chain M = M_0 >= M_1 = M|S_M >= ... as reindexed matroids."""
        return [self] + [self.restrict(pts) for pts in self._chain(2)[1:] if pts]

    def is_nilpotent(self):
        return self._chain(2)[-1] == frozenset()

    def is_solvable(self):
        return self._chain(3)[-1] == frozenset()

    def nilpotency_length(self):
        chain = self._chain(2)
        if chain[-1]:
            return None
        return len(chain) - 1

    def nilpotent_ordering(self):
        """An ordering with prefix degree <= 1 and its degree sequence, or None.

        Points of the deepest chain level come first, ties by index; this is
        the construction behind the closed-form kernel dimension.
        """
        chain = self._chain(2)
        if chain[-1]:
            return None
        level = {}
        for k, pts in enumerate(chain):
            for p in pts:
                level[p] = k
        reps = sorted(level, key=lambda p: (-level[p], p))
        order = []
        for r in reps:
            order.extend(sorted(self._cls_of[r]))
        order.extend(sorted(self.loops))
        degseq = self.prefix_degrees(order)
        if self.is_simple() and max(degseq, default=0) > 1:
            raise MatroidError("ordering construction violated the degree bound")
        return order, degseq

    def prefix_degrees(self, order):
        """w_i = degree of order[i] in the restriction to the first i points."""
        if set(order) != set(self.ground()):
            raise MatroidError("ordering must enumerate the ground set")
        full = self._full_lines()
        degs = []
        placed = set()
        for p in order:
            placed.add(p)
            if p in self.loops:
                degs.append(0)
                continue
            d = 0
            for l in full:
                if p not in l:
                    continue
                reps_in = set(self._rep[x] for x in (l & placed))
                if len(reps_in) >= 3:
                    d += 1
            degs.append(d)
        return degs

    # -- dependency order -------------------------------------------------------------

    def dependency_leq(self, other):
        """True iff every dependent set of self is dependent in `other`."""
        if not isinstance(other, Matroid) or other.d != self.d:
            raise MatroidError("dependency order needs equal ground sizes")
        for p in self.loops:
            if not other.is_dependent({p}):
                return False
        for cls in self.classes:
            if len(cls) > 1:
                for a, b in itertools.combinations(cls, 2):
                    if not other.is_dependent({a, b}):
                        return False
        for tri in self.triangles():
            if not other.is_dependent(tri):
                return False
        return True

    # -- equality / canonical form -------------------------------------------------------

    def key(self):
        return (self.d, self.loops, self.classes,
                frozenset(self.lines), self.rank_cap)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return ("Matroid(d=%d, loops=%s, classes=%s, lines=%s, rank_cap=%d)"
                % (self.d, sorted(self.loops),
                   [list(c) for c in self.classes],
                   [sorted(l) for l in self.lines], self.rank_cap))

    def canonical_key(self):
        """Label-independent key: loop count, class-size multiset, rank cap and
        the lexicographically least line incidence encoding over relabelings.

        Classes are only permuted within groups of equal local invariants
        (class size, line degree, multiset of incident line sizes).
        """
        sizes = tuple(sorted(len(c) for c in self.classes))
        base = (self.d, len(self.loops), sizes, self.rank_cap)
        if not self.lines:
            return base + ((),)
        reps = [min(c) for c in self.classes]
        deg = {r: sum(1 for l in self.lines if r in l) for r in reps}
        linesz = {r: tuple(sorted(len(l) for l in self.lines if r in l)) for r in reps}
        inv = {r: (len(self._cls_of[r]), deg[r], linesz[r]) for r in reps}
        groups = {}
        for r in reps:
            groups.setdefault(inv[r], []).append(r)
        slots = []
        pos = 0
        for g in sorted(groups):
            members = groups[g]
            slots.append((members, list(range(pos, pos + len(members)))))
            pos += len(members)
        best = [None]

        def rec(gi, assign):
            if gi == len(slots):
                enc = tuple(sorted(tuple(sorted(assign[r] for r in l))
                                   for l in self.lines))
                if best[0] is None or enc < best[0]:
                    best[0] = enc
                return
            members, labels = slots[gi]
            for perm in itertools.permutations(labels):
                for r, lab in zip(members, perm):
                    assign[r] = lab
                rec(gi + 1, assign)
            for r in members:
                assign.pop(r, None)

        rec(0, {})
        return base + (best[0],)

    def is_isomorphic(self, other):
        return self.canonical_key() == other.canonical_key()

    # -- JSON ------------------------------------------------------------------------

    def to_json(self):
        return json.dumps({
            "ground_size": self.d,
            "lines": [sorted(self.line_points(l)) for l in self.lines],
            "loops": sorted(self.loops),
            "parallels": [list(c) for c in self.classes if len(c) > 1],
            "rank_cap": self.rank_cap,
        }, sort_keys=True)

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        d = data["ground_size"]
        loops = data.get("loops", ())
        lines = list(data.get("lines", ()))
        want = data.get("rank_cap")
        if want == 2 and not lines:
            # total collinearity is implicit at rank 2
            lines = [[p for p in range(1, d + 1) if p not in set(loops)]]
        m = Matroid.from_parts(d, loops, data.get("parallels", ()), lines)
        if want is not None and want != m.rank_cap:
            raise MatroidError("rank_cap inconsistent with the line data")
        return m


def _merge_overlapping(groups):
    """Union-find style merge of overlapping point groups."""
    merged = []
    for grp in groups:
        grp = set(grp)
        keep = []
        for old in merged:
            if old & grp:
                grp |= old
            else:
                keep.append(old)
        keep.append(grp)
        merged = keep
    return [tuple(sorted(g)) for g in merged]


def identify_classes(m, pairs):
    """Identify point pairs simultaneously, then merge colliding lines.

    Line collisions (two lines sharing two classes) are resolved by merging
    the lines into one, which is the freest resolution; this is how the named
    degenerations of the fixtures are constructed.
    """
    groups = _merge_overlapping([set(pr) for pr in pairs])
    for g in groups:
        if set(g) & m.loops:
            raise MatroidError("cannot identify a loop")
    classdata = [set(c) for c in m.classes]
    for g in groups:
        hit = [c for c in classdata if c & set(g)]
        rest = [c for c in classdata if not (c & set(g))]
        merged = set(g)
        for c in hit:
            merged |= c
        classdata = rest + [merged]
    rep = {}
    for c in classdata:
        r = min(c)
        for p in c:
            rep[p] = r
    lines = []
    for l in m._full_lines():
        lset = frozenset(rep[p] for p in l)
        if len(lset) >= 3 and lset not in lines:
            lines.append(lset)
    changed = True
    while changed:
        changed = False
        for l1, l2 in itertools.combinations(lines, 2):
            if len(l1 & l2) >= 2:
                lines.remove(l1)
                lines.remove(l2)
                merged_line = l1 | l2
                if merged_line not in lines:
                    lines.append(merged_line)
                changed = True
                break
    return Matroid.from_parts(m.d, m.loops, [tuple(sorted(c)) for c in classdata], lines)


def uniform(n, d):
    """The uniform matroid U_{n,d} for n <= 3."""
    if n not in (0, 1, 2, 3) or d < 1 or n > d:
        raise MatroidError("need 0 <= n <= min(3, d)")
    if n == 0:
        return Matroid.from_parts(d, range(1, d + 1), (), ())
    if n == 1:
        return Matroid.from_parts(d, (), [tuple(range(1, d + 1))], ())
    if n == 2:
        return Matroid.from_parts(d, (), (), [range(1, d + 1)] if d >= 3 else ())
    return Matroid.from_parts(d, (), (), ())
