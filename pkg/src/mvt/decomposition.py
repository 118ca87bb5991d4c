"""Dependency-order search for minimal matroids and decomposition registries.

A state is a rank-<=3 structure (loops, classes, lines over whole classes).
Adding an elementary dependency (new 3-circuit, parallel pair, loop) may
violate the matroid invariants; the saturation closes the state again:

  R1  two lines sharing two classes either merge, or (branch) the two shared
      classes become parallel - both resolutions are explored;
  R2  lines drop vanished classes and dissolve below three classes;
  R3  a new circuit {a,b,c} with a,b already collinear on l extends l by c.

Every matroid above the start dominates one of the returned fixpoints, so
the union over all elementary deltas, globally minimalized, is min(M); the
completeness of the rule set is validated against a brute-force oracle in
the test suite, per the documented caveat.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .matroid import Matroid, MatroidError, identify_classes, uniform
from . import fixtures
from .geometry import (ZERO, meet_vectors, is_zero, cross, proj_equal,
                       propagate_realization, includes_dependencies, vec)


class ResourceGuardError(MatroidError):
    pass


# -- saturation states -----------------------------------------------------------

# state = (loops frozenset, classes frozenset[frozenset], lines frozenset[frozenset])
# lines hold full point sets (unions of classes); rank collapse is detected on
# conversion.


def _state_of(m):
    classes = frozenset(frozenset(c) for c in m.classes)
    lines = frozenset(m.line_points(l) for l in m.lines)
    if m.rank_cap == 2 and len(m.classes) >= 3:
        lines = frozenset([frozenset(m.nonloops())])
    if m.rank_cap <= 1:
        lines = frozenset()
    return (m.loops, classes, lines)


def _to_matroid(state, d):
    loops, classes, lines = state
    return Matroid.from_parts(d, loops, [tuple(sorted(c)) for c in classes], lines)


def _cleanup(loops, classes, lines):
    """Drop empty classes, shrink lines, dissolve undersized ones."""
    classes = [set(c) - loops for c in classes]
    classes = [c for c in classes if c]
    out = []
    for l in lines:
        l = set(l) - loops
        ncls = sum(1 for c in classes if c & l)
        if ncls >= 3 and l not in out:
            out.append(l)
    return classes, out


def _find_violation(classes, lines):
    for l1, l2 in itertools.combinations(lines, 2):
        shared = [c for c in classes if (c & l1) and (c & l2)]
        if len(shared) >= 2:
            return l1, l2, shared
    return None


def _saturate(d, loops, classes, lines, budget):
    """All minimal matroid closures of a possibly-invalid state."""
    out = set()
    stack = [(frozenset(loops),
              frozenset(frozenset(c) for c in classes),
              frozenset(frozenset(l) for l in lines))]
    seen = set()
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        if len(seen) > budget[0]:
            raise ResourceGuardError("saturation exceeded %d states" % budget[0])
        loops_, classes_, lines_ = state
        cls, lns = _cleanup(loops_, classes_, lines_)
        viol = _find_violation(cls, lns)
        if viol is None:
            out.add((frozenset(loops_),
                     frozenset(frozenset(c) for c in cls),
                     frozenset(frozenset(l) for l in lns)))
            continue
        l1, l2, shared = viol
        # branch 1: merge the two lines into one rank-2 flat
        rest = [l for l in lns if l not in (set(l1), set(l2))]
        stack.append((frozenset(loops_),
                      frozenset(frozenset(c) for c in cls),
                      frozenset(frozenset(l) for l in rest + [set(l1) | set(l2)])))
        # branch 2..: make a pair of shared classes parallel
        for ca, cb in itertools.combinations(shared, 2):
            merged = ca | cb
            newcls = [c for c in cls if not (c & merged)] + [merged]
            newlns = [set(l) | merged if (set(l) & merged) else set(l) for l in lns]
            stack.append((frozenset(loops_),
                          frozenset(frozenset(c) for c in newcls),
                          frozenset(frozenset(l) for l in newlns)))
    return out


@dataclass(frozen=True)
class DependencyDelta:
    kind: str       # "new-circuit" | "parallel" | "loop"
    points: tuple

    def already_dependent(self, m):
        return m.is_dependent(set(self.points))


def apply_delta_saturate(m, delta, budget=None):
    """Minimal matroid saturations of m + delta (a set of matroids)."""
    if budget is None:
        budget = [10 ** 6]
    if delta.already_dependent(m):
        raise MatroidError("delta is already dependent")
    loops = set(m.loops)
    classes = [set(c) for c in m.classes]
    lines = [set(l) for l in _state_of(m)[2]]
    if delta.kind == "loop":
        (p,) = delta.points
        loops.add(p)
        lines = [l - {p} for l in lines]
        classes = [c - {p} for c in classes]
    elif delta.kind == "parallel":
        a, b = delta.points
        merged = set(m.class_of(a)) | set(m.class_of(b))
        classes = [c for c in classes if not (c & merged)] + [merged]
        lines = [l | merged if (l & merged) else l for l in lines]
    elif delta.kind == "new-circuit":
        tri = [set(m.class_of(p)) for p in delta.points]
        changed = True
        while changed:
            changed = False
            for i, j in itertools.combinations(range(3), 2):
                for l in lines:
                    if (l & tri[i]) and (l & tri[j]):
                        k = 3 - i - j
                        if not (l & tri[k]):
                            l |= tri[k]
                            changed = True
        if not any((l & tri[0]) and (l & tri[1]) for l in lines):
            lines.append(tri[0] | tri[1] | tri[2])
    else:
        raise MatroidError("unknown delta kind %r" % delta.kind)
    states = _saturate(m.d, loops, classes, lines, budget)
    mats = {_to_matroid(s, m.d) for s in states}
    return _minimalize(mats)


def _dep_signature(m):
    loops = m.loops
    pairs = set()
    for cls in m.classes:
        pairs.update(frozenset(p) for p in itertools.combinations(cls, 2))
    tris = m.triangles()
    return loops, pairs, tris


def _leq_sig(sig1, sig2, m2):
    l1, p1, t1 = sig1
    for p in l1:
        if not m2.is_dependent({p}):
            return False
    for pr in p1:
        if not m2.is_dependent(pr):
            return False
    for tr in t1:
        if not m2.is_dependent(tr):
            return False
    return True


def _sort_key(m):
    return (len(m.loops), sorted(m.loops), [list(c) for c in m.classes],
            sorted(sorted(l) for l in m.lines), m.rank_cap)


def _minimalize(mats):
    mats = sorted(set(mats), key=_sort_key)
    sigs = [(_dep_signature(m), m) for m in mats]
    keep = []
    for i, (sig_i, mi) in enumerate(sigs):
        dominated = False
        for j, (sig_j, mj) in enumerate(sigs):
            if i != j and _leq_sig(sig_j, sig_i, mi) and mi != mj:
                dominated = True
                break
        if not dominated:
            keep.append(mi)
    return keep


def elementary_deltas(m):
    reps = sorted(min(c) for c in m.classes)
    out = []
    for a, b, c in itertools.combinations(reps, 3):
        if m.is_independent({a, b, c}):
            out.append(DependencyDelta("new-circuit", (a, b, c)))
    for a, b in itertools.combinations(reps, 2):
        out.append(DependencyDelta("parallel", (a, b)))
    for p in sorted(m.nonloops()):
        out.append(DependencyDelta("loop", (p,)))
    return out


def minimal_matroids(m, budget=10 ** 6):
    """min(M): the dependency-minimal matroids strictly above m (d <= 9)."""
    if m.d > 9:
        raise ResourceGuardError("minimal-matroid search is guarded to d <= 9")
    shared = [budget]
    cands = set()
    for delta in elementary_deltas(m):
        cands.update(apply_delta_saturate(m, delta, shared))
    return _minimalize(cands)


# -- decomposition registries ----------------------------------------------------------


@dataclass(frozen=True)
class DecompositionRegistry:
    name: str
    base: Matroid
    components: tuple     # of (label, Matroid)
    source: str


def automorphisms(m):
    """All line- and class-preserving permutations of the ground set."""
    if not m.is_simple():
        raise MatroidError("automorphism search expects a simple matroid")
    pts = sorted(m.ground())
    lines = [frozenset(l) for l in m.lines]
    lineset = set(lines)
    prof = {p: (m.degree(p), tuple(sorted(len(l) for l in m.lines_through(p))))
            for p in pts}
    out = []

    def rec(i, perm):
        if i == len(pts):
            mapped = set(frozenset(perm[x] for x in l) for l in lines)
            if mapped == lineset:
                out.append(dict(perm))
            return
        p = pts[i]
        for q in pts:
            if q in perm.values() or prof[q] != prof[p]:
                continue
            perm[p] = q
            ok = True
            for l in lines:
                if p in l:
                    img = set(perm[x] for x in l if x in perm)
                    if len(img) == len(l):
                        if frozenset(img) not in lineset:
                            ok = False
                    elif not any(img <= other for other in lineset):
                        ok = False
                if not ok:
                    break
            if ok:
                rec(i + 1, perm)
            del perm[p]

    rec(0, {})
    return out


def orbit_of_set(m, pts):
    """Orbit of a point set under the automorphism group, sorted."""
    pts = frozenset(pts)
    orb = set()
    for a in automorphisms(m):
        orb.add(frozenset(a[p] for p in pts))
    return sorted(orb, key=sorted)


_PAPPUS_TRIPLES = (frozenset({1, 4, 9}), frozenset({2, 5, 8}), frozenset({3, 6, 7}))


def _add_line(m, tri):
    lines = [set(m.line_points(l)) for l in m.lines] + [set(tri) - m.loops]
    return Matroid.from_parts(m.d, m.loops, m.classes, lines)


def registry(name):
    if name == "pascal":
        m = fixtures.get("pascal")
        comps = [("M", m), ("U_{2,9}", uniform(2, 9))]
        for i in (7, 8, 9):
            comps.append(("M(%d)" % i, m.set_loops({i})))
        return DecompositionRegistry("pascal", m, tuple(comps),
                                     "irreducible decomposition of the Pascal circuit variety")
    if name == "pappus":
        m = fixtures.get("pappus")
        comps = [("M", m), ("U_{2,9}", uniform(2, 9))]
        for p in range(1, 10):
            for tri in _PAPPUS_TRIPLES:
                if p not in tri:
                    comps.append(("I(%d;%s)" % (p, sorted(tri)),
                                  _add_line(m.set_loops({p}), tri)))
        for tri in _PAPPUS_TRIPLES:
            comps.append(("J%s" % sorted(tri), m.set_loops(tri)))
        for i in range(1, 10):
            comps.append(("pi^%d" % i, m.pi_config(i)))
        return DecompositionRegistry("pappus", m, tuple(comps),
                                     "irredundant irreducible decomposition of the Pappus circuit variety")
    if name == "third93":
        m = fixtures.get("third93")
        comps = [("M", m)]
        for tri in orbit_of_set(m, {7, 8, 9}):
            comps.append(("A%s" % sorted(tri), identify_classes(m, [tuple(tri)])))
        comps.append(("B", identify_classes(m, [(1, 2), (4, 5), (7, 9)])))
        for i in range(1, 10):
            comps.append(("pi^%d" % i, m.pi_config(i)))
        for i in range(1, 10):
            for k in noncollinear_mates(m, i):
                comps.append(("M(%d,%d)" % (i, k), m.set_loops({i, k})))
        comps.append(("M(3,6,8)", m.set_loops({3, 6, 8})))
        comps.append(("U_{2,9}", uniform(2, 9)))
        for i in range(1, 10):
            comps.append(("M(%d)" % i, m.set_loops({i})))
        return DecompositionRegistry("third93", m, tuple(comps),
                                     "irredundant irreducible decomposition of the third 9_3 circuit variety")
    if name in ("cactus12", "cactus14", "cactus11", "three-lines", "forest15"):
        m = fixtures.get(name)
        comps = [("M", m)]
        q = sorted(m.q_points())
        for k in range(1, len(q) + 1):
            for sub in itertools.combinations(q, k):
                comps.append(("M%s" % (tuple(sub),), m.set_loops(sub)))
        return DecompositionRegistry(name, m, tuple(comps),
                                     "loop-subset components of a cactus/forest circuit variety")
    raise MatroidError("unknown registry %r" % name)


def noncollinear_mates(m, i):
    """The points that share no line with i (the k_j^i of the 9_3 analysis)."""
    on = set()
    for l in m.lines_through(i):
        on.update(m.line_points(l))
    return sorted(set(m.ground()) - on - {i} - m.loops)


def cover_sanity(reg):
    """Per component: dependency-order check plus a sampled-containment check
    via a propagated realization of the component (when constructible)."""
    report = []
    base = reg.base
    for label, comp in reg.components:
        entry = {"label": label, "dep_ok": base.dependency_leq(comp)}
        cfg = component_realization(comp)
        if cfg is None:
            entry["containment"] = "skipped"
        else:
            entry["containment"] = includes_dependencies(cfg, base)
        report.append(entry)
    return report


def component_realization(comp, seed=0):
    """A realization of a (possibly non-simple) component, or None.

    The reduced simple version is realized by propagation, loops reattached
    as zero vectors and parallel points as copies.
    """
    try:
        simple, loops, classes = comp.reduce()
    except MatroidError:
        return {p: ZERO for p in comp.ground()}
    cert = propagate_realization(simple, seed=seed)
    if cert.outcome != "realization":
        return None
    reps = sorted(min(c) for c in classes)
    cfg = {}
    for p in comp.ground():
        if p in comp.loops:
            cfg[p] = ZERO
        else:
            r = comp.representative(p)
            cfg[p] = cert.config[reps.index(r) + 1]
    return cfg


# -- irredundancy witnesses -----------------------------------------------------------


@dataclass(frozen=True)
class NonConcurrencyWitness:
    name: str
    point: int
    cfg: dict
    pair1: tuple          # ((a, b), (c, d)): meet of spans ab and cd
    pair2: tuple
    expected1: tuple
    expected2: tuple

    def meets(self):
        (a, b), (c, d) = self.pair1
        (e, f), (g, h) = self.pair2
        m1 = meet_vectors(self.cfg[a], self.cfg[b], self.cfg[c], self.cfg[d])
        m2 = meet_vectors(self.cfg[e], self.cfg[f], self.cfg[g], self.cfg[h])
        return m1, m2


def witness_check(w, base):
    """True iff the two meets are nonzero and projectively distinct,
    certifying that w.cfg cannot be perturbed into the base variety."""
    m1, m2 = w.meets()
    return (not is_zero(m1) and not is_zero(m2)
            and not is_zero(cross(m1, m2)))


def _w(name, point, cfg, pair1, pair2, e1, e2):
    cfg = {p: vec(*v) for p, v in cfg.items()}
    return NonConcurrencyWitness(name, point, cfg, pair1, pair2,
                                 vec(*e1), vec(*e2))


WITNESSES = {
    ("pascal", (7,)): [_w(
        "pascal-m7", 7,
        {9: (1, 0, 0), 8: (0, 1, 0), 3: (0, 0, 1), 6: (1, 1, 1), 1: (1, 2, 1),
         5: (1, 0, 2), 2: (3, 1, 1), 4: (0, 1, 4), 7: (0, 0, 0)},
        ((9, 8), (1, 5)), ((9, 8), (2, 4)),
        (-1, -4, 0), (-12, -3, 0))],
    ("third93", (1,)): [_w(
        "third93-m1", 1,
        {4: (1, 0, 0), 7: (0, 1, 0), 8: (0, 0, 1), 3: (1, 1, 1), 2: (0, 1, 1),
         5: (1, 0, 3), 6: (1, 5, 0), 9: (3, 10, 3), 1: (0, 0, 0)},
        ((8, 9), (2, 6)), ((3, 5), (2, 6)),
        (3, 10, -5), (-3, -8, 7))],
    ("third93", (3,)): [_w(
        "third93-m3", 3,
        {6: (1, 0, 0), 8: (0, 1, 0), 1: (0, 0, 1), 4: (1, 1, 1), 2: (1, 0, 2),
         5: (1, 3, 1), 7: (1, 2, 2), 9: (0, 3, 1), 3: (0, 0, 0)},
        ((2, 4), (1, 5)), ((2, 4), (7, 9)),
        (1, 3, -1), (2, 1, 3))],
    ("third93", (1, 4)): [
        _w("third93-m14-at1", 1,
           {7: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1), 5: (1, 1, 1), 8: (1, 2, 0),
            9: (1, 0, 3), 6: (5, 4, 7), 1: (0, 0, 0), 4: (0, 0, 0)},
           ((2, 6), (3, 5)), ((8, 9), (3, 5)),
           (5, 5, 7), (2, 2, 3)),
        _w("third93-m14-at4", 4,
           {7: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1), 5: (1, 1, 1), 8: (1, 2, 0),
            9: (1, 0, 3), 6: (5, 4, 7), 1: (0, 0, 0), 4: (0, 0, 0)},
           ((7, 6), (3, 2)), ((8, 5), (3, 2)),
           (0, 4, 7), (0, 1, -1)),
    ],
}


def witnesses_for(config_name, loop_points):
    key = (config_name, tuple(sorted(loop_points)))
    if key not in WITNESSES:
        raise MatroidError("no stored witness for %s with loops %s"
                           % (config_name, sorted(loop_points)))
    return WITNESSES[key]


# -- the minimal-matroid list over the Pappus configuration with one loop ----------------
#
# The nine-entry family of the one-loop Pappus analysis; U_{2,9}(9) appears in
# the decomposition equation but is not confirmed minimal, so it is flagged
# separately instead of being asserted either way.


def pappus_m9_minimal_list():
    pap = fixtures.get("pappus")
    m9 = pap.set_loops({9})
    red = pap.delete({9})            # labels 1..8 coincide with the originals
    auts = automorphisms(red)

    def orbit(mat9):
        out = set()
        for a in auts:
            amap = dict(a)
            amap[9] = 9
            out.add(_apply_perm(mat9, amap))
        return sorted(out, key=repr)

    items = []
    seen = set()

    def extend(tag, mats):
        for i, mm in enumerate(mats):
            if mm not in seen:
                seen.add(mm)
                items.append(("%s_%d" % (tag, i + 1), mm))

    extend("A", orbit(identify_classes(m9, [(1, 2), (2, 7)])))
    extend("Ap", orbit(identify_classes(m9, [(2, 3), (3, 4)])))
    b1 = identify_classes(m9, [(1, 2), (2, 6)])
    b1 = _put_on_line(b1, {1, 4, 5, 7})
    extend("B", orbit(b1))
    bp = identify_classes(m9, [(2, 4), (4, 6)])
    bp = _put_on_line(bp, {2, 1, 3, 8})
    extend("Bp", orbit(bp))
    extend("C", [identify_classes(m9, [pair]) for pair in
                 ((2, 3), (5, 7), (6, 8), (2, 7), (3, 8), (5, 6))])
    extend("D", orbit(identify_classes(m9, [(1, 2), (4, 5)])))
    extend("Dp", orbit(identify_classes(m9, [(1, 7), (3, 4)])))
    extend("I", [_add_line(m9, {2, 5, 8}), _add_line(m9, {3, 6, 7})])
    extend("M99", [m9.set_loops({1}), m9.set_loops({4})])
    return items


UNCONFIRMED_MINIMAL = {
    "pappus-m9": "U_{2,9}(9) appears in the decomposition equation but its "
                 "minimality over M(9) is not asserted",
}


def _apply_perm(m, perm):
    loops = [perm[p] for p in m.loops]
    classes = [tuple(sorted(perm[p] for p in c)) for c in m.classes]
    lines = [[perm[p] for p in m.line_points(l)] for l in m.lines]
    if m.rank_cap == 2 and len(m.classes) >= 3:
        lines = [[perm[p] for p in m.nonloops()]]
    return Matroid.from_parts(m.d, loops, classes, lines)


def _put_on_line(m, pts):
    """Add the collinearity of `pts` (used for the B-type degenerations)."""
    return _add_line(m, set(pts))
