"""Brute-force oracles for the test suite.

Independent of the search code: enumerates every rank-<=3 matroid on [d]
(feasible for d <= 6) directly from the structure (loops, partition, line
family), and minimalizes over the dependency order by definition.
"""

import itertools

from mvt.matroid import Matroid


def partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def line_families(classes):
    """All families of >=3-subsets of class representatives, pairwise sharing
    at most one element, with no line covering every class."""
    reps = sorted(min(c) for c in classes)
    cands = []
    for k in range(3, len(reps) + 1):
        cands.extend(frozenset(c) for c in itertools.combinations(reps, k))
    cands = [c for c in cands if len(c) < len(reps)]

    out = [[]]
    def rec(i, chosen):
        for j in range(i, len(cands)):
            cand = cands[j]
            if all(len(cand & other) <= 1 for other in chosen):
                chosen.append(cand)
                out.append(list(chosen))
                rec(j + 1, chosen)
                chosen.pop()
    rec(0, [])
    return out


def all_matroids(d):
    """Every rank-<=3 matroid on [d]."""
    ground = list(range(1, d + 1))
    for r in range(d + 1):
        for loops in itertools.combinations(ground, r):
            loops = set(loops)
            rest = [p for p in ground if p not in loops]
            if not rest:
                yield Matroid.from_parts(d, loops, (), ())
                continue
            for part in partitions(rest):
                ncls = len(part)
                if ncls == 1:
                    yield Matroid.from_parts(d, loops, part, ())
                    continue
                # the all-collinear (rank-2) matroid
                yield Matroid.from_parts(d, loops, part,
                                         [[min(c) for c in part]] if ncls >= 3 else ())
                if ncls >= 3:
                    for fam in line_families(part):
                        yield Matroid.from_parts(d, loops, part, fam)


def minimal_above(m):
    """min(M) by definition: filter all matroids > m, keep the minimal ones."""
    above = [n for n in all_matroids(m.d)
             if n != m and m.dependency_leq(n)]
    keep = []
    for n in above:
        if not any(o != n and o.dependency_leq(n) for o in above):
            keep.append(n)
    return keep
