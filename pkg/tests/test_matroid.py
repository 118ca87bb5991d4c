import itertools
import json
import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from mvt import fixtures
from mvt.matroid import Matroid, MatroidError, uniform, identify_classes


pascal = fixtures.get("pascal")
pappus = fixtures.get("pappus")
qs = fixtures.get("qs")
tl = fixtures.get("three-lines")
t93 = fixtures.get("third93")


def test_rank_examples():
    assert qs.rank({1, 2, 3}) == 2
    assert qs.rank(set()) == 0
    assert pascal.rank({7, 8, 9}) == 2
    assert uniform(2, 9).rank(range(1, 10)) == 2
    assert pascal.rank({1, 2, 3}) == 3


def test_rank_bounds_and_independence():
    for s in map(set, itertools.chain.from_iterable(
            itertools.combinations(range(1, 7), k) for k in range(5))):
        r = qs.rank(s)
        assert 0 <= r <= min(len(s), 3)
        assert (r == len(s)) == qs.is_independent(s)


def test_circuits_pascal():
    want = {frozenset(c) for c in ([1, 6, 8], [1, 5, 7], [2, 4, 7], [2, 6, 9],
                                   [3, 4, 8], [3, 5, 9], [7, 8, 9])}
    assert pascal.circuits_upto(3) == want


def test_circuits_pappus_and_uniform():
    assert len(pappus.circuits_upto(3)) == 9
    assert uniform(3, 4).circuits_upto(3) == set()
    assert uniform(3, 4).circuits_upto(4) == {frozenset({1, 2, 3, 4})}


def test_circuit_axioms_fixtures():
    # no containment between circuits; circuit elimination, exhaustively
    for name in ("qs", "pascal", "pappus", "third93", "grid3", "fano"):
        m = fixtures.get(name)
        circuits = m.circuits_upto(4)
        for c1, c2 in itertools.permutations(circuits, 2):
            assert not c1 < c2
        for c1, c2 in itertools.combinations(circuits, 2):
            for e in c1 & c2:
                union = (c1 | c2) - {e}
                assert any(c3 <= union for c3 in circuits), (c1, c2, e)


def test_rank_monotone_submodular():
    # exhaustive on the 6-point quadrilateral set and a 6-point non-simple one
    for m in (qs, qs.set_loops({2}).identify_points(3, 4)):
        subsets = [set(s) for k in range(m.d + 1)
                   for s in itertools.combinations(range(1, m.d + 1), k)]
        for x in subsets:
            for y in subsets:
                if x <= y:
                    assert m.rank(x) <= m.rank(y)
                assert m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y)


def test_restrict_examples():
    r = qs.restrict([1, 2, 3, 4])
    assert r.d == 4
    assert r.circuits_upto(4) == {frozenset({1, 2, 3})}
    assert r.is_dependent({1, 2, 3, 4})


def test_set_loops_examples():
    m = pascal.set_loops({7})
    assert m.loops == frozenset({7})
    assert {frozenset(l) for l in m.lines} == {
        frozenset(s) for s in ([1, 6, 8], [2, 6, 9], [3, 4, 8], [3, 5, 9])}
    assert pascal.set_loops(set()) == pascal


def test_set_loops_reduce_vs_delete():
    for name in ("pascal", "pappus", "qs", "third93"):
        m = fixtures.get(name)
        for p in (1, m.d):
            simple, loops, _ = m.set_loops({p}).reduce()
            assert simple == m.delete({p})


def test_degrees_and_q_points():
    assert pascal.degree(7) == 3
    assert sorted(pascal.q_points()) == [7, 8, 9]
    assert sorted(tl.q_points()) == [7]
    assert tl.degree(1) == 1
    assert uniform(3, 5).degree(2) == 0


def test_chains_and_classifiers():
    assert tl.is_nilpotent() and tl.is_solvable()
    assert fixtures.get("grid3").is_solvable()
    assert not fixtures.get("grid3").is_nilpotent()
    assert not fixtures.get("fano").is_solvable()
    assert pascal.is_solvable() and not pascal.is_nilpotent()
    assert tl.nilpotency_length() == 2
    chain = tl.nilpotency_chain()
    assert chain[0] == tl and chain[1].d == 1


def test_nilpotent_ordering():
    order, degs = tl.nilpotent_ordering()
    assert sorted(order) == list(range(1, 8))
    assert max(degs) <= 1
    # the zero count is the lifting dimension: 4 for three concurrent lines
    assert degs.count(0) == 4
    assert fixtures.get("fano").nilpotent_ordering() is None
    allloops = uniform(0, 3)
    assert allloops.is_nilpotent()


def test_dependency_order():
    assert pascal.dependency_leq(pascal.set_loops({7}))
    assert pascal.dependency_leq(uniform(2, 9))
    assert not uniform(2, 9).dependency_leq(pascal)
    with pytest.raises(MatroidError):
        pascal.dependency_leq(qs)


def test_dependency_order_is_partial_order():
    rng = random.Random(7)
    pool = [pascal, pappus, uniform(2, 9), pascal.set_loops({7}),
            pappus.set_loops({1}), t93, t93.set_loops({1, 4}),
            identify_classes(t93, [(1, 5), (5, 9)]), uniform(3, 9)]
    for m in pool:
        assert m.dependency_leq(m)
    for _ in range(60):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        if a.dependency_leq(b) and b.dependency_leq(a):
            assert a.circuits_upto(3) == b.circuits_upto(3)
        if a.dependency_leq(b) and b.dependency_leq(c):
            assert a.dependency_leq(c)


def test_pi_config():
    pi = pascal.pi_config(1)
    assert set(map(frozenset, pi.classes)) >= {frozenset({6, 8}), frozenset({5, 7})}
    assert len(pi.lines) == 1
    (line,) = pi.lines
    assert pi.line_points(line) == frozenset(range(2, 10))
    assert 1 not in pi.line_points(line)

    pi3 = t93.pi_config(3)
    assert {c for c in map(frozenset, pi3.classes) if len(c) > 1} == {
        frozenset({1, 5}), frozenset({2, 4}), frozenset({7, 9})}

    single = uniform(2, 5)
    assert single.pi_config(1).rank_cap <= 2


def test_uniform_identify_reduce():
    u26 = uniform(2, 6)
    assert u26.is_dependent({1, 2, 3}) and u26.is_dependent({4, 5, 6})
    m = uniform(3, 4).identify_points(1, 2)
    assert m.class_of(1) == (1, 2) and not m.lines
    simple, loops, classes = pascal.set_loops({7}).reduce()
    assert simple == pascal.delete({7})
    assert loops == frozenset({7})


def test_identify_classes_merges_lines():
    # identifying {7,8,9} in the third configuration merges the three lines
    # opposite to it into one four-class line
    a1 = identify_classes(t93, [(7, 8), (8, 9)])
    lines = {frozenset(a1.line_points(l)) for l in a1.lines}
    assert frozenset({4, 5, 6, 7, 8, 9}) in lines
    assert len(a1.lines) == 4


def test_canonical_form_isomorphism():
    rng = random.Random(3)
    for m in (pascal, qs, t93, pascal.set_loops({7}), uniform(2, 6)):
        perm = list(range(1, m.d + 1))
        rng.shuffle(perm)
        pmap = {p: perm[p - 1] for p in m.ground()}
        loops = [pmap[p] for p in m.loops]
        classes = [tuple(sorted(pmap[p] for p in c)) for c in m.classes]
        lines = [[pmap[p] for p in m.line_points(l)] for l in m.lines]
        if m.rank_cap == 2:
            lines = [[pmap[p] for p in m.nonloops()]]
        m2 = Matroid.from_parts(m.d, loops, classes, lines)
        assert m.is_isomorphic(m2)
    assert not pascal.is_isomorphic(pappus)


def test_json_round_trip():
    for name in fixtures.names():
        m = fixtures.get(name)
        assert Matroid.from_json(m.to_json()) == m
    m = t93.set_loops({7}).identify_points(1, 5)
    m2 = Matroid.from_json(m.to_json())
    assert m2 == m
    data = json.loads(m.to_json())
    assert data["ground_size"] == 9 and data["loops"] == [7]


def test_invariant_validation():
    with pytest.raises(MatroidError):
        Matroid(9, (), (), [[1, 2, 3], [1, 2, 4]])   # two lines sharing a pair
    with pytest.raises(MatroidError):
        Matroid(4, (), (), [[1, 2]])                 # undersized line
    with pytest.raises(MatroidError):
        Matroid(3, (1,), [(1, 2)], ())               # loop inside a class


def test_concurrent_reads_deterministic():
    subsets = [set(s) for s in itertools.combinations(range(1, 10), 3)]
    with ThreadPoolExecutor(8) as pool:
        a = list(pool.map(t93.rank, subsets))
        b = list(pool.map(t93.rank, subsets))
    assert a == b == [t93.rank(s) for s in subsets]
