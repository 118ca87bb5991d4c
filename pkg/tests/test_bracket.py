import itertools
import random
from fractions import Fraction

import pytest

from mvt import fixtures
from mvt.bracket import (BracketPoly, normalize_bracket, parse_poly, format_poly,
                         identity_test, meet22, gc_bracket, meet_node, expand_gc,
                         substitute_point, det3, rand_vec)
from mvt import gc as G
from mvt.geometry import propagate_realization, meet_vectors, add, scale
from mvt.matroid import uniform, Matroid


def test_normalize_bracket():
    assert normalize_bracket(2, 1, 3) == (-1, (1, 2, 3))
    assert normalize_bracket(1, 1, 2) == (0, None)
    assert normalize_bracket(3, 2, 1) == (-1, (1, 2, 3))
    assert normalize_bracket(1, 2, 3) == (1, (1, 2, 3))
    # idempotence: a stored bracket re-normalizes to itself
    sign, key = normalize_bracket(4, "q1", 2)
    assert normalize_bracket(*key) == (1, key)


def test_poly_arithmetic():
    p = parse_poly("[1,2,3][4,5,6]-[1,2,4][3,5,6]")
    assert (p + p.scale(-1)).is_zero()
    q = BracketPoly.bracket(1, 2, 3) * BracketPoly.bracket(4, 5, 6)
    assert q.degree() == 2 and len(q.terms) == 1


def test_distributivity_vs_evaluation():
    rng = random.Random(5)
    def rand_poly():
        out = BracketPoly()
        for _ in range(rng.randint(1, 4)):
            syms = rng.sample(range(1, 7), 3)
            out = out + BracketPoly.bracket(*syms).scale(
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        return out
    for _ in range(20):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        asg = {s: rand_vec(rng) for s in range(1, 7)}
        lhs = (a * (b + c)).evaluate(asg)
        rhs = (a * b + a * c).evaluate(asg)
        assert lhs == rhs
        assert (a * b).evaluate(asg) == a.evaluate(asg) * b.evaluate(asg)


def test_evaluate_identity():
    p = BracketPoly.bracket(1, 2, 3)
    asg = {1: (Fraction(1), Fraction(0), Fraction(0)),
           2: (Fraction(0), Fraction(1), Fraction(0)),
           3: (Fraction(0), Fraction(0), Fraction(1))}
    assert p.evaluate(asg) == 1
    # e-symbols evaluate to the standard basis without an assignment
    q = BracketPoly.bracket("e1", "e2", "e3")
    assert q.evaluate({}) == 1


def test_identity_test_basics():
    p = parse_poly("[1,2,3][4,5,6]-[1,2,4][3,5,6]")
    assert identity_test(p, p)
    assert not identity_test(p, p + BracketPoly.bracket(1, 2, 3))
    assert identity_test(p, parse_poly("-[1,2,4][3,5,6]+[1,2,3][4,5,6]"))


def test_syzygy_relation_on_pool():
    # third fundamental relation, all 3+3 selections from a 6-symbol pool
    pool = list(range(1, 7))
    for a in itertools.combinations(pool, 3):
        for b in itertools.combinations(pool, 3):
            lhs = BracketPoly.bracket(*a) * BracketPoly.bracket(*b)
            rhs = BracketPoly()
            for j in range(3):
                bb = list(b)
                swapped = bb[j]
                bb[j] = a[2]
                rhs = rhs + (BracketPoly.bracket(a[0], a[1], swapped)
                             * BracketPoly.bracket(*bb))
            assert identity_test(lhs, rhs, trials=4, seed=11), (a, b)


def test_meet22():
    vex = meet22(1, 2, 3, 4)
    assert vex[0][1] == 4 and vex[1][1] == 3
    assert vex[0][0] == BracketPoly.bracket(1, 2, 3)
    assert vex[1][0] == BracketPoly.bracket(1, 2, 4).scale(-1)
    # meet of a span with itself evaluates to zero everywhere
    degenerate = gc_bracket([meet_node(1, 2, 1, 2), 3, 4])
    assert degenerate.is_zero()


def test_meet22_matches_meet_vectors():
    rng = random.Random(21)
    for _ in range(500):
        asg = {s: rand_vec(rng) for s in range(1, 5)}
        want = meet_vectors(asg[1], asg[2], asg[3], asg[4])
        vex = meet22(1, 2, 3, 4)
        got = (Fraction(0),) * 3
        for coeff, sym in vex:
            got = add(got, scale(asg[sym], coeff.evaluate(asg)))
        assert got == want


def test_expand_gc_examples():
    p = expand_gc(("join", meet_node(3, 4, 1, 2), 5, 6))
    printed = parse_poly("[1,2,3][4,5,6]-[1,2,4][3,5,6]")
    assert identity_test(p, printed) or identity_test(p, printed.scale(-1))
    p2 = expand_gc(("join", 7, 9, meet_node(3, 4, 6, 1)))
    printed2 = parse_poly("[7,4,9][3,6,1]-[4,6,1][7,3,9]")
    assert identity_test(p2, printed2)
    with pytest.raises(ValueError):
        expand_gc(("join", 1, 2))


def test_gc3_vanishes_on_realizations():
    tl = fixtures.get("three-lines")
    p = parse_poly("[1,2,3][4,5,6]-[1,2,4][3,5,6]")
    for seed in range(5):
        cert = propagate_realization(tl, seed=seed)
        assert cert.outcome == "realization"
        assert p.evaluate(cert.config) == 0


def test_parser_round_trip():
    rng = random.Random(9)
    for _ in range(40):
        out = BracketPoly()
        for _ in range(rng.randint(0, 5)):
            syms = rng.sample([1, 2, 3, 4, 5, "q1", "q2", "e1"], 3)
            out = out + BracketPoly.bracket(*syms).scale(
                Fraction(rng.randint(-20, 20), rng.randint(1, 7)))
        assert parse_poly(format_poly(out)) == out
    assert parse_poly("0").is_zero()
    assert parse_poly("+3/2[1,2,3]").terms == {((1, 2, 3),): Fraction(3, 2)}


def test_substitute_point():
    p = parse_poly("[1,2,3][4,6,7]-[1,2,4][3,6,7]")
    got = substitute_point(p, 3, (4, 5), (1, 6))
    want = parse_poly("[1,2,6][4,5,1][4,6,7]+[1,2,4][1,6,7][4,5,6]")
    assert identity_test(got, want)
    # a polynomial without the substituted point is returned unchanged
    q = parse_poly("[1,2,4]")
    assert substitute_point(q, 3, (4, 5), (1, 6)) == q
    with pytest.raises(ValueError):
        substitute_point(p, 3, (3, 5), (1, 6))


# -- generator emission ------------------------------------------------------------


def test_circuit_generators_counts_and_order():
    pas = fixtures.get("pascal")
    gens = G.circuit_generators(pas)
    assert [str(g) for g in gens] == [
        "+[1,6,8]", "+[1,5,7]", "+[2,4,7]", "+[2,6,9]",
        "+[3,4,8]", "+[3,5,9]", "+[7,8,9]"]
    assert len(G.circuit_generators(fixtures.get("pappus"))) == 9
    assert G.circuit_generators(uniform(3, 7)) == []


def test_circuit_generators_descriptors():
    m = Matroid.from_parts(6, (6,), [(1, 2)], [[1, 3, 4]])
    gens = G.circuit_generators(m)
    kinds = [type(g).__name__ for g in gens]
    # the line triple expands over the parallel class: {1,3,4} and {2,3,4}
    assert kinds.count("BracketGenerator") == 2
    assert kinds.count("MinorGenerator") == 1
    assert kinds.count("CoordGenerator") == 1
    cfg = {1: (Fraction(1), Fraction(0), Fraction(0)),
           2: (Fraction(2), Fraction(0), Fraction(0)),
           3: (Fraction(0), Fraction(1), Fraction(0)),
           4: (Fraction(1), Fraction(1), Fraction(0)),
           5: (Fraction(0), Fraction(0), Fraction(1)),
           6: (Fraction(0), Fraction(0), Fraction(0))}
    assert all(g.vanishes(cfg) for g in gens)


def test_gc_generators_counts():
    assert len(G.gc_generators(fixtures.get("pascal"), 1)) == 3
    assert len(G.gc_generators(fixtures.get("pappus"), 1)) == 9
    assert len(G.gc_generators(fixtures.get("cactus11"), 1)) == 4
    assert G.gc_generators(fixtures.get("qs"), 1) == []


def test_gc_generators_pappus_match_printed():
    gens = G.gc_generators(fixtures.get("pappus"), 1)
    printed = [parse_poly(t) for t in G.curated_printed("pappus-9")]
    matched = set()
    for g in gens:
        hit = [i for i, q in enumerate(printed)
               if identity_test(g, q) or identity_test(g, q.scale(-1))]
        assert len(hit) == 1
        matched.add(hit[0])
    assert matched == set(range(9))


def test_gc_generators_cactus11_match_printed():
    printed = [parse_poly(t) for t in (
        "[2,3,5][6,7,8]-[2,3,6][5,7,8]",
        "[2,3,5][6,10,11]-[2,3,6][5,10,11]",
        "[2,3,7][8,10,11]-[2,3,8][7,10,11]",
        "[5,6,7][8,10,11]-[5,6,8][7,10,11]")]
    gens = G.gc_generators(fixtures.get("cactus11"), 1)
    for q in printed:
        assert any(identity_test(g, q) or identity_test(g, q.scale(-1))
                   for g in gens), format_poly(q)


def test_curated_recipes_match_printed_exactly():
    for name in ("pascal-7", "pappus-9"):
        polys = G.curated_generators(name)
        texts = G.curated_printed(name)
        assert len(polys) == len(texts) == (7 if name == "pascal-7" else 9)
        for poly, text in zip(polys, texts):
            assert identity_test(poly, parse_poly(text), trials=20, seed=0), text


def test_gc_depth_two_grows():
    pas = fixtures.get("pascal")
    d1 = G.gc_generators(pas, 1)
    d2 = G.gc_generators(pas, 2)
    assert len(d2) > len(d1)
    assert d2[:len(d1)] == d1


def test_generators_vanish_on_sampled_realizations():
    for name in ("qs", "pascal", "pappus", "cactus12"):
        m = fixtures.get(name)
        gens = G.circuit_generators(m) + [G.BracketGenerator(p)
                                          for p in G.gc_generators(m, 1)]
        for seed in range(20):
            cert = propagate_realization(m, seed=seed)
            assert cert.outcome == "realization"
            assert G.generators_vanish_on(gens, cert.config)
