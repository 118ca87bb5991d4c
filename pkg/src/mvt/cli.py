"""Batch command-line front end.

Deterministic, scriptable output: same argv and seed give byte-identical
stdout.  Exit codes: 0 success, 1 domain failure (infeasible realization,
failed check), 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import fixtures
from .matroid import Matroid, MatroidError
from . import incidence
from . import gc as gcmod
from . import geometry
from . import lifting
from . import decomposition
from . import families


def _frac(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator,
                                                                  x.denominator)


def _vec(v):
    return "(%s)" % ", ".join(_frac(x) for x in v)


def _load(name):
    try:
        return fixtures.load(name)
    except KeyError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


def cmd_info(args, out):
    m = _load(args.config)
    if args.format == "json":
        data = json.loads(m.to_json())
        data.update(nilpotent=m.is_nilpotent(), solvable=m.is_solvable(),
                    cactus=incidence.is_cactus(m) if m.is_simple() else None,
                    forest=incidence.is_forest(m),
                    s_points=sorted(m.s_points()), q_points=sorted(m.q_points()))
        out.append(json.dumps(data, sort_keys=True))
        return 0
    out.append("d=%d" % m.d)
    out.append("lines=%d: %s" % (len(m.lines),
                                 " ".join(str(sorted(m.line_points(l))) for l in m.lines)))
    out.append("loops=%s parallels=%s rank_cap=%d"
               % (sorted(m.loops), [list(c) for c in m.classes if len(c) > 1],
                  m.rank_cap))
    out.append("nilpotent=%s solvable=%s forest=%s cactus=%s"
               % (m.is_nilpotent(), m.is_solvable(), incidence.is_forest(m),
                  incidence.is_cactus(m) if m.is_simple() else "n/a"))
    out.append("S=%s Q=%s" % (sorted(m.s_points()), sorted(m.q_points())))
    return 0


def cmd_chain(args, out):
    m = _load(args.config)
    s = m.s_chain_sets()
    q = m.q_chain_sets()
    out.append("S-chain: " + " > ".join(str(sorted(x)) for x in s))
    out.append("Q-chain: " + " > ".join(str(sorted(x)) for x in q))
    out.append("nilpotent=%s length=%s solvable=%s"
               % (m.is_nilpotent(), m.nilpotency_length(), m.is_solvable()))
    ordering = m.nilpotent_ordering()
    if ordering is not None:
        out.append("ordering=%s degrees=%s zeros=%d"
                   % (ordering[0], ordering[1], ordering[1].count(0)))
    return 0


def cmd_cactus(args, out):
    m = _load(args.config)
    try:
        comps = incidence.cactus_components(m)
    except incidence.NotCactusError as exc:
        out.append("cactus=False offending_line=%s" % sorted(exc.line))
        return 1
    out.append("cactus=True components=%d" % len(comps))
    for c in comps:
        out.append("  %s: %s" % (c.kind, " ".join(str(sorted(l)) for l in c.lines)))
    return 0


def cmd_forest(args, out):
    m = _load(args.config)
    wit = incidence.find_cycle(m)
    if wit is None:
        out.append("forest=True")
        return 0
    out.append("forest=False cycle_points=%s cycle_lines=%s"
               % (list(wit.points), [sorted(l) for l in wit.lines]))
    return 1


def cmd_glue(args, out):
    m = _load(args.config)
    n = _load(args.other)
    p, q = (int(x) for x in args.at.split(","))
    g = incidence.free_gluing(m, n, p, q)
    out.append(g.to_json() if args.format == "json" else repr(g))
    return 0


def cmd_components(args, out):
    m = _load(args.config)
    comps = incidence.cactus_loop_components(m)
    out.append("components=%d" % len(comps))
    for c in comps:
        out.append(c.to_json() if args.format == "json"
                   else "loops=%s" % sorted(c.loops))
    return 0


def cmd_circuit_gens(args, out):
    m = _load(args.config)
    gens = gcmod.circuit_generators(m)
    out.append("count=%d" % len(gens))
    for g in gens:
        out.append(str(g))
    return 0


def cmd_gc_gens(args, out):
    m = _load(args.config)
    if args.recipe:
        polys = gcmod.curated_generators(args.recipe)
    else:
        polys = gcmod.gc_generators(m, args.depth)
    out.append("count=%d" % len(polys))
    for p in polys:
        out.append(str(p))
    return 0


def cmd_lift_matrix(args, out):
    m = _load(args.config)
    if args.delete:
        m = m.delete(set(args.delete))
    lm = lifting.lift_matrix(m, args.mode)
    out.append(lm.text())
    return 0


def cmd_lift_dim(args, out):
    m = _load(args.config)
    if args.delete:
        m = m.delete(set(args.delete))
    dim = lifting.lift_dim_at(m, seed=args.seed)
    out.append("kernel_dim=%d" % dim)
    if m.is_nilpotent():
        out.append("dim_formula=%d" % lifting.dim_formula(m))
    return 0


def cmd_count_gens(args, out):
    m = _load(args.config)
    name = args.config
    circ = gcmod.circuit_generators(m)
    out.append("circuit: %d" % len(circ))
    if name in gcmod.RECIPES_BY_CONFIG:
        out.append("gc: %d" % len(gcmod.curated_generators(
            gcmod.RECIPES_BY_CONFIG[name])))
    else:
        out.append("gc: %d" % len(gcmod.gc_generators(m, args.depth)))
    if name in lifting.COUNT_SPECS:
        out.append("lifting: %d" % lifting.lifting_generator_count(
            lifting.COUNT_SPECS[name]))
    return 0


def cmd_realize(args, out):
    m = _load(args.config)
    cert = geometry.propagate_realization(m, seed=args.seed)
    out.append("outcome=%s" % cert.outcome)
    if cert.outcome == "realization":
        for p in sorted(cert.config):
            out.append("%d: %s" % (p, _vec(cert.config[p])))
        return 0
    if cert.outcome == "infeasible":
        out.append("witness=%s" % _frac(cert.witness))
    if cert.stuck_point is not None:
        out.append("stuck_point=%d" % cert.stuck_point)
    return 1


def cmd_check_member(args, out):
    m = _load(args.config)
    with open(args.vectors) as fh:
        cfg = geometry.config_from_json(fh.read())
    inc = geometry.includes_dependencies(cfg, m)
    real = geometry.is_realization(cfg, m)
    out.append("includes_dependencies=%s" % inc)
    out.append("is_realization=%s" % real)
    return 0 if inc else 1


def cmd_min_matroids(args, out):
    m = _load(args.config)
    mats = decomposition.minimal_matroids(m)
    out.append("count=%d" % len(mats))
    for mm in mats:
        out.append(mm.to_json() if args.format == "json" else repr(mm))
    return 0


def cmd_registry(args, out):
    reg = decomposition.registry(args.config)
    out.append("registry=%s components=%d" % (reg.name, len(reg.components)))
    report = decomposition.cover_sanity(reg) if args.check else None
    for i, (label, comp) in enumerate(reg.components):
        line = "%-14s %s" % (label, comp.to_json() if args.format == "json"
                             else repr(comp))
        if report:
            line += "  dep_ok=%s containment=%s" % (
                report[i]["dep_ok"], report[i]["containment"])
        out.append(line)
    return 0


def cmd_witness(args, out):
    base = _load(args.config)
    ws = decomposition.witnesses_for(args.config, args.loop)
    code = 0
    for w in ws:
        m1, m2 = w.meets()
        ok = decomposition.witness_check(w, base)
        out.append("point=%d meet1=%s meet2=%s distinct=%s"
                   % (w.point, _vec(m1), _vec(m2), ok))
        if not ok:
            code = 1
    return code


def cmd_family(args, out):
    fam, m, expected = families.get(args.name)
    ok = geometry.family_member_check(fam, m)
    out.append("member_check=%s" % ok)
    lim = fam.limit()
    match = all(geometry.proj_equal(lim[p], expected[p]) for p in expected)
    out.append("limit_matches=%s" % match)
    for p in sorted(lim):
        out.append("%d: %s" % (p, _vec(lim[p])))
    return 0 if ok and match else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="mvt", description=__doc__)
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("--config", required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=20)
        return p

    common(sub.add_parser("info"))
    common(sub.add_parser("chain"))
    common(sub.add_parser("cactus"))
    common(sub.add_parser("forest"))
    g = common(sub.add_parser("glue"))
    g.add_argument("--other", required=True)
    g.add_argument("--at", required=True, help="P,Q gluing points")
    common(sub.add_parser("components"))
    common(sub.add_parser("circuit-gens"))
    g = common(sub.add_parser("gc-gens"))
    g.add_argument("--depth", type=int, default=1)
    g.add_argument("--recipe", default=None)
    g = common(sub.add_parser("lift-matrix"))
    g.add_argument("--mode", choices=("single", "per-column"), default="single")
    g.add_argument("--delete", type=_intlist, default=None)
    g = common(sub.add_parser("lift-dim"))
    g.add_argument("--delete", type=_intlist, default=None)
    g = common(sub.add_parser("count-gens"))
    g.add_argument("--depth", type=int, default=1)
    common(sub.add_parser("realize"))
    g = common(sub.add_parser("check-member"))
    g.add_argument("--vectors", required=True)
    common(sub.add_parser("min-matroids"))
    g = common(sub.add_parser("registry"))
    g.add_argument("--check", action="store_true")
    g = common(sub.add_parser("witness"))
    g.add_argument("--loop", type=_intlist, required=True)
    g = common(sub.add_parser("family"), config=False)
    g.add_argument("--name", required=True)
    return ap


def _intlist(text):
    return [int(x) for x in text.split(",") if x]


HANDLERS = {
    "info": cmd_info, "chain": cmd_chain, "cactus": cmd_cactus,
    "forest": cmd_forest, "glue": cmd_glue, "components": cmd_components,
    "circuit-gens": cmd_circuit_gens, "gc-gens": cmd_gc_gens,
    "lift-matrix": cmd_lift_matrix, "lift-dim": cmd_lift_dim,
    "count-gens": cmd_count_gens, "realize": cmd_realize,
    "check-member": cmd_check_member, "min-matroids": cmd_min_matroids,
    "registry": cmd_registry, "witness": cmd_witness, "family": cmd_family,
}


def run(argv):
    """(exit code, stdout text) for an argv list."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code not in (0, None) else 0), ""
    out = []
    try:
        code = HANDLERS[args.verb](args, out)
    except UsageError as exc:
        return 2, "error: %s" % exc
    except MatroidError as exc:
        return 1, "error: %s" % exc
    return code, "\n".join(out)


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
