"""Formal bracket ring over symbolic 3-vectors.

Symbols are either points (ints) or auxiliary names ("q", "q1".., "e1".."e3");
the e_i always evaluate to the standard basis.  A bracket [a,b,c] is stored
sorted with the permutation sign absorbed into the coefficient, brackets with
a repeated symbol vanish.  Polynomial identity is decided by seeded random
evaluation over the rationals.
"""

import itertools
import random
import re
from fractions import Fraction


def _bracket_key(br):
    return tuple(sym_key(s) for s in br)


def sym_key(s):
    if isinstance(s, int):
        return (0, s, "")
    m = re.fullmatch(r"([a-z]+)(\d*)", s)
    if not m:
        raise ValueError("bad symbol %r" % (s,))
    return (1, int(m.group(2) or 0), m.group(1))


def normalize_bracket(a, b, c):
    """(sign, sorted tuple) of the bracket [a,b,c]; sign 0 when degenerate."""
    syms = (a, b, c)
    if len(set(syms)) < 3:
        return 0, None
    keyed = sorted(range(3), key=lambda i: sym_key(syms[i]))
    inv = sum(1 for i, j in itertools.combinations(range(3), 2)
              if keyed.index(i) > keyed.index(j))
    sign = -1 if inv % 2 else 1
    return sign, tuple(syms[i] for i in keyed)


class BracketPoly:
    """Formal sum of rational multiples of bracket monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @staticmethod
    def zero():
        return BracketPoly()

    @staticmethod
    def const(c):
        c = Fraction(c)
        return BracketPoly({(): c} if c else {})

    @staticmethod
    def bracket(a, b, c):
        sign, key = normalize_bracket(a, b, c)
        if sign == 0:
            return BracketPoly()
        return BracketPoly({(key,): Fraction(sign)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            c2 = out.get(mono, Fraction(0)) + c
            if c2:
                out[mono] = c2
            else:
                out.pop(mono, None)
        return BracketPoly(out)

    def __neg__(self):
        return BracketPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return BracketPoly()
        return BracketPoly({m: c * co for m, co in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2, key=_bracket_key))
                c = out.get(mono, Fraction(0)) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return BracketPoly(out)

    def symbols(self):
        out = set()
        for mono in self.terms:
            for br in mono:
                out.update(br)
        return out

    def has_symbol(self, s):
        return s in self.symbols()

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def rename(self, mapping):
        """Apply a symbol substitution {old: new}; brackets re-normalize."""
        out = BracketPoly()
        for mono, c in self.terms.items():
            term = BracketPoly.const(c)
            for br in mono:
                term = term * BracketPoly.bracket(*(mapping.get(s, s) for s in br))
            out = out + term
        return out

    def evaluate(self, assignment):
        """Exact value at an assignment symbol -> rational 3-vector."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for br in mono:
                val *= det3(*(_resolve(s, assignment) for s in br))
                if not val:
                    break
            total += val
        return total

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, BracketPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return format_poly(self)

    __repr__ = __str__


def _resolve(s, assignment):
    if s in assignment:
        return assignment[s]
    if s in ("e1", "e2", "e3"):
        i = int(s[1]) - 1
        return tuple(Fraction(1 if j == i else 0) for j in range(3))
    raise KeyError("unassigned symbol %r" % (s,))


def det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


# -- text format -----------------------------------------------------------------

def _sym_str(s):
    return str(s)


def _sym_parse(tok):
    tok = tok.strip()
    if re.fullmatch(r"-?\d+", tok):
        return int(tok)
    return tok


def format_poly(p):
    if p.is_zero():
        return "0"
    def mono_key(item):
        mono, _ = item
        return (len(mono), tuple(_bracket_key(br) for br in mono))
    parts = []
    for mono, c in sorted(p.terms.items(), key=mono_key):
        sign = "+" if c > 0 else "-"
        c = abs(c)
        coeff = "" if c == 1 and mono else str(c)
        body = "".join("[%s]" % ",".join(_sym_str(s) for s in br) for br in mono)
        parts.append(sign + coeff + body)
    return "".join(parts)


_TERM_RE = re.compile(r"([+-])\s*(\d+(?:/\d+)?)?\s*((?:\[[^\]]*\])*)")


def parse_poly(text):
    text = text.strip().replace(" ", "")
    if text == "0" or not text:
        return BracketPoly()
    if text[0] not in "+-":
        text = "+" + text
    out = BracketPoly()
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse %r at %d" % (text, pos))
        sign, coeff, body = m.groups()
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        term = BracketPoly.const(c)
        for br in re.findall(r"\[([^\]]*)\]", body or ""):
            syms = [_sym_parse(t) for t in br.split(",")]
            if len(syms) != 3:
                raise ValueError("brackets take exactly 3 symbols: %r" % br)
            term = term * BracketPoly.bracket(*syms)
        out = out + term
        pos = m.end()
    return out


# -- randomized identity testing ----------------------------------------------------

def rand_fraction(rng):
    return Fraction(rng.randint(-999, 999), rng.randint(1, 999))


def rand_vec(rng):
    return (rand_fraction(rng), rand_fraction(rng), rand_fraction(rng))


def identity_test(p, r, trials=20, seed=0):
    """Probabilistic equality of two bracket polynomials.

    Evaluates both at `trials` independent uniform rational assignments
    (numerators and denominators bounded by 10^3); reproducible via `seed`.
    """
    syms = sorted(p.symbols() | r.symbols(), key=sym_key)
    rng = random.Random(seed)
    for _ in range(trials):
        asg = {}
        for s in syms:
            if s in ("e1", "e2", "e3"):
                continue
            asg[s] = rand_vec(rng)
        if p.evaluate(asg) != r.evaluate(asg):
            return False
    return True


# -- Grassmann-Cayley expressions ------------------------------------------------------

def meet22(a, b, c, d):
    """Meet of the 2-extensors ab and cd: [a,b,c] d - [a,b,d] c."""
    return ((BracketPoly.bracket(a, b, c), d),
            (BracketPoly.bracket(a, b, d).scale(-1), c))


def _as_vector_expr(node):
    """Evaluate a GC item to a VectorExpr (list of (coefficient, symbol))."""
    if isinstance(node, (int, str)):
        return ((BracketPoly.const(1), node),)
    if isinstance(node, tuple) and node and node[0] == "meet":
        _, left, right = node
        if not (len(left) == 2 and len(right) == 2):
            raise ValueError("meets are defined for pairs of 2-extensors")
        return meet22(left[0], left[1], right[0], right[1])
    raise ValueError("bad GC item %r" % (node,))


def gc_bracket(items):
    """Expand a join of 1-extensor items (points or pairwise meets) of total
    length 3 into a BracketPoly."""
    if len(items) != 3:
        raise ValueError("a full GC expression joins exactly 3 one-extensors")
    vexprs = [_as_vector_expr(it) for it in items]
    out = BracketPoly()
    for (c1, s1), (c2, s2), (c3, s3) in itertools.product(*vexprs):
        out = out + (c1 * c2 * c3) * BracketPoly.bracket(s1, s2, s3)
    return out


def expand_gc(expr):
    """Expand a GC expression tree.

    `expr` is a tuple ("join", item, ...) whose items are symbols or
    ("meet", (a, b), (c, d)) nodes; the join must produce a scalar bracket.
    """
    if isinstance(expr, tuple) and expr and expr[0] == "join":
        return gc_bracket(list(expr[1:]))
    raise ValueError("top level must be a join of total length 3")


def meet_node(a, b, c, d):
    return ("meet", (a, b), (c, d))


def substitute_point(poly, x, pair1, pair2):
    """Replace the point x by the meet of the spans of pair1 and pair2.

    Every bracket containing x is expanded multilinearly with
    x -> [p1,p2,p3] p4 - [p1,p2,p4] p3.  A polynomial without x is returned
    unchanged.
    """
    p1, p2 = pair1
    p3, p4 = pair2
    if x in (p1, p2, p3, p4):
        raise ValueError("substitution pairs must avoid the substituted point")
    vex = meet22(p1, p2, p3, p4)
    out = BracketPoly()
    for mono, c in poly.terms.items():
        term = BracketPoly.const(c)
        for br in mono:
            if x in br:
                repl = BracketPoly()
                for coeff, s in vex:
                    repl = repl + coeff * BracketPoly.bracket(
                        *(s if t == x else t for t in br))
                term = term * repl
            else:
                term = term * BracketPoly.bracket(*br)
        out = out + term
    return out
