"""Encoded one-parameter limit families.

Each family is a ProjectiveFamily over Q[eps] whose members realize a fixed
deletion fixture for generic eps and whose column-wise limit is a specific
degenerate configuration; columns that originally carried 1/eps terms are
pre-cleared by a monomial, which is projectively harmless.  Families whose
construction needs an algebraic field extension cannot be encoded over Q and
are listed in UNSUPPORTED.
"""

from fractions import Fraction

from .geometry import Poly, ProjectiveFamily, vec
from .matroid import MatroidError
from . import fixtures


class UnsupportedFamilyError(MatroidError):
    pass


def _c(x):
    return Poly([Fraction(x)])


def _lin(a, b):
    """a + b*eps"""
    return Poly([Fraction(a), Fraction(b)])


def _col(*entries):
    return tuple(e if isinstance(e, Poly) else _c(e) for e in entries)


def _pascal_aux():
    # Pascal minus its point 1, reindexed 2..9 -> 1..8; free parameters fixed
    # at x=2, y=3.  Old labels: 9,4,5,6 are the frame, 2,3,7,8 carry eps.
    m = fixtures.get("pascal").delete({1})
    fam = ProjectiveFamily({
        8: _col(1, 0, 0),            # old 9
        3: _col(0, 1, 0),            # old 4
        4: _col(0, 0, 1),            # old 5
        5: _col(1, 1, 1),            # old 6
        1: _col(1, _lin(0, 1), _lin(0, 1)),        # old 2: (1, eps, eps)
        2: _col(2, 0, _lin(0, 3)),                 # old 3: (x, 0, eps*y)
        6: _col(1, 2, _lin(0, 1)),                 # old 7: (1, x, eps)
        7: _col(2, 6, _lin(0, 3)),                 # old 8: (x, x*y, eps*y)
    })
    expected = {8: vec(1, 0, 0), 3: vec(0, 1, 0), 4: vec(0, 0, 1),
                5: vec(1, 1, 1), 1: vec(1, 0, 0), 2: vec(1, 0, 0),
                6: vec(1, 2, 0), 7: vec(1, 3, 0)}
    return fam, m, expected


def _pappus_m9():
    return fixtures.get("pappus").delete({9})


def _pappus_a1():
    # identify {1,2,7}; z = 2
    m = _pappus_m9()
    fam = ProjectiveFamily({
        1: _col(1, 0, 0), 4: _col(0, 1, 0), 5: _col(0, 0, 1), 8: _col(1, 1, 1),
        3: _col(1, 3, 1), 6: _col(0, 1, 1),
        2: _col(1, _lin(0, 3), _lin(0, 1)),
        7: _col(1, 0, _lin(0, 1)),
    })
    expected = {1: vec(1, 0, 0), 4: vec(0, 1, 0), 5: vec(0, 0, 1),
                8: vec(1, 1, 1), 3: vec(1, 3, 1), 6: vec(0, 1, 1),
                2: vec(1, 0, 0), 7: vec(1, 0, 0)}
    return fam, m, expected


def _pappus_b1():
    # identify {1,2,6} and put it on a line with 4,5,7; z = 2
    m = _pappus_m9()
    fam = ProjectiveFamily({
        1: _col(1, 0, 0), 5: _col(0, 1, 0), 3: _col(0, 0, 1), 8: _col(1, 1, 1),
        4: _col(1, 1, _lin(0, 1)),
        2: _col(1, 0, _lin(0, 2)),
        6: _col(1, _lin(0, 1), _lin(0, 1)),
        7: _col(1, 2, 0),
    })
    expected = {1: vec(1, 0, 0), 5: vec(0, 1, 0), 3: vec(0, 0, 1),
                8: vec(1, 1, 1), 4: vec(1, 1, 0), 2: vec(1, 0, 0),
                6: vec(1, 0, 0), 7: vec(1, 2, 0)}
    return fam, m, expected


def _pappus_c1():
    # identify the degree-two pair {2,3}; z = 2
    m = _pappus_m9()
    fam = ProjectiveFamily({
        1: _col(1, 0, 0), 5: _col(0, 1, 0), 3: _col(0, 0, 1), 8: _col(1, 1, 1),
        4: _col(1, 1, 3),
        2: _col(_lin(0, 1), 0, -3),
        6: _col(1, 3, 3),
        7: _col(_lin(1, 1), 1, 0),
    })
    expected = {1: vec(1, 0, 0), 5: vec(0, 1, 0), 3: vec(0, 0, 1),
                8: vec(1, 1, 1), 4: vec(1, 1, 3), 2: vec(0, 0, 1),
                6: vec(1, 3, 3), 7: vec(1, 1, 0)}
    return fam, m, expected


def _pappus_d1():
    # identify {1,2} and {4,5}; w = 1/2, columns cleared of denominators
    m = _pappus_m9()
    fam = ProjectiveFamily({
        1: _col(1, 0, 0), 5: _col(0, 1, 0), 3: _col(0, 0, 1), 6: _col(1, 1, 1),
        4: _col(_lin(0, 1), 1, _lin(0, 1)),
        8: _col(_lin(0, 1), 1, 1),
        2: _col(1, 0, _lin(0, -1)),
        7: _col(_lin(1, 1), 1, 0),
    })
    expected = {1: vec(1, 0, 0), 5: vec(0, 1, 0), 3: vec(0, 0, 1),
                6: vec(1, 1, 1), 4: vec(0, 1, 0), 8: vec(0, 1, 1),
                2: vec(1, 0, 0), 7: vec(1, 1, 0)}
    return fam, m, expected


FAMILIES = {
    "pascal-aux": _pascal_aux,
    "pappus-a1": _pappus_a1,
    "pappus-b1": _pappus_b1,
    "pappus-c1": _pappus_c1,
    "pappus-d1": _pappus_d1,
}

UNSUPPORTED = {
    "pappus-b-sqrt": "the V_B family needs sqrt(-3-4*eps), which is not in Q[eps]",
    "third93-k-cyclotomic": "the K family needs a root of z^2+z+1, which is not rational",
}


def names():
    return sorted(FAMILIES)


def get(name):
    """(family, target matroid, expected projective limit) for a named family."""
    if name in UNSUPPORTED:
        raise UnsupportedFamilyError(UNSUPPORTED[name])
    if name not in FAMILIES:
        raise MatroidError("unknown family %r" % name)
    return FAMILIES[name]()
