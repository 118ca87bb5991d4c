"""Named point-line configurations.

Line order matters: generator lists and liftability-matrix rows follow it.
`load(name_or_path)` resolves built-in names first, then JSON files; the
fixture directory can be overridden with the MVT_FIXTURES environment
variable.
"""

import os

from .matroid import Matroid, uniform

_DEFS = {
    # three concurrent lines through 7
    "three-lines": (7, [[1, 2, 7], [3, 4, 7], [5, 6, 7]]),
    # quadrilateral set
    "qs": (6, [[1, 2, 3], [1, 5, 6], [2, 4, 6], [3, 4, 5]]),
    "fano": (7, [[1, 2, 5], [3, 4, 5], [1, 3, 6], [2, 4, 6],
                 [2, 3, 7], [1, 4, 7], [5, 6, 7]]),
    # 3x3 grid: rows and columns only
    "grid3": (9, [[1, 2, 3], [4, 5, 6], [7, 8, 9],
                  [1, 4, 7], [2, 5, 8], [3, 6, 9]]),
    "pascal": (9, [[1, 6, 8], [1, 5, 7], [2, 4, 7], [2, 6, 9],
                   [3, 4, 8], [3, 5, 9], [7, 8, 9]]),
    "pappus": (9, [[1, 2, 3], [1, 6, 8], [1, 5, 7], [2, 4, 7], [2, 6, 9],
                   [3, 4, 8], [3, 5, 9], [7, 8, 9], [4, 5, 6]]),
    # the third 9_3 configuration: 9 points, 9 lines, all degrees 3
    "third93": (9, [[1, 2, 6], [1, 3, 5], [1, 8, 9], [2, 3, 4], [2, 7, 8],
                    [3, 7, 9], [4, 5, 8], [4, 6, 7], [5, 6, 9]]),
    # triangle cycle on 1,2,3 with one pendant line per cycle point
    "cactus12": (12, [[1, 2, 4], [2, 3, 5], [1, 3, 6],
                      [1, 7, 8], [2, 9, 10], [3, 11, 12]]),
    # same cycle, two pendant lines at 1 (the 14-column limit example)
    "cactus14": (14, [[1, 2, 4], [2, 3, 5], [1, 3, 6],
                      [1, 7, 8], [1, 9, 10], [3, 11, 12], [2, 13, 14]]),
    # triangle cycle on 1,3,5 with a two-line tail from 1
    "cactus11": (11, [[1, 2, 3], [3, 4, 5], [1, 5, 6],
                      [1, 7, 8], [8, 9, 10], [1, 10, 11]]),
    # forest built by gluing six lines onto [1,4,7]+[1,2,3]
    "forest15": (15, [[1, 4, 7], [1, 2, 3], [2, 5, 8], [3, 6, 9],
                      [6, 10, 11], [6, 12, 13], [9, 14, 15]]),
}

# the classifier fixtures of the acceptance suite
NAMED = ("pascal", "pappus", "fano", "qs", "grid3",
         "three-lines", "third93", "cactus12")


def names():
    return sorted(_DEFS)


def get(name):
    if name.startswith("u2,") or name.startswith("u3,"):
        n = int(name[1])
        return uniform(n, int(name.split(",")[1]))
    if name not in _DEFS:
        raise KeyError("unknown fixture %r" % name)
    d, lines = _DEFS[name]
    return Matroid(d, (), (), [frozenset(l) for l in lines])


def fixture_dir():
    return os.environ.get("MVT_FIXTURES", "")


def load(name_or_path):
    """A built-in fixture by name, or a matroid from a JSON file."""
    try:
        return get(name_or_path)
    except KeyError:
        pass
    path = name_or_path
    if not os.path.exists(path) and fixture_dir():
        cand = os.path.join(fixture_dir(), name_or_path)
        for p in (cand, cand + ".json"):
            if os.path.exists(p):
                path = p
                break
    if not os.path.exists(path):
        raise KeyError("no fixture or file named %r" % name_or_path)
    with open(path) as fh:
        return Matroid.from_json(fh.read())
