"""Benchmark catalog: choice functions and consideration maps with
externally documented classifications.

The seven choice functions c1..c7 witness every realizable cell of the
class diagram (each single class, each pairwise intersection, and the
triple intersection beyond rationalizability). The three remark
correspondences each satisfy exactly two of the three optimal-filter
conditions, and the path-independent table explains c4. Payloads are
kept as canonical file text so they stay human-auditable; the
``verify-paper`` command re-derives every documented property.
"""

from __future__ import annotations

from .core import ChoiceCorrespondence, ChoiceFunction, GroundSet, LinearOrder, Relation
from .fileformat import parse_choice_file, parse_corr_file

C1_TEXT = """\
ground: v w x y z
vw -> w
vx -> x
wx -> w
vwx -> w
vy -> v
wy -> y
vwy -> v
xy -> y
vxy -> y
wxy -> y
vwxy -> y
vz -> v
wz -> w
vwz -> w
xz -> z
vxz -> z
wxz -> w
vwxz -> w
yz -> z
vyz -> v
wyz -> z
vwyz -> v
xyz -> z
vxyz -> z
wxyz -> z
vwxyz -> z
"""

C2_TEXT = """\
ground: w x y z
wx -> x
wy -> w
xy -> y
wxy -> y
wz -> w
xz -> x
wxz -> x
yz -> y
wyz -> w
xyz -> x
wxyz -> x
"""

C3_TEXT = """\
ground: w x y z
wx -> w
wy -> y
xy -> x
wxy -> y
wz -> z
xz -> x
wxz -> w
yz -> y
wyz -> y
xyz -> x
wxyz -> y
"""

C4_TEXT = """\
ground: w x y z
wx -> w
wy -> y
xy -> x
wxy -> w
wz -> z
xz -> x
wxz -> x
yz -> y
wyz -> y
xyz -> x
wxyz -> x
"""

C5_TEXT = """\
ground: v w x y z
vw -> v
vx -> x
wx -> w
vwx -> w
vy -> v
wy -> w
vwy -> v
xy -> x
vxy -> x
wxy -> w
vwxy -> w
vz -> z
wz -> z
vwz -> z
xz -> z
vxz -> z
wxz -> z
vwxz -> z
yz -> y
vyz -> v
wyz -> w
vwyz -> v
xyz -> x
vxyz -> x
wxyz -> w
vwxyz -> w
"""

C6_TEXT = """\
ground: w x y z
wx -> w
wy -> y
xy -> x
wxy -> y
wz -> z
xz -> x
wxz -> x
yz -> y
wyz -> y
xyz -> x
wxyz -> x
"""

C7_TEXT = """\
ground: x y z
xy -> y
xz -> x
yz -> z
xyz -> x
"""

# Identity everywhere except the full menu drops x.
REMARK_GAMMA_TEXT = """\
ground: x y z
xy => xy
xz => xz
yz => yz
xyz => yz
"""

# Identity everywhere except the pair xy drops y.
REMARK_GAMMA_PRIME_TEXT = """\
ground: x y z
xy => x
xz => xz
yz => yz
xyz => xyz
"""

REMARK_GAMMA_DOUBLE_PRIME_TEXT = """\
ground: w x y z
wx => w
wy => wy
xy => x
wxy => w
wz => w
xz => x
wxz => w
yz => y
wyz => wy
xyz => x
wxyz => w
"""

# Path-independent consideration that explains c4 under y > w > x > z.
C4_PI_FILTER_TEXT = """\
ground: w x y z
wx => wx
wy => wy
xy => x
wxy => wx
wz => z
xz => xz
wxz => xz
yz => yz
wyz => yz
xyz => xz
wxyz => xz
"""


def c1() -> ChoiceFunction:
    return parse_choice_file(C1_TEXT)


def c2() -> ChoiceFunction:
    return parse_choice_file(C2_TEXT)


def c3() -> ChoiceFunction:
    return parse_choice_file(C3_TEXT)


def c4() -> ChoiceFunction:
    return parse_choice_file(C4_TEXT)


def c5() -> ChoiceFunction:
    return parse_choice_file(C5_TEXT)


def c6() -> ChoiceFunction:
    return parse_choice_file(C6_TEXT)


def c7() -> ChoiceFunction:
    return parse_choice_file(C7_TEXT)


def remark_gamma() -> ChoiceCorrespondence:
    return parse_corr_file(REMARK_GAMMA_TEXT)


def remark_gamma_prime() -> ChoiceCorrespondence:
    return parse_corr_file(REMARK_GAMMA_PRIME_TEXT)


def remark_gamma_double_prime() -> ChoiceCorrespondence:
    return parse_corr_file(REMARK_GAMMA_DOUBLE_PRIME_TEXT)


def c4_pi_filter() -> ChoiceCorrespondence:
    return parse_corr_file(C4_PI_FILTER_TEXT)


def c4_pi_order() -> LinearOrder:
    g = c4().ground
    return LinearOrder.from_labels(g, ("y", "w", "x", "z"))


# Documented two-stage descriptions: (first-stage pairs, preference).
def c1_documented_pair() -> tuple[Relation, LinearOrder]:
    g = c1().ground
    stage = Relation.from_label_pairs(g, [("x", "v"), ("y", "w")])
    return stage, LinearOrder.from_labels(g, ("w", "v", "z", "y", "x"))


def c4_documented_pair() -> tuple[Relation, LinearOrder]:
    g = c4().ground
    stage = Relation.from_label_pairs(g, [("x", "y"), ("z", "w")])
    return stage, LinearOrder.from_labels(g, ("y", "w", "x", "z"))


def c5_documented_pair() -> tuple[Relation, LinearOrder]:
    g = c5().ground
    stage = Relation.from_label_pairs(g, [("x", "v"), ("y", "z")])
    return stage, LinearOrder.from_labels(g, ("z", "v", "w", "x", "y"))


def c7_documented_pair() -> tuple[Relation, LinearOrder]:
    g = c7().ground
    stage = Relation.from_label_pairs(g, [("z", "y")])
    return stage, LinearOrder.from_labels(g, ("y", "x", "z"))


# Documented lists (last-examined alternative first).
def c3_documented_list() -> LinearOrder:
    return LinearOrder.from_labels(c3().ground, ("y", "w", "x", "z"))


def c5_documented_list() -> LinearOrder:
    return LinearOrder.from_labels(c5().ground, ("w", "v", "x", "z", "y"))


def c6_documented_list() -> LinearOrder:
    return LinearOrder.from_labels(c6().ground, ("y", "x", "w", "z"))


def c7_documented_list() -> LinearOrder:
    return LinearOrder.from_labels(c7().ground, ("x", "y", "z"))


# Documented salience relations, as label pairs (salient item first).
C2_SALIENCE = (
    ("z", "w"), ("z", "x"), ("z", "y"),
    ("x", "w"), ("x", "y"),
)

C6_SALIENCE = (
    ("z", "w"), ("z", "x"), ("z", "y"),
    ("w", "x"), ("w", "y"),
)

# Documented path-independence-revealed preference of c4 (exact).
C4_PPI = (("w", "x"), ("x", "z"), ("y", "z"), ("y", "w"))

# Documented class memberships. Only documented flags are listed;
# the verification suite also derives the implied plain-attention flag.
EXPECTED_FLAGS: dict[str, dict[str, bool]] = {
    "c1": {"cola": True, "csla": False, "ccla": False},
    "c2": {"cola": False, "csla": True, "ccla": False},
    "c3": {"cola": False, "csla": False, "ccla": True, "pilc": False},
    "c4": {"cola": True, "csla": True, "ccla": False, "pilc": True},
    "c5": {"cola": True, "csla": False, "ccla": True},
    "c6": {"cola": False, "csla": True, "ccla": True},
    "c7": {"cola": True, "csla": True, "ccla": True, "rat": False},
}

CHOICE_FIXTURES = {
    "c1": c1,
    "c2": c2,
    "c3": c3,
    "c4": c4,
    "c5": c5,
    "c6": c6,
    "c7": c7,
}

# Which single optimal-filter condition each remark correspondence violates.
REMARK_EXPECTED_VIOLATION = {
    "remark1-gamma": "b",
    "remark1-gamma-prime": "c",
    "remark1-gamma-double-prime": "a",
}

CORR_FIXTURES = {
    "remark1-gamma": remark_gamma,
    "remark1-gamma-prime": remark_gamma_prime,
    "remark1-gamma-double-prime": remark_gamma_double_prime,
}


def ground_n(n: int) -> GroundSet:
    """Default ground set for enumeration: the first n letters."""
    return GroundSet(tuple("abcdefghijklmnop"[:n]))
