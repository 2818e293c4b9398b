"""Revealed relations extracted from an observed choice function.

Six binary relations can be read off a choice dataset, each by
quantifying over all menus. Their structural properties (asymmetry,
acyclicity) are what the classifier tests. All computations here are
exact extensional scans; with menus as bitmasks the nested-menu scans
run in O(3^n).
"""

from __future__ import annotations

from enum import Enum

from .core import ChoiceFunction, Relation, Switch, bits_of, submenus
from .errors import NotASwitchError


class RevealedKind(Enum):
    """The revealed relations this package knows how to compute.

    P          attention-revealed preference: removing y flips a menu
               where x was chosen.
    RC         shortlist-revealed dominance (three adjoin/remove cases).
    SALIENCE   x is revealed salient over the rest of a menu whose
               choice its removal flips.
    FC         revealed-to-follow (list-position evidence, three cases).
    PPI        path-independence-revealed preference.
    PTILDE     switch-survivor relation: everything left in a flipped
               menu over the removed alternative.
    """

    P = "P"
    RC = "Rc"
    SALIENCE = "salience"
    FC = "Fc"
    PPI = "PPI"
    PTILDE = "Ptilde"


def find_switches(c: ChoiceFunction, minimal_only: bool = False) -> list[Switch]:
    """All switches of ``c``, outer menu ascending then inner ascending.

    A pair (inner, outer) qualifies when inner is a proper submenu, the
    outer choice stays available inside, and the inner choice differs.
    With ``minimal_only`` the scan keeps only pairs one removal apart.
    """
    out: list[Switch] = []
    choices = c.choices
    for outer in c.menus(min_size=2):
        ch_outer = choices[outer]
        if minimal_only:
            inners = (outer ^ (1 << x) for x in bits_of(outer) if x != ch_outer)
        else:
            inners = (s for s in submenus(outer, proper=True) if (s >> ch_outer) & 1)
        for inner in sorted(inners):
            ch_inner = choices[inner]
            if ch_inner != ch_outer and (inner >> ch_outer) & 1:
                out.append(Switch(c.ground, inner, outer, ch_inner, ch_outer))
    return out


def reduce_switch(c: ChoiceFunction, s: Switch) -> Switch:
    """Shrink a switch to a minimal one nested between its menus.

    Deterministic descent: repeatedly drop, in label order, removable
    alternatives whose absence leaves the chosen element alone; once no
    such drop remains, the label-smallest leftover gap witnesses a
    minimal switch (C minus x, C) with inner <= C minus x and C <= outer.
    """
    choices = c.choices
    if (
        s.inner & ~s.outer
        or s.inner == s.outer
        or choices[s.outer] != s.outer_choice
        or choices[s.inner] != s.inner_choice
        or not (s.inner >> s.outer_choice) & 1
    ):
        raise NotASwitchError(f"not a switch of this choice function: {s.describe()}")

    current = s.outer
    shrunk = True
    while shrunk:
        shrunk = False
        for x in bits_of(current & ~s.inner):
            smaller = current ^ (1 << x)
            if choices[smaller] == choices[current]:
                current = smaller
                shrunk = True
                break
    # Every further drop toward the inner menu now flips the choice.
    x = next(bits_of(current & ~s.inner))
    inner = current ^ (1 << x)
    return Switch(c.ground, inner, current, choices[inner], choices[current])


def _reveal_p(c: ChoiceFunction) -> Relation:
    # x P y: some menu chooses x and stops doing so once y is removed.
    rows = [0] * c.ground.n
    choices = c.choices
    for menu in c.menus(min_size=2):
        ch = choices[menu]
        for y in bits_of(menu):
            if y != ch and choices[menu ^ (1 << y)] != ch:
                rows[ch] |= 1 << y
    return Relation(c.ground, tuple(rows))


def _reveal_salience(c: ChoiceFunction) -> Relation:
    # x salient over every other member of a menu whose choice flips
    # when x is removed.
    rows = [0] * c.ground.n
    choices = c.choices
    for menu in c.menus(min_size=2):
        ch = choices[menu]
        for x in bits_of(menu):
            if x == ch:
                continue
            rest = menu ^ (1 << x)
            if choices[rest] != ch:
                rows[x] |= rest
    return Relation(c.ground, tuple(rows))


def _reveal_ptilde(c: ChoiceFunction) -> Relation:
    # Everything surviving in a flipped menu sits above the removed
    # alternative. We require the survivor distinct from the removed
    # one, keeping the relation irreflexive.
    rows = [0] * c.ground.n
    choices = c.choices
    for menu in c.menus(min_size=2):
        ch = choices[menu]
        for y in bits_of(menu):
            if y == ch:
                continue
            rest = menu ^ (1 << y)
            if choices[rest] != ch:
                ybit = 1 << y
                for x in bits_of(rest):
                    rows[x] |= ybit
    return Relation(c.ground, tuple(rows))


def _supersets(c: ChoiceFunction, pair_mask: int):
    rest = c.ground.full_mask & ~pair_mask
    yield pair_mask
    for extra in submenus(rest):
        yield pair_mask | extra


def _reveal_rc(c: ChoiceFunction) -> Relation:
    # Three dominance signals per ordered pair; the adjoined element is
    # always quantified over menus not already containing it, which the
    # superset-of-the-pair scan encodes directly.
    ground = c.ground
    choices = c.choices
    rows = list(_reveal_p(c).rows)  # case (i) is exactly P
    for x in range(ground.n):
        for y in range(ground.n):
            if x == y or (rows[x] >> y) & 1:
                continue
            pair = (1 << x) | (1 << y)
            c_pair = choices[pair]
            if c_pair == x:
                # (ii): adding x to some menu hands the win to y.
                for b in _supersets(c, pair):
                    if b != pair and choices[b] == y:
                        rows[x] |= 1 << y
                        break
            if c_pair == y:
                # (iii): y wins the pair and some menu, yet loses once x joins.
                for b in _supersets(c, pair):
                    if choices[b] != y and choices[b ^ (1 << x)] == y:
                        rows[x] |= 1 << y
                        break
    return Relation(ground, tuple(rows))


def _reveal_fc(c: ChoiceFunction) -> Relation:
    ground = c.ground
    choices = c.choices
    rows = list(_reveal_p(c).rows)  # case (ii) is exactly P
    for x in range(ground.n):
        for y in range(ground.n):
            if x == y or (rows[x] >> y) & 1:
                continue
            pair = (1 << x) | (1 << y)
            c_pair = choices[pair]
            if c_pair == y:
                # (i): y beats x head-to-head but x wins a menu with y present.
                for b in _supersets(c, pair):
                    if choices[b] == x:
                        rows[x] |= 1 << y
                        break
            if c_pair == x:
                # (iii): x wins the pair and a menu, yet loses once y joins.
                for b in _supersets(c, pair):
                    if choices[b] != x and choices[b ^ (1 << y)] == x:
                        rows[x] |= 1 << y
                        break
    return Relation(ground, tuple(rows))


def _reveal_ppi(c: ChoiceFunction) -> Relation:
    # x over y when x wins some menu containing y that sits inside a
    # menu whose choice is sensitive to removing y. The inner menu may
    # equal the outer one: that case is exactly the attention-revealed
    # relation, and dropping it would break the containment that keeps
    # path-independent choice inside plain limited attention.
    rows = [0] * c.ground.n
    choices = c.choices
    for outer in c.menus(min_size=2):
        ch_outer = choices[outer]
        for y in bits_of(outer):
            if choices[outer ^ (1 << y)] == ch_outer:
                continue
            ybit = 1 << y
            for inner in submenus(outer):
                if inner & ybit:
                    x = choices[inner]
                    if x != y:
                        rows[x] |= ybit
    return Relation(c.ground, tuple(rows))


_DISPATCH = {
    RevealedKind.P: _reveal_p,
    RevealedKind.RC: _reveal_rc,
    RevealedKind.SALIENCE: _reveal_salience,
    RevealedKind.FC: _reveal_fc,
    RevealedKind.PPI: _reveal_ppi,
    RevealedKind.PTILDE: _reveal_ptilde,
}


def reveal(c: ChoiceFunction, kind: RevealedKind) -> Relation:
    """Compute a revealed relation by exhaustive scan over all menus."""
    return _DISPATCH[kind](c)
