"""Axioms on choice functions and filter properties on correspondences.

Every check here is an exact universal scan over all menus (and menu
pairs where the property demands it). Failing checks report the
lexicographically first witness: menus ascending in set encoding, then
elements ascending by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .core import (
    ChoiceCorrespondence,
    ChoiceFunction,
    LinearOrder,
    bits_of,
    submenus,
)
from .errors import MissingOrderError
from .relations import find_switches


class FilterKind(Enum):
    """Correspondence properties decidable by :func:`is_filter`.

    The salience-flavoured kinds and the competitive kind are defined
    relative to a preference order and require one.
    """

    ATTENTION = "attention"
    OPTIMAL_ATTENTION = "optimal-attention"
    SALIENT = "salient"
    SELECTIVE_SALIENT = "selective-salient"
    COMPETITIVE = "competitive"
    COMPETITION = "competition"
    PATH_INDEPENDENT = "path-independent"


_ORDER_REQUIRED = {FilterKind.SALIENT, FilterKind.SELECTIVE_SALIENT, FilterKind.COMPETITIVE}


@dataclass(frozen=True)
class FilterWitness:
    """First counterexample of a failed filter check."""

    menus: tuple[int, ...]
    elements: tuple[int, ...]
    detail: str

    def render(self, ground) -> str:
        menus = ", ".join(ground.format_menu(m) for m in self.menus)
        elems = ", ".join(ground.labels[e] for e in self.elements)
        parts = [p for p in (f"menus {menus}" if menus else "", f"elements {elems}" if elems else "") if p]
        return f"{self.detail} ({'; '.join(parts)})"


@dataclass(frozen=True)
class FilterCheck:
    ok: bool
    kind: FilterKind
    condition: str | None = None
    witness: FilterWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def axiom_alpha(c: ChoiceFunction) -> bool:
    """Contraction consistency: no switch exists.

    Equivalent to the absence of minimal switches, which is what the
    scan tests.
    """
    choices = c.choices
    for menu in c.menus(min_size=2):
        ch = choices[menu]
        for x in bits_of(menu):
            if x != ch and choices[menu ^ (1 << x)] != ch:
                return False
    return True


def art(c: ChoiceFunction) -> bool:
    """Revealed-temptation consistency.

    True when every menu B holds some member x such that no menu pair
    inside B with x in the smaller menu is a switch. Switch pairs are
    reduced to minimal ones first, which is equivalent and much cheaper.
    """
    minimal = [(s.inner, s.outer) for s in find_switches(c, minimal_only=True)]
    for menu in c.menus(min_size=2):
        involved = 0
        for inner, outer in minimal:
            if outer & ~menu == 0:
                involved |= inner
        if menu & ~involved == 0:
            return False
    return True


def corr_axiom(corr: ChoiceCorrespondence, which: str) -> bool:
    """Contraction (alpha), expansion (gamma), or dominance (delta) axiom.

    alpha: membership in an image survives into every submenu.
    gamma: membership in two images survives into their union.
    delta: a two-element image forbids either element from becoming the
    singleton image of a larger menu.
    """
    images = corr.images
    if which == "alpha":
        for outer in corr.menus(min_size=2):
            img = images[outer]
            for inner in submenus(outer, proper=True):
                if img & inner & ~images[inner]:
                    return False
        return True
    if which == "gamma":
        menus = list(corr.menus())
        for a in menus:
            img_a = images[a]
            for b in menus:
                both = img_a & images[b]
                if both and both & ~images[a | b]:
                    return False
        return True
    if which == "delta":
        for outer in corr.menus(min_size=2):
            img_outer = images[outer]
            if img_outer.bit_count() != 1:
                continue
            for inner in submenus(outer, proper=True):
                img_inner = images[inner]
                if img_inner.bit_count() >= 2 and img_outer & img_inner:
                    return False
        return True
    raise ValueError(f"unknown correspondence axiom {which!r}")


def _fail(kind: FilterKind, condition: str, menus, elements, detail) -> FilterCheck:
    return FilterCheck(False, kind, condition, FilterWitness(tuple(menus), tuple(elements), detail))


def _check_attention(corr: ChoiceCorrespondence, kind=FilterKind.ATTENTION) -> FilterCheck:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        for x in bits_of(menu & ~img):
            if images[menu ^ (1 << x)] != img:
                return _fail(
                    kind, "unconsidered-removal", (menu,), (x,),
                    "removing an unconsidered alternative changed the image",
                )
    return FilterCheck(True, kind)


def _optimal_condition_a(corr: ChoiceCorrespondence) -> Iterator[FilterCheck]:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        for x in bits_of(menu & ~img):
            if images[menu ^ (1 << x)] & ~img:
                yield _fail(
                    FilterKind.OPTIMAL_ATTENTION, "a", (menu,), (x,),
                    "removing an unconsidered alternative grew the image",
                )


def _optimal_condition_b(corr: ChoiceCorrespondence) -> Iterator[FilterCheck]:
    images = corr.images
    for menu in corr.menus(min_size=2):
        for x in bits_of(menu):
            rest_img = images[menu ^ (1 << x)]
            for y in bits_of(rest_img & ~images[menu]):
                if y != x and (images[(1 << x) | (1 << y)] >> y) & 1:
                    yield _fail(
                        FilterKind.OPTIMAL_ATTENTION, "b", (menu,), (x, y),
                        "alternative considered head-to-head and without the newcomer "
                        "dropped out of the larger image",
                    )


def _optimal_condition_c(corr: ChoiceCorrespondence) -> Iterator[FilterCheck]:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        for x in bits_of(menu):
            leaked = (img & ~(1 << x)) & ~images[menu ^ (1 << x)]
            if leaked:
                yield _fail(
                    FilterKind.OPTIMAL_ATTENTION, "c", (menu,), (x, next(bits_of(leaked))),
                    "image member vanished when an unrelated alternative was removed",
                )


def optimal_filter_conditions(corr: ChoiceCorrespondence) -> dict[str, FilterCheck]:
    """Evaluate the three optimal-filter conditions independently."""
    out: dict[str, FilterCheck] = {}
    for name, gen in (("a", _optimal_condition_a), ("b", _optimal_condition_b), ("c", _optimal_condition_c)):
        out[name] = next(gen(corr), FilterCheck(True, FilterKind.OPTIMAL_ATTENTION))
    return out


def _check_optimal(corr: ChoiceCorrespondence) -> FilterCheck:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        for x in bits_of(menu):
            rest = menu ^ (1 << x)
            rest_img = images[rest]
            if not (img >> x) & 1 and rest_img & ~img:
                return _fail(
                    FilterKind.OPTIMAL_ATTENTION, "a", (menu,), (x,),
                    "removing an unconsidered alternative grew the image",
                )
            for y in bits_of(rest_img & ~img):
                if y != x and (images[(1 << x) | (1 << y)] >> y) & 1:
                    return _fail(
                        FilterKind.OPTIMAL_ATTENTION, "b", (menu,), (x, y),
                        "alternative considered head-to-head and without the newcomer "
                        "dropped out of the larger image",
                    )
            leaked = (img & ~(1 << x)) & ~rest_img
            if leaked:
                return _fail(
                    FilterKind.OPTIMAL_ATTENTION, "c", (menu,), (x, next(bits_of(leaked))),
                    "image member vanished when an unrelated alternative was removed",
                )
    return FilterCheck(True, FilterKind.OPTIMAL_ATTENTION)


def _check_salient(corr: ChoiceCorrespondence, order: LinearOrder) -> FilterCheck:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        worst = order.worst_in(menu)
        top_img = order.best_in(img)
        for x in bits_of(menu):
            if x == worst or x == top_img:
                continue
            if img & ~(1 << x) != images[menu ^ (1 << x)]:
                return _fail(
                    FilterKind.SALIENT, "non-salient-removal", (menu,), (x,),
                    "removal of a non-salient alternative disturbed the image",
                )
    return FilterCheck(True, FilterKind.SALIENT)


def _check_selective_salient(corr: ChoiceCorrespondence, order: LinearOrder) -> FilterCheck:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        top_img = order.best_in(img)
        for x in bits_of(menu):
            if x == top_img:
                continue
            if img & ~(1 << x) != images[menu ^ (1 << x)]:
                return _fail(
                    FilterKind.SELECTIVE_SALIENT, "non-top-removal", (menu,), (x,),
                    "removal below the top considered alternative disturbed the image",
                )
    return FilterCheck(True, FilterKind.SELECTIVE_SALIENT)


def _check_competitive(corr: ChoiceCorrespondence, order: LinearOrder) -> FilterCheck:
    images = corr.images
    for menu in corr.menus(min_size=2):
        img = images[menu]
        for x in bits_of(menu & ~img):
            if images[menu ^ (1 << x)] != img:
                return _fail(
                    FilterKind.COMPETITIVE, "a", (menu,), (x,),
                    "removing an unconsidered alternative changed the image",
                )
        best = order.best_in(menu)
        rival = order.best_in(images[menu ^ (1 << best)])
        pair = (1 << best) | (1 << rival)
        in_pair = bool((images[pair] >> best) & 1)
        in_menu = bool((img >> best) & 1)
        if in_pair != in_menu:
            return _fail(
                FilterKind.COMPETITIVE, "b", (menu, pair), (best, rival),
                "top alternative's consideration disagrees between the menu "
                "and its head-to-head contest",
            )
    return FilterCheck(True, FilterKind.COMPETITIVE)


def _check_competition(corr: ChoiceCorrespondence) -> FilterCheck:
    images = corr.images
    for outer in corr.menus(min_size=2):
        img = images[outer]
        for inner in submenus(outer, proper=True):
            lost = img & inner & ~images[inner]
            if lost:
                return _fail(
                    FilterKind.COMPETITION, "persistence", (inner, outer), (next(bits_of(lost)),),
                    "considered alternative dropped out of a submenu",
                )
    return FilterCheck(True, FilterKind.COMPETITION)


def _check_path_independent(corr: ChoiceCorrespondence) -> FilterCheck:
    images = corr.images
    menus = list(corr.menus())
    for s in menus:
        img_s = images[s]
        for t in menus:
            if images[s | t] != images[img_s | t]:
                return _fail(
                    FilterKind.PATH_INDEPENDENT, "path", (s, t), (),
                    "image of the union differs from image of (image-of-first union second)",
                )
    return FilterCheck(True, FilterKind.PATH_INDEPENDENT)


def is_filter(
    corr: ChoiceCorrespondence,
    kind: FilterKind,
    order: LinearOrder | None = None,
) -> FilterCheck:
    """Decide a filter property, returning the first witness on failure."""
    if kind in _ORDER_REQUIRED:
        if order is None:
            raise MissingOrderError(f"filter kind {kind.value} needs a preference order")
        if order.ground != corr.ground:
            raise ValueError("order and correspondence live on different ground sets")
    if kind is FilterKind.ATTENTION:
        return _check_attention(corr)
    if kind is FilterKind.OPTIMAL_ATTENTION:
        return _check_optimal(corr)
    if kind is FilterKind.SALIENT:
        return _check_salient(corr, order)
    if kind is FilterKind.SELECTIVE_SALIENT:
        return _check_selective_salient(corr, order)
    if kind is FilterKind.COMPETITIVE:
        return _check_competitive(corr, order)
    if kind is FilterKind.COMPETITION:
        return _check_competition(corr)
    if kind is FilterKind.PATH_INDEPENDENT:
        return _check_path_independent(corr)
    raise ValueError(f"unknown filter kind {kind!r}")
