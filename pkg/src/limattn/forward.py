"""Forward simulation of every generative choice model.

These simulators are both the user-facing generators and the internal
verification oracles: an explanation is accepted only if simulating it
reproduces the observed choice function bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import (
    ChoiceCorrespondence,
    ChoiceFunction,
    GroundSet,
    LinearOrder,
    Relation,
    bits_of,
    max_elements,
)
from .errors import CyclicShortlistError


@dataclass(frozen=True)
class FilterOrder:
    """Limited attention: pick the preference-best considered alternative."""

    gamma: ChoiceCorrespondence
    order: LinearOrder

    def __post_init__(self):
        if self.gamma.ground != self.order.ground:
            raise ValueError("filter and order live on different ground sets")


@dataclass(frozen=True)
class Shortlist:
    """Two-stage choice: survive a strict partial order, then maximize."""

    dominance: Relation
    order: LinearOrder

    def __post_init__(self):
        if self.dominance.ground != self.order.ground:
            raise ValueError("dominance and order live on different ground sets")


@dataclass(frozen=True)
class ListTournament:
    """Pairwise elimination along a list.

    The defining recursion grounds out on two-element menus, where it is
    self-referential; binary outcomes therefore enter the model as an
    explicit tournament (a complete asymmetric relation, read
    ``winner beats loser``). ``list_order`` ranks the list's last-examined
    alternative first, matching the maximal-first convention used for
    preference orders.
    """

    list_order: LinearOrder
    tournament: Relation

    def __post_init__(self):
        ground = self.list_order.ground
        if self.tournament.ground != ground:
            raise ValueError("list and tournament live on different ground sets")
        rows = self.tournament.rows
        for i in range(ground.n):
            for j in range(i + 1, ground.n):
                fwd = (rows[i] >> j) & 1
                back = (rows[j] >> i) & 1
                if fwd == back:
                    raise ValueError(
                        "tournament must pick exactly one winner per pair; "
                        f"bad pair {ground.labels[i]},{ground.labels[j]}"
                    )

    def winner(self, a: int, b: int) -> int:
        return a if self.tournament.has(a, b) else b


@dataclass(frozen=True)
class CerModel:
    """Conspicuity-driven choice: the most conspicuous alternative picks
    which preference order decides the menu.

    References are injective utilities in the source formulation; only
    their induced orders matter for an argmax, so each reference is
    stored as a linear order, one per alternative.
    """

    conspicuity: LinearOrder
    references: tuple[LinearOrder, ...]

    def __post_init__(self):
        ground = self.conspicuity.ground
        refs = tuple(self.references)
        object.__setattr__(self, "references", refs)
        if len(refs) != ground.n:
            raise ValueError("need one reference order per alternative")
        if any(ref.ground != ground for ref in refs):
            raise ValueError("reference orders live on a different ground set")


Model = Union[FilterOrder, Shortlist, ListTournament, CerModel]


def _ground_of(model: Model) -> GroundSet:
    if isinstance(model, FilterOrder):
        return model.gamma.ground
    if isinstance(model, Shortlist):
        return model.order.ground
    if isinstance(model, ListTournament):
        return model.list_order.ground
    return model.conspicuity.ground


def simulate(model: Model) -> ChoiceFunction:
    """Run a model on every menu, producing a total choice function."""
    ground = _ground_of(model)
    size = 1 << ground.n
    choices = [-1] * size

    if isinstance(model, FilterOrder):
        for mask in range(1, size):
            choices[mask] = model.order.best_in(model.gamma.images[mask])
    elif isinstance(model, Shortlist):
        for mask in range(1, size):
            surviving = max_elements(mask, model.dominance)
            if not surviving:
                raise CyclicShortlistError(
                    f"dominance cycles inside {ground.format_menu(mask)}; no shortlist"
                )
            choices[mask] = model.order.best_in(surviving)
    elif isinstance(model, ListTournament):
        # Clearing a bit shrinks the mask, so ascending order is a valid
        # evaluation order for the elimination recursion.
        for mask in range(1, size):
            if mask.bit_count() == 1:
                choices[mask] = next(bits_of(mask))
                continue
            last = model.list_order.best_in(mask)
            survivor = choices[mask ^ (1 << last)]
            choices[mask] = model.winner(survivor, last)
    elif isinstance(model, CerModel):
        for mask in range(1, size):
            ref = model.conspicuity.best_in(mask)
            choices[mask] = model.references[ref].best_in(mask)
    else:
        raise TypeError(f"unknown model {model!r}")

    return ChoiceFunction(ground, tuple(choices))


def check_list_rational(c: ChoiceFunction, list_order: LinearOrder) -> bool:
    """Does pairwise elimination along this list reproduce ``c``?

    Tests the defining recursion directly, with both inner values taken
    from ``c`` itself: for every menu, the choice must equal the
    head-to-head outcome between the list's last alternative there and
    the choice from the rest.
    """
    choices = c.choices
    for mask in c.menus(min_size=2):
        last = list_order.best_in(mask)
        survivor = choices[mask ^ (1 << last)]
        pair = (1 << survivor) | (1 << last)
        if choices[mask] != choices[pair]:
            return False
    return True
