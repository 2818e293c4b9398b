"""Ground sets, menus, choice data, and order-theoretic primitives.

A menu is a bitmask over a :class:`GroundSet`: bit ``i`` set means the
alternative with index ``i`` is on the table. Ground sets are capped at
16 alternatives so every menu fits comfortably in a machine word and
full-power-set scans stay cheap.

All value types are immutable and every operation is pure: values can be
shared freely across threads or worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import (
    CyclicRelationError,
    EmptyMaximaError,
)

MAX_GROUND = 16
MIN_GROUND = 2


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submenus(mask: int, proper: bool = False) -> Iterator[int]:
    """Yield the nonempty submasks of ``mask`` in ascending order.

    With ``proper=True`` the mask itself is omitted. Ascending order is
    the deterministic enumeration order used throughout the package.
    """
    sub = mask & -mask if mask else 0
    while sub:
        if not (proper and sub == mask):
            yield sub
        if sub == mask:
            break
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class GroundSet:
    """The finite universe of alternatives.

    Attributes:
        labels: distinct nonempty tokens, one per alternative. The
            position of a label is its index for the lifetime of the
            value; menus are bitmasks over these indices.
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not MIN_GROUND <= len(labels) <= MAX_GROUND:
            raise ValueError(
                f"ground set needs {MIN_GROUND}..{MAX_GROUND} alternatives, got {len(labels)}"
            )
        if len(set(labels)) != len(labels):
            raise ValueError("ground set labels must be distinct")
        for lab in labels:
            if not lab or any(ch.isspace() for ch in lab):
                raise ValueError(f"bad label {lab!r}: labels are nonempty and whitespace-free")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown alternative {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits_of(mask))

    def menus(self, min_size: int = 1) -> Iterator[int]:
        """All menus (nonempty subsets) in ascending set encoding."""
        for mask in range(1, self.full_mask + 1):
            if mask.bit_count() >= min_size:
                yield mask

    def format_menu(self, mask: int) -> str:
        """Compact human form: ``wxy`` when labels are single characters."""
        labs = self.labels_of(mask)
        if all(len(lab) == 1 for lab in self.labels):
            return "".join(labs)
        return "{" + ",".join(labs) + "}"


@dataclass(frozen=True)
class Relation:
    """Irreflexive binary relation on a ground set.

    ``rows[i]`` is the bitmask of targets: bit ``j`` set means ``i`` is
    related to ``j`` (read: ``i`` beats / precedes / dominates ``j``).
    """

    ground: GroundSet
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.ground.n
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != n:
            raise ValueError("relation rows must match ground set size")
        full = self.ground.full_mask
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError("relation row references unknown alternatives")
            if row & (1 << i):
                raise ValueError(f"relation must be irreflexive; self-edge at {i}")

    @classmethod
    def empty(cls, ground: GroundSet) -> "Relation":
        return cls(ground, (0,) * ground.n)

    @classmethod
    def from_pairs(cls, ground: GroundSet, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * ground.n
        for i, j in pairs:
            rows[i] |= 1 << j
        return cls(ground, tuple(rows))

    @classmethod
    def from_label_pairs(cls, ground: GroundSet, pairs: Iterable[tuple[str, str]]) -> "Relation":
        return cls.from_pairs(ground, ((ground.index(a), ground.index(b)) for a, b in pairs))

    def has(self, i: int, j: int) -> bool:
        return bool(self.rows[i] & (1 << j))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.ground.n) for j in bits_of(self.rows[i]))

    def label_pairs(self) -> tuple[tuple[str, str], ...]:
        labs = self.ground.labels
        return tuple((labs[i], labs[j]) for i, j in self.pairs())

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def union(self, other: "Relation") -> "Relation":
        if other.ground != self.ground:
            raise ValueError("relations live on different ground sets")
        return Relation(self.ground, tuple(a | b for a, b in zip(self.rows, other.rows)))

    __or__ = union

    def converse(self) -> "Relation":
        rows = [0] * self.ground.n
        for i, j in self.pairs():
            rows[j] |= 1 << i
        return Relation(self.ground, tuple(rows))

    def is_subset_of(self, other: "Relation") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))


@dataclass(frozen=True)
class LinearOrder:
    """Strict linear order given as a ranking of indices, best first."""

    ground: GroundSet
    ranking: tuple[int, ...]
    ranks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        n = self.ground.n
        if sorted(ranking) != list(range(n)):
            raise ValueError("ranking must be a permutation of the alternative indices")
        ranks = [0] * n
        for pos, alt in enumerate(ranking):
            ranks[alt] = pos
        object.__setattr__(self, "ranks", tuple(ranks))

    @classmethod
    def from_labels(cls, ground: GroundSet, labels: Iterable[str]) -> "LinearOrder":
        return cls(ground, tuple(ground.index(lab) for lab in labels))

    def prefers(self, a: int, b: int) -> bool:
        return self.ranks[a] < self.ranks[b]

    def best_in(self, mask: int) -> int:
        """The unique maximal element of a nonempty menu."""
        if not mask:
            raise ValueError("empty menu has no best element")
        best = -1
        for i in bits_of(mask):
            if best < 0 or self.ranks[i] < self.ranks[best]:
                best = i
        return best

    def worst_in(self, mask: int) -> int:
        if not mask:
            raise ValueError("empty menu has no worst element")
        worst = -1
        for i in bits_of(mask):
            if worst < 0 or self.ranks[i] > self.ranks[worst]:
                worst = i
        return worst

    @property
    def top(self) -> int:
        return self.ranking[0]

    @property
    def bottom(self) -> int:
        return self.ranking[-1]

    def as_relation(self) -> Relation:
        rows = [0] * self.ground.n
        below = 0
        for alt in reversed(self.ranking):
            rows[alt] = below
            below |= 1 << alt
        return Relation(self.ground, tuple(rows))

    def label_ranking(self) -> tuple[str, ...]:
        return tuple(self.ground.labels[i] for i in self.ranking)


def label_order(ground: GroundSet) -> LinearOrder:
    """The identity ranking; default tiebreak for deterministic builds."""
    return LinearOrder(ground, tuple(range(ground.n)))


@dataclass(frozen=True)
class ChoiceFunction:
    """Total single-valued choice: one chosen member for every menu.

    ``choices[mask]`` is the chosen index for menu ``mask``; entry 0 is
    unused and fixed at -1. Construction checks totality, membership,
    and that singletons map to their sole member.
    """

    ground: GroundSet
    choices: tuple[int, ...]

    def __post_init__(self):
        choices = tuple(self.choices)
        object.__setattr__(self, "choices", choices)
        size = 1 << self.ground.n
        if len(choices) != size:
            raise ValueError(f"choice table needs {size} entries, got {len(choices)}")
        if choices[0] != -1:
            raise ValueError("entry 0 (empty menu) must be -1")
        for mask in range(1, size):
            ch = choices[mask]
            if not 0 <= ch < self.ground.n or not (mask >> ch) & 1:
                raise ValueError(
                    f"chosen element {ch} not a member of menu {self.ground.format_menu(mask)}"
                )

    @classmethod
    def from_table(cls, ground: GroundSet, table: Mapping[int, int]) -> "ChoiceFunction":
        """Build from a mask -> index map covering every menu of size >= 2."""
        choices = [-1] * (1 << ground.n)
        for i in range(ground.n):
            choices[1 << i] = i
        for mask, ch in table.items():
            choices[mask] = ch
        return cls(ground, tuple(choices))

    def choice(self, menu: int) -> int:
        if menu <= 0:
            raise ValueError("menu must be nonempty")
        return self.choices[menu]

    def choice_label(self, menu: int) -> str:
        return self.ground.labels[self.choice(menu)]

    def menus(self, min_size: int = 1) -> Iterator[int]:
        return self.ground.menus(min_size)


@dataclass(frozen=True)
class ChoiceCorrespondence:
    """Total set-valued choice: a nonempty submenu for every menu.

    Models consideration sets. ``images[mask]`` is the image bitmask;
    entry 0 is unused and fixed at 0.
    """

    ground: GroundSet
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        size = 1 << self.ground.n
        if len(images) != size:
            raise ValueError(f"image table needs {size} entries, got {len(images)}")
        if images[0] != 0:
            raise ValueError("entry 0 (empty menu) must be 0")
        for mask in range(1, size):
            img = images[mask]
            if img == 0 or img & ~mask:
                raise ValueError(
                    f"image of {self.ground.format_menu(mask)} must be a nonempty submenu"
                )

    @classmethod
    def identity(cls, ground: GroundSet) -> "ChoiceCorrespondence":
        return cls(ground, tuple([0] + list(range(1, 1 << ground.n))))

    @classmethod
    def from_table(cls, ground: GroundSet, table: Mapping[int, int]) -> "ChoiceCorrespondence":
        """Build from a mask -> image map; singletons default to themselves."""
        images = [0] * (1 << ground.n)
        for i in range(ground.n):
            images[1 << i] = 1 << i
        for mask, img in table.items():
            images[mask] = img
        return cls(ground, tuple(images))

    def image(self, menu: int) -> int:
        if menu <= 0:
            raise ValueError("menu must be nonempty")
        return self.images[menu]

    def menus(self, min_size: int = 1) -> Iterator[int]:
        return self.ground.menus(min_size)


@dataclass(frozen=True)
class Switch:
    """A violation of contraction consistency: an ordered menu pair
    ``inner`` within ``outer`` whose choices disagree although the outer
    choice is still available inside.

    Minimal when exactly one alternative separates the two menus.
    """

    ground: GroundSet
    inner: int
    outer: int
    inner_choice: int
    outer_choice: int

    def __post_init__(self):
        if self.inner & ~self.outer:
            raise ValueError("inner menu must be a submenu of the outer menu")
        if self.inner == self.outer:
            raise ValueError("switch menus must differ")
        if not (self.inner >> self.outer_choice) & 1:
            raise ValueError("outer choice must remain available in the inner menu")
        if not (self.inner >> self.inner_choice) & 1:
            raise ValueError("inner choice must belong to the inner menu")
        if self.inner_choice == self.outer_choice:
            raise ValueError("a switch needs disagreeing choices")

    @property
    def removed(self) -> int:
        """Bitmask of the alternatives dropped from the outer menu."""
        return self.outer & ~self.inner

    @property
    def is_minimal(self) -> bool:
        return self.removed.bit_count() == 1

    def describe(self) -> str:
        g = self.ground
        return (
            f"({g.format_menu(self.inner)}, {g.format_menu(self.outer)}): "
            f"{g.labels[self.outer_choice]} chosen outside, "
            f"{g.labels[self.inner_choice]} inside"
        )


@dataclass(frozen=True)
class RelationProps:
    """Structural flags of a relation.

    ``acyclic`` counts only directed cycles through three or more
    distinct alternatives; 2-cycles are asymmetry violations and are
    reported separately, so callers needing a DAG test the conjunction.
    """

    asymmetric: bool
    acyclic: bool
    transitive: bool
    complete: bool


def max_elements(menu: int, relation: Relation) -> int:
    """Maximal elements of a menu: members no other member beats.

    Returns a possibly empty bitmask; emptiness can only happen when the
    relation cycles within the menu. Callers that need a nonempty menu
    should go through :func:`maximal_menu`.
    """
    dominated = 0
    rows = relation.rows
    for i in bits_of(menu):
        dominated |= rows[i]
    return menu & ~dominated


def maximal_menu(menu: int, relation: Relation) -> int:
    """Like :func:`max_elements` but refuses to return an empty menu."""
    result = max_elements(menu, relation)
    if not result:
        raise EmptyMaximaError(
            f"no maximal element in {relation.ground.format_menu(menu)}: relation cycles inside"
        )
    return result


def _closure_rows(rows: tuple[int, ...] | list[int], n: int) -> list[int]:
    out = list(rows)
    for k in range(n):
        bit = 1 << k
        row_k = out[k]
        for i in range(n):
            if out[i] & bit:
                out[i] |= row_k
    return out


def has_directed_cycle(relation: Relation) -> bool:
    """True when the relation has any directed cycle (length >= 2)."""
    closed = _closure_rows(relation.rows, relation.ground.n)
    return any((row >> i) & 1 for i, row in enumerate(closed))


def _has_long_cycle(rows: tuple[int, ...], n: int) -> bool:
    # A simple directed cycle through >= 3 distinct nodes exists iff for
    # some node u there are distinct v, w with v->u, u->w and a path from
    # w to v that avoids u entirely.
    for u in range(n):
        ubit = 1 << u
        succ_u = rows[u]
        pred_u = 0
        for v in range(n):
            if rows[v] & ubit:
                pred_u |= 1 << v
        if not succ_u or not pred_u:
            continue
        pruned = [rows[i] & ~ubit if i != u else 0 for i in range(n)]
        closed = _closure_rows(pruned, n)
        for w in bits_of(succ_u & ~ubit):
            if closed[w] & pred_u & ~(1 << w):
                return True
    return False


def relation_props(relation: Relation) -> RelationProps:
    """Compute asymmetry, (long-cycle) acyclicity, transitivity, completeness."""
    rows = relation.rows
    n = relation.ground.n
    asymmetric = True
    complete = True
    for i in range(n):
        for j in range(i + 1, n):
            fwd = (rows[i] >> j) & 1
            back = (rows[j] >> i) & 1
            if fwd and back:
                asymmetric = False
            if not fwd and not back:
                complete = False
    transitive = all(
        rows[j] & ~rows[i] == 0 for i in range(n) for j in bits_of(rows[i])
    )
    acyclic = not _has_long_cycle(rows, n)
    return RelationProps(asymmetric, acyclic, transitive, complete)


def transitive_closure(relation: Relation) -> Relation:
    """Smallest transitive superset, diagonal stripped.

    A self-loop produced by the closure means the input cycles; probe
    that separately with :func:`has_directed_cycle`, the returned value
    stays irreflexive either way.
    """
    n = relation.ground.n
    closed = _closure_rows(relation.rows, n)
    return Relation(relation.ground, tuple(closed[i] & ~(1 << i) for i in range(n)))


def szpilrajn_extend(relation: Relation, tiebreak: LinearOrder | None = None) -> LinearOrder:
    """Deterministic linear extension of an asymmetric acyclic relation.

    Repeatedly emits the tiebreak-best element among those currently
    maximal (a stable topological order). The default tiebreak is label
    order. Raises :class:`CyclicRelationError` when the input has any
    directed cycle, 2-cycles included.
    """
    ground = relation.ground
    n = ground.n
    if tiebreak is None:
        tiebreak = label_order(ground)
    cols = [0] * n
    for i, j in relation.pairs():
        cols[j] |= 1 << i
    remaining = ground.full_mask
    ranking: list[int] = []
    while remaining:
        pick = -1
        for alt in tiebreak.ranking:
            if (remaining >> alt) & 1 and not (cols[alt] & remaining):
                pick = alt
                break
        if pick < 0:
            raise CyclicRelationError("relation has a directed cycle; no linear extension")
        ranking.append(pick)
        remaining &= ~(1 << pick)
    return LinearOrder(ground, tuple(ranking))
