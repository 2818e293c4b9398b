"""Class membership of a choice function in each limited-attention model.

Membership is decided through revealed relations: a class holds exactly
when its relation is asymmetric and free of directed cycles (for the
salience class, asymmetry alone). Witnesses carry the revealed relation
when the flag is true and the shortest violating cycle when false.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .axioms import axiom_alpha
from .core import ChoiceFunction, Relation, Switch, bits_of
from .relations import RevealedKind, find_switches, reveal


@dataclass(frozen=True)
class ClassWitness:
    """Evidence behind one membership flag.

    ``cycle`` is None when the flag is true; otherwise the shortest
    violating cycle in the revealed relation (a 2-cycle for asymmetry
    failures).
    """

    relation: Relation
    cycle: tuple[int, ...] | None

    def render(self) -> str:
        if self.cycle is None:
            return "holds; revealed relation is asymmetric and acyclic"
        labs = self.relation.ground.labels
        loop = " > ".join(labs[i] for i in self.cycle) + f" > {labs[self.cycle[0]]}"
        return f"violating cycle {loop}"


@dataclass(frozen=True)
class ClassMembership:
    """Flags for every model class, plus per-class evidence.

    Nesting facts baked into the data: rationalizability coincides with
    the selective-salient class and implies every other flag; each of
    the optimal / salient / competitive / path-independent flags implies
    plain limited attention.
    """

    rat: bool
    cla: bool
    cola: bool
    csla: bool
    cssla: bool
    ccla: bool
    pilc: bool
    witnesses: Mapping[str, ClassWitness]
    rat_witness: Switch | None

    def flags(self) -> dict[str, bool]:
        return {
            "rat": self.rat,
            "cla": self.cla,
            "cola": self.cola,
            "csla": self.csla,
            "cssla": self.cssla,
            "ccla": self.ccla,
            "pilc": self.pilc,
        }

    def to_dict(self) -> dict:
        out: dict = dict(self.flags())
        out["witnesses"] = {
            name: {
                "edges": [list(p) for p in w.relation.label_pairs()],
                "cycle": None
                if w.cycle is None
                else [w.relation.ground.labels[i] for i in w.cycle],
            }
            for name, w in self.witnesses.items()
        }
        if self.rat_witness is not None:
            g = self.rat_witness.ground
            out["rat_switch"] = {
                "inner": g.format_menu(self.rat_witness.inner),
                "outer": g.format_menu(self.rat_witness.outer),
            }
        return out


def _shortest_cycle(relation: Relation) -> tuple[int, ...] | None:
    """Shortest directed cycle, found by BFS from every node."""
    n = relation.ground.n
    rows = relation.rows
    best: tuple[int, ...] | None = None
    for start in range(n):
        parent: dict[int, int] = {}
        queue: deque[int] = deque(bits_of(rows[start]))
        for node in list(queue):
            parent[node] = start
        while queue:
            node = queue.popleft()
            if node == start:
                path = [start]
                cur = parent[start]
                while cur != start:
                    path.append(cur)
                    cur = parent[cur]
                path.reverse()
                cycle = tuple(path)
                if best is None or len(cycle) < len(best):
                    best = cycle
                break
            for nxt in bits_of(rows[node]):
                if nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)
    return best


def _dag_witness(relation: Relation) -> ClassWitness:
    # Asymmetric + acyclic together say the relation is a DAG, so one
    # shortest-cycle search covers both failure modes.
    for i in range(relation.ground.n):
        for j in bits_of(relation.rows[i]):
            if j > i and relation.has(j, i):
                return ClassWitness(relation, (i, j))
    cycle = _shortest_cycle(relation)
    return ClassWitness(relation, cycle)


def _asym_witness(relation: Relation) -> ClassWitness:
    for i in range(relation.ground.n):
        for j in bits_of(relation.rows[i]):
            if j > i and relation.has(j, i):
                return ClassWitness(relation, (i, j))
    return ClassWitness(relation, None)


def classify(c: ChoiceFunction) -> ClassMembership:
    """Decide membership in every model class.

    Rationalizability is contraction consistency; plain limited
    attention demands a well-behaved attention-revealed preference; the
    optimal, competitive, and path-independent classes demand the same
    of their revealed relations; the salient class needs only asymmetry
    of revealed salience.
    """
    witnesses: dict[str, ClassWitness] = {}

    def dag_flag(name: str, kind: RevealedKind) -> bool:
        rel = reveal(c, kind)
        w = _dag_witness(rel)
        witnesses[name] = w
        return w.cycle is None

    cla = dag_flag("cla", RevealedKind.P)
    cola = dag_flag("cola", RevealedKind.RC)
    ccla = dag_flag("ccla", RevealedKind.FC)
    pilc = dag_flag("pilc", RevealedKind.PPI)
    sal = _asym_witness(reveal(c, RevealedKind.SALIENCE))
    witnesses["csla"] = sal
    csla = sal.cycle is None

    rat = axiom_alpha(c)
    rat_witness = None
    if not rat:
        rat_witness = find_switches(c, minimal_only=True)[0]

    return ClassMembership(
        rat=rat,
        cla=cla,
        cola=cola,
        csla=csla,
        cssla=rat,
        ccla=ccla,
        pilc=pilc,
        witnesses=witnesses,
        rat_witness=rat_witness,
    )
