"""Vectorized batch classification used by the census.

Choice functions are packed as an (F, 2**n) int8 matrix of chosen
indices, one row per function, one column per menu mask. All revealed
relations and class flags are computed with numpy across the whole
batch at once; a cross-check against the scalar classifier is part of
the test suite.
"""

from __future__ import annotations

import numpy as np

from .core import ChoiceFunction, GroundSet
from .fixtures import ground_n


def total_functions(n: int) -> int:
    total = 1
    for mask in range(1, 1 << n):
        total *= mask.bit_count()
    return total


def _members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def decode_functions(n: int, indices: np.ndarray) -> np.ndarray:
    """Mixed-radix decode of flat function indices into choice rows.

    Menus are digits in ascending set encoding with the first menu most
    significant, so contiguous index ranges share their leading digits.
    """
    size = 1 << n
    out = np.full((len(indices), size), -1, dtype=np.int8)
    rem = np.asarray(indices, dtype=np.int64).copy()
    for mask in range(size - 1, 0, -1):
        members = _members(mask)
        radix = len(members)
        if radix == 1:
            out[:, mask] = members[0]
            continue
        digit = rem % radix
        rem //= radix
        out[:, mask] = np.asarray(members, dtype=np.int8)[digit]
    return out


def random_functions(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform random choice rows (each menu's pick independent)."""
    size = 1 << n
    out = np.full((count, size), -1, dtype=np.int8)
    for mask in range(1, size):
        members = _members(mask)
        if len(members) == 1:
            out[:, mask] = members[0]
        else:
            picks = rng.integers(0, len(members), size=count)
            out[:, mask] = np.asarray(members, dtype=np.int8)[picks]
    return out


def row_to_choice_function(n: int, row: np.ndarray, ground: GroundSet | None = None) -> ChoiceFunction:
    g = ground if ground is not None else ground_n(n)
    choices = [-1] + [int(v) for v in row[1:]]
    return ChoiceFunction(g, tuple(choices))


def _dag_flags(rel: np.ndarray, n: int) -> np.ndarray:
    """True where the relation has no directed cycle of any length."""
    closed = rel.astype(np.uint8)
    rounds = max(1, int(np.ceil(np.log2(n))))
    for _ in range(rounds):
        closed = ((closed + np.matmul(closed, closed)) > 0).astype(np.uint8)
    diag = closed[:, np.arange(n), np.arange(n)]
    return ~diag.any(axis=1)


def _asym_flags(rel: np.ndarray) -> np.ndarray:
    return ~(rel & rel.transpose(0, 2, 1)).any(axis=(1, 2))


def classify_batch(n: int, choices: np.ndarray) -> dict[str, np.ndarray]:
    """Class flags for every row of a packed choice matrix.

    Returns boolean arrays keyed rat/cla/cola/csla/ccla/pilc; the
    selective-salient flag equals rat and is not materialized twice.
    """
    size = 1 << n
    count = choices.shape[0]
    rows_idx = np.arange(count)

    P = np.zeros((count, n, n), dtype=bool)
    SAL = np.zeros((count, n, n), dtype=bool)
    any_switch = np.zeros(count, dtype=bool)

    for mask in range(1, size):
        members = _members(mask)
        if len(members) < 2:
            continue
        cm = choices[:, mask]
        for x in members:
            inner = mask ^ (1 << x)
            cond = (cm != x) & (choices[:, inner] != cm)
            any_switch |= cond
            hit = rows_idx[cond]
            P[hit, cm[cond], x] = True
            for y in members:
                if y != x:
                    SAL[hit, x, y] = True

    RC = P.copy()
    FC = P.copy()
    full = size - 1
    for x in range(n):
        xbit = 1 << x
        for y in range(n):
            if x == y:
                continue
            ybit = 1 << y
            pair = xbit | ybit
            cpair = choices[:, pair]
            rc_grow = np.zeros(count, dtype=bool)
            rc_block = np.zeros(count, dtype=bool)
            fc_upset = np.zeros(count, dtype=bool)
            fc_block = np.zeros(count, dtype=bool)
            rest = full & ~pair
            sub = 0
            while True:
                b = pair | sub
                cb = choices[:, b]
                if b != pair:
                    rc_grow |= cb == y
                    fc_upset |= cb == x
                rc_block |= (cb != y) & (choices[:, b ^ xbit] == y)
                fc_block |= (cb != x) & (choices[:, b ^ ybit] == x)
                if sub == rest:
                    break
                sub = (sub - rest) & rest
            RC[:, x, y] |= ((cpair == x) & rc_grow) | ((cpair == y) & rc_block)
            FC[:, x, y] |= ((cpair == y) & fc_upset) | ((cpair == x) & fc_block)

    PPI = np.zeros((count, n, n), dtype=bool)
    for outer in range(1, size):
        members = _members(outer)
        if len(members) < 2:
            continue
        c_outer = choices[:, outer]
        for y in members:
            cond = c_outer != choices[:, outer ^ (1 << y)]
            hit = rows_idx[cond]
            if not hit.size:
                continue
            ybit = 1 << y
            sub = outer & -outer
            while True:
                if sub & ybit:
                    xv = choices[hit, sub]
                    sel = xv != y
                    PPI[hit[sel], xv[sel], y] = True
                if sub == outer:
                    break
                sub = (sub - outer) & outer

    return {
        "rat": ~any_switch,
        "cla": _dag_flags(P, n),
        "cola": _dag_flags(RC, n),
        "csla": _asym_flags(SAL),
        "ccla": _dag_flags(FC, n),
        "pilc": _dag_flags(PPI, n),
    }
