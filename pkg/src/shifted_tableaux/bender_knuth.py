"""Shifted Bender-Knuth involutions t_i, promotion p_i and the derived
generators q_i and q_{i,j}.

t_i switches the letter bands (T^i, T^{i+1}) and then relabels by the
simple transposition of i and i+1 extended to primes; the result is
re-canonicalized if the prime toggle rule demands it.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Cell, Entry, ShiftedTableau, TableauError, canonicalize
from .switching import PerforatedFilling, TraceStep, switch_pair


def theta(e: Entry, i: int) -> Entry:
    """The transposition of i and i+1 extended to primed letters."""
    if e.value == i:
        return Entry(i + 1, e.primed)
    if e.value == i + 1:
        return Entry(i, e.primed)
    return e


def theta_interval(e: Entry, i: int, j: int) -> Entry:
    """The longest permutation of the interval [i, j], on primed letters."""
    if i <= e.value <= j:
        return Entry(i + j - e.value, e.primed)
    return e


def _bk_state(t: ShiftedTableau, i: int
              ) -> tuple[dict[Cell, Entry], list[TraceStep]]:
    rest = {c: e for c, e in t.entries if e.value not in (i, i + 1)}
    a_cells = {c: e.primed for c, e in t.entries if e.value == i}
    b_cells = {c: e.primed for c, e in t.entries if e.value == i + 1}
    steps: list[TraceStep] = []
    if a_cells and b_cells:
        a = PerforatedFilling.from_map(i, a_cells)
        b = PerforatedFilling.from_map(i + 1, b_cells)
        new_b, new_a, raw = switch_pair(a, b)
        fixed = tuple(sorted(rest.items()))
        for rule, pair in raw:
            moving = dict(pair.a.entries())
            moving.update(pair.b.entries())
            steps.append(TraceStep(rule, tuple(sorted(moving.items())), fixed))
        a_cells = new_a.cell_map
        b_cells = new_b.cell_map
    switched = dict(rest)
    switched.update({c: Entry(i, p) for c, p in a_cells.items()})
    switched.update({c: Entry(i + 1, p) for c, p in b_cells.items()})
    return switched, steps


def bk_trace(t: ShiftedTableau, i: int
             ) -> tuple[ShiftedTableau, list[TraceStep]]:
    """t_i(T) together with the intermediate switch chain."""
    if not (1 <= i <= t.n - 1):
        raise TableauError(f"invalid Bender-Knuth index i={i} for n={t.n}")
    switched, steps = _bk_state(t, i)
    relabelled = {c: theta(e, i) for c, e in switched.items()}
    return canonicalize(t.shape, relabelled, t.n), steps


@lru_cache(maxsize=None)
def bk(t: ShiftedTableau, i: int) -> ShiftedTableau:
    """The shifted Bender-Knuth involution t_i."""
    return bk_trace(t, i)[0]


def promotion(t: ShiftedTableau, i: int) -> ShiftedTableau:
    """p_i = t_i t_{i-1} ... t_1, rightmost factor applied first."""
    if not (1 <= i <= t.n - 1):
        raise TableauError(f"invalid promotion index i={i} for n={t.n}")
    for k in range(1, i + 1):
        t = bk(t, k)
    return t


def q(t: ShiftedTableau, i: int) -> ShiftedTableau:
    """q_i = t_1 (t_2 t_1) ... (t_i ... t_1), rightmost factor first."""
    if not (1 <= i <= t.n - 1):
        raise TableauError(f"invalid index i={i} for n={t.n}")
    for block in range(i, 0, -1):
        for k in range(1, block + 1):
            t = bk(t, k)
    return t


def q_interval(t: ShiftedTableau, i: int, j: int) -> ShiftedTableau:
    """q_{i,j} = q_{j-1} q_{j-i} q_{j-1} for i < j (so q_{1,j} = q_{j-1})."""
    if not (1 <= i < j <= t.n):
        raise TableauError(f"invalid interval [{i},{j}] for n={t.n}")
    if i == 1:
        return q(t, j - 1)
    return q(q(q(t, j - 1), j - i), j - 1)
