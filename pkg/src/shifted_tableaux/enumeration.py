"""Exhaustive generation of canonical shifted semistandard tableaux.

Generation backtracks over cells in row-reading order with per-cell
pruning (row/column order, multiplicity rules); canonical form is applied
as a final filter.  The family order is fixed as reading-word
lexicographic so that golden outputs stay byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (Cell, Entry, ShiftedSkewShape, ShiftedTableau,
                   reading_word, InvalidTableauError, _validate_filling)


@dataclass(frozen=True)
class TableauFamily:
    """The complete family ShST(shape, n), deterministically ordered."""

    shape: ShiftedSkewShape
    n: int
    members: tuple[ShiftedTableau, ...]

    def __iter__(self) -> Iterator[ShiftedTableau]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _fill_order(shape: ShiftedSkewShape) -> list[Cell]:
    return sorted(shape.cells)


def _iter_fillings(shape: ShiftedSkewShape, n: int) -> Iterator[dict[Cell, Entry]]:
    order = _fill_order(shape)
    alphabet = [Entry(k, p) for k in range(1, n + 1) for p in (True, False)]
    entries: dict[Cell, Entry] = {}
    primed_rows: set[tuple[int, int]] = set()  # (row, value) with a primed entry
    used_cols: set[tuple[int, int]] = set()    # (col, value) with an unprimed entry

    def place(idx: int) -> Iterator[dict[Cell, Entry]]:
        if idx == len(order):
            yield dict(entries)
            return
        r, c = order[idx]
        west = entries.get((r, c - 1))
        north = entries.get((r - 1, c))
        floor = max((e for e in (west, north) if e is not None), default=None)
        for e in alphabet:
            if floor is not None and e < floor:
                continue
            if e.primed:
                if (r, e.value) in primed_rows:
                    continue
                primed_rows.add((r, e.value))
            else:
                if (c, e.value) in used_cols:
                    continue
                used_cols.add((c, e.value))
            entries[(r, c)] = e
            yield from place(idx + 1)
            del entries[(r, c)]
            if e.primed:
                primed_rows.discard((r, e.value))
            else:
                used_cols.discard((c, e.value))

    yield from place(0)


def _is_canonical(shape: ShiftedSkewShape, filling: dict[Cell, Entry]) -> bool:
    try:
        _validate_filling(shape, filling, max((e.value for e in filling.values()), default=0) or 1,
                          require_canonical=True)
    except InvalidTableauError:
        return False
    return True


def enumerate_tableaux(shape: ShiftedSkewShape, n: int) -> TableauFamily:
    """All members of ShST(shape, n) in reading-word lexicographic order."""
    if n < 0:
        raise ValueError("alphabet bound must be >= 0")
    members = []
    for filling in _iter_fillings(shape, n):
        if _is_canonical(shape, filling):
            members.append(ShiftedTableau.from_map(filling, n, shape))
    members.sort(key=lambda t: tuple(e.order_key for e in reading_word(t)))
    return TableauFamily(shape, n, tuple(members))


def count(shape: ShiftedSkewShape, n: int) -> int:
    """len(enumerate_tableaux(shape, n)) without keeping the members."""
    total = 0
    for filling in _iter_fillings(shape, n):
        if _is_canonical(shape, filling):
            total += 1
    return total


def straight_shapes(max_cells: int, max_part: int | None = None
                    ) -> list[ShiftedSkewShape]:
    """All straight shifted shapes with at most max_cells cells, ordered by
    (cells, parts)."""
    cap = max_part or max_cells
    shapes: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int, bound: int) -> None:
        shapes.append(prefix)
        for p in range(min(remaining, bound), 0, -1):
            extend(prefix + (p,), remaining - p, p - 1)

    extend((), max_cells, cap)
    shapes.sort(key=lambda s: (sum(s), s))
    return [ShiftedSkewShape(s) for s in shapes if s]


def skew_shapes(max_cells: int, max_part: int | None = None,
                include_straight: bool = False) -> list[ShiftedSkewShape]:
    """Skew shapes outer/inner with 1..max_cells cells, outer_1 <= max_part,
    deduplicated by cell set and ordered by (cells, outer, inner)."""
    cap = max_part or max_cells
    outers: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], bound: int) -> None:
        if prefix:
            outers.append(prefix)
        for p in range(bound, 0, -1):
            if sum(prefix) + p <= cap * (cap + 1) // 2:
                extend(prefix + (p,), p - 1)

    extend((), cap)
    seen: set[frozenset[Cell]] = set()
    out: list[ShiftedSkewShape] = []
    for outer in outers:
        for inner in _subpartitions(outer):
            if not include_straight and not inner:
                continue
            try:
                shape = ShiftedSkewShape(outer, inner)
            except Exception:
                continue
            if not 0 < shape.size <= max_cells:
                continue
            if shape.cells in seen:
                continue
            seen.add(shape.cells)
            out.append(shape)
    out.sort(key=lambda s: (s.size, s.outer, s.inner))
    return out


def _subpartitions(outer: tuple[int, ...]) -> list[tuple[int, ...]]:
    result: list[tuple[int, ...]] = [()]

    def extend(prefix: tuple[int, ...], row: int) -> None:
        if row == len(outer):
            return
        hi = min(outer[row], prefix[-1] - 1 if prefix else outer[0])
        for p in range(hi, 0, -1):
            result.append(prefix + (p,))
            extend(prefix + (p,), row + 1)

    extend((), 0)
    return sorted(set(result))
