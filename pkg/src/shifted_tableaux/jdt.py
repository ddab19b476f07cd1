"""Shifted jeu de taquin, rectification, complement, evacuation, reversal
and the restricted Schuetzenberger involutions.

Slides are implemented directly for standard tableaux (plain inner/outer
moves on the shifted diagram); semistandard slides go through
standardize -> slide -> destandardize, which is the bridge that makes the
primed bookkeeping unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (CapacityError, Cell, Entry, ShiftedSkewShape, ShiftedTableau,
                   StrictPartition, TableauError, canonicalize, destandardize,
                   reassemble, reindex, restrict_interval, standardize, weight)

DUAL_EQUIV_MAX_CELLS = 6


@dataclass(frozen=True)
class SlideRecord:
    """Inner corners used during a rectification, with the cell vacated at
    the end of each slide; replaying the vacated cells as outer slides in
    reverse restores the original shape."""

    slides: tuple[tuple[Cell, Cell], ...] = ()  # (corner, exit)

    def __len__(self) -> int:
        return len(self.slides)


def inner_corners(shape: ShiftedSkewShape) -> list[Cell]:
    """Empty positions into which an inner slide may start."""
    cells = shape.cells
    out = []
    rows = {r for r, _ in cells}
    if not rows:
        return []
    for r in range(1, max(rows) + 1):
        for c in range(r, max(x for _, x in cells) + 1):
            p = (r, c)
            if p in cells:
                continue
            if ((r, c + 1) in cells or (r + 1, c) in cells) \
                    and (r, c - 1) not in cells and (r - 1, c) not in cells:
                try:
                    # the position must extend the region to a valid diagram
                    ShiftedSkewShape.from_cells(cells | {p})
                except TableauError:
                    continue
                out.append(p)
    return out


def _standard_inner_slide(t: ShiftedTableau, corner: Cell) -> tuple[ShiftedTableau, Cell]:
    entries = dict(t.entry_map)
    r, c = corner
    while True:
        east = entries.get((r, c + 1))
        south = entries.get((r + 1, c))
        if east is None and south is None:
            break
        if south is None or (east is not None and east < south):
            entries[(r, c)] = entries.pop((r, c + 1))
            c += 1
        else:
            entries[(r, c)] = entries.pop((r + 1, c))
            r += 1
    shape = ShiftedSkewShape.from_cells(entries.keys()) if entries else ShiftedSkewShape()
    return ShiftedTableau.from_map(entries, t.n, shape) if entries else \
        ShiftedTableau(shape, (), t.n), (r, c)


def _standard_outer_slide(t: ShiftedTableau, start: Cell) -> tuple[ShiftedTableau, Cell]:
    entries = dict(t.entry_map)
    r, c = start
    if c < r or start in entries:
        raise TableauError(f"{start} is not a valid outer slide start")
    while True:
        west = entries.get((r, c - 1)) if c - 1 >= r else None
        north = entries.get((r - 1, c))
        if west is None and north is None:
            break
        if north is None or (west is not None and west > north):
            entries[(r, c)] = entries.pop((r, c - 1))
            c -= 1
        else:
            entries[(r, c)] = entries.pop((r - 1, c))
            r -= 1
    return ShiftedTableau.from_map(entries, t.n), (r, c)


def _slide(t: ShiftedTableau, cell: Cell, outer: bool) -> tuple[ShiftedTableau, Cell]:
    if t.size == 0:
        raise TableauError("cannot slide an empty tableau")
    std = standardize(t)
    slid, exit_cell = (_standard_outer_slide if outer else _standard_inner_slide)(std, cell)
    return destandardize(slid, weight(t)), exit_cell


def inner_slide(t: ShiftedTableau, corner: Cell) -> ShiftedTableau:
    """One jeu de taquin slide into the given inner corner."""
    if corner not in inner_corners(t.shape):
        raise TableauError(f"{corner} is not an inner corner of {t.shape}")
    return _slide(t, corner, outer=False)[0]


def outer_slide(t: ShiftedTableau, start: Cell) -> ShiftedTableau:
    """One reverse slide starting from the given outside position."""
    return _slide(t, start, outer=True)[0]


def _pick_corner(corners: list[Cell], strategy: str) -> Cell:
    if strategy == "first":
        return min(corners)
    if strategy == "last":
        return max(corners)
    raise ValueError(f"unknown corner strategy {strategy!r}")


@lru_cache(maxsize=None)
def rectify(t: ShiftedTableau, strategy: str = "first"
            ) -> tuple[ShiftedTableau, SlideRecord]:
    """Apply inner slides until the shape is straight.

    The result does not depend on the corner choices; the strategy only
    affects the slide record.
    """
    if t.size == 0:
        # covers shapes like lambda/lambda
        return ShiftedTableau(ShiftedSkewShape(), (), t.n), SlideRecord()
    record: list[tuple[Cell, Cell]] = []
    cur = t
    while True:
        corners = inner_corners(cur.shape)
        if not corners:
            break
        corner = _pick_corner(corners, strategy)
        cur, exit_cell = _slide(cur, corner, outer=False)
        record.append((corner, exit_cell))
    if not cur.shape.straight:
        raise RuntimeError(f"rectification did not reach a straight shape: {cur.shape}")
    return cur, SlideRecord(tuple(record))


def knuth_equivalent(t1: ShiftedTableau, t2: ShiftedTableau) -> bool:
    """Same rectification."""
    if t1.n != t2.n:
        raise TableauError("tableaux live over different alphabets")
    return rectify(t1)[0] == rectify(t2)[0]


def dual_equivalent(t1: ShiftedTableau, t2: ShiftedTableau) -> bool:
    """Brute-force coplactic equivalence: every common inner-slide sequence
    must keep the shapes equal.  Capped at DUAL_EQUIV_MAX_CELLS cells."""
    if t1.cells != t2.cells:
        raise TableauError("dual equivalence requires equal shapes")
    if t1.size > DUAL_EQUIV_MAX_CELLS:
        raise CapacityError(
            f"dual-equivalence oracle capped at {DUAL_EQUIV_MAX_CELLS} cells")
    seen: set[tuple[ShiftedTableau, ShiftedTableau]] = set()

    def walk(a: ShiftedTableau, b: ShiftedTableau) -> bool:
        if (a, b) in seen:
            return True
        seen.add((a, b))
        for corner in inner_corners(a.shape):
            if a.size == 0:
                return True
            a2, ea = _slide(a, corner, outer=False)
            b2, eb = _slide(b, corner, outer=False)
            if ea != eb:
                return False
            if not walk(a2, b2):
                return False
        return True

    return walk(t1, t2)


def complement(t: ShiftedTableau, n: int | None = None,
               width: int | None = None) -> ShiftedTableau:
    """Anti-diagonal reflection in the shifted staircase of the given width
    (default: the first outer part) with entries complemented by
    i -> (n-i+1)' and i' -> n-i+1; the result is canonicalized.

    The map is an involution only for a fixed staircase width; the default
    width shrinks when the reflected shape is narrower.
    """
    if n is None:
        n = t.n
    if t.size == 0:
        return ShiftedTableau(ShiftedSkewShape(), (), n)
    if width is None:
        width = t.shape.outer[0]
    elif width < t.shape.outer[0]:
        raise TableauError(f"staircase width {width} is too small for {t.shape}")
    entries: dict[Cell, Entry] = {}
    for (r, c), e in t.entries:
        entries[(width + 1 - c, width + 1 - r)] = Entry(n - e.value + 1, not e.primed)
    outer = StrictPartition(t.shape.inner).complement(width).parts
    inner = StrictPartition(t.shape.outer).complement(width).parts
    return canonicalize(ShiftedSkewShape(outer, inner), entries, n)


@lru_cache(maxsize=None)
def evacuation_jdt(t: ShiftedTableau) -> ShiftedTableau:
    """evac(T) = rect(c_n(T)) on straight shapes."""
    if not t.shape.straight:
        raise TableauError("evacuation is defined on straight shapes; use reversal")
    return rectify(complement(t))[0]


@lru_cache(maxsize=None)
def reversal(t: ShiftedTableau) -> ShiftedTableau:
    """The unique tableau Knuth equivalent to c_n(T) and dual equivalent to T:
    rectify, evacuate, then replay the recorded slides outward in reverse."""
    rect, record = rectify(t)
    cur = evacuation_jdt(rect)
    for _, exit_cell in reversed(record.slides):
        cur = outer_slide(cur, exit_cell)
    if cur.cells != t.cells:
        raise RuntimeError("reversal did not restore the original shape")
    return cur


@lru_cache(maxsize=None)
def eta(t: ShiftedTableau, i: int | None = None, j: int | None = None) -> ShiftedTableau:
    """Restriction of the Schuetzenberger involution to the letters i..j.

    The band is re-indexed to a fresh alphabet, reversed there, and put
    back; eta() with no interval is the full involution."""
    if i is None and j is None:
        i, j = 1, t.n
    if not (1 <= i <= j <= t.n):
        raise TableauError(f"invalid interval [{i},{j}] for n={t.n}")
    prefix, band, suffix = restrict_interval(t, i, j)
    if band.size == 0:
        return t
    local = reindex(band, 1 - i, j - i + 1)
    reversed_local = reversal(local)
    back = reindex(reversed_local, i - 1, t.n)
    return reassemble([prefix, back, suffix], t.n)


def sigma(t: ShiftedTableau, i: int) -> ShiftedTableau:
    """Crystal reflection operator: eta restricted to {i, i+1}."""
    return eta(t, i, i + 1)
