"""Shifted shapes, primed entries and shifted semistandard tableaux.

Coordinates are 1-based (row, column); row r of a shifted shape occupies
columns r .. r + outer_r - 1, with the first inner_r of them removed for
skew shapes.  All public constructors validate and enforce canonical form
(the first occurrence of each letter in the reading word is unprimed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Mapping

Cell = tuple[int, int]


class TableauError(ValueError):
    """Base class for malformed shapes, fillings or tokens."""


class InvalidTableauError(TableauError):
    """A filling violates a semistandard or canonical-form rule."""

    def __init__(self, message: str, cell: Cell | None = None, rule: str = ""):
        super().__init__(message)
        self.cell = cell
        self.rule = rule


class CapacityError(RuntimeError):
    """A brute-force oracle was asked for more than it can decide."""


@total_ordering
@dataclass(frozen=True)
class Entry:
    """A letter k or k' of the primed alphabet, ordered 1' < 1 < 2' < 2 < ..."""

    value: int
    primed: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise TableauError(f"entry value must be positive, got {self.value}")

    @property
    def order_key(self) -> int:
        return 2 * self.value - (1 if self.primed else 0)

    def __lt__(self, other: "Entry") -> bool:
        return self.order_key < other.order_key

    def unprime(self) -> "Entry":
        return Entry(self.value)

    def prime(self) -> "Entry":
        return Entry(self.value, True)

    def shift(self, offset: int) -> "Entry":
        return Entry(self.value + offset, self.primed)

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)

    @classmethod
    def parse(cls, token: str) -> "Entry":
        tok = token.strip()
        primed = tok.endswith("'") or tok.endswith("′")
        if primed:
            tok = tok[:-1]
        if not tok.isdigit() or int(tok) < 1:
            raise TableauError(f"malformed cell token {token!r}")
        return cls(int(tok), primed)


@dataclass(frozen=True)
class StrictPartition:
    """A strictly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for a, b in zip(self.parts, self.parts[1:]):
            if a <= b:
                raise TableauError(f"parts not strictly decreasing: {self.parts}")
        if self.parts and self.parts[-1] < 1:
            raise TableauError(f"parts must be positive: {self.parts}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def complement(self, width: int) -> "StrictPartition":
        """Complement inside the staircase (width, width-1, ..., 1)."""
        if self.parts and self.parts[0] > width:
            raise TableauError(f"{self.parts} does not fit in staircase of width {width}")
        missing = [k for k in range(width, 0, -1) if k not in set(self.parts)]
        return StrictPartition(tuple(missing))


def _check_strict(parts: tuple[int, ...], what: str) -> None:
    for a, b in zip(parts, parts[1:]):
        if a <= b:
            raise TableauError(f"{what} not strictly decreasing: {parts}")
    if parts and parts[-1] < 1:
        raise TableauError(f"{what} must have positive parts: {parts}")


@dataclass(frozen=True)
class ShiftedSkewShape:
    """A skew shifted shape outer/inner (inner possibly empty)."""

    outer: tuple[int, ...] = ()
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        inner = tuple(p for p in self.inner if p != 0)
        object.__setattr__(self, "inner", inner)
        _check_strict(self.outer, "outer shape")
        _check_strict(self.inner, "inner shape")
        if len(self.inner) > len(self.outer):
            raise TableauError(f"inner {self.inner} not contained in outer {self.outer}")
        for r, p in enumerate(self.inner):
            if p > self.outer[r]:
                raise TableauError(f"inner {self.inner} not contained in outer {self.outer}")

    @cached_property
    def cells(self) -> frozenset[Cell]:
        out = []
        for r, length in enumerate(self.outer, start=1):
            start = r + (self.inner[r - 1] if r - 1 < len(self.inner) else 0)
            out.extend((r, c) for c in range(start, r + length))
        return frozenset(out)

    @property
    def straight(self) -> bool:
        return not self.inner

    @property
    def size(self) -> int:
        return len(self.cells)

    def row_cells(self, r: int) -> list[Cell]:
        return sorted(c for c in self.cells if c[0] == r)

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "ShiftedSkewShape":
        """Reconstruct the canonical (outer, inner) pair from a cell set.

        Rows must be contiguous and every cell must satisfy c >= r.  Empty
        rows between occupied ones get outer_r == inner_r, chosen minimal.
        """
        cellset = set(cells)
        if not cellset:
            return cls()
        rows: dict[int, list[int]] = {}
        for (r, c) in cellset:
            if c < r or r < 1:
                raise TableauError(f"cell {(r, c)} outside the shifted staircase")
            rows.setdefault(r, []).append(c)
        last = max(rows)
        outer = [0] * last
        inner = [0] * last
        for r in range(last, 0, -1):
            if r in rows:
                cols = sorted(rows[r])
                if cols != list(range(cols[0], cols[-1] + 1)):
                    raise TableauError(f"row {r} is not contiguous: {cols}")
                outer[r - 1] = cols[-1] - r + 1
                inner[r - 1] = cols[0] - r
            else:
                outer[r - 1] = inner[r - 1] = (outer[r] if r < last else 0) + 1
        shape = cls(tuple(outer), tuple(inner))
        if shape.cells != frozenset(cellset):
            raise TableauError(f"cells {sorted(cellset)} do not form a shifted skew shape")
        return shape

    def __str__(self) -> str:
        if not self.outer:
            return "()"
        if self.inner:
            return f"{'/'.join([str(list(self.outer)), str(list(self.inner))])}"
        return str(list(self.outer))


def reading_cells(shape: ShiftedSkewShape) -> list[Cell]:
    """Cells in reading order: bottom row to top row, each left to right."""
    return sorted(shape.cells, key=lambda rc: (-rc[0], rc[1]))


def _validate_filling(
    shape: ShiftedSkewShape,
    entries: Mapping[Cell, Entry],
    n: int,
    require_canonical: bool = True,
) -> None:
    cells = shape.cells
    if set(entries) != set(cells):
        extra = set(entries) - set(cells)
        missing = set(cells) - set(entries)
        bad = (sorted(extra) or sorted(missing))[0] if (extra or missing) else None
        raise InvalidTableauError(
            f"filling does not cover shape exactly (extra={sorted(extra)}, missing={sorted(missing)})",
            cell=bad, rule="coverage")
    for cell, e in sorted(entries.items()):
        if e.value > n:
            raise InvalidTableauError(
                f"entry {e} at {cell} exceeds alphabet bound n={n}", cell=cell, rule="alphabet")
        r, c = cell
        for nbr, what in (((r, c + 1), "row"), ((r + 1, c), "column")):
            if nbr in entries and entries[nbr] < e:
                raise InvalidTableauError(
                    f"{what} not weakly increasing at {cell}: {e} > {entries[nbr]}",
                    cell=nbr, rule=f"{what}-order")
    seen_col: set[tuple[int, int]] = set()
    seen_row: set[tuple[int, int]] = set()
    for (r, c), e in sorted(entries.items()):
        if e.primed:
            if (r, e.value) in seen_row:
                raise InvalidTableauError(
                    f"two {e.value}' in row {r}", cell=(r, c), rule="primed-row-multiplicity")
            seen_row.add((r, e.value))
        else:
            if (c, e.value) in seen_col:
                raise InvalidTableauError(
                    f"two {e.value} in column {c}", cell=(r, c), rule="column-multiplicity")
            seen_col.add((c, e.value))
    if require_canonical:
        first: dict[int, Entry] = {}
        for cell in reading_cells(shape):
            e = entries[cell]
            first.setdefault(e.value, e)
        for value, e in first.items():
            if e.primed:
                raise InvalidTableauError(
                    f"first occurrence of letter {value} in reading word is primed",
                    rule="canonical-form")


@dataclass(frozen=True)
class ShiftedTableau:
    """A shifted semistandard tableau in canonical form.

    Equality and hashing use the entry map and the alphabet bound; the
    (outer, inner) representation is excluded so that tableaux built from
    equivalent shape descriptions compare equal.
    """

    shape: ShiftedSkewShape = field(compare=False)
    entries: tuple[tuple[Cell, Entry], ...] = ()
    n: int = 0

    def __post_init__(self):
        ent = tuple(sorted(self.entries))
        object.__setattr__(self, "entries", ent)
        _validate_filling(self.shape, dict(ent), self.n)

    @cached_property
    def entry_map(self) -> dict[Cell, Entry]:
        return dict(self.entries)

    @property
    def cells(self) -> frozenset[Cell]:
        return self.shape.cells

    @property
    def size(self) -> int:
        return len(self.entries)

    @cached_property
    def rows(self) -> list[list[Entry]]:
        out = []
        for r in range(1, len(self.shape.outer) + 1):
            out.append([self.entry_map[c] for c in self.shape.row_cells(r)])
        return out

    def __str__(self) -> str:
        return render_text(self)

    def __repr__(self) -> str:
        body = render_text(self).replace("\n", " / ")
        return f"ShiftedTableau({body!r}, n={self.n})"

    @classmethod
    def from_map(cls, entries: Mapping[Cell, Entry], n: int,
                 shape: ShiftedSkewShape | None = None) -> "ShiftedTableau":
        if shape is None:
            shape = ShiftedSkewShape.from_cells(entries.keys())
        return cls(shape, tuple(sorted(entries.items())), n)


def reading_word(t: ShiftedTableau) -> tuple[Entry, ...]:
    """The reading word: rows left to right, bottom row first."""
    return tuple(t.entry_map[c] for c in reading_cells(t.shape))


def weight(t: ShiftedTableau) -> tuple[int, ...]:
    """Occurrences of each unprimed value, as a vector of length n."""
    counts = [0] * t.n
    for _, e in t.entries:
        counts[e.value - 1] += 1
    return tuple(counts)


def canonicalize(shape: ShiftedSkewShape, entries: Mapping[Cell, Entry],
                 n: int) -> ShiftedTableau:
    """Return the canonical representative of a semistandard filling.

    Unprimes the first reading-word occurrence of each letter; all other
    entries are unchanged.
    """
    out = dict(entries)
    seen: set[int] = set()
    for cell in reading_cells(shape):
        e = out[cell]
        if e.value not in seen:
            seen.add(e.value)
            if e.primed:
                out[cell] = e.unprime()
    return ShiftedTableau.from_map(out, n, shape)


# ---------------------------------------------------------------------------
# standardization

def standardize(t: ShiftedTableau) -> ShiftedTableau:
    """Replace entries by 1..N: for each letter, primed cells top to bottom,
    then unprimed cells left to right."""
    order: list[Cell] = []
    for k in range(1, t.n + 1):
        primed = sorted((c for c, e in t.entries if e.value == k and e.primed))
        unprimed = sorted((c for c, e in t.entries if e.value == k and not e.primed),
                          key=lambda rc: (rc[1], rc[0]))
        order.extend(primed)
        order.extend(unprimed)
    entries = {cell: Entry(i) for i, cell in enumerate(order, start=1)}
    return ShiftedTableau.from_map(entries, len(order), t.shape)


def _letter_split_ok(cells_in_order: list[Cell], s: int) -> bool:
    prefix, suffix = cells_in_order[:s], cells_in_order[s:]
    if any(a[0] >= b[0] for a, b in zip(prefix, prefix[1:])):
        return False
    if any(a[1] >= b[1] for a, b in zip(suffix, suffix[1:])):
        return False
    for p in prefix:
        for u in suffix:
            if p[0] == u[0] and p[1] > u[1]:
                return False
            if p[1] == u[1] and p[0] > u[0]:
                return False
    return True


def destandardize(std: ShiftedTableau, wt: tuple[int, ...]) -> ShiftedTableau:
    """Inverse of standardize for a given weight vector.

    For each letter, the cells holding its standard values split into a
    primed prefix and unprimed suffix; the split is forced by semistandard
    validity plus canonical form.
    """
    if sum(wt) != std.size:
        raise TableauError(f"weight {wt} does not sum to {std.size} cells")
    n = len(wt)
    by_value = {e.value: c for c, e in std.entries}
    entries: dict[Cell, Entry] = {}
    reading = reading_cells(std.shape)
    offset = 0
    for k, w in enumerate(wt, start=1):
        group = [by_value[v] for v in range(offset + 1, offset + w + 1)]
        offset += w
        if not group:
            continue
        first_read = min(group, key=reading.index)
        chosen = None
        for s in range(len(group) + 1):
            if not _letter_split_ok(group, s):
                continue
            if first_read in group[:s]:
                continue  # first reading occurrence must be unprimed
            filling = {c: Entry(k, True) for c in group[:s]}
            filling.update({c: Entry(k) for c in group[s:]})
            # in-band row order: a primed entry may not sit right of an
            # unprimed one in the same row (covered by _letter_split_ok),
            # remaining checks are done by the final validation
            if chosen is not None:
                raise InvalidTableauError(
                    f"ambiguous destandardization for letter {k}", rule="destandardize")
            chosen = filling
        if chosen is None:
            raise InvalidTableauError(
                f"no valid destandardization for letter {k}", rule="destandardize")
        entries.update(chosen)
    return ShiftedTableau.from_map(entries, n, std.shape)


# ---------------------------------------------------------------------------
# interval restriction

def _partial_shape(t: ShiftedTableau, k: int) -> frozenset[Cell]:
    """Cells of the inner shape plus the letters 1..k of t."""
    return frozenset(c for c, e in t.entries if e.value <= k)


def reindex(t: ShiftedTableau, offset: int, n: int) -> ShiftedTableau:
    """Shift every letter by offset and rebind the alphabet bound."""
    entries = {c: e.shift(offset) for c, e in t.entries}
    return ShiftedTableau.from_map(entries, n, t.shape)


def restrict_interval(t: ShiftedTableau, i: int, j: int
                      ) -> tuple[ShiftedTableau, ShiftedTableau, ShiftedTableau]:
    """Split t into the prefix (letters < i), band (letters i..j) and
    suffix (letters > j), all positioned as in t."""
    if not (1 <= i <= j <= t.n):
        raise TableauError(f"invalid interval [{i},{j}] for n={t.n}")
    pre = {c: e for c, e in t.entries if e.value < i}
    band = {c: e for c, e in t.entries if i <= e.value <= j}
    suf = {c: e for c, e in t.entries if e.value > j}

    def build(part: dict[Cell, Entry]) -> ShiftedTableau:
        if not part:
            return ShiftedTableau(ShiftedSkewShape(), (), t.n)
        return ShiftedTableau.from_map(part, t.n)

    return build(pre), build(band), build(suf)


def reassemble(parts: Iterable[ShiftedTableau], n: int) -> ShiftedTableau:
    """Union of disjointly-positioned tableaux back into one tableau."""
    entries: dict[Cell, Entry] = {}
    for p in parts:
        for c, e in p.entries:
            if c in entries:
                raise TableauError(f"overlapping cell {c} while reassembling")
            entries[c] = e
    if not entries:
        return ShiftedTableau(ShiftedSkewShape(), (), n)
    return ShiftedTableau.from_map(entries, n)


# ---------------------------------------------------------------------------
# text and JSON formats

def parse_tableau(text: str, n: int | None = None) -> ShiftedTableau:
    """Parse the row-based textual form ('.' marks inner cells; rows separated
    by newlines or '/')."""
    text = text.strip()
    if not text:
        return ShiftedTableau(ShiftedSkewShape(), (), n or 0)
    lines = [ln.strip() for ln in text.replace("/", "\n").splitlines() if ln.strip()]
    outer, inner = [], []
    entries: dict[Cell, Entry] = {}
    for r, line in enumerate(lines, start=1):
        tokens = line.split()
        dots = 0
        while dots < len(tokens) and tokens[dots] == ".":
            dots += 1
        if "." in tokens[dots:]:
            raise TableauError(f"row {r}: inner dots must be a prefix: {line!r}")
        outer.append(len(tokens))
        inner.append(dots)
        for idx, tok in enumerate(tokens[dots:]):
            entries[(r, r + dots + idx)] = Entry.parse(tok)
    shape = ShiftedSkewShape(tuple(outer), tuple(inner))
    if n is None:
        n = max((e.value for e in entries.values()), default=0)
    return ShiftedTableau.from_map(entries, n, shape)


def render_text(t: ShiftedTableau) -> str:
    lines = []
    for r in range(1, len(t.shape.outer) + 1):
        length = t.shape.outer[r - 1]
        pad = t.shape.inner[r - 1] if r - 1 < len(t.shape.inner) else 0
        tokens = ["."] * pad
        tokens += [str(t.entry_map[(r, c)]) for c in range(r + pad, r + length)]
        lines.append(" ".join(tokens))
    return "\n".join(lines)


def to_json(t: ShiftedTableau) -> str:
    rows = []
    for r in range(1, len(t.shape.outer) + 1):
        rows.append([str(t.entry_map[c]) for c in t.shape.row_cells(r)])
    doc = {"outer": list(t.shape.outer), "inner": list(t.shape.inner),
           "rows": rows, "n": t.n}
    return json.dumps(doc)


def from_json(text: str) -> ShiftedTableau:
    doc = json.loads(text)
    shape = ShiftedSkewShape(tuple(doc["outer"]), tuple(doc.get("inner", ())))
    entries: dict[Cell, Entry] = {}
    for r, row in enumerate(doc["rows"], start=1):
        for cell, tok in zip(shape.row_cells(r), row):
            entries[cell] = Entry.parse(tok)
    return ShiftedTableau.from_map(entries, int(doc["n"]), shape)
