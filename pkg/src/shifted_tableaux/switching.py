"""Shifted tableau switching: perforated pairs, the seven local switch
rules, pair and full tableau switching, and the switching-based
evacuation operators (straight, restricted and skew variants).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (Cell, Entry, ShiftedSkewShape, ShiftedTableau, TableauError,
                   canonicalize, reassemble, restrict_interval)


class SwitchingError(TableauError):
    """Invalid perforated pair or an algorithm-integrity failure."""


@dataclass(frozen=True)
class PerforatedFilling:
    """Cells of one letter family inside a perforated pair; each cell
    records whether the letter is primed."""

    letter: int
    cells: tuple[tuple[Cell, bool], ...]  # (cell, primed), sorted

    @classmethod
    def from_map(cls, letter: int, cells: dict[Cell, bool]) -> "PerforatedFilling":
        return cls(letter, tuple(sorted(cells.items())))

    @property
    def cell_map(self) -> dict[Cell, bool]:
        return dict(self.cells)

    def entries(self) -> dict[Cell, Entry]:
        return {c: Entry(self.letter, p) for c, p in self.cells}


@dataclass(frozen=True)
class PerforatedPair:
    """A perforated (a, b)-pair tiling a double border strip."""

    a: PerforatedFilling
    b: PerforatedFilling

    @property
    def region(self) -> frozenset[Cell]:
        return frozenset(c for c, _ in self.a.cells) | frozenset(c for c, _ in self.b.cells)

    def validate(self) -> None:
        a_cells = dict(self.a.cells)
        b_cells = dict(self.b.cells)
        if set(a_cells) & set(b_cells):
            raise SwitchingError("a-cells and b-cells overlap")
        region = self.region
        for (r, c) in region:
            if {(r, c), (r + 1, c + 1), (r + 2, c + 2)} <= region:
                raise SwitchingError(
                    f"region is not a double border strip at {(r, c)}")
        for name, cells in (("a", a_cells), ("b", b_cells)):
            for (r, c), primed in cells.items():
                if not primed:
                    for (r2, c2), primed2 in cells.items():
                        if primed2 and (r2, c2) != (r, c) and r2 >= r and c2 >= c:
                            raise SwitchingError(
                                f"{name}'-box {(r2, c2)} south-east of {name}-box {(r, c)}")
            cols = [c for (r, c), p in cells.items() if not p]
            if len(cols) != len(set(cols)):
                raise SwitchingError(f"two unprimed {name}-letters in one column")
            rows = [r for (r, c), p in cells.items() if p]
            if len(rows) != len(set(rows)):
                raise SwitchingError(f"two primed {name}-letters in one row")
            diag = [rc for rc, _ in cells.items() if rc[0] == rc[1]]
            if len(diag) > 1:
                raise SwitchingError(f"two {name}-letters on the main diagonal")


# internal mutable state: cell -> (side, primed), side in {"a", "b"}
_State = dict[Cell, tuple[str, bool]]


def _state(pair: PerforatedPair) -> _State:
    st: _State = {c: ("a", p) for c, p in pair.a.cells}
    st.update({c: ("b", p) for c, p in pair.b.cells})
    return st


def _pair(pair: PerforatedPair, st: _State) -> PerforatedPair:
    a = {c: p for c, (side, p) in st.items() if side == "a"}
    b = {c: p for c, (side, p) in st.items() if side == "b"}
    return PerforatedPair(PerforatedFilling.from_map(pair.a.letter, a),
                          PerforatedFilling.from_map(pair.b.letter, b))


def _is_b(st: _State, cell: Cell) -> bool:
    return cell in st and st[cell][0] == "b"


def _select(st: _State) -> Cell | None:
    def adjacent_to_b(cell: Cell) -> bool:
        r, c = cell
        return _is_b(st, (r, c + 1)) or _is_b(st, (r + 1, c))

    unprimed = [c for c, (side, p) in st.items() if side == "a" and not p and adjacent_to_b(c)]
    if unprimed:
        return max(unprimed, key=lambda rc: rc[1])  # rightmost
    primed = [c for c, (side, p) in st.items() if side == "a" and p and adjacent_to_b(c)]
    if primed:
        return max(primed, key=lambda rc: rc[0])  # bottommost
    return None


def select_switch_box(pair: PerforatedPair) -> Cell | None:
    """The a-box the switching process acts on next, or None when the pair
    is fully switched: the rightmost a-box north or west of a b-box, else
    the bottommost such a'-box."""
    return _select(_state(pair))


def _step(st: _State, x: Cell) -> str:
    """Apply the matching switch rule in place; returns the rule name."""
    r, c = x
    east, south, west, southeast = (r, c + 1), (r + 1, c), (r, c - 1), (r + 1, c + 1)
    b_e, b_s = _is_b(st, east), _is_b(st, south)
    # The three-box rules S4 and S7 additionally require the cell below the
    # west neighbour to be empty; otherwise the plain vertical swap applies.
    a_w = west in st and st[west][0] == "a" and (r + 1, c - 1) not in st
    x_entry = st[x]

    if b_e and b_s:
        if st[east][1]:  # b' to the east
            st[x], st[east] = st[east], x_entry
            return "S5"
        if a_w:
            if x_entry[1]:
                raise SwitchingError(f"no switch rule matches a' at {x} (S7 context)")
            st[west], st[x], st[south] = st[south], ("a", True), st[west]
            return "S7"
        st[x], st[south] = st[south], x_entry
        return "S6"
    if b_e:
        if st[east][1] and _is_b(st, southeast):
            st[x], st[east], st[southeast] = st[southeast], ("b", False), x_entry
            return "S3"
        st[x], st[east] = st[east], x_entry
        return "S1"
    if b_s:
        if a_w:
            if x_entry[1]:
                raise SwitchingError(f"no switch rule matches a' at {x} (S4 context)")
            st[west], st[x], st[south] = st[south], ("a", True), st[west]
            return "S4"
        st[x], st[south] = st[south], x_entry
        return "S2"
    raise SwitchingError(f"selected box {x} is not adjacent to a b-box")


def switch_step(pair: PerforatedPair) -> tuple[PerforatedPair, str]:
    """One application of the switching map.  Raises if fully switched."""
    st = _state(pair)
    x = _select(st)
    if x is None:
        raise SwitchingError("pair is fully switched; no box to select")
    rule = _step(st, x)
    return _pair(pair, st), rule


def switch_pair(a: PerforatedFilling, b: PerforatedFilling, validate: bool = False
                ) -> tuple[PerforatedFilling, PerforatedFilling, list[tuple[str, PerforatedPair]]]:
    """Run the switching process to completion.

    Returns (^A B, A_B, trace): the b-letters after switching, the
    a-letters after switching, and the per-step (rule, state) trace.
    """
    pair = PerforatedPair(a, b)
    if validate:
        pair.validate()
    st = _state(pair)
    trace: list[tuple[str, PerforatedPair]] = []
    limit = max(4 * len(st) * len(st), 16)
    for _ in range(limit):
        x = _select(st)
        if x is None:
            result = _pair(pair, st)
            return result.b, result.a, trace
        rule = _step(st, x)
        trace.append((rule, _pair(pair, st)))
    raise SwitchingError("switching process did not terminate")


# ---------------------------------------------------------------------------
# tableau-level switching

def _bands(t: ShiftedTableau) -> dict[int, dict[Cell, bool]]:
    out: dict[int, dict[Cell, bool]] = {}
    for cell, e in t.entries:
        out.setdefault(e.value, {})[cell] = e.primed
    return out


def _check_extends(s: ShiftedTableau, t: ShiftedTableau) -> None:
    if s.cells & t.cells:
        raise SwitchingError("tableaux overlap; T must extend S")
    union = ShiftedSkewShape.from_cells(s.cells | t.cells)
    try:
        inner_plus_s = ShiftedSkewShape.from_cells(
            set(ShiftedSkewShape(union.outer).cells - union.cells) | set(s.cells)) \
            if s.cells else None
    except TableauError as exc:
        raise SwitchingError(f"T does not extend S: {exc}") from exc
    if inner_plus_s is not None:
        expected_t = union.cells - inner_plus_s.cells
        if expected_t != t.cells:
            raise SwitchingError("T does not extend S")


@dataclass(frozen=True)
class TraceStep:
    """One switch applied inside a larger computation: the rule name and
    the complete entry layout of both sides afterwards."""

    rule: str
    moving: tuple[tuple[Cell, Entry], ...]  # the band(s) being moved through
    fixed: tuple[tuple[Cell, Entry], ...]   # everything else


def _switch_bands(state: dict[Cell, tuple[int, int, bool]],
                  side_a: int, letter_a: int, side_b: int, letter_b: int,
                  trace: list[TraceStep] | None) -> None:
    """Switch the (side_a, letter_a) band through the (side_b, letter_b)
    band inside a combined cell -> (side, letter, primed) state."""
    a_cells = {c: p for c, (sd, lt, p) in state.items() if sd == side_a and lt == letter_a}
    b_cells = {c: p for c, (sd, lt, p) in state.items() if sd == side_b and lt == letter_b}
    if not a_cells or not b_cells:
        return
    region = set(a_cells) | set(b_cells)
    st: _State = {c: ("a", p) for c, p in a_cells.items()}
    st.update({c: ("b", p) for c, p in b_cells.items()})
    for cell in region:
        del state[cell]
    limit = max(4 * len(st) * len(st), 16)
    for _ in range(limit):
        x = _select(st)
        if x is None:
            break
        rule = _step(st, x)
        if trace is not None:
            moving, fixed = {}, {}
            for cell, (side, lt, p) in state.items():
                (moving if side == side_a else fixed)[cell] = Entry(lt, p)
            for cell, (side, p) in st.items():
                letter = letter_a if side == "a" else letter_b
                (moving if side == "a" else fixed)[cell] = Entry(letter, p)
            trace.append(TraceStep(rule, tuple(sorted(moving.items())),
                                   tuple(sorted(fixed.items()))))
    else:
        raise SwitchingError("switching process did not terminate")
    for cell, (side, p) in st.items():
        if side == "a":
            state[cell] = (side_a, letter_a, p)
        else:
            state[cell] = (side_b, letter_b, p)


def full_switch(s: ShiftedTableau, t: ShiftedTableau, validate: bool = True
                ) -> tuple[ShiftedTableau, ShiftedTableau, list[TraceStep]]:
    """Move S through T: switch the pairs (S^m, T^1), ..., (S^m, T^n), ...,
    (S^1, T^1), ..., (S^1, T^n).  Returns (^S T, S_T, trace)."""
    if validate:
        _check_extends(s, t)
    state: dict[Cell, tuple[int, int, bool]] = {}
    for cell, e in s.entries:
        state[cell] = (0, e.value, e.primed)
    for cell, e in t.entries:
        state[cell] = (1, e.value, e.primed)
    trace: list[TraceStep] = []
    s_letters = sorted({e.value for _, e in s.entries}, reverse=True)
    t_letters = sorted({e.value for _, e in t.entries})
    for i in s_letters:
        for j in t_letters:
            _switch_bands(state, 0, i, 1, j, trace)
    t_out = {c: Entry(lt, p) for c, (sd, lt, p) in state.items() if sd == 1}
    s_out = {c: Entry(lt, p) for c, (sd, lt, p) in state.items() if sd == 0}
    st_top = (ShiftedTableau.from_map(t_out, t.n) if t_out
              else ShiftedTableau(ShiftedSkewShape(), (), t.n))
    st_bottom = (ShiftedTableau.from_map(s_out, s.n) if s_out
                 else ShiftedTableau(ShiftedSkewShape(), (), s.n))
    return st_top, st_bottom, trace


# ---------------------------------------------------------------------------
# evacuation via switching

def _evac_entries(t: ShiftedTableau) -> dict[Cell, Entry]:
    """Expel bands 1..n-1 outward in turn; the k-th expelled band is
    relabelled to letter n-k+1 (the auxiliary-alphabet bookkeeping)."""
    n = t.n
    state: dict[Cell, tuple[int, int, bool]] = {}
    for cell, e in t.entries:
        state[cell] = (1, e.value, e.primed)  # side 1 = still active
    displaced: dict[int, dict[Cell, bool]] = {}
    for k in range(1, n + 1):
        if k < n:
            for j in range(k + 1, n + 1):
                # temporarily mark band k as side 0 so it plays the a-role
                for cell, (sd, lt, p) in list(state.items()):
                    if lt == k:
                        state[cell] = (0, lt, p)
                _switch_bands(state, 0, k, 1, j, None)
        displaced[k] = {c: p for c, (sd, lt, p) in state.items() if lt == k}
        for cell in list(displaced[k]):
            del state[cell]
    out: dict[Cell, Entry] = {}
    for k, cells in displaced.items():
        for cell, primed in cells.items():
            out[cell] = Entry(n - k + 1, primed)
    return out


@lru_cache(maxsize=None)
def _evac_core(t: ShiftedTableau) -> ShiftedTableau:
    if t.size == 0:
        return t
    return canonicalize(t.shape, _evac_entries(t), t.n)


def evac_switch(t: ShiftedTableau) -> ShiftedTableau:
    """Shifted evacuation of a straight tableau by sequential switching."""
    if not t.shape.straight:
        raise TableauError("evac_switch requires a straight shape; use evac_skew")
    return _evac_core(t)


def evac_skew(t: ShiftedTableau) -> ShiftedTableau:
    """The skew extension of evacuation (generally not the reversal)."""
    return _evac_core(t)


def _evac_k(t: ShiftedTableau, k: int) -> ShiftedTableau:
    if not (1 <= k <= t.n):
        raise TableauError(f"invalid restriction index k={k} for n={t.n}")
    _, band, suffix = restrict_interval(t, 1, k)
    if band.size == 0:
        return t
    local = ShiftedTableau(band.shape, band.entries, k)
    done = _evac_core(local)
    out = ShiftedTableau(done.shape, done.entries, t.n)
    return reassemble([out, suffix], t.n)


@lru_cache(maxsize=None)
def evac_k_switch(t: ShiftedTableau, k: int) -> ShiftedTableau:
    """Evacuate the letters 1..k of a straight tableau, fixing the rest."""
    if not t.shape.straight:
        raise TableauError("evac_k_switch requires a straight shape; use evac_k_skew")
    return _evac_k(t, k)


@lru_cache(maxsize=None)
def evac_k_skew(t: ShiftedTableau, k: int) -> ShiftedTableau:
    """Skew variant of evac_k."""
    return _evac_k(t, k)


@lru_cache(maxsize=None)
def evac_interval_skew(t: ShiftedTableau, i: int, j: int) -> ShiftedTableau:
    """Apply the skew evacuation to the letter band i..j, fixing the rest."""
    if not (1 <= i <= j <= t.n):
        raise TableauError(f"invalid interval [{i},{j}] for n={t.n}")
    prefix, band, suffix = restrict_interval(t, i, j)
    if band.size == 0:
        return t
    from .core import reindex
    local = reindex(band, 1 - i, j - i + 1)
    done = _evac_core(local)
    back = reindex(done, i - 1, t.n)
    return reassemble([prefix, back, suffix], t.n)
