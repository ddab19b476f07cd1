"""Tableau switching: local rules, the full process, and the switching-based
evacuation operators."""

import pytest

from shifted_tableaux.core import (Entry, ShiftedSkewShape, ShiftedTableau,
                                   parse_tableau, render_text)
from shifted_tableaux.enumeration import enumerate_tableaux, skew_shapes
from shifted_tableaux.jdt import evacuation_jdt, rectify, reversal
from shifted_tableaux.switching import (PerforatedFilling, PerforatedPair,
                                        SwitchingError, evac_k_skew,
                                        evac_k_switch, evac_skew, evac_switch,
                                        full_switch, switch_pair)


def rt(t):
    return render_text(t).replace("\n", " / ")


def golden_pair():
    s = parse_tableau("1 1 1\n2", 2)
    t = ShiftedTableau.from_map({(1, 4): Entry(1, False),
                                 (2, 3): Entry(1, False)}, 1)
    return s, t


class TestFullSwitchGolden:
    def test_rules_and_results(self):
        s, t = golden_pair()
        res_t, res_s, trace = full_switch(s, t)
        assert [step.rule for step in trace] == ["S1", "S1", "S7", "S1"]
        assert rt(res_t) == "1 1"
        assert rt(res_s) == ". . 1' 1 / 1 2"

    def test_against_rectification(self):
        # moving a straight tableau through an extension rectifies it
        for shape in skew_shapes(5, 3):
            if not shape.inner:
                continue
            inner = ShiftedSkewShape(shape.inner, ())
            for s in enumerate_tableaux(inner, 2):
                for t in enumerate_tableaux(shape, 3):
                    assert full_switch(s, t)[0] == rectify(t)[0]

    def test_involution(self):
        s, t = golden_pair()
        res_t, res_s, _ = full_switch(s, t)
        back_s, back_t, _ = full_switch(res_t, res_s)
        assert (back_s, back_t) == (s, t)

    def test_requires_extension(self):
        s = parse_tableau("1 1", 2)
        with pytest.raises(SwitchingError):
            full_switch(s, s)


class TestSwitchPair:
    def band_pairs(self, n=3, max_cells=5):
        for shape in skew_shapes(max_cells, 3, include_straight=True):
            for t in enumerate_tableaux(shape, n):
                a = {c: e.primed for c, e in t.entries if e.value == 1}
                b = {c: e.primed for c, e in t.entries if e.value == 2}
                if a and b:
                    yield (PerforatedFilling.from_map("a", a),
                           PerforatedFilling.from_map("b", b))

    def test_involution(self):
        for a, b in self.band_pairs():
            new_b, new_a, _ = switch_pair(a, b)
            back_a, back_b, _ = switch_pair(
                PerforatedFilling.from_map("a", new_b.cell_map),
                PerforatedFilling.from_map("b", new_a.cell_map))
            assert back_a.cell_map == a.cell_map
            assert back_b.cell_map == b.cell_map

    def test_region_preserved(self):
        for a, b in self.band_pairs():
            new_b, new_a, _ = switch_pair(a, b)
            assert set(a.cell_map) | set(b.cell_map) == \
                set(new_a.cell_map) | set(new_b.cell_map)

    def test_b_extends_a_after_switch(self):
        # after switching, the a-letters sit outside (south-east of) the
        # b-letters: switching them again makes no move
        for a, b in self.band_pairs():
            new_b, new_a, _ = switch_pair(a, b)
            _, _, trace = switch_pair(
                PerforatedFilling.from_map("a", new_a.cell_map),
                PerforatedFilling.from_map("b", new_b.cell_map))
            assert trace == []


class TestPerforatedValidation:
    def test_overlap_rejected(self):
        a = PerforatedFilling.from_map("a", {(1, 1): False})
        b = PerforatedFilling.from_map("b", {(1, 1): False})
        with pytest.raises(SwitchingError):
            PerforatedPair(a, b).validate()

    def test_double_border_strip_rejected(self):
        cells = {(1, 1): False, (2, 2): False, (3, 3): False}
        a = PerforatedFilling.from_map("a", cells)
        b = PerforatedFilling.from_map("b", {(1, 2): False})
        with pytest.raises(SwitchingError):
            PerforatedPair(a, b).validate()


class TestEvacSwitch:
    def straight_sample(self, n=3, max_cells=6):
        for shape in skew_shapes(max_cells, 3, include_straight=True):
            if shape.straight:
                yield from enumerate_tableaux(shape, n)

    def test_agrees_with_jdt_route(self):
        for t in self.straight_sample():
            assert evac_switch(t) == evacuation_jdt(t)

    def test_evac_k_full_interval(self):
        for t in self.straight_sample():
            assert evac_k_switch(t, t.n) == evac_switch(t)

    def test_evac_k_involution(self):
        for t in self.straight_sample(3, 5):
            for k in (2, 3):
                assert evac_k_switch(evac_k_switch(t, k), k) == t

    def test_skew_evac_involution(self):
        for shape in skew_shapes(5, 3, include_straight=True):
            for t in enumerate_tableaux(shape, 3):
                assert evac_skew(evac_skew(t)) == t
                assert evac_k_skew(evac_k_skew(t, 2), 2) == t

    def test_skew_evac_differs_from_reversal_somewhere(self):
        hit = False
        for shape in skew_shapes(5, 3, include_straight=False):
            for t in enumerate_tableaux(shape, 3):
                if evac_skew(t) != reversal(t):
                    hit = True
                    break
            if hit:
                break
        assert hit
