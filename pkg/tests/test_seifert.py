import random

import numpy as np
import pytest

from gausscode.maps_core import make_map
from gausscode.medial import premap_dart_bijection, vertex_medial_premap
from gausscode.seifert import (
    NotTwoTwo,
    cycle_trace,
    premap_from_paragraph,
    reverse_vertices,
    seifert_cycles,
    seifert_edge_characters,
    seifert_map,
    seifert_oriented,
    seifert_successor,
    seifert_successor_perm,
)
from gausscode.words import parse_paragraph

from helpers import premaps_match, random_dow_paragraph

W8 = "1 2 3 4 2 1 4 3"


def pm_of(text):
    return premap_from_paragraph(parse_paragraph(text))


class TestPremapFromParagraph:
    def test_counts_for_w8(self):
        pm = pm_of(W8)
        assert pm.rep.n_vertices == 4
        assert pm.rep.n_edges == 8
        assert pm.rep.n_darts == 16

    def test_vertex_cycle_pairs_the_two_copies(self):
        # character '2' sits at positions 1 and 4; its rotation joins the two
        # arriving darts then the two leaving darts
        pm = pm_of(W8)
        v = pm.char_of_vertex.index("2")
        assert pm.rep.vertex_cycles[v] == (2, 8, 3, 9)

    def test_curl(self):
        pm = pm_of("1 1")
        assert pm.rep.n_vertices == 1
        assert pm.rep.n_edges == 2
        # both edges are loops at the single vertex
        for d, a in pm.rep.edges:
            assert pm.rep.vertex_of[d] == pm.rep.vertex_of[a]

    def test_two_word_paragraph(self):
        pm = pm_of("1 2 / 1 2")
        assert pm.rep.n_vertices == 2
        assert pm.rep.n_edges == 4
        assert pm.rep.n_darts == 8

    def test_signs_alternate(self):
        pm = pm_of(W8)
        assert all(pm.sign[2 * i] == 1 and pm.sign[2 * i + 1] == -1 for i in range(8))


class TestSuccessor:
    def test_curl_fixed_points(self):
        pm = pm_of("1 1")
        assert seifert_successor(pm, 0) == 0
        assert seifert_successor(pm, 2) == 2

    def test_w8_smoothing_follows_the_big_cycle(self):
        # the leaving dart at the first copy of '2' (position 1, dart 3)
        # continues, after the crossing of '3', with the leaving dart of the
        # second copy of '3' (position 7, dart 15): the smoothed strand runs
        # 2 -> 3 -> 1 inside the four-crossing cycle
        pm = pm_of(W8)
        assert seifert_successor(pm, 3) == 15

    def test_sign_preserved(self):
        rng = random.Random(5)
        for _ in range(30):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 6)))
            rho = seifert_successor_perm(pm)
            assert np.all(pm.sign[rho] == pm.sign)

    def test_scalar_matches_vectorized(self):
        rng = random.Random(6)
        for _ in range(20):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 5)))
            rho = seifert_successor_perm(pm)
            for d in range(pm.rep.n_darts):
                assert seifert_successor(pm, d) == rho[d]

    def test_representative_independent(self):
        rng = random.Random(7)
        for _ in range(30):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 6)))
            rho = seifert_successor_perm(pm)
            subset = [v for v in range(pm.n_vertices) if rng.random() < 0.5]
            rho2 = seifert_successor_perm(reverse_vertices(pm, subset))
            assert np.array_equal(rho, rho2)


class TestSeifertCycles:
    def test_w8_traces(self):
        pm = pm_of(W8)
        traces = {cycle_trace(pm, c) for c in seifert_cycles(pm)}
        assert traces == {("1", "4", "2", "3"), ("2", "1"), ("4", "3")}

    def test_curl_two_singletons(self):
        pm = pm_of("1 1")
        cs = seifert_cycles(pm)
        assert len(cs) == 2
        assert all(len(c) == 1 for c in cs)

    def test_cycles_partition_positive_darts(self):
        rng = random.Random(9)
        for _ in range(30):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 7)))
            cs = seifert_cycles(pm)
            darts = sorted(d for c in cs for d in c.darts)
            assert darts == sorted(int(d) for d in pm.positive_darts())


class TestSeifertMap:
    def test_w8_structure(self):
        pm = pm_of(W8)
        m = seifert_map(pm)
        assert m.n_vertices == 3
        assert m.n_edges == 4
        chars = seifert_edge_characters(pm)
        # the 4-valent middle vertex sees the crossings in the strand order
        mid = next(v for v in range(3) if len(m.vertex_cycles[v]) == 4)
        ring = tuple(chars[m.edge_of_dart[d]] for d in m.vertex_cycles[mid])
        doubled = ring + ring
        assert any(doubled[i: i + 4] == ("1", "4", "2", "3") for i in range(4))
        # the two end vertices attach by doubled edges
        for v in range(3):
            if v == mid:
                continue
            endpoints = {chars[m.edge_of_dart[d]] for d in m.vertex_cycles[v]}
            assert endpoints in ({"1", "2"}, {"3", "4"})

    def test_curl_gives_single_edge_map(self):
        m = seifert_map(pm_of("1 1"))
        assert m.n_vertices == 2
        assert m.n_edges == 1

    def test_edge_count_is_alphabet_size(self):
        rng = random.Random(10)
        for _ in range(30):
            p = random_dow_paragraph(rng, rng.randint(1, 7))
            assert seifert_map(premap_from_paragraph(p)).n_edges == len(p.alphabet)

    def test_representative_independent(self):
        rng = random.Random(11)
        for _ in range(30):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 6)))
            subset = [v for v in range(pm.n_vertices) if rng.random() < 0.5]
            assert seifert_map(pm) == seifert_map(reverse_vertices(pm, subset))


class TestSeifertOriented:
    def test_curl_induced_signs(self):
        pm = pm_of("1 1")
        sf, sign = seifert_oriented(pm.rep, pm.sign)
        assert sf.n_edges == 1
        assert sign[0] == -1 and sign[1] == 1

    def test_sign_rule(self):
        rng = random.Random(12)
        for _ in range(20):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 6)))
            sf, sign = seifert_oriented(pm.rep, pm.sign)
            pos = pm.positive_darts()
            for i, d in enumerate(pos):
                expected = 1 if pm.sign[pm.rep.tau[d]] == -1 else -1
                assert sign[i] == expected

    def test_rejects_non_quadrivalent(self):
        m = make_map([[0], [1]], [[0, 1]])
        with pytest.raises(NotTwoTwo):
            seifert_oriented(m, np.array([1, -1], dtype=np.int8))

    def test_rejects_interleaved_signs(self):
        m = make_map([[0, 1, 2, 3]], [[0, 1], [2, 3]])
        sign = np.array([1, -1, 1, -1], dtype=np.int8)  # +,-,+,- around the vertex
        with pytest.raises(NotTwoTwo):
            seifert_oriented(m, sign)


class TestRoundTripPremapLevel:
    def test_medial_of_seifert_reproduces_premap(self):
        rng = random.Random(13)
        for _ in range(50):
            pm = premap_from_paragraph(random_dow_paragraph(rng, rng.randint(1, 8)))
            subset = [v for v in range(pm.n_vertices) if rng.random() < 0.5]
            pm = reverse_vertices(pm, subset)
            back = vertex_medial_premap(seifert_map(pm))
            phi = premap_dart_bijection(pm)
            assert premaps_match(pm, back, phi)
