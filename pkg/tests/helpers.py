"""Shared test utilities: independent oracles and corpus generators.

Everything here is deliberately naive and separate from the library's
fast paths, so the tests cross-check two different routes to the same
answers.
"""

from __future__ import annotations

import random
from itertools import permutations

import networkx as nx
import numpy as np

from gausscode.maps_core import CombMap, make_map
from gausscode.orientation_alg import BridgeGraph
from gausscode.seifert import TwoTwoPremap, premap_key, relabel_premap
from gausscode.words import Paragraph, Word


# ---------------------------------------------------------------------------
# naive permutation / map oracles
# ---------------------------------------------------------------------------


def naive_orbit_count(perm) -> int:
    perm = list(perm)
    remaining = set(range(len(perm)))
    count = 0
    while remaining:
        d = remaining.pop()
        count += 1
        e = perm[d]
        while e != d:
            remaining.remove(e)
            e = perm[e]
    return count


def naive_genus(m: CombMap) -> int:
    """Genus recomputed from scratch with set-based orbit counting."""
    tau = m.tau.tolist()
    alpha = m.alpha.tolist()
    n = len(tau)
    faces = naive_orbit_count([tau[alpha[d]] for d in range(n)])
    # component count via union-find over darts
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in range(n):
        for e in (tau[d], alpha[d]):
            ra, rb = find(d), find(e)
            if ra != rb:
                parent[ra] = rb
    k = len({find(d) for d in range(n)})
    chi = m.n_vertices - m.n_edges + faces
    two_g = 2 * k - chi
    assert two_g % 2 == 0 and two_g >= 0
    return two_g // 2


# ---------------------------------------------------------------------------
# random maps, orientations, premaps
# ---------------------------------------------------------------------------


def random_map(rng: random.Random, max_edges: int, min_edges: int = 1) -> CombMap:
    n_e = rng.randint(min_edges, max_edges)
    darts = list(range(2 * n_e))
    perm = darts[:]
    rng.shuffle(perm)
    # cycles of a random permutation = random vertex rotation
    cycles = []
    seen = set()
    for d in range(2 * n_e):
        if d in seen:
            continue
        cyc = [d]
        seen.add(d)
        e = perm[d]
        while e != d:
            cyc.append(e)
            seen.add(e)
            e = perm[e]
        cycles.append(cyc)
    pairing = darts[:]
    rng.shuffle(pairing)
    pairs = [(pairing[2 * i], pairing[2 * i + 1]) for i in range(n_e)]
    return make_map(cycles, pairs)


def random_orientation(rng: random.Random, m: CombMap) -> np.ndarray:
    sign = np.zeros(m.n_darts, dtype=np.int8)
    for d, a in m.edges:
        if rng.random() < 0.5:
            sign[d], sign[a] = 1, -1
        else:
            sign[d], sign[a] = -1, 1
    return sign


def random_dow_word(rng: random.Random, n: int) -> Paragraph:
    letters = [str(c + 1) for c in range(n) for _ in range(2)]
    rng.shuffle(letters)
    return Paragraph([Word(letters)])


def random_dow_paragraph(rng: random.Random, n: int, max_words: int = 3) -> Paragraph:
    letters = [str(c + 1) for c in range(n) for _ in range(2)]
    rng.shuffle(letters)
    n_words = rng.randint(1, min(max_words, len(letters)))
    cuts = sorted(rng.sample(range(1, len(letters)), n_words - 1)) if n_words > 1 else []
    words = []
    prev = 0
    for c in cuts + [len(letters)]:
        words.append(letters[prev:c])
        prev = c
    return Paragraph([w for w in words if w])


# ---------------------------------------------------------------------------
# exhaustive word corpus, canonical up to rotation and relabeling
# ---------------------------------------------------------------------------


def linear_patterns(n: int):
    """All double occurrence words on n characters, linear, with characters
    numbered by first occurrence (so relabelings are enumerated once)."""
    size = 2 * n

    def rec(filled, next_char):
        free = [i for i in range(size) if filled[i] is None]
        if not free:
            yield tuple(filled)
            return
        i = free[0]
        for j in free[1:]:
            filled[i] = filled[j] = next_char
            yield from rec(filled, next_char + 1)
            filled[i] = filled[j] = None

    yield from rec([None] * size, 0)


def _renumber(word: tuple[int, ...]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for c in word:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


def cyclic_canonical_pattern(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(
        _renumber(word[i:] + word[:i]) for i in range(len(word))
    )


def word_classes(n: int) -> list[tuple[str, ...]]:
    """Distinct n-character double occurrence words up to rotation and
    relabeling, as token tuples."""
    out = []
    seen = set()
    for w in linear_patterns(n):
        c = cyclic_canonical_pattern(w)
        if c not in seen:
            seen.add(c)
            out.append(tuple(str(x + 1) for x in c))
    return out


def all_word_classes(max_n: int) -> list[tuple[str, ...]]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(word_classes(n))
    return out


# ---------------------------------------------------------------------------
# literal bridge graphs and an independent planarity oracle
# ---------------------------------------------------------------------------


def literal_bridge_graph(sv: BridgeGraph) -> nx.Graph:
    """The actual cycle-plus-bridges graph that the conflict test models."""
    g = nx.Graph()
    t = len(sv.cycle_darts)
    for i in range(t):
        g.add_edge(("c", i), ("c", (i + 1) % t))
    if t == 1:
        g.add_node(("c", 0))
    for b, bridge in enumerate(sv.bridges):
        for pos in bridge.attachments:
            g.add_edge(("b", b), ("c", pos))
    return g


def nx_planar(sv: BridgeGraph) -> bool:
    ok, _ = nx.check_planarity(literal_bridge_graph(sv))
    return ok


# ---------------------------------------------------------------------------
# premap equality through the canonical dart identification
# ---------------------------------------------------------------------------


def premaps_match(pm_a: TwoTwoPremap, pm_b: TwoTwoPremap, phi: np.ndarray) -> bool:
    """Whether renaming pm_a's darts by phi gives exactly pm_b (as premaps)."""
    return premap_key(relabel_premap(pm_a, phi)) == premap_key(
        TwoTwoPremap(rep=pm_b.rep, sign=pm_b.sign, char_of_vertex=None)
    )


# ---------------------------------------------------------------------------
# local coherence of an embedding (crossing chart)
# ---------------------------------------------------------------------------


def chart_violations(mv: CombMap, mv_sign, sf: CombMap, sf_sign) -> int:
    """Check every crossing of an embedding against the local chart.

    At each 4-valent vertex the rotation must read, counterclockwise,
    ``(tail+, head+, head-, tail-)``: the two germs of each passing strand
    adjacent (the strands only touch, they do not cross), with the strand
    whose arriving germ comes first being the tail of the oriented edge
    between the two Seifert cycles.  Strand membership is recomputed here
    from scratch via successor orbits on the output map.
    """
    from gausscode import _kernels
    from gausscode.seifert import as_premap, seifert_successor_perm

    pm_out = as_premap(mv, np.asarray(mv_sign, dtype=np.int8))
    rho = seifert_successor_perm(pm_out)
    order, starts = _kernels.orbit_sequences(rho)
    scyc = np.full(mv.n_darts, -1, dtype=np.int64)
    for i in range(len(starts) - 1):
        scyc[order[starts[i]: starts[i + 1]]] = i
    alpha = mv.alpha
    violations = 0
    cycle_of_sf_vertex: dict[int, int] = {}
    for cyc in mv.vertex_cycles:
        sigs = [int(mv_sign[d]) for d in cyc]
        ok_starts = [
            i
            for i in range(4)
            if sigs[i] > 0
            and sigs[(i + 1) % 4] > 0
            and sigs[(i + 2) % 4] < 0
            and sigs[(i + 3) % 4] < 0
        ]
        if len(ok_starts) != 1:
            violations += 1
            continue
        i = ok_starts[0]
        a, b, c, d = (int(cyc[(i + k) % 4]) for k in range(4))
        strand_a = int(scyc[a])
        strand_b = int(scyc[b])
        # adjacency of germs: the strand arriving at `a` leaves through `d`
        if int(scyc[alpha[d]]) != strand_a or int(scyc[alpha[c]]) != strand_b:
            violations += 1
            continue
        # medial darts come in pairs 2p / 2p+1 over the Seifert-map dart p
        if a % 2 or b % 2:
            violations += 1
            continue
        pa, pb = a // 2, b // 2
        for sf_dart, strand in ((pa, strand_a), (pb, strand_b)):
            sv = int(sf.vertex_of[sf_dart])
            if cycle_of_sf_vertex.setdefault(sv, strand) != strand:
                violations += 1
        # the first arriving germ belongs to the tail of the oriented edge
        if int(sf_sign[pa]) != -1 or int(sf_sign[pb]) != 1:
            violations += 1
    return violations
