"""Seifert cycles and the Seifert map of a crossing diagram.

A paragraph induces a 4-valent *premap*: one vertex per character, four
darts per crossing, oriented so arriving darts are positive and leaving
darts negative, with each vertex rotation determined only up to
reversal.  Smoothing every crossing along the orientation splits the
curves into Seifert cycles; the Seifert map has those cycles as vertices
and one edge per crossing.  Both constructions are inverted by the
vertex-medial operation in :mod:`gausscode.medial`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .maps_core import CombMap, check_orientation, make_map
from .words import Paragraph

__all__ = [
    "NotTwoTwo",
    "TwoTwoPremap",
    "SeifertCycle",
    "as_premap",
    "premap_from_paragraph",
    "seifert_successor",
    "seifert_successor_perm",
    "seifert_cycles",
    "cycle_trace",
    "seifert_map",
    "seifert_edge_characters",
    "seifert_oriented",
    "reverse_vertices",
    "premap_key",
    "representative_key",
    "relabel_premap",
]


class NotTwoTwo(ValueError):
    """Raised when a map/orientation pair is not a valid 4-valent premap."""


@dataclass(frozen=True, eq=False)
class TwoTwoPremap:
    """A 4-valent oriented map considered up to per-vertex rotation reversal.

    ``rep`` stores one representative rotation system; every vertex cycle
    has length four with the two positive darts adjacent, so reversing any
    subset of vertex cycles yields the other representatives.  When built
    from a paragraph, ``char_of_vertex`` names the crossing of each vertex.
    """

    rep: CombMap
    sign: np.ndarray
    char_of_vertex: tuple[str, ...] | None = None

    @property
    def n_vertices(self) -> int:
        return self.rep.n_vertices

    def positive_darts(self) -> np.ndarray:
        return np.flatnonzero(self.sign > 0).astype(np.int32)


def as_premap(
    m: CombMap, sign: np.ndarray, chars: tuple[str, ...] | None = None
) -> TwoTwoPremap:
    """Validate that ``(m, sign)`` is 4-valent with adjacent like signs."""
    sign = check_orientation(m, sign)
    for cycle in m.vertex_cycles:
        if len(cycle) != 4:
            raise NotTwoTwo(f"vertex cycle {cycle} does not have length 4")
        sigs = [int(sign[d]) for d in cycle]
        if sum(sigs) != 0:
            raise NotTwoTwo(f"vertex cycle {cycle} is not balanced 2-in/2-out")
        # the two positive darts must be cyclically consecutive
        pos = [i for i, s in enumerate(sigs) if s > 0]
        if (pos[1] - pos[0]) % 4 not in (1, 3):
            raise NotTwoTwo(f"like-signed darts are not consecutive in {cycle}")
    if chars is not None and len(chars) != m.n_vertices:
        raise ValueError("one character per vertex required")
    return TwoTwoPremap(rep=m, sign=sign, char_of_vertex=chars)


def premap_from_paragraph(p: Paragraph) -> TwoTwoPremap:
    """The crossing premap of a paragraph.

    Letter position ``i`` (counted through all words) contributes the
    arriving dart ``2i`` (positive) and the leaving dart ``2i+1``
    (negative).  The leaving dart of a position pairs with the arriving
    dart of the cyclically next position of the same word, and the two
    positions of each character share a vertex, rotation
    ``(2i, 2j, 2i+1, 2j+1)`` up to reversal.
    """
    letters: list[str] = []
    next_pos: list[int] = []
    offset = 0
    for w in p.words:
        L = len(w)
        letters.extend(w.letters)
        next_pos.extend(offset + (k + 1) % L for k in range(L))
        offset += L
    n_pos = len(letters)

    positions: dict[str, list[int]] = {}
    char_order: list[str] = []
    for i, tok in enumerate(letters):
        if tok not in positions:
            positions[tok] = []
            char_order.append(tok)
        positions[tok].append(i)

    occ = np.asarray([positions[tok] for tok in char_order], dtype=np.int32)
    occ = occ.reshape(-1, 2)
    first, second = 2 * occ[:, 0], 2 * occ[:, 1]
    cycles = np.column_stack((first, second, first + 1, second + 1))
    pos_idx = np.arange(n_pos, dtype=np.int32)
    pairs = np.column_stack((2 * pos_idx + 1, 2 * np.asarray(next_pos, dtype=np.int32)))

    m = make_map(cycles, pairs)
    sign = np.empty(2 * n_pos, dtype=np.int8)
    sign[0::2] = 1
    sign[1::2] = -1
    return TwoTwoPremap(rep=m, sign=sign, char_of_vertex=tuple(char_order))


def seifert_successor(pm: TwoTwoPremap, d: int) -> int:
    """Next dart of the Seifert cycle through ``d``.

    Smoothing pairs each arriving dart with the adjacent leaving dart of
    the same strand; the successor keeps the sign of ``d`` and does not
    depend on which rotation representative is stored.
    """
    tau = pm.rep.tau
    alpha = pm.rep.alpha
    sign = pm.sign
    if sign[d] > 0:
        t = int(tau[d])
        if sign[t] < 0:
            return int(alpha[t])
        return int(alpha[pm.rep.tau_inverse()[d]])
    a = int(alpha[d])
    t = int(tau[a])
    if sign[t] < 0:
        return t
    return int(pm.rep.tau_inverse()[a])


def seifert_successor_perm(pm: TwoTwoPremap) -> np.ndarray:
    """The Seifert successor of every dart, as one permutation array."""
    tau = pm.rep.tau
    tinv = pm.rep.tau_inverse()
    alpha = pm.rep.alpha
    sign = pm.sign
    pos = sign > 0
    out = np.empty_like(tau)
    # positive darts: alpha of the adjacent negative dart in the rotation
    nxt_is_neg = sign[tau] < 0
    out[pos & nxt_is_neg] = alpha[tau[pos & nxt_is_neg]]
    out[pos & ~nxt_is_neg] = alpha[tinv[pos & ~nxt_is_neg]]
    # negative darts: continue from the paired positive dart alpha[d]
    neg = ~pos
    a = alpha[neg]
    after = sign[tau[a]] < 0
    res = np.where(after, tau[a], tinv[a])
    out[neg] = res
    return out


@dataclass(frozen=True)
class SeifertCycle:
    """A cyclic sequence of equally signed darts closed under the successor."""

    darts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


def seifert_cycles(pm: TwoTwoPremap) -> list[SeifertCycle]:
    """Orbits of the successor map on positive darts.

    Each cycle is rotated to start at its least dart; cycles are listed in
    increasing order of that dart.
    """
    rho = seifert_successor_perm(pm)
    order, starts = _kernels.orbit_sequences(rho)
    order = order.tolist()
    sign = pm.sign
    cycles = []
    for i in range(len(starts) - 1):
        orbit = order[starts[i]: starts[i + 1]]
        if sign[orbit[0]] > 0:
            cycles.append(SeifertCycle(tuple(orbit)))
    return cycles


def cycle_trace(pm: TwoTwoPremap, cycle: SeifertCycle) -> tuple[str, ...]:
    """Characters of the crossings a Seifert cycle passes through, in order."""
    if pm.char_of_vertex is None:
        raise ValueError("premap has no vertex characters")
    return tuple(pm.char_of_vertex[pm.rep.vertex_of[d]] for d in cycle.darts)


def _sf_index(pm: TwoTwoPremap) -> np.ndarray:
    """Dense reindexing of the positive darts, in increasing dart order."""
    idx = np.full(pm.rep.n_darts, -1, dtype=np.int32)
    pos = pm.positive_darts()
    idx[pos] = np.arange(len(pos), dtype=np.int32)
    return idx


def _seifert_map_with_chars(
    pm: TwoTwoPremap,
) -> tuple[CombMap, tuple[str, ...] | None]:
    """One-pass Seifert map plus per-edge character labels."""
    idx = _sf_index(pm)
    rho = seifert_successor_perm(pm)
    order, starts = _kernels.orbit_sequences(rho)
    sign = pm.sign
    idx_order = idx[order]
    order_list = order.tolist()
    cycles = []
    for i in range(len(starts) - 1):
        s, e = int(starts[i]), int(starts[i + 1])
        if sign[order_list[s]] > 0:
            cycles.append(tuple(idx_order[s:e].tolist()))

    # the two positive darts at each premap vertex pair up into one edge
    pos = pm.positive_darts()
    by_vertex = np.argsort(pm.rep.vertex_of[pos], kind="stable")
    pairs = idx[pos[by_vertex]].reshape(-1, 2)
    m = make_map(cycles, pairs)
    chars = None
    if pm.char_of_vertex is not None:
        # edge e of the map is the e-th smallest representative dart; map it
        # back to the premap vertex (and hence character) it came from
        rep_dart = pairs.min(axis=1)
        edge_order = np.argsort(rep_dart, kind="stable")
        chars = tuple(pm.char_of_vertex[int(v)] for v in edge_order)
    return m, chars


def seifert_map(pm: TwoTwoPremap) -> CombMap:
    """The Seifert map: vertices are Seifert cycles, edges are crossings.

    Its darts are the positive darts of the premap, densely reindexed; the
    rotation at each vertex is the cycle order, and the two positive darts
    meeting at a premap vertex form an edge.
    """
    return _seifert_map_with_chars(pm)[0]


def seifert_edge_characters(pm: TwoTwoPremap) -> tuple[str, ...] | None:
    """Character of each Seifert-map edge, aligned with its edge order."""
    return _seifert_map_with_chars(pm)[1]


def seifert_oriented(m: CombMap, sign: np.ndarray) -> tuple[CombMap, np.ndarray]:
    """Seifert map of an oriented 4-valent map, with its induced orientation.

    The induced sign of a positive dart ``d`` is ``+1`` exactly when the
    rotation successor of ``d`` is negative.  Raises :class:`NotTwoTwo`
    when ``(m, sign)`` is not 4-valent with adjacent like signs.
    """
    pm = as_premap(m, sign)
    sf = seifert_map(pm)
    pos = pm.positive_darts()
    out_sign = np.where(pm.sign[m.tau[pos]] < 0, 1, -1).astype(np.int8)
    return sf, out_sign


def reverse_vertices(pm: TwoTwoPremap, vertices) -> TwoTwoPremap:
    """The representative with the given vertex rotations reversed."""
    chosen = set(int(v) for v in vertices)
    cycles = [
        tuple(reversed(c)) if v in chosen else c
        for v, c in enumerate(pm.rep.vertex_cycles)
    ]
    m = make_map(cycles, pm.rep.edges)
    return TwoTwoPremap(rep=m, sign=pm.sign.copy(), char_of_vertex=pm.char_of_vertex)


def _normalized_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def representative_key(pm: TwoTwoPremap) -> tuple:
    """Exact key of the stored representative (rotation-start invariant)."""
    cycles = sorted(_normalized_cycle(c) for c in pm.rep.vertex_cycles)
    return (tuple(cycles), pm.rep.alpha.tobytes(), pm.sign.tobytes())


def premap_key(pm: TwoTwoPremap) -> tuple:
    """Canonical key of the premap itself, quotienting out cycle reversals."""
    cycles = []
    for c in pm.rep.vertex_cycles:
        fwd = _normalized_cycle(c)
        rev = _normalized_cycle(tuple(reversed(c)))
        cycles.append(min(fwd, rev))
    cycles.sort()
    return (tuple(cycles), pm.rep.alpha.tobytes(), pm.sign.tobytes())


def relabel_premap(pm: TwoTwoPremap, phi: np.ndarray) -> TwoTwoPremap:
    """Rename darts by the bijection ``phi`` (old dart -> new dart)."""
    phi = np.asarray(phi, dtype=np.int32)
    cycles = [tuple(int(phi[d]) for d in c) for c in pm.rep.vertex_cycles]
    pairs = [(int(phi[a]), int(phi[b])) for a, b in pm.rep.edges]
    m = make_map(cycles, pairs)
    sign = np.empty_like(pm.sign)
    sign[phi] = pm.sign
    return TwoTwoPremap(rep=m, sign=sign, char_of_vertex=None)
