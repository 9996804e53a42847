"""The vertex-medial operation and straight-ahead tracing.

The vertex-medial premap of a map has one 4-valent vertex per edge and
one edge per dart, glued following the *vertex* rotations of the source
map (not its faces, so this is not the classical face-based medial
graph).  It inverts the Seifert map construction: an orientation of the
source map selects one rotation representative per vertex, and
conversely every representative induces an orientation.

Straight-ahead walks leave each 4-valent vertex by the dart opposite the
arriving one; recording the vertices visited recovers the paragraph the
premap encodes.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .maps_core import CombMap, check_orientation, make_map
from .seifert import TwoTwoPremap, seifert_successor_perm, _sf_index
from .words import Paragraph

__all__ = [
    "vertex_medial_premap",
    "vertex_medial_map",
    "straight_ahead",
    "trace_paragraph",
    "mirror_map",
    "premap_dart_bijection",
]


def _medial_alpha(m: CombMap) -> np.ndarray:
    n = m.n_darts
    tinv = m.tau_inverse()
    alpha2 = np.empty(2 * n, dtype=np.int32)
    d = np.arange(n, dtype=np.int32)
    alpha2[2 * d] = 2 * tinv + 1
    alpha2[2 * d + 1] = 2 * m.tau
    return alpha2


def _medial_sign(n_darts: int) -> np.ndarray:
    sign = np.empty(2 * n_darts, dtype=np.int8)
    sign[0::2] = 1
    sign[1::2] = -1
    return sign


def vertex_medial_premap(
    m: CombMap, labels: tuple[str, ...] | None = None
) -> TwoTwoPremap:
    """The vertex-medial premap of ``m``.

    Darts come in pairs ``2d`` (positive) and ``2d+1`` (negative) for each
    source dart ``d``; each source edge ``{d, alpha(d)}`` becomes a vertex
    whose two admissible rotations are ``(alpha(d)+, d+, d-, alpha(d)-)``
    and its reversal.  ``labels`` (one per source edge) become the vertex
    characters, enabling :func:`trace_paragraph`.
    """
    alpha2 = _medial_alpha(m)
    ed = m.edge_array
    d, a = ed[:, 0], ed[:, 1]
    cycles = np.column_stack((2 * a, 2 * d, 2 * d + 1, 2 * a + 1))
    evens = np.arange(0, 2 * m.n_darts, 2, dtype=np.int32)
    pairs = np.column_stack((alpha2[evens], evens))
    mm = make_map(cycles, pairs)
    return TwoTwoPremap(
        rep=mm, sign=_medial_sign(m.n_darts), char_of_vertex=labels
    )


def vertex_medial_map(m: CombMap, sign: np.ndarray) -> tuple[CombMap, np.ndarray]:
    """The vertex-medial representative selected by an orientation of ``m``.

    For the edge with positive dart ``p`` and negative dart ``n`` the chosen
    rotation is ``(n+, p+, p-, n-)``.  Returns the map together with its
    2-in/2-out orientation (``2d`` positive, ``2d+1`` negative).
    """
    sign = check_orientation(m, sign)
    alpha2 = _medial_alpha(m)
    ed = m.edge_array
    first_positive = sign[ed[:, 0]] > 0
    p = np.where(first_positive, ed[:, 0], ed[:, 1])
    n = np.where(first_positive, ed[:, 1], ed[:, 0])
    cycles = np.column_stack((2 * n, 2 * p, 2 * p + 1, 2 * n + 1))
    evens = np.arange(0, 2 * m.n_darts, 2, dtype=np.int32)
    pairs = np.column_stack((alpha2[evens], evens))
    mm = make_map(cycles, pairs)
    return mm, _medial_sign(m.n_darts)


def straight_ahead(pm: TwoTwoPremap, d: int) -> int:
    """The dart opposite ``d`` in its 4-cycle: two rotation steps.

    Opposite darts have opposite signs and the result is the same for
    every rotation representative of the premap.
    """
    tau = pm.rep.tau
    return int(tau[tau[d]])


def trace_paragraph(pm: TwoTwoPremap) -> Paragraph:
    """Recover the paragraph traced by the straight-ahead walks.

    Each closed walk hops from an arriving (positive) dart to the arriving
    dart across the opposite leaving dart; one word per walk, letters
    being the characters of the visited vertices.  The walk containing the
    least dart comes first and starts at that dart.
    """
    if pm.char_of_vertex is None:
        raise ValueError("premap has no vertex characters to trace")
    tau = pm.rep.tau
    alpha = pm.rep.alpha
    pos = pm.positive_darts()
    walk_next = alpha[tau[tau[pos]]]
    idx = _sf_index(pm)
    order, starts = _kernels.orbit_sequences(idx[walk_next])
    order = order.tolist()
    vertex_of = pm.rep.vertex_of
    words = []
    for i in range(len(starts) - 1):
        walk = order[starts[i]: starts[i + 1]]
        words.append(
            [pm.char_of_vertex[vertex_of[pos[k]]] for k in walk]
        )
    return Paragraph(words)


def mirror_map(m: CombMap) -> CombMap:
    """The mirror image: every vertex rotation reversed."""
    cycles = [tuple(reversed(c)) for c in m.vertex_cycles]
    return make_map(cycles, m.edges)


def premap_dart_bijection(pm: TwoTwoPremap) -> np.ndarray:
    """Dart identification between a premap and the medial of its Seifert map.

    Maps each dart of ``pm`` to the corresponding dart of
    ``vertex_medial_premap(seifert_map(pm))``: a positive dart ``d`` goes
    to the positive copy of its Seifert-map dart, and the leaving dart
    adjacent to ``d`` in its rotation goes to the negative copy.  Under
    this renaming the round trip reproduces ``pm`` exactly.
    """
    idx = _sf_index(pm)
    rho = seifert_successor_perm(pm)
    alpha = pm.rep.alpha
    phi = np.empty(pm.rep.n_darts, dtype=np.int32)
    pos = pm.positive_darts()
    phi[pos] = 2 * idx[pos]
    phi[alpha[rho[pos]]] = 2 * idx[pos] + 1
    return phi
