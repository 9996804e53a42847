"""Edge orientation via per-vertex bridge graphs and block-tree labeling.

Given a map, :func:`orient_map` picks a root per connected component,
decides for every cut vertex, loop vertex and root which attached pieces
sit inside or outside the vertex's dart cycle, labels vertices 0/1 over
the block tree from those choices, and orients every edge from the
labels.  When the input is the Seifert map of a realizable paragraph the
resulting orientation makes its vertex-medial map planar; the procedure
itself never fails, it only records whether the input passed the
bipartiteness and local-planarity checks along the way.

The per-vertex decision uses the classical cycle-with-bridges planarity
criterion: two bridges conflict when their attachments interleave around
the cycle (or share three positions), and an embedding exists exactly
when the conflict graph is 2-colorable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .maps_core import (
    BlockTree,
    CombMap,
    _component_block_tree,
    _reroot_block_tree,
    check_orientation,
    is_bipartite,
)

__all__ = [
    "Bridge",
    "BridgeGraph",
    "SideAssignment",
    "NonPlanarSv",
    "Diagnostics",
    "build_bridge_graph",
    "bridges_conflict",
    "conflict_and_embed",
    "label_and_orient",
    "orient_map",
]


@dataclass(frozen=True)
class Bridge:
    """A piece attached to the dart cycle of a vertex.

    ``kind`` is ``"component"`` for a connected piece of the map minus the
    vertex (keyed by its block id) or ``"loop"`` for a loop edge (keyed by
    edge id).  ``attachments`` are the positions on the dart cycle where
    the piece connects.
    """

    kind: str
    key: int
    attachments: tuple[int, ...]
    is_anchor: bool = False

    @property
    def ref(self) -> tuple[str, int]:
        return (self.kind, self.key)


@dataclass(frozen=True)
class BridgeGraph:
    """The cycle-with-bridges graph describing the neighborhood of a vertex."""

    vertex: int
    cycle_darts: tuple[int, ...]
    bridges: tuple[Bridge, ...]
    anchor_index: int | None
    anchor_inside: bool


@dataclass
class SideAssignment:
    """Inside/outside choice per bridge, plus the remaining free choices.

    ``free_components`` lists the conflict-graph components containing no
    anchor; flipping all bridges of such a component together yields
    another valid embedding.
    """

    inside: dict[tuple[str, int], bool]
    free_components: tuple[tuple[tuple[str, int], ...], ...]
    planar: bool = True
    witness: tuple[int, ...] | None = None


class NonPlanarSv(ValueError):
    """The bridge graph of a vertex admits no plane embedding.

    Carries an odd conflict cycle as ``witness`` (bridge indices) and a
    greedy best-effort ``assignment`` so callers can continue.
    """

    def __init__(self, vertex: int, witness: tuple[int, ...], assignment: SideAssignment):
        self.vertex = vertex
        self.witness = witness
        self.assignment = assignment
        super().__init__(
            f"bridge graph of vertex {vertex} is not planar "
            f"(odd conflict cycle {witness})"
        )


def build_bridge_graph(
    m: CombMap, v: int, v0: int, bt: BlockTree | None = None
) -> BridgeGraph:
    """Bridges of the dart cycle of ``v``: one per component of the map
    minus ``v`` and one per loop at ``v``.

    Components of the punctured map correspond to the blocks containing
    ``v``.  The anchor bridge is the one leading to the map root ``v0``;
    when ``v == v0`` it is instead the component containing the least
    vertex, which is placed inside rather than outside.
    """
    if bt is None:
        bt = _component_block_tree(m, v0)
    cycle = m.vertex_cycle(v)
    vertex_of = m.vertex_of
    alpha = m.alpha
    edge_of_dart = m.edge_of_dart
    block_of_edge = bt.block_of_edge

    attach: dict[tuple[str, int], list[int]] = {}
    for pos, d in enumerate(cycle):
        a = int(alpha[d])
        if vertex_of[a] == v:
            ref = ("loop", int(edge_of_dart[d]))
        else:
            ref = ("component", int(block_of_edge[edge_of_dart[d]]))
        attach.setdefault(ref, []).append(pos)

    anchor_ref: tuple[str, int] | None = None
    if v != v0:
        for b in bt.blocks_at_vertex[v]:
            if bt.block_root[b] != v:
                anchor_ref = ("component", b)
                break
    else:
        minima = _punctured_component_minima(m, v, bt)
        best: tuple[int, int] | None = None  # (least vertex, block id)
        for ref in attach:
            if ref[0] != "component":
                continue
            least = minima[ref[1]]
            if best is None or least < best[0]:
                best = (least, ref[1])
        if best is not None:
            anchor_ref = ("component", best[1])

    bridges = []
    anchor_index = None
    for i, ref in enumerate(sorted(attach)):
        is_anchor = ref == anchor_ref
        if is_anchor:
            anchor_index = i
        bridges.append(
            Bridge(
                kind=ref[0],
                key=ref[1],
                attachments=tuple(sorted(attach[ref])),
                is_anchor=is_anchor,
            )
        )
    return BridgeGraph(
        vertex=v,
        cycle_darts=tuple(int(d) for d in cycle),
        bridges=tuple(bridges),
        anchor_index=anchor_index,
        anchor_inside=(v == v0),
    )


def _punctured_component_minima(m: CombMap, v: int, bt: BlockTree) -> dict[int, int]:
    """Least vertex of each component of ``m`` minus ``v``, keyed by the
    block through which the component attaches to ``v``.

    Components of the punctured map and non-loop blocks at ``v`` correspond
    one to one, so the entering dart identifies the block.  Single pass.
    """
    vertex_of = m.vertex_of.tolist()
    alpha = m.alpha.tolist()
    cd = m.cycle_darts.tolist()
    cs = m.cycle_starts.tolist()
    seen = {v}
    minima: dict[int, int] = {}
    for d0 in cd[cs[v]: cs[v + 1]]:
        w0 = vertex_of[alpha[d0]]
        if w0 == v or w0 in seen:
            continue
        least = w0
        seen.add(w0)
        stack = [w0]
        while stack:
            u = stack.pop()
            for d in cd[cs[u]: cs[u + 1]]:
                w = vertex_of[alpha[d]]
                if w != v and w not in seen:
                    seen.add(w)
                    least = min(least, w)
                    stack.append(w)
        minima[int(bt.block_of_edge[m.edge_of_dart[d0]])] = least
    return minima


def bridges_conflict(a: Bridge, b: Bridge, cycle_length: int) -> bool:
    """Whether two bridges must lie on opposite sides of the cycle.

    They conflict when their attachments interleave around the cycle, or
    when they share at least three attachment positions.
    """
    pa, pb = a.attachments, b.attachments
    if len(pa) < 2 or len(pb) < 2:
        return False
    if len(set(pa) & set(pb)) >= 3:
        return True
    # non-interleaving <=> all of pb lies within one closed gap of pa
    k = len(pa)
    for i in range(k):
        lo = pa[i]
        hi = pa[(i + 1) % k]
        if i + 1 < k:
            if all(lo <= q <= hi for q in pb):
                return False
        else:
            if all(q >= lo or q <= hi for q in pb):
                return False
    return True


def _odd_cycle(u: int, w: int, parent: list[int]) -> tuple[int, ...]:
    """Odd closed walk through the same-color conflict edge (u, w)."""
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    in_pu = set(pu)
    lca = next(x for x in pw if x in in_pu)
    return tuple(pu[: pu.index(lca) + 1] + list(reversed(pw[: pw.index(lca)])))


def conflict_and_embed(sv: BridgeGraph, flips=()) -> SideAssignment:
    """2-color the conflict graph of a bridge graph into sides.

    The component containing the anchor bridge is fixed (anchor outside,
    or inside when the vertex is the map root); every other component is a
    free choice, placed outside by default and flipped when its ordinal is
    in ``flips``.  Raises :class:`NonPlanarSv` when the conflict graph has
    an odd cycle; the raised error carries a greedy assignment that simply
    ignores the violating conflicts.
    """
    nb = len(sv.bridges)
    t = len(sv.cycle_darts)
    adj: list[list[int]] = [[] for _ in range(nb)]
    for i in range(nb):
        for j in range(i + 1, nb):
            if bridges_conflict(sv.bridges[i], sv.bridges[j], t):
                adj[i].append(j)
                adj[j].append(i)

    color = [-1] * nb
    parent = [-1] * nb
    comp_of = [-1] * nb
    comps: list[list[int]] = []
    witness: tuple[int, ...] | None = None
    for start in range(nb):
        if color[start] != -1:
            continue
        cid = len(comps)
        comps.append([])
        color[start] = 0
        queue = [start]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            comp_of[u] = cid
            comps[cid].append(u)
            for x in adj[u]:
                if color[x] == -1:
                    color[x] = 1 - color[u]
                    parent[x] = u
                    queue.append(x)
                elif color[x] == color[u] and witness is None:
                    witness = _odd_cycle(u, x, parent)

    anchored = comp_of[sv.anchor_index] if sv.anchor_index is not None else -1
    # pick which color is "inside" per component: the anchor gets its
    # required side; in free components the least bridge sits outside.
    inside_color: list[int] = []
    free: list[list[int]] = []
    for cid, members in enumerate(comps):
        if cid == anchored:
            c_anchor = color[sv.anchor_index]
            inside_color.append(c_anchor if sv.anchor_inside else 1 - c_anchor)
        else:
            inside_color.append(1 - color[members[0]])
            free.append(members)

    flips = set(flips)
    for ordinal, members in enumerate(free):
        if ordinal in flips:
            cid = comp_of[members[0]]
            inside_color[cid] = 1 - inside_color[cid]

    inside = {
        sv.bridges[i].ref: color[i] == inside_color[comp_of[i]] for i in range(nb)
    }
    assignment = SideAssignment(
        inside=inside,
        free_components=tuple(
            tuple(sv.bridges[i].ref for i in members) for members in free
        ),
        planar=witness is None,
        witness=witness,
    )
    if witness is not None:
        raise NonPlanarSv(sv.vertex, witness, assignment)
    return assignment


@dataclass
class Diagnostics:
    """What the orientation procedure observed while running.

    ``sv_planar`` and ``free_choices`` are keyed by processed vertex (cut
    vertices, loop vertices, and each component root).
    """

    bipartite: bool
    sv_planar: dict[int, bool] = field(default_factory=dict)
    free_choices: dict[int, int] = field(default_factory=dict)
    roots: tuple[int, ...] = ()

    @property
    def all_sv_planar(self) -> bool:
        return all(self.sv_planar.values())

    def as_dict(self) -> dict:
        return {
            "bipartite": self.bipartite,
            "sv_planar": self.all_sv_planar,
            "free_choices": {str(v): c for v, c in sorted(self.free_choices.items())},
        }


def _root_distances(
    m: CombMap, bt: BlockTree, vertex_of: list[int], edge_rows: list[list[int]]
) -> dict[int, int]:
    adj: list[list[int]] = [[] for _ in range(m.n_vertices)]
    for d1, d2 in edge_rows:
        u, w = vertex_of[d1], vertex_of[d2]
        if u != w:
            adj[u].append(w)
            adj[w].append(u)
    dist = {bt.root: 0}
    frontier = [bt.root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def label_and_orient(
    m: CombMap,
    bt: BlockTree,
    sides: dict[int, SideAssignment],
    labels: list[int] | None = None,
    parents: list[int] | None = None,
) -> np.ndarray:
    """Label vertices over the block tree and orient every edge.

    Within each block, vertices are layered by distance from the block
    root; inside blocks copy the root's label onto its neighbors, outside
    blocks alternate from it.  Edges with distinct labels point 0 -> 1;
    equal-label edges follow the child's label (child 0 -> parent,
    parent 1 -> child); loops point from their smaller dart to the larger.
    Only edges of ``bt``'s component receive signs (others stay 0).
    """
    if labels is None:
        labels = [-1] * m.n_vertices
    if parents is None:
        parents = [-1] * m.n_vertices
    labels[bt.root] = 1

    vertex_of = m.vertex_of.tolist()
    edge_rows = m.edge_array.tolist()

    root_dist = _root_distances(m, bt, vertex_of, edge_rows)
    order = sorted(range(len(bt.blocks)), key=lambda b: (root_dist[bt.block_root[b]], b))
    for b in order:
        verts = bt.block_vertices[b]
        if len(verts) == 1:
            continue  # loop block: nothing to label
        root = bt.block_root[b]
        adj: dict[int, list[int]] = {u: [] for u in verts}
        for e in bt.blocks[b]:
            d1, d2 = edge_rows[e]
            u, w = vertex_of[d1], vertex_of[d2]
            if u != w:
                adj[u].append(w)
                adj[w].append(u)
        side_inside = sides[root].inside[("component", b)]
        lroot = labels[root]
        if lroot == -1:
            raise RuntimeError(f"block {b} processed before its root {root} was labeled")
        dist = {root: 0}
        frontier = [root]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = level
                        nxt.append(w)
            frontier = nxt
        for u in verts:
            if u == root:
                continue
            i = dist[u]
            labels[u] = (lroot + i + 1) % 2 if side_inside else (lroot + i) % 2
            parents[u] = min(w for w in adj[u] if dist[w] == i - 1)

    sign = np.zeros(m.n_darts, dtype=np.int8)
    comp_set = set(bt.component_vertices)
    for d1, d2 in edge_rows:
        u, w = vertex_of[d1], vertex_of[d2]
        if u not in comp_set:
            continue
        if u == w:
            sign[min(d1, d2)] = -1
            sign[max(d1, d2)] = 1
            continue
        lu, lw = labels[u], labels[w]
        if lu != lw:
            tail_is_u = lu == 0
        else:
            if parents[w] == u:
                par, chi = u, w
            elif parents[u] == w:
                par, chi = w, u
            else:
                # same-layer edge (only in non-bipartite blocks): treat the
                # smaller index as the parent for determinism
                par, chi = min(u, w), max(u, w)
            tail = chi if lu == 0 else par
            tail_is_u = tail == u
        if tail_is_u:
            sign[d1], sign[d2] = -1, 1
        else:
            sign[d1], sign[d2] = 1, -1
    return sign


def orient_map(m: CombMap, flips: dict[int, tuple[int, ...]] | None = None):
    """Orient every edge of ``m``; never aborts, but records diagnostics.

    Connected components are processed independently: each gets the least
    non-cut vertex as root, a block tree, inside/outside decisions at its
    cut vertices, loop vertices and root (with optional ``flips`` of the
    free choices, keyed by vertex), then labels and edge directions.

    Returns ``(sign, diagnostics)``.
    """
    flips = flips or {}
    diagnostics = Diagnostics(bipartite=is_bipartite(m)[0])
    sign = np.zeros(m.n_darts, dtype=np.int8)
    labels = [-1] * m.n_vertices
    parents = [-1] * m.n_vertices
    assigned = [False] * m.n_vertices

    roots = []
    for start in range(m.n_vertices):
        if assigned[start]:
            continue
        probe = _component_block_tree(m, start)
        for v in probe.component_vertices:
            assigned[v] = True
        non_cut = [v for v in probe.component_vertices if v not in probe.cut_vertices]
        v0 = min(non_cut) if non_cut else min(probe.component_vertices)
        bt = probe if v0 == start else _reroot_block_tree(m, probe, v0)
        roots.append(v0)

        loop_vertices = set()
        for verts, es in zip(bt.block_vertices, bt.blocks):
            if len(verts) == 1:
                loop_vertices.add(verts[0])
        processed = sorted(set(bt.cut_vertices) | loop_vertices | {v0})

        sides: dict[int, SideAssignment] = {}
        for v in processed:
            sv = build_bridge_graph(m, v, v0, bt)
            try:
                assignment = conflict_and_embed(sv, flips.get(v, ()))
                diagnostics.sv_planar[v] = True
            except NonPlanarSv as err:
                assignment = err.assignment
                diagnostics.sv_planar[v] = False
            sides[v] = assignment
            diagnostics.free_choices[v] = len(assignment.free_components)

        comp_sign = label_and_orient(m, bt, sides, labels, parents)
        mask = comp_sign != 0
        sign[mask] = comp_sign[mask]

    diagnostics.roots = tuple(roots)
    if m.n_darts:
        check_orientation(m, sign)
    return sign, diagnostics
