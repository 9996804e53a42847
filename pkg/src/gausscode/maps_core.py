"""Combinatorial maps: rotation systems on darts.

A map is a pair of permutations on the dense dart set ``0..n-1``: a
fixpoint-free involution ``alpha`` pairing darts into edges, and a
permutation ``tau`` whose cycles give the counterclockwise dart order
around each vertex.  Faces are the orbits of ``tau∘alpha``, and Euler's
relation ``V - E + F = 2k - 2g`` recovers the genus of the surface the
map is embedded in, so a map is a complete combinatorial description of
a graph embedding on an orientable surface.

An orientation is a sign per dart with opposite signs across each edge;
the edge points from its ``-1`` dart (tail) to its ``+1`` dart (tip).
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels

__all__ = [
    "InvalidMap",
    "CombMap",
    "BlockTree",
    "make_map",
    "map_key",
    "faces",
    "face_count",
    "genus",
    "connected_components",
    "is_bipartite",
    "block_cut_tree",
    "check_orientation",
    "orientation_key",
    "map_to_json",
    "map_from_json",
    "map_to_dot",
]


class InvalidMap(ValueError):
    """Raised when dart data does not describe a valid map."""


@dataclass(frozen=True, eq=False)
class CombMap:
    """An immutable rotation system.

    Vertex rotations are stored in compressed form: ``cycle_darts`` holds
    the darts of all vertices back to back, vertex ``v`` owning the slice
    ``cycle_starts[v]:cycle_starts[v+1]`` in counterclockwise order.
    ``edge_array`` is the ``(E, 2)`` table of dart pairs ``(d, alpha[d])``
    with ``d < alpha[d]``, rows sorted by the smaller dart.  The
    ``vertex_cycles`` and ``edges`` views expose both as nested tuples.
    """

    tau: np.ndarray
    alpha: np.ndarray
    vertex_of: np.ndarray
    cycle_darts: np.ndarray
    cycle_starts: np.ndarray
    edge_array: np.ndarray
    edge_of_dart: np.ndarray

    @property
    def n_darts(self) -> int:
        return len(self.tau)

    @property
    def n_vertices(self) -> int:
        return len(self.cycle_starts) - 1

    @property
    def n_edges(self) -> int:
        return len(self.edge_array)

    @cached_property
    def vertex_cycles(self) -> tuple[tuple[int, ...], ...]:
        starts = self.cycle_starts.tolist()
        darts = self.cycle_darts.tolist()
        return tuple(
            tuple(darts[starts[v]: starts[v + 1]]) for v in range(len(starts) - 1)
        )

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(map(tuple, self.edge_array.tolist()))

    def vertex_cycle(self, v: int) -> list[int]:
        return self.cycle_darts[self.cycle_starts[v]: self.cycle_starts[v + 1]].tolist()

    def tau_inverse(self) -> np.ndarray:
        inv = np.empty_like(self.tau)
        inv[self.tau] = np.arange(len(self.tau), dtype=self.tau.dtype)
        return inv

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CombMap):
            return NotImplemented
        return np.array_equal(self.tau, other.tau) and np.array_equal(
            self.alpha, other.alpha
        )

    def __repr__(self) -> str:
        return (
            f"CombMap(darts={self.n_darts}, vertices={self.n_vertices}, "
            f"edges={self.n_edges})"
        )


def make_map(
    vertex_cycles: Iterable[Sequence[int]],
    alpha_pairs: Iterable[Sequence[int]],
) -> CombMap:
    """Build and validate a map from vertex dart cycles and edge dart pairs.

    Every dart must appear in exactly one cycle and exactly one pair, darts
    must be the dense range ``0..n-1``, and no pair may repeat a dart.
    """
    if isinstance(vertex_cycles, np.ndarray):
        arr = np.ascontiguousarray(vertex_cycles, dtype=np.int32)
        if arr.ndim != 2:
            raise InvalidMap("cycle array must be two-dimensional")
        n_cycles = arr.shape[0]
        lengths = np.full(n_cycles, arr.shape[1], dtype=np.int64)
        flat = arr.ravel()
        if n_cycles and arr.shape[1] == 0:
            raise InvalidMap("empty vertex cycle")
    else:
        cyc_lists = [list(map(int, c)) for c in vertex_cycles]
        if any(not c for c in cyc_lists):
            raise InvalidMap("empty vertex cycle")
        n_cycles = len(cyc_lists)
        lengths = np.fromiter((len(c) for c in cyc_lists), dtype=np.int64, count=n_cycles)
        flat = np.fromiter(
            (d for c in cyc_lists for d in c), dtype=np.int32, count=int(lengths.sum())
        )
    n = len(flat)
    if n and (flat.min() < 0 or flat.max() >= n):
        raise InvalidMap(f"dart out of range 0..{n - 1}")
    if n and np.bincount(flat, minlength=n).max() > 1:
        dup = int(np.flatnonzero(np.bincount(flat, minlength=n) > 1)[0])
        raise InvalidMap(f"dart {dup} appears in more than one vertex cycle")
    if n % 2 != 0:
        raise InvalidMap("odd number of darts")

    cycle_starts = np.concatenate(([0], np.cumsum(lengths))).astype(np.int64)
    starts = cycle_starts[:-1]
    succ = np.roll(flat, -1)
    if n_cycles:
        ends = starts + lengths - 1
        succ[ends] = flat[starts]
    tau = np.empty(n, dtype=np.int32)
    tau[flat] = succ
    vertex_of = np.empty(n, dtype=np.int32)
    vertex_of[flat] = np.repeat(np.arange(n_cycles, dtype=np.int32), lengths)

    if isinstance(alpha_pairs, np.ndarray):
        pair_arr = np.ascontiguousarray(alpha_pairs, dtype=np.int32)
    else:
        pair_arr = np.asarray([(int(a), int(b)) for a, b in alpha_pairs], dtype=np.int32)
    pair_arr = pair_arr.reshape(-1, 2)
    if 2 * len(pair_arr) != n:
        raise InvalidMap(f"{len(pair_arr)} edge pairs cannot cover {n} darts")
    if n:
        if pair_arr.min() < 0 or pair_arr.max() >= n:
            raise InvalidMap(f"dart out of range 0..{n - 1}")
        if np.any(pair_arr[:, 0] == pair_arr[:, 1]):
            a = int(pair_arr[pair_arr[:, 0] == pair_arr[:, 1]][0, 0])
            raise InvalidMap(f"edge pair ({a}, {a}) is a fixpoint; alpha must be fixpoint-free")
        counts = np.bincount(pair_arr.ravel(), minlength=n)
        if counts.max() > 1:
            dup = int(np.flatnonzero(counts > 1)[0])
            raise InvalidMap(f"dart {dup} appears in more than one edge pair")
    alpha = np.empty(n, dtype=np.int32)
    alpha[pair_arr[:, 0]] = pair_arr[:, 1]
    alpha[pair_arr[:, 1]] = pair_arr[:, 0]

    sorted_pairs = np.sort(pair_arr, axis=1)
    order = np.argsort(sorted_pairs[:, 0], kind="stable")
    sorted_pairs = np.ascontiguousarray(sorted_pairs[order])
    edge_of_dart = np.empty(n, dtype=np.int32)
    eids = np.arange(len(sorted_pairs), dtype=np.int32)
    edge_of_dart[sorted_pairs[:, 0]] = eids
    edge_of_dart[sorted_pairs[:, 1]] = eids
    return CombMap(
        tau=tau,
        alpha=alpha,
        vertex_of=vertex_of,
        cycle_darts=flat,
        cycle_starts=cycle_starts,
        edge_array=sorted_pairs,
        edge_of_dart=edge_of_dart,
    )


def map_key(m: CombMap) -> bytes:
    """Canonical byte key for exact map equality (dedup, dict keys)."""
    return m.tau.tobytes() + b"|" + m.alpha.tobytes()


def faces(m: CombMap) -> list[list[int]]:
    """The orbits of ``tau∘alpha`` as dart cycles."""
    if m.n_darts == 0:
        return []
    comp = m.tau[m.alpha]
    order, starts = _kernels.orbit_sequences(comp)
    order = order.tolist()
    return [order[starts[i]: starts[i + 1]] for i in range(len(starts) - 1)]


def face_count(m: CombMap) -> int:
    return _kernels.compose_orbit_count(m.tau, m.alpha)


def _component_count(m: CombMap) -> int:
    if m.n_darts == 0:
        return 0
    _, k = _kernels.dart_components(m.tau, m.alpha)
    return k


def genus(m: CombMap) -> int:
    """Genus from Euler's relation ``V - E + F = 2k - 2g``."""
    chi = m.n_vertices - m.n_edges + face_count(m)
    two_g = 2 * _component_count(m) - chi
    if two_g % 2 != 0 or two_g < 0:
        raise InvalidMap(f"Euler relation violated: V-E+F = {chi}")
    return two_g // 2


def connected_components(m: CombMap) -> list[list[int]]:
    """Partition of the vertices into connected components."""
    if m.n_darts == 0:
        return []
    labels, k = _kernels.dart_components(m.tau, m.alpha)
    first_darts = m.cycle_darts[m.cycle_starts[:-1]]
    comps: list[list[int]] = [[] for _ in range(k)]
    for v, lab in enumerate(labels[first_darts].tolist()):
        comps[lab].append(v)
    return [c for c in comps if c]


def is_bipartite(m: CombMap) -> tuple[bool, list[int] | None]:
    """2-colorability of the underlying multigraph; loops make it False.

    Returns ``(True, coloring)`` with a 0/1 color per vertex, or
    ``(False, None)``.
    """
    vertex_of = m.vertex_of.tolist()
    adj: list[list[int]] = [[] for _ in range(m.n_vertices)]
    for d1, d2 in m.edge_array.tolist():
        u, w = vertex_of[d1], vertex_of[d2]
        if u == w:
            return False, None
        adj[u].append(w)
        adj[w].append(u)
    color = [-1] * m.n_vertices
    for start in range(m.n_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            cv = color[v]
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - cv
                    queue.append(w)
                elif color[w] == cv:
                    return False, None
    return True, color


# ---------------------------------------------------------------------------
# block-cut decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockTree:
    """2-connected blocks of a connected map, rooted toward a map root.

    ``blocks[b]`` lists edge indices; each loop edge forms its own
    singleton block.  ``block_root[b]`` is the vertex of block ``b``
    nearest the map root (the articulation separating the block from the
    root, or the root itself).  ``blocks_at_vertex`` is the tree
    incidence between blocks and their vertices.
    """

    root: int
    blocks: tuple[tuple[int, ...], ...]
    block_vertices: tuple[tuple[int, ...], ...]
    block_root: tuple[int, ...]
    cut_vertices: frozenset[int]
    block_of_edge: np.ndarray = field(repr=False)
    blocks_at_vertex: tuple[tuple[int, ...], ...] = field(repr=False)
    component_vertices: tuple[int, ...] = field(repr=False)


def _component_block_tree(m: CombMap, root: int) -> BlockTree:
    """Block-cut data for the connected component containing ``root``."""
    n_v = m.n_vertices
    vertex_of = m.vertex_of.tolist()

    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_v)]
    loops_at: dict[int, list[int]] = {}
    edge_rows = m.edge_array.tolist()
    for e, (d1, d2) in enumerate(edge_rows):
        v, w = vertex_of[d1], vertex_of[d2]
        if v == w:
            loops_at.setdefault(v, []).append(e)
        else:
            adj[v].append((e, w))
            adj[w].append((e, v))

    disc = [-1] * n_v
    low = [0] * n_v
    edge_stack: list[int] = []
    blocks: list[list[int]] = []
    cut = set()
    disc[root] = low[root] = 0
    timer = 1
    root_children = 0
    # three parallel stacks: vertex, tree edge id, next adjacency index
    sv = [root]
    spe = [-1]
    si = [0]
    while sv:
        v = sv[-1]
        i = si[-1]
        av = adj[v]
        if i < len(av):
            si[-1] = i + 1
            e, w = av[i]
            if e == spe[-1]:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append(e)
                if v == root:
                    root_children += 1
                sv.append(w)
                spe.append(e)
                si.append(0)
            elif disc[w] < disc[v]:
                edge_stack.append(e)
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            pe = spe[-1]
            sv.pop()
            spe.pop()
            si.pop()
            if sv:
                u = sv[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == pe:
                            break
                    blocks.append(block)
                    if u != root:
                        cut.add(u)
    if root_children > 1:
        cut.add(root)

    comp_vertices = [v for v in range(n_v) if disc[v] != -1]
    for v in comp_vertices:
        if v in loops_at:
            for e in loops_at[v]:
                blocks.append([e])
    # any vertex with a loop plus another incident edge is a cut in the
    # block tree sense only if it actually disconnects; loops never create
    # cut vertices, so nothing to add here.

    block_of_edge = np.full(m.n_edges, -1, dtype=np.int32)
    block_vertices: list[tuple[int, ...]] = []
    for b, es in enumerate(blocks):
        vs = set()
        for e in es:
            block_of_edge[e] = b
            d1, d2 = edge_rows[e]
            vs.add(vertex_of[d1])
            vs.add(vertex_of[d2])
        block_vertices.append(tuple(sorted(vs)))

    # distance layering from the root picks each block's root
    dist = [-1] * n_v
    dist[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for _, w in adj[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    block_root = tuple(min(vs, key=lambda v: (dist[v], v)) for vs in block_vertices)

    blocks_at_vertex: list[list[int]] = [[] for _ in range(n_v)]
    for b, vs in enumerate(block_vertices):
        for v in vs:
            blocks_at_vertex[v].append(b)

    return BlockTree(
        root=root,
        blocks=tuple(tuple(sorted(es)) for es in blocks),
        block_vertices=tuple(block_vertices),
        block_root=block_root,
        cut_vertices=frozenset(cut),
        block_of_edge=block_of_edge,
        blocks_at_vertex=tuple(tuple(bs) for bs in blocks_at_vertex),
        component_vertices=tuple(comp_vertices),
    )


def _reroot_block_tree(m: CombMap, bt: BlockTree, new_root: int) -> BlockTree:
    """Same decomposition, block roots re-picked toward ``new_root``.

    Blocks and cut vertices do not depend on the root, so rerooting only
    needs a fresh distance layering.
    """
    vertex_of = m.vertex_of.tolist()
    adj: list[list[int]] = [[] for _ in range(m.n_vertices)]
    for d1, d2 in m.edge_array.tolist():
        u, w = vertex_of[d1], vertex_of[d2]
        if u != w:
            adj[u].append(w)
            adj[w].append(u)
    dist = {new_root: 0}
    frontier = [new_root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    block_root = tuple(
        min(vs, key=lambda v: (dist[v], v)) for vs in bt.block_vertices
    )
    return BlockTree(
        root=new_root,
        blocks=bt.blocks,
        block_vertices=bt.block_vertices,
        block_root=block_root,
        cut_vertices=bt.cut_vertices,
        block_of_edge=bt.block_of_edge,
        blocks_at_vertex=bt.blocks_at_vertex,
        component_vertices=bt.component_vertices,
    )


def block_cut_tree(m: CombMap, root: int) -> BlockTree:
    """Blocks, cut vertices and block roots of a connected map."""
    bt = _component_block_tree(m, root)
    if len(bt.component_vertices) != m.n_vertices:
        raise InvalidMap("block_cut_tree requires a connected map")
    return bt


# ---------------------------------------------------------------------------
# orientations
# ---------------------------------------------------------------------------


def check_orientation(m: CombMap, sign: np.ndarray) -> np.ndarray:
    """Validate a dart sign array: values +-1 with sign[d]*sign[alpha[d]] = -1."""
    sign = np.asarray(sign, dtype=np.int8)
    if sign.shape != (m.n_darts,):
        raise InvalidMap(f"orientation must assign a sign to each of {m.n_darts} darts")
    if m.n_darts and not np.all(np.abs(sign) == 1):
        raise InvalidMap("orientation signs must be +1 or -1")
    if m.n_darts and not np.all(sign * sign[m.alpha] == -1):
        raise InvalidMap("orientation must give opposite signs to the darts of each edge")
    return sign


def orientation_key(sign: np.ndarray) -> bytes:
    return np.asarray(sign, dtype=np.int8).tobytes()


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def map_to_json(m: CombMap, sign: np.ndarray | None = None) -> str:
    doc: dict = {
        "vertices": [list(c) for c in m.vertex_cycles],
        "alpha": [list(e) for e in m.edges],
    }
    if sign is not None:
        doc["orientation"] = [int(s) for s in sign]
    return json.dumps(doc)


def map_from_json(text: str) -> tuple[CombMap, np.ndarray | None]:
    doc = json.loads(text)
    m = make_map(doc["vertices"], doc["alpha"])
    sign = None
    if "orientation" in doc and doc["orientation"] is not None:
        sign = check_orientation(m, np.asarray(doc["orientation"], dtype=np.int8))
    return m, sign


def map_to_dot(
    m: CombMap,
    sign: np.ndarray | None = None,
    vertex_labels: Sequence[str] | None = None,
    edge_labels: Sequence[str] | None = None,
) -> str:
    """DOT export of the underlying multigraph, directed when a sign is given."""
    directed = sign is not None
    lines = ["digraph map {" if directed else "graph map {"]
    for v in range(m.n_vertices):
        label = vertex_labels[v] if vertex_labels is not None else str(v)
        lines.append(f'  v{v} [label="{label}"];')
    connector = "->" if directed else "--"
    for e, (d1, d2) in enumerate(m.edges):
        u = int(m.vertex_of[d1])
        w = int(m.vertex_of[d2])
        if directed and sign[d1] > 0:
            u, w = w, u  # tail is the -1 dart
        attr = f' [label="{edge_labels[e]}"]' if edge_labels is not None else ""
        lines.append(f"  v{u} {connector} v{w}{attr};")
    lines.append("}")
    return "\n".join(lines)
