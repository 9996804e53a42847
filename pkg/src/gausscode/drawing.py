"""Plane drawing of a genus-zero 4-valent map as an SVG curve picture.

The map is subdivided (two auxiliary points per edge, which removes loops
and parallel edges), the longest face is pinned to a circle and every
other point placed at the barycenter of its neighbors; the closed curves
are then polylines through crossing points and the auxiliary edge points
of their straight-ahead walks.  Output geometry is best-effort: tests and
callers rely only on the combinatorial data.
"""

from __future__ import annotations

import math

import numpy as np

from .maps_core import CombMap, faces

__all__ = ["embedding_svg"]

_MAX_POINTS = 1500
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _barycentric_positions(m: CombMap, outer: list[int]) -> np.ndarray:
    """Positions for vertices and the two subdivision points per edge.

    Point ids: vertex v -> v; edge e -> n_vertices + 2e (side of the
    smaller dart) and n_vertices + 2e + 1.
    """
    nv = m.n_vertices
    npts = nv + 2 * m.n_edges
    if npts > _MAX_POINTS:
        raise ValueError(f"map too large to draw ({npts} layout points)")

    def sub_ids(d: int) -> tuple[int, int]:
        e = int(m.edge_of_dart[d])
        lo = m.edges[e][0]
        s1, s2 = nv + 2 * e, nv + 2 * e + 1
        return (s1, s2) if d == lo else (s2, s1)

    adj: list[set[int]] = [set() for _ in range(npts)]
    for d, a in m.edges:
        u, w = int(m.vertex_of[d]), int(m.vertex_of[a])
        s1, s2 = sub_ids(d)
        for x, y in ((u, s1), (s1, s2), (s2, w)):
            adj[x].add(y)
            adj[y].add(x)

    # boundary walk of the outer face, with subdivision points interleaved
    boundary: list[int] = []
    for d in outer:
        boundary.append(int(m.vertex_of[d]))
        boundary.extend(sub_ids(d))
    # a dart can bound the same face twice; keep first occurrences only
    seen = set()
    boundary = [p for p in boundary if not (p in seen or seen.add(p))]

    pos = np.zeros((npts, 2))
    fixed = np.zeros(npts, dtype=bool)
    for i, p in enumerate(boundary):
        ang = 2 * math.pi * i / len(boundary)
        pos[p] = (math.cos(ang), math.sin(ang))
        fixed[p] = True

    free = np.flatnonzero(~fixed)
    if len(free):
        index_of = {int(p): i for i, p in enumerate(free)}
        A = np.zeros((len(free), len(free)))
        b = np.zeros((len(free), 2))
        for i, p in enumerate(free):
            nbrs = adj[p]
            A[i, i] = len(nbrs) if nbrs else 1.0
            for q in nbrs:
                if fixed[q]:
                    b[i] += pos[q]
                else:
                    A[i, index_of[q]] -= 1.0
        pos[free] = np.linalg.solve(A, b)
    return pos


def _walks(m: CombMap) -> list[list[int]]:
    """Straight-ahead walks of a 4-valent map as dart sequences."""
    nxt = {}
    for c in m.vertex_cycles:
        for i, d in enumerate(c):
            nxt[d] = c[(i + 2) % 4]
    alpha = m.alpha
    seen = set()
    walks = []
    for d0 in range(m.n_darts):
        if d0 in seen:
            continue
        walk = []
        d = d0
        while d not in seen:
            seen.add(d)
            walk.append(d)
            other = nxt[d]
            seen.add(other)
            d = int(alpha[other])
        walks.append(walk)
    return walks


def embedding_svg(
    m: CombMap,
    labels: tuple[str, ...] | None = None,
    size: int = 600,
) -> str:
    """Render the curves of a 4-valent plane map as an SVG document."""
    fs = faces(m)
    outer = max(fs, key=lambda f: (len(f), -min(f)))
    pos = _barycentric_positions(m, outer)

    # normalize into the viewport
    lo = pos.min(axis=0)
    hi = pos.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-9))
    margin = 0.08 * size
    scale = (size - 2 * margin) / span

    def xy(p: int) -> tuple[float, float]:
        x = margin + (pos[p, 0] - lo[0]) * scale
        y = margin + (pos[p, 1] - lo[1]) * scale
        return (round(x, 2), round(y, 2))

    nv = m.n_vertices

    def sub_ids(d: int) -> tuple[int, int]:
        e = int(m.edge_of_dart[d])
        losd = m.edges[e][0]
        s1, s2 = nv + 2 * e, nv + 2 * e + 1
        return (s1, s2) if d == losd else (s2, s1)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for i, walk in enumerate(_walks(m)):
        pts: list[tuple[float, float]] = []
        for d in walk:
            # leave the vertex of d through the opposite dart, to alpha
            v = int(m.vertex_of[d])
            pts.append(xy(v))
            c = m.vertex_cycles[v]
            out_dart = c[(c.index(d) + 2) % 4]
            s1, s2 = sub_ids(out_dart)
            pts.append(xy(s1))
            pts.append(xy(s2))
        pts.append(pts[0])
        coords = " ".join(f"{x},{y}" for x, y in pts)
        color = _COLORS[i % len(_COLORS)]
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="2" stroke-linejoin="round"/>'
        )
    for v in range(nv):
        x, y = xy(v)
        parts.append(f'<circle cx="{x}" cy="{y}" r="3.5" fill="black"/>')
        if labels is not None:
            parts.append(
                f'<text x="{x + 6}" y="{y - 6}" font-size="12" '
                f'font-family="sans-serif">{labels[v]}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
