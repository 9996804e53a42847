"""End-to-end realizability pipeline, all-embeddings enumeration, oracle.

``embed_paragraph`` chains the constructions: paragraph -> crossing
premap -> Seifert map -> edge orientation -> vertex-medial map.  The
input is a Gauss paragraph exactly when the resulting 4-valent map has
genus zero, in which case it is an explicit combinatorial plane
embedding whose straight-ahead walks trace the input back.

``oracle_min_genus`` is the independent ground truth: it sweeps all
2^vertices rotation representatives of a premap and reports the minimum
genus, which is zero iff some plane embedding exists.  ``random_gauss``
grows realizable words by curl insertions and connected sums, giving a
scaling corpus.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .maps_core import CombMap, genus, make_map, map_key, orientation_key
from .medial import mirror_map, trace_paragraph, vertex_medial_map
from .orientation_alg import Diagnostics, orient_map
from .seifert import (
    TwoTwoPremap,
    _seifert_map_with_chars,
    premap_from_paragraph,
)
from .words import Paragraph, Word

__all__ = [
    "NotRealizable",
    "TooLarge",
    "EmbedResult",
    "OracleReport",
    "embed_paragraph",
    "is_gauss",
    "enumerate_embeddings",
    "oracle_min_genus",
    "premap_representative",
    "random_gauss",
]


class NotRealizable(ValueError):
    """The paragraph admits no plane embedding."""


class TooLarge(ValueError):
    """The premap exceeds the exhaustive oracle's size guard."""


@dataclass(frozen=True, eq=False)
class EmbedResult:
    """Outcome of the embedding pipeline for one flip choice.

    ``medial_map``/``medial_sign`` form the candidate 4-valent embedding;
    it is a plane embedding of the input exactly when ``is_plane``.
    ``traced`` is the paragraph read back by straight-ahead walks and is
    always cyclically equal to the input.
    """

    orientation: np.ndarray
    medial_map: CombMap
    medial_sign: np.ndarray
    genus: int
    traced: Paragraph
    is_plane: bool
    diagnostics: Diagnostics

    @property
    def key(self) -> bytes:
        return map_key(self.medial_map) + b"#" + orientation_key(self.medial_sign)


def embed_paragraph(
    p: Paragraph,
    flips: dict[int, tuple[int, ...]] | None = None,
    mirror: bool = False,
) -> EmbedResult:
    """Run the full pipeline on a paragraph.

    ``flips`` selects among the free inside/outside choices (see
    :func:`gausscode.orientation_alg.orient_map`); ``mirror`` reverses
    every rotation of the result, giving the reflected embedding.
    """
    pm = premap_from_paragraph(p)
    sf, labels = _seifert_map_with_chars(pm)
    sign, diagnostics = orient_map(sf, flips)
    mv, mv_sign = vertex_medial_map(sf, sign)
    if mirror:
        mv = mirror_map(mv)
    g = genus(mv)
    traced = trace_paragraph(
        TwoTwoPremap(rep=mv, sign=mv_sign, char_of_vertex=labels)
    )
    return EmbedResult(
        orientation=sign,
        medial_map=mv,
        medial_sign=mv_sign,
        genus=g,
        traced=traced,
        is_plane=(g == 0),
        diagnostics=diagnostics,
    )


def is_gauss(p: Paragraph) -> bool:
    """Whether the paragraph is realizable as closed plane curves."""
    return embed_paragraph(p).is_plane


def enumerate_embeddings(
    p: Paragraph, limit: int | None = None, mirror: bool = False
) -> list[EmbedResult]:
    """All plane embeddings reachable through the free flip choices.

    One result per combination of free-component flips across the
    processed vertices, deduplicated by the resulting medial map.  The
    reflected family is available via ``mirror``; it is not enumerated by
    default.  Raises :class:`NotRealizable` on non-realizable input.
    """
    base = embed_paragraph(p, mirror=mirror)
    if not base.is_plane:
        raise NotRealizable(
            "paragraph is not realizable; no plane embeddings to enumerate"
        )
    slots = [
        (v, i)
        for v, count in sorted(base.diagnostics.free_choices.items())
        for i in range(count)
    ]
    results: list[EmbedResult] = []
    seen = set()
    for bits in itertools.product((False, True), repeat=len(slots)):
        flips: dict[int, list[int]] = {}
        for (v, i), bit in zip(slots, bits):
            if bit:
                flips.setdefault(v, []).append(i)
        res = embed_paragraph(
            p, flips={v: tuple(ix) for v, ix in flips.items()}, mirror=mirror
        )
        if res.key not in seen:
            seen.add(res.key)
            results.append(res)
        if limit is not None and len(results) >= limit:
            break
    return results


@dataclass(frozen=True)
class OracleReport:
    """Exhaustive sweep over the rotation representatives of a premap.

    ``witnesses`` holds up to ``max_witnesses`` reversal vectors (one 0/1
    entry per vertex; 1 = reversed rotation) whose representative has
    genus zero.
    """

    min_genus: int
    plane_count: int
    witnesses: tuple[tuple[int, ...], ...]
    n_vertices: int


def premap_representative(pm: TwoTwoPremap, mask: int) -> CombMap:
    """The representative with vertex ``i`` reversed when bit ``i`` is set."""
    cycles = [
        tuple(reversed(c)) if (mask >> v) & 1 else c
        for v, c in enumerate(pm.rep.vertex_cycles)
    ]
    return make_map(cycles, pm.rep.edges)


def oracle_min_genus(
    pm: TwoTwoPremap, max_vertices: int = 20, max_witnesses: int = 64
) -> OracleReport:
    """Brute-force minimum genus over all 2^vertices representatives.

    Every representative encodes one candidate embedding of the traced
    paragraph; the minimum of their genera is zero iff the paragraph is
    realizable.  Refuses premaps above ``max_vertices`` (the sweep is
    exponential).
    """
    V = pm.n_vertices
    if V > max_vertices:
        raise TooLarge(f"premap has {V} vertices, oracle guard is {max_vertices}")
    m = pm.rep
    tau_f = m.tau
    tau_r = m.tau_inverse()  # reversing every cycle inverts the permutation
    face_counts = _kernels.face_count_sweep(tau_f, tau_r, m.alpha, m.vertex_of, V)
    k = _kernels.dart_components(m.tau, m.alpha)[1] if m.n_darts else 0
    chi = m.n_vertices - m.n_edges + face_counts.astype(np.int64)
    genera = (2 * k - chi) // 2
    min_genus = int(genera.min()) if len(genera) else 0
    plane_masks = np.flatnonzero(genera == 0)
    witnesses = tuple(
        tuple((int(mask) >> v) & 1 for v in range(V))
        for mask in plane_masks[:max_witnesses]
    )
    return OracleReport(
        min_genus=min_genus,
        plane_count=int(len(plane_masks)),
        witnesses=witnesses,
        n_vertices=V,
    )


# ---------------------------------------------------------------------------
# generator
# ---------------------------------------------------------------------------


def random_gauss(n: int, seed: int) -> Paragraph:
    """A random realizable word with ``n`` characters.

    Grown from the one-crossing curl by two realizability-preserving
    moves: inserting a fresh character twice at adjacent positions (a new
    curl) and splicing an independently grown word into the current one at
    a random position (connected sum).  Characters are renamed ``1..n`` in
    order of first occurrence.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    counter = itertools.count()

    # build a prefix program of leaf / curl / splice steps, then evaluate it
    program: list[str] = []
    sizes = [n]
    while sizes:
        k = sizes.pop()
        if k == 1:
            program.append("leaf")
        elif k >= 2 and rng.random() < 0.35:
            k1 = rng.randint(1, k - 1)
            program.append("splice")
            sizes.append(k1)
            sizes.append(k - k1)
        else:
            program.append("curl")
            sizes.append(k - 1)

    vals: list[list[int]] = []
    for op in reversed(program):
        if op == "leaf":
            c = next(counter)
            vals.append([c, c])
        elif op == "curl":
            w = vals.pop()
            c = next(counter)
            i = rng.randrange(len(w) + 1)
            w[i:i] = [c, c]
            vals.append(w)
        else:
            a = vals.pop()
            b = vals.pop()
            i = rng.randrange(len(a) + 1)
            r = rng.randrange(len(b))
            vals.append(a[:i] + b[r:] + b[:r] + a[i:])
    word = vals[0]

    rename: dict[int, str] = {}
    letters = []
    for c in word:
        if c not in rename:
            rename[c] = str(len(rename) + 1)
        letters.append(rename[c])
    return Paragraph([Word(letters)])
