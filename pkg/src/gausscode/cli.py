"""Command-line interface.

Subcommands: ``check`` (realizability verdict, exit code 0/1/2),
``embed`` (JSON/DOT/SVG embedding artifacts), ``enumerate`` (all plane
embeddings), ``oracle`` (brute-force minimum genus), ``gen`` (random
realizable words) and ``bench`` (scaling table, optionally comparing the
numba and numpy kernel backends).  The ``GAUSS_SEED`` environment
variable overrides the default seed of the random commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import _kernels
from .drawing import embedding_svg
from .maps_core import map_to_dot, map_to_json
from .recognizer import (
    NotRealizable,
    TooLarge,
    embed_paragraph,
    enumerate_embeddings,
    oracle_min_genus,
    random_gauss,
)
from .seifert import premap_from_paragraph, seifert_edge_characters, seifert_map
from .words import (
    DoubleOccurrenceViolation,
    Paragraph,
    format_paragraph,
    parse_paragraph,
)

EXIT_GAUSS = 0
EXIT_NOT_GAUSS = 1
EXIT_INPUT_ERROR = 2


def _default_seed() -> int:
    env = os.environ.get("GAUSS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"warning: ignoring non-integer GAUSS_SEED={env!r}", file=sys.stderr)
    return 0


def _read_input(args) -> Paragraph:
    if getattr(args, "file", None):
        text = open(args.file, "r", encoding="utf-8").read()
    elif args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        text = args.input
    return parse_paragraph(text)


def _parse_flips(spec: str | None) -> dict[int, tuple[int, ...]]:
    """Parse a flip spec like ``"2:0,1;5:0"`` into vertex -> ordinals."""
    if not spec:
        return {}
    flips: dict[int, tuple[int, ...]] = {}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        vertex_s, _, ixs = part.partition(":")
        flips[int(vertex_s)] = tuple(
            int(x) for x in ixs.split(",") if x.strip() != ""
        )
    return flips


def _report(p: Paragraph, result, elapsed_ms: float) -> dict:
    return {
        "input": format_paragraph(p),
        "verdict": "gauss" if result.is_plane else "not-gauss",
        "genus": result.genus,
        "diagnostics": result.diagnostics.as_dict(),
        "traced": format_paragraph(result.traced),
        "timing_ms": round(elapsed_ms, 3),
    }


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def cmd_check(args) -> int:
    p = _read_input(args)
    t0 = time.perf_counter()
    result = embed_paragraph(p)
    elapsed = (time.perf_counter() - t0) * 1000
    report = _report(p, result, elapsed)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"{report['verdict']} (genus {report['genus']}, {elapsed:.2f} ms)")
    return EXIT_GAUSS if result.is_plane else EXIT_NOT_GAUSS


def cmd_embed(args) -> int:
    p = _read_input(args)
    result = embed_paragraph(p, flips=_parse_flips(args.flips), mirror=args.mirror)
    if not result.is_plane:
        report = _report(p, result, 0.0)
        print(json.dumps(report, indent=2), file=sys.stderr)
        return EXIT_NOT_GAUSS
    pm = premap_from_paragraph(p)
    labels = seifert_edge_characters(pm)
    if args.dot:
        sf = seifert_map(pm)
        text = map_to_dot(
            sf,
            sign=result.orientation,
            vertex_labels=None,
            edge_labels=labels,
        )
    elif args.svg:
        text = embedding_svg(result.medial_map, labels=labels)
    else:
        doc = json.loads(map_to_json(result.medial_map, sign=result.medial_sign))
        doc["genus"] = result.genus
        doc["vertex_labels"] = list(labels)
        doc["traced"] = format_paragraph(result.traced)
        text = json.dumps(doc, indent=2)
    _write(text, args.output)
    return EXIT_GAUSS


def cmd_enumerate(args) -> int:
    p = _read_input(args)
    try:
        results = enumerate_embeddings(p, limit=args.limit, mirror=args.mirror)
    except NotRealizable as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_GAUSS
    print(f"{len(results)} plane embedding(s)")
    if args.json:
        pm = premap_from_paragraph(p)
        labels = seifert_edge_characters(pm)
        for i, res in enumerate(results):
            doc = json.loads(map_to_json(res.medial_map, sign=res.medial_sign))
            doc["vertex_labels"] = list(labels)
            print(json.dumps({"embedding": i, **doc}))
    return EXIT_GAUSS


def cmd_oracle(args) -> int:
    p = _read_input(args)
    pm = premap_from_paragraph(p)
    try:
        report = oracle_min_genus(pm, max_vertices=args.max_vertices)
    except TooLarge as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(
        f"min_genus {report.min_genus}  plane_count {report.plane_count}  "
        f"representatives {2 ** report.n_vertices}"
    )
    return EXIT_GAUSS if report.min_genus == 0 else EXIT_NOT_GAUSS


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    p = random_gauss(args.n, seed)
    print(format_paragraph(p))
    return EXIT_GAUSS


def _parse_sizes(spec: str) -> list[int]:
    sizes = []
    for part in spec.replace("..", ",").split(","):
        part = part.strip().lower()
        if not part:
            continue
        mult = 1000 if part.endswith("k") else 1
        sizes.append(int(float(part.rstrip("k"))) * mult)
    return sizes


def _bench_backend(sizes: list[int], seed: int, repeats: int) -> list[tuple[int, float]]:
    rows = []
    for n in sizes:
        p = random_gauss(n, seed)
        best = min(
            _time_once(p) for _ in range(repeats)
        )
        rows.append((n, best))
    return rows


def _time_once(p: Paragraph) -> float:
    t0 = time.perf_counter()
    embed_paragraph(p)
    return (time.perf_counter() - t0) * 1000


def cmd_bench(args) -> int:
    sizes = _parse_sizes(args.sizes)
    seed = args.seed if args.seed is not None else _default_seed()
    backends = (
        list(_kernels.available_backends())
        if args.backend == "both"
        else [args.backend]
    )
    saved = _kernels.current_backend()
    try:
        for backend in backends:
            _kernels.set_backend(backend)
            embed_paragraph(random_gauss(min(sizes), seed))  # warm up the kernels
            rows = _bench_backend(sizes, seed, args.repeats)
            print(f"backend {backend}")
            print(f"  {'chars':>8}  {'ms':>10}  {'ratio':>6}")
            prev = None
            for n, ms in rows:
                ratio = f"{ms / prev:.2f}" if prev else "-"
                print(f"  {n:>8}  {ms:>10.2f}  {ratio:>6}")
                prev = ms
    finally:
        _kernels.set_backend(saved)
    return EXIT_GAUSS


def _add_input_args(sp) -> None:
    sp.add_argument("input", nargs="?", help="paragraph text ('-' or omit for stdin)")
    sp.add_argument("-f", "--file", help="read the paragraph from a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausscode",
        description="Decide Gauss-code realizability and build plane embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="realizability verdict (exit 0 gauss, 1 not, 2 bad input)")
    _add_input_args(sp)
    sp.add_argument("--json", action="store_true", help="print a JSON report")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("embed", help="emit a plane embedding (JSON rotation system, DOT, or SVG)")
    _add_input_args(sp)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON rotation system (default)")
    fmt.add_argument("--dot", action="store_true", help="DOT of the oriented Seifert map")
    fmt.add_argument("--svg", action="store_true", help="SVG drawing of the curves")
    sp.add_argument("--flips", help="free-choice flips, e.g. '2:0,1;5:0'")
    sp.add_argument("--mirror", action="store_true", help="reflected embedding")
    sp.add_argument("-o", "--output", help="write to a file instead of stdout")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("enumerate", help="enumerate all plane embeddings")
    _add_input_args(sp)
    sp.add_argument("--limit", type=int, help="stop after this many embeddings")
    sp.add_argument("--json", action="store_true", help="print each embedding as JSON")
    sp.add_argument("--mirror", action="store_true", help="enumerate the reflected family")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("oracle", help="brute-force minimum genus over all representatives")
    _add_input_args(sp)
    sp.add_argument("--max-vertices", type=int, default=20, help="size guard (default 20)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="generate a random realizable word")
    sp.add_argument("n", type=int, help="number of characters")
    sp.add_argument("seed", type=int, nargs="?", help="seed (default GAUSS_SEED or 0)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="embedding wall time across input sizes")
    sp.add_argument("--sizes", default="1k,2k,4k,8k,16k")
    sp.add_argument("--repeats", type=int, default=3)
    sp.add_argument(
        "--backend",
        default=_kernels.current_backend(),
        choices=["numba", "numpy", "both"],
    )
    sp.add_argument("--seed", type=int, help="seed (default GAUSS_SEED or 0)")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DoubleOccurrenceViolation, ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
