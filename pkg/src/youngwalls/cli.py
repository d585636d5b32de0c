"""Command line entry point: generation, export, enumeration, verification.

Exit codes: 0 success / all checks pass, 1 a check failed or the request
was invalid for the chosen type, 2 usage error (argparse).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .cartan import AffineType, Weight, as_type, dominant_weights, parse_weight
from .crystal import export_dot, export_json
from .energy import energy_table, printed_table
from .walls import WallError, enumerate_reduced_adjacent_pairs, generate_crystal, multiplicities

FORMATS = ("dot", "json", "mult")
SUITE_NAMES = ("all", "energy", "perfect", "rmatrix", "columns", "adjacent", "walls", "paths")


@dataclass(frozen=True)
class RunConfig:
    type: AffineType
    weight: Weight
    depth: int = 6
    format: str = "json"
    output: Path | None = None
    verbose: bool = False

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be non-negative")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.weight not in dominant_weights(self.type):
            valid = ", ".join(f"L{w.coeffs.index(1)}" for w in dominant_weights(self.type))
            raise ValueError(f"{self.weight} is not a level-1 dominant weight for "
                             f"{self.type}; choose one of {valid}")


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def format_mult(g, highest: Weight) -> str:
    lines = ["depth\tm0\tm1\tm2\tdelta\tmultiplicity"]
    for depth, w, m in multiplicities(g, highest):
        lines.append("\t".join(map(str, (depth, *w.as_list(), m))))
    return "\n".join(lines) + "\n"


def cmd_gen(cfg: RunConfig) -> int:
    try:
        g = generate_crystal(cfg.type, cfg.weight, cfg.depth)
    except WallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.format == "dot":
        text = export_dot(g, f"B_{cfg.type}_L{cfg.weight.coeffs.index(1)}")
    elif cfg.format == "json":
        text = export_json(g) + "\n"
    else:
        text = format_mult(g, cfg.weight)
    _emit(text, cfg.output)
    if cfg.verbose:
        print(f"{len(g)} walls, {len(g.edges)} edges", file=sys.stderr)
    return 0


def cmd_energy(ctype: AffineType, emit: str) -> int:
    solved = energy_table(ctype)
    if emit == "table":
        sys.stdout.write(solved.format())
        return 0
    diff = solved.diff(printed_table(ctype))
    for x, y, mine, printed in diff:
        print(f"{x}\t{y}\tsolved={mine}\tprinted={printed}")
    return 1 if diff else 0


def cmd_adjacent(ctype: AffineType, count_only: bool) -> int:
    count, pairs = enumerate_reduced_adjacent_pairs(ctype)
    print(count)
    if not count_only:
        for left, right, h in pairs:
            print(f"{left}\t{right}\t{h}")
    return 0


def cmd_verify(suite: str, depth: int | None) -> int:
    from . import verify

    ok = True
    for rep in verify.run(suite, depth):
        print(rep)
        ok &= rep.ok
    print("ALL PASS" if ok else "SOME CHECKS FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="youngwalls",
                                description="Young wall realization of level-1 crystals "
                                            "for D4(3) and G2(1).")
    sub = p.add_subparsers(dest="command", required=True)

    type_choices = [t.value for t in AffineType]
    gen = sub.add_parser("gen", help="generate a depth-bounded prefix of B(lambda)")
    gen.add_argument("--type", required=True, choices=type_choices)
    gen.add_argument("--weight", required=True, help="L0 or L2")
    gen.add_argument("--depth", type=int, default=6)
    gen.add_argument("--format", choices=FORMATS, default="json")
    gen.add_argument("-o", "--output", type=Path)
    gen.add_argument("-v", "--verbose", action="store_true")

    en = sub.add_parser("energy", help="print the energy table or its diff against the fixture")
    en.add_argument("--type", required=True, choices=type_choices)
    en.add_argument("--emit", choices=("table", "diff"), default="table")

    adj = sub.add_parser("adjacent", help="enumerate reduced adjacent column pairs")
    adj.add_argument("--type", required=True, choices=type_choices)
    adj.add_argument("--count", action="store_true", help="print only the count")

    ver = sub.add_parser("verify", help="run property suites")
    ver.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)
    ver.add_argument("--depth", type=int, default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "gen":
        try:
            cfg = RunConfig(as_type(args.type), parse_weight(args.weight), args.depth,
                            args.format, args.output, args.verbose)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        return cmd_gen(cfg)
    if args.command == "energy":
        return cmd_energy(as_type(args.type), args.emit)
    if args.command == "adjacent":
        return cmd_adjacent(as_type(args.type), args.count)
    if args.depth is not None and args.depth < 0:
        print("error: depth must be non-negative", file=sys.stderr)
        return 2
    return cmd_verify(args.suite, args.depth)


if __name__ == "__main__":
    sys.exit(main())
