"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 resource ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .cycle_index import extract_character, to_json
from .errors import DomainError, ResourceLimitError, ValidationError
from .homology import (
    build_chain_complex,
    character_csv,
    character_table,
    homology_dimensions,
    profile_json,
    whitney_dimensions,
)
from .hypertree import enumerate_hypertrees, enumerate_pointed, format_structure
from .ledger import LEDGER, Params, run_ledger
from .partitions import partitions
from .poset import hasse_csv
from .series import HAL_METHODS, HAL_TAGS, NAMED, c_minus1_series, hal_series, named_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
THREADS_ENV = "HYPERTREE_POSET_THREADS"
ENUMERATION_CEILING = 6
HOMOLOGY_CEILING = 5
UNSAFE_CEILING = 7


@dataclass(frozen=True)
class Config:
    n_max: int = HOMOLOGY_CEILING
    degree: int = 7
    k_max: int = 3
    fmt: str = "plain"
    threads: int = 1
    unsafe: bool = False

    def __post_init__(self) -> None:
        if min(self.n_max, self.degree, self.k_max, self.threads) < 1:
            raise DomainError("bounds must be positive")
        if self.fmt not in ("plain", "json", "csv"):
            raise DomainError(f"unknown format {self.fmt!r}")


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def _ceiling(n: int, limit: int, unsafe: bool) -> None:
    if n > (UNSAFE_CEILING if unsafe else limit):
        hint = "" if unsafe else " (use --unsafe to lift it)"
        raise ResourceLimitError(f"n = {n} exceeds the ceiling {limit}{hint}")


def _emit(text: str, out: str | None, name: str = "output.txt") -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    if path.suffix == "":
        path.mkdir(parents=True, exist_ok=True)
        path = path / name
    path.write_text(text)


# ---------------------------------------------------------------- commands


def cmd_enumerate(args) -> int:
    _ceiling(args.n, ENUMERATION_CEILING, args.unsafe)
    bound = UNSAFE_CEILING
    if args.variant == "plain":
        items = enumerate_hypertrees(args.n, bound)
    else:
        items = enumerate_pointed(args.n, args.variant, bound)
    lines = [format_structure(x) for x in items]
    _emit("".join(f"{s}\n" for s in lines) + f"count {len(lines)}\n", args.out, "structures.txt")
    return EXIT_OK


def cmd_poset(args) -> int:
    _ceiling(args.n, ENUMERATION_CEILING, args.unsafe)
    hasse, index = hasse_csv(args.n)
    hasse = "child,parent\n" + hasse
    index = "index,encoding\n" + index
    if args.out is None:
        sys.stdout.write(hasse + "\n" + index)
    else:
        path = Path(args.out)
        path.mkdir(parents=True, exist_ok=True)
        (path / "hasse.csv").write_text(hasse)
        (path / "index.csv").write_text(index)
    return EXIT_OK


def cmd_homology(args) -> int:
    _ceiling(args.n, HOMOLOGY_CEILING, args.unsafe)
    cc = build_chain_complex(args.n, bound=UNSAFE_CEILING)
    _emit(profile_json(homology_dimensions(cc, args.method)) + "\n", args.out, "homology.json")
    return EXIT_OK


def cmd_whitney(args) -> int:
    _ceiling(args.n, HOMOLOGY_CEILING, args.unsafe)
    dims = whitney_dimensions(args.n, bound=UNSAFE_CEILING)
    _emit(json.dumps({str(r): d for r, d in dims.items()}) + "\n", args.out, "whitney.json")
    return EXIT_OK


def cmd_series(args) -> int:
    if args.name in HAL_TAGS:
        z = hal_series(args.name, args.degree, args.method)
    else:
        z = named_series(args.name, args.degree)
    text = to_json(z) if args.format == "json" else str(z)
    _emit(text + "\n", args.out, f"{args.name}.txt")
    return EXIT_OK


def cmd_character_table(args) -> int:
    if args.n < 2:
        raise DomainError("character tables need n >= 2")
    if args.source == "lefschetz":
        _ceiling(args.n, HOMOLOGY_CEILING, args.unsafe)
        table = character_table(args.n)
    else:
        z = c_minus1_series(args.n)
        values = {lam: extract_character(z, lam) for lam in sorted(partitions(args.n))}
        # one global sign per n, fixed by the identity class
        sign = 1 if values[(1,) * args.n] > 0 else -1
        table = {lam: sign * v for lam, v in values.items()}
    _emit(character_csv(table), args.out, "characters.csv")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = Config(n_max=args.nmax, k_max=args.kmax, degree=args.degree, threads=_threads(), unsafe=args.unsafe)
    _ceiling(cfg.n_max, HOMOLOGY_CEILING, False)
    params = Params(nmax=cfg.n_max, kmax=cfg.k_max, algebra_degree=cfg.degree, hal_degree=min(cfg.degree, 6))
    if args.only is None and cfg.threads > 1:
        # sections are independent; results are emitted in registry order
        with ThreadPoolExecutor(cfg.threads) as pool:
            chunks = list(pool.map(lambda s: run_ledger(s, params), LEDGER))
        reports = [r for chunk in chunks for r in chunk]
    else:
        reports = run_ledger(args.only, params)
    _emit("".join(r.to_json() + "\n" for r in reports), args.out, "verify.jsonl")
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} checks passed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypertree-poset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--out", default=None, help="write to this path instead of stdout")
        p.add_argument("--unsafe", action="store_true", help="lift the desk-scale ceilings")
        p.set_defaults(func=func)
        return p

    p = add("enumerate", cmd_enumerate, "list hypertrees as canonical encodings")
    p.add_argument("n", type=int)
    p.add_argument("--variant", default="plain", choices=["plain", "rooted", "edge-pointed", "edge-pointed-rooted", "hollow"])

    p = add("poset", cmd_poset, "Hasse diagram CSV and index file")
    p.add_argument("n", type=int)

    p = add("homology", cmd_homology, "reduced homology profile as JSON")
    p.add_argument("n", type=int)
    p.add_argument("--method", default="exact", choices=["exact", "modular"])

    p = add("whitney", cmd_whitney, "Whitney homology dimensions per rank as JSON")
    p.add_argument("n", type=int)

    p = add("series", cmd_series, "print a named cycle index")
    p.add_argument("name", choices=NAMED)
    p.add_argument("--degree", type=int, default=7)
    p.add_argument("--format", default="plain", choices=["plain", "json"])
    p.add_argument("--method", default="fixed-point", choices=HAL_METHODS)

    p = add("character-table", cmd_character_table, "homology character per conjugacy class as CSV")
    p.add_argument("n", type=int)
    p.add_argument("--source", default="lefschetz", choices=["lefschetz", "formula"])

    p = add("verify", cmd_verify, "run the identity ledger, JSON lines")
    p.add_argument("--only", default=None, help="section, identity name or group number")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--degree", type=int, default=7, help="truncation degree of the algebra checks")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
