"""Command-line surface.

Subcommands:
  analyze        per-graph JSON reports (cutsets, unmixedness, CM, depth)
  verify         run a theorem verifier over a graph corpus
  initial-ideal  print the square-free initial ideal generators

Exit codes: 0 success, 1 parse error, 2 indeterminate (budget or cap hit),
3 hypothesis-relevant findings only, 64 unknown theorem id.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .binomial_edge import initial_ideal
from .graphs import Graph, GraphParseError, parse_edge_list, parse_graph6
from .homology import (FieldSpec, QQ, DEFAULT_FACE_BUDGET,
                       DEFAULT_LATTICE_BUDGET)
from .lab import VERIFIERS, analyze, report_json

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INDETERMINATE = 2
EXIT_HYPOTHESIS = 3
EXIT_UNKNOWN_THEOREM = 64

_ENV_PREFIX = "BEI_"


@dataclass(frozen=True)
class RunConfig:
    field: FieldSpec = QQ
    face_budget: int = DEFAULT_FACE_BUDGET
    lattice_budget: int = DEFAULT_LATTICE_BUDGET
    max_n: int = 16
    threads: int = 1
    seed: int = 0


def _env_default(name, fallback, cast=int):
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return fallback
    return cast(raw)


def build_parser():
    p = argparse.ArgumentParser(
        prog="beilab",
        description="Combinatorial Cohen-Macaulayness of binomial edge ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--face-budget", type=int,
                        default=_env_default("FACE_BUDGET", DEFAULT_FACE_BUDGET))
        sp.add_argument("--lattice-budget", type=int,
                        default=_env_default("LATTICE_BUDGET",
                                             DEFAULT_LATTICE_BUDGET))
        sp.add_argument("--max-n", type=int, default=_env_default("MAX_N", 16))
        sp.add_argument("--field", type=int,
                        default=_env_default("FIELD", 0),
                        help="characteristic: 0 or a prime")
        sp.add_argument("--threads", type=int,
                        default=_env_default("THREADS", 1))
        sp.add_argument("--seed", type=int, default=_env_default("SEED", 0))

    a = sub.add_parser("analyze", help="per-graph JSON reports")
    a.add_argument("input", help="file path or - for stdin")
    common(a)

    v = sub.add_parser("verify", help="run a theorem verifier over a corpus")
    v.add_argument("theorem", help="|".join(sorted(VERIFIERS)))
    v.add_argument("corpus", help="file path or - for stdin")
    common(v)

    i = sub.add_parser("initial-ideal", help="print initial ideal generators")
    i.add_argument("input", help="file path or - for stdin")
    common(i)
    return p


def _config(args):
    return RunConfig(field=FieldSpec(args.field),
                     face_budget=args.face_budget,
                     lattice_budget=args.lattice_budget,
                     max_n=args.max_n,
                     threads=max(1, args.threads),
                     seed=args.seed)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _looks_graph6(line):
    return bool(line) and all(63 <= ord(c) <= 126 for c in line)


def parse_input(text):
    """Graphs from text: a graph6 stream (one per line) or a single
    edge list with an "n m" header. Raises GraphParseError with line info."""
    lines = [ln.strip() for ln in text.splitlines()]
    first = next((ln for ln in lines if ln), None)
    if first is None:
        return []
    if first.startswith(">") or _looks_graph6(first):
        graphs = []
        for k, ln in enumerate(lines, 1):
            if not ln:
                continue
            if not (ln.startswith(">") or _looks_graph6(ln)):
                raise GraphParseError(f"line {k}: not graph6: {ln!r}")
            try:
                graphs.append(parse_graph6(ln))
            except GraphParseError as e:
                raise GraphParseError(f"line {k}: {e}") from e
        return graphs
    toks = first.split()
    if len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks):
        return [parse_edge_list(text)]
    raise GraphParseError(f"line 1: neither graph6 nor edge-list: {first!r}")


def _analyze_one(g, cfg):
    if g.n > cfg.max_n:
        return None
    return report_json(analyze(g, cfg.field,
                               face_budget=cfg.face_budget,
                               lattice_budget=cfg.lattice_budget))


def cmd_analyze(args, out=sys.stdout):
    cfg = _config(args)
    try:
        graphs = parse_input(_read_text(args.input))
    except (GraphParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    # output order matches input order regardless of completion order
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        reports = list(pool.map(lambda g: _analyze_one(g, cfg), graphs))
    status = EXIT_OK
    for rep in reports:
        if rep is None:
            print('{"budget":"max-n exceeded"}', file=out)
            status = EXIT_INDETERMINATE
            continue
        print(rep, file=out)
        if '"budget"' in rep:
            status = EXIT_INDETERMINATE
    return status


def cmd_verify(args, out=sys.stdout):
    if args.theorem not in VERIFIERS:
        print(f"error: unknown theorem id {args.theorem!r}; "
              f"known: {', '.join(sorted(VERIFIERS))}", file=sys.stderr)
        return EXIT_UNKNOWN_THEOREM
    cfg = _config(args)
    try:
        graphs = parse_input(_read_text(args.corpus))
    except (GraphParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    graphs = [g for g in graphs if g.n <= cfg.max_n]
    verdict = VERIFIERS[args.theorem](graphs, cfg.field,
                                      corpus_name=args.corpus)
    print(verdict.to_json(), file=out)
    if verdict.violations:
        return EXIT_PARSE  # hard failure, never hypothesis-relevant
    if verdict.hypothesis_relevant or verdict.findings:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def cmd_initial_ideal(args, out=sys.stdout):
    cfg = _config(args)
    try:
        graphs = parse_input(_read_text(args.input))
    except (GraphParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    status = EXIT_OK
    for k, g in enumerate(graphs):
        if k:
            print("", file=out)
        if g.n > cfg.max_n:
            print("# max-n exceeded", file=out)
            status = EXIT_INDETERMINATE
            continue
        text = initial_ideal(g).to_text()
        if text:
            print(text, file=out)
    return status


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_initial_ideal(args)


if __name__ == "__main__":
    sys.exit(main())
