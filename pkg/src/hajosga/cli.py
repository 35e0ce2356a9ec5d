"""Command line entry point: ``hajosga <subcommand> ...``.

Exit codes: 0 success / verified, 1 verification failed (or no solution
found), 2 usage error, 3 input parse or replay error.
"""

from __future__ import annotations

import argparse
import os
import secrets
import sys
import tempfile
from contextlib import contextmanager

from .digraph import is_isomorphic, parse_digraph, serialize_digraph, symmetric_cycle, to_dot
from .errors import InstanceTooLarge, ParseError, ReplayError
from .fitness import fitness, format_breakdown
from .ga import GaConfig, StatsRecord, run
from .lineage import (PAPER_SCRIPT_TEXT, PAPER_STAGES, extract_script, op_count, paper_script,
                      parse_script, replay_states, serialize_script)
from .oracle import dichromatic_number, is_r_critical

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

# expected fitness totals of the four stages: join of two D(K3), then
# two diagonals, one diagonal, none
PAPER_STAGE_FITNESS = ("17.2", "10.8", "5.4", "0")


@contextmanager
def atomic_output(path):
    """Yield a file handle whose contents replace ``path`` only on success."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=os.path.basename(path) + ".", suffix=".partial")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            yield fh
        # mkstemp creates 0600 files; give the result the usual umask-based mode
        mask = os.umask(0)
        os.umask(mask)
        os.chmod(tmp, 0o666 & ~mask)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_digraph(path):
    return parse_digraph(_read(path))


def cmd_run(args) -> int:
    if args.entropy:
        seed = secrets.randbits(64)
        print(f"seed {seed}")
    elif args.seed is None:
        print("error: --seed is required (or pass --entropy)", file=sys.stderr)
        return EXIT_USAGE
    else:
        seed = args.seed
    cfg = GaConfig(pop_size=args.pop_size, pressure=args.pressure, seed=seed,
                   max_generations=args.max_gens, stats_interval=args.stats_interval,
                   max_order=args.max_order)

    stats_fh = None
    stats_tmp = None
    if args.stats:
        stats_tmp = args.stats + ".partial"
        stats_fh = open(stats_tmp, "w", encoding="utf-8")
        stats_fh.write(",".join(StatsRecord.FIELDS) + "\n")

    def on_stats(rec):
        if stats_fh is not None:
            stats_fh.write(rec.csv_row() + "\n")
            stats_fh.flush()

    try:
        result = run(cfg, on_stats=on_stats)
    finally:
        if stats_fh is not None:
            stats_fh.close()
    if stats_tmp is not None:
        os.replace(stats_tmp, args.stats)

    print(f"generations {result.generations_used}")
    if result.solution is None:
        print("no solution found")
        if args.out_script:
            with atomic_output(args.out_script):
                pass
        return EXIT_FAILED
    script = extract_script(result.lineage_store, result.solution.lineage_id)
    ops = op_count(script)
    print(f"operations {ops.total} (joins {ops.joins}, identifications {ops.identifications})")
    if args.out_script:
        with atomic_output(args.out_script) as fh:
            fh.write(serialize_script(script))
    return EXIT_OK


def cmd_replay(args) -> int:
    try:
        script = parse_script(_read(args.script))
        env = replay_states(script)
    except (ParseError, ReplayError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    d = env[script.result]
    ops = op_count(script)
    print(f"# replayed {ops.total} operations (joins {ops.joins}, identifications {ops.identifications})",
          file=sys.stderr)
    if args.print:
        sys.stdout.write(serialize_digraph(d))
    if args.dot:
        with atomic_output(args.dot) as fh:
            fh.write(to_dot(d))
    if args.expect_c5:
        ok = d.order <= 9 and is_isomorphic(d, symmetric_cycle(5))
        print(f"isomorphic to D(C5): {'yes' if ok else 'no'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAILED
    return EXIT_OK


def verify_paper_report() -> tuple[bool, list[str]]:
    """Replay the built-in 16-operation script and check its operation counts and stage fitnesses."""
    script = paper_script()
    env = replay_states(script)
    ops = op_count(script)
    lines = []
    ok = True

    def check(label, cond):
        nonlocal ok
        ok &= bool(cond)
        lines.append(f"[{'PASS' if cond else 'FAIL'}] {label}")

    check(f"operations {ops.total} = 16 (joins {ops.joins} = 4, identifications {ops.identifications} = 12)",
          (ops.joins, ops.identifications) == (4, 12))
    for handle, expected in zip(PAPER_STAGES, PAPER_STAGE_FITNESS):
        fb = fitness(env[handle])
        got = f"{fb.total:g}"
        check(f"stage {handle}: order {env[handle].order}, fitness {got} (expected {expected})", got == expected)
    final = env[script.result]
    check(f"final fitness {fitness(final).total:g}", fitness(final).exact_total == 0)
    check("final digraph isomorphic to D(C5)", is_isomorphic(final, symmetric_cycle(5)))
    return ok, lines


def cmd_verify_paper(args) -> int:
    ok, lines = verify_paper_report()
    print("\n".join(lines))
    print("verified" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_paper_script(args) -> int:
    sys.stdout.write(PAPER_SCRIPT_TEXT)
    return EXIT_OK


def cmd_fitness(args) -> int:
    try:
        d = _load_digraph(args.digraph)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if d.order == 0:
        print("error: fitness needs at least one vertex", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(format_breakdown(fitness(d)))
    return EXIT_OK


def cmd_dichromatic(args) -> int:
    try:
        d = _load_digraph(args.digraph)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if d.order == 0:
        print("error: empty digraph", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.critical is not None:
            crit = is_r_critical(d, args.critical)
            print("yes" if crit else "no")
            return EXIT_OK if crit else EXIT_FAILED
        print(dichromatic_number(d))
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_export_dot(args) -> int:
    try:
        d = _load_digraph(args.digraph)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(to_dot(d))
    return EXIT_OK


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hajosga", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="search for D(C5) with the Hajós Rank GA")
    p.add_argument("--seed", type=_nonneg_int)
    p.add_argument("--entropy", action="store_true", help="draw a random seed and print it")
    p.add_argument("--pop-size", type=int, default=50)
    p.add_argument("--pressure", type=float, default=3.0)
    p.add_argument("--max-gens", type=_nonneg_int, default=50_000)
    p.add_argument("--stats-interval", type=int, default=100)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--out-script", metavar="PATH")
    p.add_argument("--stats", metavar="PATH", help="CSV file for per-interval statistics")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("replay", help="replay a construction script")
    p.add_argument("script")
    p.add_argument("--expect-c5", action="store_true")
    p.add_argument("--print", action="store_true", help="write the result in digraph format to stdout")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("verify-paper", help="check the built-in 16-operation construction")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("paper-script", help="print the built-in construction script")
    p.set_defaults(func=cmd_paper_script)

    p = sub.add_parser("fitness", help="print the fitness breakdown of a digraph file")
    p.add_argument("digraph")
    p.set_defaults(func=cmd_fitness)

    p = sub.add_parser("dichromatic", help="dichromatic number of a small digraph")
    p.add_argument("digraph")
    p.add_argument("--critical", type=int, metavar="R", help="print whether the digraph is R-critical")
    p.set_defaults(func=cmd_dichromatic)

    p = sub.add_parser("export-dot", help="write a digraph file as Graphviz DOT")
    p.add_argument("digraph")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
