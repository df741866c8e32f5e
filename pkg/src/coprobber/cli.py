"""Command-line harness.

Exit codes: 0 for success, 1 for a verification failure (a certification
subcommand found its claim false), 2 for bad input.  Graph arguments accept
a graph6 literal, a path to a file whose first line is graph6, or a family
spec like "petersen" or "cycle:6".  All configuration is flags; no
environment variables are read.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .graphs import Graph, GraphError
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .generators import family_names, from_spec
from .solver import (
    CapacityError,
    DEFAULT_CAPACITY,
    StrategyHoleError,
    available_backends,
    cop_number,
    dismantle,
    extract_robber_strategy,
    extract_strategies,
    solve_k_copwin,
    strategy_from_json,
    strategy_to_json,
)
from .embedding import (
    SchemeError,
    add_crosscap,
    euler_characteristic,
    euler_genus,
    is_orientable_scheme,
    scheme_from_json,
    scheme_to_json,
    trace_faces,
    validate_scheme,
)
from .genus_search import DEFAULT_GENUS_BUDGET, MODES, min_euler_genus
from .covering import (
    CoverError,
    check_weak_cover,
    covering_map_from_json,
    covering_map_to_json,
    double_cover,
)
from .engine import play, transcript_to_json, transfer_strategy, verify_winning
from .bounds import (
    NONORIENTABLE_METHODS,
    ORIENTABLE_METHODS,
    bounds_table_csv,
    bounds_table_json,
    nonorientable_upper_bound,
    orientable_upper_bound,
)
from .corpus import (
    CorpusError,
    load_corpus,
    load_entry,
    entry_to_json,
    rebuild_corpus,
    run_corpus,
    verify_theorem,
)

INPUT_ERRORS = (
    GraphError,
    Graph6Error,
    SchemeError,
    CoverError,
    CorpusError,
    CapacityError,
    FileNotFoundError,
    IsADirectoryError,
    PermissionError,
    json.JSONDecodeError,
    KeyError,
    ValueError,
)


def _load_graph(arg: str) -> Graph:
    path = Path(arg)
    if path.is_file():
        lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphError(
                f"{arg}: expected exactly one graph6 line, found {len(lines)}"
            )
        return parse_graph6(lines[0])
    head = arg.split(":", 1)[0]
    if head in family_names():
        return from_spec(arg)
    return parse_graph6(arg)


def _load_json(arg: str) -> dict:
    return json.loads(Path(arg).read_text())


def _emit(data, out: str | None) -> None:
    text = json.dumps(data, indent=1, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _solve_summary(result) -> dict:
    return {
        "n": result.graph.n,
        "k": result.k,
        "backend": result.backend,
        "copwin": result.copwin,
        "states": result.num_states,
        "ranks_histogram": result.ranks_histogram(),
        "best_placement": list(result.best_placement or ()) or None,
        "elapsed_ms": round(result.elapsed_ms, 3),
    }


# ----------------------------------------------------------------------------
# subcommand bodies, each returning a process exit code


def _cmd_gen(args) -> int:
    g = from_spec(args.spec)
    line = write_graph6(g) + "\n"
    if args.output:
        Path(args.output).write_text(line)
    else:
        sys.stdout.write(line)
    return 0


def _cmd_copnum(args) -> int:
    g = _load_graph(args.graph)
    c, result = cop_number(g, capacity=args.capacity, backend=args.backend)
    if args.json:
        data = _solve_summary(result)
        data["cop_number"] = c
        _emit(data, args.output)
    else:
        print(c)
    return 0


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    result = solve_k_copwin(g, args.k, capacity=args.capacity, backend=args.backend)
    _emit(_solve_summary(result), args.output)
    if args.strategy_out:
        if not result.copwin:
            raise GraphError(
                f"no winning strategy for k={args.k}; nothing to extract"
            )
        cop, _ = extract_strategies(result)
        Path(args.strategy_out).write_text(
            json.dumps(strategy_to_json(cop), indent=1, sort_keys=True) + "\n"
        )
    return 0


def _cmd_dismantle(args) -> int:
    g = _load_graph(args.graph)
    r = dismantle(g)
    _emit(
        {
            "n": g.n,
            "dismantlable": r.dismantlable,
            "order": list(r.order) if r.order is not None else None,
        },
        args.output,
    )
    return 0


def _cmd_play(args) -> int:
    g = _load_graph(args.graph)
    if args.strategy:
        cop = strategy_from_json(_load_json(args.strategy))
        if cop.graph6 != write_graph6(g):
            raise GraphError("strategy was extracted for a different graph")
        result = solve_k_copwin(g, cop.k, capacity=args.capacity)
    else:
        result = solve_k_copwin(g, args.k, capacity=args.capacity)
        if not result.copwin:
            raise GraphError(f"graph is not {args.k}-copwin; provide --strategy")
        cop, _ = extract_strategies(result)
    robber = extract_robber_strategy(result)
    transcript = play(g, cop, robber, limit=args.limit)
    _emit(transcript_to_json(transcript), args.output)
    return 0


def _cmd_transfer(args) -> int:
    cover_map = covering_map_from_json(_load_json(args.cover))
    cover_strategy = strategy_from_json(_load_json(args.strategy))
    sim = transfer_strategy(cover_map, cover_strategy)
    base = cover_map.target
    out = {
        "kind": cover_map.kind,
        "base_graph6": write_graph6(base),
        "cover_graph6": write_graph6(cover_map.source),
        "k": cover_strategy.k,
        "placement": list(sim.placement),
    }
    code = 0
    if args.verify:
        verdict = verify_winning(base, sim)
        out["verified"] = verdict.ok
        out["max_cop_moves"] = verdict.max_cop_moves
        out["states"] = verdict.states
        if not verdict.ok:
            out["reason"] = verdict.reason
            code = 1
    if args.simulate:
        result = solve_k_copwin(base, cover_strategy.k, capacity=args.capacity)
        robber = extract_robber_strategy(result)
        out["transcript"] = transcript_to_json(play(base, sim, robber))
    _emit(out, args.output)
    return code


def _cmd_faces(args) -> int:
    s = scheme_from_json(_load_json(args.embedding))
    problems = validate_scheme(s)
    if problems:
        raise SchemeError("; ".join(problems))
    walks = trace_faces(s)
    out = {
        "n": s.n,
        "edges": len(s.edges),
        "faces": walks.count,
        "face_lengths": sorted(walks.lengths),
        "euler_characteristic": euler_characteristic(s),
        "euler_genus": euler_genus(s),
        "orientable": is_orientable_scheme(s),
    }
    if args.walks:
        out["walks"] = [
            [[t, h, e] for t, h, e in walk] for walk in walks.walks
        ]
    _emit(out, args.output)
    return 0


def _cmd_genus(args) -> int:
    g = _load_graph(args.graph)
    r = min_euler_genus(g, mode=args.mode, budget=args.budget, backend=args.backend)
    witness_orientable = is_orientable_scheme(r.scheme)
    out = {
        "graph6": write_graph6(g),
        "mode": r.mode,
        "euler_genus": r.genus,
        "orientable_genus": r.orientable_genus if witness_orientable else None,
        "witness_orientable": witness_orientable,
        "space_size": r.space_size,
        "witness": scheme_to_json(r.scheme),
    }
    _emit(out, args.output)
    return 0


def _cmd_crosscap(args) -> int:
    s = scheme_from_json(_load_json(args.embedding))
    crossed = add_crosscap(s)
    out = scheme_to_json(crossed)
    out["euler_genus"] = euler_genus(crossed)
    out["orientable"] = False
    _emit(out, args.output)
    return 0


def _cmd_doublecover(args) -> int:
    s = scheme_from_json(_load_json(args.embedding))
    cover, cover_map = double_cover(s)
    out = {
        "cover": scheme_to_json(cover),
        "map": covering_map_to_json(cover_map),
        "connected": cover.graph.is_connected(),
        "euler_characteristic": euler_characteristic(cover),
    }
    _emit(out, args.output)
    return 0


def _cmd_weakcover(args) -> int:
    if args.map:
        m = covering_map_from_json(_load_json(args.map))
        res = check_weak_cover(m.p, m.source, m.target)
    else:
        if not (args.source and args.target and args.p):
            raise GraphError("weakcover needs --map or --source/--target/--p")
        source = _load_graph(args.source)
        target = _load_graph(args.target)
        p = [int(x) for x in args.p.split(",")]
        res = check_weak_cover(p, source, target)
    out = {
        "ok": res.ok,
        "kind": res.map.kind if res.ok else None,
        "violations": list(res.violations),
    }
    if res.ok:
        out["map"] = covering_map_to_json(res.map)
    _emit(out, args.output)
    return 0 if res.ok else 1


def _cmd_bounds(args) -> int:
    if args.table:
        if args.format == "csv":
            text = bounds_table_csv(args.max_genus)
            if args.output:
                Path(args.output).write_text(text)
            else:
                sys.stdout.write(text)
        else:
            _emit(bounds_table_json(args.max_genus), args.output)
        return 0
    if args.genus is None:
        raise GraphError("bounds needs --genus G or --table")
    if args.surface == "orientable":
        method = args.method or "schroder"
        if method not in ORIENTABLE_METHODS:
            raise GraphError(
                f"unknown orientable method {method!r}; known: "
                + ", ".join(ORIENTABLE_METHODS)
            )
        value = orientable_upper_bound(args.genus, method)
    else:
        method = args.method or "this_paper"
        if method not in NONORIENTABLE_METHODS:
            raise GraphError(
                f"unknown non-orientable method {method!r}; known: "
                + ", ".join(NONORIENTABLE_METHODS)
            )
        value = nonorientable_upper_bound(args.genus, method)
    _emit(
        {
            "genus": args.genus,
            "surface": args.surface,
            "method": method,
            "bound": value,
        },
        args.output,
    )
    return 0


def _cmd_verify(args) -> int:
    report = verify_theorem(args.corpus, workers=args.workers)
    _emit(report.to_json(), args.output)
    return 0 if report.ok else 1


def _cmd_corpus(args) -> int:
    if args.action == "list":
        rows = []
        for entry in load_corpus():
            rows.append(
                {
                    "name": entry.name,
                    "n": entry.scheme.n,
                    "edges": len(entry.scheme.edges),
                    "euler_genus": entry.euler_genus,
                    "orientable": entry.orientable,
                    "graph6": write_graph6(entry.graph),
                }
            )
        _emit(rows, args.output)
        return 0
    if args.action == "dump":
        if not args.name:
            raise CorpusError("corpus dump needs a name; see corpus list")
        _emit(entry_to_json(load_entry(args.name)), args.output)
        return 0
    if args.action == "rebuild":
        target = args.directory or "."
        written = rebuild_corpus(target)
        for p in written:
            print(p)
        return 0
    if args.action == "run":
        if not args.command or not args.directory:
            raise CorpusError("corpus run needs a command and a directory")
        out = run_corpus(args.command, args.directory, workers=args.workers)
        _emit(out, args.output)
        return 0 if out["summary"]["errors"] == 0 else 1
    raise CorpusError(f"unknown corpus action {args.action!r}")


# ----------------------------------------------------------------------------
# parser wiring


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprobber",
        description="cop-number solver, embedding schemes, covers, bounds",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate a family graph as graph6")
    p.add_argument("spec", help="family spec, e.g. petersen or cycle:6")
    _add_common(p)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("copnum", help="cop number of a graph")
    p.add_argument("graph")
    p.add_argument("--backend", choices=available_backends(), default=None)
    p.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY)
    p.add_argument("--json", action="store_true", help="full solve summary")
    _add_common(p)
    p.set_defaults(fn=_cmd_copnum)

    p = sub.add_parser("solve", help="classify all k-cop game states")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--backend", choices=available_backends(), default=None)
    p.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY)
    p.add_argument("--strategy-out", help="write extracted cop strategy JSON")
    _add_common(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("dismantle", help="dismantlability certificate")
    p.add_argument("graph")
    _add_common(p)
    p.set_defaults(fn=_cmd_dismantle)

    p = sub.add_parser("play", help="simulate a game against the optimal robber")
    p.add_argument("graph")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--strategy", help="cop strategy JSON; otherwise solve at k")
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY)
    _add_common(p)
    p.set_defaults(fn=_cmd_play)

    p = sub.add_parser(
        "transfer", help="run a cover strategy on the covered graph"
    )
    p.add_argument("--cover", required=True, help="covering map JSON")
    p.add_argument("--strategy", required=True, help="cover cop strategy JSON")
    p.add_argument("--verify", action="store_true", help="exhaustive check")
    p.add_argument("--simulate", action="store_true", help="play one game")
    p.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY)
    _add_common(p)
    p.set_defaults(fn=_cmd_transfer)

    p = sub.add_parser("faces", help="trace faces of an embedding scheme")
    p.add_argument("embedding", help="embedding JSON file")
    p.add_argument("--walks", action="store_true", help="include face walks")
    _add_common(p)
    p.set_defaults(fn=_cmd_faces)

    p = sub.add_parser("genus", help="exhaustive minimum Euler genus")
    p.add_argument("graph")
    p.add_argument("--mode", choices=MODES, default="any")
    p.add_argument("--budget", type=int, default=DEFAULT_GENUS_BUDGET)
    p.add_argument("--backend", choices=available_backends(), default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_genus)

    p = sub.add_parser("crosscap", help="add a crosscap to an orientable scheme")
    p.add_argument("embedding", help="embedding JSON file")
    _add_common(p)
    p.set_defaults(fn=_cmd_crosscap)

    p = sub.add_parser("doublecover", help="orientable double cover of a scheme")
    p.add_argument("embedding", help="embedding JSON file")
    _add_common(p)
    p.set_defaults(fn=_cmd_doublecover)

    p = sub.add_parser("weakcover", help="certify a weak cover map")
    p.add_argument("--map", help="covering map JSON")
    p.add_argument("--source", help="covering graph")
    p.add_argument("--target", help="covered graph")
    p.add_argument("--p", help="comma-separated image of each source vertex")
    _add_common(p)
    p.set_defaults(fn=_cmd_weakcover)

    p = sub.add_parser("bounds", help="closed-form cop-number bounds")
    p.add_argument("--genus", type=int)
    p.add_argument(
        "--surface",
        choices=("orientable", "nonorientable"),
        default="nonorientable",
    )
    p.add_argument("--method")
    p.add_argument("--table", action="store_true")
    p.add_argument("--max-genus", type=int, default=7)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("verify", help="run the full verification pipeline")
    p.add_argument("--corpus", help="directory of corpus JSON; default shipped")
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("corpus", help="manage the shipped corpus")
    p.add_argument("action", choices=("list", "dump", "rebuild", "run"))
    p.add_argument("name", nargs="?", help="entry name for dump")
    p.add_argument("--directory", help="target for rebuild, input for run")
    p.add_argument("--command", help="subcommand for run: copnum, faces, validate")
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)
    p.set_defaults(fn=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except StrategyHoleError as exc:
        print(f"strategy failure: {exc}", file=sys.stderr)
        return 1
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
