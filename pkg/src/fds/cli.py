"""Command-line front end.

Every command prints a single JSON object (sorted keys) unless a DOT or
text format is selected.  Exit codes: 0 success, 2 parse/dimension
errors, 3 enumeration-budget refusals.  Errors are emitted as one-line
JSON objects on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dynamics, graphs, schedules, system as system_mod
from .errors import BudgetExceededError, FdsError, ParseError

DEFAULT_SEED = 1729

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3

H_GRAPH_NOTE = (
    "Occurrence graphs carry one edge per pair of occurrences of dependent "
    "letters: for the word 1,2,1,3 on a 4-cycle reference graph this yields "
    "two edges between the occurrences of letters 1 and 3, each oriented "
    "toward the letter-1 endpoint, even though the configuration is sometimes "
    "summarized as the single letter-level edge 3->1.  This tool always emits "
    "every occurrence-level edge."
)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")


def _load_system(path: str):
    return system_mod.parse_system(_read(path))


def _load_graph(path: str):
    return graphs.parse_graph(_read(path))


def _emit(payload, out) -> None:
    if isinstance(payload, str):
        out.write(payload)
        if not payload.endswith("\n"):
            out.write("\n")
    else:
        out.write(json.dumps(payload, sort_keys=True) + "\n")


def _perm_json(p):
    return list(p) if p is not None else None


# ---------------------------------------------------------------------------
# Command handlers

def _cmd_deps(args, out):
    f = _load_system(args.system)
    g = system_mod.phi(f)
    if args.format == "dot":
        _emit(dynamics.dep_dot_export(g), out)
        return
    payload = g.to_json()
    if args.matrix:
        payload["matrix"] = [
            list(f.update(i).coefficient_row()) for i in range(1, f.n + 1)
        ]
    if args.oracle:
        oracle = system_mod.phi_oracle(f)
        payload["oracle_edges"] = [list(e) for e in oracle.sorted_edges()]
        payload["oracle_agrees"] = oracle == g
    _emit(payload, out)


def _cmd_linearize(args, out):
    if args.graph:
        g = _load_graph(args.graph)
    else:
        if not args.system:
            raise ParseError("linearize needs a system file or --graph")
        g = system_mod.phi(_load_system(args.system))
    matrix = graphs.linearize(g)
    lin = graphs.system_from_matrix(matrix)
    _emit(
        {
            "n": g.n,
            "graph": g.to_json(),
            "matrix": [list(row) for row in matrix],
            "system": [str(lin.update(i)) for i in range(1, g.n + 1)],
        },
        out,
    )


def _cmd_equiv(args, out):
    f = _load_system(args.system1)
    g = _load_system(args.system2)
    p = graphs.graph_equivalent(f, g)
    _emit({"equivalent": p is not None, "permutation": _perm_json(p)}, out)


def _composed(args):
    f = _load_system(args.system)
    word = system_mod.parse_word(args.word, f.n)
    return f, word, system_mod.compose_word(f, word)


def _cmd_compose(args, out):
    f, word, m = _composed(args)
    _emit(
        {
            "n": f.n,
            "word": list(word),
            "successors": list(m),
            "labels": [dynamics.state_label(s, f.n) for s in m],
        },
        out,
    )


def _cmd_statespace(args, out):
    f, word, m = _composed(args)
    ss = dynamics.state_space(m)
    dot = dynamics.dot_export(ss)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    if args.format == "dot":
        _emit(dot, out)
    else:
        _emit({"n": f.n, "word": list(word), "successors": list(m)}, out)


def _cmd_cycles(args, out):
    f, word, m = _composed(args)
    payload = dynamics.limit_cycles(dynamics.state_space(m)).to_json(f.n)
    payload["word"] = list(word)
    _emit(payload, out)


def _cmd_stable(args, out):
    f = _load_system(args.system1)
    g = _load_system(args.system2)
    word_f = system_mod.parse_word(args.word, f.n)
    word_g = system_mod.parse_word(args.word, g.n)
    mf = system_mod.compose_word(f, word_f)
    mg = system_mod.compose_word(g, word_g)
    _emit(
        {
            "stably_isomorphic": dynamics.stably_isomorphic(mf, mg),
            "multiset1": list(dynamics.cycle_multiset(mf)),
            "multiset2": list(dynamics.cycle_multiset(mg)),
        },
        out,
    )


def _cmd_bound(args, out):
    f = _load_system(args.system)
    report = schedules.bound_report(
        f, args.length, perms_only=args.perms, budget=args.budget
    )
    _emit(report.to_json(), out)


def _cmd_words(args, out):
    g = _load_graph(args.graph)
    if args.n != g.n:
        raise ParseError(f"-n {args.n} does not match graph on {g.n} vertices")
    forms = schedules.enumerate_classes(args.n, args.length, g, budget=args.budget)
    _emit({"classes": len(forms), "normal_forms": [list(w) for w in forms]}, out)


def _cmd_psi(args, out):
    f = _load_system(args.system)
    g = _load_graph(args.graph)
    _emit({"member": graphs.psi_membership(f, g)}, out)


def _cmd_psi_size(args, out):
    g = _load_graph(args.graph)
    _emit({"n": g.n, "cardinality": graphs.psi_cardinality(g)}, out)


def _cmd_dlocal(args, out):
    f = _load_system(args.system)
    y = _load_graph(args.graph)
    _emit({"d": args.radius, "d_local": graphs.is_d_local(f, y, args.radius)}, out)


def _cmd_monoid(args, out):
    f = _load_system(args.system)
    closure = dynamics.monoid_closure(f)
    payload = {"closure_size": len(closure)}
    if args.word:
        word = system_mod.parse_word(args.word, f.n)
        m = system_mod.compose_word(f, word)
        if args.conjugate:
            p = graphs.parse_perm(args.conjugate, f.n)
            m = dynamics.conjugate_by_coord_perm(m, p)
        payload["member"] = m in closure
        payload["map"] = list(m)
    _emit(payload, out)


def _cmd_hgraph(args, out):
    g = _load_graph(args.graph)
    word = system_mod.parse_word(args.word, g.n)
    h = schedules.h_graph(word, g)
    payload = {
        "word": list(word),
        "vertices": [list(v) for v in h.vertices],
        "edges": sorted([list(a), list(b)] for a, b in sorted(h.edges)),
        "orientation": sorted(
            [list(src), list(dst)] for src, dst in sorted(h.orientation)
        ),
        "acyclic": h.is_acyclic(),
    }
    if args.explain:
        payload["note"] = H_GRAPH_NOTE
    _emit(payload, out)


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fds",
        description="Classify finite dynamical systems on binary strings.",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized operations (default %(default)s)")
    parser.add_argument("--format", choices=("json", "dot", "text"), default="json")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count for enumeration-heavy operations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deps", help="dependency graph of a system")
    p.add_argument("system")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the commutation definition")
    p.add_argument("--matrix", action="store_true",
                   help="include the coefficient matrix of the updates")
    p.set_defaults(func=_cmd_deps)

    p = sub.add_parser("linearize", help="linearization matrix and system")
    p.add_argument("system", nargs="?")
    p.add_argument("--graph", help="linearize this graph instead of phi(system)")
    p.set_defaults(func=_cmd_linearize)

    p = sub.add_parser("equiv", help="graph equivalence of two systems")
    p.add_argument("system1")
    p.add_argument("system2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("compose", help="compose locals along a word")
    p.add_argument("system")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("statespace", help="functional digraph of a composed system")
    p.add_argument("system")
    p.add_argument("--word", required=True)
    p.add_argument("--dot", help="also write DOT to this path")
    p.set_defaults(func=_cmd_statespace)

    p = sub.add_parser("cycles", help="limit cycles of a composed system")
    p.add_argument("system")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("stable", help="stable isomorphism of two composed systems")
    p.add_argument("system1")
    p.add_argument("system2")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_stable)

    p = sub.add_parser("bound", help="system-count bound over all words of a length")
    p.add_argument("system")
    p.add_argument("-t", "--length", type=int, required=True)
    p.add_argument("--perms", action="store_true",
                   help="restrict to permutation words (t = n)")
    p.add_argument("--budget", type=int, default=schedules.WORDS_DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("words", help="enumerate word classes for a graph")
    p.add_argument("-n", type=int, required=True, dest="n")
    p.add_argument("-t", "--length", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=schedules.WORDS_DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_words)

    p = sub.add_parser("psi", help="membership of a system in a graph's tuple set")
    p.add_argument("system")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("psi-size", help="cardinality of a graph's tuple set")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_psi_size)

    p = sub.add_parser("dlocal", help="locality radius check against a graph")
    p.add_argument("system")
    p.add_argument("--graph", required=True)
    p.add_argument("-d", type=int, required=True, dest="radius")
    p.set_defaults(func=_cmd_dlocal)

    p = sub.add_parser("monoid", help="closure of the locals under composition")
    p.add_argument("system")
    p.add_argument("--word", help="test membership of the composed map")
    p.add_argument("--conjugate",
                   help="conjugate the composed map by this coordinate permutation")
    p.set_defaults(func=_cmd_monoid)

    p = sub.add_parser("hgraph", help="occurrence graph and orientation of a word")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--explain", action="store_true",
                   help="include the note on occurrence-level edges")
    p.set_defaults(func=_cmd_hgraph)

    return parser


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        args.func(args, out)
    except BudgetExceededError as exc:
        _emit({"error": str(exc), "kind": "budget", "required": exc.required}, err)
        return EXIT_BUDGET
    except FdsError as exc:
        _emit({"error": str(exc), "kind": "parse"}, err)
        return EXIT_PARSE
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
