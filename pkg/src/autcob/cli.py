"""Command-line front end.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 sweep mismatch, 2 input error, 3 diagram type error, 4 capacity.
"""

from __future__ import annotations

import argparse
import json
import sys

from .automaton import Nfa
from .covers import GraphMap, cyclic_cover, is_covering, is_weak_covering, voltage_cover
from .diagrams import Diagram, parse_diagram
from .errors import CapacityError, DiagramTypeError, ParseError
from .evaluate import eval_nfa, eval_tautomaton
from .oracle import chain_map_sum, circle_map_sum
from .semiring import BOOL, NAT
from .topology import TAutomaton


def cli_word(text: str) -> tuple:
    """One letter per character; comma-separated for multi-character
    letters.  The empty string is the empty word."""
    if not text:
        return ()
    if "," in text:
        return tuple(p for p in text.split(",") if p)
    return tuple(text)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_nfa(path: str) -> Nfa:
    return Nfa.from_json(_read(path))


def _load_taut(path: str) -> TAutomaton:
    return TAutomaton.from_json(_read(path))


def _load_diagram(path: str) -> Diagram:
    text = _read(path)
    if path.endswith(".json"):
        return Diagram.from_json(text)
    return parse_diagram(text)


def _write_automaton(nfa: Nfa, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(nfa.to_json(indent=2))
        fh.write("\n")


def _print_matrix(mat):
    for i in range(mat.rows):
        print(" ".join(str(v) for v in mat.row(i)))


def _cmd_eval(args) -> int:
    diagram = _load_diagram(args.diagram)
    if args.tautomaton:
        if args.semiring != "bool":
            raise ValueError("T-automaton evaluation is Boolean only")
        ev = eval_tautomaton(_load_taut(args.tautomaton), diagram)
    else:
        ring = BOOL if args.semiring == "bool" else NAT
        ev = eval_nfa(_load_nfa(args.automaton), diagram, ring)
    if diagram.is_closed:
        print(ev.scalar())
    else:
        _print_matrix(ev.matrix)
    return 0


def _cmd_member(args) -> int:
    print(int(_load_nfa(args.automaton).interval_eval(cli_word(args.word))))
    return 0


def _cmd_trace_member(args) -> int:
    print(int(_load_nfa(args.automaton).trace_eval(cli_word(args.word))))
    return 0


def _cmd_t_member(args) -> int:
    print(int(_load_taut(args.tautomaton).interval_eval(cli_word(args.word))))
    return 0


def _cmd_t_trace(args) -> int:
    print(int(_load_taut(args.tautomaton).trace_eval(cli_word(args.word))))
    return 0


def _cmd_cover_cyclic(args) -> int:
    nfa = _load_nfa(args.automaton)
    order = [s for s in args.order.split(",") if s]
    _write_automaton(cyclic_cover(nfa, order, args.n), args.out)
    return 0


def _cmd_cover_voltage(args) -> int:
    nfa = _load_nfa(args.automaton)
    spec = json.loads(_read(args.voltages)) if args.voltages else {"assignments": []}
    extra = set(spec) - {"assignments"}
    if extra:
        raise ValueError(f"unknown keys {sorted(extra)}")
    # unlisted transitions get the identity permutation
    voltages = {e: tuple(range(args.n)) for e in nfa.delta}
    for item in spec.get("assignments", []):
        if set(item) != {"from", "letter", "to", "perm"}:
            raise ValueError("assignment needs keys from/letter/to/perm")
        edge = (item["from"], item["letter"], item["to"])
        if edge not in nfa.delta:
            raise ValueError(f"assignment for unknown transition {edge}")
        voltages[edge] = tuple(item["perm"])
    _write_automaton(voltage_cover(nfa, args.n, voltages), args.out)
    return 0


def _cmd_cover_check(args) -> int:
    cover = _load_nfa(args.cover)
    base = _load_nfa(args.base)
    data = json.loads(_read(args.map))
    extra = set(data) - {"vertices"}
    if extra:
        raise ValueError(f"unknown keys {sorted(extra)}")
    p = GraphMap.from_vertex_map(cover, base, data["vertices"])
    check = is_weak_covering if args.weak else is_covering
    print(int(check(p, cover, base)))
    return 0


def _cmd_trim(args) -> int:
    _write_automaton(_load_nfa(args.automaton).trim(), args.out)
    return 0


def _cmd_dot(args) -> int:
    nfa = _load_nfa(args.automaton)
    lines = ["digraph automaton {", "  rankdir=LR;", '  node [shape=circle];']
    for q in nfa.states:
        shape = "doublecircle" if q in nfa.accepting else "circle"
        lines.append(f'  "{q}" [shape={shape}];')
    for i, q in enumerate(sorted(nfa.initial)):
        lines.append(f'  "__start{i}" [shape=none, label=""];')
        lines.append(f'  "__start{i}" -> "{q}";')
    for q, a, r in sorted(nfa.delta):
        lines.append(f'  "{q}" -> "{r}" [label="{a}"];')
    lines.append("}")
    print("\n".join(lines))
    return 0


def _cmd_oracle_sweep(args) -> int:
    nfa = _load_nfa(args.automaton)
    words = [()]
    frontier = [()]
    for _ in range(args.max_len):
        frontier = [w + (a,) for w in frontier for a in nfa.alphabet]
        words.extend(frontier)
    bad = 0
    for w in words:
        checks = [
            ("chain/bool", bool(chain_map_sum(nfa, w)), nfa.interval_eval(w)),
            ("circle/bool", bool(circle_map_sum(nfa, w)), nfa.trace_eval(w)),
        ]
        m = nfa.word_matrix(w, NAT)
        idx = {q: i for i, q in enumerate(nfa.states)}
        n = len(nfa.states)
        count = sum(
            m.entries[idx[q] * n + idx[r]]
            for q in nfa.initial
            for r in nfa.accepting
        )
        checks.append(("chain/nat", chain_map_sum(nfa, w, NAT), count))
        checks.append(("circle/nat", circle_map_sum(nfa, w, NAT), m.trace()))
        for name, got, want in checks:
            if got != want:
                bad += 1
                print(f"mismatch {name} on {''.join(w) or 'eps'}: {got} != {want}",
                      file=sys.stderr)
    if bad:
        return 1
    print(f"ok: {len(words)} words up to length {args.max_len}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autcob")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a diagram to a matrix or scalar")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--automaton")
    src.add_argument("--tautomaton")
    p.add_argument("--diagram", required=True)
    p.add_argument("--semiring", choices=["bool", "nat"], default="bool")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("member", help="interval membership")
    p.add_argument("--automaton", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("trace-member", help="trace (circular) membership")
    p.add_argument("--automaton", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_trace_member)

    p = sub.add_parser("t-member", help="T-automaton interval membership")
    p.add_argument("--tautomaton", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_t_member)

    p = sub.add_parser("t-trace", help="T-automaton trace membership")
    p.add_argument("--tautomaton", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_t_trace)

    cover = sub.add_parser("cover", help="covering constructions and checks")
    csub = cover.add_subparsers(dest="cover_command", required=True)

    p = csub.add_parser("cyclic")
    p.add_argument("--automaton", required=True)
    p.add_argument("--order", required=True, help="comma-separated state order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_cover_cyclic)

    p = csub.add_parser("voltage")
    p.add_argument("--automaton", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--voltages", help="JSON {assignments: [{from, letter, to, perm}]}")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_cover_voltage)

    p = csub.add_parser("check")
    p.add_argument("--map", required=True, help='JSON {"vertices": {cover: base}}')
    p.add_argument("--cover", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--weak", action="store_true")
    p.set_defaults(func=_cmd_cover_check)

    p = sub.add_parser("trim", help="drop states off accepting paths and loops")
    p.add_argument("--automaton", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_trim)

    p = sub.add_parser("dot", help="Graphviz DOT of the automaton graph")
    p.add_argument("--automaton", required=True)
    p.set_defaults(func=_cmd_dot)

    oracle = sub.add_parser("oracle", help="brute-force equivalence suites")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)
    p = osub.add_parser("sweep")
    p.add_argument("--automaton", required=True)
    p.add_argument("--max-len", type=int, default=5)
    p.set_defaults(func=_cmd_oracle_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except DiagramTypeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
