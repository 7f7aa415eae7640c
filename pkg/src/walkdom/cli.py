"""Command-line entry point: ``walkdom <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .domination import ClassPair, dominates, is_member
from .errors import WalkDomError
from .formats import decode_graph6, encode_graph6, parse_edge_list, read_graph6_file, to_dot
from .graph import bits
from .miner import OPEN_PAIRS, classify_candidates, minimal_non_members, sandwich_violations
from .patterns import catalog, pattern
from .theorems import check_corpus, generate_corpus, registry, theorem, verify_theorem
from .walks import WalkClass, check_walk, enumerate_sequences, internal_set_masks, parse_walk

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_graph(args):
    if bool(args.graph6) == bool(args.edges):
        raise UsageError("give exactly one of --graph6 or --edges")
    if args.graph6:
        return decode_graph6(args.graph6)
    with open(args.edges) as fh:
        return parse_edge_list(fh.read())


def _pair(g, text):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--pair must be 'u,v', got {text!r}")
    return g.vertex_index(parts[0]), g.vertex_index(parts[1])


def _corpus(args):
    if args.corpus:
        graphs = read_graph6_file(args.corpus)
        if args.max_n is not None:
            graphs = [g for g in graphs if g.n <= args.max_n]
        return check_corpus(graphs), f"{args.corpus}" + (f" (n <= {args.max_n})" if args.max_n else "")
    if args.max_n is None:
        raise UsageError("give --max-n or --corpus")
    return generate_corpus(args.max_n), f"connected graphs, n <= {args.max_n}"


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_check(args, out, err):
    g = _load_graph(args)
    pair = ClassPair.parse(args.class_pair)
    verdict = is_member(g, pair)
    if args.json:
        payload = {"class_pair": str(pair), "graph6": encode_graph6(g), "member": verdict.member,
                   "certificate": verdict.certificate.to_json(g, pair) if verdict.certificate else None}
        _dump(payload, out)
    elif verdict.member:
        out.write(f"member of {pair}\n")
    else:
        out.write(f"not a member of {pair}: {verdict.certificate.describe(g)}\n")
    return EXIT_OK if verdict.member else EXIT_NO


def cmd_enumerate(args, out, err):
    g = _load_graph(args)
    u, v = _pair(g, args.pair)
    cls = WalkClass.parse(args.walk_class)
    if args.sets:
        masks = internal_set_masks(g, u, v, cls)
        if args.json:
            _dump([list(bits(m)) for m in masks], out)
        else:
            for m in masks:
                out.write("{" + ",".join(g.label(x) for x in bits(m)) + "}\n")
        return EXIT_OK
    walks = enumerate_sequences(g, u, v, cls, args.bound)
    if args.json:
        _dump([list(w.seq) for w in walks], out)
    else:
        for w in walks:
            out.write(w.format(g) + "\n")
    return EXIT_OK


def cmd_dominates(args, out, err):
    g = _load_graph(args)
    u, v = _pair(g, args.pair)
    w, w2 = parse_walk(g, args.walk), parse_walk(g, args.walk2)
    if (w.u, w.v) != (u, v) or (w2.u, w2.v) != (u, v):
        raise UsageError("both walks must run from the first to the second vertex of --pair")
    check_walk(g, w.seq)
    check_walk(g, w2.seq)
    ok, x = dominates(g, w, w2)
    if args.json:
        _dump({"dominates": ok, "undominated": None if ok else g.label(x)}, out)
    else:
        out.write("true\n" if ok else f"false undominated={g.label(x)}\n")
    return EXIT_OK if ok else EXIT_NO


def cmd_verify(args, out, err):
    specs = registry() if args.theorem.lower() == "all" else [theorem(args.theorem)]
    graphs, desc = _corpus(args)
    reports = []
    for spec in specs:
        rep = verify_theorem(spec, graphs, jobs=args.jobs, description=desc)
        reports.append(rep)
        err.write(f"{spec.id}: {rep.seconds:.2f}s\n")
    if args.json:
        _dump([r.to_json() for r in reports], out)
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{r.summary()} [{status}]\n")
            for d in r.disagreements:
                side = "member, not free" if d.member else "free, not member"
                out.write(f"  {d.graph6}\t{d.class_pair}\t{side}\n")
            for line in r.optimizer_mismatches:
                out.write(f"  optimizer mismatch: {line}\n")
            for line in r.certificate_failures:
                out.write(f"  certificate failed to replay: {line}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NO


def cmd_mine(args, out, err):
    pair = ClassPair.parse(args.class_pair)
    graphs, desc = _corpus(args)
    result = minimal_non_members(pair, graphs, jobs=args.jobs, description=desc)
    known = [spec.forbidden for spec in registry()]
    result = classify_candidates(result, known)
    out.write(f"# {pair}: {desc}\n# {result.caveat}\n")
    for line in result.lines():
        out.write(line + "\n")
    if str(pair) in OPEN_PAIRS:
        problems = sandwich_violations(graphs, jobs=args.jobs)
        out.write(f"# sandwich consistency: {'ok' if not problems else 'VIOLATED'}\n")
        for line in problems:
            out.write(f"# {line}\n")
        if problems:
            return EXIT_NO
    if args.json:
        with open(args.json, "w") as fh:
            _dump(result.to_json(), fh)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(result.to_dot())
    return EXIT_OK


def cmd_catalog(args, out, err):
    entries = [pattern(args.name)] if args.name else catalog()
    for e in entries:
        if args.emit == "dot":
            out.write(to_dot(e.graph, e.name))
        elif args.emit == "graph6":
            out.write(encode_graph6(e.graph) + "\n")
        else:
            out.write(f"{e.name}\t{e.graph.n}\t{e.graph.m}\t{encode_graph6(e.graph)}\t{e.description}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="walkdom", description="Walk-domination graph classes: membership, "
                "theorem verification and obstruction mining.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def graph_args(sp):
        sp.add_argument("--graph6", help="graph as a graph6 string")
        sp.add_argument("--edges", help="edge-list file ('n m' header, then 'i j' lines)")

    sp = sub.add_parser("check", help="decide membership in a class A/B")
    sp.add_argument("--class", dest="class_pair", required=True, help="e.g. m3/SP")
    graph_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("enumerate", help="list walks or internal sets between a pair")
    graph_args(sp)
    sp.add_argument("--pair", required=True, help="u,v as labels or indices")
    sp.add_argument("--walk-class", required=True)
    sp.add_argument("--sets", action="store_true", help="exact internal-vertex sets instead of walks")
    sp.add_argument("--bound", type=int, default=None, help="walk length bound (default 2n)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("dominates", help="test whether one walk dominates another")
    graph_args(sp)
    sp.add_argument("--pair", required=True)
    sp.add_argument("--walk", required=True)
    sp.add_argument("--walk2", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dominates)

    def corpus_args(sp):
        sp.add_argument("--max-n", type=int, default=None)
        sp.add_argument("--corpus", help="graph6 file of connected graphs")
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("verify", help="check the characterisation theorems on a corpus")
    sp.add_argument("--theorem", default="all")
    corpus_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mine", help="find minimal non-members of a class")
    sp.add_argument("--class", dest="class_pair", required=True)
    corpus_args(sp)
    sp.add_argument("--json", help="write candidates with certificates to this file")
    sp.add_argument("--dot", help="write candidates as DOT to this file")
    sp.set_defaults(func=cmd_mine)

    sp = sub.add_parser("catalog", help="print the named graphs")
    sp.add_argument("--emit", choices=["dot", "graph6"])
    sp.add_argument("--name")
    sp.set_defaults(func=cmd_catalog)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("missing command (check, enumerate, dominates, verify, mine, catalog)")
        return args.func(args, out, err)
    except (UsageError, WalkDomError, ValueError, OSError) as exc:
        err.write(f"walkdom: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
