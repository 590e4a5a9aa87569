"""Command-line front end.

Graph files are plain text::

    n m root_index
    u v w          (m lines, edge ids follow line order)
    rot:           (optional) then n lines of incident edge ids in cyclic order

Blank lines and ``#`` comments are ignored.  Basis output is one line per
cycle in construction order, ``cycle weight=W witness=E edges=a,b,c``,
followed by ``cycles=k total_weight=W rank=r dim=d``.

Exit codes: 0 success, 1 a domain "no" answer, 2 bad input, 3 search limit.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .errors import (CapExceeded, GraphError, InternalEarViolation, InvalidEmbedding, NoRootedBasis,
                     RootedBasisError, SearchLimitExceeded)
from .fundamental import (DEFAULT_LIMIT, PlaneEmbedding, dual_graph, find_fundamental_rooted_tree,
                          fundamental_basis, has_rooted_hamiltonian, plane_grid, plane_prism, plane_wheel)
from .generators import gen_cliques_with_paths, gen_k33_subdivision, gen_ladder, gen_random_biconnected
from .graph import Cycle, CycleBasis, RootedGraph, build_graph, gf2_rank, root_component_dimension, validate_rooted_basis
from .minbasis import greedy_rooted_basis
from .rooted import build_rooted_cycle_basis, has_rooted_cycle_basis
from .testkit import brute_fundamental_search
from .tiebreak import make_tiebreak

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
SEED_ENV = "ROOTED_CYCLES_SEED"


class InputError(Exception):
    """Unreadable or malformed input file; maps to exit code 2."""


@dataclass
class GraphFile:
    rooted: RootedGraph
    embedding: PlaneEmbedding | None = None


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(no: int, line: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise InputError(f"line {no}: expected integers, got {line!r}") from None
    if count is not None and len(vals) != count:
        raise InputError(f"line {no}: expected {count} integers, got {len(vals)}")
    return vals


def parse_graph_file(text: str) -> GraphFile:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty graph file")
    no, head = lines[0]
    n, m, root = _ints(no, head, 3)
    if n < 0 or m < 0:
        raise InputError(f"line {no}: negative sizes")
    body = lines[1:]
    if len(body) < m:
        raise InputError(f"expected {m} edge lines, found {len(body)}")
    edges = [tuple(_ints(no, line, 3)) for no, line in body[:m]]
    rest = body[m:]
    if not 0 <= root < m:
        raise InputError(f"root index {root} out of range for m={m}")
    try:
        rg = RootedGraph(build_graph(n, edges), root)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    emb = None
    if rest:
        no, tag = rest[0]
        if tag != "rot:":
            raise InputError(f"line {no}: unexpected content {tag!r}")
        if len(rest) - 1 != n:
            raise InputError(f"rot section needs {n} lines, found {len(rest) - 1}")
        rotation = []
        for no, line in rest[1:]:
            if ":" in line:
                label, line = line.split(":", 1)
                if label.strip() != str(len(rotation)):
                    raise InputError(f"line {no}: rotation for vertex {label.strip()}, expected {len(rotation)}")
            rotation.append(tuple(_ints(no, line)))
        try:
            emb = PlaneEmbedding(rg.graph, tuple(rotation))
        except InvalidEmbedding as exc:
            raise InputError(f"bad embedding: {exc}") from None
    return GraphFile(rg, emb)


def format_graph_file(rg: RootedGraph, embedding: PlaneEmbedding | None = None) -> str:
    g = rg.graph
    lines = [f"{g.n} {g.m} {rg.root_edge}"]
    lines += [f"{u} {v} {w}" for u, v, w in g.edges]
    if embedding is not None:
        lines.append("rot:")
        lines += [f"{v}: " + " ".join(map(str, rot)) for v, rot in enumerate(embedding.rotation)]
    return "\n".join(lines) + "\n"


def format_cycle(c: Cycle, witness: int | None) -> str:
    w = "-" if witness is None else str(witness)
    return f"cycle weight={c.weight} witness={w} edges={','.join(map(str, c.sorted_edges()))}"


def summary_line(rg: RootedGraph, cycles: Sequence[Cycle]) -> str:
    total = sum(c.weight for c in cycles)
    rank = gf2_rank(c.mask() for c in cycles)
    return f"cycles={len(cycles)} total_weight={total} rank={rank} dim={root_component_dimension(rg)}"


def write_basis(out: TextIO, rg: RootedGraph, basis: CycleBasis) -> None:
    for c, w in zip(basis.cycles, basis.witness_edges):
        print(format_cycle(c, w), file=out)
    print(summary_line(rg, basis.cycles), file=out)


def parse_basis_file(text: str, rg: RootedGraph) -> CycleBasis:
    """Read ``cycle`` lines back; other lines (summary, tree, ear) are skipped."""
    cycles, witnesses = [], []
    for no, line in _content_lines(text):
        if not line.startswith("cycle "):
            continue
        fields = dict(tok.split("=", 1) for tok in line.split()[1:] if "=" in tok)
        if "edges" not in fields:
            raise InputError(f"line {no}: cycle without edges=")
        try:
            ids = [int(t) for t in fields["edges"].split(",") if t]
            witness = None if fields.get("witness", "-") == "-" else int(fields["witness"])
            weight = int(fields["weight"]) if "weight" in fields else None
        except ValueError:
            raise InputError(f"line {no}: malformed cycle line") from None
        if any(not 0 <= e < rg.graph.m for e in ids):
            raise InputError(f"line {no}: edge id out of range")
        c = Cycle.from_edges(rg.graph, ids)
        if weight is not None and weight != c.weight:
            c = Cycle(c.edge_ids, weight)  # keep the stated weight so validation reports it
        cycles.append(c)
        witnesses.append(witness)
    return CycleBasis(tuple(cycles), tuple(witnesses))


# ---------------------------------------------------------------------------
# commands


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> GraphFile:
    return parse_graph_file(_read(path))


def cmd_check(args, out, err) -> int:
    rg = _load(args.graph).rooted
    ans = has_rooted_cycle_basis(rg)
    if ans:
        note = " (root component is acyclic)" if ans.vacuous else ""
        print(f"exists=true{note}", file=out)
        return EXIT_OK
    witness = "" if ans.witness is None else f" witness={ans.witness}"
    print(f"exists=false reason={ans.reason}{witness}", file=out)
    print(f"no rooted cycle basis: {ans.detail}", file=err)
    return EXIT_NO


def cmd_basis(args, out, err) -> int:
    rg = _load(args.graph).rooted
    write_basis(out, rg, build_rooted_cycle_basis(rg))
    return EXIT_OK


def cmd_minbasis(args, out, err) -> int:
    rg = _load(args.graph).rooted
    tb = make_tiebreak(args.tiebreak, rg.graph.m, seed=args.seed)
    naive = args.tiebreak == "naive"
    run = greedy_rooted_basis(rg, tb, debug=args.assert_ears, strict=not naive)
    write_basis(out, rg, run.basis)
    if args.assert_ears:
        for ear in run.ears:
            print(f"ear vertices={','.join(map(str, ear.vertices))} edges={','.join(map(str, ear.edges))}",
                  file=out)
    if not run.complete:
        print("greedy sequence lost the ear property; the cycles do not form a basis", file=err)
        return EXIT_NO
    return EXIT_OK


def cmd_fundamental(args, out, err) -> int:
    rg = _load(args.graph).rooted
    if args.method == "partition":
        tree = find_fundamental_rooted_tree(rg, args.limit)
    else:
        tree = brute_fundamental_search(rg, args.limit)
    if tree is None:
        print("fundamental=false", file=out)
        print("no spanning tree has only rooted fundamental cycles", file=err)
        return EXIT_NO
    print("fundamental=true", file=out)
    print(f"tree edges={','.join(map(str, sorted(tree)))}", file=out)
    write_basis(out, rg, fundamental_basis(rg.graph, tree))
    return EXIT_OK


def cmd_dual(args, out, err) -> int:
    gf = _load(args.graph)
    if gf.embedding is None:
        raise InputError("dual needs a rot: section")
    dual = dual_graph(gf.embedding)
    try:
        rd = RootedGraph(dual.graph, gf.rooted.root_edge)
    except GraphError as exc:
        print(f"dual root is a self-loop: {exc}", file=err)
        return EXIT_NO
    out.write(format_graph_file(rd, dual.embedding))
    return EXIT_OK


def cmd_hamiltonian(args, out, err) -> int:
    rg = _load(args.graph).rooted
    if has_rooted_hamiltonian(rg, args.limit):
        print("hamiltonian=true", file=out)
        return EXIT_OK
    print("hamiltonian=false", file=out)
    return EXIT_NO


def cmd_gen(args, out, err) -> int:
    fam, p = args.family, args.params
    need = {"ladder": 1, "cliques": 2, "k33": 0, "random": 2, "wheel": 1, "prism": 1, "grid": 2}
    if len(p) != need[fam]:
        raise InputError(f"gen {fam} takes {need[fam]} integer parameter(s), got {len(p)}")
    emb = None
    try:
        if fam == "ladder":
            rg = gen_ladder(p[0])
        elif fam == "cliques":
            rg = gen_cliques_with_paths(p[0], p[1])
        elif fam == "k33":
            rg = gen_k33_subdivision()
        elif fam == "random":
            rg = gen_random_biconnected(p[0], p[1], args.seed, args.max_weight)
        else:
            emb = {"wheel": plane_wheel, "prism": plane_prism, "grid": plane_grid}[fam](*p)
            rg = RootedGraph(emb.graph, 0)
    except (ValueError, IndexError) as exc:
        raise InputError(str(exc)) from None
    out.write(format_graph_file(rg, emb))
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    rg = _load(args.graph).rooted
    basis = parse_basis_file(_read(args.basis), rg)
    report = validate_rooted_basis(rg, basis)
    print(f"valid={'true' if report.ok else 'false'} {summary_line(rg, basis.cycles)}", file=out)
    for msg in report.failures:
        print(msg, file=err)
    return EXIT_OK if report.ok else EXIT_NO


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootedbasis", description="Rooted cycle bases of undirected graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph file, or - for stdin")
        p.set_defaults(func=func)
        return p

    graph_cmd("check", cmd_check, "does a rooted cycle basis exist")
    graph_cmd("basis", cmd_basis, "rooted cycle basis from an ear decomposition")
    p = graph_cmd("minbasis", cmd_minbasis, "minimum-weight rooted cycle basis")
    p.add_argument("--tiebreak", choices=("det", "rand", "naive"), default="det")
    p.add_argument("--seed", type=int, default=None, help=f"seed for rand mode (default: ${SEED_ENV} or 0)")
    p.add_argument("--assert-ears", action="store_true",
                   help="check greedy invariants at every step and print the ears")
    p = graph_cmd("fundamental", cmd_fundamental, "search for a fundamental rooted basis")
    p.add_argument("--method", choices=("partition", "brute"), default="partition")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="search node / tree budget")
    graph_cmd("dual", cmd_dual, "plane dual of a graph with a rot: section")
    p = graph_cmd("hamiltonian", cmd_hamiltonian, "Hamiltonian cycle through the root edge")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    p = sub.add_parser("gen", help="print a generated graph file")
    p.add_argument("family", choices=("ladder", "cliques", "k33", "random", "wheel", "prism", "grid"))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="validate a basis file against a graph file")
    p.add_argument("graph")
    p.add_argument("basis")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args, out, err)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (SearchLimitExceeded, CapExceeded) as exc:
        print(f"search limit: {exc}", file=err)
        return EXIT_LIMIT
    except NoRootedBasis as exc:
        print(f"no rooted cycle basis: {exc}", file=err)
        return EXIT_NO
    except InternalEarViolation as exc:
        print(f"greedy invariant failed: {exc}", file=err)
        return EXIT_NO
    except RootedBasisError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_NO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
