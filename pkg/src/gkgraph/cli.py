"""The gk command line tool.

Exit codes: 0 success, 1 mismatch or disagreement, 2 bad input, 3 factorization budget.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from .cocliques import (
    CompactGraph,
    CocliqueReport,
    alt_computed,
    alt_report,
    build_graph,
    theta_structure,
)
from .groupspec import GroupSpec, SpecError, Vertex, parse_spec, partition
from .numth import FactorBudgetExceeded, factor_budget, factorize

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

GRAMMAR_HELP = """Group strings: FAMILY[:n][:q].

\b
  Alt:n            alternating group, n >= 5
  Spor:NAME        sporadic group (M11 ... F3, aliases HS, Ly, ON, M, B, Th)
  Tits             the Tits group 2F4(2)'
  A:n:q, 2A:n:q    A_n(q) and 2A_n(q); n is the Lie rank (A:5:4 is L_6(4))
  B:n:q C:n:q D:n:q 2D:n:q
  G2:q F4:q E6:q 2E6:q E7:q E8:q 3D4:q 2B2:q 2G2:q 2F4:q
q is an integer prime power or p^a.
"""


# ---- serialisation

def _label(v: Vertex) -> str:
    return v.label


def graph_document(graph: CompactGraph, report: CocliqueReport | None = None) -> dict:
    spec = graph.spec
    classes = []
    part = partition(spec) if spec.is_lie else None
    for v, h in zip(graph.vertices, graph.host or (0,) * len(graph.vertices)):
        entry = {"label": v.label, "kind": v.kind, "index": v.index, "prime": v.prime, "host": h}
        if part is not None and v.kind in ("R", "S"):
            entry["residual"] = str(part.residual(v.index))
        classes.append(entry)
    order = {v: i for i, v in enumerate(graph.vertices)}
    pairs = sorted(tuple(sorted(e, key=order.get)) for e in graph.edges)
    edges = [[_label(u), _label(w)] for u, w in sorted(pairs, key=lambda x: (order[x[0]], order[x[1]]))]
    doc = {
        "group": str(spec),
        "t": None,
        "theta": [],
        "theta_prime": [],
        "vertices": [v.label for v in graph.vertices],
        "edges": edges,
        "classes": classes,
        "unresolved": [[u.label, w.label] for u, w in graph.unresolved],
    }
    if report is not None:
        doc["t"] = report.t
        doc["theta"] = [g.label for g in report.theta]
        doc["theta_prime"] = [[g.label for g in x] for x in report.theta_prime]
    return doc


def read_graph_json(text: str) -> CompactGraph:
    """Rebuild a CompactGraph from the json written by `gk graph`."""
    doc = json.loads(text)
    spec = parse_spec(doc["group"])
    verts = tuple(Vertex(c["kind"], c["index"], c["prime"]) for c in doc["classes"])
    by_label = {v.label: v for v in verts}
    edges = frozenset(frozenset((by_label[a], by_label[b])) for a, b in doc["edges"])
    unresolved = tuple((by_label[a], by_label[b]) for a, b in doc["unresolved"])
    host = tuple(c["host"] for c in doc["classes"])
    return CompactGraph(spec, verts, edges, unresolved, (), host)


def explicit_graph(graph: CompactGraph) -> tuple:
    """(primes, edges) of the prime-level graph, factoring every class."""
    spec = graph.spec
    members = {}
    if spec.is_lie:
        part = partition(spec)
        for v in graph.vertices:
            if v.kind == "p":
                members[v] = [spec.p]
            elif v.kind == "prime":
                members[v] = [v.prime]
            else:
                members[v] = sorted(factorize(part.residual(v.index), factor_budget()))
    else:
        members = {v: [v.prime] for v in graph.vertices}
    primes = sorted(r for rs in members.values() for r in rs)
    edges = set()
    for v, rs in members.items():
        for i, r in enumerate(rs):
            for s in rs[i + 1:]:
                edges.add((min(r, s), max(r, s)))
    for e in graph.edges:
        u, w = tuple(e)
        for r in members[u]:
            for s in members[w]:
                edges.add((min(r, s), max(r, s)))
    return primes, sorted(edges)


def to_dot(name: str, vertices, edges) -> str:
    lines = [f'graph "{name}" {{']
    lines += [f'  "{v}";' for v in vertices]
    lines += [f'  "{a}" -- "{b}";' for a, b in edges]
    lines.append("}")
    return "\n".join(lines)


def _parse_or_exit(group: str) -> GroupSpec:
    try:
        return parse_spec(group)
    except SpecError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


# ---- commands

@click.group(help="Prime graphs of finite simple groups and their maximum cocliques.\n\n" + GRAMMAR_HELP)
def main() -> None:
    pass


@main.command("graph", help="Print the compact prime graph of GROUP.\n\n" + GRAMMAR_HELP)
@click.argument("group")
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="text")
@click.option("--explicit-primes", is_flag=True, help="Factor each class and print the graph on primes.")
def cmd_graph(group: str, fmt: str, explicit_primes: bool) -> None:
    spec = _parse_or_exit(group)
    graph = build_graph(spec)
    report = theta_structure(spec)
    if explicit_primes:
        try:
            primes, edges = explicit_graph(graph)
        except FactorBudgetExceeded as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_BUDGET)
        if fmt == "json":
            click.echo(json.dumps({"group": str(spec), "vertices": primes,
                                   "edges": [list(e) for e in edges]}, indent=2))
        elif fmt == "dot":
            click.echo(to_dot(str(spec), primes, edges))
        else:
            click.echo(f"{spec}: primes {' '.join(map(str, primes))}")
            for a, b in edges:
                click.echo(f"  {a} -- {b}")
        return
    doc = graph_document(graph, report)
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))
    elif fmt == "dot":
        click.echo(to_dot(str(spec), doc["vertices"], doc["edges"]))
    else:
        click.echo(f"{spec}: vertices {' '.join(doc['vertices'])}")
        for a, b in doc["edges"]:
            click.echo(f"  {a} -- {b}")
        for a, b in doc["unresolved"]:
            click.echo(f"  {a} ?? {b}  (unspecified)")


def _fmt(groups) -> str:
    return "{" + ", ".join(g.label for g in groups) + "}"


@main.command("coclique", help="Print t(G) and, with --all, every maximum coclique.\n\n" + GRAMMAR_HELP)
@click.argument("group")
@click.option("--all", "show_all", is_flag=True, help="List every maximum coclique and theta / theta'.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def cmd_coclique(group: str, show_all: bool, fmt: str) -> None:
    spec = _parse_or_exit(group)
    rep = theta_structure(spec)
    if fmt == "json":
        doc = graph_document(build_graph(spec), rep)
        doc["cocliques"] = [[g.label for g in c] for c in rep.group_cocliques]
        click.echo(json.dumps(doc, indent=2))
        return
    click.echo(f"{spec}: t = {rep.t}")
    if len(rep.group_cocliques) == 1:
        click.echo(f"unique maximum coclique {_fmt(rep.group_cocliques[0])}")
    if show_all:
        for c in rep.group_cocliques:
            click.echo(f"  {_fmt(c)}")
        click.echo(f"theta  = {_fmt(rep.theta)}")
        click.echo("theta' = " + (", ".join(_fmt(x) for x in rep.theta_prime) or "empty"))
        for note in rep.notes:
            click.echo(f"note: {note}")


def _verify_one(text: str) -> tuple:
    from .refdata import verify

    spec = parse_spec(text)
    res = verify(spec)
    return text, res.ok, res.line()


def _alt_one(n: int) -> tuple:
    closed, brute = alt_report(n), alt_computed(n)
    same = (closed.t == brute.t and {frozenset(c) for c in closed.cocliques}
            == {frozenset(c) for c in brute.cocliques})
    status = "PASS" if same else "FAIL"
    detail = "" if same else (f" :: closed form {[[v.prime for v in c] for c in closed.cocliques]}"
                              f", search {[[v.prime for v in c] for c in brute.cocliques]}")
    return f"Alt:{n}", same, f"{status} Alt:{n} t={brute.t}{detail}"


@main.command("verify", help="Check computed cocliques against a table (1-4) or the alternating closed form.")
@click.option("--table", type=click.Choice(["1", "2", "3", "4", "alt"]), required=True)
@click.option("--n-max", type=int, default=None, help="Largest rank (tables 2, 3) or degree (alt).")
@click.option("--q-max", type=int, default=None, help="Largest field size.")
@click.option("--jobs", type=int, default=1, help="Worker processes.")
@click.option("--quiet", is_flag=True, help="Print failures and the summary only.")
def cmd_verify(table: str, n_max, q_max, jobs: int, quiet: bool) -> None:
    from .refdata import sweep_specs

    if table == "alt":
        items, fn = list(range(5, (n_max or 1000) + 1)), _alt_one
    else:
        items, fn = [str(s) for s in sweep_specs(table, n_max, q_max)], _verify_one
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, items, chunksize=8))
    else:
        results = [fn(x) for x in items]
    failed = [r for r in results if not r[1]]
    for _, ok, line in results:
        if not ok or not quiet:
            click.echo(line)
    click.echo(f"table {table}: {len(results) - len(failed)}/{len(results)} pass")
    if failed:
        click.echo(f"first counterexample: {failed[0][2]}")
        sys.exit(EXIT_MISMATCH)


@main.command("oracle", help="Compare the criteria with maximal-torus orders on odd class representatives.")
@click.argument("group")
def cmd_oracle(group: str) -> None:
    from .groupspec import OutOfScopeError
    from .torus_oracle import compare, torus_orders

    spec = _parse_or_exit(group)
    try:
        orders = torus_orders(spec)
        bad = compare(spec)
    except OutOfScopeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    except FactorBudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    click.echo(f"{spec}: {len(orders)} torus orders")
    for d in bad:
        click.echo(f"  {d.u.label} ({d.r}) vs {d.v.label} ({d.s}): criterion {d.criterion}, oracle {d.oracle}")
    if bad:
        sys.exit(EXIT_MISMATCH)
    click.echo("agree")


if __name__ == "__main__":
    main()
