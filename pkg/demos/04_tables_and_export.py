"""
Checking a whole table and exporting graphs
============================================

`verify` compares a computed report with the matching row of the published
tables.  Graphs export to JSON and DOT; the JSON reads back into the same
in-memory graph.
"""

import json

from gkgraph.cli import graph_document, read_graph_json, to_dot
from gkgraph.cocliques import build_graph, theta_structure
from gkgraph.groupspec import parse_spec
from gkgraph.refdata import sweep_specs, verify

results = [verify(spec) for spec in sweep_specs("4", q_max=16)]
print(sum(r.ok for r in results), "of", len(results), "exceptional groups match")
print(verify(parse_spec("Spor:M23")).line())

spec = parse_spec("G2:4")
graph = build_graph(spec)
doc = graph_document(graph, theta_structure(spec))
text = json.dumps(doc, indent=2)
assert read_graph_json(text).edges == graph.edges
print(to_dot(str(spec), doc["vertices"], doc["edges"]))
