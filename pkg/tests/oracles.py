"""networkx-backed reference computations."""

import networkx as nx

from ecci_digraph.digraph import Digraph


def to_networkx(d: Digraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from(d.arcs())
    return g


def oracle_mecc(d: Digraph):
    lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(d)))
    return [
        max(max(lengths[u][v], lengths[v][u]) for v in range(d.n)) for u in range(d.n)
    ]


def oracle_xi_doubled(d: Digraph) -> int:
    return sum(s * m for s, m in zip(d.degree_sums(), oracle_mecc(d)))
