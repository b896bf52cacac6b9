"""Regenerate data/graph_atlas.g6, data/connected_le7.g6 and data/connected_le6.g6.

Uses the networkx graph atlas (all graphs on 0..7 vertices, one per
isomorphism class, in atlas order).
"""
import networkx as nx

atlas = nx.graph_atlas_g()

def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()

with open("data/graph_atlas.g6", "w") as out:
    for g in atlas:
        out.write(g6(g) + "\n")

with open("data/connected_le7.g6", "w") as out:
    for g in atlas:
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            out.write(g6(g) + "\n")

with open("data/connected_le6.g6", "w") as out:
    for g in atlas:
        if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g):
            out.write(g6(g) + "\n")
