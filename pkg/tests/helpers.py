"""Shared strategies and brute-force oracles for the test suite."""
import itertools

import networkx as nx
from hypothesis import strategies as st

from epgclique.generate import GenParams, SplitMix64
from epgclique.grid import EpgPath, EpgRepresentation, grid_edges_of


@st.composite
def representations(draw, max_paths=12, size=6):
    """Small dense instances: many overlaps, bends and claws on a tiny grid."""
    n = draw(st.integers(0, max_paths))
    paths = []
    for pid in range(n):
        kind = draw(st.sampled_from(["H", "V", "bend"]))
        if kind in ("H", "V"):
            line = draw(st.integers(0, size))
            lo = draw(st.integers(0, size - 1))
            hi = draw(st.integers(lo + 1, size))
            make = EpgPath.horizontal if kind == "H" else EpgPath.vertical
            paths.append(make(pid, line, lo, hi))
        else:
            c = draw(st.integers(0, size))
            r = draw(st.integers(0, size))
            h_end = draw(st.integers(0, size).filter(lambda v: v != c))
            v_end = draw(st.integers(0, size).filter(lambda v: v != r))
            paths.append(EpgPath.bent(pid, (c, r), h_end, v_end))
    return EpgRepresentation(tuple(paths))


def suite_params(seed, preset, max_n=200, min_side=5, max_side=50):
    rng = SplitMix64(seed ^ 0x5EED5EED)
    n = rng.below(max_n + 1)
    w = min_side + rng.below(max_side - min_side + 1)
    h = min_side + rng.below(max_side - min_side + 1)
    return GenParams(n=n, width=w, height=h, seed=seed, preset=preset)


def brute_adjacency(rep):
    """Pairwise edge-set intersection; independent of the bucketing in derive_graph."""
    edges = {p.id: grid_edges_of(p) for p in rep.paths}
    adj = {p.id: set() for p in rep.paths}
    for u, v in itertools.combinations(edges, 2):
        if edges[u] & edges[v]:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def nx_graph(adj):
    g = nx.Graph()
    g.add_nodes_from(adj)
    g.add_edges_from((u, v) for u in adj for v in adj[u])
    return g


def maximal_cliques(adj):
    return {frozenset(c) for c in nx.find_cliques(nx_graph(adj)) if len(c) >= 2}


def two_clique_colorable(adj):
    """Exhaustive search over all 2-colourings."""
    cliques = maximal_cliques(adj)
    ids = sorted(adj)
    for bits in itertools.product((0, 1), repeat=len(ids)):
        col = dict(zip(ids, bits))
        if all(len({col[v] for v in c}) > 1 for c in cliques):
            return True
    return False

