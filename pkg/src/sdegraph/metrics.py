"""Graph metric suite for the correlation study, on unweighted simple graphs.

The metric set follows the published correlation table: size/degree
statistics, spectral quantities from the adjacency and Laplacian spectra,
distance metrics by breadth-first search, efficiency measures, bridges,
and the solved exponent. Two gap conventions are provided: the literal
``lambda1_minus_mean_degree`` and ``dmax_minus_lambda1`` (the quantity the
reference correlation values actually derive from — see README). The same
duality applies to ``clustering_coefficient`` (mean local) and
``transitivity`` (global).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import (ConstantSeries, DisconnectedInput, InputError,
                     NumericalError, UndefinedAssortativity, WeightedUnsupported)
from .graph import Graph
from .solver import SdeResult, sde
from .spectral import Spectrum, full_spectrum

METRIC_NAMES = (
    "num_links",
    "max_degree",
    "min_degree",
    "degree_variance",
    "lambda1",
    "lambda1_minus_lambda2",
    "lambda1_minus_mean_degree",
    "dmax_minus_lambda1",
    "algebraic_connectivity",
    "effective_graph_resistance",
    "avg_shortest_path_length",
    "diameter",
    "clustering_coefficient",
    "transitivity",
    "radius",
    "degree_assortativity",
    "num_bridges",
    "local_efficiency",
    "global_efficiency",
    "num_leaf_nodes",
    "graph_energy",
    "estrada_index",
    "num_spanning_trees",
    "max_laplacian_eigenvalue",
    "sde_q",
)


def pearson(x, y) -> float:
    """Sample Pearson correlation of two equal-length nonconstant series."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise InputError("pearson needs two equal-length series with >= 2 points")
    xc = x - x.mean()
    yc = y - y.mean()
    sx = math.sqrt(float(xc @ xc))
    sy = math.sqrt(float(yc @ yc))
    if sx == 0.0 or sy == 0.0:
        raise ConstantSeries("correlation undefined for a constant series")
    return float(xc @ yc) / (sx * sy)


def assortativity(g: Graph) -> float:
    """Degree assortativity: Pearson correlation of end-node degrees over
    the directed link list (each link counted in both orientations)."""
    degs = g.degrees()
    iu, ju = np.nonzero(np.triu(g.weights, 1))
    if iu.size == 0:
        raise UndefinedAssortativity("graph has no links")
    x = np.concatenate([degs[iu], degs[ju]])
    y = np.concatenate([degs[ju], degs[iu]])
    try:
        return pearson(x, y)
    except ConstantSeries as exc:
        raise UndefinedAssortativity(
            "all link end-degrees equal; assortativity undefined") from exc


def bfs_distances(adj: np.ndarray) -> np.ndarray:
    """All-pairs hop distances of a boolean adjacency matrix (inf when
    unreachable), by simultaneous frontier expansion."""
    n = adj.shape[0]
    adjf = adj.astype(float)
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    d = 0
    while frontier.any():
        d += 1
        nxt = ((frontier.astype(float) @ adjf) > 0) & ~reached
        dist[nxt] = d
        reached |= nxt
        frontier = nxt
    return dist


def count_bridges(g: Graph) -> int:
    """Number of bridges via the standard low-link DFS pass (iterative)."""
    n = g.n
    nbrs = [np.nonzero(g.weights[i] > 0)[0].tolist() for i in range(n)]
    disc = [-1] * n
    low = [0] * n
    timer = 0
    bridges = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(nbrs[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    parent = -2  # skip the tree edge once; parallel edges don't exist
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(nbrs[v])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        bridges += 1
    return bridges


def _global_efficiency(dist: np.ndarray) -> float:
    n = dist.shape[0]
    if n < 2:
        return 0.0
    off = ~np.eye(n, dtype=bool)
    with np.errstate(divide="ignore"):
        inv = 1.0 / dist[off]
    inv[~np.isfinite(inv)] = 0.0
    return float(inv.sum()) / (n * (n - 1))


def global_efficiency(g: Graph) -> float:
    """Mean inverse shortest-path length over ordered node pairs."""
    return _global_efficiency(bfs_distances(g.weights > 0))


def local_efficiency(g: Graph) -> float:
    """Mean over nodes of the global efficiency of the neighbour-induced
    subgraph; nodes with fewer than two neighbours contribute 0."""
    adj = g.weights > 0
    total = 0.0
    for i in range(g.n):
        nb = np.nonzero(adj[i])[0]
        if nb.size < 2:
            continue
        total += _global_efficiency(bfs_distances(adj[np.ix_(nb, nb)]))
    return total / g.n


def mean_local_clustering(g: Graph) -> float:
    """Average local clustering; degree-<2 nodes contribute 0."""
    adj = (g.weights > 0).astype(float)
    deg = adj.sum(axis=1)
    tri = np.einsum("ij,jk,ki->i", adj, adj, adj) / 2.0  # links among neighbours
    total = 0.0
    for i in range(g.n):
        k = deg[i]
        if k >= 2:
            total += tri[i] / (k * (k - 1) / 2.0)
    return total / g.n


def transitivity(g: Graph) -> float:
    """Global clustering: 3 * triangles / connected triples."""
    adj = (g.weights > 0).astype(float)
    deg = adj.sum(axis=1)
    triads = float((deg * (deg - 1)).sum())
    if triads == 0.0:
        return 0.0
    closed = float(np.trace(adj @ adj @ adj))  # 6 * triangles
    return closed / triads


def spanning_tree_count(spectrum: Spectrum, n: int) -> float:
    """Matrix-tree count from the Laplacian spectrum, via a log-domain
    product; rounded to the nearest integer with a 1e-6 relative guard."""
    mu = spectrum.laplacian[:-1]  # connected: exactly one zero eigenvalue
    if np.any(mu <= 0):
        return 0.0  # disconnected remnant; no spanning tree
    log_count = float(np.log(mu).sum()) - math.log(n)
    if log_count > 700.0:
        return math.exp(700.0)  # saturate rather than overflow
    count = math.exp(log_count)
    rounded = round(count)
    if abs(count - rounded) > 1e-6 * max(1.0, rounded):
        raise NumericalError(
            f"spanning tree count {count} too far from an integer")
    return float(rounded)


def metric_suite(g: Graph, spectrum: Spectrum | None = None,
                 sde_result: SdeResult | None = None,
                 tol_q: float = 1e-9) -> dict[str, float]:
    """Full metric record for one connected unweighted graph.

    ``spectrum`` and ``sde_result`` may be precomputed by batch callers.
    Assortativity of a regular graph is recorded as NaN (it is undefined,
    exactly like sde_q).
    """
    if not g.is_unweighted():
        raise WeightedUnsupported("the metric suite is defined on unweighted graphs")
    adj = g.weights > 0
    dist = bfs_distances(adj)
    if not np.isfinite(dist).all():
        raise DisconnectedInput("distance metrics require a connected graph")
    n = g.n
    degs = g.degrees()
    if spectrum is None:
        spectrum = full_spectrum(g)
    if sde_result is None:
        sde_result = sde(g, lambda1=spectrum.lambda1, tol_q=tol_q)
    ae = spectrum.adjacency
    mu = spectrum.laplacian
    try:
        rho_d = assortativity(g)
    except UndefinedAssortativity:
        rho_d = math.nan
    ecc = dist.max(axis=1)
    record = {
        "num_links": float(g.num_links()),
        "max_degree": float(degs.max()),
        "min_degree": float(degs.min()),
        "degree_variance": float(degs.var()),
        "lambda1": float(ae[0]),
        "lambda1_minus_lambda2": float(ae[0] - ae[1]) if n > 1 else 0.0,
        "lambda1_minus_mean_degree": float(ae[0] - degs.mean()),
        "dmax_minus_lambda1": float(degs.max() - ae[0]),
        "algebraic_connectivity": float(mu[n - 2]) if n > 1 else 0.0,
        "effective_graph_resistance": float(n * (1.0 / mu[:-1]).sum()) if n > 1 else 0.0,
        "avg_shortest_path_length": float(dist.sum() / (n * (n - 1))) if n > 1 else 0.0,
        "diameter": float(dist.max()),
        "clustering_coefficient": mean_local_clustering(g),
        "transitivity": transitivity(g),
        "radius": float(ecc.min()),
        "degree_assortativity": rho_d,
        "num_bridges": float(count_bridges(g)),
        "local_efficiency": local_efficiency(g),
        "global_efficiency": _global_efficiency(dist),
        "num_leaf_nodes": float(np.sum(degs == 1)),
        "graph_energy": float(np.abs(ae).sum()),
        "estrada_index": float(np.exp(ae).sum()),
        "num_spanning_trees": spanning_tree_count(spectrum, n),
        "max_laplacian_eigenvalue": float(mu[0]),
        "sde_q": sde_result.q,
    }
    return record
