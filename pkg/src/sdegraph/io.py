"""Graph serialization: graph6 codec, weighted edge lists, metric CSV files.

The graph6 codec is bit-exact against the published format (printable
bytes 63..126, big-endian 6-bit groups, upper triangle in column-major
order). Only plain graph6 is supported — no sparse6/digraph6.
"""
from __future__ import annotations

import csv

import numpy as np

from .errors import (DuplicateLink, MalformedGraph6, NegativeWeight, ParseError,
                     SelfLoop, WeightedUnsupported)
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_G6_MAX_N = 258047  # largest node count of the four-byte size form


def _decode_size(data: bytes) -> tuple[int, int]:
    """Node count and the number of size bytes consumed."""
    if not data:
        raise MalformedGraph6("empty graph6 string")
    b0 = data[0]
    if b0 == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            raise MalformedGraph6("node counts above 258047 are not supported")
        if len(data) < 4:
            raise MalformedGraph6("truncated size prefix")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        if n <= 62:
            raise MalformedGraph6("non-canonical size prefix")
        return n, 4
    return b0 - 63, 1


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into an unweighted :class:`Graph`.

    A leading ``>>graph6<<`` header is tolerated. Raises MalformedGraph6 on
    bytes outside 63..126, an invalid size prefix, or a bit stream whose
    length does not match the node count.
    """
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii", errors="replace")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedGraph6("graph6 bytes must be in 63..126")
    n, off = _decode_size(data)
    if n < 1:
        raise MalformedGraph6("graphs need at least one node")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise MalformedGraph6(
            f"expected {need} adjacency bytes for n={n}, got {len(body)}")
    bits = np.zeros(need * 6, dtype=bool)
    for k, b in enumerate(body):
        v = b - 63
        for t in range(6):
            bits[6 * k + t] = (v >> (5 - t)) & 1
    w = np.zeros((n, n))
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                w[i, j] = w[j, i] = 1.0
            k += 1
    return Graph(w)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 string for an unweighted graph; round-trips with
    :func:`parse_graph6`."""
    if not g.is_unweighted():
        raise WeightedUnsupported("graph6 encodes unweighted graphs only")
    n = g.n
    if n > _G6_MAX_N:
        raise MalformedGraph6(f"n={n} exceeds the supported graph6 range")
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    acc = 0
    nb = 0
    w = g.weights
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | int(w[i, j] > 0)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc, nb = 0, 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out).decode("ascii")


def read_graph6_file(path) -> list[Graph]:
    """All graphs from a graph6 file, one per line; strict parsing."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line))
            except MalformedGraph6 as exc:
                raise ParseError(str(exc), line=lineno) from exc
    return graphs


# weighted edge lists


def parse_weighted_edge_list(text: str, one_based: bool = False) -> Graph:
    """Parse "u v [w]" lines into a weighted graph.

    Node ids are 0-based (``one_based`` shifts them down by one). Blank
    lines and '#' comments are skipped; a leading ``n=<int>`` directive
    fixes the node count, otherwise n = max id + 1. Duplicate links,
    self-loops and non-positive weights are errors.
    """
    n_directive = None
    edges: dict[tuple[int, int], float] = {}
    max_id = -1
    seen_edge_line = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if seen_edge_line:
                raise ParseError("n= directive must precede edge lines", line=lineno)
            try:
                n_directive = int(line[2:])
            except ValueError:
                raise ParseError(f"bad node count directive {line!r}", line=lineno)
            if n_directive < 1:
                raise ParseError("node count must be >= 1", line=lineno)
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'u v [w]', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"node ids must be integers, got {line!r}", line=lineno)
        if one_based:
            u -= 1
            v -= 1
        if u < 0 or v < 0:
            raise ParseError(f"negative node id in {line!r}", line=lineno)
        w = 1.0
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ParseError(f"bad weight in {line!r}", line=lineno)
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at node {u}")
        if w <= 0 or not np.isfinite(w):
            raise NegativeWeight(f"line {lineno}: weight must be positive, got {w}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise DuplicateLink(f"line {lineno}: duplicate link {key}")
        edges[key] = w
        max_id = max(max_id, u, v)
        seen_edge_line = True
    if max_id < 0 and n_directive is None:
        raise ParseError("no edges and no n= directive")
    n = n_directive if n_directive is not None else max_id + 1
    if max_id >= n:
        raise ParseError(f"node id {max_id} exceeds declared n={n}")
    weights = np.zeros((n, n))
    for (u, v), w in edges.items():
        weights[u, v] = weights[v, u] = w
    return Graph(weights)


def load_edge_list(path, one_based: bool = False) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_weighted_edge_list(fh.read(), one_based=one_based)


# CSV reports


def format_value(v) -> str:
    """Render a number with 12 significant digits; 'inf'/'nan' spelled so."""
    x = float(v)
    if np.isnan(x):
        return "nan"
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".12g")


def write_records_csv(records, path, names=None) -> None:
    """Write metric records as UTF-8 CSV with LF line endings.

    ``names`` fixes the column order; by default the frozen metric-name
    list from :mod:`sdegraph.metrics` is used. All records must carry the
    same name set.
    """
    if names is None:
        from .metrics import METRIC_NAMES
        names = METRIC_NAMES
    for rec in records:
        if set(rec) != set(names):
            raise ParseError("records must share the same metric-name set")

    def _write(fh):
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(names)
        for rec in records:
            writer.writerow([format_value(rec[name]) for name in names])

    if hasattr(path, "write"):
        _write(path)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            _write(fh)


def read_records_csv(path) -> tuple[list[str], list[dict[str, float]]]:
    """Read a CSV written by :func:`write_records_csv` back into records."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty CSV file")
        records = []
        for row in reader:
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(f"row length {len(row)} != header length {len(header)}")
            records.append({k: float(v) for k, v in zip(header, row)})
    return header, records
