"""Graph family generators and their exponent asymptotics.

Deterministic families (path, wheel, star, complete, complete bipartite,
modular biregular, path-with-double-fork, modified lollipop) plus seeded
Erdos-Renyi and Barabasi-Albert models. Each deterministic generator
asserts its expected degree profile after construction. Families whose
spectral radius has a proven closed form expose it through
:func:`analytic_lambda1`; the lollipop has none and is always computed.

Family specs are expressible as CLI strings, e.g. ``path:100``,
``lollipop:1000``, ``er:100:0.1:42``, ``ba:100:3:42``, ``kbip:2:3``,
``bireg:4:6:3``.
"""
from __future__ import annotations

import functools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import BadSpec, InvalidGraph
from .graph import Graph, degree_sequence_from_degrees
from .solver import SdeResult, solve_bisection
from .spectral import spectral_radius

DENSE_GENERATE_CAP = 20_000

FAMILY_KINDS = ("path", "wheel", "star", "complete", "kbip", "bireg",
                "fork", "lollipop", "er", "ba")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    args: tuple

    def __str__(self) -> str:
        return ":".join([self.kind] + [_fmt_arg(a) for a in self.args])


def _fmt_arg(a) -> str:
    if isinstance(a, float):
        return format(a, "g")
    return str(a)


def parse_family(text: str) -> FamilySpec:
    """Parse a ``kind:arg:arg...`` family string."""
    parts = text.strip().split(":")
    kind = parts[0].lower()
    raw = parts[1:]
    try:
        if kind in ("path", "wheel", "star", "complete", "fork", "lollipop"):
            (n,) = raw
            return FamilySpec(kind, (int(n),))
        if kind == "kbip":
            m, n = raw
            return FamilySpec(kind, (int(m), int(n)))
        if kind == "bireg":
            m, n, r1 = raw
            return FamilySpec(kind, (int(m), int(n), int(r1)))
        if kind == "er":
            if len(raw) == 2:
                n, p = raw
                return FamilySpec(kind, (int(n), float(p), None))
            n, p, seed = raw
            return FamilySpec(kind, (int(n), float(p), int(seed)))
        if kind == "ba":
            if len(raw) == 2:
                n, m = raw
                return FamilySpec(kind, (int(n), int(m), None))
            n, m, seed = raw
            return FamilySpec(kind, (int(n), int(m), int(seed)))
    except ValueError as exc:
        raise BadSpec(f"bad family arguments in {text!r}: {exc}") from exc
    raise BadSpec(f"unknown family {kind!r} (known: {', '.join(FAMILY_KINDS)})")


# deterministic edge builders


def _edges_path(n: int) -> tuple[int, list]:
    if n < 2:
        raise BadSpec("path needs N >= 2")
    return n, [(i, i + 1) for i in range(n - 1)]


def _edges_wheel(n: int) -> tuple[int, list]:
    # hub is node 0; rim cycle on 1..n-1
    if n < 4:
        raise BadSpec("wheel needs N >= 4")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    edges.append((1, n - 1))
    return n, edges


def _edges_star(n: int) -> tuple[int, list]:
    if n < 2:
        raise BadSpec("star needs N >= 2")
    return n, [(0, i) for i in range(1, n)]


def _edges_complete(n: int) -> tuple[int, list]:
    if n < 2:
        raise BadSpec("complete graph needs N >= 2")
    return n, [(i, j) for i in range(n) for j in range(i + 1, n)]


def _edges_kbip(m: int, n: int) -> tuple[int, list]:
    if m < 1 or n < 1:
        raise BadSpec("complete bipartite needs m, n >= 1")
    return m + n, [(i, m + j) for i in range(m) for j in range(n)]


def _edges_bireg(m: int, n: int, r1: int) -> tuple[int, list]:
    """Modular biregular construction: part-A node i links to part-B nodes
    (i*r1 + j) mod n for j = 0..r1-1; requires m*r1 divisible by n."""
    if m < 1 or n < 1 or r1 < 1:
        raise BadSpec("biregular needs positive m, n, r1")
    if r1 > n:
        raise BadSpec(f"r1={r1} exceeds opposite part size n={n}")
    if (m * r1) % n != 0:
        raise BadSpec(f"m*r1={m * r1} not divisible by n={n}")
    # r1 <= n already forces the implied r2 = m*r1/n <= m
    edges = []
    seen = set()
    for i in range(m):
        for j in range(r1):
            b = (i * r1 + j) % n
            key = (i, b)
            if key in seen:
                raise BadSpec("modular construction produced a multi-link")
            seen.add(key)
            edges.append((i, m + b))
    return m + n, edges


def _edges_fork(n: int) -> tuple[int, list]:
    """Path on N nodes with two pendant nodes at each end (N+4 nodes)."""
    if n < 2:
        raise BadSpec("fork needs N >= 2")
    total = n + 4
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(0, n), (0, n + 1), (n - 1, n + 2), (n - 1, n + 3)]
    return total, edges


def _edges_lollipop(n: int) -> tuple[int, list]:
    """Complete graph K4 minus one link, the two loose ends joined to a new
    node, and a path of N nodes hanging off that node (N+5 nodes)."""
    if n < 1:
        raise BadSpec("lollipop needs N >= 1")
    total = n + 5
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]  # K4 minus (2,3)
    edges += [(2, 4), (3, 4)]
    prev = 4
    for k in range(5, total):
        edges.append((prev, k))
        prev = k
    return total, edges


_EDGE_BUILDERS = {
    "path": _edges_path,
    "wheel": _edges_wheel,
    "star": _edges_star,
    "complete": _edges_complete,
    "kbip": _edges_kbip,
    "bireg": _edges_bireg,
    "fork": _edges_fork,
    "lollipop": _edges_lollipop,
}


def _expected_profile(spec: FamilySpec) -> Counter | None:
    """Exact degree multiset a deterministic family must produce."""
    kind, args = spec.kind, spec.args
    if kind == "path":
        (n,) = args
        return Counter({2: n - 2, 1: 2})
    if kind == "wheel":
        (n,) = args
        prof = Counter({3: n - 1})
        prof[n - 1] += 1
        return prof
    if kind == "star":
        (n,) = args
        return Counter({n - 1: 1, 1: n - 1})
    if kind == "complete":
        (n,) = args
        return Counter({n - 1: n})
    if kind == "kbip":
        m, n = args
        prof = Counter()
        prof[n] += m
        prof[m] += n
        return prof
    if kind == "bireg":
        m, n, r1 = args
        r2 = (m * r1) // n
        prof = Counter()
        prof[r1] += m
        prof[r2] += n
        return prof
    if kind == "fork":
        (n,) = args
        return Counter({1: 4, 3: 2, 2: n - 2})
    if kind == "lollipop":
        (n,) = args
        return Counter({3: 5, 2: n - 1, 1: 1})
    return None


# random models


def er_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """One Erdos-Renyi G(n, p) sample."""
    if n < 1 or not (0 <= p <= 1):
        raise BadSpec("er needs N >= 1 and p in [0, 1]")
    u = rng.random((n, n))
    w = np.triu(u < p, 1).astype(float)
    return Graph(w + w.T)


def ba_graph(n: int, m: int, rng: np.random.Generator) -> Graph:
    """One Barabasi-Albert sample: complete seed graph on m nodes, then each
    arriving node attaches m distinct links by preferential attachment over
    the repeated-ends link list."""
    if not (1 <= m < n):
        raise BadSpec("ba needs 1 <= m < N")
    w = np.zeros((n, n))
    repeated: list[int] = []
    for i in range(m):
        for j in range(i + 1, m):
            w[i, j] = w[j, i] = 1.0
            repeated += [i, j]
    if m == 1:
        repeated = [0]  # degenerate seed: a single node, no links yet
    for v in range(m, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(len(repeated)))])
        for t in targets:
            w[v, t] = w[t, v] = 1.0
            repeated += [v, t]
    return Graph(w)


def _build_edges(spec: FamilySpec) -> tuple[int, list]:
    builder = _EDGE_BUILDERS.get(spec.kind)
    if builder is None:
        raise BadSpec(f"family {spec.kind!r} has no deterministic edge form")
    return builder(*spec.args)


def _assert_profile(spec: FamilySpec, degrees: np.ndarray) -> None:
    expected = _expected_profile(spec)
    if expected is None:
        return
    got = Counter(int(round(d)) for d in degrees)
    got = Counter({k: v for k, v in got.items() if v})
    expected = Counter({k: v for k, v in expected.items() if v})
    if got != expected:
        raise InvalidGraph(
            f"{spec} generated degree profile {dict(got)} != expected {dict(expected)}")


def generate(spec: FamilySpec | str) -> Graph:
    """Materialize a family spec as a dense :class:`Graph`."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.kind == "er":
        n, p, seed = spec.args
        return er_graph(n, p, np.random.default_rng(seed))
    if spec.kind == "ba":
        n, m, seed = spec.args
        return ba_graph(n, m, np.random.default_rng(seed))
    n, edges = _build_edges(spec)
    if n > DENSE_GENERATE_CAP:
        raise BadSpec(
            f"n={n} too large for dense generation; use generate_sparse")
    g = Graph.from_edges(n, edges)
    _assert_profile(spec, g.degrees())
    return g


def generate_sparse(spec: FamilySpec | str) -> sp.csr_array:
    """CSR adjacency for large structured families (path/wheel/fork/lollipop
    at up to ~2e5 nodes)."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    n, edges = _build_edges(spec)
    arr = np.asarray(edges)
    rows = np.concatenate([arr[:, 0], arr[:, 1]])
    cols = np.concatenate([arr[:, 1], arr[:, 0]])
    a = sp.csr_array((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    _assert_profile(spec, np.asarray(a.sum(axis=1)).ravel())
    return a


def analytic_lambda1(spec: FamilySpec | str) -> float | None:
    """Proven closed-form spectral radius, when the family has one."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    kind, args = spec.kind, spec.args
    if kind == "path":
        return 2.0 * math.cos(math.pi / (args[0] + 1))
    if kind == "wheel":
        return 1.0 + math.sqrt(args[0])
    if kind == "star":
        return math.sqrt(args[0] - 1)
    if kind == "complete":
        return float(args[0] - 1)
    if kind == "kbip":
        m, n = args
        return math.sqrt(m * n)
    if kind == "bireg":
        m, n, r1 = args
        return math.sqrt(r1 * ((m * r1) // n))
    if kind == "fork":
        return 2.0
    return None


def family_q(spec: FamilySpec | str, tol_q: float = 1e-9,
             use_analytic_lambda1: bool = True) -> SdeResult:
    """Solve the SDE for a deterministic family without densifying it.

    Uses the closed-form lambda1 when available (and requested); otherwise
    the matrix-free power iteration on the sparse adjacency.
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.kind in ("er", "ba"):
        raise BadSpec("family_q handles deterministic families; use sde() on a sample")
    a = generate_sparse(spec)
    degs = np.asarray(a.sum(axis=1)).ravel()
    ds = degree_sequence_from_degrees(degs)
    lam = analytic_lambda1(spec) if use_analytic_lambda1 else None
    if lam is None:
        lam = spectral_radius(a, tol=1e-12)
    if ds.c >= ds.n:
        return SdeResult(math.nan, "classified", note="regular")
    return solve_bisection(ds, lam, tol_q=tol_q)


# closed-form / asymptotic oracles


def path_q_asymptotic(n: int) -> float:
    """Three-term expansion of the path exponent: (4/pi^2) N + 12/pi^2 +
    (1/3 + 52/(3 pi^2))/N."""
    if n < 2:
        raise BadSpec("path needs N >= 2")
    pi2 = math.pi ** 2
    return 4.0 / pi2 * n + 12.0 / pi2 + (1.0 / 3.0 + 52.0 / (3.0 * pi2)) / n


def path_q_exact(n: int, tol: float = 1e-12) -> float:
    """Root in q of cos^q(pi/(N+1)) = 1 - 2/N + 2^(1-q)/N by log-domain
    bisection; the independent oracle for the path family."""
    if n < 3:
        raise BadSpec("exact path equation needs N >= 3")
    log_cos = math.log(math.cos(math.pi / (n + 1)))

    def g(q: float) -> float:
        rhs = 1.0 - 2.0 / n + math.exp((1.0 - q) * math.log(2.0)) / n
        return q * log_cos - math.log(rhs)

    lo, hi = 2.0, 10.0 * n
    while g(hi) > 0.0:  # defensive; 10N comfortably exceeds the root
        hi *= 2.0
    if g(lo) <= 0.0:
        return 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def fork_q_constant(tol: float = 1e-12) -> float:
    """The N-independent fork exponent: root of 3*2^q = 2 + 3^q above 2."""
    if tol <= 0:
        raise BadSpec("tol must be positive")

    def h(q: float) -> float:
        return 3.0 * 2.0 ** q - 2.0 - 3.0 ** q

    lo, hi = 2.0, 3.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if h(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@functools.lru_cache(maxsize=1)
def lollipop_limit_lambda1() -> float:
    """Limiting spectral radius of the lollipop family, computed once at
    N = 1e4 (convergence in N is extremely fast); approx 2.9021160."""
    return spectral_radius(generate_sparse(FamilySpec("lollipop", (10_000,))),
                           tol=1e-12)


def lollipop_q_asymptotic(n: int, lambda1: float | None = None) -> float:
    """Logarithmic growth law a*log(N) + b with a = 1/(log 3 - log lambda1)
    and b = log(5)/log(lambda1/3); lambda1 defaults to the computed limit.

    Note the a-coefficient diverges as lambda1 -> 3.
    """
    if n < 2:
        raise BadSpec("lollipop asymptotic needs N >= 2")
    lam = lollipop_limit_lambda1() if lambda1 is None else lambda1
    if not (2.0 < lam < 3.0):
        raise BadSpec("lambda1 must lie in (2, 3)")
    a = 1.0 / (math.log(3.0) - math.log(lam))
    b = math.log(5.0) / math.log(lam / 3.0)
    return a * math.log(n) + b


def wheel_limit_check(n: int, tol_q: float = 1e-9) -> float:
    """q(W_N) - 2 with lambda1 computed matrix-free and cross-checked
    against the closed form 1 + sqrt(N); positive and decreasing in N."""
    if n < 5:
        raise BadSpec("wheel limit check needs N >= 5")
    spec = FamilySpec("wheel", (n,))
    a = generate_sparse(spec)
    lam = spectral_radius(a, tol=1e-12)
    lam_exact = 1.0 + math.sqrt(n)
    if abs(lam - lam_exact) > 1e-9 * lam_exact:
        raise InvalidGraph(
            f"power iteration lambda1={lam} disagrees with 1+sqrt(N)={lam_exact}")
    degs = np.asarray(a.sum(axis=1)).ravel()
    ds = degree_sequence_from_degrees(degs)
    return solve_bisection(ds, lam, tol_q=tol_q).q - 2.0
