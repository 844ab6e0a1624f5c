"""Tour of the exponent on single graphs: definition, bounds, extremal cases.

Run: python demos/01_single_graphs.py
"""
from sdegraph import (Graph, bounds, classify, degree_sequence, f1, generate,
                      probabilistic_residual, sde, solve_bisection,
                      solve_recursion, spectral_radius)

# The exponent q solves lambda1 = ((1/N) sum d_i^q)^(1/q). Take the path
# with a double fork at each end: its spectral radius is exactly 2 no
# matter how long the middle path is, so q is a constant of the family.
g = generate("fork:25")
result = sde(g)
print(f"fork:25  ->  q = {result.q:.9f}  ({result.method}, "
      f"{result.iterations} iterations, residual {result.residual:.2e})")

# Both solvers agree: log-domain bisection and the accelerated fixed-point
# recursion started from the closed-form upper bound q0.
ds = degree_sequence(g)
lam = spectral_radius(g)
qb = solve_bisection(ds, lam)
qr = solve_recursion(ds, lam)
print(f"bisection {qb.q:.12f} vs recursion {qr.q:.12f} "
      f"(diff {abs(qb.q - qr.q):.1e})")

# The bracket from the degree sequence alone:
b = bounds(ds, lam)
print(f"bounds: {b.lower:.4f} <= q <= {b.sharpened_upper:.4f} <= {b.upper:.4f}")

# f1 is the log-domain root function; it vanishes at the solution.
print(f"f1 at the root: {f1(qb.q, ds, lam):.2e}")
print(f"probabilistic-form residual: {probabilistic_residual(g, qb.q):.2e}")

# Extremal cases.
print()
for spec in ("complete:6", "kbip:3:4", "star:9"):
    g = generate(spec)
    print(f"{spec:12s} classify={type(classify(g)).__name__:20s} "
          f"sde={sde(g).q}")

# q = infinity exactly when the graph is disconnected with a clique
# component realizing the maximum degree.
k4_p3 = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                             (4, 5), (5, 6)])
print(f"K4 + P3      classify={type(classify(k4_p3)).__name__:20s} "
      f"sde={sde(k4_p3).q}")

# Weighted graphs work throughout; q is scale-invariant.
tri = Graph.from_edges(3, [(0, 1, 2.0), (0, 2, 1.0), (1, 2, 1.0)])
print(f"\nweighted triangle: q = {sde(tri).q:.6f}, "
      f"scaled x3.7: q = {sde(tri.scaled(3.7)).q:.6f}")
