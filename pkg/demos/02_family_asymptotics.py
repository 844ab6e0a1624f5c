"""Growth laws of the exponent across graph families.

The path grows linearly in N, the lollipop logarithmically, the wheel
settles to 2 from above, and the fork never moves. Reproduces the data
behind the family figures as small tables.

Run: python demos/02_family_asymptotics.py
"""
import math

from sdegraph import (family_q, fork_q_constant, lollipop_limit_lambda1,
                      lollipop_q_asymptotic, path_q_asymptotic, path_q_exact,
                      wheel_limit_check)

print("path: q ~ (4/pi^2) N + 12/pi^2 + O(1/N)")
print(f"{'N':>6} {'solver':>12} {'exact eq':>12} {'asymptotic':>12} {'rel err':>9}")
for n in (10, 25, 50, 100, 200):
    q = family_q(f"path:{n}").q
    qe = path_q_exact(n)
    qa = path_q_asymptotic(n)
    print(f"{n:>6} {q:>12.5f} {qe:>12.5f} {qa:>12.5f} {abs(q - qa) / q:>9.2e}")

print("\nfork: constant root of 3*2^q = 2 + 3^q")
q_eq = fork_q_constant()
for n in (5, 50, 500):
    print(f"  N={n:<4d} q = {family_q(f'fork:{n}').q:.8f}   (equation root "
          f"{q_eq:.8f})")

print("\nwheel: q -> 2 from above")
for n in (10, 100, 1000):
    print(f"  N={n:<5d} q - 2 = {wheel_limit_check(n):.6f}")

lam = lollipop_limit_lambda1()
a = 1 / (math.log(3) - math.log(lam))
print(f"\nlollipop: lambda1 -> {lam:.7f}, so q ~ {a:.2f} log N "
      f"{math.log(5) / math.log(lam / 3):+.2f}")
print(f"{'N':>7} {'solver':>10} {'log law':>10}")
for n in (1000, 10000, 100000):
    q = family_q(f"lollipop:{n}").q
    print(f"{n:>7} {q:>10.3f} {lollipop_q_asymptotic(n):>10.3f}")
