"""The complexity gap between direct summation and closed forms.

Direct summation of sum_k C(n,k) F_{k+s}^3 performs O(n) big-integer
operations; the closed form needs O(log n).  Equality is verified before
any timing, and memo caches are cleared before each rep so both routes
are measured cold.
"""

from fibsums import IdentityId, IdentityParams
from fibsums.cli import bench_identity

print("=== Cubic sum, growing n ===")
print(f"{'n':>6}  {'oracle (s)':>12}  {'closed (s)':>12}  {'speedup':>8}")
for n in (250, 1000, 4000):
    result = bench_identity(IdentityId.C18, IdentityParams(n=n, s=1), reps=3)
    print(
        f"{n:>6}  {result['oracle_median_s']:>12.6f}  {result['closed_median_s']:>12.6f}"
        f"  {result['speedup']:>7.0f}x"
    )

print()
print("=== An even-power family point ===")
result = bench_identity(IdentityId.EVEN_F, IdentityParams(n=2000, j=3, r=3, s=1, m=2), reps=3)
print(f"EVEN_F n=2000 j=3 r=3 s=1 m=2: speedup {result['speedup']:.0f}x "
      f"(value has {len(result['value'])} digits)")
