"""The pitchfork: where the optimal source stops being maximally entangled.

The best source weight sits at 1/2 until the register size crosses
eta_c(k) = 2k + 1/2 + sqrt(2k + 1/4); beyond that it splits into the
mirror pair (p00, 1 - p00) that drifts toward k/n and 1 - k/n. This
script prints the thresholds, the branch data behind a bifurcation
diagram for k = 1 and k = 3, and the approach of n * p00_opt to k.
"""

from dickelift import DickeSpec, bifurcation_diagram, critical_threshold, optimize_source

print("thresholds")
for k in (1, 2, 3, 4):
    thr = critical_threshold(k)
    kind = "integer" if thr.eta_is_integer else "non-integer"
    print(f"   k={k}: eta_c = {thr.eta_c:.4f} ({kind}), n_c = {thr.n_c}")
print("   integer eta_c shows a flat top exactly at n = n_c and splits at n_c + 1;")
print("   otherwise the exact critical point falls between integers.")

for k, n_hi in ((1, 14), (3, 20)):
    print(f"\nbifurcation data, k = {k}")
    print("      n   regime          lower branch   upper branch   best probability")
    for point in bifurcation_diagram(k, 2 * k, n_hi):
        lower = f"{point.branches[0][0]:.6f}"
        upper = f"{point.branches[-1][0]:.6f}" if len(point.branches) == 2 else "-"
        print(
            f"   {point.n:4d}   {point.regime.value:13s}   {lower:12s}"
            f"   {upper:12s}   {point.p_opt:.6f}"
        )

print("\nn * p00_opt drifts to k (lower branch, k = 1):")
for n in (5, 8, 16, 50, 200, 2000):
    point = optimize_source(DickeSpec(n, 1))
    print(f"   n={n:5d}: n * p00_opt = {n * point.p00_opt:.6f}")
