"""Why tuning the source matters: exponential collapse versus a finite floor.

Producing the three-excitation class from maximally entangled pairs
becomes hopeless as the register grows: the success probability falls
off exponentially. Re-tuning the source to its optimal, barely entangled
weight keeps the probability near k^k e^-k / k! = 0.224 forever, with a
mild 1 + k/(2n) finite-size correction.
"""

from dickelift import (
    DickeSpec,
    asymptotic_expansion,
    asymptotic_prob,
    folded_prob,
    optimize_source,
)

K = 3

print(f"limit probability for k = {K}: {asymptotic_prob(K):.6f}\n")
print("      n   EPR source      optimal source   first-order curve")
for n in (10, 15, 20, 30, 50, 80, 120, 200, 500):
    spec = DickeSpec(n, K)
    epr = folded_prob(spec, 0.5)
    best = optimize_source(spec).p_opt
    print(f"   {n:4d}   {epr:12.3e}   {best:14.6f}   {asymptotic_expansion(spec):.6f}")

print(
    "\nthe EPR column loses several orders of magnitude per tens of pairs,"
    "\nwhile the optimal column settles just above the limit value;"
    "\nthe curve column tracks it closely once n is a few tens."
)

spec = DickeSpec(200, K)
source_weight = optimize_source(spec).p00_opt
print(f"\nat n = 200 the optimal source weight is p00 = {source_weight:.6f},")
print(f"essentially k/n = {K / 200:.6f}: a nearly separable pair still lifts")
print(f"into a {spec.n}-qubit entangled state with probability {optimize_source(spec).p_opt:.4f}.")
