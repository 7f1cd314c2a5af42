"""Entanglement accounting: what one Dicke qubit can hold against the rest.

Local operations and classical communication cannot increase bipartite
entanglement, so the entanglement delivered to one remote qubit, weighted
by the success probability, must stay below what a single source pair
carried. Tracking both sides of that inequality as n grows forces the
qubit-vs-rest entanglement of Dicke states to vanish like 1/n, in sharp
contrast with the GHZ family, which holds 1 ebit at every size.
"""

from dickelift import (
    BipartiteMeasure,
    DickeSpec,
    check_locc_bound,
    dicke_single_qubit_entanglement,
    ghz_single_qubit_entanglement,
    tangle_decay_bound,
)

TANGLE = BipartiteMeasure.TWO_TANGLE
ENTROPY = BipartiteMeasure.VON_NEUMANN_ENTROPY

print("inequality: source entanglement > probability x Dicke-qubit entanglement")
print("(2-tangle, optimal source, k = 1)\n")
print("      n   source side   heralded side   ratio   1/P_opt")
for n in (5, 10, 20, 50, 100, 1000):
    report = check_locc_bound(DickeSpec(n, 1), TANGLE)
    print(
        f"   {n:4d}   {report.lhs:11.5f}   {report.rhs:13.5f}"
        f"   {report.lhs / report.rhs:5.2f}   {1 / report.p_opt:7.2f}"
    )
print("\nboth sides sink to zero together; their ratio settles at e = 2.718...")

print("\n2-tangle of one Dicke qubit versus the 4k/(P n) decay bound (k = 2):")
print("      n   actual        bound")
for n in (7, 10, 30, 100, 1000, 10_000):
    bound, actual = tangle_decay_bound(DickeSpec(n, 2))
    print(f"   {n:5d}   {actual:.3e}   {bound:.3e}")

print("\nscaled tangle n * tau2 climbs to the ceiling 4k (k = 2):")
for n in (10, 100, 1000, 10_000):
    tau = dicke_single_qubit_entanglement(DickeSpec(n, 2), TANGLE)
    print(f"   n={n:5d}: n * tau2 = {n * tau:.4f}")

print("\nGHZ contrast: one qubit against the rest stays maximally entangled,")
for n in (2, 10, 100):
    print(f"   n={n:3d}: {ghz_single_qubit_entanglement(n):.1f} ebit")
print("while the W-state value H2(1/n) already decays:",
      ", ".join(f"n={n}: {dicke_single_qubit_entanglement(DickeSpec(n, 1), ENTROPY):.3f}"
                for n in (3, 10, 100)))
