"""A tour of the shipped Hopf superalgebra packages.

Run from the repository root:  python demos/01_hopf_algebras.py
"""

from suturant import (build_cyclic_group_algebra, build_hn, check_axioms,
                      coproduct_power)

# ---------------------------------------------------------------------------
# The 2n-dimensional family: group-like K with K^n = 1 and an odd X with
# X^2 = 0.  Basis elements are K^i and K^i X.
# ---------------------------------------------------------------------------
pkg = build_hn(3)
alg = pkg.algebra
print("basis:", ", ".join(alg.basis_labels))
print("parities:", alg.parity)

x = alg.basis_labels.index("X")
print("\nDelta(X) =", " + ".join(
    f"{alg.label(i)} (x) {alg.label(j)}"
    for c, (i, j) in coproduct_power(pkg, x, 2)))

print("S(X) =", {alg.label(k): c for k, c in alg.antipode({x: 1}).items()})

# The relative integral takes K^i X back to K^i and kills the group-likes;
# the cointegral is (1 + K + ... + K^{n-1}) X with a 1/n prefactor kept as
# an exact rational on the side.
print("\nmu table:", {alg.label(i): {alg.label(pkg.integral.b_basis[p]): c
                                     for p, c in row.items()}
                      for i, row in pkg.integral.mu.items()})
print("iota(1) =", {alg.label(i): c
                    for i, c in pkg.cointegral.iota[0].items()},
      " prefactor", pkg.cointegral.iota_prefactor)

# ---------------------------------------------------------------------------
# Every axiom is checked exhaustively on basis tuples: the Hopf axioms with
# Koszul signs, the relative (co)integral relations, the six compatibility
# conditions and the three handleslide identities.
# ---------------------------------------------------------------------------
print("\naxiom report for the 2n-dimensional package at n = 3:")
print(check_axioms(pkg))

print("\naxiom report for the group algebra of Z/4:")
print(check_axioms(build_cyclic_group_algebra(4)))

# Iterated coproducts spread the odd generator across tensor slots: X sits
# in one slot, group-likes before it, units after it.
print("\nDelta^4(X) at n = 2:")
pkg2 = build_hn(2)
x2 = pkg2.algebra.basis_labels.index("X")
for c, key in coproduct_power(pkg2, x2, 4):
    print("  ", " (x) ".join(pkg2.algebra.label(i) for i in key))
