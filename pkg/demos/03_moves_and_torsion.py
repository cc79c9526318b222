"""Heegaard moves, torsion classes and Alexander polynomials.

Run from the repository root:  python demos/03_moves_and_torsion.py
"""

from pathlib import Path

from suturant import (GroupRingElement, alexander_from_torsion, apply_move,
                      class_equal, homology, parse_diagram,
                      random_move_sequence, torsion_class, validate)

corpus = Path(__file__).resolve().parents[1] / "corpus"


def load(name):
    return parse_diagram((corpus / f"{name}.hd").read_text())


# ---------------------------------------------------------------------------
# torsion classes across the corpus
# ---------------------------------------------------------------------------
for name in ("unknot", "trefoil", "figure8", "s1s2", "lens_5_1", "hopf"):
    diag = load(name)
    cls = torsion_class(diag)
    print(f"{name:12} class: {cls}")

# ---------------------------------------------------------------------------
# the Hopf link: dividing out (t1 - 1)(t2 - 1) leaves the multivariable
# Alexander polynomial, which is 1
# ---------------------------------------------------------------------------
hopf = load("hopf")
g = homology(hopf)
t1 = GroupRingElement.monomial(g, g.project([0, 0, 1, 0]))
t2 = GroupRingElement.monomial(g, g.project([0, 0, 0, 1]))
alex = alexander_from_torsion(torsion_class(hopf), [t1, t2])
print("\nHopf link Alexander polynomial:", alex)

# ---------------------------------------------------------------------------
# the torsion class survives random legal move sequences (the generator
# bookkeeping for beta-side moves lives in suturant.moves; here we stick to
# sequences whose transfer is the identity by checking the class directly
# against a fresh computation)
# ---------------------------------------------------------------------------
diag = load("trefoil")
before = torsion_class(diag)
moved = diag
for mv in random_move_sequence(diag, seed=11, length=8):
    print("applying", mv)
    moved = apply_move(moved, mv)
assert validate(moved).passed
after = torsion_class(moved)
print("class before:", before)
print("class after: ", after)
print("equal:", class_equal(before, after))
