"""Classify, compactify and decompose a 10-cell diagram, then compact it by moves.

Run: python demos/diagram_walkthrough.py
"""
import random

from coinvariants.diagrams import (
    Diagram,
    classifying_permutation,
    compact_by_moves,
    compactify,
    phi,
    phi_inverse,
    render,
    weight,
)

D = Diagram.from_rows((0, 1, 3, 4, 4, 4, 6, 7, 7, 7), (0, 6, 2, 5, 5, 5, 5, 3, 4, 4))
print(render(D))
sigma = classifying_permutation(D)
print("classifying permutation:", sigma.label(), "descents:", sigma.descents())

G = compactify(D)
print("\ncompactified:", G.two_line())
print(render(G))

s, lam, mu = phi(D)
print("\nphi(D): lambda =", tuple(lam), "mu =", tuple(mu))
print("weights:", weight(D), "=", weight(G), "+", (lam.size, mu.size))
assert phi_inverse(s, lam, mu) == D

# any order of permitted moves lands on the same compact diagram
rng = random.Random(3)
for _ in range(3):
    end, trace = compact_by_moves(D, rng)
    print(f"{len(trace)} moves ->", end.two_line())
