"""Expand diagonally symmetric polynomials over m_lam(x) m_mu(y) M_{D_sigma}.

Run: python demos/straightening.py
"""
import random

from coinvariants.combinatorics import Partition, Permutation
from coinvariants.diagrams import Diagram, phi_inverse
from coinvariants.polynomials import (
    basis_element,
    leading_monomial,
    monomial_diagonal_symmetric,
    straighten,
)
from coinvariants.verify import random_diagonal_symmetric

for rows in [((0, 0, 1), (0, 0, 1)), ((0, 0, 2), (0, 0, 1)), ((0, 1, 1), (0, 0, 1))]:
    D = Diagram.from_rows(*rows)
    print(f"M[{D.two_line()}] =")
    print(straighten(monomial_diagonal_symmetric(D)).to_text(), "\n")

P = random_diagonal_symmetric(3, random.Random(0))
result = straighten(P)
print(f"random input with {len(P)} terms straightens to {len(result)} basis terms;",
      "re-expansion matches:", result.expand() == P)

# the leading monomial of a basis element need not be its phi^-1 diagram
sigma, lam, mu = Permutation((2, 1)), Partition((2,)), Partition((2, 1))
E = phi_inverse(sigma, lam, mu)
print("\nphi^-1 diagram:", E.two_line(), " leading exponents:",
      leading_monomial(basis_element(sigma, lam, mu)))
