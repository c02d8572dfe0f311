"""Print the bigraded Frobenius characteristic for small n and check its symmetries.

Run: python demos/frobenius_tables.py
"""
from math import comb

from coinvariants import frobenius_bigraded, hilbert_series_check
from coinvariants.qtseries import reverse_q

for n in range(1, 4):
    print(f"F_{n}:", frobenius_bigraded(n).to_text())

# matrices read with t increasing upward and q increasing to the right
table = frobenius_bigraded(4)
for lam, matrix in table.matrices((7, 7)).items():
    print(f"\ns_{lam.label()}")
    print(matrix.render())

# reflecting q turns the coefficient of s_lam into the coefficient of s_lam'
for lam in table.keys_in_order():
    assert reverse_q(table[lam], comb(4, 2)) == table[lam.conjugate()]
print("\nq-reflection matches conjugation for every lambda of 4")

series = hilbert_series_check(4)
print("Hilbert series at q=t=1:", series.evaluate(1, 1))
