"""Static reference data: nabla(e_n) for n <= 3 and printed monomial matrices.

Nabla itself is not implemented; these values are only used for the
containment check against the monomial matrices of F_n.
"""
from __future__ import annotations

from .qtseries import QtMatrix, QtSeries
from .symfunc import SchurTable


def _poly(terms: dict[tuple[int, int], int]) -> QtSeries:
    return QtSeries(terms)


# Schur expansions, exponent pairs (i, j) for q^i t^j
NABLA_E_SCHUR: dict[int, dict[tuple[int, ...], dict[tuple[int, int], int]]] = {
    1: {(1,): {(0, 0): 1}},
    2: {(2,): {(0, 0): 1}, (1, 1): {(1, 0): 1, (0, 1): 1}},
    3: {
        (3,): {(0, 0): 1},
        (2, 1): {(2, 0): 1, (1, 1): 1, (0, 2): 1, (1, 0): 1, (0, 1): 1},
        (1, 1, 1): {(0, 3): 1, (1, 2): 1, (2, 1): 1, (1, 1): 1, (3, 0): 1},
    },
}

# monomial coefficients of nabla(e_3), rows printed top-down (highest t first)
NABLA_E3_MONOMIAL_PRINTED: dict[tuple[int, ...], list[list[int]]] = {
    (3,): [[1]],
    (2, 1): [[1, 0, 0], [1, 1, 0], [1, 1, 1]],
    (1, 1, 1): [[1, 0, 0, 0], [2, 1, 0, 0], [2, 3, 1, 0], [1, 2, 2, 1]],
}

# monomial coefficients of F_3, same convention
F3_MONOMIAL_PRINTED: dict[tuple[int, ...], list[list[int]]] = {
    (3,): [[0, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 0]],
    (2, 1): [[0, 1, 1, 1], [1, 2, 2, 1], [1, 2, 2, 1], [1, 1, 1, 0]],
    (1, 1, 1): [[1, 2, 2, 1], [2, 4, 4, 2], [2, 4, 4, 2], [1, 2, 2, 1]],
}


def nabla_e(n: int) -> SchurTable:
    """The fixture nabla(e_n) as a Schur table (n <= 3 only)."""
    if n not in NABLA_E_SCHUR:
        raise KeyError(f"no nabla(e_n) fixture for n={n}; available: {sorted(NABLA_E_SCHUR)}")
    return SchurTable(n, {lam: _poly(terms) for lam, terms in NABLA_E_SCHUR[n].items()})


def printed_matrix(table: dict[tuple[int, ...], list[list[int]]], mu) -> QtMatrix:
    return QtMatrix.from_top_down(table[tuple(mu)])


# n = 3 decompositions over the compact basis, coefficients in the Schur basis.
# Each term is (s_x shape, s_y shape, sigma, coefficient); D_231 = (001/110)
# and D_312 = (011/100). ``consistent`` is False when the left-hand diagram and
# the right-hand side have different bidegrees.
PRINTED_DECOMPOSITIONS: list[dict] = [
    {"lhs": ((0, 0, 1), (0, 0, 1)), "consistent": True,
     "terms": [((1,), (1,), (1, 2, 3), 1), ((), (), (1, 3, 2), -1)]},
    {"lhs": ((0, 0, 2), (0, 0, 1)), "consistent": True,
     "terms": [((2,), (1,), (1, 2, 3), 1), ((1,), (), (1, 3, 2), -1), ((), (), (3, 1, 2), 1)]},
    {"lhs": ((0, 0, 2), (0, 1, 0)), "consistent": True,
     "terms": [((1,), (), (1, 3, 2), 1), ((1, 1), (1,), (1, 2, 3), -1), ((), (), (3, 1, 2), -1)]},
    {"lhs": ((0, 1, 1), (0, 0, 1)), "consistent": True,
     "terms": [((1, 1), (1,), (1, 2, 3), 1), ((), (), (3, 1, 2), -1)]},
    {"lhs": ((0, 0, 1), (0, 0, 2)), "consistent": True,
     "terms": [((1,), (2,), (1, 2, 3), 1), ((), (1,), (1, 3, 2), -1), ((), (), (2, 3, 1), 1)]},
    {"lhs": ((0, 0, 1), (0, 2, 0)), "consistent": True,
     "terms": [((), (1,), (1, 3, 2), 1), ((1,), (1, 1), (1, 2, 3), -1), ((), (), (2, 3, 1), -1)]},
    # printed with the same left-hand side as the fourth entry; bidegree (2,1) vs (1,2)
    {"lhs": ((0, 1, 1), (0, 0, 1)), "consistent": False,
     "terms": [((1,), (1, 1), (1, 2, 3), 1), ((), (), (2, 3, 1), -1)]},
]
