import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from coinvariants.combinatorics import Partition, Permutation, partitions_of, permutations_of
from coinvariants.config import GuardExceeded
from coinvariants.diagrams import (
    Diagram,
    StrictDiagram,
    compact_of_permutation,
    diagrams_of_bounded_weight,
    phi,
    phi_inverse,
)
from coinvariants.polynomials import (
    MultiPoly,
    NotDiagonallySymmetric,
    basis_element,
    derivative,
    diagram_determinant,
    flip_x,
    flip_y,
    format_poly,
    harmonic_span_hilbert,
    is_diagonally_symmetric,
    leading_monomial,
    leading_term,
    lex_key,
    monomial_diagonal_symmetric,
    monomial_symmetric,
    rank,
    schur_pair_to_monomials,
    straighten,
    vandermonde,
)
from coinvariants.qtseries import to_matrix
from coinvariants.symfunc import hilbert_series_check
from coinvariants.verify import expected_from_schur, random_diagonal_symmetric
from coinvariants.data import PRINTED_DECOMPOSITIONS
from conftest import diagrams_cells


def var(n, name, i):
    return MultiPoly.variable(n, name, i)


def mono(a, b, c=1):
    return MultiPoly(len(a), {(tuple(a), tuple(b)): c})


def brute_orbit(cells):
    """Oracle: apply all n! permutations to the cell list and collect distinct monomials."""
    n = len(cells)
    seen = set()
    for p in permutations(cells):
        seen.add((tuple(c[0] for c in p), tuple(c[1] for c in p)))
    return MultiPoly(n, {k: 1 for k in seen})


# arithmetic and ordering

def test_arithmetic_and_action():
    n = 2
    x1, x2, y1 = var(n, "x", 1), var(n, "x", 2), var(n, "y", 1)
    P = x1 * y1 + 2 * x2
    assert P.act(Permutation((2, 1))) == x2 * var(n, "y", 2) + 2 * x1
    assert P - P == MultiPoly(n)
    assert P.bidegrees() == {(1, 1), (1, 0)}
    assert not P.is_bihomogeneous()
    assert (x1 * y1).is_bihomogeneous()
    with pytest.raises(ValueError):
        MultiPoly(2, {((1,), (0,)): 1})
    with pytest.raises(ValueError):
        x1 + MultiPoly.constant(3)


def test_json_round_trip():
    P = var(2, "x", 1) * Fraction(3, 2) - var(2, "y", 2)
    assert MultiPoly.from_json(P.to_json()) == P
    assert P.to_json()[0] == {"a": [0, 0], "b": [0, 1], "c": "-1"}
    with pytest.raises(ValueError):
        MultiPoly.from_json([])


def test_lex_order_variable_ranking():
    # x_n > y_n > ... > x_1 > y_1
    n = 2
    ranked = [var(n, "x", 2), var(n, "y", 2), var(n, "x", 1), var(n, "y", 1)]
    keys = [lex_key(leading_monomial(v)) for v in ranked]
    assert keys == sorted(keys, reverse=True)
    P = sum(ranked[1:], ranked[0])
    assert leading_term(P) == (((0, 1), (0, 0)), 1)
    assert leading_monomial(P) == ((0, 1), (0, 0))
    assert format_poly(P) == "1 * x2 + 1 * y2 + 1 * x1 + 1 * y1"
    with pytest.raises(ValueError):
        leading_monomial(MultiPoly(2))


def test_format_poly():
    P = mono((2, 0), (0, 1), -3) + MultiPoly.constant(2, 1)
    assert str(P) == "-3 * x1^2 y2 + 1 * 1"
    assert str(MultiPoly(2)) == "0"


# orbit sums and symmetric functions

def test_orbit_examples():
    assert monomial_diagonal_symmetric(Diagram([(0, 0)] * 3)) == MultiPoly.constant(3)
    M = monomial_diagonal_symmetric(Diagram([(0, 0), (0, 0), (1, 1)]))
    assert M == sum((var(3, "x", i) * var(3, "y", i) for i in (2, 3)),
                    var(3, "x", 1) * var(3, "y", 1))
    M = monomial_diagonal_symmetric(Diagram([(0, 0), (1, 0), (2, 1)]))
    expected = (mono((0, 1, 2), (0, 0, 1)) + mono((1, 0, 2), (0, 0, 1))
                + mono((0, 2, 1), (0, 1, 0)) + mono((2, 0, 1), (1, 0, 0))
                + mono((1, 2, 0), (0, 1, 0)) + mono((2, 1, 0), (1, 0, 0)))
    assert M == expected
    assert leading_monomial(M) == ((0, 1, 2), (0, 0, 1))
    with pytest.raises(ValueError):
        monomial_diagonal_symmetric(Diagram([(0, 0)]), n=2)


@given(diagrams_cells(max_n=4, bound=3))
def test_orbit_sum_against_brute_force(cells):
    D = Diagram(cells)
    M = monomial_diagonal_symmetric(D)
    assert M == brute_orbit(list(D.cells))
    assert is_diagonally_symmetric(M)
    assert M.bidegrees() == {(sum(D.a), sum(D.b))}
    # the sorted diagram leads its own orbit
    assert leading_monomial(M) == (D.a, D.b)


def test_monomial_symmetric():
    assert monomial_symmetric((1,), "x", 2) == var(2, "x", 1) + var(2, "x", 2)
    x = [var(3, "x", i) for i in (1, 2, 3)]
    assert monomial_symmetric((1, 1), "x", 3) == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    m1 = monomial_symmetric((1,), "x", 3)
    m2 = monomial_symmetric((2,), "x", 3)
    m11 = monomial_symmetric((1, 1), "x", 3)
    assert m2 + m11 == m1 * m1 - m11
    assert monomial_symmetric((1,), "y", 2) == var(2, "y", 1) + var(2, "y", 2)
    with pytest.raises(ValueError):
        monomial_symmetric((1, 1, 1), "x", 2)
    with pytest.raises(ValueError):
        monomial_symmetric((1,), "z", 2)


def test_is_diagonally_symmetric():
    assert is_diagonally_symmetric(MultiPoly.constant(1))
    assert not is_diagonally_symmetric(var(3, "x", 1))
    # invariant under (12) alone is not enough
    assert not is_diagonally_symmetric(var(3, "x", 1) + var(3, "x", 2))


def test_schur_pair_to_monomials():
    # s_2 = m_2 + m_11, s_11 = m_11
    assert schur_pair_to_monomials((2,), (1, 1), 3) == {
        (Partition((2,)), Partition((1, 1))): 1, (Partition((1, 1)), Partition((1, 1))): 1}
    # m_111 needs three variables
    assert schur_pair_to_monomials((1, 1, 1), (), 2) == {}


# straightening

def test_straighten_compact_orbit():
    for sigma in permutations_of(3):
        result = straighten(monomial_diagonal_symmetric(compact_of_permutation(sigma)))
        assert len(result) == 1 and result.coefficient(sigma) == 1


def test_straighten_first_printed_example():
    result = straighten(monomial_diagonal_symmetric(Diagram([(0, 0), (0, 0), (1, 1)])))
    assert result.coefficient((1, 2, 3), (1,), (1,)) == 1
    assert result.coefficient((1, 3, 2)) == -1
    assert len(result) == 2
    assert result.to_text() == ("+1 m_1(x) m_1(y) M[0,0,0/0,0,0]   (sigma=123)\n"
                                "-1 M[0,0,1/0,1,0]   (sigma=132)")
    assert result.to_json()[1] == {"sigma": [1, 3, 2], "lambda": [], "mu": [], "c": "-1"}


@pytest.mark.parametrize("index", range(6))
def test_straighten_printed_decompositions(index):
    entry = PRINTED_DECOMPOSITIONS[index]
    assert entry["consistent"]
    D = Diagram.from_rows(*entry["lhs"])
    got = straighten(monomial_diagonal_symmetric(D)).coeffs
    assert {s: dict(v) for s, v in got.items()} == expected_from_schur(entry["terms"])


def test_inconsistent_printed_line():
    entry = PRINTED_DECOMPOSITIONS[6]
    assert not entry["consistent"]
    D = Diagram.from_rows(*entry["lhs"])
    rhs = sum((basis_element(Permutation(s), lam, mu) * c * k
               for sx, sy, s, c in entry["terms"]
               for (lam, mu), k in schur_pair_to_monomials(sx, sy, 3).items()), MultiPoly(3))
    lhs = monomial_diagonal_symmetric(D)
    assert lhs.bidegrees() == {(2, 1)} and rhs.bidegrees() == {(1, 2)}
    # the transposed diagram satisfies the printed right-hand side
    assert monomial_diagonal_symmetric(Diagram.from_rows((0, 0, 1), (0, 1, 1))) == rhs


def test_straighten_rejects_non_symmetric():
    with pytest.raises(NotDiagonallySymmetric):
        straighten(var(3, "x", 1))


def test_straighten_guard():
    with pytest.raises(GuardExceeded):
        straighten(MultiPoly.constant(4))


def test_straighten_zero():
    result = straighten(MultiPoly(3))
    assert len(result) == 0 and result.to_text() == "0"


@settings(max_examples=25)
@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_straighten_re_expansion(n, rng):
    P = random_diagonal_symmetric(n, rng, 3, 3)
    assert straighten(P).expand() == P


@pytest.mark.parametrize("n", [2, 3])
def test_orbit_coefficient_at_phi(n):
    for D in diagrams_of_bounded_weight(n, 3, 3):
        assert straighten(monomial_diagonal_symmetric(D)).coefficient(*phi(D)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_elements_straighten_to_themselves(n):
    for sigma in permutations_of(n):
        for lam in partitions_of(2):
            for mu in ((), (1,)):
                if len(lam) > n:
                    continue
                result = straighten(basis_element(sigma, lam, mu))
                assert len(result) == 1 and result.coefficient(sigma, lam, mu) == 1


def test_leading_term_of_basis_element_is_not_always_phi_inverse():
    # m_2(x) m_21(y) M_{D_21} at n = 2: phi^-1 predicts x2^3 y1^3 y2,
    # but the lex-largest monomial is x2^3 y1^2 y2^2
    sigma, lam, mu = Permutation((2, 1)), Partition((2,)), Partition((2, 1))
    P = basis_element(sigma, lam, mu)
    D = phi_inverse(sigma, lam, mu)
    assert (D.a, D.b) == ((0, 3), (3, 1))
    assert leading_monomial(P) == ((0, 3), (2, 2))
    assert P[(D.a, D.b)] != 0


def test_leading_monomials_can_collide():
    # two basis elements of bidegree (1, 2) at n = 2 share a leading monomial
    a = basis_element(Permutation((1, 2)), Partition((1,)), Partition((1, 1)))
    b = basis_element(Permutation((2, 1)), Partition(()), Partition((1,)))
    assert a.bidegrees() == b.bidegrees() == {(1, 2)}
    assert leading_monomial(a) == leading_monomial(b) == ((0, 1), (1, 1))


# Vandermonde, flips, determinants

def test_vandermonde():
    assert vandermonde(1) == MultiPoly.constant(1)
    assert vandermonde(2) == var(2, "x", 1) - var(2, "x", 2)
    V = vandermonde(3, "y")
    assert len(V) == 6 and all(abs(c) == 1 for _, c in V.items())
    assert V.bidegrees() == {(0, 3)}


def test_flips():
    n = 2
    delta = vandermonde(n)
    assert flip_x(MultiPoly.constant(n)) == delta
    assert flip_x(delta) == MultiPoly.constant(n, 2)
    assert flip_y(MultiPoly.constant(n)) == vandermonde(n, "y")
    dy = vandermonde(n, "y")
    for P in (MultiPoly.constant(n), delta, dy, delta * dy):
        assert flip_x(flip_x(P)) == P * 2
    # x-degree too high: the result is zero
    assert flip_x(var(n, "x", 1) * var(n, "x", 1)) == MultiPoly(n)


def test_flip_bidegree():
    P = var(3, "x", 1) * var(3, "y", 2)
    assert flip_x(P).bidegrees() == {(2, 1)}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_flip_of_compact_basis_is_alternating(n):
    for tau in permutations_of(n):
        F = flip_x(monomial_diagonal_symmetric(compact_of_permutation(tau)))
        for sigma in permutations_of(n):
            assert F.act(sigma) == F * sigma.sign()


def test_diagram_determinant():
    assert diagram_determinant(StrictDiagram([(i, 0) for i in range(3)])) == -vandermonde(3)
    assert diagram_determinant(StrictDiagram([(0, 0), (0, 1)])) == var(2, "y", 2) - var(2, "y", 1)
    with pytest.raises(ValueError):
        diagram_determinant(Diagram([(0, 0), (0, 0)]))


@given(diagrams_cells(min_n=2, max_n=4, bound=3, strict=True), st.data())
def test_diagram_determinant_alternates(cells, data):
    P = diagram_determinant(StrictDiagram(cells))
    n = len(cells)
    i = data.draw(st.integers(1, n - 1))
    swap = list(range(1, n + 1))
    swap[i - 1], swap[i] = swap[i], swap[i - 1]
    assert P.act(Permutation(swap)) == -P


# harmonic span

def test_derivative_and_rank():
    P = mono((2, 0), (1, 0))
    assert derivative(P, (1, 0), (0, 0)) == mono((1, 0), (1, 0), 2)
    assert derivative(P, (0, 1), (0, 0)) == MultiPoly(2)
    assert rank([{1: 1, 2: 1}, {1: 2, 2: 2}, {2: 1}]) == 2
    assert rank([]) == 0


def test_harmonic_span_small():
    assert harmonic_span_hilbert(1).top_down() == [[1]]
    two = harmonic_span_hilbert(2)
    assert two.total() == 4
    assert two.top_down() == [[1, 1], [1, 1]]


def test_harmonic_span_n3():
    span = harmonic_span_hilbert(3)
    assert span.total() == 36
    assert span == to_matrix(hilbert_series_check(3))


def test_harmonic_span_guard():
    with pytest.raises(GuardExceeded):
        harmonic_span_hilbert(4)
