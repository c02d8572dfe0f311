"""Sparse polynomials in x1..xn, y1..yn with exact rational coefficients.

The monomial x^a y^b is keyed by the pair of exponent tuples (a, b). Leading
terms use the lexicographic order with x_n > y_n > ... > x_1 > y_1, under
which the leading monomial of an orbit sum M_D is the sorted diagram D itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from .combinatorics import Partition, Permutation, partitions_of
from .config import check_guard
from .diagrams import (
    Diagram,
    StrictDiagram,
    compact_of_permutation,
    diagrams_of_bounded_weight,
    phi,
    weight,
)
from .qtseries import QtMatrix
from .symfunc import kostka_number

Exponents = tuple[tuple[int, ...], tuple[int, ...]]


class NotDiagonallySymmetric(ValueError):
    pass


class MultiPoly:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponents, Fraction | int] | None = None):
        self.n = n
        clean = {}
        for (a, b), c in (terms or {}).items():
            a, b = tuple(a), tuple(b)
            if len(a) != n or len(b) != n:
                raise ValueError(f"exponent vectors must have length {n}: {(a, b)}")
            c = Fraction(c)
            if c:
                clean[(a, b)] = c
        self._terms = clean

    @classmethod
    def constant(cls, n: int, c=1) -> "MultiPoly":
        return cls(n, {((0,) * n, (0,) * n): c})

    @classmethod
    def variable(cls, n: int, alphabet: str, i: int) -> "MultiPoly":
        e = tuple(1 if k == i - 1 else 0 for k in range(n))
        z = (0,) * n
        return cls(n, {(e, z) if alphabet == "x" else (z, e): 1})

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key: Exponents) -> Fraction:
        return self._terms.get((tuple(key[0]), tuple(key[1])), Fraction(0))

    def _check(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly(self.n, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.n, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (tuple(x + y for x, y in zip(a1, a2)), tuple(x + y for x, y in zip(b1, b2)))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(self.n, out)

    def __rmul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def act(self, sigma: Permutation) -> "MultiPoly":
        """Diagonal action x_i -> x_sigma(i), y_i -> y_sigma(i)."""
        sigma = Permutation(sigma)
        if len(sigma) != self.n:
            raise ValueError("permutation size differs from the variable count")
        out = {}
        for (a, b), c in self._terms.items():
            na, nb = [0] * self.n, [0] * self.n
            for i in range(self.n):
                na[sigma[i] - 1] = a[i]
                nb[sigma[i] - 1] = b[i]
            out[(tuple(na), tuple(nb))] = c
        return MultiPoly(self.n, out)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(sum(a), sum(b)) for a, b in self._terms}

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> list[dict]:
        return [{"a": list(a), "b": list(b), "c": str(c)} for (a, b), c in sorted_terms(self)]

    @classmethod
    def from_json(cls, records: list[dict]) -> "MultiPoly":
        if not records:
            raise ValueError("cannot infer n from an empty record list")
        n = len(records[0]["a"])
        out: dict[Exponents, Fraction] = {}
        for r in records:
            key = (tuple(r["a"]), tuple(r["b"]))
            out[key] = out.get(key, 0) + Fraction(str(r["c"]))
        return cls(n, out)


def lex_key(exponents: Exponents) -> tuple[int, ...]:
    """Sort key for the order x_n > y_n > ... > x_1 > y_1."""
    a, b = exponents
    key = []
    for i in range(len(a) - 1, -1, -1):
        key.extend((a[i], b[i]))
    return tuple(key)


def sorted_terms(P: MultiPoly) -> list[tuple[Exponents, Fraction]]:
    """Terms from the leading one down."""
    return sorted(P.items(), key=lambda kv: lex_key(kv[0]), reverse=True)


def leading_term(P: MultiPoly) -> tuple[Exponents, Fraction]:
    if not P:
        raise ValueError("the zero polynomial has no leading monomial")
    return max(P.items(), key=lambda kv: lex_key(kv[0]))


def leading_monomial(P: MultiPoly) -> Exponents:
    return leading_term(P)[0]


def _monomial_text(a, b) -> str:
    factors = []
    for name, exps in (("x", a), ("y", b)):
        for i, e in enumerate(exps, start=1):
            if e == 1:
                factors.append(f"{name}{i}")
            elif e > 1:
                factors.append(f"{name}{i}^{e}")
    return " ".join(factors) if factors else "1"


def format_poly(P: MultiPoly) -> str:
    """``c * x1^a1 ... yn^bn`` terms, leading term first."""
    if not P:
        return "0"
    text = ""
    for k, ((a, b), c) in enumerate(sorted_terms(P)):
        body = f"{abs(c)} * {_monomial_text(a, b)}"
        if k == 0:
            text = ("-" if c < 0 else "") + body
        else:
            text += (" - " if c < 0 else " + ") + body
    return text


def _distinct_arrangements(items: list) -> Iterator[tuple]:
    """Distinct orderings of a multiset."""
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(items)
    acc: list = []

    def rec():
        if len(acc) == n:
            yield tuple(acc)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                acc.append(k)
                yield from rec()
                acc.pop()
                counts[k] += 1

    yield from rec()


def monomial_diagonal_symmetric(D: Diagram | Iterable, n: int | None = None) -> MultiPoly:
    """M_D: sum of the distinct monomials obtained by permuting the cells of D."""
    D = D if isinstance(D, Diagram) else Diagram(D)
    n = D.n if n is None else n
    if D.n != n:
        raise ValueError(f"diagram has {D.n} cells, expected {n}")
    return _orbit_sum(D.cells)


@lru_cache(maxsize=None)
def _orbit_sum(cells: tuple) -> MultiPoly:
    n = len(cells)
    terms = {}
    for arrangement in _distinct_arrangements(list(cells)):
        terms[(tuple(c[0] for c in arrangement), tuple(c[1] for c in arrangement))] = 1
    return MultiPoly(n, terms)


def monomial_symmetric(lam: Partition, alphabet: str, n: int) -> MultiPoly:
    """m_lam in x1..xn (or y1..yn)."""
    lam = Partition(lam)
    if alphabet not in ("x", "y"):
        raise ValueError(f"alphabet must be 'x' or 'y', got {alphabet!r}")
    if len(lam) > n:
        raise ValueError(f"m_{tuple(lam)} needs at least {len(lam)} variables, got {n}")
    return _monomial_symmetric(tuple(lam), alphabet, n)


@lru_cache(maxsize=None)
def _monomial_symmetric(lam: tuple, alphabet: str, n: int) -> MultiPoly:
    z = (0,) * n
    terms = {}
    for e in _distinct_arrangements(list(lam) + [0] * (n - len(lam))):
        terms[(e, z) if alphabet == "x" else (z, e)] = 1
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def basis_element(sigma: Permutation, lam: Partition, mu: Partition) -> MultiPoly:
    """m_lam(x) m_mu(y) M_{D_sigma}."""
    n = len(sigma)
    return (monomial_symmetric(lam, "x", n) * monomial_symmetric(mu, "y", n)
            * monomial_diagonal_symmetric(compact_of_permutation(sigma)))


def is_diagonally_symmetric(P: MultiPoly) -> bool:
    """Invariance under the generators (1 2) and (1 2 ... n)."""
    n = P.n
    if n < 2:
        return True
    swap = Permutation((2, 1) + tuple(range(3, n + 1)))
    cycle = Permutation(tuple(range(2, n + 1)) + (1,))
    return P.act(swap) == P and P.act(cycle) == P


@dataclass(frozen=True)
class StraightenResult:
    """sum_sigma f_sigma M_{D_sigma} with f_sigma = sum a_{lam,mu} m_lam(x) m_mu(y)."""

    n: int
    coeffs: Mapping[Permutation, Mapping[tuple[Partition, Partition], Fraction]] = field(
        default_factory=dict)

    def terms(self) -> Iterator[tuple[Permutation, Partition, Partition, Fraction]]:
        for sigma in sorted(self.coeffs):
            for (lam, mu), c in sorted(self.coeffs[sigma].items()):
                yield sigma, lam, mu, c

    def coefficient(self, sigma, lam=(), mu=()) -> Fraction:
        return self.coeffs.get(Permutation(sigma), {}).get((Partition(lam), Partition(mu)),
                                                          Fraction(0))

    def expand(self) -> MultiPoly:
        total = MultiPoly(self.n)
        for sigma, lam, mu, c in self.terms():
            total = total + basis_element(sigma, lam, mu) * c
        return total

    def __len__(self) -> int:
        return sum(len(v) for v in self.coeffs.values())

    def to_text(self) -> str:
        lines = []
        for sigma, lam, mu, c in self.terms():
            factors = []
            if lam:
                factors.append(f"m_{lam.label()}(x)")
            if mu:
                factors.append(f"m_{mu.label()}(y)")
            factors.append(f"M[{compact_of_permutation(sigma).two_line()}]")
            lines.append(f"{'+' if c > 0 else '-'}{abs(c)} {' '.join(factors)}   (sigma={sigma.label()})")
        return "\n".join(lines) if lines else "0"

    def to_json(self) -> list[dict]:
        return [{"sigma": list(sigma), "lambda": list(lam), "mu": list(mu), "c": str(c)}
                for sigma, lam, mu, c in self.terms()]


Triple = tuple[Permutation, Partition, Partition]


def _is_sorted(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all((a[i], b[i]) <= (a[i + 1], b[i + 1]) for i in range(len(a) - 1))


def orbit_coordinates(P: MultiPoly) -> dict[Exponents, Fraction]:
    """Coefficients of P on the orbit sums M_D, keyed by the sorted exponents of D.

    Only meaningful for diagonally symmetric P, where the coefficient of M_D
    is the coefficient of its sorted representative monomial.
    """
    return {k: c for k, c in P.items() if _is_sorted(*k)}


def diagrams_of_weight(n: int, d: int, e: int) -> list[Diagram]:
    return [D for D in diagrams_of_bounded_weight(n, d, e) if weight(D) == (d, e)]


@lru_cache(maxsize=None)
def _echelon_basis(n: int, d: int, e: int) -> dict[Exponents, tuple[dict, dict]]:
    """Basis elements of bidegree (d, e), row-reduced to distinct leading diagrams.

    Maps each leading orbit to (orbit coordinates, combination of triples). The
    leading monomial of m_lam(x) m_mu(y) M_{D_sigma} is not always phi^-1 of its
    triple, and two basis elements can share a leading monomial, so the pivots
    come from this reduction instead of from phi.
    """
    pivots: dict[Exponents, tuple[dict, dict]] = {}
    diagrams = diagrams_of_weight(n, d, e)
    for D in diagrams:
        triple = phi(D)
        vec = orbit_coordinates(basis_element(*triple))
        combo: dict[Triple, Fraction] = {triple: Fraction(1)}
        while vec:
            lead = max(vec, key=lex_key)
            if lead not in pivots:
                pivots[lead] = (vec, combo)
                break
            pvec, pcombo = pivots[lead]
            k = vec[lead] / pvec[lead]
            vec = _axpy(vec, pvec, -k)
            combo = _axpy(combo, pcombo, -k)
        else:
            raise AssertionError(f"basis elements of bidegree {(d, e)} are linearly dependent")
    if len(pivots) != len(diagrams):
        raise AssertionError(f"bidegree {(d, e)}: {len(pivots)} pivots for {len(diagrams)} diagrams")
    return pivots


def _axpy(y: dict, x: dict, k: Fraction) -> dict:
    """y + k x on sparse vectors, dropping zeros."""
    out = dict(y)
    for key, v in x.items():
        nv = out.get(key, 0) + k * v
        if nv:
            out[key] = nv
        else:
            out.pop(key, None)
    return out


def straighten(P: MultiPoly, check: bool = True) -> StraightenResult:
    """Expand a diagonally symmetric P over {m_lam(x) m_mu(y) M_{D_sigma}}.

    Works on orbit coordinates: each step cancels the leading orbit of the
    remainder against the echelonized basis of its bidegree.
    """
    if check and not is_diagonally_symmetric(P):
        raise NotDiagonallySymmetric("input is not invariant under the diagonal action")
    check_guard("straighten", P.n, strict=True)
    acc: dict[Triple, Fraction] = {}
    rest = orbit_coordinates(P)
    while rest:
        lead = max(rest, key=lex_key)
        pivots = _echelon_basis(P.n, sum(lead[0]), sum(lead[1]))
        pvec, pcombo = pivots[lead]
        k = rest[lead] / pvec[lead]
        rest = _axpy(rest, pvec, -k)
        acc = _axpy(acc, pcombo, k)
    coeffs: dict[Permutation, dict[tuple[Partition, Partition], Fraction]] = {}
    for (sigma, lam, mu), c in acc.items():
        coeffs.setdefault(sigma, {})[(lam, mu)] = c
    return StraightenResult(P.n, coeffs)


def schur_pair_to_monomials(lam_x, lam_y, n: int) -> dict[tuple[Partition, Partition], int]:
    """s_lam(x) s_mu(y) in the m(x) m(y) basis, restricted to n variables."""
    lam_x, lam_y = Partition(lam_x), Partition(lam_y)
    out = {}
    for nu_x in partitions_of(lam_x.size):
        kx = kostka_number(lam_x, nu_x)
        if not kx or len(nu_x) > n:
            continue
        for nu_y in partitions_of(lam_y.size):
            ky = kostka_number(lam_y, nu_y)
            if ky and len(nu_y) <= n:
                out[(nu_x, nu_y)] = kx * ky
    return out


# Vandermonde, flips, determinants

def vandermonde(n: int, alphabet: str = "x") -> MultiPoly:
    """prod_{i<j} (v_i - v_j)."""
    result = MultiPoly.constant(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result = result * (MultiPoly.variable(n, alphabet, i) - MultiPoly.variable(n, alphabet, j))
    return result


def _falling(e: int, k: int) -> int:
    return factorial(e) // factorial(e - k)


def apply_operator(P: MultiPoly, F: MultiPoly, alphabet: str) -> MultiPoly:
    """P(d/dv, w) F for v the chosen alphabet; the other alphabet multiplies."""
    if P.n != F.n:
        raise ValueError("variable count mismatch")
    n = P.n
    out: dict[Exponents, Fraction] = {}
    for (pa, pb), pc in P.items():
        ops, mult = (pa, pb) if alphabet == "x" else (pb, pa)
        for (fa, fb), fc in F.items():
            target, other = (fa, fb) if alphabet == "x" else (fb, fa)
            if any(t < o for t, o in zip(target, ops)):
                continue
            scale = 1
            for t, o in zip(target, ops):
                scale *= _falling(t, o)
            new_target = tuple(t - o for t, o in zip(target, ops))
            new_other = tuple(x + y for x, y in zip(other, mult))
            key = (new_target, new_other) if alphabet == "x" else (new_other, new_target)
            out[key] = out.get(key, 0) + pc * fc * scale
    return MultiPoly(n, out)


def flip_x(P: MultiPoly) -> MultiPoly:
    """P(dx, y) applied to the Vandermonde in x."""
    return apply_operator(P, vandermonde(P.n, "x"), "x")


def flip_y(P: MultiPoly) -> MultiPoly:
    """P(x, dy) applied to the Vandermonde in y."""
    return apply_operator(P, vandermonde(P.n, "y"), "y")


def diagram_determinant(D: StrictDiagram) -> MultiPoly:
    """det(x_i^a y_i^b), rows the cells (a, b) of D in canonical order, columns i."""
    if not isinstance(D, Diagram):
        D = Diagram(D)
    if not D.is_strict():
        raise ValueError(f"repeated cells give a vanishing determinant: {D.cells}")
    n = D.n
    out: dict[Exponents, Fraction] = {}
    for cols in permutations(range(n)):
        sign = Permutation(c + 1 for c in cols).sign()
        a, b = [0] * n, [0] * n
        for (ca, cb), col in zip(D.cells, cols):
            a[col], b[col] = ca, cb
        key = (tuple(a), tuple(b))
        out[key] = out.get(key, 0) + sign
    return MultiPoly(n, out)


def derivative(F: MultiPoly, u: tuple[int, ...], v: tuple[int, ...]) -> MultiPoly:
    """d^u/dx^u d^v/dy^v F."""
    out: dict[Exponents, Fraction] = {}
    for (a, b), c in F.items():
        if any(x < k for x, k in zip(a, u)) or any(y < k for y, k in zip(b, v)):
            continue
        scale = 1
        for x, k in zip(a, u):
            scale *= _falling(x, k)
        for y, k in zip(b, v):
            scale *= _falling(y, k)
        out[(tuple(x - k for x, k in zip(a, u)), tuple(y - k for y, k in zip(b, v)))] = c * scale
    return MultiPoly(F.n, out)


def rank(vectors: Iterable[Mapping]) -> int:
    """Exact rank of sparse vectors (mappings from basis keys to rationals)."""
    pivots: dict = {}  # pivot key -> reduced row with that leading key
    r = 0
    for vec in vectors:
        row = {k: Fraction(v) for k, v in vec.items() if v}
        while row:
            key = max(row)
            if key not in pivots:
                pivots[key] = row
                r += 1
                break
            prow = pivots[key]
            factor = row[key] / prow[key]
            for k, v in prow.items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def _multi_indices(n: int, total: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations_with_replacement(range(n), total):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def harmonic_span_hilbert(n: int) -> QtMatrix:
    """Bigraded dimensions of the span of all derivatives of Delta_n(x) Delta_n(y).

    Entry (i, j) is the dimension in x-degree i and y-degree j.
    """
    check_guard("harmonic_span", n, strict=True)
    top = comb(n, 2)
    F = vandermonde(n, "x") * vandermonde(n, "y")
    rows = [[0] * (top + 1) for _ in range(top + 1)]
    for du in range(top + 1):
        for dv in range(top + 1):
            derivs = (derivative(F, u, v).terms
                      for u in _multi_indices(n, du) for v in _multi_indices(n, dv))
            rows[top - dv][top - du] = rank(derivs)
    return QtMatrix(tuple(tuple(r) for r in rows))
