"""Symmetric functions with q,t coefficients, kept in the power-sum basis.

A degree-n symmetric function is stored as its coefficients on p_mu, mu |- n.
Schur and monomial coefficients are produced on demand through character
values and Kostka numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping

from .combinatorics import (
    Partition,
    character,
    hook_multiplicity,
    maj,
    partitions_of,
    permutations_of,
    sign_of_cycle_type,
    z_of,
)
from .config import check_guard
from .qtseries import (
    Caps,
    CapOverflow,
    QtMatrix,
    QtSeries,
    geometric_inverse,
    poch,
    to_matrix,
    truncated_inverse_factor,
)


class VerificationError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _clean(coeffs: Mapping[Iterable[int], QtSeries], n: int) -> dict[Partition, QtSeries]:
    out = {}
    for key, c in coeffs.items():
        lam = Partition(key)
        if lam.size != n:
            raise ValueError(f"{tuple(lam)} is not a partition of {n}")
        if not isinstance(c, QtSeries):
            c = QtSeries.constant(c)
        if c:
            out[lam] = c
    return out


@dataclass(frozen=True)
class PExpansion:
    """sum_mu c_mu p_mu for a homogeneous symmetric function of degree n."""

    n: int
    coeffs: Mapping[Partition, QtSeries] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs, self.n))

    def __getitem__(self, mu) -> QtSeries:
        return self.coeffs.get(Partition(mu), QtSeries())

    def __add__(self, other: "PExpansion") -> "PExpansion":
        _same_degree(self, other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, QtSeries()) + c
        return PExpansion(self.n, out)

    def scale(self, f: QtSeries | int | Fraction) -> "PExpansion":
        return PExpansion(self.n, {mu: c * f for mu, c in self.coeffs.items()})

    def map_coefficients(self, fn: Callable[[QtSeries], QtSeries]) -> "PExpansion":
        return PExpansion(self.n, {mu: fn(c) for mu, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))


@dataclass(frozen=True)
class SchurTable:
    """sum_lam f_lam s_lam; coefficients f_lam(q, t)."""

    n: int
    coeffs: Mapping[Partition, QtSeries] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs, self.n))

    def __getitem__(self, lam) -> QtSeries:
        return self.coeffs.get(Partition(lam), QtSeries())

    def keys_in_order(self) -> list[Partition]:
        return [lam for lam in partitions_of(self.n) if lam in self.coeffs]

    def map_coefficients(self, fn: Callable[[QtSeries], QtSeries]) -> "SchurTable":
        return SchurTable(self.n, {lam: fn(c) for lam, c in self.coeffs.items()})

    def conjugated(self) -> "SchurTable":
        """Reindex lam -> lam' (the action of omega on the Schur basis)."""
        return SchurTable(self.n, {lam.conjugate(): c for lam, c in self.coeffs.items()})

    def matrices(self, shape: tuple[int, int] | None = None) -> dict[Partition, QtMatrix]:
        return {lam: to_matrix(self.coeffs[lam], shape) for lam in self.keys_in_order()}

    def to_json(self, shape: tuple[int, int] | None = None) -> list[dict]:
        return [{"lambda": list(lam), "matrix": m.top_down()}
                for lam, m in self.matrices(shape).items()]

    def to_text(self) -> str:
        return "; ".join(f"s_{lam.label()}: {self.coeffs[lam]}" for lam in self.keys_in_order())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurTable):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))


def _same_degree(f, g) -> None:
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} != {g.n}")


def h_to_p(n: int) -> PExpansion:
    """h_n = sum_mu p_mu / z_mu."""
    return PExpansion(n, {mu: Fraction(1, z_of(mu)) for mu in partitions_of(n)})


def e_to_p(n: int) -> PExpansion:
    """e_n = sum_mu sign(mu) p_mu / z_mu."""
    return PExpansion(n, {mu: Fraction(sign_of_cycle_type(mu), z_of(mu)) for mu in partitions_of(n)})


def p_basis(mu) -> PExpansion:
    mu = Partition(mu)
    return PExpansion(mu.size, {mu: 1})


def plethystic_specialize(f: PExpansion, caps: Caps, kernel: str = "qt") -> PExpansion:
    """p_mu -> p_mu * prod_i K(mu_i), truncated at ``caps``.

    ``kernel`` selects K(k): ``"qt"`` for 1/((1-q^k)(1-t^k)), ``"q"`` for
    1/(1-q^k) and ``"t"`` for 1/(1-t^k).
    """
    factors: dict[int, QtSeries] = {}

    def factor(k: int) -> QtSeries:
        if k not in factors:
            if kernel == "qt":
                factors[k] = truncated_inverse_factor(k, caps)
            elif kernel in ("q", "t"):
                factors[k] = geometric_inverse(k, kernel, caps)
            else:
                raise ValueError(f"unknown kernel {kernel!r}")
        return factors[k]

    out = {}
    for mu, c in f.coeffs.items():
        c = c.with_caps(caps)
        for part in mu:
            c = c * factor(part)
        out[mu] = c
    return PExpansion(f.n, out)


def internal_product(f: PExpansion, g: PExpansion) -> PExpansion:
    """Kronecker product: p_mu * p_mu = z_mu p_mu, distinct p's annihilate."""
    _same_degree(f, g)
    return PExpansion(f.n, {mu: f.coeffs[mu] * g.coeffs[mu] * z_of(mu)
                            for mu in f.coeffs if mu in g.coeffs})


def p_to_schur(f: PExpansion) -> SchurTable:
    """<f, s_lam> = sum_mu chi^lam(mu) c_mu."""
    out = {}
    for lam in partitions_of(f.n):
        acc = QtSeries()
        for mu, c in f.coeffs.items():
            chi = character(lam, mu)
            if chi:
                acc = acc + c * chi
        out[lam] = acc
    return SchurTable(f.n, out)


def schur_to_p(tab: SchurTable) -> PExpansion:
    """s_lam = sum_mu chi^lam(mu)/z_mu p_mu."""
    out = {}
    for mu in partitions_of(tab.n):
        acc = QtSeries()
        for lam, c in tab.coeffs.items():
            chi = character(lam, mu)
            if chi:
                acc = acc + c * Fraction(chi, z_of(mu))
        out[mu] = acc
    return PExpansion(tab.n, out)


def omega(f: PExpansion) -> PExpansion:
    """p_k -> (-1)^(k-1) p_k."""
    return PExpansion(f.n, {mu: c * sign_of_cycle_type(mu) for mu, c in f.coeffs.items()})


def kostka_number(lam, mu) -> int:
    """Semistandard tableaux of shape lam and content mu, by horizontal strips."""
    lam, mu = Partition(lam), tuple(mu)
    if lam.size != sum(mu):
        return 0
    return _kostka(tuple(lam), tuple(m for m in mu if m))


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    # peel off the largest entry: lam / nu must be a horizontal strip of size mu[-1]
    k = mu[-1]
    total = 0
    for nu in _strip_removals(lam, k):
        total += _kostka(nu, mu[:-1])
    return total


def _strip_removals(lam: tuple[int, ...], k: int):
    """All nu with lam/nu a horizontal strip of size k."""
    rows = len(lam)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        lower = lam[i + 1] if i + 1 < rows else 0
        for take in range(min(remaining, lam[i] - lower) + 1):
            acc.append(lam[i] - take)
            yield from rec(i + 1, remaining - take, acc)
            acc.pop()

    yield from rec(0, k, [])


def schur_to_monomial(tab: SchurTable) -> dict[Partition, QtSeries]:
    """Coefficient of m_mu is sum_lam K_{lam,mu} f_lam."""
    check_guard("schur_to_monomial", tab.n)
    out = {}
    for mu in partitions_of(tab.n):
        acc = QtSeries()
        for lam, c in tab.coeffs.items():
            k = kostka_number(lam, mu)
            if k:
                acc = acc + c * k
        if acc:
            out[mu] = acc
    return out


def _bidegree_bound(n: int) -> int:
    return comb(n, 2)


def _scale_and_close(spec: PExpansion, scale: QtSeries, bound: Caps) -> PExpansion:
    """Multiply by ``scale`` and check nothing survives beyond ``bound``."""
    out = {}
    for mu, c in spec.coeffs.items():
        c = c * scale
        for (i, j), v in c.items():
            if i > bound[0] or j > bound[1]:
                raise CapOverflow(f"p_{mu.label()} coefficient has a term q^{i}t^{j} "
                                  f"beyond the degree bound {bound}")
        out[mu] = c.as_polynomial()
    return PExpansion(spec.n, out)


def frobenius_bigraded_p(n: int, margin: int = 1) -> PExpansion:
    """(q;q)_n (t;t)_n h_n[z/((1-q)(1-t))] in the power-sum basis.

    Series are carried ``margin`` degrees past C(n,2) so that the vanishing of
    those extra coefficients certifies the truncation was exact.
    """
    bound = _bidegree_bound(n)
    caps = (bound + margin, bound + margin)
    spec = plethystic_specialize(h_to_p(n), caps, "qt")
    scale = (poch(n, "q") * poch(n, "t")).with_caps(caps)
    return _scale_and_close(spec, scale, (bound, bound))


@lru_cache(maxsize=None)
def frobenius_bigraded(n: int) -> SchurTable:
    """Schur expansion of the bigraded Frobenius characteristic F_n(z; q, t)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    check_guard("frobenius", n)
    table = p_to_schur(frobenius_bigraded_p(n))
    for lam, f in table.coeffs.items():
        if not (f.is_integral() and f.is_nonnegative()):
            raise VerificationError(f"f_{lam.label()} = {f} is not a nonnegative integer polynomial")
    return table


def frobenius_single_p(n: int, margin: int = 1) -> PExpansion:
    bound = _bidegree_bound(n)
    caps = (bound + margin, 0)
    spec = plethystic_specialize(h_to_p(n), caps, "q")
    return _scale_and_close(spec, poch(n, "q").with_caps(caps), (bound, 0))


@lru_cache(maxsize=None)
def frobenius_single(n: int) -> SchurTable:
    """(q;q)_n h_n[z/(1-q)] in the Schur basis (coefficients in q alone)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    check_guard("frobenius_single", n)
    table = p_to_schur(frobenius_single_p(n))
    for lam, f in table.coeffs.items():
        if not (f.is_integral() and f.is_nonnegative()):
            raise VerificationError(f"f_{lam.label()}(q) = {f} is not a nonnegative integer polynomial")
    return table


def frobenius_by_internal_product(n: int) -> SchurTable:
    """F_n as the Kronecker square of the singly graded characteristic (q path * t path)."""
    single = frobenius_single(n)
    in_q = schur_to_p(single)
    in_t = schur_to_p(single.map_coefficients(QtSeries.swap))
    return p_to_schur(internal_product(in_q, in_t))


def maj_polynomial_trivial(n: int) -> QtSeries:
    """sum over S_n of q^maj(s) t^maj(s^-1)."""
    check_guard("maj_brute_force", n)
    terms: dict[tuple[int, int], int] = {}
    for s in permutations_of(n):
        key = (maj(s), maj(s.inverse()))
        terms[key] = terms.get(key, 0) + 1
    return QtSeries(terms)


def maj_polynomial_alternating(n: int) -> QtSeries:
    """sum over S_n of q^maj(s) t^(C(n,2) - maj(s^-1))."""
    check_guard("maj_brute_force", n)
    top = comb(n, 2)
    terms: dict[tuple[int, int], int] = {}
    for s in permutations_of(n):
        key = (maj(s), top - maj(s.inverse()))
        terms[key] = terms.get(key, 0) + 1
    return QtSeries(terms)


def hilbert_closed_form(n: int, margin: int = 1) -> QtSeries:
    """(q;q)_n (t;t)_n / ((1-q)^n (1-t)^n) expanded as truncated series."""
    bound = _bidegree_bound(n)
    caps = (bound + margin, bound + margin)
    series = (poch(n, "q") * poch(n, "t")).with_caps(caps)
    series = series * geometric_inverse(1, "q", caps) ** n * geometric_inverse(1, "t", caps) ** n
    for (i, j), _ in series.items():
        if i > bound or j > bound:
            raise CapOverflow(f"closed form has a term q^{i}t^{j} beyond {bound}")
    return series.as_polynomial()


def hilbert_series_check(n: int, table: SchurTable | None = None) -> QtSeries:
    """sum_lam f^lam f_lam(q, t), verified against the closed form."""
    check_guard("hilbert", n)
    table = frobenius_bigraded(n) if table is None else table
    total = QtSeries()
    for lam, f in table.coeffs.items():
        total = total + f * hook_multiplicity(lam)
    expected = hilbert_closed_form(n)
    if total != expected:
        raise VerificationError(f"Hilbert series mismatch for n={n}: {total} != {expected}")
    return total
