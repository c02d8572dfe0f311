"""Verification suites behind ``coinvariants verify``.

Each suite compares independently computed quantities and returns a Report of
named checks. Randomized checks use a seeded ``random.Random``, so reports are
reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator

from .combinatorics import Partition, Permutation, hook_multiplicity, partitions_of, permutations_of
from .combinatorics import random_partition
from .config import check_guard
from .data import (
    F3_MONOMIAL_PRINTED,
    NABLA_E3_MONOMIAL_PRINTED,
    PRINTED_DECOMPOSITIONS,
    nabla_e,
    printed_matrix,
)
from .diagrams import (
    Diagram,
    classifying_permutation,
    compact_by_moves,
    compact_of_permutation,
    compactify,
    diagrams_of_bounded_weight,
    is_compact,
    permitted_moves,
    phi,
    phi_inverse,
    random_diagram,
    strict_classifying_permutation,
    strict_compact_of_permutation,
    strict_compactify,
    strict_phi,
    strict_phi_inverse,
    weight,
)
from .polynomials import (
    MultiPoly,
    basis_element,
    harmonic_span_hilbert,
    monomial_diagonal_symmetric,
    schur_pair_to_monomials,
    straighten,
)
from .qtseries import q_factorial, reverse, reverse_q, to_matrix
from .symfunc import (
    VerificationError,
    frobenius_bigraded,
    frobenius_single,
    hilbert_series_check,
    maj_polynomial_alternating,
    maj_polynomial_trivial,
    schur_to_monomial,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), "" if passed else detail))

    def render(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
                 for c in self.checks]
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"{verdict} suite={self.suite} n={self.n} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return "\n".join(lines)


def _symmetries(report: Report, n: int, rng: random.Random) -> None:
    table = frobenius_bigraded(n)
    single = frobenius_single(n)
    top = comb(n, 2)
    for lam in partitions_of(n):
        f = table[lam]
        label = lam.label()
        report.add(f"swap q,t fixes f_{label}", f.swap() == f)
        report.add(f"(qt)^C(n,2) f_{label}(1/q,1/t) = f_{label}", reverse(f, top, top) == f)
        report.add(f"q-reversal of f_{label} is f_{lam.conjugate().label()}",
                   reverse_q(f, top) == table[lam.conjugate()])
        report.add(f"f_{label}(q,1) = {hook_multiplicity(lam)} [n]_q!",
                   f.at_t(1) == q_factorial(n) * hook_multiplicity(lam))
        report.add(f"f_{label}(q,0) = singly graded coefficient", f.at_t(0) == single[lam])


def _maj(report: Report, n: int, rng: random.Random) -> None:
    table = frobenius_bigraded(n)
    trivial, alternating = maj_polynomial_trivial(n), maj_polynomial_alternating(n)
    report.add(f"f_({n}) = sum q^maj t^imaj", table[(n,)] == trivial,
               f"{table[(n,)]} != {trivial}")
    report.add(f"f_(1^{n}) = sum q^maj t^(C(n,2)-imaj)", table[(1,) * n] == alternating,
               f"{table[(1,) * n]} != {alternating}")


def _hilbert(report: Report, n: int, rng: random.Random) -> None:
    try:
        series = hilbert_series_check(n)
    except VerificationError as exc:
        report.add("sum f^lam f_lam = closed form", False, str(exc))
        return
    report.add("sum f^lam f_lam = closed form", True)
    total = series.evaluate(1, 1)
    report.add(f"dimension at q=t=1 is {factorial(n) ** 2}", total == factorial(n) ** 2, str(total))
    if n <= 3:
        span = harmonic_span_hilbert(n)
        report.add("derivative span of Delta(x)Delta(y) matches", span == to_matrix(series),
                   f"\n{span.render()}")


def _bijection(report: Report, n: int, rng: random.Random, samples: int = 2000) -> None:
    if n <= 4:
        top = comb(n, 2)
        found = {D for D in diagrams_of_bounded_weight(n, top, top) if is_compact(D)}
        expected = {compact_of_permutation(s) for s in permutations_of(n)}
        report.add(f"{factorial(n)} compact diagrams in the weight box", found == expected,
                   f"found {len(found)}")
    bad = []
    perms = list(permutations_of(n))
    for _ in range(samples):
        sigma = rng.choice(perms)
        lam, mu = random_partition(n, 4, rng), random_partition(n, 4, rng)
        D = phi_inverse(sigma, lam, mu)
        Dc = compact_of_permutation(sigma)
        wa, wb = weight(Dc)
        if phi(D) != (sigma, lam, mu) or weight(D) != (wa + lam.size, wb + mu.size):
            bad.append((sigma, lam, mu))
        Ds = strict_phi_inverse(sigma, lam, mu)
        if strict_phi(Ds) != (sigma, lam, mu):
            bad.append(("strict", sigma, lam, mu))
    report.add(f"phi round trip on {samples} random triples", not bad, f"{bad[:3]}")
    bad = []
    for _ in range(samples // 4):
        D = random_diagram(n, 5, rng)
        if phi_inverse(*phi(D)) != D:
            bad.append(D)
        S = random_diagram(n, 5, rng, strict=True)
        if strict_phi_inverse(*strict_phi(S)) != S:
            bad.append(S)
    report.add(f"phi^-1 o phi = id on {samples // 4} random diagrams (plain and strict)",
               not bad, f"{bad[:3]}")


def _moves(report: Report, n: int, rng: random.Random, samples: int = 200) -> None:
    stuck = [s for s in permutations_of(n) if permitted_moves(compact_of_permutation(s))] \
        if n <= 5 else []
    report.add("compact diagrams admit no move", not stuck, f"{stuck[:3]}")
    bad = []
    for _ in range(samples):
        D = random_diagram(n, 4, rng)
        end, _ = compact_by_moves(D, rng)
        if end != compactify(D) or classifying_permutation(end) != classifying_permutation(D):
            bad.append(D)
    report.add(f"random move sequences reach Gamma(D) on {samples} diagrams", not bad, f"{bad[:3]}")
    bad = []
    for _ in range(samples):
        D = random_diagram(n, 4, rng, strict=True)
        end = strict_compactify(D, rng)
        if end != strict_compact_of_permutation(strict_classifying_permutation(D)):
            bad.append(D)
    report.add(f"strict move sequences reach D^s_sigma on {samples} diagrams", not bad,
               f"{bad[:3]}")


def expected_from_schur(terms) -> dict[Permutation, dict[tuple[Partition, Partition], Fraction]]:
    """Convert (s_x shape, s_y shape, sigma, c) terms to the m(x) m(y) coefficient layout."""
    out: dict = {}
    for sx, sy, sigma, c in terms:
        sigma = Permutation(sigma)
        for key, k in schur_pair_to_monomials(sx, sy, len(sigma)).items():
            slot = out.setdefault(sigma, {})
            slot[key] = slot.get(key, 0) + c * k
    return {s: {k: Fraction(v) for k, v in d.items() if v} for s, d in out.items()}


def random_diagonal_symmetric(n: int, rng: random.Random, max_a: int = 4, max_b: int = 4,
                              terms: int = 4) -> MultiPoly:
    """Random integer combination of orbit sums M_D with weight(D) <= (max_a, max_b)."""
    pool = _diagram_pool(n, max_a, max_b)
    P = MultiPoly(n)
    for D in rng.sample(pool, min(terms, len(pool))):
        P = P + monomial_diagonal_symmetric(D) * rng.choice([-3, -2, -1, 1, 2, 3])
    return P


_POOLS: dict = {}


def _diagram_pool(n: int, max_a: int, max_b: int) -> list[Diagram]:
    key = (n, max_a, max_b)
    if key not in _POOLS:
        _POOLS[key] = list(diagrams_of_bounded_weight(n, max_a, max_b))
    return _POOLS[key]


def _straighten(report: Report, n: int, rng: random.Random, samples: int = 50) -> None:
    bound = 4 if n <= 3 else 2
    bad = []
    for _ in range(samples):
        P = random_diagonal_symmetric(n, rng, bound, bound)
        if straighten(P).expand() != P:
            bad.append(P)
    report.add(f"re-expansion identity on {samples} random inputs", not bad, f"{bad[:1]}")
    bad = []
    for sigma in permutations_of(n):
        k = min(2, n)
        lam, mu = random_partition(k, bound // 2, rng), random_partition(k, bound // 2, rng)
        result = straighten(basis_element(sigma, lam, mu))
        if len(result) != 1 or result.coefficient(sigma, lam, mu) != 1:
            bad.append((sigma, lam, mu))
    report.add("basis elements straighten to a single term", not bad, f"{bad[:3]}")
    bad = []
    for D in rng.sample(_diagram_pool(n, 3, 3), min(20, len(_diagram_pool(n, 3, 3)))):
        if straighten(monomial_diagonal_symmetric(D)).coefficient(*phi(D)) != 1:
            bad.append(D)
    report.add("M_D has coefficient 1 at phi(D)", not bad, f"{bad[:3]}")
    if n == 3:
        for entry in PRINTED_DECOMPOSITIONS:
            if not entry["consistent"]:
                continue
            D = Diagram.from_rows(*entry["lhs"])
            got = straighten(monomial_diagonal_symmetric(D)).coeffs
            want = expected_from_schur(entry["terms"])
            report.add(f"printed decomposition of M[{D.two_line()}]",
                       {s: dict(v) for s, v in got.items()} == want, f"{got} != {want}")


def _nabla(report: Report, n: int, rng: random.Random) -> None:
    nab = schur_to_monomial(nabla_e(n))
    frob = schur_to_monomial(frobenius_bigraded(n))
    for mu in partitions_of(n):
        a, b = to_matrix(nab[mu]), to_matrix(frob[mu])
        report.add(f"nabla(e_{n}) m_{mu.label()} <= F_{n} m_{mu.label()} entrywise",
                   a.dominated_by(b), f"\n{a.render()}\nvs\n{b.render()}")
    if n == 3:
        for mu in partitions_of(3):
            report.add(f"nabla(e_3) m_{mu.label()} matches the printed matrix",
                       to_matrix(nab[mu]) == printed_matrix(NABLA_E3_MONOMIAL_PRINTED, mu))
            report.add(f"F_3 m_{mu.label()} matches the printed matrix",
                       to_matrix(frob[mu]) == printed_matrix(F3_MONOMIAL_PRINTED, mu))


SUITES: dict[str, tuple[str, Callable[[Report, int, random.Random], None]]] = {
    "symmetries": ("frobenius", _symmetries),
    "maj": ("maj_brute_force", _maj),
    "hilbert": ("hilbert", _hilbert),
    "bijection": ("bijection", _bijection),
    "moves": ("moves", _moves),
    "straighten": ("straighten", _straighten),
    "nabla": ("nabla", _nabla),
}


def run_suite(suite: str, n: int, seed: int = 0) -> Report:
    """Run one suite; raises GuardExceeded above its configured n."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    guard_name, fn = SUITES[suite]
    check_guard(guard_name, n, strict=True)
    report = Report(suite, n)
    fn(report, n, random.Random(seed))
    return report


def run_all(n: int, seed: int = 0) -> Iterator[Report]:
    for suite in SUITES:
        yield run_suite(suite, n, seed)
