"""Diagrams: multisets of n cells (a, b) in the quarter plane.

Cells are kept sorted ascending in a, ties ascending in b. A position is a
1-based index into that sorted sequence, which disambiguates repeated cells.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .combinatorics import Partition, Permutation, descent_prefix_counts

Cell = tuple[int, int]


class MoveNotPermitted(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Diagram:
    cells: tuple[Cell, ...]

    def __init__(self, cells: Iterable[Sequence[int]]):
        cells = tuple(sorted((int(a), int(b)) for a, b in cells))
        if any(a < 0 or b < 0 for a, b in cells):
            raise ValueError(f"cells must be nonnegative: {cells}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_rows(cls, a: Sequence[int], b: Sequence[int]):
        if len(a) != len(b):
            raise ValueError("rows of a two-line diagram must have equal length")
        return cls(zip(a, b))

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cells)

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(c[1] for c in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __getitem__(self, position: int) -> Cell:
        """Cell at 1-based ``position``."""
        return self.cells[position - 1]

    def two_line(self) -> str:
        return f"{','.join(map(str, self.a))}/{','.join(map(str, self.b))}"

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    def is_strict(self) -> bool:
        return len(set(self.cells)) == len(self.cells)

    # strict and plain diagrams with the same cells compare equal
    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.cells)})"


class StrictDiagram(Diagram):
    def __init__(self, cells: Iterable[Sequence[int]]):
        super().__init__(cells)
        if not self.is_strict():
            raise ValueError(f"strict diagrams have distinct cells: {self.cells}")


def normalize(cells: Iterable[Sequence[int]]) -> Diagram:
    return Diagram(cells)


def inverse(D: Diagram) -> Diagram:
    return type(D)((b, a) for a, b in D)


def weight(D: Iterable[Cell]) -> tuple[int, int]:
    cells = list(D)
    return (sum(a for a, _ in cells), sum(b for _, b in cells))


def descents(D: Diagram) -> tuple[int, ...]:
    c = D.cells
    return tuple(i for i in range(1, len(c))
                 if c[i][0] > c[i - 1][0] and c[i][1] < c[i - 1][1])


def descent_counts(D: Diagram) -> tuple[int, ...]:
    """d_i(D): number of descents k < i, for every position i."""
    desc = set(descents(D))
    out, count = [], 0
    for i in range(1, D.n + 1):
        out.append(count)
        if i in desc:
            count += 1
    return tuple(out)


def classifying_permutation(D: Diagram) -> Permutation:
    """Standardization of the b-word, equal b's ranked left to right."""
    order = sorted(range(D.n), key=lambda i: (D.cells[i][1], i))
    sigma = [0] * D.n
    for rank, i in enumerate(order, start=1):
        sigma[i] = rank
    return Permutation(sigma)


def _inverse_positions(D: Diagram) -> list[int]:
    """0-based position in D^-1 of the swapped copy of each cell of D."""
    order = sorted(range(D.n), key=lambda i: (D.cells[i][1], D.cells[i][0], i))
    pos = [0] * D.n
    for p, i in enumerate(order):
        pos[i] = p
    return pos


def compactify(D: Diagram) -> Diagram:
    """Gamma(D): each cell replaced by its descent counts in D and in D^-1."""
    d = descent_counts(D)
    d_inv = descent_counts(inverse(D))
    pos = _inverse_positions(D)
    return Diagram((d[i], d_inv[pos[i]]) for i in range(D.n))


def is_compact(D: Diagram) -> bool:
    return compactify(D) == D


def _compact_rows(sigma: Permutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    alpha = descent_prefix_counts(sigma)
    d_inv = descent_prefix_counts(sigma.inverse())
    beta = tuple(d_inv[s - 1] for s in sigma)
    return alpha, beta


def compact_of_permutation(sigma: Permutation) -> Diagram:
    """D_sigma with cells (d_i(sigma), d_sigma(i)(sigma^-1))."""
    alpha, beta = _compact_rows(Permutation(sigma))
    return Diagram(zip(alpha, beta))


def phi(D: Diagram) -> tuple[Permutation, Partition, Partition]:
    """Split D into its classifying permutation and two partitions.

    D equals D_sigma plus the partition parts, placed as in ``phi_inverse``.
    """
    n = D.n
    sigma = classifying_permutation(D)
    alpha, beta = _compact_rows(sigma)
    if list(zip(alpha, beta)) != list(compact_of_permutation(sigma).cells):
        raise AssertionError(f"compact rows of {sigma} are not in canonical order")
    lam = [0] * n
    mu = [0] * n
    for i in range(n):
        lam[n - 1 - i] = D.cells[i][0] - alpha[i]
        mu[n - sigma[i]] = D.cells[i][1] - beta[i]
    for name, parts in (("lambda", lam), ("mu", mu)):
        if any(p < 0 for p in parts) or any(parts[k] < parts[k + 1] for k in range(n - 1)):
            raise AssertionError(f"phi({D}) produced an invalid {name}: {parts}")
    return sigma, Partition(lam), Partition(mu)


def phi_inverse(sigma: Permutation, lam: Partition, mu: Partition) -> Diagram:
    sigma = Permutation(sigma)
    n = len(sigma)
    lam = Partition(lam).padded(n)
    mu = Partition(mu).padded(n)
    alpha, beta = _compact_rows(sigma)
    cells = [(alpha[i] + lam[n - 1 - i], beta[i] + mu[n - sigma[i]]) for i in range(n)]
    D = Diagram(cells)
    if list(D.cells) != cells:
        raise AssertionError(f"phi_inverse{(sigma, lam, mu)} is not in canonical order")
    return D


# compacting moves

def vert_blockers(D: Diagram, position: int, strict: bool = False) -> list[Cell]:
    """Cells x with (a-1, b) < x < (a, b); with ``strict`` the lower end is included."""
    a, b = D[position]
    lo = (a - 1, b)
    return [x for x in D if (lo <= x if strict else lo < x) and x < (a, b)]


def horiz_blockers(D: Diagram, position: int, strict: bool = False) -> list[Cell]:
    """Cells blocking a down move of the cell at ``position``.

    Plain moves: x with (b-1, a) < x^-1 < (b, a). Strict moves: cells in row
    b to the right of c, or in row b-1 weakly left of c.
    """
    a, b = D[position]
    if strict:
        return [(x, y) for x, y in D if (y == b and x > a) or (y == b - 1 and x <= a)]
    return [(x, y) for x, y in D if (b - 1, a) < (y, x) < (b, a)]


def _check_position(D: Diagram, position: int) -> None:
    if not 1 <= position <= D.n:
        raise IndexError(f"position {position} outside 1..{D.n}")


def _moved(D: Diagram, position: int, new: Cell) -> Diagram:
    cells = list(D.cells)
    cells[position - 1] = new
    return type(D)(cells)


def left_move(D: Diagram, position: int, strict: bool = False) -> Diagram:
    _check_position(D, position)
    a, b = D[position]
    if a == 0:
        raise MoveNotPermitted(f"cell {(a, b)} at position {position} is in column 0")
    blockers = vert_blockers(D, position, strict)
    if blockers:
        raise MoveNotPermitted(f"left move of {(a, b)} blocked by Vert cells {blockers}")
    return _moved(D, position, (a - 1, b))


def down_move(D: Diagram, position: int, strict: bool = False) -> Diagram:
    _check_position(D, position)
    a, b = D[position]
    if b == 0:
        raise MoveNotPermitted(f"cell {(a, b)} at position {position} is in row 0")
    blockers = horiz_blockers(D, position, strict)
    if blockers:
        raise MoveNotPermitted(f"down move of {(a, b)} blocked by Horiz cells {blockers}")
    return _moved(D, position, (a, b - 1))


def permitted_moves(D: Diagram, strict: bool = False) -> list[tuple[str, int]]:
    """All ("left" | "down", position) moves allowed in D."""
    moves = []
    seen = set()
    for position, (a, b) in enumerate(D.cells, start=1):
        # equal cells give the same move
        if (a, b) in seen:
            continue
        seen.add((a, b))
        if a > 0 and not vert_blockers(D, position, strict):
            moves.append(("left", position))
        if b > 0 and not horiz_blockers(D, position, strict):
            moves.append(("down", position))
    return moves


def apply_move(D: Diagram, move: tuple[str, int], strict: bool = False) -> Diagram:
    kind, position = move
    if kind == "left":
        return left_move(D, position, strict)
    if kind == "down":
        return down_move(D, position, strict)
    raise ValueError(f"unknown move {kind!r}")


def compact_by_moves(D: Diagram, rng: random.Random | None = None,
                     strict: bool = False) -> tuple[Diagram, list[tuple[str, int]]]:
    """Apply compacting moves until none is permitted.

    The first permitted move is taken each step unless ``rng`` is given, in
    which case a uniformly random one is. Returns the fixpoint and the trace.
    """
    trace = []
    while True:
        moves = permitted_moves(D, strict)
        if not moves:
            return D, trace
        move = rng.choice(moves) if rng is not None else moves[0]
        D = apply_move(D, move, strict)
        trace.append(move)


# strict diagrams

def strict_classifying_permutation(D: Diagram) -> Permutation:
    """Standardization of the b-word, equal b's ranked right to left."""
    order = sorted(range(D.n), key=lambda i: (D.cells[i][1], -i))
    sigma = [0] * D.n
    for rank, i in enumerate(order, start=1):
        sigma[i] = rank
    return Permutation(sigma)


def _strict_rows(sigma: Permutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    alpha, beta = _compact_rows(sigma)
    return alpha, tuple(s - 1 - bt for s, bt in zip(sigma, beta))


def strict_compact_of_permutation(sigma: Permutation) -> StrictDiagram:
    """D^s_sigma: cells (d_i(sigma), sigma(i) - 1 - d_sigma(i)(sigma^-1))."""
    alpha, b = _strict_rows(Permutation(sigma))
    return StrictDiagram(zip(alpha, b))


def strict_left_move(D: StrictDiagram, position: int) -> StrictDiagram:
    return left_move(D, position, strict=True)


def strict_down_move(D: StrictDiagram, position: int) -> StrictDiagram:
    return down_move(D, position, strict=True)


def strict_compactify(D: StrictDiagram, rng: random.Random | None = None) -> StrictDiagram:
    return compact_by_moves(StrictDiagram(D.cells), rng, strict=True)[0]


def strict_phi(D: StrictDiagram) -> tuple[Permutation, Partition, Partition]:
    """Split a strict diagram into (sigma, lambda, mu) around D^s_sigma."""
    D = StrictDiagram(D.cells)
    n = D.n
    sigma = strict_classifying_permutation(D)
    alpha, b_s = _strict_rows(sigma)
    if list(zip(alpha, b_s)) != list(strict_compact_of_permutation(sigma).cells):
        raise AssertionError(f"strict rows of {sigma} are not in canonical order")
    lam = [0] * n
    mu = [0] * n
    for i in range(n):
        lam[n - 1 - i] = D.cells[i][0] - alpha[i]
        mu[n - sigma[i]] = D.cells[i][1] - b_s[i]
    for name, parts in (("lambda", lam), ("mu", mu)):
        if any(p < 0 for p in parts) or any(parts[k] < parts[k + 1] for k in range(n - 1)):
            raise AssertionError(f"strict_phi({D}) produced an invalid {name}: {parts}")
    return sigma, Partition(lam), Partition(mu)


def strict_phi_inverse(sigma: Permutation, lam: Partition, mu: Partition) -> StrictDiagram:
    sigma = Permutation(sigma)
    n = len(sigma)
    lam = Partition(lam).padded(n)
    mu = Partition(mu).padded(n)
    alpha, b_s = _strict_rows(sigma)
    cells = [(alpha[i] + lam[n - 1 - i], b_s[i] + mu[n - sigma[i]]) for i in range(n)]
    D = StrictDiagram(cells)
    if list(D.cells) != cells:
        raise AssertionError(f"strict_phi_inverse{(sigma, lam, mu)} is not in canonical order")
    return D


# enumeration

def diagrams_in_box(n: int, bound: int) -> Iterator[Diagram]:
    """Every n-cell diagram with all entries <= bound."""
    cells = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    for combo in combinations_with_replacement(cells, n):
        yield Diagram(combo)


def strict_diagrams_in_box(n: int, bound: int) -> Iterator[StrictDiagram]:
    cells = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    for combo in combinations(cells, n):
        yield StrictDiagram(combo)


def diagrams_of_bounded_weight(n: int, max_a: int, max_b: int,
                               strict: bool = False) -> Iterator[Diagram]:
    """Every n-cell diagram with weight <= (max_a, max_b) componentwise."""
    cls = StrictDiagram if strict else Diagram

    def rec(k: int, start: Cell, ra: int, rb: int, acc: list[Cell]):
        if k == 0:
            yield cls(acc)
            return
        a0, b0 = start
        for a in range(a0, ra + 1):
            # the remaining cells are all >= (a, .), so each costs at least a
            if a * k > ra:
                break
            for b in range(b0 if a == a0 else 0, rb + 1):
                if strict and (a, b) == start and acc:
                    continue
                acc.append((a, b))
                yield from rec(k - 1, (a, b), ra - a, rb - b, acc)
                acc.pop()

    yield from rec(n, (0, 0), max_a, max_b, [])


def random_diagram(n: int, bound: int, rng: random.Random, strict: bool = False) -> Diagram:
    """n cells drawn uniformly from the (bound+1)^2 box, with or without repeats."""
    box = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    if strict:
        return StrictDiagram(rng.sample(box, n))
    return Diagram(rng.choice(box) for _ in range(n))


# rendering

def render(D: Diagram) -> str:
    """ASCII picture: row b printed top-down, multiplicity digits in occupied boxes."""
    if not D.cells:
        return "(empty)"
    counts: dict[Cell, int] = {}
    for c in D:
        counts[c] = counts.get(c, 0) + 1
    width = max(a for a, _ in D) + 1
    height = max(b for _, b in D) + 1
    label_w = len(str(height - 1))
    lines = []
    for b in range(height - 1, -1, -1):
        row = []
        for a in range(width):
            m = counts.get((a, b), 0)
            row.append("." if m == 0 else (str(m) if m < 10 else "+"))
        lines.append(f"{b:>{label_w}} | " + " ".join(row))
    lines.append(" " * label_w + " +-" + "--" * width)
    lines.append(" " * (label_w + 3) + " ".join(str(a % 10) for a in range(width)))
    return "\n".join(lines)
