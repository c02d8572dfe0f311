"""Exact bivariate polynomials and truncated power series in q and t."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

Caps = tuple[int, int]


class CapOverflow(ArithmeticError):
    """A truncated computation produced terms that should not exist."""


def _merge_caps(a: Caps | None, b: Caps | None) -> Caps | None:
    if a is None:
        return b
    if b is None:
        return a
    return (min(a[0], b[0]), min(a[1], b[1]))


class QtSeries:
    """Sparse mapping (i, j) -> coefficient of q^i t^j.

    With ``caps=(Nq, Nt)`` the value is a power series known modulo every
    monomial with q-exponent > Nq or t-exponent > Nt; terms outside the caps
    are dropped on construction. ``caps=None`` means an exact polynomial.
    """

    __slots__ = ("_terms", "_caps", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Rational] | None = None,
                 caps: Caps | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if caps is not None and (i > caps[0] or j > caps[1]):
                continue
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._caps = None if caps is None else (int(caps[0]), int(caps[1]))
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c: Rational = 1, caps: Caps | None = None) -> "QtSeries":
        return cls({(0, 0): c}, caps)

    @classmethod
    def monomial(cls, i: int, j: int, c: Rational = 1, caps: Caps | None = None) -> "QtSeries":
        return cls({(i, j): c}, caps)

    @classmethod
    def q(cls) -> "QtSeries":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "QtSeries":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    @property
    def caps(self) -> Caps | None:
        return self._caps

    def items(self):
        return self._terms.items()

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_polynomial(self) -> bool:
        return self._caps is None

    def with_caps(self, caps: Caps | None) -> "QtSeries":
        return QtSeries(self._terms, caps)

    def as_polynomial(self) -> "QtSeries":
        """Forget the caps, asserting the truncated terms are all that exist."""
        return QtSeries(self._terms)

    def degrees(self) -> tuple[int, int]:
        """(max q-exponent, max t-exponent); (0, 0) for the zero series."""
        if not self._terms:
            return (0, 0)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    # arithmetic
    def _coerce(self, other) -> "QtSeries":
        if isinstance(other, QtSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QtSeries.constant(other)
        return NotImplemented

    def __add__(self, other) -> "QtSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QtSeries(out, _merge_caps(self._caps, other._caps))

    __radd__ = __add__

    def __neg__(self) -> "QtSeries":
        return QtSeries({k: -c for k, c in self._terms.items()}, self._caps)

    def __sub__(self, other) -> "QtSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QtSeries":
        return (-self) + other

    def __mul__(self, other) -> "QtSeries":
        if isinstance(other, (int, Fraction)):
            return QtSeries({k: c * other for k, c in self._terms.items()}, self._caps)
        if not isinstance(other, QtSeries):
            return NotImplemented
        caps = _merge_caps(self._caps, other._caps)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                i, j = i1 + i2, j1 + j2
                if caps is not None and (i > caps[0] or j > caps[1]):
                    continue
                out[(i, j)] = out.get((i, j), 0) + c1 * c2
        return QtSeries(out, caps)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QtSeries":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = QtSeries.constant(1, self._caps)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QtSeries.constant(other)
        if not isinstance(other, QtSeries):
            return NotImplemented
        return self._terms == other._terms and self._caps == other._caps

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._terms.items()), self._caps))
        return self._hash

    # substitutions
    def evaluate(self, q: Rational, t: Rational) -> Fraction:
        return sum((c * Fraction(q) ** i * Fraction(t) ** j for (i, j), c in self._terms.items()),
                   Fraction(0))

    def at_t(self, value: int) -> "QtSeries":
        """Substitute t = value (0 or 1 in practice); result lives in q alone."""
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self._terms.items():
            w = c * value**j
            out[(i, 0)] = out.get((i, 0), 0) + w
        return QtSeries(out)

    def at_q(self, value: int) -> "QtSeries":
        """Substitute q = value; result lives in t alone (stored at q-exponent 0)."""
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self._terms.items():
            w = c * value**i
            out[(0, j)] = out.get((0, j), 0) + w
        return QtSeries(out)

    def swap(self) -> "QtSeries":
        """Exchange q and t."""
        caps = None if self._caps is None else (self._caps[1], self._caps[0])
        return QtSeries({(j, i): c for (i, j), c in self._terms.items()}, caps)

    def t_to_q(self) -> "QtSeries":
        """Rename t to q in a series that only involves t."""
        if any(i for i, _ in self._terms):
            raise ValueError("series involves q")
        return self.swap()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def __repr__(self) -> str:
        suffix = "" if self._caps is None else f" + O(caps={self._caps})"
        return f"QtSeries({format_qt(self)}{suffix})"

    def __str__(self) -> str:
        return format_qt(self)


def _var(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def format_qt(f: QtSeries) -> str:
    """Human form, highest total degree first: ``'q^2t+qt^2+1'``."""
    if not f:
        return "0"
    keys = sorted(f.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
    parts = []
    for i, j in keys:
        c = f[(i, j)]
        mono = _var("q", i) + _var("t", j)
        if c.denominator != 1:
            coeff = f"({abs(c)})"
        else:
            coeff = str(abs(c.numerator))
        if mono:
            body = mono if abs(c) == 1 else coeff + mono
        else:
            body = coeff
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += sign + body
    return text


def poch(n: int, variable: str = "q") -> QtSeries:
    """(v;v)_n = (1-v)(1-v^2)...(1-v^n) as an exact polynomial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = QtSeries.constant(1)
    for k in range(1, n + 1):
        result = result * (1 - _power(variable, k))
    return result


def _power(variable: str, k: int) -> QtSeries:
    if variable == "q":
        return QtSeries.monomial(k, 0)
    if variable == "t":
        return QtSeries.monomial(0, k)
    raise ValueError(f"variable must be 'q' or 't', got {variable!r}")


def q_integer(k: int, variable: str = "q") -> QtSeries:
    """[k]_v = 1 + v + ... + v^(k-1)."""
    return QtSeries({(i, 0) if variable == "q" else (0, i): 1 for i in range(k)})


def q_factorial(n: int, variable: str = "q") -> QtSeries:
    result = QtSeries.constant(1)
    for k in range(1, n + 1):
        result = result * q_integer(k, variable)
    return result


def geometric_inverse(k: int, variable: str, caps: Caps) -> QtSeries:
    """1/(1 - v^k) truncated at the caps."""
    if k < 1:
        raise ValueError("k must be positive")
    cap = caps[0] if variable == "q" else caps[1]
    return QtSeries({((a * k, 0) if variable == "q" else (0, a * k)): 1
                     for a in range(cap // k + 1)}, caps)


def truncated_inverse_factor(k: int, caps: Caps) -> QtSeries:
    """1/((1 - q^k)(1 - t^k)) truncated at ``caps``."""
    if k < 1:
        raise ValueError("k must be positive")
    nq, nt = caps
    if nq < 0 or nt < 0:
        raise ValueError("caps must be nonnegative")
    return QtSeries({(a * k, b * k): 1
                     for a in range(nq // k + 1) for b in range(nt // k + 1)}, caps)


def reverse(f: QtSeries, eq: int, et: int) -> QtSeries:
    """q^eq t^et f(1/q, 1/t) for a polynomial of bidegree at most (eq, et)."""
    out = {}
    for (i, j), c in f.items():
        if i > eq or j > et:
            raise ValueError(f"term q^{i}t^{j} exceeds reflection bound ({eq}, {et})")
        out[(eq - i, et - j)] = c
    return QtSeries(out)


def reverse_q(f: QtSeries, eq: int) -> QtSeries:
    """q^eq f(1/q, t)."""
    out = {}
    for (i, j), c in f.items():
        if i > eq:
            raise ValueError(f"q-degree {i} exceeds reflection bound {eq}")
        out[(eq - i, j)] = c
    return QtSeries(out)


@dataclass(frozen=True)
class QtMatrix:
    """Dense coefficient layout: ``rows[j][i]`` is the coefficient of q^i t^j.

    Row 0 is the t^0 row. Rendering prints the highest t-exponent first, which
    puts the origin in the bottom-left corner of the printout.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def entry(self, i: int, j: int) -> int:
        """Coefficient of q^i t^j (zero outside the matrix)."""
        if 0 <= j < len(self.rows) and 0 <= i < len(self.rows[j]):
            return self.rows[j][i]
        return 0

    def top_down(self) -> list[list[int]]:
        return [list(r) for r in reversed(self.rows)]

    @classmethod
    def from_top_down(cls, printed: Iterable[Iterable[int]]) -> "QtMatrix":
        return cls(tuple(tuple(r) for r in reversed(list(printed))))

    def render(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.top_down())

    def to_json(self) -> dict:
        return {"rows_top_down": self.top_down(), "orientation": "row = t-exponent, top row highest"}

    def to_series(self) -> QtSeries:
        return QtSeries({(i, j): v for j, row in enumerate(self.rows) for i, v in enumerate(row)})

    def dominated_by(self, other: "QtMatrix") -> bool:
        """Entrywise <=, aligning both matrices at the q^0 t^0 corner."""
        return all(v <= other.entry(i, j)
                   for j, row in enumerate(self.rows) for i, v in enumerate(row))

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)


def to_matrix(f: QtSeries, shape: tuple[int, int] | None = None) -> QtMatrix:
    """Lay out an integer polynomial as a QtMatrix; ``shape`` = (rows, cols) to pad."""
    if not f.is_integral():
        raise ValueError("only integer-coefficient polynomials have a matrix form")
    dq, dt = f.degrees()
    nrows, ncols = (dt + 1, dq + 1) if shape is None else shape
    if nrows < dt + 1 or ncols < dq + 1:
        raise ValueError(f"shape {shape} too small for degrees {(dq, dt)}")
    rows = [[0] * ncols for _ in range(nrows)]
    for (i, j), c in f.items():
        rows[j][i] = int(c)
    return QtMatrix(tuple(tuple(r) for r in rows))
