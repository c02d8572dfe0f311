"""Command-line front end: ``coinvariants <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb
from pathlib import Path

from .combinatorics import Partition, Permutation
from .config import GuardExceeded, check_guard
from .diagrams import (
    Diagram,
    MoveNotPermitted,
    StrictDiagram,
    apply_move,
    classifying_permutation,
    compact_by_moves,
    compact_of_permutation,
    compactify,
    descents,
    inverse,
    permitted_moves,
    phi,
    phi_inverse,
    render,
    strict_compact_of_permutation,
    strict_compactify,
    strict_phi,
    weight,
)
from .polynomials import MultiPoly, NotDiagonallySymmetric, monomial_diagonal_symmetric, straighten
from .polynomials import harmonic_span_hilbert
from .qtseries import format_qt, to_matrix
from .symfunc import frobenius_bigraded, hilbert_series_check
from .verify import SUITES, run_suite

FORMATS = ("text", "json", "matrix")
DIAGRAM_ACTIONS = ("classify", "compactify", "phi", "phi-inv", "moves", "strict")
DEFAULT_GOLDEN_DIR = Path("tests") / "golden"


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _read_input(spec: str) -> str:
    """``spec`` is a path to a UTF-8 file or the literal input itself."""
    if spec is None:
        raise UsageError("--input is required")
    if os.path.isfile(spec):
        return Path(spec).read_text(encoding="utf-8").strip()
    return spec.strip()


def _parse_row(text: str) -> list[int]:
    text = text.strip()
    if "," in text or " " in text:
        return [int(v) for v in text.replace(",", " ").split()]
    return [int(ch) for ch in text]


def parse_diagram(text: str) -> Diagram:
    """Two-line ``a1,a2,.../b1,b2,...`` (digits may be run together) or JSON."""
    try:
        if text.startswith("{") or text.startswith("["):
            data = json.loads(text)
            if isinstance(data, dict) and "cells" in data:
                return Diagram(data["cells"])
            if isinstance(data, dict):
                return Diagram.from_rows(data["a"], data["b"])
            return Diagram(data)
        top, bottom = text.split("/")
        return Diagram.from_rows(_parse_row(top), _parse_row(bottom))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed diagram {text!r}: {exc}") from exc


def parse_triple(text: str) -> tuple[Permutation, Partition, Partition]:
    """JSON {"sigma", "lambda", "mu"} or ``sigma;lambda;mu`` with comma-separated parts."""
    try:
        if text.startswith("{"):
            data = json.loads(text)
            return (Permutation(data["sigma"]), Partition(data.get("lambda", [])),
                    Partition(data.get("mu", [])))
        fields = text.split(";")
        if len(fields) != 3:
            raise ValueError("expected sigma;lambda;mu")
        sigma, lam, mu = (_parse_row(f) if f.strip() else [] for f in fields)
        return Permutation(sigma), Partition(lam), Partition(mu)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed triple {text!r}: {exc}") from exc


def parse_polynomial(text: str) -> MultiPoly:
    """JSON list of {a, b, c} records, or a diagram meaning its orbit sum M_D."""
    if text.startswith("["):
        try:
            return MultiPoly.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed polynomial records: {exc}") from exc
    return monomial_diagonal_symmetric(parse_diagram(text))


def _check_n(n: int | None, guard_name: str) -> int:
    if n is None:
        raise UsageError("--n is required")
    if n < 1:
        raise UsageError(f"n must be a positive integer, got {n}")
    check_guard(guard_name, n, strict=True)
    return n


# frobenius

def render_frobenius(n: int, fmt: str) -> str:
    table = frobenius_bigraded(n)
    top = comb(n, 2)
    if fmt == "text":
        return table.to_text()
    if fmt == "json":
        return _dump({"n": n, "orientation": "row = t-exponent, top row highest",
                      "blocks": table.to_json((top + 1, top + 1))})
    blocks = []
    for lam, m in table.matrices((top + 1, top + 1)).items():
        blocks.append(f"s_{lam.label()}:\n{m.render()}")
    return "\n\n".join(blocks)


def regen_golden(directory: Path, ns) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    suffix = {"text": "txt", "json": "json", "matrix": "matrix.txt"}
    for n in ns:
        for fmt in FORMATS:
            path = directory / f"frobenius_n{n}.{suffix[fmt]}"
            path.write_text(render_frobenius(n, fmt) + "\n", encoding="utf-8")
            written.append(path)
    return written


def cmd_frobenius(args) -> int:
    if args.regen:
        ns = [args.n] if args.n is not None else [1, 2, 3, 4]
        for n in ns:
            _check_n(n, "frobenius")
        for path in regen_golden(Path(args.golden_dir), ns):
            print(f"wrote {path}")
        return 0
    n = _check_n(args.n, "frobenius")
    print(render_frobenius(n, args.format))
    return 0


# verify

def cmd_verify(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(s, args.n, args.seed) for s in suites]
    if args.format == "json":
        print(_dump([{"suite": r.suite, "n": r.n, "passed": r.passed,
                      "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                                 for c in r.checks]} for r in reports]))
    else:
        print("\n".join(r.render() for r in reports))
    ok = all(r.passed for r in reports)
    return 0 if ok else 1


# diagram

def _diagram_payload(D: Diagram) -> dict:
    return {"two_line": D.two_line(), **D.to_json(), "weight": list(weight(D))}


def cmd_diagram(args) -> int:
    action = args.action
    text = _read_input(args.input)
    out: dict
    picture = None
    if action == "phi-inv":
        sigma, lam, mu = parse_triple(text)
        try:
            D = phi_inverse(sigma, lam, mu)
        except (AssertionError, ValueError) as exc:
            raise UsageError(f"invalid triple: {exc}") from exc
        out = {"sigma": list(sigma), "lambda": list(lam), "mu": list(mu),
               "diagram": _diagram_payload(D)}
        picture = render(D)
    else:
        D = parse_diagram(text)
        if action == "classify":
            sigma = classifying_permutation(D)
            out = {"diagram": _diagram_payload(D), "sigma": list(sigma),
                   "descents": list(descents(D)), "inverse": _diagram_payload(inverse(D))}
            picture = render(D)
        elif action == "compactify":
            G = compactify(D)
            out = {"diagram": _diagram_payload(D), "compact": _diagram_payload(G),
                   "sigma": list(classifying_permutation(D))}
            picture = render(G)
        elif action == "phi":
            sigma, lam, mu = phi(D)
            out = {"diagram": _diagram_payload(D), "sigma": list(sigma), "lambda": list(lam),
                   "mu": list(mu), "compact": _diagram_payload(compact_of_permutation(sigma))}
            picture = render(compact_of_permutation(sigma))
        elif action == "moves":
            strict = args.strict
            if strict:
                D = _as_strict(D)
            if args.move:
                kind, _, pos = args.move.partition(":")
                try:
                    E = apply_move(D, (kind, int(pos)), strict)
                except (MoveNotPermitted, ValueError, IndexError) as exc:
                    raise UsageError(f"move {args.move} not permitted: {exc}") from exc
                out = {"diagram": _diagram_payload(D), "move": args.move,
                       "result": _diagram_payload(E)}
                picture = render(E)
            else:
                end, trace = compact_by_moves(D, strict=strict)
                out = {"diagram": _diagram_payload(D),
                       "permitted": [f"{k}:{p}" for k, p in permitted_moves(D, strict)],
                       "trace": [f"{k}:{p}" for k, p in trace], "fixpoint": _diagram_payload(end)}
                picture = render(end)
        elif action == "strict":
            S = _as_strict(D)
            sigma, lam, mu = strict_phi(S)
            fixpoint = strict_compactify(S)
            if fixpoint != strict_compact_of_permutation(sigma):
                raise AssertionError("strict compaction disagrees with D^s_sigma")
            out = {"diagram": _diagram_payload(S), "sigma": list(sigma),
                   "strict_compact": _diagram_payload(fixpoint),
                   "lambda": list(lam), "mu": list(mu)}
            picture = render(fixpoint)
        else:  # pragma: no cover - argparse restricts the choices
            raise UsageError(f"unknown action {action}")
    if args.format == "json":
        print(_dump(out))
    else:
        print(_text_block(out))
        if picture:
            print(picture)
    return 0


def _as_strict(D: Diagram) -> StrictDiagram:
    try:
        return StrictDiagram(D.cells)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _text_block(out: dict) -> str:
    lines = []
    for key in sorted(out):
        value = out[key]
        if isinstance(value, dict) and "two_line" in value:
            value = f"{value['two_line']}  weight={tuple(value['weight'])}"
        elif isinstance(value, list):
            value = " ".join(map(str, value)) if value else "(none)"
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


# straighten

def cmd_straighten(args) -> int:
    P = parse_polynomial(_read_input(args.input))
    check_guard("straighten", P.n, strict=True)
    try:
        result = straighten(P)
    except NotDiagonallySymmetric as exc:
        raise UsageError(str(exc)) from exc
    if result.expand() != P:
        print("re-expansion differs from the input", file=sys.stderr)
        return 1
    if args.format == "json":
        print(_dump({"n": P.n, "input": P.to_json(), "terms": result.to_json()}))
    else:
        print(f"input: {P}")
        print(result.to_text())
    return 0


# hilbert

def cmd_hilbert(args) -> int:
    n = _check_n(args.n, "harmonic_span" if args.span else "hilbert")
    series = hilbert_series_check(n)
    matrix = harmonic_span_hilbert(n) if args.span else to_matrix(series)
    if args.span and matrix != to_matrix(series):
        print("derivative span disagrees with the Frobenius Hilbert series", file=sys.stderr)
        print(matrix.render())
        return 1
    if args.format == "json":
        print(_dump({"n": n, "source": "span" if args.span else "frobenius",
                     "total": matrix.total(), **matrix.to_json()}))
    elif args.format == "matrix":
        print(matrix.render())
    else:
        print(format_qt(series))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinvariants",
        description="Bigraded Frobenius characteristics, compact diagrams and straightening.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", help="Schur expansion of F_n(z; q, t)")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--regen", action="store_true", help="rewrite the golden files and exit")
    p.add_argument("--golden-dir", default=str(DEFAULT_GOLDEN_DIR))
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--n", type=int)
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diagram", help="diagram operations")
    p.add_argument("action", choices=DIAGRAM_ACTIONS)
    p.add_argument("--input", required=True,
                   help="file or literal: 'a1,a2/b1,b2', JSON, or 'sigma;lambda;mu' for phi-inv")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--move", help="with 'moves': apply one move such as left:3 or down:2")
    p.add_argument("--strict", action="store_true", help="with 'moves': use strict moves")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("straighten", help="expand a diagonally symmetric polynomial")
    p.add_argument("--input", required=True,
                   help="file or literal: JSON records [{a, b, c}] or a diagram for M_D")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("hilbert", help="bigraded Hilbert series of the coinvariant space")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--span", action="store_true",
                   help="compute from the derivative span of Delta(x)Delta(y) (n <= 3)")
    p.set_defaults(func=cmd_hilbert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
