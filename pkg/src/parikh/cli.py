"""Command-line front-end.

Every subcommand prints deterministic text by default and structured JSON
with ``--output json``; emitted matrices and normal forms parse back to
equal values.  Exit status: 0 on success, 1 on a computation error, 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .equivalence import (
    conjecture_scan,
    equivalence_class,
    scan_csv_lines,
    scan_json_lines,
)
from .errors import NotAParikhMatrix, ParikhError
from .matrices import OrderedAlphabet, UnitriangularMatrix, find_witness, parikh_matrix
from .matrix_forms import (
    binary_decomposition_search,
    is_primitive,
    matrix_normal_forms,
)
from .powers import (
    binary_power_is_parikh,
    matrix_power,
    matrix_root,
    min_power_to_parikh,
)
from .verify import SUITES, run_suites
from .word_forms import maximal_words, word_normal_form
from .words import DEFAULT_ENUM_BOUND, count_subword, is_square_free

ENV_BOUND = "PARIKH_ENUM_BOUND"


class UsageError(Exception):
    pass


def _default_bound() -> int:
    raw = os.environ.get(ENV_BOUND)
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"bad {ENV_BOUND} value {raw!r}") from None
    if value < 1:
        raise UsageError(f"{ENV_BOUND} must be positive")
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument(
        "--enum-bound",
        type=int,
        default=None,
        help=f"word-length cap for enumerations (default {DEFAULT_ENUM_BOUND}, env {ENV_BOUND})",
    )

    parser = argparse.ArgumentParser(
        prog="parikh",
        description="Word-image matrices: counting, powers, roots, classes, normal forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="scattered-subword count")
    p.add_argument("--alphabet", required=True)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-v", "--pattern", required=True)

    p = sub.add_parser("matrix", parents=[common], help="matrix of a word")
    p.add_argument("--alphabet", required=True)
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser("power", parents=[common], help="closed-form matrix power")
    p.add_argument("-M", "--matrix", required=True)
    p.add_argument("-m", "--exponent", type=int, required=True)

    p = sub.add_parser("root", parents=[common], help="exact matrix root, if any")
    p.add_argument("-M", "--matrix", required=True)
    p.add_argument("-m", "--exponent", type=int, required=True)

    p = sub.add_parser(
        "power-parikh", parents=[common], help="is the m-th power the image of a word?"
    )
    p.add_argument("-M", "--matrix", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-m", "--exponent", type=int)
    group.add_argument("--min", action="store_true", help="least qualifying exponent")

    p = sub.add_parser("class", parents=[common], help="all words sharing the word's matrix")
    p.add_argument("--alphabet", required=True)
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser("normalize-word", parents=[common], help="normal form of a word")
    p.add_argument("--alphabet", required=True)
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser(
        "normalize-matrix", parents=[common], help="all normal forms of a matrix"
    )
    p.add_argument("--alphabet", required=True)
    p.add_argument("-M", "--matrix", required=True)

    p = sub.add_parser(
        "decompose",
        parents=[common],
        help="3x3 stage search: all solutions of M = A * B**n at maximal n",
    )
    p.add_argument("-M", "--matrix", required=True)
    p.add_argument("--mode", choices=("faithful", "complete"), default="complete")

    p = sub.add_parser(
        "primitive", parents=[common], help="primitivity plus witness square-freeness"
    )
    p.add_argument("--alphabet", required=True)
    p.add_argument("-M", "--matrix", required=True)

    p = sub.add_parser("maximal", parents=[common], help="maximal words of the word's class")
    p.add_argument("--alphabet", required=True)
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser(
        "scan-conjecture",
        parents=[common],
        help="scan class sizes of powers for the equality pattern",
    )
    p.add_argument("--alphabet", required=True)
    p.add_argument("-m", "--exponent", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument(
        "--suite",
        default="all",
        help="suite name or 'all': " + ", ".join(SUITES),
    )
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _emit(args, text_lines: list[str], json_obj) -> None:
    if args.output == "json":
        payload = json.dumps(json_obj, indent=2, sort_keys=True)
    else:
        payload = "\n".join(text_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _emit_raw(args, lines: list[str]) -> None:
    payload = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _alphabet(args) -> OrderedAlphabet:
    try:
        return OrderedAlphabet.parse(args.alphabet)
    except ValueError as exc:
        raise UsageError(str(exc))


def _matrix(args) -> UnitriangularMatrix:
    try:
        return UnitriangularMatrix.parse(args.matrix)
    except ValueError as exc:
        raise UsageError(str(exc))


def _run(args, bound: int) -> int:
    cmd = args.command

    if cmd == "count":
        alphabet = _alphabet(args)
        alphabet.check_word(args.word)
        alphabet.check_word(args.pattern)
        value = count_subword(args.word, args.pattern)
        _emit(args, [str(value)], {"word": args.word, "pattern": args.pattern, "count": value})
        return 0

    if cmd == "matrix":
        alphabet = _alphabet(args)
        matrix = parikh_matrix(alphabet, alphabet.check_word(args.word))
        _emit(args, [matrix.to_text()], {"word": args.word, "matrix": matrix.to_json_dict()})
        return 0

    if cmd == "power":
        matrix = _matrix(args)
        result = matrix_power(matrix, args.exponent)
        _emit(args, [result.to_text()], {"matrix": result.to_json_dict()})
        return 0

    if cmd == "root":
        matrix = _matrix(args)
        result = matrix_root(matrix, args.exponent)
        if result is None:
            _emit(args, ["none"], {"root": None})
        else:
            _emit(args, [result.to_text()], {"root": result.to_json_dict()})
        return 0

    if cmd == "power-parikh":
        matrix = _matrix(args)
        if args.min:
            answer = min_power_to_parikh(matrix)
            if answer is None:
                _emit(args, ["none"], {"min_exponent": None, "power_is_identity": False})
            else:
                note = " (power is the identity)" if answer.power_is_identity else ""
                _emit(
                    args,
                    [f"{answer.exponent}{note}"],
                    {
                        "min_exponent": answer.exponent,
                        "power_is_identity": answer.power_is_identity,
                    },
                )
        else:
            value = binary_power_is_parikh(matrix, args.exponent)
            _emit(args, [str(value).lower()], {"exponent": args.exponent, "is_parikh": value})
        return 0

    if cmd == "class":
        alphabet = _alphabet(args)
        cls = equivalence_class(alphabet, alphabet.check_word(args.word), bound)
        _emit(
            args,
            list(cls.members),
            {"matrix": cls.matrix.to_json_dict(), "members": list(cls.members)},
        )
        return 0

    if cmd == "normalize-word":
        alphabet = _alphabet(args)
        alphabet.check_word(args.word)
        form = word_normal_form(args.word)
        _emit(args, [form.render()], form.to_json_dict())
        return 0

    if cmd == "normalize-matrix":
        alphabet = _alphabet(args)
        forms = matrix_normal_forms(alphabet, _matrix(args), bound)
        _emit(
            args,
            [f.render() for f in forms],
            {"forms": [f.to_json_dict() for f in forms]},
        )
        return 0

    if cmd == "decompose":
        matrix = _matrix(args)
        solutions = binary_decomposition_search(matrix, mode=args.mode)
        _emit(
            args,
            [
                f"n={s.n} p={s.p} q={s.q} r={s.r} x={s.x} y={s.y} z={s.z}"
                for s in solutions
            ],
            {"solutions": [s._asdict() for s in solutions]},
        )
        return 0

    if cmd == "primitive":
        alphabet = _alphabet(args)
        matrix = _matrix(args)
        primitive = is_primitive(alphabet, matrix, bound)
        witness = find_witness(alphabet, matrix, bound)
        if witness is None:
            raise NotAParikhMatrix(f"{matrix.to_text()} is not the image of any word")
        cls = equivalence_class(alphabet, witness, bound)
        witnesses = [{"word": w, "square_free": is_square_free(w)} for w in cls.members]
        lines = [str(primitive).lower()] + [
            f"{item['word']} square_free={str(item['square_free']).lower()}"
            for item in witnesses
        ]
        _emit(args, lines, {"primitive": primitive, "witnesses": witnesses})
        return 0

    if cmd == "maximal":
        alphabet = _alphabet(args)
        cls = equivalence_class(alphabet, alphabet.check_word(args.word), bound)
        words = maximal_words(cls)
        _emit(args, list(words), {"maximal": list(words)})
        return 0

    if cmd == "scan-conjecture":
        alphabet = _alphabet(args)
        records = conjecture_scan(alphabet, args.exponent, args.max_len, bound)
        if args.output == "json":
            _emit_raw(args, scan_json_lines(records))
        else:
            _emit_raw(args, scan_csv_lines(records))
        return 0

    if cmd == "verify":
        names = list(SUITES) if args.suite == "all" else [args.suite]
        if any(name not in SUITES for name in names):
            raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
        results = run_suites(names, max_len=args.max_len, bound=bound, seed=args.seed)
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            suffix = f" ({r.checks} checks)" if r.passed else f": {r.detail}"
            lines.append(f"{status} {r.name}{suffix}")
        _emit(
            args,
            lines,
            {
                "suites": [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "checks": r.checks,
                        "detail": r.detail,
                    }
                    for r in results
                ]
            },
        )
        return 0 if all(r.passed for r in results) else 1

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        bound = args.enum_bound if args.enum_bound is not None else _default_bound()
        if bound < 1:
            raise UsageError("--enum-bound must be positive")
        return _run(args, bound)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParikhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
