"""
Command Line: every toolkit operation as a subcommand
Exit codes: 0 success or true, 1 a check failed, 2 malformed input
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

from .classification import check_twist_spectrum, classify
from .config import LOG_LEVELS, configure_logging
from .errors import DegenerateStep, HypothesisViolation, InputFormatError, ToolkitError
from .exact_linalg import char_poly, format_scalar, rational_eigen, render_poly
from .formats import dumps, matrix_to_json, read_matrix, read_tuple
from .generators import HomologyClass, is_symplectic, twist_matrix
from .lemma_solvers import block_constraint_certificate, solve_2x2_braid_centralizer, zero_space_checks
from .normalize import ConjugateToStandard, Trivial, normalize, recognize, verify_certificate
from .relations import check_lantern, check_lantern_rewritten, relation_profile
from .words import evaluate_word, parse_word

logger = logging.getLogger(__name__)

OK, FAILED, MALFORMED = 0, 1, 2


def _mark(ok: bool) -> str:
    return "✅" if ok else "❌"


def _banner(title: str) -> None:
    print(title)
    print("=" * 40)


def cmd_gen(args: argparse.Namespace) -> int:
    print(dumps(matrix_to_json(twist_matrix(args.g, args.i, args.kind, args.m))))
    return OK


def cmd_eval(args: argparse.Namespace) -> int:
    word = parse_word(args.word, args.g)
    matrix = evaluate_word(word)
    symplectic = is_symplectic(matrix, args.g)
    print(matrix)
    print(f"symplectic: {_mark(symplectic)}")
    return OK if symplectic else FAILED


def cmd_verify_relations(args: argparse.Namespace) -> int:
    report = relation_profile(read_tuple(args.file))
    _banner(f"Relation profile (g={report.g})")
    print(f"pairs checked: {report.checked}")
    for violation in report.violations:
        print(f"❌ {violation}")
    print(f"all relations hold: {_mark(report.ok)}")
    return OK if report.ok else FAILED


def cmd_normalize(args: argparse.Namespace) -> int:
    t = read_tuple(args.file)
    try:
        result = normalize(t)
    except (HypothesisViolation, DegenerateStep) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return FAILED
    verified = verify_certificate(t, result.P)
    payload = dumps(matrix_to_json(result.P))
    if args.out:
        try:
            Path(args.out).write_text(payload + "\n", encoding="utf-8")
        except OSError as exc:
            raise InputFormatError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
        print(f"P written to {args.out}")
    else:
        print(payload)
    print(f"P^-1·L·P equals the standard generators: {_mark(verified)}", file=sys.stderr)
    return OK if verified else FAILED


def cmd_recognize(args: argparse.Namespace) -> int:
    verdict = recognize(read_tuple(args.file))
    print(verdict.kind)
    if isinstance(verdict, ConjugateToStandard):
        print(dumps(matrix_to_json(verdict.P)))
    elif not isinstance(verdict, Trivial):
        print(f"reason: {verdict.reason}")
        return FAILED
    return OK


def cmd_classify(args: argparse.Namespace) -> int:
    result = classify(args.g, args.n)
    _banner(f"Homomorphisms Mod(S_{args.g}) -> GL({args.n}, C)")
    for verdict in result.verdicts:
        print(f"• {verdict}")
    return OK


def cmd_charpoly(args: argparse.Namespace) -> int:
    matrix = read_matrix(args.file)
    print(render_poly(char_poly(matrix)))
    eigen = rational_eigen(matrix)
    for value, mult in eigen.eigenvalues:
        print(f"eigenvalue {format_scalar(value)} with multiplicity {mult}")
    if not eigen.splits:
        print(f"residual: {render_poly(eigen.residual)}")
    return OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    report = check_twist_spectrum(read_matrix(args.file), args.g)
    _banner(f"Twist spectrum (g={report.g}, m={report.m})")
    if not report.checks:
        print("no constraint applies")
    for check in report.checks:
        mark = "❔" if check.holds is None else _mark(check.holds)
        print(f"{mark} {check.name}: {check.detail}")
    return OK if report.ok else FAILED


def _solve_u() -> int:
    solution, cert = solve_2x2_braid_centralizer()
    _banner("X commutes with U and braids with Û")
    print(f"linear stage: X = a·I + b·E12, b = {render_poly(cert.substitution)}")
    for equation in cert.equations:
        print(f"  {render_poly(equation)} = 0")
    print(f"common factor: {render_poly(cert.common_factor)}")
    print(f"elimination ideal: ({render_poly(cert.elimination)})")
    print("rational roots: " + ", ".join(format_scalar(r) for r, _ in cert.roots))
    print(f"residual: {render_poly(cert.residual)}")
    for root, reason in cert.rejected:
        print(f"rejected a = {format_scalar(root)}: {reason}")
    print(solution)
    print(f"unique: {_mark(cert.unique)}")
    return OK if cert.unique else FAILED


def _solve_block(role: str, k: int, g: int) -> int:
    cert = block_constraint_certificate(g, k, role)
    expected = twist_matrix(g, k, role)
    _banner(f"Block system g={g} k={k} role={role}")
    print(f"linear stage dimension: {cert.linear_dimension} (expected {4 + g - 1})")
    print(f"off-diagonal blocks vanish: {_mark(cert.off_diagonal_zero)}")
    print(f"complement block-scalar: {_mark(cert.complement_scalar_blocks)}")
    print(cert.solution)
    ok = cert.solution == expected and cert.block.unique
    print(f"X = {role.upper()}_{k}: {_mark(ok)}")
    return OK if ok else FAILED


def _zero_spaces(g: int, cols: int, generators: str) -> int:
    report = zero_space_checks(g, (2 * g, cols), generators)
    _banner(f"Fixed spaces g={g}, X is {2 * g}x{cols} ({generators})")
    print(f"right-fixed: {report.right_fixed}")
    print(f"left-fixed: {report.left_fixed}")
    print(f"commutant: {report.commutant}")
    print(f"matches {report.expected}: {_mark(report.holds)}")
    return OK if report.holds else FAILED


def cmd_solve_lemma(args: argparse.Namespace) -> int:
    target, rest = args.target, args.rest
    if target == "X=U" and not rest:
        return _solve_u()
    if target in ("X=A", "X=B") and len(rest) == 2:
        return _solve_block(target[-1].lower(), _int(rest[0], "k"), _int(rest[1], "g"))
    if target == "zero-spaces" and len(rest) == 1:
        return _zero_spaces(_int(rest[0], "g"), args.cols, args.generators)
    raise InputFormatError("expected X=U, X=A k g, X=B k g or zero-spaces g", "solve-lemma")


def cmd_lantern(args: argparse.Namespace) -> int:
    try:
        classes = [HomologyClass.parse(text, args.g) for text in args.classes]
    except ValueError as exc:
        raise InputFormatError(str(exc), "classes") from exc
    holds = check_lantern(classes)
    rewritten = check_lantern_rewritten(classes)
    print(f"lantern: {str(holds).lower()}")
    print(f"rewritten lantern: {str(rewritten).lower()}")
    return OK if holds else FAILED


def _int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputFormatError(f"not an integer: {text!r}", name) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symplectic-rigidity",
        description="Exact computations with twist matrices and low-dimensional representations",
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, default=None, help="override SYMPLECTIC_LOG_LEVEL"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        return p

    p = command("gen", cmd_gen, "print a twist matrix as JSON")
    p.add_argument("g", type=int)
    p.add_argument("i", type=int)
    p.add_argument("kind", choices=["a", "b"])
    p.add_argument("m", type=int, nargs="?")

    p = command("eval", cmd_eval, "evaluate a twist word")
    p.add_argument("g", type=int)
    p.add_argument("word")

    p = command("verify-relations", cmd_verify_relations, "check braid and commutation relations")
    p.add_argument("file")

    p = command("normalize", cmd_normalize, "conjugate a tuple to the standard generators")
    p.add_argument("file")
    p.add_argument("--out", help="write P as JSON to this file")

    p = command("recognize", cmd_recognize, "trivial, conjugate to standard, or unrecognized")
    p.add_argument("file")

    p = command("classify", cmd_classify, "threshold statements for (g, n)")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)

    p = command("charpoly", cmd_charpoly, "characteristic polynomial and rational eigenvalues")
    p.add_argument("file")

    p = command("spectrum", cmd_spectrum, "spectral constraints on a single twist image")
    p.add_argument("g", type=int)
    p.add_argument("file")

    p = command("solve-lemma", cmd_solve_lemma, "X=U | X=A k g | X=B k g | zero-spaces g")
    p.add_argument("target")
    p.add_argument("rest", nargs="*")
    p.add_argument("--cols", type=int, default=2, help="columns of X for zero-spaces")
    p.add_argument("--generators", choices=["both", "a_only", "b_only"], default="both")

    p = command("lantern", cmd_lantern, "check the lantern relation for seven classes")
    p.add_argument("g", type=int)
    p.add_argument("classes", nargs=7)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.log_level)
        logger.debug("running %s", args.command)
        return args.handler(args)
    except ToolkitError as exc:
        # failed hypotheses outside normalize are still a failed check
        if isinstance(exc, (HypothesisViolation, DegenerateStep)):
            print(f"❌ {exc}", file=sys.stderr)
            return FAILED
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
