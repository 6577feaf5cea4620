#!/usr/bin/env python3
"""
Command-line front end for the supersingular Weil polynomial tables
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, NoReturn, Optional, Sequence

from pydantic import BaseModel

from config import settings
from schemas import (
    ClassificationOut,
    ClassOut,
    DiscrepancyKind,
    DiscrepancyOut,
    DiscrepancyReportOut,
    EnumerationOut,
    ErrorOut,
    FactorOut,
    FamilyMemberOut,
    FamilyOut,
    FamilyScanOut,
    LocalDataOut,
    MinPolyOut,
    ModTestOut,
    ModTestVerdict,
    OutputFormat,
    PointCountsOut,
    PrimePowerOut,
    ResidualOut,
    VerificationOut,
)
from services import (
    ConsistencyError,
    CurveAS,
    DiscrepancyReport,
    InconsistentCountsError,
    InvalidInputError,
    IsogenyClass,
    PolyExprSyntaxError,
    PrimePower,
    RefusalError,
    TemplateError,
    Verdict,
    binary_field,
    charpoly_from_counts,
    check_field_bits,
    classify_polynomial,
    coeffs_from_text,
    count_points_through,
    dimension,
    enumerate_simple_ss,
    family_scan,
    min_poly,
    mod35_no_integer_root,
    parse_modulus,
    parse_poly_expr,
    verify_paper_tables,
    weil_number,
)
from services.papercheck import ZQPoly
from utils import render

logger = logging.getLogger("ssweil.cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_REJECTED = 2
EXIT_USAGE = 64
EXIT_REFUSED = 65
EXIT_INTERNAL = 70


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CommandResult:
    model: BaseModel
    exit_code: int = EXIT_OK
    message: str = ""


# ------------------------------------------------------------------ Mapping
def _map_prime_power(q: PrimePower) -> PrimePowerOut:
    return PrimePowerOut(p=q.p, n=q.n)


def _map_class(cls: IsogenyClass) -> ClassOut:
    return ClassOut(
        h=list(cls.h.coeffs),
        e=cls.e,
        g=cls.g,
        P=list(cls.P.coeffs),
        order_L=cls.order,
        k=cls.k,
        m=cls.m,
        local=LocalDataOut(
            d=cls.splitting.d,
            r=cls.splitting.r,
            invariant=str(cls.invariant),
            has_real_place=cls.splitting.has_real_place,
        ),
    )


def _map_report(report: DiscrepancyReport) -> DiscrepancyReportOut:
    return DiscrepancyReportOut(
        q=_map_prime_power(report.q),
        g=report.g,
        ok=report.ok,
        matched=report.matched,
        missing_from_enumeration=[
            DiscrepancyOut(
                kind=DiscrepancyKind.MISSING_FROM_ENUMERATION,
                P=list(entry.P.coeffs),
                template_key=entry.template_key,
                detail=entry.source,
            )
            for entry in report.missing_from_enumeration
        ],
        missing_from_paper=[
            DiscrepancyOut(
                kind=DiscrepancyKind.MISSING_FROM_PAPER,
                P=list(entry.isogeny_class.P.coeffs),
                detail=(
                    f"e={entry.isogeny_class.e} order_L={entry.isogeny_class.order} "
                    f"root_check={entry.root_check}"
                ),
            )
            for entry in report.missing_from_paper
        ],
        refuted=[
            DiscrepancyOut(
                kind=DiscrepancyKind.REFUTED,
                P=list(entry.P.coeffs),
                template_key=entry.template_key,
                related=list(entry.root.coeffs) if entry.root is not None else None,
                detail=f"{entry.note} (square root: e={entry.root_e}, g={entry.root_g})",
            )
            for entry in report.refuted
        ],
        errata=[
            DiscrepancyOut(
                kind=DiscrepancyKind.ERRATUM,
                P=list(entry.corrected.coeffs),
                template_key=entry.template_key,
                related=list(entry.printed.coeffs),
                detail=entry.note,
            )
            for entry in report.errata
        ],
    )


# ------------------------------------------------------------------ Commands
def cmd_enumerate(args: argparse.Namespace) -> CommandResult:
    q = PrimePower(args.p, args.n)
    result = enumerate_simple_ss(
        q, args.g, n_jobs=args.threads, cross_check_limit=settings.BRUTE_STABILIZER_MAX_UNITS
    )
    return CommandResult(
        EnumerationOut(
            q=_map_prime_power(q),
            g=result.g,
            classes=[_map_class(cls) for cls in result.classes],
            scanned_orders=list(result.scanned_orders),
        )
    )


def cmd_dim(args: argparse.Namespace) -> CommandResult:
    q = PrimePower(args.p, args.n)
    P = coeffs_from_text(args.poly)
    result = classify_polynomial(
        P, q, n_jobs=args.threads, cross_check_limit=settings.BRUTE_STABILIZER_MAX_UNITS
    )
    if not result.supersingular:
        raise InvalidInputError(f"{args.poly} is not a supersingular Weil {q.q}-polynomial")
    return CommandResult(
        ClassificationOut(
            q=_map_prime_power(q),
            P=list(P.coeffs),
            g=result.g,
            supersingular=True,
            simple=result.simple,
            realizable=result.realizable,
            root_orders=list(result.root_orders or ()),
            factors=[
                FactorOut(
                    multiplicity=f.multiplicity,
                    realizable=f.realizable,
                    isogeny_class=_map_class(f.isogeny_class),
                )
                for f in result.factors
            ],
        )
    )


def cmd_minpoly(args: argparse.Namespace) -> CommandResult:
    q = PrimePower(args.p, args.n)
    cls = dimension(min_poly(weil_number(q, args.order, args.exp)), q)
    return CommandResult(MinPolyOut(q=_map_prime_power(q), isogeny_class=_map_class(cls)))


def cmd_verify_paper(args: argparse.Namespace) -> CommandResult:
    q_list = [PrimePower(p, n) for p in args.primes for n in args.n]
    reports = verify_paper_tables(q_list, args.g, n_jobs=args.threads, root_tolerance=settings.ROOT_TOLERANCE)
    model = VerificationOut(ok=all(r.ok for r in reports), reports=[_map_report(r) for r in reports])
    if model.ok:
        return CommandResult(model)
    failing = sum(1 for r in reports if not r.ok)
    return CommandResult(model, EXIT_NEGATIVE, f"{failing} of {len(reports)} tables disagree with the enumeration")


def cmd_modtest(args: argparse.Namespace) -> CommandResult:
    f = ZQPoly.from_expr(parse_poly_expr(args.poly))
    verdict = mod35_no_integer_root(f)
    model = ModTestOut(poly=args.poly, verdict=ModTestVerdict(verdict.value))
    if verdict is Verdict.PROVEN_NO_ROOT:
        return CommandResult(model)
    return CommandResult(model, EXIT_NEGATIVE, f"{args.poly}: {verdict.value}")


def cmd_families(args: argparse.Namespace) -> CommandResult:
    report = family_scan(args.primes, args.n, args.g, n_jobs=args.threads)
    return CommandResult(
        FamilyScanOut(
            g=report.g,
            families=[
                FamilyOut(
                    p=family.p,
                    multipliers=list(family.multipliers),
                    formula=family.formula,
                    template_key=family.template_key,
                    members=[FamilyMemberOut(n=m.n, sign=m.sign, P=list(m.P.coeffs)) for m in family.members],
                )
                for family in report.families
            ],
            residuals=[ResidualOut(p=p, n=n, P=list(P.coeffs)) for p, n, P in report.residuals],
        )
    )


def cmd_count_curve(args: argparse.Namespace) -> CommandResult:
    if args.p != 2:
        raise InvalidInputError("Artin-Schreier curves y^2 + y = f(x) need characteristic 2")
    check_field_bits(args.n, args.depth or 1, settings.MAX_FIELD_BITS)
    if args.modulus is not None:
        modulus_bits = args.modulus
    elif args.n == 5:
        modulus_bits = settings.DEFAULT_F32_MODULUS
    else:
        modulus_bits = None
    field = binary_field(args.n, parse_modulus(modulus_bits) if modulus_bits else None)
    alpha = field.pow(field.primitive_element, args.generator)
    curve = CurveAS.from_expr(parse_poly_expr(args.f), field, alpha)
    depth = args.depth if args.depth is not None else curve.genus
    counts = count_points_through(curve, depth, max_bits=settings.MAX_FIELD_BITS)
    P = None
    if curve.genus and depth >= curve.genus:
        P = charpoly_from_counts(field.size, curve.genus, counts.counts[: curve.genus])
    logger.info("curve %s over GF(%s): counts %s", args.f, field.size, counts.counts)
    return CommandResult(
        PointCountsOut(
            q=field.size,
            f=args.f,
            modulus=format(field.modulus, "b"),
            generator_exponent=args.generator,
            genus=curve.genus,
            counts=list(counts.counts),
            P=list(P.coeffs) if P is not None else None,
        )
    )


# ------------------------------------------------------------------ Parser
def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.JSON)
    common.add_argument("--threads", type=int, default=settings.THREADS, help="joblib n_jobs (-1: all cores)")

    parser = _Parser(prog="ssweil", description="Supersingular Weil polynomials and Honda-Tate data")
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="simple supersingular classes of dimension g")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("dim", parents=[common], help="resolve P into simple classes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True, help="ascending coefficients C0,C1,...,1")
    p.set_defaults(handler=cmd_dim)

    p = sub.add_parser("minpoly", parents=[common], help="class of sqrt(q) * zeta_L^k")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--exp", type=int, required=True)
    p.set_defaults(handler=cmd_minpoly)

    p = sub.add_parser("verify-paper", parents=[common], help="compare the published tables with the enumeration")
    p.add_argument("--g", type=_int_list, required=True)
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--n", type=_int_list, required=True)
    p.set_defaults(handler=cmd_verify_paper)

    p = sub.add_parser("modtest", parents=[common], help="mod 3 / mod 5 no-integer-root test for f(z, q)")
    p.add_argument("--poly", required=True)
    p.set_defaults(handler=cmd_modtest)

    p = sub.add_parser("families", parents=[common], help="group classes across q into families")
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(handler=cmd_families)

    p = sub.add_parser("count-curve", parents=[common], help="point counts of y^2 + y = f(x)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="w in q = 2^w")
    p.add_argument("--f", required=True, help="f(x), with a for the generator t^J")
    p.add_argument("--modulus", default=None, help="field modulus bits, e.g. 100101")
    p.add_argument("--depth", type=int, default=None, help="number of counts (default: genus)")
    p.add_argument("--generator", type=int, default=1, help="a = t^J")
    p.set_defaults(handler=cmd_count_curve)
    return parser


# ------------------------------------------------------------------ Entry point
_EXIT_CODES: Dict[type, int] = {
    UsageError: EXIT_USAGE,
    PolyExprSyntaxError: EXIT_USAGE,
    RefusalError: EXIT_REFUSED,
    InvalidInputError: EXIT_REJECTED,
    TemplateError: EXIT_REJECTED,
    InconsistentCountsError: EXIT_REJECTED,
    ConsistencyError: EXIT_INTERNAL,
}


def _fail(exc: Exception, fmt: OutputFormat) -> int:
    code = next(c for t, c in _EXIT_CODES.items() if isinstance(exc, t))
    print(f"error: {exc}", file=sys.stderr)
    if fmt is OutputFormat.JSON:
        error = ErrorOut(error=type(exc).__name__, message=str(exc), exit_code=code)
        if isinstance(exc, PolyExprSyntaxError):
            error.offset = exc.offset
            error.expected = list(exc.expected)
        print(render(error, fmt))
    return code


def _wants_json(argv: Sequence[str]) -> bool:
    for i, token in enumerate(argv):
        if token == "--format" and i + 1 < len(argv):
            return argv[i + 1] == OutputFormat.JSON.value
        if token.startswith("--format="):
            return token.split("=", 1)[1] == OutputFormat.JSON.value
    return True


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(exc, OutputFormat.JSON if _wants_json(argv) else OutputFormat.CSV)

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else settings.LOG_LEVEL,
        format="%(levelname)s %(name)s: %(message)s",
    )
    handler: Callable[[argparse.Namespace], CommandResult] = args.handler
    try:
        result = handler(args)
    except tuple(_EXIT_CODES) as exc:
        return _fail(exc, args.format)

    if result.exit_code == EXIT_OK:
        print(render(result.model, args.format))
        return EXIT_OK
    print(result.message, file=sys.stderr)
    print(render(result.model, OutputFormat.MD if args.format is OutputFormat.JSON else args.format), file=sys.stderr)
    if args.format is OutputFormat.JSON:
        print(render(ErrorOut(error="NegativeResult", message=result.message, exit_code=result.exit_code), args.format))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
