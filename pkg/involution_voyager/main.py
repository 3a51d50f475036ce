"""
Involution Voyager Main Application

This module is the command-line entry point. It constructs the involution
families, verifies them exhaustively, runs the interpolation oracle and the
field and generator surveys, and emits machine-readable reports. Data goes to
standard output (or --output), diagnostics to standard error.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Optional, Sequence, TextIO

import sympy
from pydantic import BaseModel, ValidationError, field_validator, model_validator

from involution_voyager.config import get_config
from involution_voyager.core.families import (
    ConstructionRecord,
    FamilyId,
    all_records,
    build_record,
    expected_map,
)
from involution_voyager.core.field import FieldCtx, build_field, build_field_for_order
from involution_voyager.core.generator import GeneratorCtx, find_generator, make_generator_ctx
from involution_voyager.interfaces.dto import OutputFormat
from involution_voyager.survey.report_store import ReportStore, render_csv
from involution_voyager.survey.surveyor import survey_field, survey_generators, survey_range
from involution_voyager.utils.error_handling import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    DomainError,
    ErrorHandler,
    OutputPathError,
    VoyagerError,
)
from involution_voyager.verification.interpolation import canonical_equal, lagrange, to_sparse
from involution_voyager.verification.permutation import eval_all, two_cycles
from involution_voyager.verification.verifier import verify_record

logger = logging.getLogger("involution_voyager")

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class CliConfig(BaseModel):
    """Validated command-line request."""
    subcommand: Literal["construct", "verify", "interp", "survey", "survey-generators", "field"]
    q: Optional[int] = None
    p: Optional[int] = None
    n: Optional[int] = None
    modulus: Optional[List[int]] = None
    family: Optional[FamilyId] = None
    k: Optional[int] = None
    all: bool = False
    gamma: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON
    output: Optional[str] = None
    q_min: Optional[int] = None
    q_max: Optional[int] = None
    workers: int = 1
    oracle: bool = True
    save: bool = False

    @field_validator("family", mode="before")
    @classmethod
    def parse_family(cls, v: Any) -> Any:
        if v is None or isinstance(v, FamilyId):
            return v
        try:
            return FamilyId(str(v).strip().upper())
        except ValueError:
            raise ValueError(f"unknown family {v!r}") from None

    @field_validator("workers")
    @classmethod
    def positive_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("workers must be positive")
        return v

    @model_validator(mode="after")
    def check_field_selector(self) -> "CliConfig":
        has_q = self.q is not None
        has_pn = self.p is not None or self.n is not None
        if has_q and has_pn:
            raise ValueError("use either --q or --p/--n, not both")
        if has_pn and (self.p is None or self.n is None):
            raise ValueError("--p and --n must be given together")
        ranged = self.q_min is not None or self.q_max is not None
        if self.subcommand == "survey" and ranged and (has_q or has_pn):
            raise ValueError("survey takes either a field selector or --q-min/--q-max")
        if self.subcommand != "survey" and not (has_q or has_pn):
            raise ValueError(f"{self.subcommand} needs --q or --p/--n")
        if not (has_q or has_pn) and (self.gamma is not None or self.modulus is not None):
            raise ValueError("--gamma and --modulus need --q or --p/--n")
        if self.all and (self.family is not None or self.k is not None):
            raise ValueError("--all excludes --family and --k")
        return self

    @property
    def has_field(self) -> bool:
        return self.q is not None or self.p is not None


@dataclass
class CommandResult:
    """Everything a subcommand emits, in each output format."""
    payload: Any
    rows: List[Dict[str, Any]] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)
    passed: bool = True


def setup_logging(level: str = "INFO") -> logging.Logger:
    """
    Set up logging for the application.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)

    Returns:
        Configured logger instance
    """
    log_level = getattr(logging, level.upper())

    app_logger = logging.getLogger("involution_voyager")
    app_logger.setLevel(log_level)
    for handler in list(app_logger.handlers):
        app_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
    app_logger.addHandler(handler)

    return app_logger


def _parse_modulus(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace("[", "").replace("]", "").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"modulus must be comma-separated integers, got {text!r}")


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        argv: Argument list (defaults to sys.argv[1:])

    Returns:
        Parsed arguments
    """
    common = argparse.ArgumentParser(add_help=False)
    field_group = common.add_argument_group("Field Selection")
    field_group.add_argument("--q", type=int, help="Field order (a prime power)")
    field_group.add_argument("--p", type=int, help="Field characteristic")
    field_group.add_argument("--n", type=int, help="Extension degree")
    field_group.add_argument(
        "--modulus",
        type=_parse_modulus,
        help="Monic irreducible modulus as 'c0,c1,...,1', low degree first",
    )
    field_group.add_argument("--gamma", type=str, help="Generator override, e.g. 3 or '[1, 2]'")

    output_group = common.add_argument_group("Output")
    output_group.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Output format (default: output.format, env VOYAGER_OUTPUT_FORMAT)",
    )
    output_group.add_argument("--output", type=str, help="Write data to this file instead of stdout")
    output_group.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, help="Logging level"
    )

    selection = argparse.ArgumentParser(add_help=False)
    selection_group = selection.add_argument_group("Record Selection")
    selection_group.add_argument("--family", type=str, help="One of T1, T2, T3, S1, S2, S3")
    selection_group.add_argument("--k", type=int, help="Family parameter, reduced mod m")
    selection_group.add_argument("--all", action="store_true", help="Every family and k")

    storing = argparse.ArgumentParser(add_help=False)
    storing.add_argument(
        "--save", action="store_true", help="Also store JSON and CSV reports in output.directory"
    )

    parser = argparse.ArgumentParser(
        prog="involution-voyager",
        description="Involution Voyager - involutory permutation polynomials over finite fields",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    subparsers.add_parser(
        "construct", parents=[common, selection], help="Build family polynomials"
    )
    subparsers.add_parser(
        "verify", parents=[common, selection], help="Verify records exhaustively"
    )
    subparsers.add_parser(
        "interp", parents=[common, selection], help="Compare with Lagrange interpolation"
    )
    survey = subparsers.add_parser(
        "survey", parents=[common, storing], help="Survey one field or a range of orders"
    )
    survey.add_argument("--q-min", type=int, help="Smallest order (default: survey.q_min)")
    survey.add_argument("--q-max", type=int, help="Largest order (default: survey.q_max)")
    survey.add_argument("--workers", type=int, help="Worker threads (default: survey.max_workers)")
    survey.add_argument("--no-oracle", action="store_true", help="Skip the interpolation oracle")
    subparsers.add_parser(
        "survey-generators", parents=[common, storing], help="Compare all generators of GF(q)*"
    )
    subparsers.add_parser("field", parents=[common], help="Inspect a field")

    return parser.parse_args(argv)


def build_cli_config(args: argparse.Namespace) -> CliConfig:
    """Merge parsed flags with configuration defaults into a CliConfig."""
    settings = get_config().get_config_dto()
    survey_settings = settings.survey_settings
    return CliConfig(
        subcommand=args.subcommand,
        q=args.q,
        p=args.p,
        n=args.n,
        modulus=args.modulus,
        family=getattr(args, "family", None),
        k=getattr(args, "k", None),
        all=getattr(args, "all", False),
        gamma=args.gamma,
        format=args.format or settings.output_format,
        output=args.output,
        q_min=getattr(args, "q_min", None),
        q_max=getattr(args, "q_max", None),
        workers=getattr(args, "workers", None) or survey_settings.get("max_workers", 1),
        oracle=not getattr(args, "no_oracle", False),
        save=getattr(args, "save", False),
    )


def resolve_field(config: CliConfig, families: bool = True) -> FieldCtx:
    """
    Build the field named by --q or --p/--n.

    Raises:
        DomainError: If the selector is invalid, or families are requested over an
            unsupported field
    """
    if config.q is not None:
        ctx = build_field_for_order(config.q, config.modulus)
    else:
        ctx = build_field(config.p, config.n, config.modulus)
    if families and not ctx.supports_families:
        raise DomainError(f"q = {ctx.q} must be odd and 1 mod 3")
    return ctx


def resolve_generator(config: CliConfig, ctx: FieldCtx) -> GeneratorCtx:
    gamma = ctx.parse_element(config.gamma) if config.gamma is not None else None
    return make_generator_ctx(ctx, gamma)


def select_records(config: CliConfig, gctx: GeneratorCtx) -> List[ConstructionRecord]:
    """Records picked by --family/--k/--all; everything when nothing is picked."""
    if config.all or (config.family is None and config.k is None):
        return all_records(gctx)
    families = [config.family] if config.family is not None else list(FamilyId)
    ks = [config.k] if config.k is not None else list(range(gctx.m))
    return [build_record(family, gctx, k) for family in families for k in ks]


def _single_or_list(items: List[Any]) -> Any:
    return items[0] if len(items) == 1 else items


def run_construct(config: CliConfig) -> CommandResult:
    ctx = resolve_field(config)
    gctx = resolve_generator(config, ctx)
    records = select_records(config, gctx)
    return CommandResult(
        payload=_single_or_list([r.to_dict(ctx) for r in records]),
        rows=[
            {"q": ctx.q, "family": r.family.value, "k": r.k, "term_count": r.term_count,
             "polynomial": r.poly.format(ctx)}
            for r in records
        ],
        lines=[f"{r.label:<10} {r.poly.format(ctx)}" for r in records],
    )


def run_verify(config: CliConfig) -> CommandResult:
    ctx = resolve_field(config)
    gctx = resolve_generator(config, ctx)
    verdicts = [verify_record(r, gctx) for r in select_records(config, gctx)]
    passed = all(v.passed for v in verdicts)

    lines = []
    for v in verdicts:
        if v.passed:
            pairs = ", ".join(
                f"{ctx.format_element(a)}<->{ctx.format_element(b)}"
                for a, b in two_cycles(eval_all(ctx, v.record.poly))
            )
            lines.append(f"{v.record.label:<10} PASS  fixed={v.fixed_point_count}  swaps: {pairs}")
        else:
            witness = ctx.format_element(v.witness) if v.witness is not None else "-"
            lines.append(f"{v.record.label:<10} FAIL  {v.failed_check} (witness {witness})")
    lines.append(f"{sum(v.passed for v in verdicts)}/{len(verdicts)} passed over GF({ctx.q})")

    return CommandResult(
        payload={
            "q": ctx.q,
            "gamma": ctx.serialize(gctx.gamma),
            "passed": passed,
            "verdicts": [v.to_dict(ctx) for v in verdicts],
        },
        rows=[
            {"q": ctx.q, "family": v.record.family.value, "k": v.record.k,
             "term_count": v.term_count, "passed": v.passed}
            for v in verdicts
        ],
        lines=lines,
        passed=passed,
    )


def run_interp(config: CliConfig) -> CommandResult:
    ctx = resolve_field(config)
    gctx = resolve_generator(config, ctx)
    entries = []
    for record in select_records(config, gctx):
        recovered = to_sparse(lagrange(ctx, expected_map(record.family, gctx, record.k)))
        entries.append((record, recovered, canonical_equal(recovered, record.poly)))
    passed = all(equal for _, _, equal in entries)
    return CommandResult(
        payload=_single_or_list([
            {
                "q": ctx.q,
                "family": record.family.value,
                "k": record.k,
                "interpolated": recovered.serialize(ctx),
                "constructed": record.poly.serialize(ctx),
                "equal": equal,
            }
            for record, recovered, equal in entries
        ]),
        rows=[
            {"q": ctx.q, "family": record.family.value, "k": record.k,
             "term_count": recovered.term_count, "passed": equal}
            for record, recovered, equal in entries
        ],
        lines=[
            f"{record.label:<10} {'EQUAL' if equal else 'DIFFER'}  {recovered.format(ctx)}"
            for record, recovered, equal in entries
        ],
        passed=passed,
    )


def run_survey(config: CliConfig) -> CommandResult:
    oracle_max_q = None if config.oracle else 0
    if config.has_field:
        ctx = resolve_field(config)
        gamma = ctx.parse_element(config.gamma) if config.gamma is not None else None
        reports = [survey_field(ctx, gamma, oracle_max_q)]
        name = f"survey_q{ctx.q}"
    else:
        survey_settings = get_config().get_config_dto().survey_settings
        q_min = config.q_min if config.q_min is not None else survey_settings["q_min"]
        q_max = config.q_max if config.q_max is not None else survey_settings["q_max"]
        reports = survey_range(q_min, q_max, config.workers, oracle_max_q)
        name = f"survey_q{q_min}-{q_max}"

    rows = [row for report in reports for row in report.csv_rows()]
    result = CommandResult(
        payload=[report.to_dict() for report in reports],
        rows=rows,
        lines=[
            f"GF({r.q:<4}) {'PASS' if r.passed else 'FAIL'}  records={len(r.verdicts)}  "
            f"distinct={r.distinct_permutations}  oracle={r.oracle_checked}  "
            f"zero-slots={len(r.zero_coeff_incidents)}"
            for r in reports
        ],
        passed=all(r.passed for r in reports),
    )
    if config.save:
        _save(name, result)
    return result


def run_survey_generators(config: CliConfig) -> CommandResult:
    ctx = resolve_field(config)
    report = survey_generators(ctx)
    lines = [
        f"gamma={key:<10} polynomials={count}  "
        f"{'PASS' if report.per_generator_passed[key] else 'FAIL'}"
        for key, count in report.per_generator_counts.items()
    ]
    lines.append(f"union={report.union_count} over {len(report.generators)} generators")
    result = CommandResult(
        payload=report.to_dict(),
        rows=report.csv_rows(),
        lines=lines,
        passed=all(report.per_generator_passed.values()),
    )
    if config.save:
        _save(f"generators_q{ctx.q}", result)
    return result


def run_field(config: CliConfig) -> CommandResult:
    ctx = resolve_field(config, families=False)
    generator = find_generator(ctx)
    payload = {
        "q": ctx.q,
        "p": ctx.p,
        "n": ctx.n,
        "modulus": list(ctx.modulus) if ctx.modulus else None,
        "modulus_text": ctx.describe_modulus(),
        "m": ctx.m,
        "supports_families": ctx.supports_families,
        "generator": ctx.serialize(generator),
        "generator_count": int(sympy.totient(ctx.q - 1)),
        "group_order_factors": [list(pair) for pair in ctx.group_order_factors],
    }
    return CommandResult(
        payload=payload,
        rows=[{k: v for k, v in payload.items() if not isinstance(v, list)}],
        lines=[f"{key}: {value}" for key, value in payload.items()],
    )


HANDLERS = {
    "construct": run_construct,
    "verify": run_verify,
    "interp": run_interp,
    "survey": run_survey,
    "survey-generators": run_survey_generators,
    "field": run_field,
}


def _save(name: str, result: CommandResult) -> None:
    store = ReportStore(get_config().get_config_dto().output_directory)
    try:
        json_path = store.save_json(name, result.payload)
        csv_path = store.save_csv(name, result.rows)
    except OSError as e:
        raise OutputPathError(f"cannot save reports under {store.output_dir}: {e}") from e
    logger.info(f"Saved reports to {json_path} and {csv_path}")


def _write_output(path: str, text: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def render(result: CommandResult, output_format: OutputFormat) -> str:
    """Render a command result in the requested format."""
    if output_format is OutputFormat.CSV:
        return render_csv(result.rows)
    if output_format is OutputFormat.PRETTY:
        return "\n".join(result.lines) + "\n"
    return json.dumps(result.payload, indent=2) + "\n"


def run(config: CliConfig, out: Optional[TextIO] = None) -> int:
    """
    Serve one command.

    Args:
        config: The validated request
        out: Data stream (default: standard output)

    Returns:
        0 when every requested verification passed, 1 on a failed verdict or
        internal fault, 2 on usage or domain errors
    """
    try:
        result = HANDLERS[config.subcommand](config)
    except VoyagerError as e:
        ErrorHandler.log_error(e, {"subcommand": config.subcommand})
        return ErrorHandler.exit_code(e)

    text = render(result, config.format)
    if config.output:
        try:
            _write_output(config.output, text)
        except OSError as e:
            error = OutputPathError(f"cannot write {config.output}: {e}")
            ErrorHandler.log_error(error, {"subcommand": config.subcommand})
            return ErrorHandler.exit_code(error)
        logger.info(f"Wrote {config.format.value} output to {config.output}")
    else:
        (out or sys.stdout).write(text)

    if not result.passed:
        logger.warning("Some verifications failed")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for Involution Voyager.

    Args:
        argv: Argument list (defaults to sys.argv[1:])

    Returns:
        Exit code (0 success, 1 failed verification, 2 usage or domain error)
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        level = args.log_level or get_config().get("logging.level", "INFO")
        setup_logging(str(level))
        config = build_cli_config(args)
    except (ValidationError, ValueError) as e:
        setup_logging("INFO")
        ErrorHandler.log_error(e, {"subcommand": args.subcommand}, level=logging.ERROR)
        return EXIT_USAGE

    logger.debug(f"Running {config.subcommand}")
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
