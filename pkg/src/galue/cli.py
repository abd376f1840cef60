"""``verify`` command: run a suite of identity checks and write a report."""
from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from .config import SuiteConfig, load_config, load_default_config, with_overrides
from .errors import ConfigError, IoError
from .identities import IdentityReport, Status, verify_case
from .report import emit_report, render

log = logging.getLogger("galue")

EXIT_OK = 0
EXIT_POLICY = 1
EXIT_CONFIG = 2
EXIT_INFRA = 3


def _verify(args) -> IdentityReport:
    case, tol, quad_tol = args
    return verify_case(case, tol, quad_tol)


def run_suite(config: SuiteConfig) -> List[IdentityReport]:
    """Verify every expanded case; order follows the configuration."""
    cases = config.expand()
    jobs = [(case, config.tol, config.quad_tol) for case in cases]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(_verify, jobs, chunksize=4))
    return [_verify(j) for j in jobs]


def exit_status(reports: Sequence[IdentityReport], policy: str) -> int:
    if policy == "never":
        return EXIT_OK
    if policy == "derived_discrepant":
        bad = any(r.status_derived is not Status.CONFIRMED for r in reports)
    elif policy == "any_discrepant":
        bad = any(r.status_derived is not Status.CONFIRMED or r.status_printed is not Status.CONFIRMED
                  for r in reports)
    else:
        raise ValueError(f"unknown fail_on policy {policy!r}")
    return EXIT_POLICY if bad else EXIT_OK


def report_meta(config: SuiteConfig) -> dict:
    return {"tol": config.tol, "quad_tol": config.quad_tol, "seed": config.seed}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Check the unified Struve-function integrals against quadrature.",
    )
    parser.add_argument("--config", help="suite file (YAML); defaults to the bundled full suite")
    parser.add_argument("--only", action="append", default=[], metavar="CASE_ID",
                        help="restrict to a case id (repeatable): T1..T4, C31..C34, BASE_OBER, BASE_LT")
    parser.add_argument("--tol", type=float, help="confirmation tolerance (relative)")
    parser.add_argument("--quad-tol", type=float, help="quadrature tolerance (default tol/100)")
    parser.add_argument("--format", choices=["json", "csv", "md", "markdown"], help="report format")
    parser.add_argument("--out", help="output path; '-' or absent writes to stdout")
    parser.add_argument("--seed", type=int, help="seed for sampled selectors")
    parser.add_argument("--fail-on", choices=["derived_discrepant", "any_discrepant", "never"])
    parser.add_argument("--jobs", type=int, help="worker processes")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        config = load_config(args.config) if args.config else load_default_config()
        config = with_overrides(
            config, only=args.only, tol=args.tol, quad_tol=args.quad_tol,
            output_format=args.format, output_path=args.out, seed=args.seed,
            fail_on=args.fail_on, jobs=args.jobs,
        )
    except ConfigError as exc:
        print(f"verify: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        reports = run_suite(config)
        meta = report_meta(config)
        if config.output_path in (None, "-"):
            sys.stdout.write(render(reports, config.output_format, meta))
        else:
            emit_report(reports, config.output_format, config.output_path, meta)
            log.info("wrote %d reports to %s", len(reports), config.output_path)
    except IoError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_INFRA
    except Exception as exc:  # noqa: BLE001 - anything here is an infrastructure failure
        print(f"verify: infrastructure error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INFRA
    return exit_status(reports, config.fail_on)


if __name__ == "__main__":
    sys.exit(main())
