"""
Full verification run for the explanation engine.

Orchestrates:
1. Bundled scenario queries
2. AGM postulate reports for both revision operators
3. The five theorem harnesses

"""
import sys
from datetime import datetime
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from config import OPERATOR_NAMES, get_config  # noqa: E402
from src.epistemic.postulates import check_agm_postulates  # noqa: E402
from src.errors import EngineError, describe_error  # noqa: E402
from src.oracle.theorems import bundled_scenarios, verify_all  # noqa: E402
from src.scenario.queries import evaluate_queries  # noqa: E402
from src.utils.logger import get_default_log_file, setup_logger  # noqa: E402


log_file = get_default_log_file("verify_all")
logger = setup_logger(__name__, log_file=log_file, level="INFO")


def main() -> int:

    start_time = datetime.now()
    logger.info("=" * 80)
    logger.info("Starting full verification run")
    logger.info("=" * 80)

    failures = []

    try:
        config = get_config()
        logger.info(f"Fixtures: {config.fixtures_dir}")
        logger.info(
            f"Bounds: vocabulary {config.oracle.vocab_size}, literals {config.oracle.max_literals}, "
            f"sequences {config.oracle.max_seq_len}"
        )

        scenarios = bundled_scenarios(config.fixtures_dir)

        logger.info("")
        logger.info("-" * 80)
        logger.info("Scenario queries")
        logger.info("-" * 80)
        for scenario in scenarios:
            frame = evaluate_queries(scenario)
            mismatches = int((~frame["ok"]).sum())
            logger.info(f"{scenario.source}: {len(frame)} queries, {mismatches} mismatches")
            if mismatches:
                failures.append(f"queries in {scenario.source}")

        logger.info("")
        logger.info("-" * 80)
        logger.info("AGM postulates")
        logger.info("-" * 80)
        for operator in OPERATOR_NAMES:
            report = check_agm_postulates(operator, config.oracle.postulate_vocab)
            for row in report.to_frame().itertuples(index=False):
                status = "pass" if row.passed else f"{row.counterexamples} counterexamples"
                logger.info(f"{operator:<12} {row.postulate:<15} {status}")
            # Only Dalal is expected to satisfy every core postulate.
            if operator == "dalal" and not report.core_passed:
                failures.append("dalal core postulates")

        logger.info("")
        logger.info("-" * 80)
        logger.info("Theorem harnesses")
        logger.info("-" * 80)
        for report in verify_all(scenarios):
            logger.info(
                f"{report.theorem}: {report.instances_checked} checked, "
                f"{len(report.violations)} violations, {report.extras} extras"
            )
            if not report.passed:
                failures.append(report.theorem)

    except KeyboardInterrupt:
        logger.warning("Verification interrupted by user")
        return 1

    except EngineError as e:
        logger.error("")
        logger.error("=" * 80)
        logger.error("Verification FAILED")
        logger.error(describe_error(e))
        logger.error("=" * 80)
        return 1

    duration = (datetime.now() - start_time).total_seconds()
    logger.info("")
    logger.info("=" * 80)
    if failures:
        logger.error(f"Verification finished with failures: {', '.join(failures)}")
    else:
        logger.info("Verification completed successfully")
    logger.info(f"Total duration: {duration:.2f} seconds")
    logger.info("=" * 80)

    return 1 if failures else 0


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
