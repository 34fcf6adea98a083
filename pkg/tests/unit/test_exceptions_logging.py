import logging

import pytest

from cnspa.exceptions import (
    EXIT_CONFIG_ERROR,
    EXIT_INFEASIBLE,
    EXIT_VERIFY_FAILED,
    CapViolationError,
    ConfigurationError,
    DomainError,
    InvalidArgumentError,
    OracleFailure,
)
from cnspa.logging_utils import (
    MAX_ERROR_CHARS,
    build_extra,
    build_safe_extra,
    configure_logging,
    new_context,
)


def test_error_codes_and_exit_codes():
    assert ConfigurationError("bad").exit_code() == EXIT_CONFIG_ERROR
    assert CapViolationError("cap").exit_code() == EXIT_INFEASIBLE
    assert OracleFailure("oracle").exit_code() == EXIT_VERIFY_FAILED
    assert InvalidArgumentError("x").code == "INVALID_ARGUMENT"


def test_value_errors_stay_catchable_as_value_error():
    with pytest.raises(ValueError):
        raise DomainError("out of range")


def test_to_dict():
    err = ConfigurationError("bad file", details={"violations": []})
    assert err.to_dict() == {
        "error": "bad file",
        "error_code": "CONFIGURATION_ERROR",
        "details": {"violations": []},
    }


def test_build_extra_always_has_run_id():
    ctx = new_context("abc")
    assert build_extra(ctx, trials=3) == {"run_id": "abc", "trials": 3}


def test_build_safe_extra_sanitizes_paths_and_errors():
    ctx = new_context("abc")
    extra = build_safe_extra(ctx, config_path="/home/me/secret/scenario.cfg", error="x" * 900)
    assert extra["config_path"] == "scenario.cfg"
    assert extra["error"].endswith("...[truncated]")
    assert len(extra["error"]) == MAX_ERROR_CHARS + len("...[truncated]")


def test_configure_logging_levels_and_single_handler():
    configure_logging(verbose=True)
    configure_logging(quiet=True)
    logger = logging.getLogger("cnspa")
    marked = [h for h in logger.handlers if getattr(h, "_cnspa_handler", False)]
    assert len(marked) == 1
    assert logger.level == logging.WARNING
