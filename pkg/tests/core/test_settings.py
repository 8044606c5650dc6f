# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
import io
from pathlib import Path

import pytest

from lsipp.core.constants import DEFAULT_CFG
from lsipp.core.logger import Logger, LogLevel
from lsipp.core.settings.lsipp_settings import LsippSettings

BASE_DIR = Path(__file__).parent.parent.joinpath("assets")


def test_default_file_matches_dataclass_defaults():
    settings = LsippSettings(cfg_files=[DEFAULT_CFG])
    assert settings.solver.tol == 1e-8
    assert settings.solver.max_iter == 200
    assert settings.certify.rank_tol == 1e-3
    assert settings.hierarchy.k_max == 6
    assert settings.hierarchy.homogenize == "auto"
    assert settings.popt.sphere_samples == 100000
    assert settings.gen.point_attempts == 10000


def test_singleton():
    first = LsippSettings(cfg_files=[DEFAULT_CFG])
    assert LsippSettings() is first
    assert LsippSettings()["solver"] is first.solver


def test_custom_file_overrides_option_by_option():
    settings = LsippSettings(cfg_files=[DEFAULT_CFG, BASE_DIR.joinpath("config_sample.cfg")])
    assert settings.solver.tol == 1e-6
    assert settings.solver.max_iter == 50
    assert settings.solver.step_factor == 0.9
    # untouched by the custom file
    assert settings.solver.stall_iterations == 30
    assert settings.certify.rank_tol == 1e-4
    assert settings.certify.extraction_seed == 7
    assert settings.hierarchy.homogenize == "on"


def test_invalid_values_fall_back_with_a_warning():
    stream = io.StringIO()
    Logger.stream = stream
    Logger.set_level(LogLevel.INFO)
    try:
        settings = LsippSettings(cfg_files=[BASE_DIR.joinpath("config_invalid_values.cfg")])
    finally:
        Logger.stream = None
    assert settings.solver.tol == 1e-8
    assert settings.solver.max_iter == 200
    assert settings.solver.step_factor == 0.98
    assert settings.certify.rank_tol == 1e-3
    assert settings.hierarchy.homogenize == "auto"
    # valid options are still read
    assert settings.hierarchy.k_max == 3
    # dialog lines are wrapped, join them back
    output = " ".join(line.strip("┃ ") for line in stream.getvalue().splitlines())
    assert "[ WARNING ]" in output
    assert "Invalid value 'many' for option 'max_iter' in section 'solver'" in output
    assert "Falling back to '200'" in output


def test_missing_files_are_skipped(tmp_path):
    settings = LsippSettings(cfg_files=[tmp_path.joinpath("absent.cfg")])
    assert settings.as_dict()["solver"]["tol"] == 1e-8


@pytest.mark.parametrize("raw, expected", [("debug", LogLevel.DEBUG), ("QUIET", LogLevel.QUIET), ("bogus", LogLevel.INFO)])
def test_log_level_from_environment(monkeypatch, raw, expected):
    monkeypatch.setenv("LSIPP_LOG", raw)
    Logger.reload_level()
    assert Logger.level == expected


def test_logger_filters_by_level():
    stream = io.StringIO()
    Logger.stream = stream
    Logger.set_level("warn")
    try:
        Logger.print_info("hidden")
        Logger.print_warn("shown")
        Logger.print_error("also shown")
    finally:
        Logger.stream = None
    lines = stream.getvalue().splitlines()
    assert lines == ["[WARN] shown", "[ERROR] also shown"]
