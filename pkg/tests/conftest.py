# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
import pytest

from lsipp.core.logger import Logger, LogLevel
from lsipp.core.settings.lsipp_settings import (
    CertifySettings,
    LsippSettings,
    SolverSettings,
)
from lsipp.utils.problem_io import ProblemFile
from tests.utils import golden


@pytest.fixture(autouse=True)
def quiet_logger():
    Logger.set_level(LogLevel.QUIET)
    yield
    Logger.reload_level()


@pytest.fixture(autouse=True)
def fresh_settings():
    LsippSettings.reset()
    yield
    LsippSettings.reset()


@pytest.fixture
def solver_settings() -> SolverSettings:
    return SolverSettings()


@pytest.fixture
def certify_settings() -> CertifySettings:
    return CertifySettings()


@pytest.fixture
def interval_moments() -> ProblemFile:
    return golden("interval_moments")


@pytest.fixture
def bifolium() -> ProblemFile:
    return golden("bifolium")


@pytest.fixture
def cusp() -> ProblemFile:
    return golden("cusp")


@pytest.fixture
def hyperbolic_popt() -> ProblemFile:
    return golden("hyperbolic_popt")
