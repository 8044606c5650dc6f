# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, TypeVar

from lsipp.core.config_parser.config_parser import SimpleConfigParser
from lsipp.core.constants import CUSTOM_CFG, DEFAULT_CFG
from lsipp.core.errors import InvalidValueError
from lsipp.core.logger import DialogType, Logger

T = TypeVar("T")

HOMOGENIZE_MODES = ("auto", "on", "off")


@dataclass
class SolverSettings:
    tol: float = field(default=1e-8)
    max_iter: int = field(default=200)
    step_factor: float = field(default=0.98)
    stall_iterations: int = field(default=30)


@dataclass
class CertifySettings:
    rank_tol: float = field(default=1e-3)
    reconstruction_tol: float = field(default=1e-5)
    verify_tol: float = field(default=1e-3)
    extract_tol: float = field(default=1e-4)
    extraction_seed: int = field(default=0)


@dataclass
class HierarchySettings:
    k_max: int = field(default=6)
    inaccurate_tol: float = field(default=1e-6)
    homogenize: str = field(default="auto")


@dataclass
class PoptSettings:
    atom_v0_tol: float = field(default=1e-6)
    sphere_samples: int = field(default=100000)
    sampling_seed: int = field(default=0)


@dataclass
class GenSettings:
    point_attempts: int = field(default=10000)


def _positive(value: float) -> bool:
    return value > 0


def _unit_interval(value: float) -> bool:
    return 0 < value < 1


def _non_negative(value: float) -> bool:
    return value >= 0


# noinspection PyMethodMayBeStatic
class LsippSettings:
    """
    Process wide settings, read once from default.lsipp.cfg and an optional
    lsipp.cfg next to it. The custom file overrides the defaults option by
    option.
    """

    __instance = None
    __initialized = False

    def __new__(cls, *args, **kwargs) -> "LsippSettings":
        if cls.__instance is None:
            cls.__instance = super(LsippSettings, cls).__new__(cls)
        return cls.__instance

    def __repr__(self) -> str:
        return (
            f"LsippSettings(solver={self.solver}, certify={self.certify},"
            f" hierarchy={self.hierarchy}, popt={self.popt}, gen={self.gen})"
        )

    def __getitem__(self, item: str) -> Any:
        return getattr(self, item)

    def __init__(self, cfg_files: List[Path] | None = None) -> None:
        if self.__initialized:
            return
        self.__initialized = True

        self.cfg_files = cfg_files if cfg_files is not None else [DEFAULT_CFG, CUSTOM_CFG]
        self.__read_config_set_internal_state()

    @classmethod
    def reset(cls) -> None:
        """Drop the singleton so that the next instantiation reads the files again"""
        cls.__instance = None
        cls.__initialized = False

    def as_dict(self) -> Dict[str, Dict[str, Any]]:
        return {
            "solver": asdict(self.solver),
            "certify": asdict(self.certify),
            "hierarchy": asdict(self.hierarchy),
            "popt": asdict(self.popt),
            "gen": asdict(self.gen),
        }

    def __read_config_set_internal_state(self) -> None:
        self.config = SimpleConfigParser()
        for cfg in self.cfg_files:
            if not cfg.exists():
                continue
            layer = SimpleConfigParser()
            layer.read_file(cfg)
            for section in layer.get_sections():
                target = self.config.config.setdefault(section, {})
                target.update(layer.config[section])

        self.solver = SolverSettings()
        self.certify = CertifySettings()
        self.hierarchy = HierarchySettings()
        self.popt = PoptSettings()
        self.gen = GenSettings()

        self.__set_internal_state()

    def __set_internal_state(self) -> None:
        getfloat = self.config.getfloat
        getint = self.config.getint

        # parse solver options
        self.solver.tol = self.__read_from_cfg(
            "solver", "tol", getfloat, self.solver.tol, _positive
        )
        self.solver.max_iter = self.__read_from_cfg(
            "solver", "max_iter", getint, self.solver.max_iter, _positive
        )
        self.solver.step_factor = self.__read_from_cfg(
            "solver", "step_factor", getfloat, self.solver.step_factor, _unit_interval
        )
        self.solver.stall_iterations = self.__read_from_cfg(
            "solver",
            "stall_iterations",
            getint,
            self.solver.stall_iterations,
            _positive,
        )

        # parse certification options
        self.certify.rank_tol = self.__read_from_cfg(
            "certify", "rank_tol", getfloat, self.certify.rank_tol, _unit_interval
        )
        self.certify.reconstruction_tol = self.__read_from_cfg(
            "certify",
            "reconstruction_tol",
            getfloat,
            self.certify.reconstruction_tol,
            _positive,
        )
        self.certify.verify_tol = self.__read_from_cfg(
            "certify", "verify_tol", getfloat, self.certify.verify_tol, _positive
        )
        self.certify.extract_tol = self.__read_from_cfg(
            "certify", "extract_tol", getfloat, self.certify.extract_tol, _positive
        )
        self.certify.extraction_seed = self.__read_from_cfg(
            "certify",
            "extraction_seed",
            getint,
            self.certify.extraction_seed,
            _non_negative,
        )

        # parse hierarchy options
        self.hierarchy.k_max = self.__read_from_cfg(
            "hierarchy", "k_max", getint, self.hierarchy.k_max, _positive
        )
        self.hierarchy.inaccurate_tol = self.__read_from_cfg(
            "hierarchy",
            "inaccurate_tol",
            getfloat,
            self.hierarchy.inaccurate_tol,
            _positive,
        )
        self.hierarchy.homogenize = self.__read_from_cfg(
            "hierarchy",
            "homogenize",
            self.config.getval,
            self.hierarchy.homogenize,
            lambda v: v in HOMOGENIZE_MODES,
        )

        # parse popt options
        self.popt.atom_v0_tol = self.__read_from_cfg(
            "popt", "atom_v0_tol", getfloat, self.popt.atom_v0_tol, _positive
        )
        self.popt.sphere_samples = self.__read_from_cfg(
            "popt", "sphere_samples", getint, self.popt.sphere_samples, _positive
        )
        self.popt.sampling_seed = self.__read_from_cfg(
            "popt", "sampling_seed", getint, self.popt.sampling_seed, _non_negative
        )

        # parse generator options
        self.gen.point_attempts = self.__read_from_cfg(
            "gen", "point_attempts", getint, self.gen.point_attempts, _positive
        )

    def __check_option_exists(self, section: str, option: str) -> bool:
        return self.config.has_section(section) and self.config.has_option(
            section, option
        )

    def __read_from_cfg(
        self,
        section: str,
        option: str,
        getter: Callable[[str, str], T],
        fallback: T,
        check: Callable[[T], bool],
    ) -> T:
        if not self.__check_option_exists(section, option):
            return fallback
        raw = self.config.getval(section, option)
        try:
            try:
                value = getter(section, option)
            except ValueError:
                raise InvalidValueError(section, option, raw)
            if not check(value):
                raise InvalidValueError(section, option, raw)
            return value
        except InvalidValueError as e:
            Logger.print_dialog(
                DialogType.WARNING,
                [f"{e}.", f"Falling back to '{fallback}'."],
            )
            return fallback
