# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from pathlib import Path

import pytest

from lsipp.core.config_parser.config_parser import (
    DuplicateSectionError,
    NoOptionError,
    NoSectionError,
    SimpleConfigParser,
    UnknownLineError,
)
from lsipp.core.errors import LsippError
from tests.utils import load_testdata_from_file

BASE_DIR = Path(__file__).parent.parent.joinpath("assets")
TEST_DATA_PATH = BASE_DIR.joinpath("config_sample.cfg")


@pytest.fixture
def parser():
    parser = SimpleConfigParser()
    for line in load_testdata_from_file(TEST_DATA_PATH):
        parser._parse_line(line)  # noqa

    return parser


def test_sections(parser):
    assert parser.get_sections() == ["solver", "certify", "hierarchy"]
    assert parser.has_section("solver")
    assert not parser.has_section("popt")


def test_options(parser):
    assert parser.get_options("solver") == ["tol", "max_iter", "step_factor"]
    assert parser.has_option("certify", "rank_tol")
    assert not parser.has_option("certify", "verify_tol")
    assert not parser.has_option("popt", "atom_v0_tol")


def test_getval_strips_comments(parser):
    assert parser.getval("solver", "tol") == "1e-6"
    assert parser.getval("solver", "max_iter") == "50"


def test_conversions(parser):
    assert parser.getfloat("solver", "tol") == 1e-6
    assert parser.getint("solver", "max_iter") == 50
    assert parser.getint("certify", "extraction_seed") == 7
    assert parser.getboolean("hierarchy", "homogenize") is True


def test_multiline_option(parser):
    assert parser.getval("certify", "notes") == "first line second line"


def test_fallbacks(parser):
    assert parser.getval("solver", "missing", "fallback") == "fallback"
    assert parser.getint("popt", "sphere_samples", fallback=128) == 128


def test_missing_lookups_raise(parser):
    with pytest.raises(NoSectionError):
        parser.getval("popt", "atom_v0_tol")
    with pytest.raises(NoOptionError):
        parser.getval("solver", "missing")


def test_conversion_error(parser):
    with pytest.raises(ValueError):
        parser.getint("solver", "tol")


def test_duplicate_section_names_its_line():
    parser = SimpleConfigParser()
    with pytest.raises(DuplicateSectionError, match=r"^a.cfg:3: section 'solver'"):
        parser.read_string("[solver]\ntol: 1\n[solver]\n", source="a.cfg")


def test_option_outside_section():
    with pytest.raises(UnknownLineError, match="option outside of a section"):
        SimpleConfigParser().read_string("tol: 1\n")


def test_unknown_line_names_file_and_line():
    with pytest.raises(UnknownLineError, match=r"^<string>:2: unknown line"):
        SimpleConfigParser().read_string("[solver]\n= 3\n")


def test_errors_are_toolkit_errors(tmp_path):
    cfg = tmp_path.joinpath("lsipp.cfg")
    cfg.write_text("[solver]\n[solver]\n")
    with pytest.raises(LsippError, match="lsipp.cfg:2"):
        SimpleConfigParser().read_file(cfg)
