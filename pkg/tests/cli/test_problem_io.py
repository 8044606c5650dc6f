# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
import io
import json
from pathlib import Path

import numpy as np
import pytest

from lsipp.components.polyring.poly_parser import parse_polynomial
from lsipp.components.popt.popt_problem import PoptProblem
from lsipp.components.relax.lsipp_problem import LsippProblem
from lsipp.core.constants import PROBLEMS_DIR
from lsipp.core.errors import ProblemFileError
from lsipp.utils.problem_io import (
    dump_problem,
    load_problem,
    parse_problem,
    write_problem,
)
from tests.utils import load_cases

BASE_DIR = Path(__file__).parent.parent.joinpath("assets")
INVALID = load_cases(BASE_DIR.joinpath("problems_invalid.txt"))


@pytest.mark.parametrize("line", INVALID)
def test_errors_name_the_json_path(line):
    path, doc = line.split("|", 1)
    with pytest.raises(ProblemFileError) as exc:
        parse_problem(json.loads(doc), "case.json")
    assert exc.value.path == f"case.json:{path}", str(exc.value)


@pytest.mark.parametrize("name", ["interval_moments", "bifolium", "cusp", "hyperbolic_popt"])
def test_golden_files_load(name):
    pf = load_problem(PROBLEMS_DIR.joinpath(f"{name}.json"))
    assert pf.problem.name == name
    assert pf.homogenize == "auto"


def test_interval_moments_file(interval_moments):
    prob = interval_moments.problem
    assert isinstance(prob, LsippProblem)
    assert prob.m == 7
    assert prob.c[1] == pytest.approx(0.5)
    assert prob.c[6] == pytest.approx(1.0 / 7.0)
    assert prob.a[6] == parse_polynomial("Y1^6", 1)
    assert prob.b.degree == 8
    assert prob.compact


def test_popt_file(hyperbolic_popt):
    assert hyperbolic_popt.kind == "popt"
    assert isinstance(hyperbolic_popt.problem, PoptProblem)
    assert not hyperbolic_popt.problem.compact
    assert len(hyperbolic_popt.problem.gens) == 3


def test_term_list_and_numbers():
    doc = {
        "nvars": 2,
        "m": 1,
        "c": ["1/3"],
        "a": [2],
        "b": [{"exp": [1, 0], "coef": "3/2"}, {"exp": [1, 0], "coef": 0.5}],
        "flags": {"compact": True, "ball": "4"},
    }
    prob = parse_problem(doc).problem
    assert prob.c[0] == pytest.approx(1.0 / 3.0)
    assert prob.a[0] == parse_polynomial("2", 2)
    assert prob.b == parse_polynomial("2*Y1", 2)
    assert prob.ball == 4.0


def test_name_defaults_to_file_stem():
    doc = {"nvars": 1, "m": 1, "c": [1], "a": ["1"], "b": "Y1"}
    assert parse_problem(doc, "dir/my_problem.json").problem.name == "my_problem"


def test_dump_and_parse_give_the_same_problem(bifolium, tmp_path):
    path = tmp_path.joinpath("copy.json")
    write_problem(bifolium.problem, path, homogenize="on")
    pf = load_problem(path)
    assert pf.homogenize == "on"
    assert pf.problem.a == bifolium.problem.a
    assert pf.problem.b == bifolium.problem.b
    assert pf.problem.gens == bifolium.problem.gens
    assert np.array_equal(pf.problem.c, bifolium.problem.c)


def test_dump_popt(hyperbolic_popt):
    doc = dump_problem(hyperbolic_popt.problem)
    assert doc["kind"] == "popt"
    assert "objective" in doc
    assert "c" not in doc


def test_missing_file(tmp_path):
    with pytest.raises(ProblemFileError):
        load_problem(tmp_path.joinpath("missing.json"))


def test_malformed_json_reports_line_and_column(tmp_path):
    path = tmp_path.joinpath("broken.json")
    path.write_text('{\n  "nvars": 1,\n  "m": \n}\n')
    with pytest.raises(ProblemFileError) as exc:
        load_problem(path)
    assert exc.value.path.startswith(f"{path}:4:")


def test_stdin(monkeypatch):
    doc = {"nvars": 1, "m": 1, "c": [1], "a": ["1"], "b": "Y1"}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    pf = load_problem("-")
    assert pf.source == "<stdin>"
    assert pf.problem.m == 1
