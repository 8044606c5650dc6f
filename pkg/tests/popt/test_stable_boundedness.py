# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
import numpy as np
import pytest

from lsipp.components.polyring.poly_parser import parse_polynomial
from lsipp.components.popt.popt_problem import PoptProblem
from lsipp.components.popt.stable_boundedness import check_stable_boundedness_witness


def test_stably_bounded_example(hyperbolic_popt):
    diagnostic = check_stable_boundedness_witness(hyperbolic_popt.problem, samples=20000)
    assert diagnostic.positive
    assert not diagnostic.counterexample
    # the top form of f is ||y||^2
    assert diagnostic.min_value == pytest.approx(1.0)
    assert 0 < diagnostic.feasible < diagnostic.samples


def test_cusp_objective_attains_its_minimum_on_the_arc_end():
    f = parse_polynomial("3/2 - 9/2*Y2 + 3*Y1", 2)
    gens = [parse_polynomial("Y1", 2), parse_polynomial("Y1^2 - Y2^3", 2)]
    diagnostic = check_stable_boundedness_witness(PoptProblem(nvars=2, f=f, gens=gens))

    # dense oracle on the arc y1 >= 0, y2 <= 0 of the unit circle
    angles = np.linspace(0.0, np.pi / 2, 100001)
    oracle = float(np.min(3.0 * np.cos(angles) + 4.5 * np.sin(angles)))
    assert oracle == pytest.approx(3.0)
    assert diagnostic.positive
    assert diagnostic.min_value == pytest.approx(oracle, abs=1e-2)
    assert np.allclose(diagnostic.argmin, [1.0, 0.0], atol=1e-2)


def test_linear_objective_is_a_counterexample():
    p = PoptProblem(nvars=2, f=parse_polynomial("Y1", 2))
    diagnostic = check_stable_boundedness_witness(p, samples=5000, seed=3)
    assert diagnostic.counterexample
    assert diagnostic.min_value == pytest.approx(-1.0, abs=1e-3)


def test_no_sample_passes_the_generators():
    p = PoptProblem(
        nvars=2,
        f=parse_polynomial("Y1^2", 2),
        gens=[parse_polynomial("1 - Y1^2 - Y2^2", 2)],
    )
    diagnostic = check_stable_boundedness_witness(p, samples=1000)
    assert diagnostic.feasible == 0
    assert diagnostic.min_value is None
    assert not diagnostic.positive
    assert not diagnostic.counterexample


def test_sampling_is_reproducible(hyperbolic_popt):
    first = check_stable_boundedness_witness(hyperbolic_popt.problem, samples=2000, seed=9)
    second = check_stable_boundedness_witness(hyperbolic_popt.problem, samples=2000, seed=9)
    assert first.min_value == second.min_value
    assert first.feasible == second.feasible
    assert np.array_equal(first.argmin, second.argmin)
