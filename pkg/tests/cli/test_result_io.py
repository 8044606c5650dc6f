# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
import csv
import json

import numpy as np
import pytest

from lsipp.components.certify.certificate import Certificate
from lsipp.components.certify.extraction import Atom
from lsipp.components.certify.rank_utils import RankEntry
from lsipp.components.popt.popt_solver import PoptResult
from lsipp.components.relax.hierarchy import HierarchyRow
from lsipp.core.types.solver_status import SolverStatus
from lsipp.utils.result_io import ROW_FIELDS, ResultRecord, order_row


@pytest.fixture
def rows():
    failed = HierarchyRow(k=2, value=float("nan"), status=SolverStatus.NUMERICAL_TROUBLE, solve_ms=1.5)
    cert = Certificate(
        order_k=3,
        flat_t=3,
        ranks={3: RankEntry(t=3, lower=2, upper=2, gap_ratio=float("inf"))},
        atoms=[Atom(point=np.array([0.5, -1.0]), weight=2.0)],
        certified=True,
    )
    good = HierarchyRow(
        k=3,
        value=1.25,
        status=SolverStatus.OPTIMAL,
        solve_ms=10.0,
        certificate=cert,
        x_star=np.array([1.0, np.inf]),
    )
    return [failed, good]


def test_order_row(rows):
    row = order_row(rows[1])
    assert list(row)[: len(ROW_FIELDS)] == ROW_FIELDS
    assert row["ranks"] == {"3": [2, 2]}
    assert row["x_star"] == [1.0, None]
    assert row["status"] == "Optimal"


def test_record_from_rows(rows):
    record = ResultRecord.from_rows("demo", "lsipp", "demo.json", rows, {"solver": {}}, seed=0)
    assert record.certified
    assert record.best_value == 1.25
    assert record.atoms == [{"point": [0.5, -1.0], "weight": 2.0}]
    assert record.minimizers is None


def test_nan_becomes_null(rows):
    record = ResultRecord.from_rows("demo", "lsipp", "demo.json", rows[:1], {})
    doc = json.loads(record.to_json())
    assert doc["rows"][0]["value"] is None
    assert doc["final"]["best_value"] is None
    assert not record.certified


def test_popt_minimizers():
    cert = Certificate(order_k=2, certified=True, atoms=[Atom(np.array([0.5, 0.5]), 1.0)])
    result = PoptResult(
        k=2,
        value=3.0,
        status=SolverStatus.OPTIMAL,
        certificate=cert,
        minimizers=[np.array([1.0, 1.0])],
    )
    record = ResultRecord.from_rows("p", "popt", "p.json", [result], {})
    assert record.minimizers == [[1.0, 1.0]]
    assert "x_star" not in record.rows[0]


def test_csv(rows, tmp_path):
    path = tmp_path.joinpath("rows.csv")
    ResultRecord.from_rows("demo", "lsipp", "demo.json", rows, {}).write_csv(path)
    with open(path, newline="") as f:
        table = list(csv.reader(f))
    assert table[0] == ROW_FIELDS
    assert table[1][1] == ""
    assert table[2][1] == "1.25"
    assert json.loads(table[2][6]) == {"3": [2, 2]}
