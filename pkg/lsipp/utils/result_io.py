# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import csv
import json
import math
import platform
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import scipy

from lsipp import __version__
from lsipp.components.certify.certificate import Certificate
from lsipp.components.popt.popt_solver import PoptResult
from lsipp.components.relax.hierarchy import HierarchyRow

ROW_FIELDS = ["k", "value", "status", "solve_ms", "certified", "flat_t", "ranks"]


def _finite(value: Any) -> Any:
    """JSON has no NaN or inf, both become null"""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _vector(values: Optional[np.ndarray]) -> Optional[List[Any]]:
    if values is None:
        return None
    return [_finite(float(v)) for v in values]


def versions() -> Dict[str, str]:
    return {
        "lsipp": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "python": platform.python_version(),
    }


def _ranks(certificate: Optional[Certificate]) -> Dict[str, List[int]]:
    if certificate is None:
        return {}
    return {str(t): [e.lower, e.upper] for t, e in certificate.ranks.items()}


def order_row(row: HierarchyRow | PoptResult) -> Dict[str, Any]:
    cert = row.certificate
    out: Dict[str, Any] = {
        "k": row.k,
        "value": _finite(float(row.value)),
        "status": str(row.status),
        "solve_ms": round(row.solve_ms, 3),
        "certified": row.certified,
        "flat_t": cert.flat_t if cert is not None else None,
        "ranks": _ranks(cert),
    }
    if isinstance(row, HierarchyRow):
        out["x_star"] = _vector(row.x_star)
    if cert is not None and cert.verification is not None:
        out["verified"] = cert.verified
        out["residuals"] = {
            "c": _finite(cert.verification.c_residual),
            "value": _finite(cert.verification.value_residual),
        }
    return out


@dataclass
class ResultRecord:
    """Per-order rows ordered by k, the certified row last, and a final block"""

    problem: str
    kind: str
    path: str
    rows: List[Dict[str, Any]] = field(default_factory=list)
    best_value: Optional[float] = None
    atoms: List[Dict[str, Any]] = field(default_factory=list)
    minimizers: Optional[List[List[float]]] = None
    tolerances: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None

    @classmethod
    def from_rows(
        cls,
        problem: str,
        kind: str,
        path: str,
        rows: Sequence[HierarchyRow | PoptResult],
        tolerances: Dict[str, Any],
        seed: Optional[int] = None,
    ) -> "ResultRecord":
        record = cls(problem=problem, kind=kind, path=path, tolerances=tolerances, seed=seed)
        record.rows = [order_row(row) for row in rows]
        best = next((r for r in reversed(rows) if r.certified), None)
        if best is None:
            finite = [r for r in rows if math.isfinite(r.value)]
            best = finite[-1] if finite else None
        if best is not None:
            record.best_value = _finite(float(best.value))
            if best.certificate is not None and best.certified:
                record.atoms = [a.to_dict() for a in best.certificate.atoms]
            if isinstance(best, PoptResult) and best.certified:
                record.minimizers = [_vector(v) for v in best.minimizers]  # type: ignore[misc]
        return record

    @property
    def certified(self) -> bool:
        return bool(self.rows) and bool(self.rows[-1]["certified"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "problem": self.problem,
            "kind": self.kind,
            "path": self.path,
            "rows": self.rows,
            "final": {
                "best_value": self.best_value,
                "atoms": self.atoms,
                "minimizers": self.minimizers,
                "tolerances": self.tolerances,
                "versions": versions(),
                "seed": self.seed,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write_json(self, path: Path) -> None:
        path.write_text(self.to_json())

    def write_csv(self, path: Path) -> None:
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(ROW_FIELDS)
            for row in self.rows:
                writer.writerow(
                    [
                        row["k"],
                        "" if row["value"] is None else repr(row["value"]),
                        row["status"],
                        row["solve_ms"],
                        row["certified"],
                        "" if row["flat_t"] is None else row["flat_t"],
                        json.dumps(row["ranks"]),
                    ]
                )


def write_summary_csv(rows: Sequence[Dict[str, Any]], path: Path, fields: Sequence[str]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=list(fields))
        writer.writeheader()
        writer.writerows(rows)
