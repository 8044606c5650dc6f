# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import re
from pathlib import Path
from typing import Dict, List, Tuple

import numpy as np

from lsipp.components.sdp.sdp_problem import LmiBlock, SdpProblem
from lsipp.core.logger import Logger

# SDPA sparse format, primal form:
#
#   min  c^T x   s.t.  F_1 x_1 + ... + F_m x_m - F_0  PSD
#
# An SdpProblem block B0 + sum z_i B_i maps to F_0 = -B0, F_i = B_i. The
# equality rows E z = e become one trailing diagonal block of size 2p where
# entry 2r holds row r and entry 2r + 1 its negation. A maximized objective
# is written negated. Metadata that SDPA has no field for travels in '*'
# comment lines ahead of the data:
#
#   * lsipp:sense max|min
#   * lsipp:objective_constant <float>
#   * lsipp:equality_rows <p>
#   * lsipp:block <j> <label>

META_RE = re.compile(r"^\*\s*lsipp:(?P<key>\w+)\s*(?P<value>.*)$")
COMMENT_RE = re.compile(r"^\s*[*\"]")
SEPARATOR_RE = re.compile(r"[,{}()]")


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def format_sdpa(prob: SdpProblem) -> str:
    sign = prob.sense_sign
    p = prob.n_eq
    E = prob.eq_matrix
    e = prob.eq_rhs
    assert E is not None and e is not None

    lines: List[str] = [
        f'"lsipp-relax SDP, {prob.nfree} variables, {len(prob.blocks)} blocks',
        f"* lsipp:sense {'max' if prob.maximize else 'min'}",
        f"* lsipp:objective_constant {_fmt(prob.objective_constant)}",
        f"* lsipp:equality_rows {p}",
    ]
    for j, block in enumerate(prob.blocks, start=1):
        if block.label:
            lines.append(f"* lsipp:block {j} {block.label}")

    sizes = [str(b.size) for b in prob.blocks]
    if p:
        sizes.append(str(-2 * p))
    lines.append(str(prob.nfree))
    lines.append(str(len(sizes)))
    lines.append(" ".join(sizes))
    lines.append(" ".join(_fmt(sign * f) for f in prob.objective))

    entries: List[Tuple[int, int, int, int, float]] = []
    for j, block in enumerate(prob.blocks, start=1):
        rows, cols = np.triu_indices(block.size)
        for r, c in zip(rows, cols):
            if block.constant[r, c] != 0.0:
                entries.append((0, j, r + 1, c + 1, -block.constant[r, c]))
        for i, var in enumerate(block.var_index):
            coeff = block.coeffs[i]
            for r, c in zip(rows, cols):
                if coeff[r, c] != 0.0:
                    entries.append((int(var) + 1, j, r + 1, c + 1, coeff[r, c]))
    if p:
        j = len(prob.blocks) + 1
        for r in range(p):
            if e[r] != 0.0:
                entries.append((0, j, 2 * r + 1, 2 * r + 1, e[r]))
                entries.append((0, j, 2 * r + 2, 2 * r + 2, -e[r]))
            for var in np.flatnonzero(E[r]):
                entries.append((int(var) + 1, j, 2 * r + 1, 2 * r + 1, E[r, var]))
                entries.append((int(var) + 1, j, 2 * r + 2, 2 * r + 2, -E[r, var]))

    # SDPA readers expect the entries grouped by matrix number
    entries.sort(key=lambda t: (t[0], t[1], t[2], t[3]))
    lines.extend(f"{m} {j} {r} {c} {_fmt(v)}" for m, j, r, c, v in entries)
    return "\n".join(lines) + "\n"


def write_sdpa(prob: SdpProblem, path: Path) -> None:
    path.write_text(format_sdpa(prob))
    Logger.print_debug(f"wrote SDPA file '{path}'")


def parse_sdpa(text: str) -> SdpProblem:
    meta: Dict[str, str] = {}
    labels: Dict[int, str] = {}
    data: List[str] = []
    for line in text.splitlines():
        if not data:
            match = META_RE.match(line)
            if match:
                key, value = match.group("key"), match.group("value").strip()
                if key == "block":
                    j, _, label = value.partition(" ")
                    labels[int(j)] = label
                else:
                    meta[key] = value
                continue
            if COMMENT_RE.match(line) or not line.strip():
                continue
        if line.strip():
            data.append(SEPARATOR_RE.sub(" ", line))

    tokens = " ".join(data[:3]).split()
    nfree = int(tokens[0])
    n_blocks = int(tokens[1])
    sizes = [int(t) for t in tokens[2 : 2 + n_blocks]]

    # the objective may spill over several lines
    rest = " ".join(data[3:]).split()
    c = np.array([float(t) for t in rest[:nfree]])
    raw = rest[nfree:]
    if len(raw) % 5:
        raise ValueError("SDPA entry list is truncated")

    maximize = meta.get("sense", "min") == "max"
    p = int(meta.get("equality_rows", "0"))
    has_eq = p > 0 and sizes and sizes[-1] == -2 * p
    n_lmi = n_blocks - 1 if has_eq else n_blocks

    constants = [np.zeros((abs(s), abs(s))) for s in sizes[:n_lmi]]
    coeffs: List[Dict[int, np.ndarray]] = [{} for _ in range(n_lmi)]
    E = np.zeros((p, nfree))
    e = np.zeros(p)
    for q in range(0, len(raw), 5):
        m, j, r, col = (int(t) for t in raw[q : q + 4])
        value = float(raw[q + 4])
        if has_eq and j == n_blocks:
            # odd positions carry the negated copy
            if r % 2 == 0:
                continue
            row = (r - 1) // 2
            if m == 0:
                e[row] = value
            else:
                E[row, m - 1] = value
            continue
        r, col = r - 1, col - 1
        if m == 0:
            target = constants[j - 1]
            value = -value
        else:
            size = abs(sizes[j - 1])
            target = coeffs[j - 1].setdefault(m - 1, np.zeros((size, size)))
        target[r, col] = value
        target[col, r] = value

    blocks = []
    for j in range(n_lmi):
        var_index = np.array(sorted(coeffs[j]), dtype=np.int64)
        stack = np.array([coeffs[j][v] for v in var_index]).reshape(
            var_index.size, abs(sizes[j]), abs(sizes[j])
        )
        blocks.append(
            LmiBlock(
                size=abs(sizes[j]),
                constant=constants[j],
                var_index=var_index,
                coeffs=stack,
                label=labels.get(j + 1, ""),
            )
        )
    return SdpProblem(
        nfree=nfree,
        objective=-c if maximize else c,
        blocks=blocks,
        eq_matrix=E,
        eq_rhs=e,
        objective_constant=float(meta.get("objective_constant", "0")),
        maximize=maximize,
    )


def read_sdpa(path: Path) -> SdpProblem:
    return parse_sdpa(path.read_text())
