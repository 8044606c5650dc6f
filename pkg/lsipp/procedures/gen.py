# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import json
import sys
import time
from argparse import Namespace
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List

from lsipp.components.gen.generator import GenSpec, generate
from lsipp.components.relax.hierarchy import run_hierarchy
from lsipp.core.logger import Logger
from lsipp.procedures.options import EXIT_OK, RunOptions
from lsipp.utils.problem_io import dump_problem, write_problem
from lsipp.utils.result_io import write_summary_csv

SUMMARY_FIELDS = ["m", "n", "t", "seed", "certified_order", "value", "solve_ms"]


def solve_instance(spec: GenSpec, opts: RunOptions) -> Dict[str, Any]:
    """Generate and solve one instance, returning its summary row"""
    instance = generate(spec, opts.gen.point_attempts)
    start = time.perf_counter()
    rows = run_hierarchy(
        instance.problem,
        k_max=opts.hierarchy.k_max,
        solver_settings=opts.solver,
        certify_settings=opts.certify,
        inaccurate_tol=opts.hierarchy.inaccurate_tol,
    )
    elapsed = 1000.0 * (time.perf_counter() - start)
    last = rows[-1]
    return {
        "m": spec.m,
        "n": spec.n,
        "t": spec.t,
        "seed": spec.seed,
        "certified_order": last.k if last.certified else None,
        "value": last.value if last.certified else None,
        "solve_ms": round(elapsed, 3),
    }


def run_batch(specs: List[GenSpec], opts: RunOptions, jobs: int) -> List[Dict[str, Any]]:
    if jobs <= 1:
        return [solve_instance(spec, opts) for spec in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(solve_instance, spec, opts) for spec in specs]
        return [f.result() for f in futures]


def run_gen(args: Namespace) -> int:
    opts = RunOptions.from_args(args)
    specs = [GenSpec(args.m, args.n, args.t, args.seed + i) for i in range(args.count)]

    if not args.solve:
        out = Path(args.out) if args.out not in (None, "-") else None
        if args.count == 1:
            text = write_problem(generate(specs[0], opts.gen.point_attempts).problem, out)
        else:
            docs = [dump_problem(generate(s, opts.gen.point_attempts).problem) for s in specs]
            text = json.dumps(docs, indent=2) + "\n"
            if out is not None:
                out.write_text(text)
        if out is None:
            sys.stdout.write(text)
        return EXIT_OK

    Logger.print_status(
        f"Solving {args.count} instances of (m, n, t) = ({args.m}, {args.n}, {args.t})"
        f" with {max(1, args.jobs)} job(s) ..."
    )
    summary = run_batch(specs, opts, args.jobs)
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    if args.csv is not None:
        write_summary_csv(summary, Path(args.csv), SUMMARY_FIELDS)

    certified = sum(row["certified_order"] is not None for row in summary)
    Logger.print_info(f"{certified} of {len(summary)} instances certified")
    return EXIT_OK
