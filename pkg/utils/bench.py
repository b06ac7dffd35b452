"""
Linear-scaling harness for the simplified solver.
"""
import logging
import time
from typing import List, Optional, Sequence

import pandas as pd

from models.circle import NumericMode, OperationCounter
from solvers.fast import solve_simplified
from utils.generators import random_point_set
from utils.settings import get_settings

logger = logging.getLogger(__name__)

MAX_OPS_RATIO = 2.0
MIN_BENCH_SIZE = 16


def run_bench(sizes: Optional[Sequence[int]] = None, seed: Optional[int] = None) -> pd.DataFrame:
    """
    Solve one random float instance per size and record the operation counter.

    Returns:
        One row per size with n, comparisons, arcs, ops, ops_per_n and seconds
    """
    settings = get_settings()
    sizes = list(settings.bench_sizes if sizes is None else sizes)
    seed = settings.bench_seed if seed is None else seed
    small = [n for n in sizes if n < MIN_BENCH_SIZE]
    if small:
        raise ValueError(f"Bench sizes must be at least {MIN_BENCH_SIZE}, got {small}")

    rows: List[dict] = []
    for n in sizes:
        P = random_point_set(n, seed, NumericMode.FLOAT, verify=False)
        counter = OperationCounter()
        start = time.perf_counter()
        T = solve_simplified(P, counter=counter, check=False)
        elapsed = time.perf_counter() - start
        if len(T.diagonals) != n - 3:
            raise RuntimeError(f"Solver returned {len(T.diagonals)} diagonals for n={n}")
        rows.append({
            "n": n,
            "comparisons": counter.comparisons,
            "arcs": counter.arcs,
            "ops": counter.total,
            "ops_per_n": counter.total / n,
            "seconds": elapsed,
        })
        logger.info("bench n=%d ops=%d ops/n=%.2f %.3fs", n, counter.total, counter.total / n, elapsed)
    return pd.DataFrame(rows)


def ops_ratio(table: pd.DataFrame) -> float:
    """max(ops/n) / min(ops/n) across sizes."""
    return float(table["ops_per_n"].max() / table["ops_per_n"].min())


def render_table(table: pd.DataFrame) -> str:
    shown = table.copy()
    shown["ops_per_n"] = shown["ops_per_n"].round(2)
    shown["seconds"] = shown["seconds"].round(4)
    return shown.to_string(index=False)
