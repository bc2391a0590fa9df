from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import pandas as pd

from src.designs.steiner import build_sts, smallest_admissible_order
from src.embedding.certificate import verify_certificate
from src.embedding.config import PipelineConfig
from src.embedding.greedy import greedy_embed
from src.embedding.pipeline import embed
from src.hypertrees.generator import random_subdivision_tree
from src.oracle.brute import FOUND, SearchBudget, brute_embed
from src.utils.console import progress
from src.utils.seeds import stage_seed

# ================= CONFIG =================
ORACLE_MAX_N = 13
ORACLE_MAX_M = 31
ORACLE_BUDGET = SearchBudget(node_limit=500_000, time_limit=20.0)
CELL = ["n", "mu", "epsilon", "k"]


def odd_orders(start: int, stop: int, step: int):
    # subdivision trees have odd order; even values are bumped up by one
    return sorted({n if n % 2 else n + 1 for n in range(start, stop + 1, max(step, 1))})


def run_trial(trial_index: int, n: int, cfg: PipelineConfig, oracle_max_n: int = ORACLE_MAX_N):
    """
    One seeded trial: random subdivision tree of order n, the smallest
    admissible host with m >= (1+mu)n, the pipeline, an independent
    certificate check, the greedy baseline and (small n) the oracle.
    """
    seed = stage_seed(cfg.seed, "trial", trial_index)
    tree = random_subdivision_tree(n, cfg.d, stage_seed(seed, "tree"))
    m = smallest_admissible_order(cfg.required_m(n))
    sts = build_sts(m)

    result = embed(tree, sts, replace(cfg, seed=seed))
    row = {
        "trial": trial_index,
        "seed": seed,
        "n": n,
        "m": m,
        "d": cfg.d,
        "mu": cfg.mu,
        "epsilon": cfg.epsilon,
        "k": cfg.k,
        "status": result.status,
        "success": result.ok,
        "retries": result.retries,
        "e": result.stage_stats["decomposition"]["e"],
        "l": result.stage_stats["decomposition"]["l"],
        "failed_stages": sorted({a["stage"] for a in result.attempts}),
        "certificate_ok": None,
        "greedy_success": greedy_embed(tree, sts, stage_seed(seed, "greedy")) is not None,
        "oracle": None,
    }
    if result.ok:
        report = verify_certificate(tree, sts, result.embedding, reservoir=result.reservoir, dec=result.decomposition)
        row["certificate_ok"] = report.ok
    if n <= oracle_max_n and m <= ORACLE_MAX_M:
        row["oracle"] = brute_embed(tree, sts, ORACLE_BUDGET).status
    return row


def _run_job(job):
    return run_trial(*job)


def run_experiment(ns, cfg: PipelineConfig, trials: int, workers: int = 1, oracle_max_n: int = ORACLE_MAX_N):
    # Yield trial dicts in trial-index order; with workers > 1 trials run in
    # a process pool but are still yielded in order.
    jobs = [(idx, n, cfg, oracle_max_n) for idx, n in enumerate(n for n in ns for _ in range(trials))]
    if workers <= 1:
        for job in progress(jobs, desc="trials"):
            yield _run_job(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from progress(pool.map(_run_job, jobs), desc="trials", total=len(jobs))


def summarize(rows) -> pd.DataFrame:
    # Success-rate table per (n, mu, epsilon, k) cell. Certificate failures
    # and oracle disagreements are counted, never expected to be non-zero.
    df = pd.DataFrame(list(rows))
    if df.empty:
        return pd.DataFrame(columns=CELL + ["trials", "success_rate"])
    df["oracle_disagrees"] = df["success"] & df["oracle"].notna() & (df["oracle"] != FOUND)
    df["certificate_failed"] = df["certificate_ok"].eq(False)
    table = (
        df.groupby(CELL)
        .agg(
            trials=("trial", "count"),
            successes=("success", "sum"),
            success_rate=("success", "mean"),
            mean_retries=("retries", "mean"),
            greedy_rate=("greedy_success", "mean"),
            certificate_failures=("certificate_failed", "sum"),
            oracle_disagreements=("oracle_disagrees", "sum"),
        )
        .reset_index()
    )
    return table
