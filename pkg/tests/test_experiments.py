import pytest

from src.embedding.config import PipelineConfig
from src.experiments import odd_orders, run_experiment, run_trial, summarize
from src.oracle.brute import FOUND

CFG = PipelineConfig(d=3, mu=1.0, epsilon=0.5, k=6, seed=11, retry_budget=20)

TRIAL_KEYS = {
    "trial",
    "seed",
    "n",
    "m",
    "d",
    "mu",
    "epsilon",
    "k",
    "status",
    "success",
    "retries",
    "e",
    "l",
    "failed_stages",
    "certificate_ok",
    "greedy_success",
    "oracle",
}


def test_odd_orders():
    assert odd_orders(7, 13, 2) == [7, 9, 11, 13]
    assert odd_orders(8, 12, 2) == [9, 11, 13]
    assert odd_orders(5, 5, 1) == [5]


def test_trial_row():
    row = run_trial(0, 7, CFG)
    assert set(row) == TRIAL_KEYS
    assert row["m"] == 15
    assert row["oracle"] == FOUND
    assert row["certificate_ok"] is (True if row["success"] else None)
    assert run_trial(0, 7, CFG) == row


def test_oracle_is_skipped_for_larger_trees():
    row = run_trial(1, 15, CFG, oracle_max_n=13)
    assert row["oracle"] is None


def test_experiment_yields_in_trial_order():
    rows = list(run_experiment([7, 9], CFG, trials=2))
    assert [r["trial"] for r in rows] == [0, 1, 2, 3]
    assert [r["n"] for r in rows] == [7, 7, 9, 9]


def test_summary_table():
    rows = [
        {"trial": 0, "n": 7, "mu": 1.0, "epsilon": 0.5, "k": 6, "success": True, "retries": 2,
         "greedy_success": True, "certificate_ok": True, "oracle": FOUND},
        {"trial": 1, "n": 7, "mu": 1.0, "epsilon": 0.5, "k": 6, "success": False, "retries": 20,
         "greedy_success": True, "certificate_ok": None, "oracle": FOUND},
        {"trial": 2, "n": 9, "mu": 1.0, "epsilon": 0.5, "k": 6, "success": True, "retries": 0,
         "greedy_success": False, "certificate_ok": True, "oracle": None},
    ]
    table = summarize(rows)
    assert list(table["n"]) == [7, 9]
    first = table.iloc[0]
    assert first["trials"] == 2
    assert first["success_rate"] == 0.5
    assert first["mean_retries"] == 11
    assert first["certificate_failures"] == 0
    assert first["oracle_disagreements"] == 0
    assert table.iloc[1]["greedy_rate"] == 0.0


def test_empty_summary():
    assert summarize([]).empty


def _check_sweep(rows, record_property):
    assert all(r["certificate_ok"] is True for r in rows if r["success"])
    table = summarize(rows)
    assert table["certificate_failures"].sum() == 0
    assert table["oracle_disagreements"].sum() == 0
    record_property("success_rate", table[["n", "mu", "epsilon", "k", "trials", "success_rate"]].to_dict("records"))
    return table


@pytest.mark.slow
def test_every_success_certifies_on_mid_sized_trees(record_property):
    ns = odd_orders(49, 399, 50)
    rows = []
    for d, seed in ((3, 101), (4, 202)):
        cfg = PipelineConfig(d=d, mu=0.5, epsilon=0.3, k=9, seed=seed, retry_budget=2)
        rows.extend(run_experiment(ns, cfg, trials=32, workers=4))
    assert len(rows) >= 500
    assert {r["n"] for r in rows} == set(ns)
    _check_sweep(rows, record_property)


@pytest.mark.slow
def test_embedding_success_implies_oracle_success(record_property):
    cfg = PipelineConfig(d=3, mu=0.4, epsilon=0.5, k=5, seed=303, retry_budget=20)
    rows = list(run_experiment([7, 9, 11, 13], cfg, trials=25))
    assert max(r["m"] for r in rows) <= 19
    assert all(r["oracle"] is not None for r in rows)
    assert all(r["oracle"] == FOUND for r in rows if r["success"])
    _check_sweep(rows, record_property)
