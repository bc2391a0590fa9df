from .runner import odd_orders, run_experiment, run_trial, summarize
