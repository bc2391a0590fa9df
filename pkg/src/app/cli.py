import argparse
import sys
from pathlib import Path

from src.decomposition.sawing import check_decomposition, decomposition_summary, saw
from src.designs.steiner import build_sts, validate
from src.designs.sts_format import read_sts, write_sts
from src.embedding.config import PipelineConfig
from src.embedding.pipeline import embed
from src.experiments.runner import ORACLE_MAX_N, odd_orders, run_experiment, summarize
from src.hypertrees.annotation import annotate
from src.hypertrees.generator import random_subdivision_tree
from src.hypertrees.hypertree import subdivide
from src.hypertrees.tree_format import read_graph_tree, read_hypertree, write_hypertree
from src.oracle.brute import FOUND, SearchBudget, brute_embed, exhaustive_isomorphic
from src.reservoir.reservoir import audit_reservoir, draw_reservoir
from src.stars.star_finder import ALL, check_star_family, find_disjoint_stars
from src.utils.console import say, set_quiet
from src.utils.errors import (
    ConfigError,
    DesignError,
    HypertreeError,
    ParseError,
    PreconditionError,
    SizeLimitExceeded,
)
from src.utils.json_loader import dumps, file_digest
from src.utils.seeds import STAGES, stage_seed

# ================= CONFIG =================
ARTIFACT_VERSION = "1.0.0"
EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

# bad arguments or unreadable inputs
USAGE_ERRORS = (ConfigError, DesignError, HypertreeError, ParseError, SizeLimitExceeded)


class _CommandFailed(Exception):
    # Domain failure: the command ran but the answer is negative.

    def __init__(self, result):
        super().__init__("domain failure")
        self.result = result


# ===============================
# MANIFEST
# ===============================
def _input_paths(args):
    names = ("tree", "sts", "a", "b")
    return [getattr(args, name) for name in names if getattr(args, name, None) and Path(getattr(args, name)).is_file()]


def _config_of(args):
    if not hasattr(args, "mu"):
        return None
    try:
        return _pipeline_config(args).to_dict()
    except ConfigError:
        return None


def run_manifest(args, argv):
    # Everything needed to replay the run: command, argv, the config that was
    # used, the seed with its per-stage expansion and digests of input files.
    # No timestamps, so a replay gives identical bytes.
    seeds = {}
    seed = getattr(args, "seed", None)
    if seed is not None:
        seeds = {"seed": seed, "stages": {stage: stage_seed(seed, stage) for stage in STAGES}}
    options = {k: v for k, v in vars(args).items() if k not in ("handler", "quiet")}
    return {
        "command": args.command if args.command != "oracle" else f"oracle {args.oracle_command}",
        "argv": list(argv),
        "options": options,
        "config": _config_of(args),
        "seeds": seeds,
        "inputs": {str(p): file_digest(p) for p in _input_paths(args)},
        "version": ARTIFACT_VERSION,
    }


def _emit(manifest, result=None, error=None):
    payload = {"manifest": manifest}
    if result is not None:
        payload["result"] = result
    if error is not None:
        payload["error"] = error
    print(dumps(payload, indent=2))


def _load_tree(path):
    # GT v1 files are subdivided on the way in
    path = Path(path)
    if path.suffix == ".gt":
        return subdivide(read_graph_tree(path))
    return read_hypertree(path)


def _load_host(args):
    if getattr(args, "sts", None):
        return read_sts(args.sts, allow_partial=args.allow_partial)
    return build_sts(args.m)


def _anchors(text):
    try:
        return [int(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"anchors must be comma-separated integers, got {text!r}")


def _n_range(text):
    parts = text.split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:STOP[:STEP], got {text!r}")
    if len(nums) == 1:
        nums = nums * 2
    if len(nums) == 2:
        nums.append(2)
    if len(nums) != 3:
        raise argparse.ArgumentTypeError(f"expected START:STOP[:STEP], got {text!r}")
    return odd_orders(*nums)


def _pipeline_config(args):
    return PipelineConfig(
        d=args.d,
        mu=args.mu,
        epsilon=args.eps,
        k=args.k,
        seed=args.seed,
        retry_budget=args.retry_budget,
        strict_hierarchy=args.strict_hierarchy,
        sample_size=args.sample_size,
    ).validate()


# ===============================
# COMMANDS
# ===============================
def cmd_gen_sts(args):
    sts = build_sts(args.m)
    report = validate(sts.triples, sts.m)
    result = {"m": sts.m, "triples": sts.num_triples(), "validation": report.to_dict()}
    if args.out:
        write_sts(sts, args.out)
        say(f"💾 STS({sts.m}) written to {args.out}")
        result["path"] = args.out
    else:
        result["blocks"] = [list(t) for t in sts.triples]
    if not report.ok:
        raise _CommandFailed(result)
    return result


def cmd_gen_tree(args):
    t = random_subdivision_tree(args.n, args.d, stage_seed(args.seed, "tree"))
    result = {"tree": t.to_dict(), "max_degree": t.max_degree()}
    if args.out:
        write_hypertree(t, args.out)
        say(f"💾 tree with n={t.n} written to {args.out}")
        result["path"] = args.out
    return result


def cmd_decompose(args):
    t = _load_tree(args.tree)
    ann = annotate(t)
    dec = saw(t, ann, args.k)
    report = check_decomposition(t, dec, args.k, args.d)
    result = {
        "decomposition": dec.to_dict(),
        "report": report.to_dict(),
        "summary": decomposition_summary(dec, t.n, args.k, args.d),
    }
    if not report.ok:
        raise _CommandFailed(result)
    return result


def cmd_stars(args):
    sts = _load_host(args)
    want = ALL if args.want is None else args.want
    family = find_disjoint_stars(sts, args.anchors, want=want, d=args.d)
    problems = check_star_family(sts, family)
    result = {
        "family": family.to_dict(),
        "size": len(family),
        "guaranteed": family.guaranteed(sts.num_vertices()),
        "problems": problems,
    }
    if problems:
        raise _CommandFailed(result)
    return result


def cmd_reservoir(args):
    sts = _load_host(args)
    res = draw_reservoir(sts, args.eps, stage_seed(args.seed, "reservoir"))
    audit = audit_reservoir(res, args.tuples, args.d, stage_seed(args.seed, "audit"), c=args.c)
    result = {
        "reservoir": res.to_dict(),
        "audit": audit.to_dict(),
        "within_tolerance": audit.within_tolerance(),
    }
    return result


def cmd_embed(args):
    cfg = _pipeline_config(args)
    t = _load_tree(args.tree)
    sts = read_sts(args.sts)
    try:
        outcome = embed(t, sts, cfg)
    except PreconditionError as exc:
        say(f"❌ {exc}")
        raise _CommandFailed({"status": "rejected", "reason": str(exc)})
    result = outcome.to_dict()
    if not outcome.ok:
        raise _CommandFailed(result)
    return result


def cmd_oracle_embed(args):
    t = _load_tree(args.tree)
    sts = read_sts(args.sts, allow_partial=args.allow_partial)
    outcome = brute_embed(t, sts, SearchBudget(node_limit=args.node_limit, time_limit=args.time_limit))
    say(f"🔹 oracle: {outcome.status} after {outcome.nodes} node(s)")
    result = outcome.to_dict()
    if outcome.status != FOUND:
        raise _CommandFailed(result)
    return result


def cmd_oracle_iso(args):
    a, b = _load_tree(args.a), _load_tree(args.b)
    same = exhaustive_isomorphic(a, b)
    result = {"isomorphic": same}
    if not same:
        raise _CommandFailed(result)
    return result


def cmd_experiment(args, argv):
    # JSON-lines: the manifest first, then one line per trial in trial order.
    cfg = _pipeline_config(args)
    manifest = run_manifest(args, argv)
    print(dumps({"manifest": manifest}))
    rows = []
    for row in run_experiment(args.n_range, cfg, args.trials, workers=args.workers, oracle_max_n=args.oracle_max_n):
        rows.append(row)
        print(dumps({"trial": row}), flush=True)

    table = summarize(rows)
    say("\n🔹 Success rate per (n, mu, epsilon, k):")
    say(table.to_string(index=False))
    bad = int(table["certificate_failures"].sum()) if not table.empty else 0
    if bad:
        say(f"❌ {bad} certificate failure(s)")
        return EXIT_DOMAIN
    return EXIT_OK


# ===============================
# PARSER
# ===============================
def _add_pipeline_flags(p):
    p.add_argument("--d", type=int, default=4, help="Maximum degree bound.")
    p.add_argument("--mu", type=float, default=0.5, help="Host slack: m >= (1+mu)n.")
    p.add_argument("--eps", type=float, default=0.1, help="Reservoir density.")
    p.add_argument("--k", type=int, default=20, help="Subtree size bound.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retry-budget", type=int, default=20)
    p.add_argument("--sample-size", type=int, default=None, help="Override min(k*3^k, l).")
    p.add_argument("--strict-hierarchy", action="store_true", help="Enforce the constant hierarchy.")


def build_parser():
    ap = argparse.ArgumentParser(prog="run.py", description="Embed subdivision hypertrees into Steiner triple systems.")
    ap.add_argument("--quiet", action="store_true", help="No diagnostics on stderr.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-sts", help="Build an STS(m) (Bose or Skolem).")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", type=str, default=None, help="STS v1 output path.")
    p.set_defaults(handler=cmd_gen_sts)

    p = sub.add_parser("gen-tree", help="Random bounded-degree subdivision tree.")
    p.add_argument("--n", type=int, required=True, help="Order (odd).")
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=str, default=None, help="HT v1 output path.")
    p.set_defaults(handler=cmd_gen_tree)

    p = sub.add_parser("decompose", help="Saw a tree into stars, subtrees and isolated vertices.")
    p.add_argument("--tree", type=str, required=True, help="HT v1 file (or GT v1 with .gt suffix).")
    p.add_argument("--k", type=int, default=20)
    p.add_argument("--d", type=int, default=4)
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("stars", help="Disjoint stars through an anchor tuple.")
    host = p.add_mutually_exclusive_group(required=True)
    host.add_argument("--sts", type=str)
    host.add_argument("--m", type=int)
    p.add_argument("--allow-partial", action="store_true", help="Accept a partial triple system with --sts.")
    p.add_argument("--anchors", type=_anchors, required=True, help="e.g. 0,5,9")
    p.add_argument("--want", type=int, default=None, help="Stop after this many (default all).")
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(handler=cmd_stars)

    p = sub.add_parser("reservoir", help="Draw a reservoir and audit it.")
    host = p.add_mutually_exclusive_group(required=True)
    host.add_argument("--sts", type=str)
    host.add_argument("--m", type=int)
    p.add_argument("--allow-partial", action="store_true", help="Accept a partial triple system with --sts.")
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--c", type=int, default=None, help="Anchor tuple width (default random in 1..d).")
    p.add_argument("--tuples", type=int, default=20, help="Anchor tuples for the star audit.")
    p.set_defaults(handler=cmd_reservoir)

    p = sub.add_parser("embed", help="Run the embedding pipeline.")
    p.add_argument("--tree", type=str, required=True)
    p.add_argument("--sts", type=str, required=True)
    _add_pipeline_flags(p)
    p.set_defaults(handler=cmd_embed)

    p = sub.add_parser("oracle", help="Brute-force reference answers.")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("embed", help="Exhaustive embedding search.")
    q.add_argument("--tree", type=str, required=True)
    q.add_argument("--sts", type=str, required=True)
    q.add_argument("--allow-partial", action="store_true", help="Accept a partial triple system.")
    q.add_argument("--node-limit", type=int, default=SearchBudget.node_limit)
    q.add_argument("--time-limit", type=float, default=SearchBudget.time_limit)
    q.set_defaults(handler=cmd_oracle_embed)
    q = osub.add_parser("iso", help="Exhaustive isomorphism test.")
    q.add_argument("--a", type=str, required=True)
    q.add_argument("--b", type=str, required=True)
    q.set_defaults(handler=cmd_oracle_iso)

    p = sub.add_parser("experiment", help="Seeded success-rate sweep (JSON-lines).")
    p.add_argument("--n-range", type=_n_range, required=True, help="START:STOP[:STEP], odd orders.")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--oracle-max-n", type=int, default=ORACLE_MAX_N)
    _add_pipeline_flags(p)
    p.set_defaults(handler=None)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    set_quiet(args.quiet)

    if args.command == "experiment":
        try:
            return cmd_experiment(args, argv)
        except USAGE_ERRORS as exc:
            say(f"❌ {exc}")
            _emit(run_manifest(args, argv), error={"type": type(exc).__name__, "message": str(exc)})
            return EXIT_USAGE

    try:
        result = args.handler(args)
    except _CommandFailed as failed:
        _emit(run_manifest(args, argv), result=failed.result)
        return EXIT_DOMAIN
    except USAGE_ERRORS as exc:
        say(f"❌ {exc}")
        _emit(run_manifest(args, argv), error={"type": type(exc).__name__, "message": str(exc)})
        return EXIT_USAGE
    except FileNotFoundError as exc:
        say(f"❌ {exc}")
        _emit(run_manifest(args, argv), error={"type": "FileNotFoundError", "message": str(exc)})
        return EXIT_USAGE

    _emit(run_manifest(args, argv), result=result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
