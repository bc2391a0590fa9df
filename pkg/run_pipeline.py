import sys
from pathlib import Path

# ===============================
# IMPORT PROJECT MODULES
# ===============================
from src.designs.steiner import build_sts, smallest_admissible_order, validate
from src.designs.sts_format import write_sts
from src.decomposition.sawing import check_decomposition, decomposition_summary
from src.embedding.certificate import verify_certificate
from src.embedding.config import PipelineConfig
from src.embedding.greedy import greedy_embed
from src.embedding.pipeline import embed
from src.hypertrees.generator import random_subdivision_tree
from src.hypertrees.tree_format import write_hypertree
from src.utils.console import say
from src.utils.json_loader import dump_json
from src.utils.seeds import stage_seed

# ================= CONFIG =================
N = 31
CONFIG = PipelineConfig(d=2, mu=3.0, epsilon=0.6, k=6, seed=7, retry_budget=100)
OUT_DIR = Path("runs/demo")


# ===============================
# MAIN PIPELINE
# ===============================
def main():
    say("\n========== SUBDIVISION TREE EMBEDDING DEMO ==========\n")
    cfg = CONFIG.validate()

    # ---------------------------
    # Guest and host
    # ---------------------------
    say("🔹 Generating guest tree and host system...")
    tree = random_subdivision_tree(N, cfg.d, stage_seed(cfg.seed, "tree"))
    m = smallest_admissible_order(cfg.required_m(tree.n))
    sts = build_sts(m)
    report = validate(sts.triples, sts.m)

    say(f"Tree order       : {tree.n}")
    say(f"Tree max degree  : {tree.max_degree()}")
    say(f"Host order       : {m}")
    say(f"Host validates   : {report.ok}")

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    write_hypertree(tree, OUT_DIR / "tree.ht")
    write_sts(sts, OUT_DIR / "host.sts")
    say(f"💾 Inputs saved to {OUT_DIR}")

    # ---------------------------
    # Embed
    # ---------------------------
    say("\n🔹 Running the embedding pipeline...")
    result = embed(tree, sts, cfg)

    stats = result.stage_stats["decomposition"]
    say(f"Stars (e)        : {stats['e']}")
    say(f"Subtrees (l)     : {stats['l']}")
    say(f"Isolated         : {stats['isolated']}")
    say(f"Largest subtree  : {stats['largest_subtree']}")

    dec_report = check_decomposition(tree, result.decomposition, cfg.k, cfg.d)
    say(f"Decomposition ok : {dec_report.ok}")
    if not dec_report.ok:
        say(f"⚠️ Violated properties: {dec_report.violated}")

    if not result.ok:
        say(f"\n❌ No embedding after {result.retries} attempt(s)")
        for row in result.attempts:
            say(f"  attempt {row['attempt']}: {row['stage']} ({row['detail']})")
        return 1

    cert = verify_certificate(tree, sts, result.embedding, reservoir=result.reservoir, dec=result.decomposition)
    say(f"\n✅ Embedded after {result.retries + 1} attempt(s)")
    say(f"Certificate ok   : {cert.ok}")
    say(f"Reservoir size   : {len(result.reservoir)}")

    # ---------------------------
    # Baseline
    # ---------------------------
    say("\n🔹 Greedy baseline for comparison...")
    greedy = greedy_embed(tree, sts, stage_seed(cfg.seed, "greedy"))
    say(f"Greedy succeeded : {greedy is not None}")

    dump_json(
        {
            "config": cfg.to_dict(),
            "summary": decomposition_summary(result.decomposition, tree.n, cfg.k, cfg.d),
            "result": result.to_dict(),
            "certificate": cert.to_dict(),
        },
        OUT_DIR / "result.json",
    )
    say(f"💾 Result saved to {OUT_DIR / 'result.json'}")
    say("\n========== DEMO COMPLETE ==========\n")
    return 0 if cert.ok else 1


# ===============================
# ENTRY POINT
# ===============================
if __name__ == "__main__":
    sys.exit(main())
