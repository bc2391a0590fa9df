import numpy as np

# Stage ids are part of the spawn key; never renumber them.
STAGES = {
    "tree": 1,
    "host": 2,
    "reservoir": 3,
    "pack": 4,
    "audit": 5,
    "anchors": 6,
    "greedy": 7,
    "trial": 8,
}


def stage_seed(seed: int, stage: str, counter: int = 0) -> int:
    # Counter-based seed splitter: the same (seed, stage, counter) always gives
    # the same 63-bit seed, independently of which other stages ran before.
    if stage not in STAGES:
        raise KeyError(f"Unknown seed stage: {stage}")
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=(STAGES[stage], int(counter)))
    return int(seq.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))
