"""Gap between the random-search upper bound and F_k as a function of the trial budget."""
import argparse

import numpy as np

from kfidelity.fidelity import fidelity_vector
from kfidelity.states import StatePair, random_density
from kfidelity.variational import random_search

parser = argparse.ArgumentParser()
parser.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4])
parser.add_argument("--pairs", type=int, default=10)
parser.add_argument("--trials", type=int, default=5000)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

budgets = [b for b in (10, 100, 512, 1000, 2000, 5000, 10000) if b <= args.trials]
rng = np.random.default_rng(args.seed)
print("d  k  " + "  ".join(f"{b:>9d}" for b in budgets))
for d in args.dims:
    gaps = np.zeros((d, len(budgets)))
    for _ in range(args.pairs):
        s1, s2, s3 = rng.integers(0, 2**63, size=3)
        pair = StatePair(random_density(d, d, s1), random_density(d, d, s2))
        fv = fidelity_vector(pair)
        for k in range(d):
            hist = random_search(pair, k, args.trials, int(s3)).history
            gaps[k] = np.maximum(gaps[k], [hist[b - 1] - fv[k] for b in budgets])
    for k in range(d):
        print(f"{d}  {k}  " + "  ".join(f"{g:9.2e}" for g in gaps[k]))
