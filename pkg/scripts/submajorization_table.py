"""Cross-tabulate F-dominance against weak submajorization of fidelity spectra.

Prints, for several seeds, how often ``pair1`` F-dominated by ``pair2`` coincides
with ``lambda(pair2)`` weakly submajorized by ``lambda(pair1)`` and with the
reverse relation.
"""
import argparse
import json

from kfidelity.verify import VerifyConfig, check_submajorization_probe

parser = argparse.ArgumentParser()
parser.add_argument("--seeds", type=int, default=5)
parser.add_argument("--trials", type=int, default=200)
args = parser.parse_args()

for seed in range(args.seeds):
    r = check_submajorization_probe(VerifyConfig(seed=seed, trials=args.trials), seed)
    print(f"seed={seed}")
    print(json.dumps(r.details, indent=2))
