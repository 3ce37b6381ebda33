"""Run the verification suite over a range of seeds and print one status line per seed."""
import argparse

from kfidelity.verify import VerifyConfig, run_all

parser = argparse.ArgumentParser()
parser.add_argument("--seeds", type=int, default=10)
parser.add_argument("--trials", type=int, default=200)
args = parser.parse_args()

for seed in range(1, args.seeds + 1):
    rep = run_all(VerifyConfig(seed=seed, trials=args.trials))
    failed = rep["summary"]["failed"]
    print(f"seed={seed:3d} {'ok' if not failed else 'FAILED ' + ','.join(failed)} "
          f"({rep['wall_clock_seconds']:.1f}s)")
