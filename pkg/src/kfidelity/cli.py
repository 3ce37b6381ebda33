"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 validation error, 4 singular input.
"""
from __future__ import annotations

import argparse
import json
import sys


from .errors import KFidelityError, SingularState
from .fidelity import fidelity_vector
from .matrixfile import MatrixFileError, dumps_matrix, matrix_to_dict, read_matrix, write_matrix
from .order import equivalent, f_dominates, operator_dominates
from .states import StatePair, random_density, validate_positive
from .variational import optimal_pair, random_search

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_INVALID, EXIT_SINGULAR = 0, 1, 2, 3, 4
ATTAIN_TOL = 1e-7


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_pair(omega_file, rho_file) -> StatePair:
    try:
        omega, rho = read_matrix(omega_file), read_matrix(rho_file)
    except MatrixFileError as e:
        raise CliError(f"parse error: {e}", EXIT_PARSE) from None
    try:
        return StatePair(validate_positive(omega), validate_positive(rho))
    except KFidelityError as e:
        raise CliError(f"validation error ({type(e).__name__}): {e}", EXIT_INVALID) from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_fidelity(args) -> int:
    pair = _load_pair(args.omega, args.rho)
    out = fidelity_vector(pair).to_dict()
    if args.k is not None:
        out["k"] = args.k
        out["F_k"] = fidelity_vector(pair)[args.k]
    _emit(out)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        P = random_density(args.d, args.rank if args.rank is not None else args.d, args.seed)
    except KFidelityError as e:
        raise CliError(f"usage error: {e}", EXIT_PARSE) from None
    if args.out is None:
        print(dumps_matrix(P.matrix))
        return EXIT_OK
    try:
        write_matrix(args.out, P.matrix)
    except OSError as e:
        raise CliError(f"cannot write {args.out}: {e.strerror}", EXIT_PARSE) from None
    return EXIT_OK


def cmd_minpair(args) -> int:
    pair = _load_pair(args.omega, args.rho)
    k = args.k
    if not 0 <= k < pair.dim:
        raise CliError(f"usage error: --k must lie in 0..{pair.dim - 1}", EXIT_PARSE)
    fk = fidelity_vector(pair)[k]
    try:
        res = optimal_pair(pair, k)
    except SingularState as e:
        if not args.search:
            raise CliError(
                f"singular input ({e}); the exact minimizer needs invertible states, "
                "rerun with --search for a random-search upper bound",
                EXIT_SINGULAR,
            ) from None
        sr = random_search(pair, k, args.trials, args.seed)
        _emit({"method": "random_search", "k": k, "F_k": fk, "upper_bound": sr.value,
               "gap": sr.value - fk, "trials": args.trials, "seed": args.seed})
        return EXIT_OK
    _emit({
        "method": "geometric_mean",
        "k": k,
        "m": res.pair.m,
        "F_k": fk,
        "objective": res.objective,
        "stationarity_residual": res.stationarity_residual,
        "printed_form_residual": res.printed_residual,
        "A": matrix_to_dict(res.pair.A.matrix),
        "B": matrix_to_dict(res.pair.B.matrix),
    })
    if abs(res.objective - fk) > ATTAIN_TOL:
        print(f"objective {res.objective!r} differs from F_k {fk!r}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_compare(args) -> int:
    p1 = _load_pair(args.omega1, args.rho1)
    p2 = _load_pair(args.omega2, args.rho2)
    if p1.dim != p2.dim:
        raise CliError(f"validation error: dims differ ({p1.dim} vs {p2.dim})", EXIT_INVALID)
    out = {"mode": args.mode}
    if args.mode == "equiv":
        out["verdict"] = equivalent(p1, p2, args.tol)
    elif args.mode == "fdom":
        out["verdict"] = f_dominates(p2, p1, args.tol)
    else:
        out["verdict"] = operator_dominates(p2, p1)
        out["fidelity_ordered"] = f_dominates(p2, p1, args.tol)
    out["pair1"] = fidelity_vector(p1).to_dict()
    out["pair2"] = fidelity_vector(p2).to_dict()
    _emit(out)
    return EXIT_OK


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-"))
            dims = tuple(range(lo, hi + 1))
        else:
            dims = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --dims {text!r}; use '2-8' or '2,3,5'") from None
    if not dims or min(dims) < 1:
        raise argparse.ArgumentTypeError("dimensions must be positive")
    return dims


def cmd_verify(args) -> int:
    from .verify import VerifyConfig, run_all

    cfg = VerifyConfig(seed=args.seed, dims=args.dims, trials=args.trials)
    report = run_all(cfg)
    for c in report["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        print(f"{status} {c['name']:<24} n={c['instances']:<6} "
              f"max_violation={c['max_violation']:.3e} (<= {c['threshold']:.1e})", file=sys.stderr)
    text = json.dumps(report, indent=2)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        except OSError as e:
            raise CliError(f"cannot write {args.out}: {e.strerror}", EXIT_PARSE) from None
    else:
        print(text)
    return EXIT_OK if report["summary"]["all_passed"] else EXIT_VERIFY


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfidelity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fidelity", help="fidelity spectrum and all partial fidelities")
    p.add_argument("omega")
    p.add_argument("rho")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("gen", help="write a random density matrix")
    p.add_argument("d", type=_positive_int)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("minpair", help="exact minimizing pair in PAIRS_{d-k}")
    p.add_argument("omega")
    p.add_argument("rho")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--search", action="store_true", help="fall back to random search for singular inputs")
    p.add_argument("--trials", type=_positive_int, default=5000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_minpair)

    p = sub.add_parser("compare", help="equivalence / F-dominance / operator dominance of pair1 under pair2")
    p.add_argument("omega1")
    p.add_argument("rho1")
    p.add_argument("omega2")
    p.add_argument("rho2")
    p.add_argument("--mode", choices=("equiv", "fdom", "opdom"), default="equiv")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run the randomized verification suite")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--dims", type=_parse_dims, default=(2, 3, 4, 5, 6, 7, 8))
    p.add_argument("--trials", type=_positive_int, default=200,
                   help="base instance count; every check scales with it")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return args.func(args)
    except CliError as e:
        print(str(e), file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
