"""
Command-line front end.

    dwigner state   --qubits 5 --kind computational --n0 16 --out fig1
    dwigner evolve  --dim 8 --kind momentum --k0 1 --unitary fourier --steps 4 --out-dir run/
    dwigner grover  --qubits 5 --marked 16 --iters 5 --out-dir grover/
    dwigner verify  --dim-max 8 --suite all --seed 42

Exit status: 0 success, 1 numerical or property failure, 2 usage error.
"""

import argparse
import sys
from pathlib import Path

from . import dynamics, grover, gridio, verify, wigner
from .errors import NotUnitaryError, NumericalError
from .linalg import MAX_DIM, make_computational_state, make_momentum_state, make_superposition, pure_density
from .schwinger import t_displacement

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
UNITARIES = ("fourier", "translate", "reflect", "sigma-z")


class UsageError(Exception):
    pass


def _add_state_flags(parser, required):
    dim = parser.add_mutually_exclusive_group(required=required)
    dim.add_argument("--qubits", type=int, help="number of qubits (N = 2**qubits)")
    dim.add_argument("--dim", type=int, help="Hilbert-space dimension N")
    parser.add_argument("--kind", choices=("computational", "momentum", "superposition"), default="computational")
    parser.add_argument("--n0", type=int, help="basis index (computational, superposition)")
    parser.add_argument("--n1", type=int, help="second basis index (superposition)")
    parser.add_argument("--k0", type=int, help="momentum index (momentum)")


def _add_format(parser):
    parser.add_argument("--format", choices=("csv", "pgm", "both"), default="both")


def _dimension(args):
    if args.qubits is not None:
        if not 1 <= args.qubits <= MAX_DIM.bit_length() - 1:
            raise UsageError(f"--qubits must be between 1 and {MAX_DIM.bit_length() - 1}")
        return 2**args.qubits
    return args.dim


def _state(args):
    N = _dimension(args)
    if args.kind == "computational":
        if args.n0 is None:
            raise UsageError("--kind computational needs --n0")
        return make_computational_state(N, args.n0)
    if args.kind == "momentum":
        if args.k0 is None:
            raise UsageError("--kind momentum needs --k0")
        return make_momentum_state(N, args.k0)
    if args.n0 is None or args.n1 is None:
        raise UsageError("--kind superposition needs --n0 and --n1")
    return make_superposition(N, args.n0, args.n1)


def _write_grid(stem, w, fmt):
    stem = Path(stem)
    if stem.suffix in (".csv", ".pgm"):
        stem = stem.with_suffix("")
    written = []
    if fmt in ("csv", "both"):
        gridio.write_grid_csv(stem.with_suffix(".csv"), w)
        written.append(stem.with_suffix(".csv"))
    if fmt in ("pgm", "both"):
        gridio.write_pgm(stem.with_suffix(".pgm"), w)
        written.append(stem.with_suffix(".pgm"))
    return written


def cmd_state(args):
    w = wigner.wigner_of_state(_state(args))
    for path in _write_grid(args.out, w, args.format):
        print(path)
    return EXIT_OK


def _unitary(args, N):
    if args.unitary == "fourier":
        return dynamics.fourier_unitary(N, inverse=args.inverse)
    if args.unitary == "translate":
        return t_displacement(N, args.m, args.k)
    if args.unitary == "reflect":
        return dynamics.reflection_unitary(N, (args.alpha0_q, args.alpha0_p))
    bit = N.bit_length() - 2 if args.qubit is None else args.qubit
    return dynamics.pauli_z(N, bit)


def cmd_evolve(args):
    if args.input is not None:
        if args.qubits is not None or args.dim is not None:
            raise UsageError("--in and --qubits/--dim are mutually exclusive")
        w_in = gridio.read_grid_csv(args.input)
        # reject grids that cannot come from any operator
        wigner.fold_to_fundamental(w_in)
        rho = wigner.reconstruct_density(w_in)
    elif args.qubits is None and args.dim is None:
        raise UsageError("give either --in or --qubits/--dim with state flags")
    else:
        rho = pure_density(_state(args))
    N = rho.shape[0]
    U = _unitary(args, N)
    if args.steps < 0:
        raise UsageError("--steps must be non-negative")
    out = Path(args.out_dir)
    Ud = U.conj().T
    for t in range(args.steps + 1):
        if t:
            rho = U @ rho @ Ud
            rho = 0.5 * (rho + rho.conj().T)
        _write_grid(out / f"step_{t:03d}", wigner.wigner_of_density(rho), args.format)
    kind = dynamics.classify_map(dynamics.z_matrix(U), epsilon=args.epsilon).kind
    summary = f"SUMMARY unitary={args.unitary} N={N} steps={args.steps} classification={kind}"
    gridio.atomic_write(out / "summary.txt", summary + "\n")
    print(summary)
    return EXIT_OK


def cmd_grover(args):
    cfg = grover.GroverConfig(qubits=args.qubits, marked=args.marked, k0=args.k0, iterations=args.iters)
    traj = grover.run_grover(cfg)
    out = Path(args.out_dir)
    for t, w in enumerate(traj.grids):
        _write_grid(out / f"step_{t:03d}", w, args.format)
    rows = ["t,success_prob,closed_form,w_marked_k0"]
    for t, (p, wf) in enumerate(zip(traj.success_prob, traj.fixed_point_values)):
        rows.append(f"{t},{p:.17g},{grover.success_closed_form(cfg.N, t):.17g},{wf + 0.0:.17g}")
    gridio.atomic_write(out / "success.csv", "\n".join(rows) + "\n")
    est = grover.iteration_estimate(cfg.N)
    print(
        f"SUMMARY N={cfg.N} marked={cfg.marked} k0={cfg.k0} iterations={cfg.iterations} "
        f"estimate={est:.4f} rounded={round(est)} argmax={grover.optimal_iterations(cfg.N)} "
        f"final_success={traj.success_prob[-1]:.10f}"
    )
    return EXIT_OK


def cmd_verify(args):
    if not 2 <= args.dim_max <= MAX_DIM:
        raise UsageError(f"--dim-max must be between 2 and {MAX_DIM}")
    results = verify.run(args.suite, args.dim_max, args.seed, args.samples)
    report = verify.format_report(results)
    if args.report:
        gridio.atomic_write(args.report, report)
    sys.stdout.write(report)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"first failing property: {failed[0].name} N={failed[0].N}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="dwigner", description="Discrete Wigner functions on the 2N x 2N grid")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("state", help="write the Wigner grid of a state")
    _add_state_flags(p, required=True)
    p.add_argument("--out", required=True, help="output path; .csv/.pgm suffixes are added")
    _add_format(p)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("evolve", help="evolve a state under a named unitary")
    _add_state_flags(p, required=False)
    p.add_argument("--in", dest="input", help="grid CSV to start from")
    p.add_argument("--unitary", choices=UNITARIES, required=True)
    p.add_argument("--inverse", action="store_true", help="use the inverse Fourier transform")
    p.add_argument("--m", type=int, default=0, help="position shift for translate")
    p.add_argument("--k", type=int, default=0, help="momentum shift for translate")
    p.add_argument("--alpha0-q", type=int, default=0)
    p.add_argument("--alpha0-p", type=int, default=0)
    p.add_argument("--qubit", type=int, help="bit of n flipped by sigma-z (default: the top bit)")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--epsilon", type=float, default=dynamics.DEFAULT_EPSILON)
    p.add_argument("--out-dir", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("grover", help="run Grover search and write its phase-space trajectory")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--marked", type=int, required=True)
    p.add_argument("--k0", type=int, default=1)
    p.add_argument("--iters", type=int, help="iterations (default round(pi sqrt(N) / 4))")
    p.add_argument("--out-dir", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_grover)

    p = sub.add_parser("verify", help="run the structural property suites")
    p.add_argument("--dim-max", type=int, default=8)
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--report", help="also write the report to this file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (NumericalError, NotUnitaryError) as exc:
        print(f"dwigner: numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, IndexError) as exc:
        print(f"dwigner: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dwigner: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
