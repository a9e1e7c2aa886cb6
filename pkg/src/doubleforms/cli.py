"""Command-line interface.

Subcommands: verify (identity suite), weitzenboeck (compute the order-p
operator of a tensor file two ways), spectrum, decompose, sectional and
pcurvature.  Exit status is 0 on success, 1 when the verification suite
finds an identity failure, and 2 on usage or I/O problems.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .forms import bianchi_residual, contract_iter, sectional
from .tensorio import load_tensor, save_form
from .verify import SuiteConfig, run_suite
from . import weitzenboeck as wz

_USAGE_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleforms",
        description="Double-form calculus and Weitzenboeck curvature operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the numerical identity suite")
    v.add_argument("--n-min", type=int, default=4)
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--seeds", type=int, default=10, help="random tensors per (n, p) cell")
    v.add_argument("--trials", type=int, default=100, help="random pairs per sampled check")
    v.add_argument("--tol", type=float, default=1e-9, help="main relative tolerance")
    v.add_argument("--extended", action="store_true", help="include n = 7, 8 sweeps (minutes)")
    v.add_argument("--seed", type=int, default=42, help="base seed for all randomness")
    v.add_argument("--json", action="store_true", help="emit the canonical JSON report")
    v.add_argument("--identity", action="append", dest="identities", metavar="NAME",
                   help="restrict to one identity (repeatable)")

    def add_io(p, with_p=True):
        p.add_argument("--input", required=True, help="tensor file (JSON)")
        if with_p:
            p.add_argument("--p", type=int, required=True, help="operator order")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--strict", action="store_true",
                           help="reject files violating the first Bianchi identity")
        group.add_argument("--project", action="store_true",
                           help="project the input onto the Bianchi subspace")
        p.add_argument("--json", action="store_true")

    w = sub.add_parser("weitzenboeck", help="compute the order-p operator of a tensor")
    add_io(w)
    w.add_argument("--method", choices=("formula", "definition"), default="formula")
    w.add_argument("--output", help="write the resulting (p,p) form to this file")

    s = sub.add_parser("spectrum", help="eigenvalues and sampled sectional minima of the order-p operator")
    add_io(s)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)

    d = sub.add_parser("decompose", help="scalar / traceless-Ricci / Weyl split")
    add_io(d, with_p=False)

    sec = sub.add_parser("sectional", help="sampled sectional curvatures of the order-p operator")
    add_io(sec)
    sec.add_argument("--samples", type=int, default=100)
    sec.add_argument("--seed", type=int, default=0)

    pc = sub.add_parser("pcurvature", help="the p-curvature form *(g^(n-p-2) w / (n-p-2)!)")
    add_io(pc)
    return parser


def _load(args):
    mode = "strict" if getattr(args, "strict", False) else (
        "project" if getattr(args, "project", False) else "warn")
    return load_tensor(args.input, on_bianchi=mode)


def _emit(doc: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        seeds=args.seeds,
        trials=args.trials,
        tolerance=args.tol,
        extended=args.extended,
        base_seed=args.seed,
        identities=tuple(args.identities) if args.identities else None,
    )
    report = run_suite(cfg)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for line in report.human_lines():
            print(line)
    return 0 if report.passed else 1


def _cmd_weitzenboeck(args) -> int:
    tensor = _load(args)
    n = tensor.n
    if args.method == "formula":
        form = wz.np_formula(tensor, args.p)
    else:
        form = wz.np_definition(tensor, args.p)
    if args.output:
        save_form(form, args.output)
    doc = {
        "n": n,
        "p": args.p,
        "method": args.method,
        "norm": form.norm(),
        "bianchi_residual": bianchi_residual(form) if args.p >= 1 else 0.0,
        "matrix": form.coeffs.tolist(),
    }
    lines = [
        f"order-{args.p} operator of {args.input} via {args.method}",
        f"  norm            {doc['norm']:.12g}",
        f"  bianchi residual {doc['bianchi_residual']:.3e}",
    ] + ([f"  written to      {args.output}"] if args.output else [])
    _emit(doc, args.json, lines)
    return 0


def _cmd_spectrum(args) -> int:
    tensor = _load(args)
    form = wz.np_definition(tensor, args.p)
    report = wz.spectrum(wz.operator_matrix(form), sample_planes=args.samples, seed=args.seed)
    doc = {
        "n": tensor.n,
        "p": args.p,
        "eigenvalues": report.eigenvalues.tolist(),
        "min_eigenvalue": report.min_eigenvalue,
        "min_sampled_sectional": report.min_sampled_sectional,
        "sample_count": report.sample_count,
        "seed": report.seed,
    }
    lines = [
        f"spectrum of the order-{args.p} operator of {args.input}",
        f"  min eigenvalue        {report.min_eigenvalue:.12g}",
        f"  max eigenvalue        {report.eigenvalues[-1]:.12g}",
        f"  min sampled sectional {report.min_sampled_sectional:.12g} "
        f"({report.sample_count} planes, seed {report.seed})",
    ]
    _emit(doc, args.json, lines)
    return 0


def _cmd_decompose(args) -> int:
    tensor = _load(args)
    comps = wz.decompose_22(tensor)
    scalar = contract_iter(tensor.form, 2).scalar()
    doc = {
        "n": tensor.n,
        "scalar_curvature": scalar,
        "omega0": comps.omega0,
        "omega1": comps.omega1.coeffs.tolist(),
        "omega1_norm": comps.omega1.norm(),
        "omega2_norm": comps.omega2.norm(),
        "omega2": comps.omega2.coeffs.tolist(),
    }
    lines = [
        f"decomposition of {args.input} (n={tensor.n})",
        f"  scalar part      {comps.omega0:.12g}  (scalar curvature {scalar:.12g})",
        f"  traceless Ricci  norm {comps.omega1.norm():.12g}",
        f"  Weyl part        norm {comps.omega2.norm():.12g}",
    ]
    _emit(doc, args.json, lines)
    return 0


def _cmd_sectional(args) -> int:
    tensor = _load(args)
    form = wz.np_definition(tensor, args.p)
    rng = np.random.default_rng(args.seed)
    values = []
    for _ in range(args.samples):
        F = wz.sample_plane(rng, tensor.n, args.p)
        values.append(sectional(form, [F[:, i] for i in range(args.p)]))
    arr = np.asarray(values)
    doc = {
        "n": tensor.n,
        "p": args.p,
        "samples": args.samples,
        "seed": args.seed,
        "min": float(arr.min()),
        "max": float(arr.max()),
        "mean": float(arr.mean()),
        "values": arr.tolist(),
    }
    lines = [
        f"sectional curvature of the order-{args.p} operator of {args.input}",
        f"  {args.samples} planes, seed {args.seed}",
        f"  min {arr.min():.12g}   mean {arr.mean():.12g}   max {arr.max():.12g}",
    ]
    _emit(doc, args.json, lines)
    return 0


def _cmd_pcurvature(args) -> int:
    tensor = _load(args)
    form = wz.p_curvature_form(tensor, args.p)
    eigs = wz.jacobi_eigenvalues(form.coeffs)
    doc = {
        "n": tensor.n,
        "p": args.p,
        "norm": form.norm(),
        "eigenvalues": eigs.tolist(),
        "matrix": form.coeffs.tolist(),
    }
    lines = [
        f"p-curvature form of {args.input} at p={args.p}",
        f"  norm {form.norm():.12g}",
        f"  eigenvalue range [{eigs[0]:.12g}, {eigs[-1]:.12g}]",
    ]
    _emit(doc, args.json, lines)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "weitzenboeck": _cmd_weitzenboeck,
    "spectrum": _cmd_spectrum,
    "decompose": _cmd_decompose,
    "sectional": _cmd_sectional,
    "pcurvature": _cmd_pcurvature,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
