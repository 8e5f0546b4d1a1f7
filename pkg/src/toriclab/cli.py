"""Command-line interface.

Exit codes: 0 on success, 2 on invalid input or arguments, 3 when a
validation or certification check fails. Every output file gets a sibling
<name>.manifest.json recording the command, arguments, package versions
and any seed, so runs can be reproduced.
"""

from __future__ import annotations

import argparse
import json
import os
import platform
import sys
from pathlib import Path

from . import __version__
from .barcode import Barcode, GrowthSamples, bottleneck_distance, \
    count_long_bars, entropy_estimates
from .bm_metric import ApproximationLadder, log_ratio_bound
from .delzant import (
    DelzantPolytope,
    certify_k_bound,
    count_fixed_points,
    counts_to_csv,
    hamiltonian_from_json_dict,
)
from .errors import (
    InconsistentSurfaceError,
    NoRegularPerturbationError,
    SmoothingFailureError,
    SpectralValueError,
    ToricLabError,
)
from .filtered_complex import FilteredComplex, reduce_complex
from .mollify import mollification_ladder
from .orbit_enum import certify_bound, enumerate_spectrum, generator_count, \
    spectrum_to_csv
from .toric_geometry import ToricDomain

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECK = 3

_CHECK_ERRORS = (SmoothingFailureError, InconsistentSurfaceError,
                 NoRegularPerturbationError)


def _write_manifest(out_path: Path, command: str, arguments: dict,
                    seed: int | None = None) -> None:
    import numpy
    import scipy

    manifest = {
        "command": command,
        "arguments": arguments,
        "versions": {
            "toriclab": __version__,
            "python": platform.python_version(),
            "numpy": numpy.__version__,
            "scipy": scipy.__version__,
        },
        "outputs": [str(out_path)],
    }
    if seed is not None:
        manifest["seed"] = seed
    side = out_path.with_name(out_path.name + ".manifest.json")
    side.write_text(json.dumps(manifest, indent=2) + "\n")


def _load_domain(path: str) -> ToricDomain:
    return ToricDomain.from_json(Path(path).read_text())


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


# ---------------------------------------------------------------------------
# subcommands

def _cmd_spectrum(args) -> int:
    domain = _load_domain(args.domain)
    result = enumerate_spectrum(domain, args.smax, method=args.method,
                                resolution=args.resolution)
    out = Path(args.out)
    spectrum_to_csv(result, out)
    _write_manifest(out, "spectrum", {
        "domain": args.domain, "smax": args.smax, "method": args.method,
        "resolution": args.resolution, "jobs": args.jobs})
    print(f"{len(result.classes)} classes up to action {args.smax:g}")
    return EXIT_OK


def _cmd_growth(args) -> int:
    domain = _load_domain(args.domain)
    spectrum = enumerate_spectrum(domain, args.smax,
                                  resolution=args.resolution)
    s_vals = []
    counts = []
    for i in range(1, args.samples + 1):
        s = args.smax * i / args.samples
        for _ in range(6):
            try:
                gc = generator_count(domain, s, spectrum=spectrum)
                break
            except SpectralValueError:
                s += 2.5e-9 * max(1.0, s)
        else:
            raise SpectralValueError(
                f"could not sample near s = {s:g}: spectrum too dense")
        s_vals.append(s)
        counts.append(gc.value)
    samples = GrowthSamples(tuple(s_vals), tuple(counts))
    out = Path(args.out)
    samples.to_csv(out)
    window = None
    if args.fit_lo is not None and args.fit_hi is not None:
        window = (args.fit_lo, args.fit_hi)
    est = entropy_estimates(samples, fit_window=window)
    _write_manifest(out, "growth", {
        "domain": args.domain, "smax": args.smax, "samples": args.samples,
        "fit_lo": args.fit_lo, "fit_hi": args.fit_hi, "jobs": args.jobs})
    print(f"exp_rate={est.exp_rate:.6g} poly_degree={est.poly_degree:.6g} "
          f"(window {est.window[0]:g}..{est.window[1]:g}, "
          f"{est.n_used} samples)")
    return EXIT_OK


def _cmd_bound(args) -> int:
    domain = _load_domain(args.domain)
    cert = certify_bound(domain, _float_list(args.s),
                         resolution=args.resolution)
    payload = {
        "m": cert.m, "c_growth": cert.c_growth, "c_offset": cert.c_offset,
        "ok": cert.ok,
        "entries": [{"s": e.s, "count": e.count, "bound": e.bound,
                     "ok": e.ok} for e in cert.entries],
    }
    out = Path(args.out)
    out.write_text(json.dumps(payload, indent=2) + "\n")
    _write_manifest(out, "bound", {
        "domain": args.domain, "s": args.s, "resolution": args.resolution,
        "jobs": args.jobs})
    for e in cert.entries:
        print(f"s={e.s:g}: count={e.count} bound={e.bound:.6g} "
              f"{'ok' if e.ok else 'FAIL'}")
    return EXIT_OK if cert.ok else EXIT_CHECK


def _cmd_mollify(args) -> int:
    domain = _load_domain(args.domain)
    ladder = mollification_ladder(domain, _float_list(args.etas),
                                  mesh_resolution=args.resolution,
                                  seed=args.seed)
    payload = {
        "lipschitz": ladder.field.lipschitz,
        "m_lower_ladder": ladder.ladder_m_lower,
        "reports": [r.to_json_dict() for r in ladder.reports],
    }
    out = Path(args.out)
    out.write_text(json.dumps(payload, indent=2) + "\n")
    _write_manifest(out, "mollify", {
        "domain": args.domain, "etas": args.etas,
        "resolution": args.resolution, "jobs": args.jobs}, seed=args.seed)
    if args.export_grid:
        grid_path = Path(args.export_grid)
        grid_path.write_text(ToricDomain(ladder.rungs[-1]).to_json() + "\n")
        _write_manifest(grid_path, "mollify", {
            "domain": args.domain, "etas": args.etas,
            "rung": "last"}, seed=args.seed)
    for rep in ladder.reports:
        print(f"eta={rep.eta:g}: xi={rep.xi:.6g} m_lower={rep.m_lower:.6g} "
              f"sup_diff={rep.sup_diff:.6g}")
    print(f"ladder m_lower={ladder.ladder_m_lower:.6g}")
    return EXIT_OK


def _cmd_delzant_count(args) -> int:
    poly = DelzantPolytope.from_json(Path(args.polytope).read_text())
    ham = hamiltonian_from_json_dict(
        json.loads(Path(args.hamiltonian).read_text()))
    results = [count_fixed_points(poly, ham, k, mode=args.mode)
               for k in _int_list(args.k)]
    out = Path(args.out)
    counts_to_csv(results, out)
    _write_manifest(out, "delzant-count", {
        "polytope": args.polytope, "hamiltonian": args.hamiltonian,
        "k": args.k, "mode": args.mode, "jobs": args.jobs})
    for res in results:
        print(f"k={res.k}: total={res.total} [{res.breakdown()}]")
    return EXIT_OK


def _cmd_delzant_bound(args) -> int:
    poly = DelzantPolytope.from_json(Path(args.polytope).read_text())
    ham = hamiltonian_from_json_dict(
        json.loads(Path(args.hamiltonian).read_text()))
    cert = certify_k_bound(poly, ham, args.kmax, mode=args.mode)
    payload = {
        "c_growth": cert.c_growth, "c_offset": cert.c_offset,
        "fitted_degree": cert.fitted_degree, "ok": cert.ok,
        "entries": [{"k": e.k, "count": e.count, "bound": e.bound,
                     "ok": e.ok} for e in cert.entries],
    }
    out = Path(args.out)
    out.write_text(json.dumps(payload, indent=2) + "\n")
    _write_manifest(out, "delzant-bound", {
        "polytope": args.polytope, "hamiltonian": args.hamiltonian,
        "kmax": args.kmax, "mode": args.mode, "jobs": args.jobs})
    print(f"fitted_degree={cert.fitted_degree:.4g} "
          f"{'ok' if cert.ok else 'FAIL'}")
    return EXIT_OK if cert.ok else EXIT_CHECK


def _cmd_barcode_reduce(args) -> int:
    cx = FilteredComplex.from_json(Path(args.complex).read_text())
    barcode = reduce_complex(cx)
    out = Path(args.out)
    out.write_text(barcode.to_json() + "\n")
    _write_manifest(out, "barcode-reduce", {"complex": args.complex,
                                            "jobs": args.jobs})
    print(f"{len(barcode.bars)} bars")
    return EXIT_OK


def _cmd_barcode_beps(args) -> int:
    barcode = Barcode.from_json(Path(args.bars).read_text())
    count = count_long_bars(barcode, args.eps, args.s)
    print(count)
    return EXIT_OK


def _cmd_barcode_bottleneck(args) -> int:
    left = Barcode.from_json(Path(args.a).read_text())
    right = Barcode.from_json(Path(args.b).read_text())
    print(format(bottleneck_distance(left, right), ".17g"))
    return EXIT_OK


def _cmd_bm_ratio(args) -> int:
    f_dom = _load_domain(args.f)
    g_dom = _load_domain(args.g)
    rb = log_ratio_bound(f_dom, g_dom, resolution=args.resolution)
    print(format(rb.bound, ".17g"))
    return EXIT_OK


def _cmd_bm_ladder(args) -> int:
    ladder = ApproximationLadder.from_json(Path(args.ladder).read_text())
    res = ladder.liminf(args.eps, args.s, args.tol)
    print(f"liminf={res.value:g} stabilized={str(res.stabilized).lower()}")
    return EXIT_OK if res.stabilized else EXIT_CHECK


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriclab",
        description="Toric domain spectra, growth certificates and "
                    "barcode utilities.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    default_jobs = int(os.environ.get("TORICLAB_JOBS", "1"))

    def add_jobs(p):
        p.add_argument("--jobs", type=int, default=default_jobs,
                       help="worker cap; results are identical for any value")

    p = sub.add_parser("spectrum", help="enumerate orbit classes")
    p.add_argument("--domain", required=True)
    p.add_argument("--smax", type=float, required=True)
    p.add_argument("--method", default="auto",
                   choices=["auto", "support", "gauss"])
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("growth", help="sample generator counts and fit rates")
    p.add_argument("--domain", required=True)
    p.add_argument("--smax", type=float, required=True)
    p.add_argument("--samples", type=int, default=32)
    p.add_argument("--fit-lo", type=float, default=None)
    p.add_argument("--fit-hi", type=float, default=None)
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("bound", help="polynomial growth certificate")
    p.add_argument("--domain", required=True)
    p.add_argument("--s", required=True, help="comma-separated cutoffs")
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("mollify", help="run the smoothing ladder")
    p.add_argument("--domain", required=True)
    p.add_argument("--etas", required=True, help="comma-separated scales")
    p.add_argument("--resolution", type=int, default=800)
    p.add_argument("--seed", type=int, default=20260814)
    p.add_argument("--export-grid", default=None,
                   help="write the last rung as a domain JSON")
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_mollify)

    delzant = sub.add_parser("delzant", help="Delzant polytope flows")
    dsub = delzant.add_subparsers(dest="subcommand", required=True)

    p = dsub.add_parser("count", help="fixed points of the time-k flow")
    p.add_argument("--polytope", required=True)
    p.add_argument("--hamiltonian", required=True)
    p.add_argument("--k", required=True, help="comma-separated k values")
    p.add_argument("--mode", default="divisor",
                   choices=["divisor", "q_le_k"])
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_delzant_count)

    p = dsub.add_parser("bound", help="growth certificate in k")
    p.add_argument("--polytope", required=True)
    p.add_argument("--hamiltonian", required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--mode", default="divisor",
                   choices=["divisor", "q_le_k"])
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_delzant_bound)

    barcode = sub.add_parser("barcode", help="barcode utilities")
    bsub = barcode.add_subparsers(dest="subcommand", required=True)

    p = bsub.add_parser("reduce", help="barcode of a filtered complex")
    p.add_argument("--complex", required=True)
    p.add_argument("--out", required=True)
    add_jobs(p)
    p.set_defaults(func=_cmd_barcode_reduce)

    p = bsub.add_parser("beps", help="count long bars")
    p.add_argument("--bars", required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(func=_cmd_barcode_beps)

    p = bsub.add_parser("bottleneck", help="bottleneck distance")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_barcode_bottleneck)

    bm = sub.add_parser("bm", help="scale distance and ladders")
    msub = bm.add_subparsers(dest="subcommand", required=True)

    p = msub.add_parser("ratio", help="scale distance upper bound")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--resolution", type=int, default=2000)
    p.set_defaults(func=_cmd_bm_ratio)

    p = msub.add_parser("ladder", help="liminf of long-bar counts")
    p.add_argument("--ladder", required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_bm_ladder)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _CHECK_ERRORS as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ToricLabError, OSError, json.JSONDecodeError, KeyError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
