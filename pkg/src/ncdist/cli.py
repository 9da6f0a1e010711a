"""Command-line interface.

Subcommands: `kernel` (construct/validate kernel spectra), `indicator`
(nonclassicality distance of a state file), `scan` (chamber grid to CSV),
`polytope` (positivity polytope as JSON) and `sample-min` (Monte-Carlo
check of the analytic floor). Every command prints one JSON object, except
`scan`, which writes one CSV file. Exit codes: 0 success, 2 invalid input,
3 projection failed to converge.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .core import SQRT3, MetricConvention, QutritChart, Spectrum, spectrum_from_matrix
from .distance import distance_general, qutrit_distance
from .errors import NcdistError, NoConvergence
from .geometry import positivity_polytope
from .kernel import KernelSpectrum, kernel_from_spectrum, qutrit_kernel, random_kernel
from .wigner import sampled_min, wigner_floor


def _fmt(x: float) -> str:
    """Decimal form capped at 12 significant digits, stable across runs."""
    return format(float(x) + 0.0, ".12g")


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _thread_cap() -> int:
    """Worker cap from NC_THREADS; 0 or unset means automatic."""
    raw = os.environ.get("NC_THREADS", "").strip()
    if not raw:
        return 0
    cap = int(raw)
    if cap < 0:
        raise ValueError("NC_THREADS must be >= 0")
    return cap


def _zeta_value(args) -> float | None:
    if args.zeta is not None and args.zeta_degrees is not None:
        raise ValueError("give either --zeta or --zeta-degrees, not both")
    if args.zeta is not None:
        return float(args.zeta)
    if args.zeta_degrees is not None:
        return math.radians(float(args.zeta_degrees))
    return None


def _parse_pi(text: str) -> list[float]:
    parts = [p.strip() for p in text.replace("−", "-").split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError("--pi expects a comma-separated list of numbers")
    return [float(p) for p in parts]


def _kernel_from_args(args, n: int, seed_selects_kernel: bool = True) -> KernelSpectrum:
    """Build the kernel requested on the command line.

    Exactly one source must be given: --zeta/--zeta-degrees (qutrit family,
    needs n = 3), --pi (explicit values) or --seed (random spectrum). For
    `sample-min` the seed drives the sampler instead, so only the first two
    sources select the kernel there.
    """
    zeta = _zeta_value(args)
    sources = [zeta is not None, args.pi is not None]
    if seed_selects_kernel:
        sources.append(getattr(args, "seed", None) is not None)
    if sum(sources) != 1:
        names = "--zeta/--zeta-degrees, --pi" + (" or --seed" if seed_selects_kernel else "")
        raise ValueError(f"specify exactly one kernel source: {names}")
    if zeta is not None:
        if n != 3:
            raise ValueError("--zeta parametrizes the qutrit family and needs n = 3")
        return qutrit_kernel(zeta)
    if args.pi is not None:
        return kernel_from_spectrum(_parse_pi(args.pi), n)
    return random_kernel(n, args.seed)


def _load_state(path: str) -> tuple[Spectrum, np.ndarray | None]:
    """Read a state file; returns the spectrum and the matrix when given."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError("state file must be a JSON object with an 'n' field")
    n = int(data["n"])
    has_spectrum = "spectrum" in data
    has_matrix = "matrix_re" in data or "matrix_im" in data
    if has_spectrum == has_matrix:
        raise ValueError(
            "state file needs exactly one payload: 'spectrum' or 'matrix_re'/'matrix_im'"
        )
    if has_spectrum:
        values = [float(v) for v in data["spectrum"]]
        if len(values) != n:
            raise ValueError(f"spectrum has {len(values)} entries, expected n={n}")
        return Spectrum(tuple(values)), None
    if "matrix_re" not in data or "matrix_im" not in data:
        raise ValueError("matrix payload needs both 'matrix_re' and 'matrix_im'")
    m = np.array(data["matrix_re"], dtype=float) + 1j * np.array(
        data["matrix_im"], dtype=float
    )
    if m.shape != (n, n):
        raise ValueError(f"matrix has shape {m.shape}, expected ({n}, {n})")
    return spectrum_from_matrix(m), m


def _cmd_kernel(args) -> int:
    kernel = _kernel_from_args(args, args.n)
    res_trace, res_square = kernel.residuals()
    _emit(
        {
            "pi": list(kernel.values),
            "residual_trace": res_trace,
            "residual_square": res_square,
        }
    )
    return 0


def _cmd_indicator(args) -> int:
    spectrum, _ = _load_state(args.state)
    kernel = _kernel_from_args(args, spectrum.n)
    result = distance_general(spectrum, kernel, MetricConvention(args.convention))
    _emit(
        {
            "w": result.floor,
            "classical": result.classical,
            "distance_paper": result.distance_paper,
            "distance_frobenius": result.distance_frobenius,
            "region": result.region.value if result.region is not None else None,
            "nearest_spectrum": list(result.nearest.values),
        }
    )
    return 0


def _cmd_scan(args) -> int:
    zeta = _zeta_value(args)
    if zeta is None:
        raise ValueError("scan needs --zeta or --zeta-degrees")
    if not 2 <= args.resolution <= 10_000:
        raise ValueError("resolution must be between 2 and 10000")
    convention = MetricConvention(args.convention)
    _thread_cap()  # validated; the closed form keeps the scan fast single-threaded
    res = args.resolution
    lines = ["xi3,xi8,region,distance"]
    for j in range(res):
        xi8 = 0.5 * j / (res - 1)
        for i in range(res):
            xi3 = (SQRT3 / 2.0) * i / (res - 1)
            point = QutritChart(xi3, xi8)
            if not point.in_chamber():
                continue
            result = qutrit_distance(point, zeta)
            d = (
                result.distance_paper
                if convention is MetricConvention.PAPER
                else result.distance_frobenius
            )
            lines.append(f"{_fmt(xi3)},{_fmt(xi8)},{result.region.value},{_fmt(d)}")
    with open(args.output, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return 0


def _cmd_polytope(args) -> int:
    kernel = _kernel_from_args(args, args.n)
    _emit(positivity_polytope(kernel).to_json_dict())
    return 0


def _cmd_sample_min(args) -> int:
    spectrum, rho = _load_state(args.state)
    if rho is None:
        rho = np.diag(np.array(spectrum.values, dtype=complex))
    kernel = _kernel_from_args(args, spectrum.n, seed_selects_kernel=False)
    seed = args.seed if args.seed is not None else 0
    w_analytic = wigner_floor(spectrum, kernel)
    w_sampled = sampled_min(rho, kernel, args.samples, seed)
    _emit(
        {
            "w_analytic": w_analytic,
            "w_sampled": w_sampled,
            "gap": max(0.0, w_sampled - w_analytic),
        }
    )
    return 0


def _add_kernel_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--zeta", type=float, help="qutrit moduli angle in radians")
    sub.add_argument(
        "--zeta-degrees", type=float, dest="zeta_degrees", help="moduli angle in degrees"
    )
    sub.add_argument("--pi", type=str, help="comma-separated kernel spectrum")
    sub.add_argument("--seed", type=int, help="seed (random kernel, or sampler seed)")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nc",
        description="Nonclassicality distance of finite-dimensional quantum states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_kernel = sub.add_parser("kernel", help="construct or validate a kernel spectrum")
    p_kernel.add_argument("--n", type=int, required=True, help="dimension")
    _add_kernel_options(p_kernel)
    p_kernel.set_defaults(func=_cmd_kernel)

    p_ind = sub.add_parser("indicator", help="nonclassicality distance of a state")
    p_ind.add_argument("--state", type=str, required=True, help="state JSON file")
    _add_kernel_options(p_ind)
    p_ind.add_argument(
        "--convention",
        choices=[m.value for m in MetricConvention],
        default=MetricConvention.PAPER.value,
    )
    p_ind.set_defaults(func=_cmd_indicator)

    p_scan = sub.add_parser("scan", help="grid scan of the qutrit chamber to CSV")
    _add_kernel_options(p_scan)
    p_scan.add_argument("--resolution", type=int, required=True)
    p_scan.add_argument("--output", type=str, required=True, help="CSV output path")
    p_scan.add_argument(
        "--convention",
        choices=[m.value for m in MetricConvention],
        default=MetricConvention.PAPER.value,
    )
    p_scan.set_defaults(func=_cmd_scan)

    p_poly = sub.add_parser("polytope", help="positivity polytope as JSON")
    p_poly.add_argument("--n", type=int, required=True, help="dimension")
    _add_kernel_options(p_poly)
    p_poly.set_defaults(func=_cmd_polytope)

    p_samp = sub.add_parser(
        "sample-min", help="Monte-Carlo check of the analytic floor"
    )
    p_samp.add_argument("--state", type=str, required=True, help="state JSON file")
    _add_kernel_options(p_samp)
    p_samp.add_argument("--samples", type=int, default=1000)
    p_samp.set_defaults(func=_cmd_sample_min)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse already wrote to stderr
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NcdistError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
