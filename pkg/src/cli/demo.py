"""
Module: demo

The triangle demonstration: the bumps g_θ form a Cauchy sequence in the
Skorokhod distance, have no limit among ordinary functions, and converge in the
completion to a turbofunction with one instanton at s = 1/2.

Artifacts written to the output directory:
    g_theta_overlay.svg   the bumps on shared axes
    pairwise.csv          certified ρ upper bounds against |1/θ₁ - 1/θ₂| (two or more θ)
    limit.yaml            the constructed limit as a turbo document
    limit.svg             visualization of the constructed limit
    paper_limit.svg       visualization of (g_4, flat σ) with its instanton
    pointwise.csv         pointwise deviations from (g_4, flat σ)

Dependencies:
    - pandas
    - src.completion
    - src.metric
"""

import logging
from pathlib import Path
from typing import List, Sequence

import pandas as pd

from src.cli.commands import number
from src.cli.documents import from_object, save_document
from src.cli.render import write_csv, write_overlay_svg, write_visualization_svg
from src.completion import CauchySequence, cauchy_limit, pointwise_check
from src.errors.core import OutputError, PreconditionError
from src.metric import rho_bounds, rho_plus_bounds
from src.models import SkoroConfig
from src.models.report import CommandResult
from src.turbo import embed, g_theta_family, paper_limit

logger = logging.getLogger(__name__)

DEFAULT_THETAS = (4.0, 8.0, 16.0, 32.0, 64.0)
POINTWISE_TIMES = (0.1, 0.25, 0.4, 0.45, 0.5, 0.55, 0.6, 0.75, 0.9, 1.0)


def parse_theta_list(text: str) -> List[float]:
    """
    Parses a comma-separated θ list.

    Raises:
        PreconditionError: If an entry is not a number.
    """
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise PreconditionError(f"Invalid theta list {text!r}: {e}") from e


def _check_thetas(thetas: Sequence[float]) -> None:
    if not thetas:
        raise PreconditionError("At least one theta is required")
    for theta in thetas:
        if not theta > 2.0:
            raise PreconditionError(f"theta must be greater than 2, got {theta}")
    for a, b in zip(thetas, thetas[1:]):
        if not b > a:
            raise PreconditionError(f"theta values must increase, got {a} then {b}")


def cmd_demo_triangle(
    thetas: Sequence[float], tol: float, outdir: str, config: SkoroConfig
) -> CommandResult:
    """
    Runs the triangle demonstration end to end.

    Args:
        thetas (Sequence[float]): Increasing θ values, each greater than 2.
        tol (float): Tolerance of every bound and of the limit residual.
        outdir (str): Directory for the artifacts; created if missing.
        config (SkoroConfig): Solver and output configuration.

    Returns:
        CommandResult: Exit code 0 iff every bound holds within tol, 1 otherwise.

    Raises:
        PreconditionError: If the θ list is empty, not increasing, or has an entry <= 2.
        OutputError: If the output directory or an artifact cannot be written.
    """
    _check_thetas(thetas)
    if not tol > 0.0:
        raise PreconditionError(f"Tolerance must be positive, got {tol}")
    out = Path(outdir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"Cannot create {out}: {e}") from e

    settings = config.solver
    figure_size = config.output.figure_size
    bumps = [g_theta_family(theta) for theta in thetas]
    lines: List[str] = []
    artifacts: List[str] = []
    passed = True

    overlay = out / "g_theta_overlay.svg"
    write_overlay_svg({f"θ = {number(t)}": g for t, g in zip(thetas, bumps)}, overlay, "g_θ", figure_size)
    artifacts.append(str(overlay))

    if len(thetas) > 1:
        rows = []
        for i in range(len(thetas)):
            for j in range(i + 1, len(thetas)):
                certificate = rho_bounds(bumps[i], bumps[j], tol, settings)
                bound = abs(1.0 / thetas[i] - 1.0 / thetas[j])
                holds = certificate.upper <= bound + tol
                passed = passed and holds
                rows.append({
                    "theta_1": thetas[i], "theta_2": thetas[j],
                    "lower": certificate.lower, "upper": certificate.upper,
                    "bound": bound, "holds": holds,
                })
                lines.append(
                    f"pair {number(thetas[i])} {number(thetas[j])} upper {number(certificate.upper)} "
                    f"bound {number(bound)} {'ok' if holds else 'FAILED'}"
                )
        pairwise = out / "pairwise.csv"
        write_csv(pd.DataFrame(rows), pairwise)
        artifacts.append(str(pairwise))

    items = [embed(g) for g in bumps]
    sequence = CauchySequence.build(items, tol, settings=settings)
    report = cauchy_limit(sequence, tol, settings)
    lines.append(
        f"limit residual {number(report.residual)} levels {report.levels_used} "
        f"indices {','.join(str(i) for i in report.indices)}"
    )
    limit_doc = out / "limit.yaml"
    save_document(from_object(report.limit, name="triangle-limit"), limit_doc)
    artifacts.append(str(limit_doc))

    target = paper_limit()
    certificate = rho_plus_bounds(report.limit, target, tol, settings)
    bound = 1.0 / thetas[-1] + report.residual
    holds = certificate.upper <= bound + tol
    passed = passed and holds
    lines.append(
        f"limit-distance upper {number(certificate.upper)} bound {number(bound)} {'ok' if holds else 'FAILED'}"
    )

    for name, value in (("limit.svg", report.limit), ("paper_limit.svg", target)):
        path = out / name
        write_visualization_svg(value, path, title=name[:-4], figure_size=figure_size)
        artifacts.append(str(path))

    pointwise = pointwise_check(sequence, target, POINTWISE_TIMES, tol)
    table = pd.DataFrame([
        {
            "s": entry.s,
            "classification": entry.classification.value,
            "last_deviation": entry.deviations[-1] if entry.deviations else None,
            "tail_max": entry.tail_max,
            "decreasing": entry.decreasing,
            "converged": entry.converged,
        }
        for entry in pointwise.entries
    ])
    pointwise_path = out / "pointwise.csv"
    write_csv(table, pointwise_path)
    artifacts.append(str(pointwise_path))
    for entry in pointwise.entries:
        lines.append(f"pointwise s {number(entry.s)} {entry.classification.value}")

    lines.append("all bounds hold" if passed else "some bounds FAILED")
    lines += [f"wrote {path}" for path in artifacts]
    logger.info("Triangle demo finished: %s", "passed" if passed else "failed")
    return CommandResult(exit_code=0 if passed else 1, lines=lines, artifacts=artifacts)
