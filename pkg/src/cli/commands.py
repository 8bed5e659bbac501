"""
Module: commands

Implementations of the command-line commands.

Every command takes document paths and the loaded configuration and returns a
CommandResult; printing and exit statuses are left to the caller. Errors are
raised as ApplicationError subclasses.

Example:
    >>> from src.cli.commands import cmd_rho
    >>> from src.models import SkoroConfig
    >>> result = cmd_rho("f.yaml", "g.yaml", tol=1e-4, exact=False, config=SkoroConfig())
    >>> print("\\n".join(result.lines))

Dependencies:
    - src.cli.documents
    - src.cli.render
    - src.metric
    - src.turbo
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple

from src.cli.documents import dump_document, from_object, load_document, load_function, load_turbo, save_document
from src.cli.render import visualization_table, write_csv, write_visualization_svg
from src.errors.core import PreconditionError
from src.metric import rho_bounds, rho_plus_bounds, rho_step_exact
from src.models import SkoroConfig
from src.models.certificate import DistanceCertificate
from src.models.report import CommandResult, EquivalenceDecision, NodeDifference
from src.turbo import Turbofunction, canonicalize, instantons, visualize
from src.turbo.equivalence import is_equivalent

logger = logging.getLogger(__name__)

EXIT_CODES = {
    EquivalenceDecision.EQUIVALENT: 0,
    EquivalenceDecision.NOT_EQUIVALENT: 1,
    EquivalenceDecision.UNKNOWN: 5,
}


def number(value: float) -> str:
    return format(float(value), ".17g")


def format_certificate(certificate: DistanceCertificate) -> List[str]:
    """Two result lines: the bounds with the exact flag, then the witness nodes."""
    witness = " ".join(f"({number(t)},{number(v)})" for t, v in certificate.witness.nodes)
    return [
        f"lower {number(certificate.lower)} upper {number(certificate.upper)} "
        f"exact {str(certificate.exact).lower()}",
        f"witness {witness}",
    ]


def cmd_rho(
    file_f: str, file_g: str, tol: Optional[float], exact: bool, config: SkoroConfig
) -> CommandResult:
    """
    Skorokhod distance between two function documents.

    Raises:
        DocumentError: If a document cannot be parsed or validated.
        PreconditionError: If a document is not a function, or exact is requested
            for a non-step function.
    """
    f = load_function(file_f)
    g = load_function(file_g)
    if exact:
        if not (f.is_step and g.is_step):
            raise PreconditionError("--exact needs two step functions")
        certificate = rho_step_exact(f, g, config.solver)
    else:
        certificate = rho_bounds(f, g, tol, config.solver)
    return CommandResult(lines=format_certificate(certificate))


def cmd_rho_plus(file_x: str, file_y: str, tol: Optional[float], config: SkoroConfig) -> CommandResult:
    """Semi-distance between two turbofunction documents; function documents are embedded."""
    x = load_turbo(file_x)
    y = load_turbo(file_y)
    return CommandResult(lines=format_certificate(rho_plus_bounds(x, y, tol, config.solver)))


def _instanton_lines(x: Turbofunction) -> List[str]:
    return [
        f"instanton s {number(item.s)} interval {number(item.t_interval[0])} {number(item.t_interval[1])} "
        f"range {number(item.value_range[0])} {number(item.value_range[1])}"
        for item in instantons(x)
    ]


def cmd_instantons(file_x: str, config: SkoroConfig) -> CommandResult:
    """Lists the instantons of a turbofunction document, ordered by level."""
    lines = _instanton_lines(load_turbo(file_x))
    return CommandResult(lines=[f"instantons {len(lines)}"] + lines)


def cmd_visualize(
    file_x: str, svg: Optional[str], csv: Optional[str], config: SkoroConfig
) -> CommandResult:
    """
    Writes the visualization of a turbofunction document.

    Args:
        file_x (str): Turbofunction (or function) document.
        svg (Optional[str]): SVG destination, if any.
        csv (Optional[str]): CSV destination, if any.
        config (SkoroConfig): Configuration; output.csv_samples and output.figure_size are used.

    Raises:
        OutputError: If a destination cannot be written.
    """
    x = load_turbo(file_x)
    name = load_document(file_x).name
    artifacts = []
    if csv:
        write_csv(visualization_table(x, config.output.csv_samples), csv)
        artifacts.append(csv)
    if svg:
        write_visualization_svg(x, svg, title=name, figure_size=config.output.figure_size)
        artifacts.append(svg)
    lines = [f"nodes {visualize(x).size}", f"instantons {len(x.sigma.flat_intervals)}"]
    lines += _instanton_lines(x)
    lines += [f"wrote {path}" for path in artifacts]
    return CommandResult(lines=lines, artifacts=artifacts)


def cmd_canonical(file_x: str, out: Optional[str], config: SkoroConfig) -> CommandResult:
    """
    Canonical form of a turbofunction document, printed as a document or saved to out.
    """
    doc = load_document(file_x)
    x = load_turbo(file_x)
    canonical = from_object(canonicalize(x, config.solver.node_tolerance), name=doc.name)
    if out:
        save_document(canonical, out)
        return CommandResult(lines=[f"wrote {out}"], artifacts=[out])
    return CommandResult(lines=dump_document(canonical).splitlines())


def _node_text(node: Optional[Tuple[float, ...]]) -> str:
    return "none" if node is None else "(" + ",".join(number(v) for v in node) + ")"


def _difference_line(difference: NodeDifference) -> str:
    return (
        f"first-difference {difference.component} node {difference.index} "
        f"x {_node_text(difference.x_node)} y {_node_text(difference.y_node)}"
    )


def cmd_equiv(file_x: str, file_y: str, config: SkoroConfig) -> CommandResult:
    """
    Equivalence of two turbofunction documents.

    Returns:
        CommandResult: Exit code 0 for equivalent, 1 for not-equivalent and 5 for unknown.
        When the canonical forms differ, the first differing node of each is printed.
    """
    x = load_turbo(file_x)
    y = load_turbo(file_y)
    report = is_equivalent(x, y, config.solver)
    lines = [f"decision {report.decision.value}", f"canonical-difference {number(report.canonical_difference)}"]
    if report.lower_bound is not None:
        lines.append(f"lower {number(report.lower_bound)} upper {number(report.upper_bound)}")
    if report.first_difference is not None:
        lines.append(_difference_line(report.first_difference))
    logger.info("%s vs %s: %s", Path(file_x).name, Path(file_y).name, report.decision.value)
    return CommandResult(exit_code=EXIT_CODES[report.decision], lines=lines)
