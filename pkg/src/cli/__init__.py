"""Command-line surface: document I/O, rendering and the command implementations."""

from src.cli.commands import (
    cmd_canonical,
    cmd_equiv,
    cmd_instantons,
    cmd_rho,
    cmd_rho_plus,
    cmd_visualize,
)
from src.cli.demo import DEFAULT_THETAS, cmd_demo_triangle, parse_theta_list
from src.cli.documents import dump_document, from_object, load_document, parse_document, save_document, to_object

__all__ = [
    "DEFAULT_THETAS",
    "cmd_canonical",
    "cmd_demo_triangle",
    "cmd_equiv",
    "cmd_instantons",
    "cmd_rho",
    "cmd_rho_plus",
    "cmd_visualize",
    "dump_document",
    "from_object",
    "load_document",
    "parse_document",
    "parse_theta_list",
    "save_document",
    "to_object",
]
