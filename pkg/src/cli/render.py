"""
Module: render

CSV tables and SVG drawings of visualizations.

Output is byte-deterministic: CSV numbers use 17 significant digits and SVG
files are written with a fixed hash salt and without a creation date.

Example:
    >>> from src.turbo import paper_limit
    >>> from src.cli.render import write_visualization_svg
    >>> write_visualization_svg(paper_limit(), "limit.svg")

Dependencies:
    - matplotlib
    - numpy
    - pandas
"""

import logging
from pathlib import Path
from typing import Dict, Sequence, Tuple, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from src.errors.core import OutputError
from src.piecewise import CadlagFunction
from src.turbo import Turbofunction, instantons, visualize

logger = logging.getLogger(__name__)

SVG_HASH_SALT = "skorokhod"
FLOAT_FORMAT = "%.17g"

PathLike = Union[str, Path]


def _graph(f: CadlagFunction) -> Tuple[np.ndarray, np.ndarray]:
    """Polyline of f with NaN breaks at jumps."""
    xs = [f.times[0]]
    ys = [f.rights[0]]
    for i in range(1, f.size):
        xs.append(f.times[i])
        ys.append(f.lefts[i])
        if f.lefts[i] != f.rights[i]:
            xs.extend([np.nan, f.times[i]])
            ys.extend([np.nan, f.rights[i]])
    return np.asarray(xs), np.asarray(ys)


def visualization_table(x: Turbofunction, samples: int = 1024) -> pd.DataFrame:
    """
    Values of visualize(x) on a uniform grid joined with its nodes.

    Args:
        x (Turbofunction): The turbofunction to tabulate.
        samples (int): Number of uniform grid points on [0,1].

    Returns:
        pd.DataFrame: Columns s and value, sorted by s, without duplicate times.
    """
    v = visualize(x)
    s = np.union1d(np.linspace(0.0, 1.0, samples), v.times)
    return pd.DataFrame({"s": s, "value": v.values_at(s)})


def write_csv(table: pd.DataFrame, path: PathLike) -> None:
    """
    Raises:
        OutputError: If the file cannot be written.
    """
    try:
        table.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}") from e
    logger.info("Wrote %s (%d rows)", path, len(table))


def _save(fig: plt.Figure, path: PathLike) -> None:
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}") from e
    finally:
        plt.close(fig)
    logger.info("Wrote %s", path)


def write_visualization_svg(
    x: Turbofunction,
    path: PathLike,
    title: str = "",
    figure_size: Sequence[float] = (8.0, 4.5),
) -> None:
    """
    Draws visualize(x) and marks every instanton.

    Each instanton appears as a dashed vertical segment at its level spanning
    the value range of its trace; the traces themselves are drawn in a side
    panel over their rescaled parameter.

    Args:
        x (Turbofunction): The turbofunction to draw.
        path (PathLike): Destination SVG file.
        title (str): Figure title.
        figure_size (Sequence[float]): Width and height in inches.

    Raises:
        OutputError: If the file cannot be written.
    """
    matplotlib.rcParams["svg.hashsalt"] = SVG_HASH_SALT
    found = instantons(x)
    if found:
        fig, (ax, side) = plt.subplots(1, 2, figsize=tuple(figure_size), gridspec_kw={"width_ratios": [3, 1]})
    else:
        fig, ax = plt.subplots(figsize=tuple(figure_size))
        side = None

    xs, ys = _graph(visualize(x))
    ax.plot(xs, ys, color="tab:blue", linewidth=1.5, label="visualization")
    for index, item in enumerate(found):
        lo, hi = item.value_range
        ax.vlines(item.s, lo, hi, colors="tab:red", linestyles="dashed", linewidth=1.5,
                  label="instanton" if index == 0 else None)
        txs, tys = _graph(item.trace)
        side.plot(txs, tys, linewidth=1.2, label=f"s = {item.s:.6g}")
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("s")
    ax.set_ylabel("value")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best")
    if side is not None:
        side.set_xlim(0.0, 1.0)
        side.set_xlabel("trace parameter")
        side.set_title("instanton traces")
        side.grid(True, alpha=0.3)
        side.legend(loc="best")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    _save(fig, path)


def write_overlay_svg(
    curves: Dict[str, CadlagFunction],
    path: PathLike,
    title: str = "",
    figure_size: Sequence[float] = (8.0, 4.5),
) -> None:
    """
    Draws several functions on shared axes, in insertion order.

    Raises:
        OutputError: If the file cannot be written.
    """
    matplotlib.rcParams["svg.hashsalt"] = SVG_HASH_SALT
    fig, ax = plt.subplots(figsize=tuple(figure_size))
    for label, f in curves.items():
        xs, ys = _graph(f)
        ax.plot(xs, ys, linewidth=1.2, label=label)
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("t")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    _save(fig, path)
