"""
========================================
ARF ENUMERATION - COUNT TABLE PLOTS
========================================

Annotated heatmap of a count table (rows r, columns n), saved as PNG.

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import logging
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402
import seaborn as sns  # noqa: E402

logger = logging.getLogger(__name__)


def plot_count_table(table: pd.DataFrame, path: str, title: str = "Arf semigroups by rank and genus") -> str:
    """
    Save a seaborn heatmap of the table.

    Colours follow log10(1 + count) so that small and large cells are both
    visible; annotations keep the exact integers.

    Returns:
        str: the path written
    """
    counts = table.astype("int64")
    shade = np.log10(1 + counts.to_numpy(dtype=float))

    width = max(6, 0.6 * counts.shape[1] + 2)
    height = max(4, 0.45 * counts.shape[0] + 2)
    plt.figure(figsize=(width, height))
    sns.heatmap(
        shade,
        annot=counts.to_numpy(),
        fmt="d",
        cmap="Blues",
        cbar=False,
        xticklabels=[str(c) for c in counts.columns],
        yticklabels=[str(i) for i in counts.index],
        annot_kws={"fontsize": 6},
    )
    plt.title(title)
    plt.xlabel("genus n")
    plt.ylabel("rank r")

    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    plt.savefig(path, bbox_inches="tight")
    plt.close()
    logger.info(f"Saved count table plot to {path}")
    return path
