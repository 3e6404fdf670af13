"""Figure rendering for the CLI report commands.

Each function writes one file next to the delimited output.  Rendering
lives here, behind the CLI, so the counting and table modules stay pure.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .density import DensityReport
from .oracle import GrundyTable
from .wythoff import WythoffPair


def save_density_figure(rows: list[DensityReport], path: str) -> None:
    """Log-log plot of the exact P-position ratio against N, with the
    1/N^(k+1) falloff drawn for reference."""
    k = rows[0].k
    xs = [row.N for row in rows]
    ys = [float(row.ratio) for row in rows]
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.loglog(xs, ys, "o-", label=r"exact $\pi(N)/\nu(N)$", markersize=3)
    anchor = ys[-1] * xs[-1] ** (k + 1)
    guide = [anchor / x ** (k + 1) for x in xs]
    ax.loglog(xs, guide, "--", color="gray", label=rf"$\propto N^{{-{k + 1}}}$")
    ax.set_xlabel("N")
    ax.set_ylabel("P-position density")
    ax.set_title(f"Cold-position density, k={k}")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_grundy_figure(table: GrundyTable, path: str) -> None:
    """Heatmap of Grundy values on the slice where all but the last two
    heaps are empty."""
    bound = table.bound
    zeros = (0,) * (table.k - 2)
    grid = [
        [table.grundy(tuple(sorted(zeros + (x, y)))) for y in range(bound + 1)]
        for x in range(bound + 1)
    ]
    fig, ax = plt.subplots(figsize=(6.5, 5.5))
    image = ax.imshow(grid, origin="lower", cmap="viridis")
    fig.colorbar(image, ax=ax, label="grundy value")
    ax.set_xlabel("last heap")
    ax.set_ylabel("second-to-last heap")
    ax.set_title(f"Grundy values, k={table.k}, empty first {table.k - 2} heaps")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_wythoff_figure(pairs: list[WythoffPair], path: str) -> None:
    """Scatter of the two-heap cold pairs; the two rays have slopes phi
    and 1/phi."""
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.scatter([p.a for p in pairs], [p.b for p in pairs], s=12, label="(a, b)")
    ax.scatter([p.b for p in pairs], [p.a for p in pairs], s=12, label="(b, a)")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title("Two-heap cold positions")
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
