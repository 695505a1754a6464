"""Root-atlas figure for the polygon survey."""
from __future__ import annotations

from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .survey import PolygonRecord  # noqa: E402


def render_atlas(records: Iterable[PolygonRecord], path: str, max_circle: int = 12) -> None:
    """Scatter the roots over the circles ``|s + 2/m| = 2/m`` and the admissible region."""
    records = list(records)
    fig, ax = plt.subplots(figsize=(6, 5), dpi=150)
    t = np.linspace(0, 2 * np.pi, 400)
    for m in range(3, max_circle + 1):
        r = 2 / m
        ax.plot(-r + r * np.cos(t), r * np.sin(t), color="0.85", lw=0.6, zorder=1)
    r = 2 / 3
    arc = np.linspace(-np.arccos(1 / 4), np.arccos(1 / 4), 200)
    ax.plot(-r + r * np.cos(arc), r * np.sin(arc), color="tab:blue", lw=1, zorder=2)
    h = np.sqrt(r * r - (r - 0.5) ** 2)
    ax.plot([-0.5, -0.5], [-h, h], color="tab:blue", lw=1, zorder=2)
    zs = [z for rec in records for z in rec.roots.all_roots()]
    if zs:
        ax.scatter([z.real for z in zs], [z.imag for z in zs], s=8, color="black", zorder=3)
    ax.axhline(0, color="0.6", lw=0.5)
    ax.axvline(0, color="0.6", lw=0.5)
    ax.set_aspect("equal")
    ax.set_xlim(-2.1, 0.2)
    ax.set_xlabel("Re s")
    ax.set_ylabel("Im s")
    ax.set_title(f"Ehrhart roots of {len(records)} lattice polygon classes")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
