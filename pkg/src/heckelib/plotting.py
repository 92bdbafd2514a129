"""Figure rendering for Li-coefficient reports.

Writes static PNGs next to the delimited output: one of tau against n
with the cutoff-oscillation band, and one of the four breakdown terms.
Pure presentation; nothing here feeds back into the numerics.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .li import LiReport  # noqa: E402


def render_li_figures(reports: list[LiReport], directory: str | Path) -> list[Path]:
    """Render tau and breakdown figures for one li run; returns file paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    if not reports:
        return []
    ns = [r.n for r in reports]
    taus = [r.tau for r in reports]
    bands = [r.oscillation_band for r in reports]
    cutoff = reports[0].cutoff
    conv = reports[0].convention

    tau_path = directory / "tau.png"
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.errorbar(ns, taus, yerr=bands, fmt="o-", capsize=3, lw=1.2, ms=4,
                label=rf"$\tau(n)$ at cutoff $X = {cutoff}$")
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.set_xlabel("n")
    ax.set_ylabel(r"$\tau(n)$")
    ax.set_title(f"Li-type coefficients ({conv} convention); bars = oscillation band")
    ax.legend()
    fig.tight_layout()
    fig.savefig(tau_path, dpi=150)
    plt.close(fig)

    parts_path = directory / "breakdown.png"
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for attr, label in [
        ("level_term", "level"),
        ("archimedean_term", "archimedean"),
        ("prime_sum", "prime sum (subtracted)"),
        ("binomial_tail", "binomial tail"),
    ]:
        ax.plot(ns, [getattr(r, attr) for r in reports], "o-", lw=1.2, ms=3, label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("term value")
    ax.set_title(f"Breakdown of the explicit-formula assembly (X = {cutoff})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(parts_path, dpi=150)
    plt.close(fig)
    return [tau_path, parts_path]
