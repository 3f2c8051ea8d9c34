"""File emission for CLI reports: delimited tables and rendered figures."""

from __future__ import annotations

import csv
import io
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(csv_text(header, rows))


def residual_figure(path, names, residuals, tolerance, title) -> None:
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(names) + 2.0), 3.2))
    vals = np.maximum(np.asarray(residuals, dtype=float), 1e-18)
    ax.bar(range(len(names)), vals, color="#4878cf")
    if tolerance and tolerance > 0:
        ax.axhline(tolerance, color="#d1495b", linestyle="--", label="tolerance")
        ax.legend(loc="upper right", fontsize=8)
    ax.set_yscale("log")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=45, ha="right", fontsize=7)
    ax.set_ylabel("residual")
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def curve_figure(path, x, curves, xlabel, ylabel, title) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    for label, ys in curves.items():
        ax.plot(x, ys, marker=".", markersize=3, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title, fontsize=10)
    if len(curves) > 1:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def ensure_outdir(path) -> str:
    os.makedirs(path, exist_ok=True)
    return path
