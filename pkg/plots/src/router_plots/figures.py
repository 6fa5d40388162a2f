"""CSV readers and figure rendering.

The CSV contract is the one emitted by ``router``: a block of
``# key = value`` metadata lines, one comma-separated header row, then data
rows.  Values are plotted exactly as read; nothing is recomputed.
"""

import csv
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

SPECTRUM_COLUMNS = ("E", "R_a", "T_a", "T_bback", "T_bfwd")
MAP_COLUMNS = ("E", "param", "value")

# curve styling for four-channel spectrum panels
_CHANNEL_STYLE = {
    "R_a": dict(color="black", linestyle="-", label=r"$R_a$"),
    "T_a": dict(color="tab:red", linestyle="--", label=r"$T_a$"),
    "T_bback": dict(color="tab:blue", linestyle=":", label=r"$T_b^{\leftarrow}$"),
    "T_bfwd": dict(color="tab:green", linestyle="-.", label=r"$T_b^{\rightarrow}$"),
}

FIGURE_KINDS = ("spectrum-panel", "heatmap", "cross-section-grid")


class SchemaError(Exception):
    """CSV does not match the expected router output contract."""


@dataclass(frozen=True)
class FigureSpec:
    csv_paths: tuple
    kind: str
    out_path: str
    panel_titles: tuple = ()
    layout: tuple = None  # (rows, cols); derived from the file count if unset
    x_label: str = "E"
    y_label: str = "probability"
    cross_sections: tuple = ()  # param values to slice, empty = all columns

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"kind must be one of {FIGURE_KINDS}")
        if not self.csv_paths:
            raise ValueError("at least one CSV path is required")


def _read_table(path, required):
    """Parse metadata, header and float columns; verify required columns."""
    meta = {}
    rows = []
    header = None
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read: {exc}")
    with fh:
        for line in fh:
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                key, _, value = stripped[1:].partition("=")
                meta[key.strip()] = value.strip()
                continue
            cells = next(csv.reader([stripped]))
            if header is None:
                header = cells
            else:
                rows.append(cells)
    if header is None:
        raise SchemaError(f"{path}: empty CSV, no header row")
    for col in required:
        if col not in header:
            raise SchemaError(f"{path}: missing required column {col!r}")
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    columns = {}
    for col in required:
        i = header.index(col)
        try:
            columns[col] = np.array([float(r[i]) for r in rows])
        except (ValueError, IndexError) as exc:
            raise SchemaError(f"{path}: bad value in column {col!r}: {exc}")
    return meta, columns


def read_spectrum_csv(path):
    """Return (metadata dict, columns dict) of a spectrum CSV."""
    return _read_table(path, SPECTRUM_COLUMNS)


def read_map_csv(path):
    """Return (metadata, E axis, param axis, value grid) of a long-format map CSV."""
    meta, cols = _read_table(path, MAP_COLUMNS)
    e_axis = np.unique(cols["E"])
    p_axis = np.unique(cols["param"])
    if len(e_axis) * len(p_axis) != len(cols["value"]):
        raise SchemaError(f"{path}: rows do not form a dense (E, param) grid")
    grid = np.full((len(e_axis), len(p_axis)), np.nan)
    e_index = {v: i for i, v in enumerate(e_axis)}
    p_index = {v: j for j, v in enumerate(p_axis)}
    for e, p, v in zip(cols["E"], cols["param"], cols["value"]):
        grid[e_index[e], p_index[p]] = v
    return meta, e_axis, p_axis, grid


def _panel_grid(n, layout):
    if layout is not None:
        rows, cols = layout
        if rows * cols < n:
            raise ValueError(f"layout {layout} too small for {n} panels")
        return rows, cols
    cols = 1 if n == 1 else 2
    rows = -(-n // cols)
    return rows, cols


def _panel_title(spec, i, meta):
    if i < len(spec.panel_titles):
        return spec.panel_titles[i]
    if "n_atoms" in meta:
        return f"N = {meta['n_atoms']}"
    return ""


def _render_spectrum_panels(spec, tables):
    rows, cols = _panel_grid(len(tables), spec.layout)
    fig, axes = plt.subplots(
        rows, cols, figsize=(4.0 * cols, 3.0 * rows), squeeze=False, sharex=True
    )
    for i, (meta, columns) in enumerate(tables):
        ax = axes[i // cols][i % cols]
        for name in ("R_a", "T_a", "T_bback", "T_bfwd"):
            ax.plot(columns["E"], columns[name], **_CHANNEL_STYLE[name])
        ax.set_ylim(-0.02, 1.02)
        ax.set_title(_panel_title(spec, i, meta))
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(spec.y_label)
    for j in range(len(tables), rows * cols):
        axes[j // cols][j % cols].set_axis_off()
    axes[0][0].legend(loc="upper right", fontsize=8)
    return fig


def _render_heatmaps(spec, maps):
    rows, cols = _panel_grid(len(maps), spec.layout)
    fig, axes = plt.subplots(
        rows, cols, figsize=(4.5 * cols, 3.4 * rows), squeeze=False
    )
    for i, (meta, e_axis, p_axis, grid) in enumerate(maps):
        ax = axes[i // cols][i % cols]
        mesh = ax.pcolormesh(
            p_axis, e_axis, grid, shading="nearest", vmin=0.0, vmax=1.0
        )
        ax.set_xlabel(meta.get("param", "param"))
        ax.set_ylabel(spec.x_label)
        ax.set_title(_panel_title(spec, i, meta) or meta.get("observable", ""))
        fig.colorbar(mesh, ax=ax)
    for j in range(len(maps), rows * cols):
        axes[j // cols][j % cols].set_axis_off()
    return fig


def _render_cross_sections(spec, maps):
    rows, cols = _panel_grid(len(maps), spec.layout)
    fig, axes = plt.subplots(
        rows, cols, figsize=(4.0 * cols, 3.0 * rows), squeeze=False
    )
    for i, (meta, e_axis, p_axis, grid) in enumerate(maps):
        ax = axes[i // cols][i % cols]
        wanted = spec.cross_sections or tuple(p_axis)
        for p in wanted:
            hits = np.flatnonzero(np.isclose(p_axis, p))
            if len(hits) == 0:
                raise SchemaError(
                    f"cross section at param={p} not present in the map grid"
                )
            j = hits[0]
            ax.plot(e_axis, grid[:, j], label=f"{meta.get('param', 'param')}={p_axis[j]:g}")
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(meta.get("observable", spec.y_label))
        ax.set_ylim(-0.02, 1.02)
        ax.set_title(_panel_title(spec, i, meta))
        ax.legend(fontsize=7)
    for j in range(len(maps), rows * cols):
        axes[j // cols][j % cols].set_axis_off()
    return fig


def render(spec: FigureSpec) -> str:
    """Render the figure described by ``spec`` and write it to spec.out_path.

    All CSVs are read and validated before any drawing happens, so a schema
    error never leaves a partial image behind.  Returns the output path.
    """
    if spec.kind == "spectrum-panel":
        tables = [read_spectrum_csv(p) for p in spec.csv_paths]
        fig = _render_spectrum_panels(spec, tables)
    else:
        maps = [read_map_csv(p) for p in spec.csv_paths]
        if spec.kind == "heatmap":
            fig = _render_heatmaps(spec, maps)
        else:
            fig = _render_cross_sections(spec, maps)
    fig.tight_layout()
    fig.savefig(spec.out_path, dpi=150)
    plt.close(fig)
    return spec.out_path
