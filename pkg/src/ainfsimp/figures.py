"""Figure rendering for verification reports.

The report path of the CLI writes, alongside the JSON and CSV outputs, a
status summary figure (stacked bars of pass/fail/skip per relation) and,
when the report contains per-(level, tuple) face checks, a grid of cell
statuses over (level, tuple size).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import FAIL, PASS, SKIP

_STATUS_COLORS = {PASS: "#2e7d32", FAIL: "#c62828", SKIP: "#9e9e9e"}


def render_status_summary(report, path):
    """Stacked horizontal bars of outcome counts per relation id."""
    by_relation = report.by_relation()
    relations = sorted(by_relation)
    counts = {
        status: [sum(1 for e in by_relation[r] if e.status == status)
                 for r in relations]
        for status in (PASS, FAIL, SKIP)
    }
    height = max(2.0, 0.35 * len(relations) + 1.2)
    fig, ax = plt.subplots(figsize=(8, height))
    left = [0] * len(relations)
    for status in (PASS, FAIL, SKIP):
        ax.barh(relations, counts[status], left=left,
                color=_STATUS_COLORS[status], label=status)
        left = [a + b for a, b in zip(left, counts[status])]
    ax.set_xlabel("checks")
    ax.set_title(report.title or "verification report")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_cell_grid(report, path, relation="1.1"):
    """Grid of statuses over (level, tuple size) for one face-type relation;
    returns None when the report has no such cells."""
    cells = {}
    for e in report.entries:
        if e.relation != relation or "level" not in e.params:
            continue
        key = (e.params["level"], len(e.params.get("tuple", [])))
        worst = cells.get(key)
        rank = {PASS: 0, SKIP: 1, FAIL: 2}
        if worst is None or rank[e.status] > rank[worst]:
            cells[key] = e.status
    if not cells:
        return None
    levels = sorted({n for n, _ in cells})
    sizes = sorted({k for _, k in cells})
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * len(levels),
                                    1.0 + 0.6 * len(sizes)))
    for (n, k), status in cells.items():
        ax.add_patch(plt.Rectangle((levels.index(n), sizes.index(k)), 1, 1,
                                   facecolor=_STATUS_COLORS[status],
                                   edgecolor="white"))
    ax.set_xlim(0, len(levels))
    ax.set_ylim(0, len(sizes))
    ax.set_xticks([i + 0.5 for i in range(len(levels))])
    ax.set_xticklabels(levels)
    ax.set_yticks([i + 0.5 for i in range(len(sizes))])
    ax.set_yticklabels(sizes)
    ax.set_xlabel("level")
    ax.set_ylabel("tuple size")
    ax.set_title(f"relation {relation} cells")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_report_outputs(report, out_dir, stem="report"):
    """Write JSON + CSV + figures for a report; returns the written paths."""
    import os
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    json_path = os.path.join(out_dir, f"{stem}.json")
    report.dump(json_path)
    paths.append(json_path)
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    report.write_csv(csv_path)
    paths.append(csv_path)
    paths.append(render_status_summary(report, os.path.join(out_dir, f"{stem}_status.png")))
    for relation in ("1.1", "1.2", "1.4"):
        grid = render_cell_grid(report, os.path.join(
            out_dir, f"{stem}_cells_{relation.replace('.', '_')}.png"), relation)
        if grid:
            paths.append(grid)
    return paths
