"""Evaluation output: delimited table plus rendered figures."""

from pathlib import Path

from .pipeline import EvalReport

FIGURE_DPI = 120


def eval_table_text(report: EvalReport) -> str:
    """Tab-separated per-query table with macro-average footer rows."""
    lines = ["query_id\tprecision\trecall\tretrieved\trelevant"]
    for row in report.rows:
        lines.append(
            f"{row.query_id}\t{row.precision!r}\t{row.recall!r}"
            f"\t{row.retrieved_count}\t{row.relevant_count}"
        )
    lines.append(f"macro\t{report.macro_precision!r}\t{report.macro_recall!r}\t\t")
    return "\n".join(lines) + "\n"


def write_eval_report(report: EvalReport, out_dir: Path) -> list[Path]:
    """Write the table and two figures into *out_dir*; returns the paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    table_path = out_dir / "eval_results.tsv"
    table_path.write_text(eval_table_text(report), encoding="utf-8")
    written.append(table_path)

    labels = [row.query_id for row in report.rows]
    precisions = [row.precision for row in report.rows]
    recalls = [row.recall for row in report.rows]

    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(labels)), 4.0))
    positions = range(len(labels))
    width = 0.38
    ax.bar([p - width / 2 for p in positions], precisions, width, label="precision")
    ax.bar([p + width / 2 for p in positions], recalls, width, label="recall")
    ax.axhline(report.macro_precision, linestyle="--", linewidth=1,
               color="tab:blue", alpha=0.6)
    ax.axhline(report.macro_recall, linestyle="--", linewidth=1,
               color="tab:orange", alpha=0.6)
    ax.set_xticks(list(positions))
    ax.set_xticklabels(labels)
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("score")
    ax.set_title("Per-query precision and recall (dashed: macro averages)")
    ax.legend()
    fig.tight_layout()
    bars_path = out_dir / "eval_precision_recall.png"
    fig.savefig(bars_path, dpi=FIGURE_DPI)
    plt.close(fig)
    written.append(bars_path)

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.scatter(recalls, precisions)
    for row in report.rows:
        ax.annotate(row.query_id, (row.recall, row.precision),
                    textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.scatter([report.macro_recall], [report.macro_precision], marker="x", s=60)
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-0.05, 1.05)
    ax.set_xlabel("recall")
    ax.set_ylabel("precision")
    ax.set_title("Precision vs recall")
    fig.tight_layout()
    scatter_path = out_dir / "eval_scatter.png"
    fig.savefig(scatter_path, dpi=FIGURE_DPI)
    plt.close(fig)
    written.append(scatter_path)

    return written
