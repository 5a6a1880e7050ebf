"""Render figure panels from dogblock CSV output.

Every plotted number comes from a CSV column; nothing is recomputed here.
Panels: kernels, coefficients, transfer (from the kernel/transfer CSVs)
and convergence (from the sweep CSV). Multiple comma-separated panels
share one multi-panel figure.

Usage:
    render --panel kernels,coefficients,transfer --in kernel.csv \
           --in2 transfer.csv --out fig3.svg
    render --panel convergence --in sweep.csv --out fig4.svg --loglog
"""

from __future__ import annotations

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

PANELS = ("kernels", "coefficients", "transfer", "convergence")

# input columns each panel reads; missing columns are a hard error
REQUIRED = {
    "kernels": ("t1", "p", "q"),
    "coefficients": ("t1", "c"),
    "transfer": ("w1", "abs_mu"),
    "convergence": ("N", "P_exact", "P_asym"),
}


class RenderError(Exception):
    pass


def read_csv(path) -> dict[str, list[float]]:
    try:
        with open(path, newline="") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames is None:
                raise RenderError(f"{path}: empty file")
            columns = {name: [] for name in reader.fieldnames}
            for row in reader:
                for name in reader.fieldnames:
                    value = row.get(name)
                    if value is None or value == "":
                        raise RenderError(f"{path}: ragged row {row}")
                    columns[name].append(float(value))
    except OSError as exc:
        raise RenderError(str(exc))
    except ValueError as exc:
        raise RenderError(f"{path}: non-numeric cell ({exc})")
    if not next(iter(columns.values()), []):
        raise RenderError(f"{path}: no data rows")
    return columns


def require(columns, panel, path):
    missing = [c for c in REQUIRED[panel] if c not in columns]
    if missing:
        raise RenderError(f"{path}: missing columns {missing} for panel {panel!r}")


def draw_kernels(ax, cols):
    ax.plot(cols["t1"], cols["p"], "o-", label="narrow kernel p")
    ax.plot(cols["t1"], cols["q"], "s-", label="wide kernel q")
    ax.set_xlabel("offset t")
    ax.set_ylabel("weight")
    ax.set_title("Gaussian kernels")
    ax.legend()


def draw_coefficients(ax, cols):
    ax.bar(cols["t1"], cols["c"], width=0.6)
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xlabel("offset t")
    ax.set_ylabel("c = p - q")
    ax.set_title("Stencil coefficients")


def draw_transfer(ax, cols):
    ax.plot(cols["w1"], cols["abs_mu"], "o-")
    ax.set_xlabel("frequency mode")
    ax.set_ylabel("|transfer|")
    ax.set_title("Transfer function")


def draw_convergence(ax, cols, loglog):
    N = cols["N"]
    ax.plot(N, cols["P_exact"], "o-", label="exact")
    ax.plot(N, cols["P_asym"], "s--", label="asymptotic")
    if len(N) > 1:
        # reference quartic decay anchored at the first asymptotic point
        guide = [cols["P_asym"][0] * (N[0] / x) ** 4 for x in N]
        ax.plot(N, guide, ":", color="gray", label="N^-4 guide")
    if loglog:
        ax.set_xscale("log", base=2)
        ax.set_yscale("log", base=2)
    ax.set_xlabel("grid points N")
    ax.set_ylabel("success probability")
    ax.set_title("Success-probability scaling")
    ax.legend()


def render(panels, inputs, out_path, loglog=False):
    if not panels:
        raise RenderError("no panels requested")
    for panel in panels:
        if panel not in PANELS:
            raise RenderError(f"unknown panel {panel!r}; choose from {PANELS}")
    if len(inputs) < 1:
        raise RenderError("at least one input CSV is required")

    loaded = [read_csv(path) for path in inputs]

    def columns_for(panel):
        for path, cols in zip(inputs, loaded):
            if all(c in cols for c in REQUIRED[panel]):
                return cols
        # report against the first input for a concrete message
        require(loaded[0], panel, inputs[0])
        return loaded[0]

    plt.rcParams["svg.hashsalt"] = "dogfigures"
    fig, axes = plt.subplots(1, len(panels), figsize=(5 * len(panels), 4))
    if len(panels) == 1:
        axes = [axes]
    for ax, panel in zip(axes, panels):
        cols = columns_for(panel)
        if panel == "kernels":
            draw_kernels(ax, cols)
        elif panel == "coefficients":
            draw_coefficients(ax, cols)
        elif panel == "transfer":
            draw_transfer(ax, cols)
        else:
            draw_convergence(ax, cols, loglog)
    fig.tight_layout()
    fig.savefig(out_path, metadata={"Date": None})
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Render dogblock CSV output")
    parser.add_argument("--panel", required=True,
                        help="comma-separated panels: " + ", ".join(PANELS))
    parser.add_argument("--in", dest="input1", required=True, help="input CSV")
    parser.add_argument("--in2", dest="input2", default=None, help="second input CSV")
    parser.add_argument("--out", required=True, help="output image path (svg preferred)")
    parser.add_argument("--loglog", action="store_true",
                        help="log-log axes for the convergence panel")
    args = parser.parse_args(argv)

    panels = [p.strip() for p in args.panel.split(",") if p.strip()]
    inputs = [args.input1] + ([args.input2] if args.input2 else [])
    try:
        render(panels, inputs, args.out, loglog=args.loglog)
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
