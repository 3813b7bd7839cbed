"""The growth function g on the comb domain, written to CSV and SVG.

g(t) is the distance to the boundary along the ray t e1. Teeth close to the
axis bring it down to zero at their roots, so g oscillates as t approaches 1.
The script tabulates g and renders it with the package's SVG emitter.

Run: python3 demos/comb_profile.py [output-directory]
"""

from __future__ import annotations

import sys
from pathlib import Path

from hypgrow import catalog
from hypgrow.plot import emit_svg_plot
from hypgrow.profile import emit_profile_csv, profile
from hypgrow.verify import comb_extrema_check


def main(out_dir="demo_output"):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = profile(catalog()["comb"], None, (1.0, 0.0), t_max=0.97, steps=388)
    emit_profile_csv(table, out / "comb_g.csv")
    emit_svg_plot(out / "comb_g.csv", out / "comb_g.svg")
    g = table.column("g")
    print(f"wrote {out / 'comb_g.csv'} and {out / 'comb_g.svg'} ({len(g)} rows, max g = {g.max():.4f})")
    print()
    for r in comb_extrema_check(3):
        print(f"{r.claim_id:<24}{r.status:<9}expected {r.expected}, observed {r.observed}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
