#!/usr/bin/env python3
"""Render one SVG per constructible type, optionally after a random motion."""

import argparse
import os

from pe_conics import classify, transform
from pe_conics.plot import PlotConfig, render_svg
from pe_conics.synthesis import canonical_conic, constructible_ids, parameter_grid, random_motion


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="gallery")
    ap.add_argument("--seed", type=int, default=None, help="apply a random motion with this seed")
    ap.add_argument("--grid", type=int, default=256)
    args = ap.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    cfg = PlotConfig(window=(-6.0, 6.0, -6.0, 6.0), grid=args.grid)
    for cid in constructible_ids():
        grid = parameter_grid(cid)
        c = canonical_conic(cid, **grid[len(grid) // 2])
        if args.seed is not None:
            c = transform(c, random_motion(args.seed, phi_range=(-1.0, 1.0), t_range=(-2.0, 2.0), exact=True))
        assert classify(c).class_id == cid
        path = os.path.join(args.out_dir, f"{cid}.svg")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render_svg(c, cfg))
    print(f"wrote {len(constructible_ids())} files to {args.out_dir}")


if __name__ == "__main__":
    main()
