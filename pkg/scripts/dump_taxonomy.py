#!/usr/bin/env python3
"""Write the 43-type table as Markdown, with one example conic per row."""

import argparse
import sys

from pe_conics import classify
from pe_conics.numeric import fmt
from pe_conics.synthesis import canonical_conic, parameter_grid
from pe_conics.taxonomy import taxonomy


def example(class_id: str) -> str:
    grid = parameter_grid(class_id)
    if not grid:
        return "-"
    c = canonical_conic(class_id, **grid[len(grid) // 2])
    assert classify(c).class_id == class_id
    return ", ".join(fmt(v) for v in c.coeffs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    lines = [
        "| id | family | proper | name | conditions | example (a00..a22) |",
        "|---|---|---|---|---|---|",
    ]
    for r in taxonomy():
        name = r.display_name + (" *" if r.reconstructed else "")
        lines.append(
            f"| `{r.id}` | {int(r.family)} | {'yes' if r.proper else 'no'} | {name} | {r.conditions} | {example(r.id)} |"
        )
    lines.append("")
    lines.append("`*` marks reconstructed rows.")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
