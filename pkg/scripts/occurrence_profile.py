#!/usr/bin/env python3
"""Letter bookkeeping for one degree: per-position counts and run histograms."""

from __future__ import annotations

import argparse

from bchseries import letter_occurrence_profile, preset


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("degree", type=int, help="series degree to profile")
    parser.add_argument("--variant", default="standard", help="preset name")
    args = parser.parse_args(argv)

    profile = letter_occurrence_profile(args.degree, preset(args.variant))
    print(f"variant={args.variant} degree={profile.n}")
    print(f"non-zero words: {profile.term_count}")
    print(f"X per position: {profile.x_position_counts} (total {profile.x_total})")
    print(f"Y per position: {profile.y_position_counts} (total {profile.y_total})")
    print(f"maximal X-run histogram: {profile.x_run_histogram}")
    print(f"maximal Y-run histogram: {profile.y_run_histogram}")
    print(f"run totals consistent with position totals: {profile.consistent}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
