#!/usr/bin/env python3
"""Write the two synthetic demo tables (breast-cancer-shaped and
diabetes-shaped) as CSVs ready for the CLI or the web UI."""

from __future__ import annotations

import argparse
from pathlib import Path

from stumplab.datagen import make_breast_cancer_csv, make_diabetes_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data", help="output directory")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "breast_cancer.csv").write_text(make_breast_cancer_csv(args.seed))
    (out / "diabetes.csv").write_text(make_diabetes_csv(args.seed))
    print(f"wrote {out / 'breast_cancer.csv'} (699x9, classes benign/malignant)")
    print(f"wrote {out / 'diabetes.csv'} (768x8, classes negative/positive)")


if __name__ == "__main__":
    main()
