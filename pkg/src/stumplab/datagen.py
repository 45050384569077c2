"""Seeded synthetic datasets shaped like the classic UCI benchmarks.

Real clinical CSVs cannot ship with the repo, so demos and the acceptance
suite run on generated stand-ins with the same shape: a 699x9 integer-graded
tumor table (classes benign/malignant) and a 768x8 metabolic panel
(classes negative/positive). Class-conditional feature distributions are
tuned so a bagged-tree target is accurate and low-complexity stump
surrogates can track it closely.
"""

from __future__ import annotations

import io

import numpy as np

BREAST_FEATURES = [
    "clump_thic", "size_un", "shape_un", "marg_adh", "epi_size",
    "bare_nuc", "bland_chr", "norm_nucl", "mitoses",
]

DIABETES_FEATURES = [
    "Pregnancies", "Glucose", "BloodPressure", "SkinThickness",
    "Insulin", "BMI", "DiabetesPedigree", "Age",
]


def _grade_column(rng, n, mean, sd):
    """Integer severity grades on the 1..10 scale."""
    vals = np.rint(rng.normal(mean, sd, size=n))
    return np.clip(vals, 1, 10).astype(int)


def make_breast_cancer_csv(seed: int = 0, n_benign: int = 458, n_malignant: int = 241,
                           label_noise: float = 0.025) -> str:
    """CSV text: 9 graded features, label column ``class`` in
    {benign, malignant}. A small fraction of labels is flipped so the
    table has borderline cases like the real one."""
    rng = np.random.default_rng(seed)
    # (benign mean, malignant mean, sd) per feature; a few dominate,
    # mitoses stays weakly informative like in the original table
    profile = [
        (2.5, 7.2, 1.6),   # clump_thic
        (1.8, 6.8, 1.7),   # size_un
        (1.9, 6.9, 1.7),   # shape_un
        (1.6, 5.8, 2.0),   # marg_adh
        (2.2, 5.4, 2.0),   # epi_size
        (1.7, 7.5, 1.8),   # bare_nuc
        (2.4, 5.9, 1.9),   # bland_chr
        (1.9, 6.2, 2.2),   # norm_nucl
        (1.2, 2.9, 1.6),   # mitoses
    ]
    cols_b = [_grade_column(rng, n_benign, mb, sd) for (mb, _, sd) in profile]
    cols_m = [_grade_column(rng, n_malignant, mm, sd) for (_, mm, sd) in profile]
    X = np.vstack([np.column_stack(cols_b), np.column_stack(cols_m)])
    labels = ["benign"] * n_benign + ["malignant"] * n_malignant
    flip = rng.random(len(labels)) < label_noise
    labels = [
        ("malignant" if lab == "benign" else "benign") if f else lab
        for lab, f in zip(labels, flip)
    ]
    order = rng.permutation(len(labels))

    buf = io.StringIO()
    buf.write(",".join(BREAST_FEATURES + ["class"]) + "\n")
    for i in order:
        row = ",".join(str(int(v)) for v in X[i])
        buf.write(f"{row},{labels[i]}\n")
    return buf.getvalue()


def make_diabetes_csv(seed: int = 0, n_negative: int = 500, n_positive: int = 268) -> str:
    """CSV text: 8 continuous features, label column ``outcome`` in
    {negative, positive}."""
    rng = np.random.default_rng(seed)
    profile = [
        (3.0, 4.9, 3.2, 0),     # Pregnancies
        (110.0, 142.0, 24.0, 1),  # Glucose (dominant)
        (68.0, 74.0, 12.0, 1),  # BloodPressure
        (19.5, 22.5, 15.0, 1),  # SkinThickness
        (68.0, 110.0, 95.0, 1),  # Insulin
        (30.3, 35.2, 6.6, 1),   # BMI
        (0.43, 0.55, 0.30, 2),  # DiabetesPedigree
        (31.0, 37.0, 11.0, 0),  # Age
    ]

    def block(n, use_pos_mean):
        cols = []
        for (m_neg, m_pos, sd, dec) in profile:
            m = m_pos if use_pos_mean else m_neg
            vals = np.maximum(rng.normal(m, sd, size=n), 0.0)
            cols.append(np.round(vals, dec))
        return np.column_stack(cols)

    X = np.vstack([block(n_negative, False), block(n_positive, True)])
    labels = ["negative"] * n_negative + ["positive"] * n_positive
    order = rng.permutation(len(labels))

    buf = io.StringIO()
    buf.write(",".join(DIABETES_FEATURES + ["outcome"]) + "\n")
    for i in order:
        row = ",".join(repr(float(v)) if v != int(v) else str(int(v)) for v in X[i])
        buf.write(f"{row},{labels[i]}\n")
    return buf.getvalue()
