#!/usr/bin/env python3
"""Plaintext AUC stability check.

Subsamples a scored dataset at several sizes and reports how the ROC area
spreads across repetitions, which shows when a dataset is too small to rank
models reliably and pooling across owners pays off.

Usage: stability_check.py scores.csv [--sizes 5,10,20,40,80,160] [--reps 1000]
"""

import argparse
import random
import statistics
import sys


def read_csv(path):
    rows = []
    with open(path) as fh:
        for ln, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            pcv, label = line.split(",")
            pcv, label = float(pcv), int(label)
            if not 0 <= pcv <= 1 or label not in (0, 1):
                raise SystemExit(f"line {ln}: bad row")
            rows.append((pcv, label))
    return rows


def auroc_tie(rows):
    rows = sorted(rows, key=lambda r: -r[0])
    pos = sum(l for _, l in rows)
    neg = len(rows) - pos
    if pos == 0 or neg == 0:
        return None
    tp = fp = ptp = pfp = 0
    num = 0
    for i, (c, l) in enumerate(rows):
        tp += l
        fp += 1 - l
        if i + 1 == len(rows) or rows[i + 1][0] != c:
            num += 2 * ptp * (fp - pfp) + (tp - ptp) * (fp - pfp)
            ptp, pfp = tp, fp
    return num / (2 * pos * neg)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("--sizes", default="5,10,20,40,80,160")
    ap.add_argument("--reps", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rows = read_csv(args.csv)
    rng = random.Random(args.seed)
    full = auroc_tie(rows)
    print(f"full dataset: n={len(rows)} auroc={full:.4f}")
    for size in (int(s) for s in args.sizes.split(",")):
        if size > len(rows):
            print(f"n={size:4d}  skipped (dataset too small)")
            continue
        values = []
        for _ in range(args.reps):
            v = auroc_tie(rng.sample(rows, size))
            if v is not None:  # subsample may be single-class
                values.append(v)
        mean = statistics.fmean(values)
        sd = statistics.stdev(values) if len(values) > 1 else 0.0
        print(f"n={size:4d}  reps={len(values):4d}  mean={mean:.4f}  sd={sd:.4f}")


if __name__ == "__main__":
    sys.exit(main())
