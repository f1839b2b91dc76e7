"""
Avalanche statistics
====================

Flip one random bit of a random 64-byte message and count how many digest
bits change. An ideal hash flips each output bit with probability 1/2.
"""

import numpy as np

from md192 import analysis

for alg in ("md192", "sha1"):
    report = analysis.avalanche_test(alg, message_length=64, trials=10000, seed=1)
    print(report.to_text())

    # Distribution of per-trial distances, coarsely binned.
    hist = np.asarray(report.distance_histogram)
    edges = np.arange(0, len(hist) + 8, 8)
    for lo, hi in zip(edges[:-1], edges[1:]):
        count = hist[lo:hi].sum()
        if count:
            print(f"  {lo:3d}-{hi - 1:3d} {'#' * int(60 * count / hist.max() / 8)}")
    print()
