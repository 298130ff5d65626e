"""Independent literal-formula implementation of the 40 summary features.

This module deliberately avoids numpy vectorization and FFTs: every
statistic is an explicit loop over plain Python floats, and the Fourier
magnitudes are direct complex exponential sums. It exists so the production
extract_features can be checked against a second derivation of the same
definitions rather than against itself.
"""

import cmath
import math


def naive_features(gammas):
    g = [float(v) for v in gammas]
    n = len(g)

    mean = sum(g) / n
    var = sum((v - mean) ** 2 for v in g) / n
    if var == 0.0:
        skew = 0.0
    else:
        third = sum((v - mean) ** 3 for v in g) / n
        skew = third / math.sqrt(var) ** 3

    diffs = [g[i + 1] - g[i] for i in range(n - 1)]
    mean_diff = sum(diffs) / len(diffs)
    var_diff = sum((d - mean_diff) ** 2 for d in diffs) / len(diffs)
    second = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    skew_diff = sum(second) / len(second)
    kurt_diff = sum(d * d for d in diffs) / len(diffs)

    total = 0.0
    for a in g:
        for b in g:
            total += abs(a - b)
    mean_pairwise = total / (n * n)

    windows = [(g[i] + g[i + 1] + g[i + 2]) / 3.0 for i in range(n - 2)]
    mean_moving = sum(windows) / len(windows)

    rms = math.sqrt(sum(v * v for v in g) / n)

    fft_feats = []
    for k in range(1, 31):
        acc = 0j
        for i, v in enumerate(g):
            acc += v * cmath.exp(-2j * cmath.pi * i * k / n)
        fft_feats.append(abs(acc))

    return [
        mean,
        var,
        skew,
        mean_diff,
        var_diff,
        skew_diff,
        kurt_diff,
        mean_pairwise,
        mean_moving,
        rms,
    ] + fft_feats
