#!/usr/bin/env python3
"""Walk-through: Shannon entropy vs the quadratic information measure.

Evaluates both measures on a few simple distributions, shows the
normalization that pins the quadratic measure's maximum to log2(n) bits,
and exhibits a pair of distributions the two measures rank differently.
"""

import numpy as np

from infolab import bz_measure, normalization_factor, shannon
from infolab.verify import find_ordering_witness


def show(probs):
    h = shannon(probs)
    i = bz_measure(probs)
    print(f"  p = {np.round(probs, 4).tolist()!s:<28} H = {h:8.5f} bits   I = {i:8.5f} bits")


def main():
    print("Two-outcome anchors (capacity 1 bit):")
    show((1.0, 0.0))      # certainty: H = 0, I = 1
    show((0.5, 0.5))      # complete randomness: H = 1, I = 0
    show((0.75, 0.25))

    print("\nThree outcomes (capacity log2 3 = 1.58496 bits):")
    show((1.0, 0.0, 0.0))
    show((1 / 3, 1 / 3, 1 / 3))
    show((0.5, 0.3, 0.2))

    print("\nNormalization N = n log2(n) / (n - 1):")
    for n in (2, 3, 4, 8):
        print(f"  n = {n}:  N = {normalization_factor(n):.6f}")

    print("\nThe two measures do not order distributions the same way.")
    print("Brute-force search on the 3-outcome simplex (0.01 grid):")
    p, q = find_ordering_witness()
    print(f"  p = {np.round(p, 2).tolist()}  ->  H = {shannon(p):.5f}, I = {bz_measure(p):.5f}")
    print(f"  q = {np.round(q, 2).tolist()}  ->  H = {shannon(q):.5f}, I = {bz_measure(q):.5f}")
    print("  Shannon calls p the more certain distribution, yet the quadratic")
    print("  measure says p carries LESS information than q.")


if __name__ == "__main__":
    main()
