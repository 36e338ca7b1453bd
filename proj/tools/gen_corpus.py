#!/usr/bin/env python3
"""Writes the small bundled corpus in data/corpus (SPD, Matrix Market)."""

import argparse
import math
import pathlib
import random


def write(path, n, edges, rng):
    # Diagonal dominance keeps every matrix positive definite.
    vals = {}
    rowsum = [0.0] * n
    for i, j in edges:
        i, j = max(i, j), min(i, j)
        if i == j or (i, j) in vals:
            continue
        v = rng.uniform(-1.0, 1.0)
        vals[(i, j)] = v
        rowsum[i] += abs(v)
        rowsum[j] += abs(v)
    for k in range(n):
        vals[(k, k)] = rowsum[k] + 1.0
    entries = sorted(vals.items(), key=lambda e: (e[0][1], e[0][0]))
    with open(path, "w") as f:
        f.write("%%MatrixMarket matrix coordinate real symmetric\n")
        f.write(f"% {path.stem}\n")
        f.write(f"{n} {n} {len(entries)}\n")
        for (i, j), v in entries:
            f.write(f"{i + 1} {j + 1} {v:.17g}\n")


def grid(nx, ny):
    for y in range(ny):
        for x in range(nx):
            v = y * nx + x
            if x + 1 < nx:
                yield v, v + 1
            if y + 1 < ny:
                yield v, v + nx


def brick(s):
    def idx(x, y, z):
        return (z * s + y) * s + x

    for z in range(s):
        for y in range(s):
            for x in range(s):
                if x + 1 < s:
                    yield idx(x, y, z), idx(x + 1, y, z)
                if y + 1 < s:
                    yield idx(x, y, z), idx(x, y + 1, z)
                if z + 1 < s:
                    yield idx(x, y, z), idx(x, y, z + 1)


def geometric(n, degree, rng):
    pts = [(rng.random(), rng.random()) for _ in range(n)]
    r2 = degree / (math.pi * n)
    for i in range(n):
        for j in range(i):
            dx, dy = pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]
            if dx * dx + dy * dy <= r2:
                yield i, j


def random_graph(n, p, rng):
    for i in range(n):
        for j in range(i):
            if rng.random() < p:
                yield i, j


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=pathlib.Path(__file__).parent.parent
                    / "data" / "corpus", type=pathlib.Path)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    write(args.out / "grid12.mtx", 144, grid(12, 12), rng)
    write(args.out / "grid20.mtx", 400, grid(20, 20), rng)
    write(args.out / "brick7.mtx", 343, brick(7), rng)
    write(args.out / "geo300.mtx", 300, geometric(300, 12.0, rng), rng)
    write(args.out / "rand120.mtx", 120, random_graph(120, 0.04, rng), rng)


if __name__ == "__main__":
    main()
