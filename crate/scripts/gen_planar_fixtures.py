#!/usr/bin/env python3
"""Writes seeded random planar triangulations as DIMACS fixtures.

Each graph starts from a triangle, inserts vertices into random faces until
it has n vertices, then applies random edge flips. Both operations keep the
embedding a triangulation of the plane, so the result is a maximal planar
simple graph.
"""
import random
import sys
from pathlib import Path

COUNT = 20


def triangulation(n, rng):
    faces = {(0, 1, 2), (0, 2, 1)}  # inner and outer face, oriented
    for v in range(3, n):
        a, b, c = rng.choice(sorted(faces))
        faces.remove((a, b, c))
        faces |= {(a, b, v), (b, c, v), (c, a, v)}
    for _ in range(4 * n):
        flip(faces, rng)
    edges = set()
    for a, b, c in faces:
        for u, w in ((a, b), (b, c), (c, a)):
            edges.add((min(u, w), max(u, w)))
    return sorted(edges)


def flip(faces, rng):
    """Replaces edge ab shared by faces abc and bad with the edge cd."""
    a, b, c = rng.choice(sorted(faces))
    other = next(f for f in faces if rotations(f, (b, a)))
    d = other[[i for i in range(3) if other[i] not in (a, b)][0]]
    edges = {frozenset((x, y)) for f in faces for x, y in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0]))}
    if c == d or frozenset((c, d)) in edges:
        return
    degree = {}
    for e in edges:
        for x in e:
            degree[x] = degree.get(x, 0) + 1
    if degree[a] <= 3 or degree[b] <= 3:
        return
    faces.remove((a, b, c))
    faces.remove(other)
    faces |= {(a, d, c), (b, c, d)}


def rotations(face, pair):
    x, y = pair
    return any(face[i] == x and face[(i + 1) % 3] == y for i in range(3))


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for seed in range(COUNT):
        rng = random.Random(seed)
        n = rng.randint(6, 12)
        edges = triangulation(n, rng)
        assert len(edges) == 3 * n - 6
        lines = [f"c random planar triangulation, seed {seed}", f"p edge {n} {len(edges)}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in edges]
        (out / f"triangulation_{seed:02}.col").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/fixtures/planar")
