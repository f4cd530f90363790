#!/usr/bin/env python3
"""Writes small SNDlib native-format fixtures into tests/data.

Topologies are random but seeded, so reruns give identical files.
"""
import argparse
import random
from pathlib import Path


def ring_with_chords(rng, n, chords):
    links = [(i, (i + 1) % n) for i in range(n)]
    seen = {frozenset(l) for l in links}
    while len(links) < n + chords:
        u, v = rng.sample(range(n), 2)
        if frozenset((u, v)) in seen:
            continue
        seen.add(frozenset((u, v)))
        links.append((u, v))
    return links


def write(path, name, n, links, demands, rng):
    lines = ["?SNDlib native format; type: network; version: 1.0",
             f"# network {name}", "", "# META SECTION", "META (",
             "  granularity = 6month", "  time = ???", "  unit = MBITPERSEC",
             "  origin = generated", ")", "", "# NODE SECTION", "NODES ("]
    for i in range(n):
        lines.append(f"  N{i} ( {rng.uniform(0, 10):.2f} {rng.uniform(40, 50):.2f} )")
    lines += [")", "", "# LINK SECTION", "LINKS ("]
    for i, (u, v) in enumerate(links):
        cap = rng.choice([2, 3, 4, 6])
        cost = rng.choice([1, 2, 3, 5])
        mod_cap = cap * 4
        lines.append(f"  L{i + 1} ( N{u} N{v} ) {cap}.00 {cost}.00 0.00 0.00 "
                     f"( {mod_cap}.00 {cost * 3}.00 )")
    lines += [")", "", "# DEMAND SECTION", "DEMANDS ("]
    for i, (s, t, val) in enumerate(demands):
        lines.append(f"  D{i + 1} ( N{s} N{t} ) 1 {val}.00 UNLIMITED")
    lines += [")", "", "# ADMISSIBLE PATHS SECTION", "ADMISSIBLE_PATHS (", ")", ""]
    Path(path).write_text("\n".join(lines))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/data")
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--large", type=int, default=4,
                    help="additional fixtures with 8-10 nodes and more demands")
    args = ap.parse_args()
    Path(args.out).mkdir(parents=True, exist_ok=True)
    for idx in range(args.count + args.large):
        rng = random.Random(1000 + idx)
        large = idx >= args.count
        n = rng.randint(8, 10) if large else rng.randint(5, 7)
        links = ring_with_chords(rng, n, rng.randint(3, 6) if large else rng.randint(1, 3))
        wanted = rng.randint(8, 12) if large else None
        demands = []
        pairs = set()
        while len(demands) < (wanted or rng.randint(4, 6)):
            s, t = rng.sample(range(n), 2)
            if (s, t) in pairs:
                continue
            pairs.add((s, t))
            demands.append((s, t, rng.randint(1, 4)))
        name = f"fixture{idx}"
        write(Path(args.out) / f"{name}.txt", name, n, links, demands, rng)


if __name__ == "__main__":
    main()
