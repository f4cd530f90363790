"""Searches for a two-layer instance on which sequential greedy routing is
suboptimal for every commodity order.

Layout: s -> w over three parallel arcs (m, n, o), w -> t over two (p, q);
commodities of size 3, 2, 2 from s to t. Costs are quadratic f x^2 or
linear f x, capacities small integers. Prints the first hit as JSON.
"""
import itertools
import json
import random
import sys

B = [3, 2, 2]
ARCS = ["m", "n", "o", "p", "q"]
LAYER1, LAYER2 = [0, 1, 2], [3, 4]


def cost(spec, x):
    kind, f = spec
    return f * x * x if kind == "quadratic" else f * x


def greedy(specs, caps, order):
    load = [0.0] * 5
    for k in order:
        b = B[k]
        choice = []
        for layer in (LAYER1, LAYER2):
            best, best_w = None, None
            for a in layer:
                if load[a] + b > caps[a]:
                    continue
                w = cost(specs[a], load[a] + b) - cost(specs[a], load[a])
                if best is None or w < best_w - 1e-12:
                    best, best_w = a, w
            if best is None:
                return None
            choice.append(best)
        for a in choice:
            load[a] += b
    return sum(cost(specs[a], load[a]) for a in range(5))


def optimum(specs, caps):
    best = None
    for c1 in itertools.product(LAYER1, repeat=3):
        for c2 in itertools.product(LAYER2, repeat=3):
            load = [0.0] * 5
            for k in range(3):
                load[c1[k]] += B[k]
                load[c2[k]] += B[k]
            if any(load[a] > caps[a] for a in range(5)):
                continue
            v = sum(cost(specs[a], load[a]) for a in range(5))
            if best is None or v < best:
                best = v
    return best


def main():
    rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
    for trial in range(200000):
        specs = [(rng.choice(["linear", "quadratic"]), rng.choice([0.25, 0.5, 1, 1.5, 2, 3]))
                 for _ in range(5)]
        caps = [rng.choice([2, 3, 4, 5, 7]) for _ in range(5)]
        opt = optimum(specs, caps)
        if opt is None:
            continue
        values = []
        for order in itertools.permutations(range(3)):
            v = greedy(specs, caps, order)
            values.append(v)
        if all(v is not None and v > opt + 1e-6 for v in values):
            print(json.dumps({"costs": specs, "capacities": caps, "optimum": opt,
                              "greedy": values}))
            return
    print("none found")


if __name__ == "__main__":
    main()
