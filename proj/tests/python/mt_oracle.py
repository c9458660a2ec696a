"""Independent reimplementation of the random-graph generator.

Python's ``random`` module is an MT19937, but ``random.seed`` uses the array
initialiser. Here the state is built with the scalar ``init_genrand`` (the
one std::mt19937 uses) and loaded through ``setstate``.
"""

import random


def mt19937(seed):
    state = [seed & 0xFFFFFFFF]
    for i in range(1, 624):
        prev = state[-1]
        state.append((1812433253 * (prev ^ (prev >> 30)) + i) & 0xFFFFFFFF)
    rng = random.Random()
    rng.setstate((3, tuple(state) + (624,), None))
    return rng


def bounded(rng, bound):
    limit = (1 << 32) - (1 << 32) % bound
    while True:
        x = rng.getrandbits(32)
        if x < limit:
            return x % bound


def edge_count(n, density):
    total = n * (n - 1) / 2
    return int(density * total + 0.5 + 1e-9)


def random_graph_edges(n, density, seed):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = edge_count(n, density)
    rng = mt19937(seed)
    index = list(range(len(pairs)))
    for i in range(m):
        j = i + bounded(rng, len(pairs) - i)
        index[i], index[j] = index[j], index[i]
    return sorted(pairs[k] for k in index[:m])


def read_graph(path):
    with open(path) as f:
        n, m = map(int, f.readline().split())
        edges = [tuple(map(int, line.split())) for line in f if line.strip()]
    return n, m, edges
