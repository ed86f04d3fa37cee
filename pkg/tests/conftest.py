import random

from discalc import complexes as cx


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> cx.Graph:
    edges = {
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    }
    return cx.Graph(n, frozenset(edges))


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> cx.Graph:
    # a random spanning tree plus random extra edges
    edges = set()
    for v in range(1, n):
        edges.add(tuple(sorted((v, rng.randrange(v)))))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return cx.Graph(n, frozenset(edges))
