"""Writes tests/data/graph6_corpus.{g6,edges} using networkx as the encoder."""
import random
import sys

import networkx as nx


def main(out_prefix: str, count: int = 500, seed: int = 20240611) -> None:
    rng = random.Random(seed)
    g6_lines, edge_lines = [], []
    for i in range(count):
        n = 1 + (i % 62) if i < 124 else rng.randint(1, 62)
        p = rng.choice([0.0, 0.05, 0.2, 0.5, 0.8, 1.0])
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        g6_lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
        edge_lines.append(f"{n} {edges}".rstrip())
    with open(out_prefix + ".g6", "w", newline="\n") as f:
        f.write("\n".join(g6_lines) + "\n")
    with open(out_prefix + ".edges", "w", newline="\n") as f:
        f.write("\n".join(edge_lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/graph6_corpus")
