#!/usr/bin/env python3
"""Write every connected graph on 2..6 vertices (up to isomorphism) as a
chromadist graph stream: blocks of 'n m' followed by m lines 'u v' with u < v.

The networkx graph atlas lists all graphs on at most 7 vertices, one per
isomorphism class, so filtering it by order and connectivity gives the
corpus directly.
"""

import argparse
import sys

import networkx as nx


def corpus(max_order):
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 2 <= n <= max_order and nx.is_connected(g):
            yield g


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output", nargs="?", default="-")
    parser.add_argument("--max-order", type=int, default=6)
    args = parser.parse_args()
    if not 2 <= args.max_order <= 7:
        parser.error("--max-order must lie in 2..7 (atlas limit)")

    out = sys.stdout if args.output == "-" else open(args.output, "w", encoding="ascii")
    count = 0
    with out:
        out.write(f"# connected graphs on 2..{args.max_order} vertices, networkx atlas order\n")
        for g in corpus(args.max_order):
            edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
            out.write(f"{g.number_of_nodes()} {len(edges)}\n")
            out.writelines(f"{u} {v}\n" for u, v in edges)
            count += 1
    print(f"wrote {count} graphs", file=sys.stderr)


if __name__ == "__main__":
    main()
