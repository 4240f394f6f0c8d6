#!/usr/bin/env python3
"""Generate the bundled isomorph-free graph catalogs.

Outputs (graph6, one line per graph, sorted by (n, edge count, canonical key)):
  src/sqfpow/corpora/graphs_le7.g6      all graphs with 1 <= n <= 7
  src/sqfpow/corpora/connected_le7.g6   the connected ones
  src/sqfpow/corpora/chordal_le9.g6     all chordal graphs with 1 <= n <= 9

Enumeration is by vertex extension: any neighborhood for general graphs,
clique neighborhoods for chordal graphs (the reverse of a perfect
elimination ordering, so every chordal graph is reached).  Deduplication
uses an individualization-refinement canonical form with a twin-class
pruning rule and a fast path for disjoint unions of cliques.

The n <= 7 levels are validated against the networkx Graph Atlas
(canonical-key set equality), which also validates the canonical form
and the chordal filter on an independent corpus.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import networkx as nx

OUTDIR = Path(__file__).resolve().parent.parent / "src" / "sqfpow" / "corpora"


# -- canonical labeling -------------------------------------------------------


def refine(n: int, adj: tuple[int, ...], colors: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        sigs = []
        for v in range(n):
            m = adj[v]
            neigh = []
            while m:
                low = m & -m
                neigh.append(colors[low.bit_length() - 1])
                m ^= low
            neigh.sort()
            sigs.append((colors[v], tuple(neigh)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(ranks[s] for s in sigs)
        if new == colors:
            return new
        colors = new


def _clique_union_key(n: int, adj: tuple[int, ...]) -> tuple | None:
    """Canonical key when every connected component is a clique."""
    seen = 0
    sizes = []
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = adj[v] | (1 << v)
        # closed neighborhoods must agree across the whole component
        m = comp
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if adj[u] | (1 << u) != comp:
                return None
            m ^= low
        sizes.append(comp.bit_count())
        seen |= comp
    sizes.sort(reverse=True)
    rows = [0] * n
    at = 0
    for s in sizes:
        for i in range(at, at + s):
            for j in range(at, at + s):
                if i != j:
                    rows[i] |= 1 << j
        at += s
    return tuple(rows)


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        dup = False
        for u in reps:
            if adj[u] == adj[v] or adj[u] ^ (1 << v) == adj[v] ^ (1 << u):
                dup = True
                break
        if not dup:
            reps.append(v)
    return reps


def canon_key(n: int, adj: tuple[int, ...]) -> tuple:
    """Canonical adjacency rows: equal iff the graphs are isomorphic."""
    if n == 0:
        return ()
    fast = _clique_union_key(n, adj)
    if fast is not None:
        return fast
    best: list[tuple | None] = [None]

    def search(colors: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = [0] * n
            for pos, v in enumerate(sorted(range(n), key=lambda u: colors[u])):
                perm[v] = pos
            rows = [0] * n
            for v in range(n):
                m = adj[v]
                while m:
                    low = m & -m
                    rows[perm[v]] |= 1 << perm[low.bit_length() - 1]
                    m ^= low
            key = tuple(rows)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        base = max(colors) + 1
        for v in _twin_representatives(adj, target):
            indiv = tuple(base if u == v else colors[u] for u in range(n))
            search(refine(n, adj, indiv))

    search(refine(n, adj, (0,) * n))
    return best[0]


# -- helpers ------------------------------------------------------------------


def edges_of(adj: tuple[int, ...]) -> list[tuple[int, int]]:
    n = len(adj)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1]


def to_graph6(adj: tuple[int, ...]) -> str:
    G = nx.Graph()
    G.add_nodes_from(range(len(adj)))
    G.add_edges_from(edges_of(adj))
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def extend(adj: tuple[int, ...], nbhd: int) -> tuple[int, ...]:
    n = len(adj)
    rows = [r | ((nbhd >> v & 1) << n) for v, r in enumerate(adj)]
    rows.append(nbhd)
    return tuple(rows)


def all_cliques(adj: tuple[int, ...]) -> list[int]:
    n = len(adj)
    out = [0]

    def rec(start: int, mask: int) -> None:
        for v in range(start, n):
            if adj[v] & mask == mask:
                out.append(mask | (1 << v))
                rec(v + 1, mask | (1 << v))

    rec(0, 0)
    return out


def is_connected(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


# -- enumerations -------------------------------------------------------------


def enumerate_graphs(maxn: int) -> dict[int, dict[tuple, tuple[int, ...]]]:
    levels: dict[int, dict[tuple, tuple[int, ...]]] = {1: {canon_key(1, (0,)): (0,)}}
    for m in range(1, maxn):
        nxt: dict[tuple, tuple[int, ...]] = {}
        for adj in levels[m].values():
            for nbhd in range(1 << m):
                child = extend(adj, nbhd)
                nxt.setdefault(canon_key(m + 1, child), child)
        levels[m + 1] = nxt
        print(f"  graphs n={m + 1}: {len(nxt)}", flush=True)
    return levels


def enumerate_chordal(maxn: int) -> dict[int, dict[tuple, tuple[int, ...]]]:
    levels: dict[int, dict[tuple, tuple[int, ...]]] = {1: {canon_key(1, (0,)): (0,)}}
    for m in range(1, maxn):
        t0 = time.time()
        nxt: dict[tuple, tuple[int, ...]] = {}
        for adj in levels[m].values():
            for clique in all_cliques(adj):
                child = extend(adj, clique)
                nxt.setdefault(canon_key(m + 1, child), child)
        levels[m + 1] = nxt
        print(f"  chordal n={m + 1}: {len(nxt)} ({time.time() - t0:.1f}s)", flush=True)
    return levels


def atlas_validation(graph_levels, chordal_levels) -> None:
    """Exact set comparison with the networkx Graph Atlas for n <= 7."""
    atlas_keys: dict[int, set] = {n: set() for n in range(1, 8)}
    atlas_chordal: dict[int, set] = {n: set() for n in range(1, 8)}
    for G in nx.graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        if n < 1 or n > 7:
            continue
        nodes = sorted(G.nodes())
        pos = {v: i for i, v in enumerate(nodes)}
        adj = [0] * n
        for u, v in G.edges():
            adj[pos[u]] |= 1 << pos[v]
            adj[pos[v]] |= 1 << pos[u]
        key = canon_key(n, tuple(adj))
        assert key not in atlas_keys[n], "atlas contains an isomorphic duplicate?"
        atlas_keys[n].add(key)
        if n == 1 or nx.is_chordal(G):
            atlas_chordal[n].add(key)
    for n in range(1, 8):
        mine = set(graph_levels[n])
        assert mine == atlas_keys[n], (
            f"graph catalog mismatch at n={n}: {len(mine)} vs atlas {len(atlas_keys[n])}"
        )
        minec = set(chordal_levels[n])
        assert minec == atlas_chordal[n], (
            f"chordal catalog mismatch at n={n}: {len(minec)} vs atlas {len(atlas_chordal[n])}"
        )
    print("  atlas validation OK (n <= 7 catalogs match networkx exactly)", flush=True)


def write_catalog(path: Path, levels, maxn: int, only_connected: bool = False) -> int:
    lines = []
    for n in range(1, maxn + 1):
        batch = []
        for key, adj in levels[n].items():
            if only_connected and not is_connected(adj):
                continue
            batch.append((len(edges_of(adj)), key, to_graph6(adj)))
        batch.sort()
        lines.extend(g6 for _, _, g6 in batch)
    path.write_text("\n".join(lines) + "\n")
    print(f"  wrote {path.name}: {len(lines)} graphs", flush=True)
    return len(lines)


def main() -> None:
    OUTDIR.mkdir(parents=True, exist_ok=True)
    print("enumerating all graphs up to 7 vertices...", flush=True)
    graphs = enumerate_graphs(7)
    print("enumerating chordal graphs up to 9 vertices...", flush=True)
    chordal = enumerate_chordal(9)
    atlas_validation(graphs, chordal)
    write_catalog(OUTDIR / "graphs_le7.g6", graphs, 7)
    write_catalog(OUTDIR / "connected_le7.g6", graphs, 7, only_connected=True)
    write_catalog(OUTDIR / "chordal_le9.g6", chordal, 9)
    for n in sorted(chordal):
        conn = sum(1 for adj in chordal[n].values() if is_connected(adj))
        print(f"  chordal n={n}: total={len(chordal[n])} connected={conn}", flush=True)


if __name__ == "__main__":
    sys.exit(main())
