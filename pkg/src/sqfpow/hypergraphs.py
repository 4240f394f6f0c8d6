"""Bit-vector hypergraphs, graphs, and matching primitives.

Vertices are the integers 0..n-1 and every vertex set is a plain Python
int used as a bit mask, so set algebra is single-word machine arithmetic
at the sizes this package targets (n <= 64).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class InputError(ValueError):
    """An input object violates a constructor or operation contract."""


class BudgetError(RuntimeError):
    """Input is structurally valid but exceeds a hard size budget."""


def vertex_set(vertices: Iterable[int], n: int) -> int:
    """Pack vertex indices into a bit mask, range-checked against n."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bit mask into the sorted tuple of its vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _normalize_edge(edge, n: int) -> int:
    if isinstance(edge, int):
        if edge < 0 or edge >> n:
            raise InputError(f"edge mask {edge:#x} out of range for n={n}")
        return edge
    return vertex_set(edge, n)


class Hypergraph:
    """A simple hypergraph: nonempty edges, duplicate-free, antichain.

    Immutable after construction; instances may be shared freely.
    Edges are stored in construction order as bit masks.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Sequence = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise InputError(f"vertex count {n} not in 0..{MAX_VERTICES}")
        masks = [_normalize_edge(e, n) for e in edges]
        for i, a in enumerate(masks):
            if a == 0:
                raise InputError("empty edge")
            for b in masks[:i]:
                # containment either way breaks simplicity; equality is a dup
                if a & b in (a, b):
                    raise InputError(
                        f"edges {vertices_of(a)} and {vertices_of(b)} violate "
                        "the antichain condition"
                    )
        self.n = n
        self.edges = tuple(masks)

    # -- basic queries -------------------------------------------------

    def edge_vertices(self, i: int) -> tuple[int, ...]:
        return vertices_of(self.edges[i])

    def covered(self) -> int:
        """Mask of vertices lying in at least one edge."""
        mask = 0
        for e in self.edges:
            mask |= e
        return mask

    def uniform_size(self) -> int | None:
        """Common edge cardinality d if the hypergraph is d-uniform."""
        sizes = {e.bit_count() for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and sorted(self.edges) == sorted(other.edges)
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.edges))))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={[vertices_of(e) for e in self.edges]})"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "edges": [list(vertices_of(e)) for e in self.edges]}
        )

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid hypergraph JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise InputError("hypergraph JSON needs keys 'n' and 'edges'")
        n = data["n"]
        if not isinstance(n, int):
            raise InputError("'n' must be an integer")
        return cls(n, data["edges"])


class Graph(Hypergraph):
    """A 2-uniform hypergraph with derived adjacency bit rows."""

    __slots__ = ("adj",)

    def __init__(self, n: int, edges: Sequence = ()):
        super().__init__(n, edges)
        adj = [0] * n
        for e in self.edges:
            if e.bit_count() != 2:
                raise InputError(f"graph edge {vertices_of(e)} is not 2-element")
            u = (e & -e).bit_length() - 1
            v = e.bit_length() - 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        edges = []
        for u in range(self.n):
            others = full & ~self.adj[u] & ~(1 << u)
            for v in vertices_of(others):
                if v > u:
                    edges.append((1 << u) | (1 << v))
        return Graph(self.n, edges)

    def remove_vertices(self, mask: int) -> "Graph":
        """Same universe, minus all edges meeting mask (vertices isolated)."""
        return Graph(self.n, [e for e in self.edges if not e & mask])

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in vertices_of(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


@dataclass(frozen=True)
class Matching:
    """A set of pairwise-disjoint edges, referenced by index into the host."""

    indices: tuple[int, ...]

    @classmethod
    def of(cls, host: Hypergraph, indices: Iterable[int]) -> "Matching":
        idx = tuple(sorted(indices))
        check_matching(host, idx)
        return cls(idx)


def check_matching(H: Hypergraph, indices: Sequence[int]) -> tuple[int, ...]:
    """Validate edge indices as a matching of H; return them sorted."""
    idx = tuple(sorted(indices))
    used = 0
    for i in idx:
        if not 0 <= i < len(H.edges):
            raise InputError(f"edge index {i} out of range")
        e = H.edges[i]
        if e & used:
            raise InputError(f"edges {idx} are not pairwise disjoint")
        used |= e
    if len(set(idx)) != len(idx):
        raise InputError("repeated edge index in matching")
    return idx


def matching_indices(m) -> tuple[int, ...]:
    if isinstance(m, Matching):
        return m.indices
    return tuple(sorted(m))


@dataclass(frozen=True)
class InducedSub:
    """An induced sub-hypergraph with its relabeling bookkeeping.

    vertex_map[new] = old vertex, edge_map[new] = old edge index.
    """

    hypergraph: Hypergraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


def induced_sub(H: Hypergraph, W) -> InducedSub:
    """H[W]: edges contained in W, vertices relabeled densely to 0..|W|-1."""
    wmask = W if isinstance(W, int) else vertex_set(W, H.n)
    if wmask < 0 or wmask >> H.n:
        raise InputError(f"vertex set {wmask:#x} out of range for n={H.n}")
    old = vertices_of(wmask)
    new_of = {v: i for i, v in enumerate(old)}
    edges = []
    emap = []
    for i, e in enumerate(H.edges):
        if e & ~wmask:
            continue
        edges.append(vertex_set((new_of[v] for v in vertices_of(e)), len(old)))
        emap.append(i)
    cls = Graph if isinstance(H, Graph) else Hypergraph
    return InducedSub(cls(len(old), edges), old, tuple(emap))


def disjoint_union(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    """H1 ⊔ H2 with H2's vertices shifted above H1's."""
    n = H1.n + H2.n
    if n > MAX_VERTICES:
        raise InputError(f"disjoint union would exceed {MAX_VERTICES} vertices")
    edges = list(H1.edges) + [e << H1.n for e in H2.edges]
    cls = Graph if isinstance(H1, Graph) and isinstance(H2, Graph) else Hypergraph
    return cls(n, edges)


# -- matchings ---------------------------------------------------------


def all_matchings(H: Hypergraph) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield every nonempty matching as (sorted edge indices, vertex mask)."""
    edges = H.edges
    m = len(edges)
    chosen: list[int] = []

    def rec(start: int, used: int) -> Iterator[tuple[tuple[int, ...], int]]:
        for j in range(start, m):
            e = edges[j]
            if e & used:
                continue
            chosen.append(j)
            yield (tuple(chosen), used | e)
            yield from rec(j + 1, used | e)
            chosen.pop()

    yield from rec(0, 0)


def matching_number(H: Hypergraph) -> int:
    """nu(H): maximum size of a matching; 0 for an edgeless hypergraph."""
    edges = H.edges
    m = len(edges)
    best = 0

    def rec(start: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for j in range(start, m):
            if size + (m - j) <= best:
                break
            if edges[j] & used:
                continue
            rec(j + 1, used | edges[j], size + 1)

    rec(0, 0, 0)
    return best


def induced_matching_number(H: Hypergraph) -> int:
    """nu_1(H): maximum size of a matching M with E(H[V(M)]) = M."""
    edges = H.edges
    best = 0
    for idx, vmask in all_matchings(H):
        if len(idx) <= best:
            continue
        members = set(idx)
        if all(e & ~vmask or i in members for i, e in enumerate(edges)):
            best = len(idx)
    return best


def enumerate_matchings(H: Hypergraph, k: int) -> Iterator[tuple[int, ...]]:
    """Stream all matchings of size exactly k, in lexicographic index order."""
    if k < 1:
        raise InputError(f"matching size k={k} must be >= 1")
    edges = H.edges
    m = len(edges)
    chosen: list[int] = []

    def rec(start: int, used: int) -> Iterator[tuple[int, ...]]:
        need = k - len(chosen)
        if need == 0:
            yield tuple(chosen)
            return
        for j in range(start, m - need + 1):
            if edges[j] & used:
                continue
            chosen.append(j)
            yield from rec(j + 1, used | edges[j])
            chosen.pop()

    yield from rec(0, 0)
