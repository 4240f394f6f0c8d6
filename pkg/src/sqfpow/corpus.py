"""Corpus ingestion: graph6 lines, hypergraph/ideal JSON, random generators."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .hypergraphs import MAX_VERTICES, Graph, Hypergraph, InputError
from .ideals import GeneralMonomialIdeal, SquareFreeIdeal

GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line: n header byte(s), then the upper triangle
    column-major in 6-bit groups offset by 63, zero padded."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise InputError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise InputError(f"graph6 byte out of range in {s!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise InputError(f"truncated graph6 size header in {s!r}")
        if data[1] == 63:
            raise InputError("graph6 graphs beyond 258047 vertices not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise InputError(f"graph6 vertex count {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise InputError(
            f"graph6 body length {len(body)} wrong for n={n} in {s!r}"
        )
    bits = []
    for b in body:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise InputError(f"graph6 padding bits not zero in {s!r}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((1 << i) | (1 << j))
            pos += 1
    return Graph(n, edges)


def parse_hypergraph(text: str) -> Hypergraph:
    """Validated hypergraph from the `{"n":..,"edges":[[..]]}` schema."""
    return Hypergraph.from_json(text)


def parse_ideal(text: str) -> SquareFreeIdeal | GeneralMonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid ideal JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("ideal JSON must be an object")
    if "gens_exp" in data:
        return GeneralMonomialIdeal.from_json(text)
    if "gens" in data:
        return SquareFreeIdeal.from_json(text)
    raise InputError("ideal JSON needs 'gens' or 'gens_exp'")


@dataclass(frozen=True)
class CorpusItem:
    ident: str
    obj: object
    provenance: tuple[str, int]


@dataclass
class Corpus:
    """Ordered list of validated instances with provenance."""

    items: list[CorpusItem] = field(default_factory=list)

    def __iter__(self) -> Iterator[CorpusItem]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def filtered(self, predicate) -> "Corpus":
        return Corpus([it for it in self.items if predicate(it.obj)])

    @classmethod
    def from_objects(cls, objs: Iterable, source: str = "<memory>") -> "Corpus":
        items = [
            CorpusItem(f"{source}:{i}", obj, (source, i))
            for i, obj in enumerate(objs)
        ]
        return cls(items)


def load_corpus_lines(lines: Iterable[str], source: str) -> Corpus:
    """Parse graph6 or hypergraph-JSON lines ('#' comments and blanks skipped)."""
    items = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
            if not line:
                continue
        obj: object
        if line.startswith("{"):
            obj = parse_hypergraph(line)
        else:
            obj = parse_graph6(line)
        items.append(CorpusItem(f"{source}:{lineno}", obj, (source, lineno)))
    return Corpus(items)


def load_corpus(path: str | Path) -> Corpus:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read corpus {path}: {exc}") from exc
    return load_corpus_lines(text.splitlines(), str(path))


def bundled_corpus(name: str) -> Corpus:
    """One of the shipped .g6 catalogs, e.g. 'connected_le7'."""
    ref = resources.files("sqfpow") / "corpora" / f"{name}.g6"
    try:
        text = ref.read_text()
    except (FileNotFoundError, OSError) as exc:
        raise InputError(f"no bundled corpus named {name!r}") from exc
    return load_corpus_lines(text.splitlines(), f"bundled:{name}")


# -- seeded random generators ------------------------------------------------


def random_hypergraph(
    rng: random.Random,
    n_range: tuple[int, int] = (4, 9),
    size_range: tuple[int, int] = (2, 4),
    max_edges: int = 6,
) -> Hypergraph:
    """Random simple hypergraph with mixed edge sizes; antichain enforced."""
    n = rng.randint(*n_range)
    target = rng.randint(1, max_edges)
    edges: list[int] = []
    for _ in range(40 * target):
        if len(edges) == target:
            break
        size = rng.randint(size_range[0], min(size_range[1], n))
        mask = 0
        for v in rng.sample(range(n), size):
            mask |= 1 << v
        if any(mask & e in (mask, e) for e in edges):
            continue
        edges.append(mask)
    if not edges:
        edges = [(1 << size_range[0]) - 1]
    return Hypergraph(n, edges)


def random_uniform_hypergraph(
    rng: random.Random,
    d: int,
    n_range: tuple[int, int] = (4, 9),
    max_edges: int = 8,
) -> Hypergraph:
    n = rng.randint(max(d, n_range[0]), n_range[1])
    target = rng.randint(1, max_edges)
    edges: set[int] = set()
    for _ in range(40 * target):
        if len(edges) == target:
            break
        mask = 0
        for v in rng.sample(range(n), d):
            mask |= 1 << v
        edges.add(mask)
    return Hypergraph(n, sorted(edges))


def random_disjoint_edge_hypergraph(
    rng: random.Random,
    max_edges: int = 4,
    size_range: tuple[int, int] = (2, 4),
) -> Hypergraph:
    """Pairwise-disjoint edges covering every vertex (so |V| = sum of sizes)."""
    q = rng.randint(1, max_edges)
    sizes = [rng.randint(*size_range) for _ in range(q)]
    n = sum(sizes)
    verts = list(range(n))
    rng.shuffle(verts)
    edges = []
    at = 0
    for s in sizes:
        mask = 0
        for v in verts[at : at + s]:
            mask |= 1 << v
        edges.append(mask)
        at += s
    return Hypergraph(n, edges)


def random_squarefree_ideal(
    rng: random.Random,
    n_range: tuple[int, int] = (3, 8),
    max_gens: int = 6,
    deg_range: tuple[int, int] = (1, 4),
) -> SquareFreeIdeal:
    """Random proper nonzero square-free ideal (interreduced on construction)."""
    n = rng.randint(*n_range)
    target = rng.randint(1, max_gens)
    gens: list[int] = []
    for _ in range(40 * target):
        if len(gens) == target:
            break
        deg = rng.randint(deg_range[0], min(deg_range[1], n))
        mask = 0
        for v in rng.sample(range(n), deg):
            mask |= 1 << v
        if any(mask & g in (mask, g) for g in gens):
            continue
        gens.append(mask)
    return SquareFreeIdeal(n, gens)


def random_general_ideal(
    rng: random.Random,
    n_range: tuple[int, int] = (2, 5),
    max_gens: int = 4,
    max_exp: int = 2,
) -> GeneralMonomialIdeal:
    """Random monomial ideal with bounded exponents, nonzero and proper."""
    n = rng.randint(*n_range)
    target = rng.randint(1, max_gens)
    gens: list[tuple[int, ...]] = []
    for _ in range(60 * target):
        if len(gens) == target:
            break
        vec = tuple(rng.randint(0, max_exp) for _ in range(n))
        if sum(vec) == 0:
            continue
        gens.append(vec)
    return GeneralMonomialIdeal(n, gens)
