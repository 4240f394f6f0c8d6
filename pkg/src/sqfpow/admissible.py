"""Generalized k-admissible matchings, aim, aim*, and the regularity lower bound.

A matching M of H is generalized k-admissible when it has a partition
M = M_1 ⊔ ... ⊔ M_r such that (1) every edge of H[V(M)] lies inside some
V(M_i), (2) k <= |M| <= r + k - 1, and (3) every matching of H[V(M_i)] of
size |M_i| covers V(M_i).  Condition (1) forces the partition to coarsen
the "forcing components", and merging parts can never repair rigidity or
grow r, so the finest partition decides everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hypergraphs import (
    Graph,
    Hypergraph,
    InputError,
    all_matchings,
    check_matching,
    matching_indices,
    matching_number,
    vertices_of,
)


@dataclass(frozen=True)
class ForcingPartition:
    """Finest partition of a matching compatible with containment condition (1)."""

    matching: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AdmissibleWitness:
    """A matching plus a certified partition proving (generalized) admissibility."""

    matching: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    k: int
    generalized: bool

    def to_json_dict(self, H: Hypergraph) -> dict:
        return {
            "edges": [list(vertices_of(H.edges[i])) for i in self.matching],
            "parts": [list(p) for p in self.parts],
            "k": self.k,
        }


def _component_labels(H: Hypergraph, idx: Sequence[int], vmask: int) -> list[int]:
    """Union-find labels: i ~ j when some edge inside V(M) meets both."""
    masks = [H.edges[i] for i in idx]
    parent = list(range(len(idx)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in H.edges:
        if e & ~vmask:
            continue
        hit = [p for p, mk in enumerate(masks) if mk & e]
        for a, b in zip(hit, hit[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return [find(p) for p in range(len(idx))]


def _grouped(idx: Sequence[int], labels: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for pos, lab in enumerate(labels):
        groups.setdefault(lab, []).append(idx[pos])
    return tuple(sorted(tuple(g) for g in groups.values()))


def forcing_components(H: Hypergraph, matching) -> ForcingPartition:
    """Finest partition satisfying condition (1); every valid partition coarsens it."""
    idx = check_matching(H, matching_indices(matching))
    vmask = 0
    for i in idx:
        vmask |= H.edges[i]
    labels = _component_labels(H, idx, vmask)
    return ForcingPartition(idx, _grouped(idx, labels))


def is_rigid_part(H: Hypergraph, part) -> bool:
    """True iff every matching of size |P| in H[V(P)] covers V(P)."""
    idx = check_matching(H, matching_indices(part))
    vmask = 0
    for i in idx:
        vmask |= H.edges[i]
    return _rigid(H, vmask, len(idx))


def _rigid(H: Hypergraph, vmask: int, size: int, memo: dict | None = None) -> bool:
    if memo is not None and (vmask, size) in memo:
        return memo[(vmask, size)]
    inside = [e for e in H.edges if not e & ~vmask]

    def rec(start: int, used: int, depth: int) -> bool:
        if depth == size:
            return used == vmask
        for j in range(start, len(inside) - (size - depth) + 1):
            if inside[j] & used:
                continue
            if not rec(j + 1, used | inside[j], depth + 1):
                return False
        return True

    ok = rec(0, 0, 0)
    if memo is not None:
        memo[(vmask, size)] = ok
    return ok


def is_generalized_k_admissible(
    H: Hypergraph, matching, k: int
) -> AdmissibleWitness | None:
    """Witness partition if M is a generalized k-admissible matching, else None.

    The finest (forcing-component) partition is returned: merging parts
    preserves rigidity but shrinks r, so it decides admissibility.
    """
    idx = check_matching(H, matching_indices(matching))
    nu = matching_number(H)
    if not 1 <= k <= nu:
        raise InputError(f"k={k} out of range 1..nu={nu}")
    if not k <= len(idx):
        return None
    vmask = 0
    for i in idx:
        vmask |= H.edges[i]
    labels = _component_labels(H, idx, vmask)
    parts = _grouped(idx, labels)
    if len(idx) > len(parts) + k - 1:
        return None
    memo: dict = {}
    for part in parts:
        pmask = 0
        for i in part:
            pmask |= H.edges[i]
        if not _rigid(H, pmask, len(part), memo):
            return None
    return AdmissibleWitness(idx, parts, k, generalized=True)


def _require_uniform(H: Hypergraph) -> int:
    d = H.uniform_size()
    if d is None:
        raise InputError("hypergraph is not d-uniform")
    return d


def _check_k(H: Hypergraph, k: int) -> int:
    nu = matching_number(H)
    if not 1 <= k <= nu:
        raise InputError(f"k={k} out of range 1..nu={nu}")
    return nu


def aim(H: Hypergraph, k: int) -> int:
    """k-admissible matching number of a d-uniform hypergraph.

    With the finest partition, M qualifies iff |M| <= c(M) + k - 1 where
    c(M) is its number of forcing components.
    """
    _require_uniform(H)
    _check_k(H, k)
    best = 0
    for idx, vmask in all_matchings(H):
        if len(idx) <= best:
            continue
        labels = _component_labels(H, idx, vmask)
        if len(idx) - len(set(labels)) <= k - 1:
            best = len(idx)
    return best


def aim_profile(H: Hypergraph) -> list[int]:
    """[aim(H,1), ..., aim(H,nu)] from a single scan over all matchings."""
    if not H.edges:
        return []
    _require_uniform(H)
    nu = matching_number(H)
    best_by_defect = [0] * nu
    for idx, vmask in all_matchings(H):
        labels = _component_labels(H, idx, vmask)
        defect = len(idx) - len(set(labels))
        if defect < nu and len(idx) > best_by_defect[defect]:
            best_by_defect[defect] = len(idx)
    out = []
    run = 0
    for d in range(nu):
        run = max(run, best_by_defect[d])
        out.append(run)
    return out


def aim_star(G: Graph, k: int) -> int:
    """Forest-restricted variant: every part must induce a forest in G."""
    if not isinstance(G, Graph):
        raise InputError("aim_star is defined for graphs only")
    _check_k(G, k)
    best = 0
    for idx, vmask in all_matchings(G):
        if len(idx) <= best:
            continue
        labels = _component_labels(G, idx, vmask)
        if len(idx) - len(set(labels)) > k - 1:
            continue
        part_masks: dict[int, int] = {}
        for pos, lab in enumerate(labels):
            part_masks[lab] = part_masks.get(lab, 0) | G.edges[idx[pos]]
        if all(_induces_forest(G, pm) for pm in part_masks.values()):
            best = len(idx)
    return best


def _induces_forest(G: Graph, vmask: int) -> bool:
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in vertices_of(vmask):
        parent[v] = v
    for e in G.edges:
        if e & ~vmask:
            continue
        u = (e & -e).bit_length() - 1
        v = e.bit_length() - 1
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def lower_bound(H: Hypergraph, k: int) -> int:
    """L(H,k) = max |V(M)| - |M| over generalized k-admissible matchings."""
    _check_k(H, k)
    memo: dict = {}
    best = -1
    for idx, vmask in all_matchings(H):
        if len(idx) < k:
            continue
        if vmask.bit_count() - len(idx) <= best:
            continue
        labels = _component_labels(H, idx, vmask)
        parts = _grouped(idx, labels)
        if len(idx) > len(parts) + k - 1:
            continue
        rigid = True
        for part in parts:
            pmask = 0
            for i in part:
                pmask |= H.edges[i]
            if not _rigid(H, pmask, len(part), memo):
                rigid = False
                break
        if rigid:
            best = vmask.bit_count() - len(idx)
    if best < 0:
        # a size-k matching refined inside a minimal generator always exists
        raise InputError("no generalized k-admissible matching found")
    return best


def aim_ext(H: Hypergraph, k: int) -> int:
    """aim with the natural out-of-range extension used by deletion campaigns.

    Returns 0 for an edgeless hypergraph and nu(H) for k >= nu(H).
    """
    if not H.edges:
        return 0
    nu = matching_number(H)
    return aim(H, min(k, nu))
