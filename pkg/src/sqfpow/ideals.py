"""Exact square-free and general monomial ideal arithmetic.

Square-free monomials are bit masks over a variable universe 0..n-1
(mask 0 is the unit monomial), so divisibility is subset testing and
lcm is bitwise or.  General monomial ideals carry exponent vectors.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .hypergraphs import (
    Hypergraph,
    InputError,
    enumerate_matchings,
    matching_number,
    vertex_set,
    vertices_of,
)


def _interreduce_masks(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(g & m == g for g in kept):
            kept.append(m)
    return tuple(kept)


class SquareFreeIdeal:
    """Interreduced square-free monomial ideal over a named universe.

    gens is the minimal generating set G(I) as sorted bit masks.  The zero
    ideal has gens == () and the unit ideal has gens == (0,).
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Sequence = ()):
        if not 0 <= n <= 64:
            raise InputError(f"universe size {n} not in 0..64")
        masks = []
        for g in gens:
            if isinstance(g, int):
                if g < 0 or g >> n:
                    raise InputError(f"monomial mask {g:#x} out of range for n={n}")
                masks.append(g)
            else:
                masks.append(vertex_set(g, n))
        self.n = n
        self.gens = _interreduce_masks(masks)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (0,)

    def max_degree(self) -> int:
        return max((g.bit_count() for g in self.gens), default=0)

    def contains_monomial(self, mask: int) -> bool:
        return any(g & mask == g for g in self.gens)

    # -- arithmetic -------------------------------------------------------

    def colon(self, m: int) -> "SquareFreeIdeal":
        """(I : m) for a square-free monomial mask m."""
        return SquareFreeIdeal(self.n, [g & ~m for g in self.gens])

    def plus(self, other: "SquareFreeIdeal") -> "SquareFreeIdeal":
        self._same_universe(other)
        return SquareFreeIdeal(self.n, self.gens + other.gens)

    def intersect(self, other: "SquareFreeIdeal") -> "SquareFreeIdeal":
        self._same_universe(other)
        return SquareFreeIdeal(self.n, [a | b for a in self.gens for b in other.gens])

    def _same_universe(self, other: "SquareFreeIdeal") -> None:
        if self.n != other.n:
            raise InputError(f"universe mismatch: n={self.n} vs n={other.n}")

    __add__ = plus
    __and__ = intersect

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SquareFreeIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"SquareFreeIdeal(n={self.n}, <0>)"
        if self.is_unit():
            return f"SquareFreeIdeal(n={self.n}, <1>)"
        return f"SquareFreeIdeal(n={self.n}, gens={[vertices_of(g) for g in self.gens]})"

    # -- conversions ------------------------------------------------------

    def hypergraph(self) -> Hypergraph:
        """The hypergraph whose edge ideal this is (proper nonzero only)."""
        if self.is_zero() or self.is_unit():
            raise InputError("zero/unit ideal has no associated hypergraph")
        return Hypergraph(self.n, self.gens)

    def to_general(self) -> "GeneralMonomialIdeal":
        gens = []
        for g in self.gens:
            gens.append(tuple(1 if g >> i & 1 else 0 for i in range(self.n)))
        return GeneralMonomialIdeal(self.n, gens)

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "gens": [list(vertices_of(g)) for g in self.gens]}
        )

    @classmethod
    def from_json(cls, text: str) -> "SquareFreeIdeal":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid ideal JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data or "gens" not in data:
            raise InputError("ideal JSON needs keys 'n' and 'gens'")
        return cls(data["n"], data["gens"])


def colon_by(I: SquareFreeIdeal, m: int) -> SquareFreeIdeal:
    """(I : m) for a square-free monomial mask m."""
    return I.colon(m)


def plus(I: SquareFreeIdeal, J: SquareFreeIdeal) -> SquareFreeIdeal:
    """I + J on a common universe."""
    return I.plus(J)


def intersect(I: SquareFreeIdeal, J: SquareFreeIdeal) -> SquareFreeIdeal:
    """I ∩ J via pairwise lcms of the generators."""
    return I.intersect(J)


def edge_ideal(H: Hypergraph) -> SquareFreeIdeal:
    """I(H), generated by the edge monomials (already an antichain)."""
    return SquareFreeIdeal(H.n, H.edges)


def sqfree_power(H: Hypergraph, k: int) -> SquareFreeIdeal:
    """I(H)^[k], generated by x_{V(M)} over size-k matchings M.

    Returns the unit ideal for k <= 0 (the R-convention) and the zero
    ideal when k exceeds the matching number.
    """
    if k <= 0:
        return SquareFreeIdeal(H.n, [0])
    gens = []
    for idx in enumerate_matchings(H, k):
        mask = 0
        for i in idx:
            mask |= H.edges[i]
        gens.append(mask)
    return SquareFreeIdeal(H.n, gens)


def product_disjoint(I: SquareFreeIdeal, J: SquareFreeIdeal) -> SquareFreeIdeal:
    """I*J on a common universe where the generator supports never overlap."""
    I._same_universe(J)
    if I.is_zero() or J.is_zero():
        return SquareFreeIdeal(I.n)
    supp_i = 0
    for g in I.gens:
        supp_i |= g
    supp_j = 0
    for g in J.gens:
        supp_j |= g
    if supp_i & supp_j:
        raise InputError("product factors must live on disjoint variables")
    return SquareFreeIdeal(I.n, [a | b for a in I.gens for b in J.gens])


def splitting_for_disjoint_union(
    H: Hypergraph, H2: Hypergraph, k: int
) -> tuple[SquareFreeIdeal, SquareFreeIdeal]:
    """The Betti-splitting pair (J, K) with I(H ⊔ H2)^[k] = J + K.

    J is the top slice I(H)^[nu] * I(H2)^[k-nu]; K collects the lower
    slices down to index k - nu(H2), with I^[l] = R for l <= 0.
    """
    if not H.edges or not H2.edges:
        raise InputError("both hypergraphs need at least one edge")
    nu1 = matching_number(H)
    nu2 = matching_number(H2)
    if not nu1 + 1 <= k <= nu1 + nu2:
        raise InputError(f"k={k} outside splitting range {nu1 + 1}..{nu1 + nu2}")
    n = H.n + H2.n

    def lift1(i: int) -> SquareFreeIdeal:
        return SquareFreeIdeal(n, sqfree_power(H, i).gens)

    def lift2(j: int) -> SquareFreeIdeal:
        return SquareFreeIdeal(n, [g << H.n for g in sqfree_power(H2, j).gens])

    J = product_disjoint(lift1(nu1), lift2(k - nu1))
    K = SquareFreeIdeal(n)
    for i in range(nu1 - 1, k - nu2 - 1, -1):
        K = K.plus(product_disjoint(lift1(i), lift2(k - i)))
    return J, K


# -- general (not necessarily square-free) monomial ideals -----------------


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


class GeneralMonomialIdeal:
    """Interreduced monomial ideal given by exponent vectors."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Sequence[Sequence[int]] = ()):
        if n < 0:
            raise InputError("negative universe size")
        vecs = []
        for g in gens:
            v = tuple(int(e) for e in g)
            if len(v) != n or any(e < 0 for e in v):
                raise InputError(f"bad exponent vector {v} for n={n}")
            vecs.append(v)
        uniq = sorted(set(vecs), key=lambda v: (sum(v), v))
        kept: list[tuple[int, ...]] = []
        for v in uniq:
            if not any(_divides(u, v) for u in kept):
                kept.append(v)
        self.n = n
        self.gens = tuple(kept)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneralMonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return f"GeneralMonomialIdeal(n={self.n}, gens={list(self.gens)})"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "gens_exp": [list(g) for g in self.gens]})

    @classmethod
    def from_json(cls, text: str) -> "GeneralMonomialIdeal":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid ideal JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data or "gens_exp" not in data:
            raise InputError("ideal JSON needs keys 'n' and 'gens_exp'")
        return cls(data["n"], data["gens_exp"])


def matching_power_general(I: GeneralMonomialIdeal, k: int) -> GeneralMonomialIdeal:
    """k-th matching power: products of k generators with disjoint supports."""
    if k < 1:
        raise InputError(f"matching power needs k >= 1, got {k}")
    supports = [
        sum(1 << i for i, e in enumerate(g) if e) for g in I.gens
    ]
    m = len(I.gens)
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(start: int, used: int) -> None:
        if len(chosen) == k:
            prod = [0] * I.n
            for j in chosen:
                for i, e in enumerate(I.gens[j]):
                    prod[i] += e
            out.append(tuple(prod))
            return
        for j in range(start, m - (k - len(chosen)) + 1):
            if supports[j] & used:
                continue
            chosen.append(j)
            rec(j + 1, used | supports[j])
            chosen.pop()

    rec(0, 0)
    return GeneralMonomialIdeal(I.n, out)


def polarize(
    I: GeneralMonomialIdeal, caps: Sequence[int] | None = None
) -> SquareFreeIdeal:
    """Standard polarization: x_i^e expands to slots x_{i,1}..x_{i,e}.

    caps fixes the slot count per variable (componentwise max over G(I)
    by default) so ideals from a common ancestor embed into one universe.
    """
    if caps is None:
        caps = [max((g[i] for g in I.gens), default=0) for i in range(I.n)]
    caps = [int(c) for c in caps]
    if len(caps) != I.n:
        raise InputError("caps length must equal the universe size")
    for g in I.gens:
        if any(e > c for e, c in zip(g, caps)):
            raise InputError(f"caps {caps} too small for generator {g}")
    offsets = [0] * I.n
    total = 0
    for i, c in enumerate(caps):
        offsets[i] = total
        total += c
    if total > 64:
        raise InputError("polarized universe exceeds 64 variables")
    masks = []
    for g in I.gens:
        mask = 0
        for i, e in enumerate(g):
            for slot in range(e):
                mask |= 1 << (offsets[i] + slot)
        masks.append(mask)
    return SquareFreeIdeal(total, masks)
