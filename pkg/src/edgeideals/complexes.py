"""Simplicial complexes on ``0..n-1`` and their reduced homology.

Faces are stored as vertex bitmasks.  The empty face is always present
(the void complex is not representable), so ``{()}`` has a single
nonvanishing reduced group in degree -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graphs import Graph, maximal_independent_sets, mask_of, members
from .linalg import QQ, Field, rank_sparse


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]  # bitmasks, an antichain

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = {mask_of(f) for f in facets}
        if not masks:
            raise ValueError("the void complex has no faces; use [[]] for {()}")
        if any(m >> n for m in masks):
            raise ValueError(f"facet vertex outside 0..{n - 1}")
        maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        return cls(n, tuple(sorted(maximal, key=members)))

    @cached_property
    def faces(self) -> tuple[int, ...]:
        """Every face, ordered by size then lexicographically."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return tuple(sorted(seen, key=lambda m: (bin(m).count("1"), members(m))))

    @property
    def dim(self) -> int:
        return max(bin(f).count("1") for f in self.facets) - 1

    def facet_lists(self) -> list[list[int]]:
        return [list(members(f)) for f in self.facets]

    def to_json(self) -> dict:
        return {"n": self.n, "facets": self.facet_lists()}

    def __contains__(self, face) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & f == m for f in self.facets)


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g)))


def restrict(delta: SimplicialComplex, vertices: Iterable[int] | int) -> SimplicialComplex:
    """Induced subcomplex on ``vertices`` (kept in the ambient labelling)."""
    a = vertices if isinstance(vertices, int) else mask_of(vertices)
    return SimplicialComplex.from_facets(delta.n, [members(f & a) for f in delta.facets])


def f_vector(delta: SimplicialComplex) -> list[int]:
    """(f_{-1}, f_0, ..., f_dim)."""
    out = [0] * (delta.dim + 2)
    for face in delta.faces:
        out[bin(face).count("1")] += 1
    return out


def reduced_homology_ranks(delta: SimplicialComplex, field: Field = QQ) -> dict[int, int]:
    """Ranks of the reduced homology groups, keyed by degree -1..dim.

    Uses the augmented chain complex, so the empty face spans C_{-1}.
    """
    by_size: dict[int, list[int]] = {}
    for face in delta.faces:
        by_size.setdefault(bin(face).count("1"), []).append(face)
    top = max(by_size)
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in by_size.items()}

    ranks = {}  # ranks[k] = rank of boundary from size-k faces to size-(k-1) faces
    for k in range(1, top + 1):
        lower = index[k - 1]
        rows = []
        for f in by_size[k]:
            row, sign = {}, 1
            for v in members(f):
                row[lower[f & ~(1 << v)]] = sign
                sign = -sign
            rows.append(row)
        ranks[k] = rank_sparse(rows, field)
    out = {}
    for k in range(0, top + 1):
        out[k - 1] = len(by_size[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_l (-1)^l f_l, l >= -1."""
    return sum((-1) ** (k - 1) * c for k, c in enumerate(f_vector(delta)))
