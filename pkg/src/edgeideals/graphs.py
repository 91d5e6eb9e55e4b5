"""Finite simple graphs, the families used throughout the package, and
vertex-cover enumeration.

Vertices are ``0..n-1``.  Adjacency is kept as integer bitmasks so that the
set-heavy enumerations (independent sets, covers, induced subgraphs) stay
cheap at desk scale.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input or invalid family parameters."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = data["n"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"graph JSON needs 'n' and 'edges': {exc}") from None
        return make_graph(n, [tuple(e) for e in edges])

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize an edge list.

    Loops, out-of-range endpoints and repeated edges are rejected.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def _from_masks(n: int, adj: Sequence[int]) -> Graph:
    edges = [(i, j) for i in range(n) for j in _bits(adj[i] >> (i + 1) << (i + 1))]
    return Graph(n, tuple(edges))


# -- families -------------------------------------------------------------

def edgeless(n: int) -> Graph:
    return make_graph(n, [])


def path(n: int) -> Graph:
    """P_n: ``n`` vertices, ``n-1`` edges."""
    _positive(n, "path")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive(n, "complete")
    return make_graph(n, combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError(f"part sizes must be positive, got {list(parts)}")
    label, offset = [], 0
    for k, p in enumerate(parts):
        label.extend([k] * p)
        offset += p
    return make_graph(offset, [(i, j) for i, j in combinations(range(offset), 2)
                               if label[i] != label[j]])


def star(s: int) -> Graph:
    """K_{1,s} with centre 0 and leaves ``1..s``."""
    _positive(s, "star")
    return make_graph(s + 1, [(0, i) for i in range(1, s + 1)])


def wheel(n: int) -> Graph:
    """W_n = K_1 * C_n; the apex is vertex 0."""
    if n < 4:
        raise GraphError(f"wheel needs n >= 4, got {n}")
    return join(complete(1), cycle(n))


def whiskered_complete(n: int, r: int) -> Graph:
    """W(n, r): K_n on ``0..n-1`` plus pendant edges ``{i, n+i}`` for i < r."""
    _positive(n, "whiskered_complete")
    if not 1 <= r <= n:
        raise GraphError(f"whiskered_complete needs 1 <= r <= n, got n={n}, r={r}")
    edges = list(combinations(range(n), 2)) + [(i, n + i) for i in range(r)]
    return make_graph(n + r, edges)


def staircase(n: int) -> Graph:
    """F_n: x_i = i and y_j = n+j (0-based) with edges x_i y_j for i <= j."""
    _positive(n, "staircase")
    return make_graph(2 * n, [(i, n + j) for i in range(n) for j in range(i, n)])


def _positive(n, name):
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"{name} needs a positive size, got {n!r}")


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_multipartite": (lambda *parts: complete_multipartite(parts), None),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "whiskered_complete": (whiskered_complete, 2),
    "staircase": (staircase, 1),
    "edgeless": (edgeless, 1),
}


def family(name: str, *params: int) -> Graph:
    try:
        ctor, arity = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    if arity is not None and len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# -- constructions --------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(i + g.n, j + g.n) for i, j in h.edges]
    return Graph(g.n + h.n, tuple(sorted(g.edges + tuple(shifted))))


def join(g: Graph, h: Graph) -> Graph:
    """G * H: disjoint union plus every edge between the two vertex sets."""
    across = [(i, g.n + j) for i in range(g.n) for j in range(h.n)]
    shifted = [(i + g.n, j + g.n) for i, j in h.edges]
    return Graph(g.n + h.n, tuple(sorted(g.edges + tuple(shifted) + tuple(across))))


def self_join(g: Graph, copies: int) -> Graph:
    if copies < 1:
        raise GraphError(f"self_join needs at least one copy, got {copies}")
    out = g
    for _ in range(copies - 1):
        out = join(out, g)
    return out


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return _from_masks(g.n, [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph relabelled to ``0..k-1`` in increasing vertex order."""
    verts = sorted(set(vertices))
    index = {v: k for k, v in enumerate(verts)}
    edges = [(index[i], index[j]) for i, j in g.edges if i in index and j in index]
    return Graph(len(verts), tuple(sorted(edges)))


def induced_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, members(mask))


def components(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as masks."""
    remaining = g.vertex_mask if mask is None else mask
    out = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
        out.append(comp)
        remaining &= ~comp
    return out


# -- independent sets and covers -----------------------------------------

def maximal_independent_sets(g: Graph, mask: int | None = None) -> list[int]:
    """All maximal independent sets of the subgraph induced on ``mask``.

    Bron-Kerbosch with pivoting run on the complement adjacency, so the
    "cliques" it reports are independent sets of ``g``.
    """
    universe = g.vertex_mask if mask is None else mask
    non = [universe & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: bin(non[u] & p).count("1"))
        for v in _bits(p & ~non[pivot]):
            expand(r | 1 << v, p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, universe, 0)
    return sorted(found, key=lambda m: members(m))


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in _bits(mask))


def is_vertex_cover(g: Graph, mask: int) -> bool:
    return all((mask >> i & 1) or (mask >> j & 1) for i, j in g.edges)


@dataclass(frozen=True)
class CoverSet:
    covers: tuple[tuple[int, ...], ...]
    height: int
    min_count: int

    @property
    def minimum_covers(self) -> list[tuple[int, ...]]:
        return [c for c in self.covers if len(c) == self.height]


def minimal_vertex_covers(g: Graph) -> CoverSet:
    """Minimal vertex covers, obtained as complements of maximal independent sets.

    An edgeless graph has the single cover ``()``.
    """
    full = g.vertex_mask
    covers = sorted((members(full & ~m) for m in maximal_independent_sets(g)),
                    key=lambda c: (len(c), c))
    height = len(covers[0]) if covers else 0
    return CoverSet(tuple(covers), height, sum(1 for c in covers if len(c) == height))


def height(g: Graph) -> int:
    return minimal_vertex_covers(g).height


def krull_dim(g: Graph) -> int:
    """dim S/I(G) = n - hgt I(G); isolated vertices each add one."""
    return g.n - minimal_vertex_covers(g).height


def multiplicity_by_covers(g: Graph) -> int:
    """e(S/I(G)) as the number of minimum vertex covers."""
    return minimal_vertex_covers(g).min_count


def induced_matching_number(g: Graph) -> int:
    """Largest set of edges whose vertex set induces exactly those edges."""
    edges = g.edges
    best = 0

    def grow(start: int, used: int, forbidden: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - start) <= best:
            return
        for k in range(start, len(edges)):
            i, j = edges[k]
            if (forbidden >> i & 1) or (forbidden >> j & 1):
                continue
            pair = 1 << i | 1 << j
            # vertices adjacent to the new edge may not appear in later edges
            blocked = forbidden | pair | g.adj[i] | g.adj[j]
            grow(k + 1, used | pair, blocked, size + 1)

    grow(0, 0, 0, 0)
    return best


# -- predicates -----------------------------------------------------------

def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by a perfect-elimination check."""
    n = g.n
    weight = [0] * n
    order = []
    unnumbered = g.vertex_mask
    while unnumbered:
        v = max(_bits(unnumbered), key=lambda u: (weight[u], -u))
        order.append(v)
        unnumbered &= ~(1 << v)
        for u in _bits(g.adj[v] & unnumbered):
            weight[u] += 1
    # order reversed is a perfect elimination ordering iff chordal
    position = {v: k for k, v in enumerate(order)}
    for v in order:
        earlier = [u for u in _bits(g.adj[v]) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        rest = mask_of(earlier) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(components(g))


def has_triangle(g: Graph) -> bool:
    return any(g.adj[i] & g.adj[j] for i, j in g.edges)


def has_isolated_vertex(g: Graph, mask: int | None = None) -> bool:
    mask = g.vertex_mask if mask is None else mask
    return any(not (g.adj[v] & mask) for v in _bits(mask))


def all_labeled_graphs(n: int, min_edges: int = 1) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices with at least ``min_edges`` edges."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        if bin(code).count("1") < min_edges:
            continue
        yield Graph(n, tuple(p for k, p in enumerate(pairs) if code >> k & 1))
