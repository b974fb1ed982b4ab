"""Site adjacency graphs with per-edge couplings.

Sites are indexed 0..n-1. An edge (i, j, beta) couples two neighbouring
sites with strength beta > 0; pairs that are not neighbours simply have no
edge. The graph is immutable after construction and safe to share between
concurrently running chains.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class SiteGraph:
    """Undirected graph over n sites with positive edge couplings.

    Parameters
    ----------
    n_sites : int
        Number of sites.
    edges : iterable of (i, j, beta)
        Unordered site pairs with coupling beta > 0. Pairs are normalized
        to i < j; duplicates and self-loops are rejected.
    """

    __slots__ = ("n_sites", "edges", "adjacency")

    def __init__(self, n_sites: int, edges: Iterable[Sequence]) -> None:
        if n_sites < 1:
            raise ValueError(f"need at least one site, got {n_sites}")
        self.n_sites = int(n_sites)
        seen = set()
        normalized = []
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(self.n_sites)]
        for edge in edges:
            i, j, beta = int(edge[0]), int(edge[1]), float(edge[2])
            if i == j:
                raise ValueError(f"self-loop at site {i}")
            if i > j:
                i, j = j, i
            if not (0 <= i and j < self.n_sites):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n_sites}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            if not beta > 0.0:
                raise ValueError(f"edge ({i}, {j}) has non-positive coupling {beta}")
            seen.add((i, j))
            e = len(normalized)
            normalized.append((i, j, beta))
            adjacency[i].append((j, e))
            adjacency[j].append((i, e))
        self.edges: tuple[tuple[int, int, float], ...] = tuple(normalized)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(nbrs) for nbrs in adjacency
        )

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Sites adjacent to i."""
        return tuple(j for j, _ in self.adjacency[i])

    def with_constant_coupling(self, beta: float) -> "SiteGraph":
        """Copy of the graph with every coupling replaced by beta."""
        return SiteGraph(self.n_sites, [(i, j, beta) for i, j, _ in self.edges])

    def __repr__(self) -> str:
        return f"SiteGraph(n_sites={self.n_sites}, n_edges={self.n_edges})"


def lattice_graph(width: int, height: int, beta: float) -> SiteGraph:
    """4-neighbour lattice of width*height sites, all couplings equal.

    Site (x, y) has index y*width + x. With beta <= 0 the lattice has no
    edges at all (an edgeless graph), matching the convention that absent
    edges carry zero coupling.
    """
    if width < 1 or height < 1:
        raise ValueError("lattice dimensions must be positive")
    edges = []
    if beta > 0.0:
        for y in range(height):
            for x in range(width):
                s = y * width + x
                if x + 1 < width:
                    edges.append((s, s + 1, beta))
                if y + 1 < height:
                    edges.append((s, s + width, beta))
    return SiteGraph(width * height, edges)
