"""Simple undirected graphs, semi-regular bipartite structure, and joins.

Graphs are immutable: vertex set 0..n-1 and a lexicographically sorted
tuple of edges (u, v) with u < v.  ``build_graph`` is the validating
constructor; generators return their graphs wrapped in
``SemiRegularBipartite`` via ``detect_semiregular`` so the stored
parameters are always re-derived from the structure itself.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    LoopEdgeError,
    NotBipartiteError,
    NotRegularError,
    NotSemiRegularError,
    OutOfRangeError,
)
from .matrices import IntMatrix


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency(self) -> IntMatrix:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = 1
            a[v][u] = 1
        return IntMatrix(a)

    def degree_matrix(self) -> IntMatrix:
        return IntMatrix(
            [[self.degrees[i] if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        )

    def laplacian(self) -> IntMatrix:
        lap = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            lap[i][i] = self.degrees[i]
        for u, v in self.edges:
            lap[u][v] = -1
            lap[v][u] = -1
        return IntMatrix(lap)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency_sets()
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Apply the vertex relabeling i -> perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor; rejects loops, duplicates and bad endpoints."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} supplied more than once")
        seen.add(key)
    sorted_edges = tuple(sorted(seen))
    degrees = [0] * n
    for u, v in sorted_edges:
        degrees[u] += 1
        degrees[v] += 1
    return Graph(n=n, edges=sorted_edges, degrees=tuple(degrees))


def graph_from_dict(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph object must have 'n' and 'edges' keys")
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ValueError("malformed graph object")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ValueError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    return build_graph(n, pairs)


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


def join(g1: Graph, g2: Graph) -> Graph:
    """Join of two graphs: disjoint union plus all edges between them.

    Vertices of g2 are shifted up by g1.n, so the resulting labeling is
    deterministic.
    """
    if g1.n == 0 or g2.n == 0:
        raise ValueError("join requires nonempty graphs")
    shift = g1.n
    edges = list(g1.edges)
    edges.extend((u + shift, v + shift) for u, v in g2.edges)
    edges.extend((u, v + shift) for u in range(g1.n) for v in range(g2.n))
    return build_graph(g1.n + g2.n, edges)


@dataclass(frozen=True)
class SemiRegularBipartite:
    """A connected bipartite graph with constant degree on each side.

    Parts are normalized so n1 <= n2 (q1 >= q2 and then the part holding
    the smallest vertex index break ties), hence n1*q1 = n2*q2.
    """

    graph: Graph
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    n1: int
    n2: int
    q1: int
    q2: int

    @property
    def nu(self) -> int:
        """Total vertex count n1 + n2."""
        return self.n1 + self.n2

    @property
    def eps(self) -> int:
        """Edge count n1*q1 = n2*q2."""
        return self.n1 * self.q1

    def biadjacency(self) -> IntMatrix:
        """The n1 x n2 block of the adjacency matrix, rows indexed by part1."""
        index2 = {v: j for j, v in enumerate(self.part2)}
        adj = self.graph.adjacency_sets()
        rows = []
        for u in self.part1:
            row = [0] * self.n2
            for w in adj[u]:
                row[index2[w]] = 1
            rows.append(row)
        return IntMatrix(rows)


def detect_semiregular(g: Graph) -> SemiRegularBipartite:
    """Verify and extract semi-regular bipartite structure.

    Requires a connected graph on at least 2 vertices; the bipartition of
    a connected bipartite graph is unique, found here by BFS 2-coloring.
    """
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    adj = g.adjacency_sets()
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    visited = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if color[w] == -1:
                color[w] = 1 - color[u]
                visited += 1
                queue.append(w)
            elif color[w] == color[u]:
                raise NotBipartiteError("graph contains an odd cycle")
    if visited != g.n:
        raise DisconnectedError("graph is not connected")
    side_a = tuple(v for v in range(g.n) if color[v] == 0)
    side_b = tuple(v for v in range(g.n) if color[v] == 1)
    deg_a = {g.degrees[v] for v in side_a}
    deg_b = {g.degrees[v] for v in side_b}
    if len(deg_a) != 1 or len(deg_b) != 1:
        raise NotSemiRegularError("degrees are not constant within a part")
    qa = deg_a.pop()
    qb = deg_b.pop()
    swap = False
    if len(side_a) != len(side_b):
        swap = len(side_a) > len(side_b)
    elif qa != qb:
        swap = qa < qb
    else:
        swap = min(side_a) > min(side_b)
    if swap:
        side_a, side_b = side_b, side_a
        qa, qb = qb, qa
    return SemiRegularBipartite(
        graph=g,
        part1=side_a,
        part2=side_b,
        n1=len(side_a),
        n2=len(side_b),
        q1=qa,
        q2=qb,
    )


# -- generators ----------------------------------------------------------------


def gen_complete_bipartite(m: int, n: int) -> SemiRegularBipartite:
    """K_{m,n}: parts 0..m-1 and m..m+n-1, every cross pair an edge."""
    if m < 1 or n < 1:
        raise ValueError("complete bipartite parts must be nonempty")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return detect_semiregular(build_graph(m + n, edges))


def gen_even_cycle(k: int) -> SemiRegularBipartite:
    """The cycle C_{2k}, a (2,2)-semi-regular bipartite graph."""
    if k < 2:
        raise ValueError("even cycle needs k >= 2")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)]
    return detect_semiregular(build_graph(n, edges))


def gen_crown(k: int) -> SemiRegularBipartite:
    """Crown graph: K_{k,k} minus a perfect matching, (k-1)-regular."""
    if k < 3:
        raise ValueError("crown graph needs k >= 3")
    edges = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    return detect_semiregular(build_graph(2 * k, edges))


def gen_subdivision(g: Graph) -> SemiRegularBipartite:
    """Subdivide every edge of a connected d-regular graph, d >= 3.

    Original vertices keep degree d, the new midpoint vertices have
    degree 2, giving a (d, 2)-semi-regular bipartite graph.
    """
    if g.n == 0:
        raise ValueError("cannot subdivide the empty graph")
    degs = set(g.degrees)
    if len(degs) != 1:
        raise NotRegularError("subdivision requires a regular graph")
    d = degs.pop()
    if d < 3:
        raise ValueError("subdivision generator requires degree >= 3")
    edges = []
    for e, (u, v) in enumerate(g.edges):
        mid = g.n + e
        edges.append((u, mid))
        edges.append((v, mid))
    return detect_semiregular(build_graph(g.n + g.m, edges))
