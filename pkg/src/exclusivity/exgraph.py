"""Exclusivity graphs: circulants, complements, transitivity, independence.

Graphs are small (n <= 64 for everything this toolkit builds), so the
certification routines are exhaustive by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphShapeMismatch, IndexOutOfRange, InvalidDistance, ParseError, TooLarge

VERTEX_TRANSITIVITY_LIMIT = 16
INDEPENDENCE_LIMIT = 24


@dataclass(frozen=True)
class ExclusivityGraph:
    """Undirected simple graph; edges stored once in (min, max) order."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canonical = set()
        for pair in self.edges:
            i, j = pair
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise IndexOutOfRange(f"edge {pair} outside 0..{self.n - 1}")
            canonical.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(canonical))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "ExclusivityGraph":
        return cls(n, frozenset((int(i), int(j)) for i, j in edges))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant graph on Z_n with adjacency at the given circular distances."""

    n: int
    distances: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        dists = frozenset(int(d) for d in self.distances)
        if not dists:
            raise InvalidDistance("distance set must be nonempty")
        for d in dists:
            if d < 1 or d > self.n // 2:
                raise InvalidDistance(f"distance {d} outside [1, {self.n // 2}]")
        object.__setattr__(self, "distances", dists)


def circulant(spec: CirculantSpec) -> ExclusivityGraph:
    """Build the circulant graph of a spec: (i, j) adjacent iff their circular distance is listed."""
    edges = set()
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            if min(j - i, spec.n - (j - i)) in spec.distances:
                edges.add((i, j))
    return ExclusivityGraph(spec.n, frozenset(edges))


def complement(g: ExclusivityGraph) -> ExclusivityGraph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    edges = {
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if (i, j) not in g.edges
    }
    return ExclusivityGraph(g.n, frozenset(edges))


def is_clique(g: ExclusivityGraph, vertices: set[int]) -> bool:
    """True iff every pair in the set is adjacent."""
    verts = sorted(vertices)
    for v in verts:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return all(g.has_edge(a, b) for a, b in combinations(verts, 2))


def independence_number(g: ExclusivityGraph) -> int:
    """Size of the largest pairwise non-adjacent vertex set (exact, branch and bound)."""
    if g.n > INDEPENDENCE_LIMIT:
        raise TooLarge(f"n={g.n} exceeds the exhaustive limit {INDEPENDENCE_LIMIT}")
    adjacency = [0] * g.n
    for i, j in g.edges:
        adjacency[i] |= 1 << j
        adjacency[j] |= 1 << i

    best = 0

    def grow(size: int, allowed: int) -> None:
        nonlocal best
        if size + allowed.bit_count() <= best:
            return
        if allowed == 0:
            best = max(best, size)
            return
        v = (allowed & -allowed).bit_length() - 1
        grow(size + 1, allowed & ~((1 << v) | adjacency[v]))
        grow(size, allowed & ~(1 << v))

    grow(0, (1 << g.n) - 1)
    return best


def _automorphism_exists(g: ExclusivityGraph, src: int, dst: int) -> bool:
    """Backtracking search for an automorphism mapping src to dst."""
    degrees = [g.degree(v) for v in range(g.n)]
    if degrees[src] != degrees[dst]:
        return False
    neighborhoods = [g.neighbors(v) for v in range(g.n)]
    order = [src] + [v for v in range(g.n) if v != src]
    image = [-1] * g.n
    used = [False] * g.n

    def assign(pos: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        candidates = [dst] if pos == 0 else range(g.n)
        for w in candidates:
            if used[w] or degrees[v] != degrees[w]:
                continue
            consistent = True
            for prev_pos in range(pos):
                u = order[prev_pos]
                if (u in neighborhoods[v]) != (image[u] in neighborhoods[w]):
                    consistent = False
                    break
            if not consistent:
                continue
            image[v] = w
            used[w] = True
            if assign(pos + 1):
                return True
            image[v] = -1
            used[w] = False
        return False

    return assign(0)


def is_vertex_transitive(g: ExclusivityGraph) -> bool:
    """True iff some automorphism carries vertex 0 to every other vertex.

    The orbit-of-one-vertex check suffices: automorphisms compose, so if 0
    reaches every vertex then every vertex reaches every other.
    """
    if g.n > VERTEX_TRANSITIVITY_LIMIT:
        raise TooLarge(f"n={g.n} exceeds the exhaustive limit {VERTEX_TRANSITIVITY_LIMIT}")
    if g.n <= 1:
        return True
    degrees = {g.degree(v) for v in range(g.n)}
    if len(degrees) > 1:
        return False
    return all(_automorphism_exists(g, 0, t) for t in range(1, g.n))


def disjunctive_product(ga: ExclusivityGraph, gb: ExclusivityGraph) -> ExclusivityGraph:
    """Disjunctive (co-normal) product: (i,j)~(k,l) iff i~k in ga or j~l in gb.

    Vertices are row-major pairs: (i, j) -> i * gb.n + j.
    """
    n = ga.n * gb.n
    edges = set()
    for i in range(ga.n):
        for j in range(gb.n):
            a = i * gb.n + j
            for k in range(ga.n):
                for l in range(gb.n):
                    b = k * gb.n + l
                    if b <= a:
                        continue
                    if ga.has_edge(i, k) or gb.has_edge(j, l):
                        edges.add((a, b))
    return ExclusivityGraph(n, frozenset(edges))


def to_json_dict(g: ExclusivityGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def from_json_dict(data: dict) -> ExclusivityGraph:
    try:
        n = int(data["n"])
        edges = [(int(i), int(j)) for i, j in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph record: {exc}") from exc
    return ExclusivityGraph.from_edges(n, edges)


def to_dot(g: ExclusivityGraph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    """Render as an undirected DOT graph, one node line per vertex, one edge line per pair."""
    if labels is not None and len(labels) != g.n:
        raise GraphShapeMismatch(f"{len(labels)} labels for {g.n} vertices")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        text = labels[v] if labels is not None else str(v)
        lines.append(f'  {v} [label="{text}"];')
    for i, j in sorted(g.edges):
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
