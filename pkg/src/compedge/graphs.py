"""Simple graphs on vertex set {1, ..., n}: parsing, predicates, enumeration.

Edges are stored canonically as a sorted tuple of pairs (u, v) with u < v, so
two graphs are equal exactly when they have the same vertex count and edge set.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

DEFAULT_ENUMERATION_LIMIT = 7


class GraphFormatError(ValueError):
    """Raised when a graph description is malformed; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class SimpleGraph:
    """A finite simple graph on {1, ..., n}."""

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        seen = set()
        canon = []
        for e in self.edges:
            u, v = e
            if u > v:
                u, v = v, u
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u and v <= self.n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def isolated_vertices(self) -> tuple[int, ...]:
        touched = {v for e in self.edges for v in e}
        return tuple(v for v in self.vertices() if v not in touched)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def parse_graph(text: str) -> SimpleGraph:
    """Parse a graph from either the line-oriented or the JSON format.

    Line format: a header ``n m`` followed by m lines ``u v``.
    JSON format: ``{"n": <int>, "edges": [[u, v], ...]}``.
    Edge order is irrelevant; endpoint order within an edge is normalized.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json_graph(text)
    return _parse_edge_list(text)


def _parse_json_graph(text: str) -> SimpleGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(obj, dict):
        raise GraphFormatError("JSON graph must be an object")
    if "n" not in obj or "edges" not in obj:
        raise GraphFormatError("JSON graph needs fields 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError(f"field 'n' must be a nonnegative integer, got {n!r}")
    raw = obj["edges"]
    if not isinstance(raw, list):
        raise GraphFormatError("field 'edges' must be an array of pairs")
    edges = []
    for k, item in enumerate(raw):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise GraphFormatError(f"edge #{k + 1} must be a pair of integers, got {item!r}")
        edges.append((item[0], item[1]))
    return _build_graph(n, edges, lines=None)


def _parse_edge_list(text: str) -> SimpleGraph:
    lines = text.splitlines()
    header_idx = None
    for idx, line in enumerate(lines):
        if line.strip():
            header_idx = idx
            break
    if header_idx is None:
        raise GraphFormatError("empty input, expected a header 'n m'")
    header = lines[header_idx].split()
    if len(header) != 2:
        raise GraphFormatError(
            f"malformed header, expected 'n m', got {lines[header_idx].strip()!r}",
            line=header_idx + 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(
            f"malformed header, expected two integers, got {lines[header_idx].strip()!r}",
            line=header_idx + 1) from None
    if n < 0 or m < 0:
        raise GraphFormatError("header counts must be nonnegative", line=header_idx + 1)
    edges: list[tuple[int, int]] = []
    line_nos: list[int] = []
    for idx in range(header_idx + 1, len(lines)):
        line = lines[idx]
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected an edge 'u v', got {line.strip()!r}", line=idx + 1)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"edge endpoints must be integers, got {line.strip()!r}",
                                   line=idx + 1) from None
        edges.append((u, v))
        line_nos.append(idx + 1)
    if len(edges) != m:
        raise GraphFormatError(f"header promised {m} edges, found {len(edges)}",
                               line=header_idx + 1)
    return _build_graph(n, edges, lines=line_nos)


def _build_graph(n: int, edges: list[tuple[int, int]], lines: list[int] | None) -> SimpleGraph:
    seen: dict[tuple[int, int], int] = {}
    canon = []
    for k, (u, v) in enumerate(edges):
        where = lines[k] if lines else None
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}", line=where)
        a, b = (u, v) if u < v else (v, u)
        if not (1 <= a and b <= n):
            raise GraphFormatError(f"vertex label out of range 1..{n} in edge {u} {v}", line=where)
        if (a, b) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", line=where)
        seen[(a, b)] = k
        canon.append((a, b))
    return SimpleGraph(n, tuple(canon))


def connected_components(graph: SimpleGraph) -> list[tuple[int, ...]]:
    """Vertex blocks of the components, each sorted, ordered by smallest element."""
    adj: dict[int, list[int]] = {v: [] for v in graph.vertices()}
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    unseen = set(graph.vertices())
    blocks = []
    for start in graph.vertices():
        if start not in unseen:
            continue
        stack = [start]
        unseen.discard(start)
        block = []
        while stack:
            v = stack.pop()
            block.append(v)
            for w in adj[v]:
                if w in unseen:
                    unseen.discard(w)
                    stack.append(w)
        blocks.append(tuple(sorted(block)))
    return blocks


def is_forest(graph: SimpleGraph) -> bool:
    """True iff the graph is acyclic: m = n - (number of components)."""
    return graph.m == graph.n - len(connected_components(graph))


def is_complete(graph: SimpleGraph) -> bool:
    """True iff every pair of vertices is an edge; K_1 and K_0 count as complete."""
    return graph.m == graph.n * (graph.n - 1) // 2


def is_tree(graph: SimpleGraph) -> bool:
    return is_forest(graph) and len(connected_components(graph)) == 1


def max_subgraph_density(graph: SimpleGraph) -> Fraction:
    """m(G) = max over nonempty W of |E(G[W])| / |W|, as an exact fraction.

    Exponential in n; meant for the small fixed graphs fed to threshold formulas.
    """
    if graph.m == 0:
        raise ValueError("density of an edgeless graph is undefined")
    masks = []
    for u, v in graph.edges:
        masks.append((1 << (u - 1)) | (1 << (v - 1)))
    best = Fraction(0)
    for w in range(1, 1 << graph.n):
        count = sum(1 for em in masks if em & w == em)
        size = w.bit_count()
        val = Fraction(count, size)
        if val > best:
            best = val
    return best


def enumerate_graphs(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[SimpleGraph]:
    """Yield all 2^C(n,2) labeled graphs on {1..n} in a fixed order.

    Edge slots are the pairs of {1..n} in lexicographic order; graph k has edge
    slot i present iff bit i of k is set.
    """
    if n > limit:
        raise ValueError(f"enumeration of graphs on {n} vertices exceeds the limit of {limit}")
    slots = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(slots)):
        edges = tuple(slots[i] for i in range(len(slots)) if (mask >> i) & 1)
        yield SimpleGraph(n, edges)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    return SimpleGraph(n, tuple(edges))
