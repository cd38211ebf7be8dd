"""Immutable simple graphs with closed-neighborhood (reflexive) semantics.

Every neighborhood query includes the queried vertex itself: the game
conventions treat each vertex as adjacent to itself, although no self-edge
is ever stored.  Vertices are identified by string labels and keep their
insertion order, which fixes the deterministic ordering used by all output.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import GraphParseError, UnknownVertexError

#: A set of vertex labels belonging to one graph.
VertexSet = frozenset


class Graph:
    """A finite, non-empty, simple undirected graph with named vertices.

    Immutable after construction; all queries are pure reads, so instances
    are safe to share across threads.  Self-loops passed to the constructor
    are discarded (reflexivity is a convention, not data); duplicate edges
    are rejected to keep the stored relation canonical.
    """

    __slots__ = ("_labels", "_index", "_closed", "_edges")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        labels = tuple(vertices)
        if not labels:
            raise ValueError("a graph needs at least one vertex")
        index: dict[str, int] = {}
        for label in labels:
            if not isinstance(label, str) or not label or any(c.isspace() for c in label):
                raise ValueError(f"bad vertex label: {label!r}")
            if label in index:
                raise ValueError(f"duplicate vertex label: {label!r}")
            index[label] = len(index)
        closed: dict[str, set[str]] = {label: {label} for label in labels}
        seen: set[tuple[str, str]] = set()
        for a, b in edges:
            if a not in index:
                raise UnknownVertexError(a)
            if b not in index:
                raise UnknownVertexError(b)
            if a == b:
                continue  # implicit reflexivity; drop stored loops
            key = (a, b) if index[a] < index[b] else (b, a)
            if key in seen:
                raise ValueError(f"duplicate edge: {a} {b}")
            seen.add(key)
            closed[a].add(b)
            closed[b].add(a)
        self._labels = labels
        self._index = index
        self._closed = {label: frozenset(nb) for label, nb in closed.items()}
        self._edges = tuple(sorted(seen, key=lambda e: (index[e[0]], index[e[1]])))

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def vertex_set(self) -> VertexSet:
        return frozenset(self._labels)

    def edges(self) -> tuple[tuple[str, str], ...]:
        """Stored edges, canonically ordered by vertex insertion order."""
        return self._edges

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def index(self, label: str) -> int:
        """Dense 0-based index of a vertex in insertion order."""
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex: {label!r}") from None

    def sorted(self, labels: Iterable[str]) -> list[str]:
        """Sort labels by insertion order (the canonical output order)."""
        return sorted(labels, key=self.index)

    def closed_neighborhood(self, v: str) -> VertexSet:
        """All vertices adjacent to ``v``, including ``v`` itself."""
        try:
            return self._closed[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex: {v!r}") from None

    def adjacent(self, a: str, b: str) -> bool:
        """Closed adjacency: true when ``a == b`` or an edge joins them."""
        return b in self.closed_neighborhood(a)

    def dominates(self, u: str, targets: Iterable[str]) -> bool:
        """True when ``u`` is (closed-)adjacent to every target vertex."""
        nb = self.closed_neighborhood(u)
        return all(t in nb for t in targets)

    def is_clique(self) -> bool:
        full = self.vertex_set()
        return all(self._closed[v] == full for v in self._labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._labels, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


# -- cornering predicates ------------------------------------------------


def corners(g: Graph, w: str, v: str) -> bool:
    """True when ``w`` corners ``v``: N[v] is contained in N[w].

    The two vertices must be distinct; cornering a vertex by itself is not
    defined.
    """
    if w == v:
        raise ValueError("cornering is defined for distinct vertices")
    return g.closed_neighborhood(v) <= g.closed_neighborhood(w)


def strictly_corners(g: Graph, w: str, v: str) -> bool:
    """True when ``w`` corners ``v`` and has a neighbor that ``v`` lacks."""
    if w == v:
        raise ValueError("cornering is defined for distinct vertices")
    return g.closed_neighborhood(v) < g.closed_neighborhood(w)


def twins(g: Graph, v: str, w: str) -> bool:
    """True when the two distinct vertices have identical closed neighborhoods."""
    if v == w:
        raise ValueError("twins are defined for distinct vertices")
    return g.closed_neighborhood(v) == g.closed_neighborhood(w)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    """Subgraph induced by ``keep``; labels and their relative order survive."""
    keep_set = set(keep)
    if not keep_set:
        raise ValueError("induced subgraph needs a non-empty vertex set")
    for v in keep_set:
        if v not in g:
            raise UnknownVertexError(f"unknown vertex: {v!r}")
    vertices = [v for v in g.labels if v in keep_set]
    edges = [(a, b) for a, b in g.edges() if a in keep_set and b in keep_set]
    return Graph(vertices, edges)


# -- text format -----------------------------------------------------------
#
# First line "n m", then n vertex labels (one per line), then m edge lines
# "label1 label2".  Lines starting with "#" and blank lines are ignored.


def parse_graph_text(text: str) -> Graph:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphParseError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphParseError(f"non-integer header: {lines[0]!r}") from None
    if n < 1 or m < 0:
        raise GraphParseError(f"bad header counts: n={n} m={m}")
    if len(lines) != 1 + n + m:
        raise GraphParseError(
            f"expected {1 + n + m} content lines for n={n} m={m}, got {len(lines)}"
        )
    vertices = []
    for line in lines[1 : 1 + n]:
        if len(line.split()) != 1:
            raise GraphParseError(f"expected a single vertex label, got {line!r}")
        vertices.append(line)
    edges = []
    for line in lines[1 + n :]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'label1 label2' edge line, got {line!r}")
        edges.append((parts[0], parts[1]))
    try:
        return Graph(vertices, edges)
    except (ValueError, KeyError) as exc:
        raise GraphParseError(str(exc)) from exc


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges())}"]
    lines.extend(g.labels)
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())
