"""Corner ranking: per-vertex ranks, the derived graph chain, and cop-win class.

The ranking procedure runs in rounds on a shrinking graph.  Round ``k``
assigns rank ``k`` to every strict corner of the current graph (evaluated
against the same snapshot, then deleted simultaneously).  If the current
graph is a clique, every remaining vertex gets rank ``k`` and the procedure
stops; if it has no strict corner and is not a clique, every remaining
vertex gets rank INFINITE and the procedure stops.

The graph rank ``alpha`` is the largest vertex rank.  A graph with finite
``alpha`` is cop-win; its class is R1 when every rank-``alpha`` vertex
dominates the level-``alpha - 1`` vertex set, else R0, and its capture time
is ``alpha - r`` with ``r = 1`` for R1 and ``r = 0`` for R0.

Rank-1 graphs (cliques) sit outside the general classification, so we fix a
convention that keeps the capture-time formula exact: a single vertex is R1
(capture time 0) and a clique on two or more vertices is R0 (capture time 1).
"""

from __future__ import annotations

from .common import ESCAPE, INFINITE, GameValue, Rank, is_finite, rank_to_json
from .errors import UnknownVertexError
from .graph import Graph, VertexSet, induced_subgraph, strictly_corners

R0 = "R0"
R1 = "R1"
NOT_COP_WIN = "NotCopWin"


class RankAssignment:
    """The full output of the ranking procedure for one graph.

    Immutable after construction.  ``level(k)`` is the vertex set of the
    k-th derived graph: all vertices of rank at least ``k``.  On graphs of
    infinite rank with some finite-rank vertex, the largest finite rank
    ``gamma`` plays the role of "infinity minus one": the level after
    ``gamma`` is the INFINITE level.
    """

    __slots__ = (
        "graph",
        "rank_of",
        "alpha",
        "copwin_class",
        "_finite_levels",
        "_infinite_level",
        "_level_graphs",
    )

    def __init__(
        self,
        graph: Graph,
        rank_of: dict[str, Rank],
        alpha: Rank,
        copwin_class: str,
        finite_levels: list[VertexSet],
        infinite_level: VertexSet,
    ):
        self.graph = graph
        self.rank_of = rank_of
        self.alpha = alpha
        self.copwin_class = copwin_class
        self._finite_levels = finite_levels  # index k-1 holds level k
        self._infinite_level = infinite_level
        self._level_graphs: dict[Rank, Graph] = {}

    # -- queries -----------------------------------------------------------

    def rank(self, v: str) -> Rank:
        try:
            return self.rank_of[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex: {v!r}") from None

    @property
    def is_cop_win(self) -> bool:
        return is_finite(self.alpha)

    @property
    def r(self) -> int:
        """The 0/1 cop-win class as an integer; only defined when cop-win."""
        if not self.is_cop_win:
            raise ValueError("r is defined only for graphs of finite rank")
        return 1 if self.copwin_class == R1 else 0

    @property
    def max_finite_level(self) -> int:
        """Largest finite level: alpha when finite, gamma on mixed graphs, 0 if none."""
        return len(self._finite_levels)

    @property
    def has_infinite(self) -> bool:
        return bool(self._infinite_level)

    @property
    def infinite_level(self) -> VertexSet:
        return self._infinite_level

    def level(self, k: Rank) -> VertexSet:
        """Vertices of rank at least ``k``.

        ``k <= 1`` returns the whole vertex set; ``k == INFINITE`` (or the
        first level past the finite ones, when an infinite part exists)
        returns the infinite-rank vertices.
        """
        if k == INFINITE:
            if not self._infinite_level:
                raise ValueError("graph has no infinite-rank vertices")
            return self._infinite_level
        k = int(k)
        if k <= 1:
            return self.graph.vertex_set()
        if k <= len(self._finite_levels):
            return self._finite_levels[k - 1]
        if k == len(self._finite_levels) + 1 and self._infinite_level:
            return self._infinite_level  # gamma + 1 names the infinite level
        raise ValueError(f"no level {k} in a rank-{rank_to_json(self.alpha)} graph")

    def level_graph(self, k: Rank) -> Graph:
        """Induced subgraph on ``level(k)``; cached per level."""
        key = INFINITE if k == INFINITE else int(k)
        try:
            return self._level_graphs[key]
        except KeyError:
            sub = induced_subgraph(self.graph, self.level(k))
            self._level_graphs[key] = sub
            return sub

    def vertices_of_rank(self, k: Rank) -> list[str]:
        return [v for v in self.graph.labels if self.rank_of[v] == k]


def _strict_corners(g: Graph) -> list[str]:
    out = []
    for v in g.labels:
        nv = g.closed_neighborhood(v)
        if any(w != v and nv < g.closed_neighborhood(w) for w in g.labels):
            out.append(v)
    return out


def corner_rank(g: Graph) -> RankAssignment:
    """Run the ranking procedure on ``g`` and return the full assignment."""
    rank_of: dict[str, Rank] = {}
    finite_levels: list[VertexSet] = []
    infinite_level: VertexSet = frozenset()
    remaining = list(g.labels)
    current = g
    k = 1
    while True:
        if current.is_clique():
            for v in remaining:
                rank_of[v] = k
            finite_levels.append(frozenset(remaining))
            alpha: Rank = k
            break
        corners_now = _strict_corners(current)
        if not corners_now:
            for v in remaining:
                rank_of[v] = INFINITE
            infinite_level = frozenset(remaining)
            alpha = INFINITE
            break
        finite_levels.append(frozenset(remaining))
        for v in corners_now:
            rank_of[v] = k
        dropped = set(corners_now)
        remaining = [v for v in remaining if v not in dropped]
        current = induced_subgraph(g, remaining)
        k += 1

    rank_of = {v: rank_of[v] for v in g.labels}  # insertion order
    copwin_class = _classify(g, rank_of, alpha, finite_levels)
    return RankAssignment(g, rank_of, alpha, copwin_class, finite_levels, infinite_level)


def _classify(g: Graph, rank_of, alpha, finite_levels) -> str:
    if not is_finite(alpha):
        return NOT_COP_WIN
    if alpha == 1:
        return R1 if g.n == 1 else R0
    top = [v for v in g.labels if rank_of[v] == alpha]
    below = finite_levels[alpha - 2]  # level alpha - 1
    return R1 if all(g.dominates(v, below) for v in top) else R0


def classify(ra: RankAssignment) -> str:
    """The cop-win class of a ranked graph: R0, R1, or NotCopWin."""
    return ra.copwin_class


def capture_time(ra: RankAssignment) -> GameValue:
    """Exact number of cop moves needed to win, or ESCAPE when the robber wins."""
    if not ra.is_cop_win:
        return ESCAPE
    return int(ra.alpha) - ra.r


def rank_report(ra: RankAssignment) -> dict:
    """JSON-ready summary: ranks, alpha, class, capture time."""
    capt = capture_time(ra)
    return {
        "ranks": {v: rank_to_json(ra.rank_of[v]) for v in ra.graph.labels},
        "alpha": rank_to_json(ra.alpha),
        "class": ra.copwin_class,
        "capture_time": "escape" if capt is ESCAPE else capt,
    }
