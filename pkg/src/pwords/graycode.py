"""Gray codes on partition words.

A k-Gray code lists every vertex of a flip graph once such that consecutive
words (cyclically) are at most ``k`` flips apart, where every intermediate
word is itself a valid partition word.

* ``gray2`` searches for a Hamiltonian cycle in the square of
  ``Pi(1, n) \\ {0^(n-1)}``, which exists because that graph is 2-connected
  (Fleischner).
* ``gray3`` is constructive: a BFS spanning tree of ``Pi(d, n)`` listed in
  prepostorder (even depths on entry, odd depths on exit) is a Hamiltonian
  cycle of the cube of the tree (Sekanina).
"""

from __future__ import annotations

from dataclasses import dataclass

from scipy.sparse import csgraph

from .errors import ContractError, SearchExhaustedError
from .graphs import Graph, PartitionGraph, build, is_hamiltonian, power

__all__ = [
    "GrayCode",
    "gray2",
    "gray3",
    "gray3_from_graph",
    "max_step",
    "verify",
    "format_gray",
    "parse_gray",
]


@dataclass(frozen=True)
class GrayCode:
    d: int
    n: int
    k: int
    sequence: tuple
    cyclic: bool = True

    def __len__(self):
        return len(self.sequence)

    def pairs(self):
        seq = self.sequence
        out = list(zip(seq, seq[1:]))
        if self.cyclic and len(seq) > 1:
            out.append((seq[-1], seq[0]))
        return out


def gray2(n: int, budget: float = 10.0, seed: int = 0) -> GrayCode:
    """Cyclic 2-Gray code on the ordinary partitions of ``n`` except ``1^n``.

    Raises
    ------
    ValueError
        For ``n < 4``, where the underlying graph is not 2-connected.
    SearchExhaustedError
        When the search budget runs out before a cycle is found.
    """
    if n < 4:
        raise ValueError(f"gray2 needs n >= 4, got {n}")
    g = build(1, n, include_zero=False)
    verdict = is_hamiltonian(power(g, 2), budget=budget, seed=seed)
    if verdict.status != "yes":
        raise SearchExhaustedError(
            f"no Hamiltonian cycle of the square found for n={n} within "
            f"{budget}s ({verdict.status}: {verdict.witness})"
        )
    return GrayCode(1, n, 2, _rotate_to_min(verdict.cycle), cyclic=True)


def _rotate_to_min(cycle):
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def gray3_from_graph(g: Graph, d: int, n: int) -> GrayCode:
    """Prepostorder walk of the BFS tree of a connected graph ``g``."""
    V = g.vertex_count
    if V == 0:
        return GrayCode(d, n, 3, (), cyclic=True)
    # neighbours are visited in ascending index order, so children appear in
    # discovery order along the BFS order
    bfs, parent = csgraph.breadth_first_order(
        g.adjacency, 0, directed=False, return_predecessors=True
    )
    if len(bfs) != V:
        raise ContractError("graph is disconnected; no spanning tree")
    children = [[] for _ in range(V)]
    for v in bfs[1:].tolist():
        children[parent[v]].append(v)

    order = []
    stack = [(0, 0, False)]
    while stack:
        u, depth, leaving = stack.pop()
        if leaving:
            order.append(u)
            continue
        if depth % 2 == 0:
            order.append(u)
        else:
            stack.append((u, depth, True))
        for c in reversed(children[u]):
            stack.append((c, depth + 1, False))
    labels = g.labels
    return GrayCode(d, n, 3, tuple(labels[i] for i in order), cyclic=True)


def gray3(d: int, n: int) -> GrayCode:
    """Cyclic 3-Gray code on all d-dimensional partitions of ``n``.

    >>> gray3(1, 2).sequence
    ('0', '1')
    """
    if n < 2:
        raise ValueError(f"gray3 needs n >= 2, got {n}")
    return gray3_from_graph(build(d, n), d, n)


def _within(adj, a, b, k):
    if a == b:
        return True
    frontier = {a}
    seen = {a}
    for _ in range(k):
        nxt = set()
        for u in frontier:
            for w in adj[u]:
                if w == b:
                    return True
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
    return False


def _distance(adj, a, b, limit):
    if a == b:
        return 0
    seen = {a}
    frontier = [a]
    for dist in range(1, limit + 1):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w == b:
                    return dist
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return None


def max_step(code: GrayCode, graph: Graph, limit: int = 8):
    """Largest graph distance between consecutive words (None if beyond ``limit``)."""
    idx = graph.index
    best = 0
    for a, b in code.pairs():
        dist = _distance(graph.adj, idx[a], idx[b], limit)
        if dist is None:
            return None
        best = max(best, dist)
    return best


def verify(code: GrayCode, graph: PartitionGraph) -> bool:
    """True iff ``code`` lists every vertex of ``graph`` exactly once and
    consecutive words are within ``code.k`` flips in ``graph``.

    Raises
    ------
    ContractError
        If the code and graph disagree on ``d`` or ``n``.
    """
    if isinstance(graph, PartitionGraph) and (code.d, code.n) != (graph.d, graph.n):
        raise ContractError(
            f"code is for (d={code.d}, n={code.n}) but graph is "
            f"(d={graph.d}, n={graph.n})"
        )
    idx = graph.index
    seq = code.sequence
    if len(seq) != graph.vertex_count or len(set(seq)) != len(seq):
        return False
    if any(w not in idx for w in seq):
        return False
    adj = graph.adj
    return all(_within(adj, idx[a], idx[b], code.k) for a, b in code.pairs())


def format_gray(code: GrayCode) -> str:
    """Header ``d n k cyclic`` then one word per line."""
    head = f"{code.d} {code.n} {code.k} {'true' if code.cyclic else 'false'}\n"
    return head + "".join(w + "\n" for w in code.sequence)


def parse_gray(text: str) -> GrayCode:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty Gray-code file")
    fields = lines[0].split()
    if len(fields) != 4 or fields[3] not in ("true", "false"):
        raise ValueError(f"bad Gray-code header: {lines[0]!r}")
    d, n, k = (int(x) for x in fields[:3])
    return GrayCode(d, n, k, tuple(lines[1:]), cyclic=fields[3] == "true")
