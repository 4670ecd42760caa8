"""Slow, independent reference implementations used by the test-suite.

Nothing here calls into the grammar, enumeration or graph code; the only
shared piece is the :class:`~pwords.words.DDimPartition` container.
"""

from itertools import product

import numpy as np

from .errors import BudgetExceededError
from .words import DDimPartition

__all__ = [
    "naive_partitions",
    "naive_ddim_partitions",
    "naive_word",
    "naive_words",
    "naive_edges",
]


def naive_partitions(n):
    """All partitions of ``n`` as non-increasing tuples, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return sorted(out)


def _supports(d, max_size):
    """Downward-closed cell sets in N^d (1-based) of every size up to max_size."""
    origin = (1,) * d
    layers = [{frozenset([origin])}]
    for _ in range(max_size - 1):
        grown = set()
        for cells in layers[-1]:
            for cell in cells:
                for axis in range(d):
                    cand = cell[:axis] + (cell[axis] + 1,) + cell[axis + 1 :]
                    if cand in cells:
                        continue
                    below = (
                        cand[:a] + (cand[a] - 1,) + cand[a + 1 :]
                        for a in range(d)
                        if cand[a] > 1
                    )
                    if all(b in cells for b in below):
                        grown.add(cells | {cand})
        layers.append(grown)
    return [s for layer in layers for s in layer]


def _fillings(cells, d, total):
    order = sorted(cells)  # lexicographic order is a linear extension
    preds = {
        c: [c[:a] + (c[a] - 1,) + c[a + 1 :] for a in range(d) if c[a] > 1]
        for c in order
    }
    values = {}
    k = len(order)

    def rec(i, remaining):
        if i == k:
            if remaining == 0:
                yield dict(values)
            return
        cell = order[i]
        cap = min([values[p] for p in preds[cell]] + [remaining - (k - i - 1)])
        for v in range(1, cap + 1):
            values[cell] = v
            yield from rec(i + 1, remaining - v)
        values.pop(cell, None)

    yield from rec(0, total)


def naive_ddim_partitions(d, n, max_results=200_000):
    """Every d-dimensional partition of ``n`` by brute force: enumerate the
    downward-closed supports, then every axis-monotone filling summing to n.
    """
    if d < 1 or d > 3:
        raise ValueError("oracle supports d in 1..3 only")
    if n < 1 or n > 12:
        raise ValueError("oracle supports 1 <= n <= 12 only")
    seen = set()
    for cells in _supports(d, n):
        for filling in _fillings(cells, d, n):
            seen.add(tuple(sorted(filling.items())))
            if len(seen) > max_results:
                raise BudgetExceededError("oracle result limit", partial=len(seen))
    return [DDimPartition(d, key) for key in sorted(seen)]


def naive_word(p):
    """Word of a d-dimensional partition, written straight from the slicing
    construction (outermost slice index = first coordinate)."""
    cells = dict(p.cells)

    def enc(cells, level):
        if level == p.d:
            return str(p.d) * (next(iter(cells.values())) - 1)
        slices = {}
        for coords, v in cells.items():
            slices.setdefault(coords[0], {})[coords[1:]] = v
        return str(level).join(enc(slices[i], level + 1) for i in sorted(slices))

    return enc(cells, 0)


def naive_words(d, n):
    """Sorted words for (d, n) obtained by encoding the brute-force partitions."""
    if d == 1:
        parts = naive_partitions(n)
        return sorted("0".join("1" * (x - 1) for x in lam) for lam in parts)
    return sorted(naive_word(p) for p in naive_ddim_partitions(d, n))


def naive_edges(d, n, words=None, max_vertices=3000):
    """All pairs of words at Hamming distance exactly 1, by comparing every pair.

    Returns a set of ``(u_word, v_word)`` with ``u_word < v_word``.  ``words``
    defaults to :func:`naive_words`.
    """
    if words is None:
        words = naive_words(d, n)
    words = list(words)
    if len(words) > max_vertices:
        raise BudgetExceededError(
            f"{len(words)} vertices exceeds the oracle guard of {max_vertices}",
            partial=0,
        )
    if n == 1 or not words:
        return set()
    arr = np.array([[int(ch) for ch in w] for w in words], dtype=np.int8)
    edges = set()
    for i in range(len(words)):
        diff = (arr[i + 1 :] != arr[i]).sum(axis=1)
        for j in np.nonzero(diff == 1)[0]:
            a, b = words[i], words[i + 1 + j]
            edges.add((a, b) if a < b else (b, a))
    return edges


def naive_hamming_distance(a, b):
    return sum(x != y for x, y in zip(a, b))


def all_words(d, length):
    """Every symbol sequence of a given length over 0..d, as strings."""
    return ["".join(t) for t in product("0123456789"[: d + 1], repeat=length)]
