"""Named property suites run by ``pwords check``.

Each suite yields ``(name, passed, detail)`` triples; sizes are capped by
``max_n`` so the suites can be run quickly or exhaustively.
"""

import math

from .analysis import (
    fit,
    lambda_edge_statistic,
    parity_imbalance,
    parts_histogram,
    zeros_histogram,
)
from .graphs import (
    build,
    is_proper_coloring,
    proper_coloring,
    structure_report,
)
from .graycode import gray2, gray3_from_graph, verify
from .words import enumerate_words, from_partition, symbol_totals, to_partition, validate

# reference counts for d = 1, 2, 3
TABLE_COUNTS = {
    1: [1, 2, 3, 5, 7, 11],
    2: [1, 3, 6, 13, 24],
    3: [1, 4, 10, 26, 59, 140],
}


def suite_tables(max_n=None):
    for d, counts in TABLE_COUNTS.items():
        for n, expected in enumerate(counts, start=1):
            if max_n is not None and n > max_n:
                continue
            got = len(enumerate_words(d, n))
            yield f"count d={d} n={n}", got == expected, f"{got} (expected {expected})"


def suite_words(max_n=12):
    for d, top in ((1, max_n), (2, min(max_n, 8)), (3, min(max_n, 7))):
        for n in range(1, top + 1):
            ws = enumerate_words(d, n)
            roundtrip = all(from_partition(to_partition(w, d)) == w for w in ws)
            yield f"roundtrip d={d} n={n}", roundtrip, ""
            totals = symbol_totals(d, n, ws)
            ok = sum(totals.values()) == (n - 1) * len(ws)
            yield f"symbol totals d={d} n={n}", ok, str(totals)
            if n >= 2:
                closed = all(validate(w[:-1], d) for w in ws)
                yield f"prefix closure d={d} n={n}", closed, ""


def suite_graphs(max_n=12):
    for n in range(2, max_n + 1):
        rep = structure_report(build(1, n))
        ok = rep.connected and rep.bipartite and rep.diameter == n - 1
        yield f"Pi(1,{n}) connected, bipartite, diameter n-1", ok, f"diameter={rep.diameter}"
        ok = lambda_edge_statistic(n) == rep.edge_count
        yield f"Pi(1,{n}) lambda edge statistic", ok, f"edges={rep.edge_count}"
        if n >= 4:
            rep0 = structure_report(build(1, n, include_zero=False))
            yield f"Pi(1,{n}) minus zero biconnected", rep0.biconnected, str(rep0.articulation_points)
    for d in (2, 3):
        for n in range(2, min(max_n, 8) + 1):
            g = build(d, n)
            rep = structure_report(g)
            ok = rep.connected and rep.diameter <= 2 * n - 3
            yield f"Pi({d},{n}) connected, diameter <= 2n-3", ok, f"diameter={rep.diameter}"
            yield f"Pi({d},{n}) coloring", is_proper_coloring(g, proper_coloring(g)), ""
            yield f"Pi({d},{n}) clustering > 0", rep.global_clustering > 0, f"{rep.global_clustering:.4f}"


def suite_gray(max_n=10, budget=10.0, seed=0):
    for n in range(4, min(max_n, 10) + 1):
        code = gray2(n, budget=budget, seed=seed)
        yield f"gray2 n={n}", verify(code, build(1, n, include_zero=False)), f"{len(code)} words"
    for d, top in ((1, max_n), (2, min(max_n, 8)), (3, min(max_n, 7))):
        for n in range(2, top + 1):
            g = build(d, n)
            yield f"gray3 d={d} n={n}", verify(gray3_from_graph(g, d, n), g), f"{g.vertex_count} words"


def suite_analysis(max_n=16):
    for n in range(1, max_n + 1):
        h = parts_histogram(n)
        z = zeros_histogram(enumerate_words(1, n)).shifted(1)
        yield f"parts = zeros + 1, n={n}", h == z, ""
    for n in range(8, max_n + 1):
        v = parity_imbalance(n)
        yield f"parity imbalance n={n} > 1", v > 1, str(v)
    f = fit([1.0, math.e, math.e ** 2], "lognormal")
    ok = abs(f.mu - 1) <= 1e-12 and abs(f.sigma - math.sqrt(2 / 3)) <= 1e-12
    yield "lognormal MLE on {1, e, e^2}", ok, f"mu={f.mu!r} sigma={f.sigma!r}"


SUITES = {
    "tables": suite_tables,
    "words": suite_words,
    "graphs": suite_graphs,
    "gray": suite_gray,
    "analysis": suite_analysis,
}


def run(suite, max_n=None, **kwargs):
    """Run one suite (or ``"all"``) and return a list of result dicts."""
    names = list(SUITES) if suite == "all" else [suite]
    results = []
    for name in names:
        fn = SUITES[name]
        args = {} if max_n is None else {"max_n": max_n}
        if name == "gray":
            args.update(kwargs)
        for check, passed, detail in fn(**args):
            results.append({"suite": name, "check": check, "passed": bool(passed),
                            "detail": detail})
    return results
