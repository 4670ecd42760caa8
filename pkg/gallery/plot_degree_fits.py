"""
Degree distribution of the partition graph of 37
================================================

The degrees of the flip graph on the 21637 partitions of 37 and the numbers
of parts of those partitions are both fitted by a lognormal and a normal law
using maximum likelihood.  The comparison below is a report, not a theorem.
"""

from pwords import analysis, graphs

g = graphs.build(1, 37)
print(analysis.degree_histogram(g).to_csv())

for name, sample in (
    ("degrees", analysis.degree_samples(g)),
    ("parts", analysis.parts_histogram(37).samples()),
):
    for f in analysis.compare(sample):
        print(f"{name:8s} {f.family:9s} mu={f.mu:.4f} sigma={f.sigma:.4f} "
              f"loglik={f.log_likelihood:.1f} ks={f.ks:.4f}")

# the edge count can be read off the partitions alone
print(analysis.lambda_edge_statistic(37), g.edge_count)
