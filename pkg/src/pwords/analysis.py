"""Degree and parts-count distributions of the binary partition graphs, and
lognormal/normal maximum-likelihood fits with a Kolmogorov-Smirnov distance.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
from scipy.special import ndtr

from .errors import DegenerateSampleError

__all__ = [
    "Histogram",
    "DistributionFit",
    "ascending_partitions",
    "parts_histogram",
    "zeros_histogram",
    "degree_histogram",
    "degree_samples",
    "lambda_edge_statistic",
    "parity_imbalance",
    "fit",
    "compare",
    "report_json",
]

FAMILIES = ("lognormal", "normal")


@dataclass(frozen=True)
class Histogram:
    bins: dict

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Histogram":
        vals, counts = np.unique(np.asarray(list(values), dtype=np.int64), return_counts=True)
        return cls({int(v): int(c) for v, c in zip(vals, counts)})

    @property
    def total(self) -> int:
        return sum(self.bins.values())

    def shifted(self, by: int) -> "Histogram":
        return Histogram({v + by: c for v, c in self.bins.items()})

    def samples(self) -> np.ndarray:
        """The histogram expanded back into a sorted sample."""
        keys = sorted(self.bins)
        return np.repeat(np.asarray(keys, dtype=float), [self.bins[k] for k in keys])

    def to_csv(self) -> str:
        rows = "".join(f"{v},{self.bins[v]}\n" for v in sorted(self.bins))
        return "value,count\n" + rows


def ascending_partitions(n: int) -> Iterator[list]:
    """Partitions of ``n`` as ascending part lists (Kelleher's accelerated
    ascending-composition generator)."""
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def parts_histogram(n: int) -> Histogram:
    """Number of partitions of ``n`` with exactly ``j`` parts, for each ``j``.

    >>> parts_histogram(5).bins
    {1: 1, 2: 2, 3: 2, 4: 1, 5: 1}
    """
    if n < 1:
        raise ValueError("n must be positive")
    # table[m][j]: partitions of m into exactly j parts
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for j in range(1, m + 1):
            table[m][j] = table[m - 1][j - 1] + table[m - j][j]
    return Histogram({j: table[n][j] for j in range(1, n + 1) if table[n][j]})


def zeros_histogram(words) -> Histogram:
    """How many words contain exactly ``z`` zeros (a ``WordSet`` or strings)."""
    arr = getattr(words, "array", None)
    if arr is not None:
        return Histogram.from_values((arr == 0).sum(axis=1))
    return Histogram.from_values(w.count("0") for w in words)


def degree_histogram(g) -> Histogram:
    return Histogram.from_values(g.degrees)


def degree_samples(g, include_zero_vertex: bool = True) -> np.ndarray:
    """Vertex degrees of ``g`` as floats, optionally dropping the all-zeros word."""
    deg = np.asarray(g.degrees, dtype=float)
    if not include_zero_vertex:
        zero = "0" * (len(g.labels[0]) if g.labels else 0)
        keep = np.array([w != zero for w in g.labels], dtype=bool)
        deg = deg[keep]
    return deg


def lambda_edge_statistic(n: int) -> int:
    """Edge count of ``Pi(1, n)`` predicted from partitions alone.

    Every word other than ``1^(n-1)`` has an edge from flipping its first 0;
    on top of that there is one edge per partition ``l_1 >= l_2 >= ...`` and
    interior index ``i <= j - 2`` with ``l_i >= l_{i+1} + l_{i+2}``.

    >>> lambda_edge_statistic(4), lambda_edge_statistic(5)
    (5, 8)
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    total = -1
    for asc in ascending_partitions(n):
        total += 1
        lam = asc[::-1]
        for i in range(len(lam) - 2):
            if lam[i] >= lam[i + 1] + lam[i + 2]:
                total += 1
    return total


def parity_imbalance(n: int) -> int:
    """|#partitions with an even number of parts - #with an odd number|."""
    h = parts_histogram(n).bins
    even = sum(c for j, c in h.items() if j % 2 == 0)
    return abs(even - (sum(h.values()) - even))


# -- fitting ---------------------------------------------------------------


@dataclass(frozen=True)
class DistributionFit:
    family: str
    mu: float
    sigma: float
    log_likelihood: float
    ks: float
    sample_size: int

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "mu": self.mu,
            "sigma": self.sigma,
            "log_likelihood": self.log_likelihood,
            "ks": self.ks,
            "sample_size": self.sample_size,
        }

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        if self.family == "normal":
            return ndtr((x - self.mu) / self.sigma)
        with np.errstate(divide="ignore"):
            return ndtr((np.log(x) - self.mu) / self.sigma)


def _ks(sorted_x: np.ndarray, cdf) -> float:
    values, counts = np.unique(sorted_x, return_counts=True)
    N = counts.sum()
    after = np.cumsum(counts) / N
    before = after - counts / N
    F = cdf(values)
    return float(max(np.abs(after - F).max(), np.abs(before - F).max()))


def fit(samples, family: str = "lognormal") -> DistributionFit:
    """Maximum-likelihood fit of a lognormal or normal law to ``samples``.

    The variance is the population (1/N) estimate.  ``ks`` is the largest
    gap between the empirical and fitted CDFs, taken on both sides of every
    distinct sample value.

    Raises
    ------
    DegenerateSampleError
        Fewer than two samples, or all samples equal.
    ValueError
        Unknown family, or a nonpositive sample under the lognormal.

    Examples
    --------
    >>> f = fit([1, math.e, math.e ** 2])
    >>> round(f.mu, 12), round(f.sigma ** 2, 12)
    (1.0, 0.666666666667)
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    x = np.sort(np.asarray(samples, dtype=float).ravel())
    N = len(x)
    if N < 2:
        raise DegenerateSampleError(f"need at least 2 samples, got {N}")
    if x[0] == x[-1]:
        raise DegenerateSampleError(f"all {N} samples equal {x[0]:g}")
    if family == "lognormal":
        if x[0] <= 0:
            raise ValueError("lognormal fit needs strictly positive samples")
        y = np.log(x)
    else:
        y = x
    mu = float(y.mean())
    sigma = float(math.sqrt(((y - mu) ** 2).mean()))
    ll = -N * (math.log(sigma) + 0.5 * math.log(2 * math.pi) + 0.5)
    if family == "lognormal":
        ll -= float(y.sum())
    result = DistributionFit(family, mu, sigma, float(ll), 0.0, N)
    ks = _ks(x, result.cdf)
    return DistributionFit(family, mu, sigma, float(ll), ks, N)


def compare(samples) -> list:
    """Fit both families and rank them by log-likelihood (best first).

    Families that cannot be fitted (e.g. the lognormal on data containing
    zero) are left out; if neither fits the error propagates.
    """
    fits, errors = [], []
    for family in FAMILIES:
        try:
            fits.append(fit(samples, family))
        except DegenerateSampleError:
            raise
        except ValueError as exc:
            errors.append(exc)
    if not fits:
        raise errors[0]
    return sorted(fits, key=lambda f: (-f.log_likelihood, f.family))


def report_json(fits) -> str:
    return json.dumps([f.to_dict() for f in fits], indent=2) + "\n"
