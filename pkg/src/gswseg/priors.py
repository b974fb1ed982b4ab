"""Partition priors: exchangeable cluster-size weights and Potts smoothness.

Each prior assigns an unnormalized weight g(m_1, ..., m_k) to a partition
through its cluster sizes alone (so g is symmetric in its arguments), and
the full partition prior multiplies that weight by a Potts smoothness term
exp(sum of beta_ij over same-cluster neighbour pairs). Everything here is
computed in log space; a weight of 0 (a partition outside the prior's
support) is represented as -inf.

Available size priors:

* ``MaxK(k_max)`` -- weight K!/(K-k)! for at most K clusters; counts the
  labelings inducing the partition, favouring many clusters.
* ``FiniteDirichlet(k_max, alpha)`` -- K!/(K-k)! * prod_j Gamma(alpha+m_j),
  the partition law of a symmetric finite Dirichlet mixture.
* ``DirichletProcess(alpha)`` -- alpha^k * prod_j Gamma(m_j).
* ``PoissonDirichlet(alpha, theta)`` -- two-parameter generalization
  [theta+alpha; step theta]^(k-1) * prod_j [1-theta; step 1]^(m_j-1) with
  rising factorials [x; step b]^a = x (x+b) ... (x+(a-1)b). theta = 0
  recovers the Dirichlet process up to a constant factor.
* ``TruncatedDP(alpha, min_size)`` -- Dirichlet process restricted to
  partitions whose every cluster has at least ``min_size`` members.

``log_epf_move_ratio`` evaluates the weight change of moving a block of
sites into an existing cluster or a fresh one without materializing full
Gamma products; it is the quantity the samplers need per candidate.
"""

from __future__ import annotations

import math
from math import lgamma, log
from typing import Sequence

from .errors import ConfigurationError

NEG_INF = float("-inf")


class PartitionPrior:
    """Base class for exchangeable cluster-size priors."""

    def log_epf(self, sizes: Sequence[int]) -> float:
        """Log unnormalized weight of a partition with the given cluster sizes."""
        raise NotImplementedError

    def log_move_ratio(self, residual_sizes: Sequence[int],
                       target: int | None, block_size: int) -> float:
        """Log weight ratio of moving a block of ``block_size`` sites.

        ``residual_sizes`` are the cluster sizes with the block removed.
        ``target`` is an index into ``residual_sizes`` (join that cluster)
        or None (open a new cluster). Returns -inf when the move lands
        outside the prior's support. With an empty residual (the block was
        the whole site set) only ``target=None`` is legal and the ratio is
        defined as the log weight of the single-block partition itself.
        """
        raise NotImplementedError

    def default_init(self) -> str:
        """Feasible default starting partition for samplers."""
        return "singletons"

    def _check_target(self, residual_sizes: Sequence[int], target: int | None,
                      block_size: int) -> None:
        if block_size < 1:
            raise ValueError(f"block size must be >= 1, got {block_size}")
        if target is not None and not (0 <= target < len(residual_sizes)):
            raise IndexError(
                f"target {target} out of range for {len(residual_sizes)} residual clusters")


class MaxK(PartitionPrior):
    """At most ``k_max`` clusters, weight K!/(K-k)! independent of sizes."""

    def __init__(self, k_max: int) -> None:
        if k_max < 1:
            raise ConfigurationError(f"k_max must be >= 1, got {k_max}")
        self.k_max = int(k_max)

    def log_epf(self, sizes: Sequence[int]) -> float:
        k = len(sizes)
        if not 1 <= k <= self.k_max:
            return NEG_INF
        return lgamma(self.k_max + 1) - lgamma(self.k_max - k + 1)

    def log_move_ratio(self, residual_sizes, target, block_size):
        self._check_target(residual_sizes, target, block_size)
        k = len(residual_sizes)
        if k == 0:
            return self.log_epf([block_size])
        if k > self.k_max:
            return NEG_INF
        if target is not None:
            return 0.0
        if k >= self.k_max:
            return NEG_INF
        return log(self.k_max - k)

    def __repr__(self):
        return f"MaxK(k_max={self.k_max})"


class FiniteDirichlet(PartitionPrior):
    """Symmetric finite Dirichlet mixture partition law, at most ``k_max`` clusters."""

    def __init__(self, k_max: int, alpha: float) -> None:
        if k_max < 1:
            raise ConfigurationError(f"k_max must be >= 1, got {k_max}")
        if not alpha > 0:
            raise ConfigurationError(f"alpha must be > 0, got {alpha}")
        self.k_max = int(k_max)
        self.alpha = float(alpha)

    def log_epf(self, sizes: Sequence[int]) -> float:
        k = len(sizes)
        if not 1 <= k <= self.k_max:
            return NEG_INF
        a = self.alpha
        total = lgamma(self.k_max + 1) - lgamma(self.k_max - k + 1)
        for m in sizes:
            total += lgamma(a + m)
        return total

    def log_move_ratio(self, residual_sizes, target, block_size):
        self._check_target(residual_sizes, target, block_size)
        k = len(residual_sizes)
        if k == 0:
            return self.log_epf([block_size])
        if k > self.k_max:
            return NEG_INF
        a = self.alpha
        if target is not None:
            m = residual_sizes[target]
            return lgamma(a + m + block_size) - lgamma(a + m)
        if k >= self.k_max:
            return NEG_INF
        return log(self.k_max - k) + lgamma(a + block_size) - lgamma(a)

    def __repr__(self):
        return f"FiniteDirichlet(k_max={self.k_max}, alpha={self.alpha})"


class DirichletProcess(PartitionPrior):
    """Dirichlet process partition law: weight alpha^k * prod_j Gamma(m_j)."""

    def __init__(self, alpha: float) -> None:
        if not alpha > 0:
            raise ConfigurationError(f"alpha must be > 0, got {alpha}")
        self.alpha = float(alpha)

    def log_epf(self, sizes: Sequence[int]) -> float:
        if not sizes:
            raise ValueError("empty size vector")
        total = len(sizes) * log(self.alpha)
        for m in sizes:
            total += lgamma(m)
        return total

    def log_move_ratio(self, residual_sizes, target, block_size):
        self._check_target(residual_sizes, target, block_size)
        if len(residual_sizes) == 0:
            return self.log_epf([block_size])
        if target is not None:
            m = residual_sizes[target]
            return lgamma(m + block_size) - lgamma(m)
        return log(self.alpha) + lgamma(block_size)

    def __repr__(self):
        return f"DirichletProcess(alpha={self.alpha})"


class PoissonDirichlet(PartitionPrior):
    """Two-parameter Poisson-Dirichlet partition law.

    Valid parameter ranges: alpha > -theta with 0 <= theta < 1, or
    theta < 0 with alpha = -L*theta for an integer L >= 1 (in which case
    at most L clusters carry positive weight). theta = 0 recovers the
    Dirichlet process law up to a factor constant in the partition.
    """

    def __init__(self, alpha: float, theta: float) -> None:
        alpha = float(alpha)
        theta = float(theta)
        if 0.0 <= theta < 1.0:
            if not alpha > -theta:
                raise ConfigurationError(
                    f"need alpha > -theta, got alpha={alpha}, theta={theta}")
            self._max_clusters = None
        elif theta < 0.0:
            ratio = -alpha / theta
            L = round(ratio)
            if L < 1 or abs(ratio - L) > 1e-9 * max(1.0, abs(ratio)):
                raise ConfigurationError(
                    f"theta < 0 requires alpha = -L*theta for integer L >= 1; "
                    f"got alpha={alpha}, theta={theta}")
            self._max_clusters = L
        else:
            raise ConfigurationError(f"theta must be < 1, got {theta}")
        self.alpha = alpha
        self.theta = theta

    def _log_new_cluster_step(self, k_residual: int) -> float:
        # factor alpha + k*theta picked up when the cluster count grows by one
        if self._max_clusters is not None:
            remaining = self._max_clusters - k_residual
            if remaining <= 0:
                return NEG_INF
            return log(-self.theta) + log(remaining)
        value = self.alpha + k_residual * self.theta
        return log(value) if value > 0 else NEG_INF

    def log_epf(self, sizes: Sequence[int]) -> float:
        if not sizes:
            raise ValueError("empty size vector")
        k = len(sizes)
        if self._max_clusters is not None and k > self._max_clusters:
            return NEG_INF
        theta = self.theta
        total = 0.0
        for i in range(1, k):
            total += self._log_new_cluster_step(i)
        lg1_theta = lgamma(1.0 - theta)
        for m in sizes:
            total += lgamma(m - theta) - lg1_theta
        return total

    def log_move_ratio(self, residual_sizes, target, block_size):
        self._check_target(residual_sizes, target, block_size)
        k = len(residual_sizes)
        if k == 0:
            return self.log_epf([block_size])
        theta = self.theta
        if self._max_clusters is not None and k > self._max_clusters:
            return NEG_INF
        if target is not None:
            m = residual_sizes[target]
            return lgamma(m + block_size - theta) - lgamma(m - theta)
        step = self._log_new_cluster_step(k)
        if step == NEG_INF:
            return NEG_INF
        return step + lgamma(block_size - theta) - lgamma(1.0 - theta)

    def __repr__(self):
        return f"PoissonDirichlet(alpha={self.alpha}, theta={self.theta})"


class TruncatedDP(PartitionPrior):
    """Dirichlet process restricted to clusters of at least ``min_size`` members.

    ``min_size`` of 0 or 1 leaves the support unrestricted.
    """

    def __init__(self, alpha: float, min_size: int) -> None:
        if not alpha > 0:
            raise ConfigurationError(f"alpha must be > 0, got {alpha}")
        if min_size < 0:
            raise ConfigurationError(f"min_size must be >= 0, got {min_size}")
        self.alpha = float(alpha)
        self.min_size = int(min_size)

    def log_epf(self, sizes: Sequence[int]) -> float:
        if not sizes:
            raise ValueError("empty size vector")
        total = len(sizes) * log(self.alpha)
        for m in sizes:
            if m < self.min_size:
                return NEG_INF
            total += lgamma(m)
        return total

    def log_move_ratio(self, residual_sizes, target, block_size):
        self._check_target(residual_sizes, target, block_size)
        if len(residual_sizes) == 0:
            return self.log_epf([block_size])
        t = self.min_size
        if t > 1:
            # the move must leave every cluster of the resulting partition
            # at or above the threshold, including untouched residuals
            for idx, m in enumerate(residual_sizes):
                if m < t and idx != target:
                    return NEG_INF
        if target is not None:
            m = residual_sizes[target]
            if m + block_size < t:
                return NEG_INF
            return lgamma(m + block_size) - lgamma(m)
        if block_size < t:
            return NEG_INF
        return log(self.alpha) + lgamma(block_size)

    def default_init(self) -> str:
        return "single-cluster" if self.min_size > 1 else "singletons"

    def __repr__(self):
        return f"TruncatedDP(alpha={self.alpha}, min_size={self.min_size})"


def log_epf(prior: PartitionPrior, sizes: Sequence[int]) -> float:
    """Log unnormalized exchangeable weight of a cluster-size vector."""
    return prior.log_epf(sizes)


def log_epf_move_ratio(prior: PartitionPrior, residual_sizes: Sequence[int],
                       target: int | None, block_size: int) -> float:
    """Log weight change of inserting a block into the residual partition."""
    return prior.log_move_ratio(residual_sizes, target, block_size)


def log_potts(graph, partition) -> float:
    """Potts smoothness exponent: sum of couplings over same-cluster edges."""
    labels = getattr(partition, "labels", partition)
    if len(labels) != graph.n_sites:
        raise ValueError(
            f"partition covers {len(labels)} sites, graph has {graph.n_sites}")
    total = 0.0
    for i, j, beta in graph.edges:
        if labels[i] == labels[j]:
            total += beta
    return total


def log_prior_unnorm(prior: PartitionPrior, graph, partition) -> float:
    """Log of the combined smoothness x size-prior partition weight."""
    sizes = [partition.sizes[c] for c in partition.sizes]
    le = prior.log_epf(sizes)
    if le == NEG_INF:
        return NEG_INF
    return le + log_potts(graph, partition.labels)


_PRIOR_NAMES = ("maxk", "finite-dirichlet", "dp", "poisson-dirichlet", "truncated-dp")


def make_prior(name: str, *, alpha: float = 3.0, theta: float = 0.0,
               k_max: int | None = None, min_size: int = 0) -> PartitionPrior:
    """Build a prior from a short name plus hyperparameters (CLI/estimator glue)."""
    name = name.lower()
    if name == "maxk":
        if k_max is None:
            raise ConfigurationError("maxk prior requires k_max")
        return MaxK(k_max)
    if name == "finite-dirichlet":
        if k_max is None:
            raise ConfigurationError("finite-dirichlet prior requires k_max")
        return FiniteDirichlet(k_max, alpha)
    if name == "dp":
        return DirichletProcess(alpha)
    if name == "poisson-dirichlet":
        return PoissonDirichlet(alpha, theta)
    if name == "truncated-dp":
        return TruncatedDP(alpha, min_size)
    raise ConfigurationError(f"unknown prior {name!r}; expected one of {_PRIOR_NAMES}")
