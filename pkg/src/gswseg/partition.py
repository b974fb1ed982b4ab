"""Partitions of the site set and the bookkeeping the samplers rely on.

Cluster ids are internal and carry no meaning; every probability in this
package depends on the induced partition only. ``build_partition``
canonicalizes arbitrary label vectors to contiguous ids ordered by first
appearance, so two labelings describe the same partition exactly when
their canonical label vectors are equal.
"""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple


class Partition:
    """Immutable assignment of n sites to k non-empty clusters.

    Attributes
    ----------
    labels : tuple of int
        Canonical per-site cluster ids (0..k-1, ordered by first appearance).
    clusters : dict
        Cluster id -> tuple of member sites (ascending).
    sizes : dict
        Cluster id -> member count.
    """

    __slots__ = ("labels", "clusters", "sizes")

    def __init__(self, labels: Sequence[int], clusters: Dict[int, Tuple[int, ...]],
                 sizes: Dict[int, int]) -> None:
        self.labels = tuple(labels)
        self.clusters = clusters
        self.sizes = sizes

    @property
    def n_sites(self) -> int:
        return len(self.labels)

    @property
    def n_clusters(self) -> int:
        return len(self.sizes)

    def size_vector(self) -> tuple[int, ...]:
        """Cluster sizes in cluster-id order."""
        return tuple(self.sizes[c] for c in sorted(self.sizes))

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Partition(n_sites={self.n_sites}, n_clusters={self.n_clusters})"


def canonical_labels(labels: Sequence[int]) -> tuple[int, ...]:
    """Relabel clusters as 0..k-1 in order of first appearance."""
    remap: dict[int, int] = {}
    out = []
    for z in labels:
        if z not in remap:
            remap[z] = len(remap)
        out.append(remap[z])
    return tuple(out)


def build_partition(labels: Sequence[int], n_sites: int | None = None) -> Partition:
    """Build a Partition from an arbitrary per-site label vector.

    Labels may use any hashable ids; they are canonicalized. When
    ``n_sites`` is given the label vector must have exactly that length.
    """
    if n_sites is not None and len(labels) != n_sites:
        raise ValueError(f"expected {n_sites} labels, got {len(labels)}")
    if len(labels) == 0:
        raise ValueError("cannot partition an empty site set")
    canon = canonical_labels(labels)
    members: dict[int, list[int]] = {}
    for site, z in enumerate(canon):
        members.setdefault(z, []).append(site)
    clusters = {c: tuple(sites) for c, sites in members.items()}
    sizes = {c: len(sites) for c, sites in clusters.items()}
    return Partition(canon, clusters, sizes)


class PartitionView:
    """A partition with a designated block of sites removed.

    Residual sizes exclude the removed block's per-cluster counts; clusters
    emptied by the removal are dropped from the view. The base partition is
    left untouched.
    """

    __slots__ = ("base", "removed", "residual_sizes")

    def __init__(self, base: Partition, removed: frozenset,
                 residual_sizes: Dict[int, int]) -> None:
        self.base = base
        self.removed = removed
        self.residual_sizes = residual_sizes

    @property
    def n_residual_clusters(self) -> int:
        return len(self.residual_sizes)

    def residual_size_vector(self) -> tuple[int, ...]:
        return tuple(self.residual_sizes[c] for c in sorted(self.residual_sizes))


def remove_block(partition: Partition, block: Iterable[int]) -> PartitionView:
    """View of ``partition`` with the sites in ``block`` taken out."""
    removed = frozenset(block)
    if not removed:
        raise ValueError("block must be non-empty")
    per_cluster: dict[int, int] = {}
    for site in removed:
        if not (0 <= site < partition.n_sites):
            raise ValueError(f"site {site} out of range")
        z = partition.labels[site]
        per_cluster[z] = per_cluster.get(z, 0) + 1
    residual = dict(partition.sizes)
    for z, count in per_cluster.items():
        rest = residual[z] - count
        if rest == 0:
            del residual[z]
        else:
            residual[z] = rest
    return PartitionView(partition, removed, residual)


def rand_index(a: Sequence[int], b: Sequence[int]) -> float:
    """Fraction of site pairs on which two labelings agree.

    A pair agrees when both labelings put it in one cluster or both split
    it. Computed from the contingency table of the two labelings, so it is
    exact (integer pair counts) and invariant under relabeling.
    """
    if len(a) != len(b):
        raise ValueError(f"label vectors differ in length: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise ValueError("need at least two sites")
    joint: dict[tuple[int, int], int] = {}
    count_a: dict[int, int] = {}
    count_b: dict[int, int] = {}
    for za, zb in zip(a, b):
        joint[(za, zb)] = joint.get((za, zb), 0) + 1
        count_a[za] = count_a.get(za, 0) + 1
        count_b[zb] = count_b.get(zb, 0) + 1

    def pairs2(counts):
        return sum(c * (c - 1) // 2 for c in counts)

    total = n * (n - 1) // 2
    same_same = pairs2(joint.values())
    same_a = pairs2(count_a.values())
    same_b = pairs2(count_b.values())
    # agreements = pairs together in both + pairs apart in both
    agreements = total + 2 * same_same - same_a - same_b
    return agreements / total
