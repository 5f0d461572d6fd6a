"""Copy search and exact-cover tiling at desk scale.

Everything here is exhaustive and exact: a "none" answer means the search
space was fully explored (or the instance failed the divisibility
precondition, which is reported as a distinguished reason).  Searches are
single-threaded and deterministic: hosts, candidate subsets, and cover
candidates are always iterated in ascending or lexicographic order, so the
first witness found is a stable function of the input.

Pattern structure is analysed once per pattern and cached.  Complete
multipartite patterns are matched by assigning host vertices to parts;
patterns made of t disjoint (k-1)-sets joined to a common core are matched
by core/leaf splits; everything else falls back to a pruned backtracking
embedding search.  For 3-graph patterns that are complete 3-partite with a
singleton part, whole-host copy search decomposes through vertex links:
a copy exists at v exactly when the link 2-graph of v contains a complete
bipartite subgraph of the right part sizes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .budget import charge
from .core import Hypergraph, Partition, VertexSet, vertex_set
from .errors import ValidationError
from .invariants import MAX_PATTERN_VERTICES, realisations


@dataclass(frozen=True)
class Embedding:
    """Injective pattern-to-host vertex map; images[i] hosts pattern vertex i."""

    images: tuple[int, ...]

    @property
    def vertex_set(self) -> VertexSet:
        return tuple(sorted(self.images))


@dataclass(frozen=True)
class TilingCertificate:
    """Vertex-disjoint pattern copies and the vertex set they cover."""

    embeddings: tuple[Embedding, ...]
    covered: VertexSet


REASON_FOUND = "found"
REASON_DIVISIBILITY = "divisibility"
REASON_EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class TilingOutcome:
    """Result of a perfect-tiling search: a certificate or a verified none."""

    certificate: TilingCertificate | None
    reason: str

    @property
    def found(self) -> bool:
        return self.certificate is not None


@dataclass
class CopySetEnumeration:
    """All pattern-spanned vertex sets, with one witness embedding each."""

    sets: tuple[VertexSet, ...]
    truncated: bool
    witnesses: dict[VertexSet, Embedding]


# -- pattern analysis -------------------------------------------------------


@dataclass(frozen=True)
class _Plan:
    kind: str                                   # "partite" | "kst" | "generic"
    parts: tuple[VertexSet, ...] = ()           # partite: parts sorted by size
    core: VertexSet = ()                        # kst: the common core
    groups: tuple[VertexSet, ...] = ()          # kst: the disjoint leaf groups
    order: tuple[int, ...] = ()                 # generic: backtracking order
    degrees: tuple[int, ...] = ()


def _partite_parts(pattern: Hypergraph) -> tuple[VertexSet, ...] | None:
    """Parts of the pattern if it is complete k-partite, else None."""
    if pattern.edge_count == 0 or pattern.n > MAX_PATTERN_VERTICES:
        return None
    for r in realisations(pattern):
        product = math.prod(r.sizes)
        if product == pattern.edge_count:
            # Every edge is a transversal of every realisation, so equal
            # counts force the edge set to be all transversals of r.
            return tuple(sorted(r.parts, key=lambda p: (len(p), p)))
    return None


def _kst_shape(pattern: Hypergraph) -> tuple[VertexSet, tuple[VertexSet, ...]] | None:
    """Core and leaf groups if the pattern is a K_{s,t} shape, else None."""
    k = pattern.k
    if pattern.edge_count == 0:
        return None
    for anchor in range(pattern.n):
        through = [e for e in pattern.edges if anchor in e]
        groups = []
        covered: set[int] = set()
        ok = True
        for e in through:
            g = tuple(v for v in e if v != anchor)
            if covered.intersection(g):
                ok = False
                break
            covered.update(g)
            groups.append(g)
        if not ok or anchor in covered:
            continue
        core = tuple(v for v in range(pattern.n) if v not in covered)
        expected = {tuple(sorted(g + (y,))) for g in groups for y in core}
        if expected == set(pattern.edges):
            return core, tuple(sorted(groups))
    return None


def _generic_order(pattern: Hypergraph) -> tuple[int, ...]:
    """Vertex order that keeps edge checks early: most-constrained first."""
    degrees = [0] * pattern.n
    for e in pattern.edges:
        for v in e:
            degrees[v] += 1
    placed: list[int] = []
    placed_set: set[int] = set()
    while len(placed) < pattern.n:
        def score(v: int) -> tuple[int, int, int]:
            attached = sum(1 for e in pattern.edges
                           if v in e and any(u in placed_set for u in e))
            return (-attached, -degrees[v], v)
        v = min((u for u in range(pattern.n) if u not in placed_set), key=score)
        placed.append(v)
        placed_set.add(v)
    return tuple(placed)


@lru_cache(maxsize=256)
def _plan(pattern: Hypergraph) -> _Plan:
    degrees = [0] * pattern.n
    for e in pattern.edges:
        for v in e:
            degrees[v] += 1
    parts = _partite_parts(pattern)
    if parts is not None:
        return _Plan(kind="partite", parts=parts, degrees=tuple(degrees))
    shape = _kst_shape(pattern)
    if shape is not None:
        core, groups = shape
        return _Plan(kind="kst", core=core, groups=groups, degrees=tuple(degrees))
    return _Plan(kind="generic", order=_generic_order(pattern), degrees=tuple(degrees))


def _check_pair(host: Hypergraph, pattern: Hypergraph) -> None:
    if host.k != pattern.k:
        raise ValidationError(
            f"uniformity mismatch: host is {host.k}-uniform, pattern {pattern.k}-uniform")


# -- whole-host copy search -------------------------------------------------


def contains_copy(host: Hypergraph, pattern: Hypergraph) -> Embedding | None:
    """First copy of the pattern in the host, or None (verified exhaustive).

    Vertices need not be spanned; the copy may use any host vertices.
    """
    _check_pair(host, pattern)
    if pattern.n > host.n:
        return None
    if pattern.edge_count == 0:
        return Embedding(tuple(range(pattern.n)))
    plan = _plan(pattern)
    if (plan.kind == "partite" and host.k == 3 and len(plan.parts) == 3
            and len(plan.parts[0]) == 1):
        return _find_singleton_partite(host, plan.parts)
    return _backtrack_embed(host, pattern, range(host.n))


def _find_singleton_partite(host: Hypergraph,
                            parts: tuple[VertexSet, ...]) -> Embedding | None:
    """Link decomposition for complete 3-partite patterns with a singleton part.

    For each host vertex v, search the link 2-graph of v for a complete
    bipartite subgraph with the two remaining part sizes.
    """
    a, b = len(parts[1]), len(parts[2])
    incident: list[list[tuple[int, int, int]]] = [[] for _ in range(host.n)]
    for e in host.edges:
        for v in e:
            incident[v].append(e)
    for v in range(host.n):
        if len(incident[v]) < a * b:
            continue
        adj = [0] * host.n
        for e in incident[v]:
            x, y = (u for u in e if u != v)
            adj[x] |= 1 << y
            adj[y] |= 1 << x
        left_candidates = [u for u in range(host.n) if adj[u].bit_count() >= b]
        for left in itertools.combinations(left_candidates, a):
            common = ~0
            for u in left:
                common &= adj[u]
            for u in left:
                common &= ~(1 << u)
            if common.bit_count() >= b:
                right: list[int] = []
                rest = common
                while len(right) < b:
                    low = rest & -rest
                    right.append(low.bit_length() - 1)
                    rest ^= low
                images = [0] * (1 + a + b)
                images[parts[0][0]] = v
                for fv, hv in zip(parts[1], left):
                    images[fv] = hv
                for fv, hv in zip(parts[2], right):
                    images[fv] = hv
                return Embedding(tuple(images))
    return None


def _backtrack_embed(host: Hypergraph, pattern: Hypergraph,
                     hosts: Sequence[int]) -> Embedding | None:
    """Pruned injective embedding search over the given host vertices."""
    plan = _plan(pattern)
    order = plan.order if plan.order else _generic_order(pattern)
    host_degrees = [0] * host.n
    for e in host.edges:
        for v in e:
            host_degrees[v] += 1
    # Edges become checkable once their last vertex (in search order) lands.
    position = {v: i for i, v in enumerate(order)}
    checks: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in pattern.edges:
        checks[max(position[v] for v in e)].append(e)
    edge_set = host.edge_set()
    images = [-1] * pattern.n
    used: set[int] = set()

    def place(pos: int) -> bool:
        if pos == len(order):
            return True
        fv = order[pos]
        for hv in hosts:
            if hv in used or plan.degrees[fv] > host_degrees[hv]:
                continue
            images[fv] = hv
            if all(tuple(sorted(images[u] for u in e)) in edge_set
                   for e in checks[pos]):
                used.add(hv)
                if place(pos + 1):
                    return True
                used.discard(hv)
            images[fv] = -1
        return False

    if place(0):
        return Embedding(tuple(images))
    return None


# -- spanning copies and copy-set enumeration --------------------------------


def _partitions_with_sizes(elems: VertexSet,
                           sizes: tuple[int, ...]) -> Iterator[tuple[VertexSet, ...]]:
    """Partitions of elems into parts of the given sizes, each exactly once.

    Parts of equal size are deduplicated by forcing their minima to appear
    in part order.
    """
    parts: list[list[int]] = [[] for _ in sizes]

    def extend(i: int) -> Iterator[tuple[VertexSet, ...]]:
        if i == len(elems):
            yield tuple(tuple(p) for p in parts)
            return
        v = elems[i]
        opened: set[int] = set()
        for j, p in enumerate(parts):
            if len(p) >= sizes[j]:
                continue
            if not p:
                if sizes[j] in opened:
                    continue
                opened.add(sizes[j])
            p.append(v)
            yield from extend(i + 1)
            p.pop()

    yield from extend(0)


def _spans(host: Hypergraph, pattern: Hypergraph, subset: VertexSet) -> Embedding | None:
    """Witness embedding of the pattern onto exactly the given vertex set."""
    plan = _plan(pattern)
    edge_set = host.edge_set()
    if plan.kind == "partite":
        sizes = tuple(len(p) for p in plan.parts)
        for assignment in _partitions_with_sizes(subset, sizes):
            if all(tuple(sorted(combo)) in edge_set
                   for combo in itertools.product(*assignment)):
                images = [-1] * pattern.n
                for fpart, hpart in zip(plan.parts, assignment):
                    for fv, hv in zip(fpart, hpart):
                        images[fv] = hv
                return Embedding(tuple(images))
        return None
    if plan.kind == "kst":
        return _spans_kst(host, pattern, subset, plan)
    return _backtrack_embed(host, pattern, subset)


def _spans_kst(host: Hypergraph, pattern: Hypergraph, subset: VertexSet,
               plan: _Plan) -> Embedding | None:
    k = pattern.k
    s = len(plan.core)
    edge_set = host.edge_set()
    for core_img in itertools.combinations(subset, s):
        core_set = set(core_img)
        rest = tuple(v for v in subset if v not in core_set)
        candidates = [g for g in itertools.combinations(rest, k - 1)
                      if all(tuple(sorted(g + (y,))) in edge_set for y in core_img)]
        chosen: list[tuple[int, ...]] = []

        def cover(remaining: tuple[int, ...]) -> bool:
            if not remaining:
                return True
            head = remaining[0]
            rem_set = set(remaining)
            for g in candidates:
                if head in g and rem_set.issuperset(g):
                    chosen.append(g)
                    if cover(tuple(v for v in remaining if v not in g)):
                        return True
                    chosen.pop()
            return False

        if cover(rest):
            images = [-1] * pattern.n
            for fv, hv in zip(plan.core, core_img):
                images[fv] = hv
            for fgroup, hgroup in zip(plan.groups, chosen):
                for fv, hv in zip(fgroup, hgroup):
                    images[fv] = hv
            return Embedding(tuple(images))
    return None


def enumerate_copy_sets(host: Hypergraph, pattern: Hypergraph,
                        limit: int | None = None,
                        budget: int | None = None) -> CopySetEnumeration:
    """All vertex sets spanned by a pattern copy, in lexicographic order.

    `limit` caps the number of collected sets; hitting it is reported via
    the truncated flag.  The total subset count is charged to the budget.
    """
    _check_pair(host, pattern)
    if pattern.n == 0:
        raise ValidationError("pattern has no vertices")
    if limit is not None and limit < 1:
        raise ValidationError(f"limit must be positive, got {limit}")
    if pattern.n > host.n:
        return CopySetEnumeration((), False, {})
    charge(math.comb(host.n, pattern.n), budget, "copy-set enumeration")
    sets: list[VertexSet] = []
    witnesses: dict[VertexSet, Embedding] = {}
    truncated = False
    for subset in itertools.combinations(range(host.n), pattern.n):
        witness = _spans(host, pattern, subset)
        if witness is None:
            continue
        if limit is not None and len(sets) == limit:
            truncated = True
            break
        sets.append(subset)
        witnesses[subset] = witness
    return CopySetEnumeration(tuple(sets), truncated, witnesses)


# -- exact cover -------------------------------------------------------------


def _exact_cover_first(n: int, masks: Sequence[int],
                       by_vertex: Sequence[Sequence[int]]) -> list[int] | None:
    """First exact cover under the fail-first column rule.

    Branch vertex: fewest remaining candidate sets, ties to the smallest
    vertex id; candidates tried in lexicographic (input) order.
    """
    chosen: list[int] = []

    def cover(uncovered: int) -> bool:
        if uncovered == 0:
            return True
        best: list[int] | None = None
        scan = uncovered
        while scan:
            v = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            alive = [ci for ci in by_vertex[v] if masks[ci] & ~uncovered == 0]
            if not alive:
                return False
            if best is None or len(alive) < len(best):
                best = alive
        assert best is not None
        for ci in best:
            chosen.append(ci)
            if cover(uncovered & ~masks[ci]):
                return True
            chosen.pop()
        return False

    if cover((1 << n) - 1 if n else 0):
        return chosen
    return None


def _candidate_tables(n: int, sets: Sequence[VertexSet]) -> tuple[list[int], list[list[int]]]:
    masks = [sum(1 << v for v in s) for s in sets]
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for ci, s in enumerate(sets):
        for v in s:
            by_vertex[v].append(ci)
    return masks, by_vertex


def has_perfect_tiling(host: Hypergraph, pattern: Hypergraph,
                       budget: int | None = None) -> TilingOutcome:
    """Perfect-tiling search: certificate, or a verified-exhaustive none.

    A host order not divisible by the pattern order is reported as none
    with the distinguished divisibility reason, without any search.
    """
    _check_pair(host, pattern)
    if pattern.n == 0:
        raise ValidationError("pattern has no vertices")
    if host.n % pattern.n != 0:
        return TilingOutcome(None, REASON_DIVISIBILITY)
    if host.n == 0:
        return TilingOutcome(TilingCertificate((), ()), REASON_FOUND)
    enum = enumerate_copy_sets(host, pattern, budget=budget)
    masks, by_vertex = _candidate_tables(host.n, enum.sets)
    solution = _exact_cover_first(host.n, masks, by_vertex)
    if solution is None:
        return TilingOutcome(None, REASON_EXHAUSTED)
    embeddings = tuple(enum.witnesses[enum.sets[ci]] for ci in solution)
    return TilingOutcome(TilingCertificate(embeddings, tuple(range(host.n))), REASON_FOUND)


def max_tiling(host: Hypergraph, pattern: Hypergraph,
               budget: int | None = None) -> tuple[int, TilingCertificate]:
    """Largest vertex-disjoint family of pattern copies, by branch and bound.

    Branches on the smallest undecided vertex (cover it with each candidate
    in lexicographic order, then leave it uncovered); prunes when even
    covering every remaining vertex cannot beat the incumbent.
    """
    _check_pair(host, pattern)
    if pattern.n == 0:
        raise ValidationError("pattern has no vertices")
    enum = enumerate_copy_sets(host, pattern, budget=budget)
    masks, by_vertex = _candidate_tables(host.n, enum.sets)
    t = pattern.n
    best: list[int] = []
    current: list[int] = []

    def search(available: int) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        if available == 0:
            return
        if len(current) + available.bit_count() // t <= len(best):
            return
        v = (available & -available).bit_length() - 1
        for ci in by_vertex[v]:
            if masks[ci] & ~available == 0:
                current.append(ci)
                search(available & ~masks[ci])
                current.pop()
        search(available & ~(1 << v))

    search((1 << host.n) - 1 if host.n else 0)
    embeddings = tuple(enum.witnesses[enum.sets[ci]] for ci in best)
    covered = vertex_set(v for ci in best for v in enum.sets[ci])
    return len(best), TilingCertificate(embeddings, covered)


def copies_of_type(host: Hypergraph, pattern: Hypergraph, partition: Partition,
                   type_vector: Sequence[int], limit: int | None = None,
                   budget: int | None = None) -> list[VertexSet]:
    """Copy sets whose intersection profile with the partition equals the type."""
    tv = tuple(type_vector)
    if partition.n != host.n:
        raise ValidationError(
            f"partition covers {partition.n} vertices, host has {host.n}")
    if len(tv) != len(partition.parts):
        raise ValidationError(
            f"type vector has {len(tv)} coordinates, partition has {len(partition.parts)} parts")
    if any(c < 0 for c in tv):
        raise ValidationError(f"type vector has a negative coordinate: {tv}")
    if sum(tv) != pattern.n:
        raise ValidationError(
            f"type vector sums to {sum(tv)}, pattern has {pattern.n} vertices")
    if limit is not None and limit < 1:
        raise ValidationError(f"limit must be positive, got {limit}")
    enum = enumerate_copy_sets(host, pattern, budget=budget)
    out: list[VertexSet] = []
    for s in enum.sets:
        if partition.index_vector(s) == tv:
            out.append(s)
            if limit is not None and len(out) == limit:
                break
    return out


def verify_certificate(host: Hypergraph, pattern: Hypergraph,
                       certificate: TilingCertificate,
                       require_perfect: bool = False) -> bool:
    """Check a certificate against the host: valid embeddings, pairwise
    disjoint, covered set consistent, and (when asked) covering V(host)."""
    try:
        _check_pair(host, pattern)
    except ValidationError:
        return False
    edge_set = host.edge_set()
    seen: set[int] = set()
    for emb in certificate.embeddings:
        if len(emb.images) != pattern.n:
            return False
        if len(set(emb.images)) != pattern.n:
            return False
        if any(v < 0 or v >= host.n for v in emb.images):
            return False
        if any(tuple(sorted(emb.images[u] for u in e)) not in edge_set
               for e in pattern.edges):
            return False
        if seen.intersection(emb.images):
            return False
        seen.update(emb.images)
    if tuple(sorted(seen)) != certificate.covered:
        return False
    if require_perfect and certificate.covered != tuple(range(host.n)):
        return False
    return True
