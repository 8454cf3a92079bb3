"""Incidence structures and the design verification battery.

verify_2design certifies the 2-design property by direct counting: uniform
block size, uniform replication, and constant pair multiplicity over all
C(v,2) point pairs.  The remaining checks test a supplied permutation group
against a structure: block-multiset preservation, transitivity on flags, and
primitivity on points.  Nothing here searches for groups; it only verifies.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .design import Parameters
from .perm import PermutationGroup, canonical_json


class DesignError(ValueError):
    """A uniformity check failed; .kind names it and .witness locates it."""

    def __init__(self, kind: str, witness, message: str):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


@dataclass(frozen=True)
class IncidenceStructure:
    """Point set {0..v-1} plus a multiset of blocks (sorted point tuples).

    Repeated blocks are kept and counted with multiplicity.  The block list
    is stored lexicographically sorted, which is the canonical file order.
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]
    name: str | None = None

    @classmethod
    def from_blocks(cls, v: int, blocks, name: str | None = None) -> "IncidenceStructure":
        normalized = []
        for block in blocks:
            pts = tuple(sorted(block))
            if len(set(pts)) != len(pts):
                raise ValueError(f"block {block} repeats a point")
            if len(pts) < 2:
                raise ValueError(f"block {block} has fewer than 2 points")
            if pts and (pts[0] < 0 or pts[-1] >= v):
                raise ValueError(f"block {block} not a subset of 0..{v - 1}")
            normalized.append(pts)
        return cls(v, tuple(sorted(normalized)), name)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_multiset(self) -> Counter:
        return Counter(self.blocks)

    def flag_count(self) -> int:
        return sum(len(block) for block in self.blocks)


@dataclass(frozen=True)
class DesignCertificate:
    """Outcome of verify_2design: the exact parameters plus the number of
    point pairs whose multiplicity was checked."""

    params: Parameters
    pairs_checked: int


def verify_2design(structure: IncidenceStructure) -> DesignCertificate:
    """Certify uniform k, uniform r, and constant pair multiplicity.

    Raises DesignError naming the first violated uniformity, with a witness
    block index, point, or point pair.
    """
    v, blocks = structure.v, structure.blocks
    if v < 3:
        raise ValueError(f"need at least 3 points, got {v}")
    if not blocks:
        raise ValueError("need at least one block")

    k = len(blocks[0])
    for i, block in enumerate(blocks):
        if len(block) != k:
            raise DesignError(
                "non-uniform k", i,
                f"block {i} has size {len(block)}, expected {k}")

    replication = [0] * v
    for block in blocks:
        for point in block:
            replication[point] += 1
    r = replication[0]
    for point, count in enumerate(replication):
        if count != r:
            raise DesignError(
                "non-uniform r", point,
                f"point {point} lies in {count} blocks, point 0 in {r}")

    pair_counts: Counter = Counter()
    for block in blocks:
        for pair in combinations(block, 2):
            pair_counts[pair] += 1
    all_pairs = list(combinations(range(v), 2))
    lam = pair_counts[all_pairs[0]]
    for pair in all_pairs:
        if pair_counts[pair] != lam:
            raise DesignError(
                "non-constant lambda", pair,
                f"pair {pair} lies in {pair_counts[pair]} blocks, "
                f"pair {all_pairs[0]} in {lam}")
    params = Parameters(v, len(blocks), r, k, lam)
    assert r * (k - 1) == lam * (v - 1) and v * r == len(blocks) * k
    return DesignCertificate(params, len(all_pairs))


def is_automorphism_group(group: PermutationGroup,
                          structure: IncidenceStructure) -> bool:
    """Whether every generator maps the block multiset to itself."""
    if group.degree != structure.v:
        raise ValueError(
            f"group degree {group.degree} != point count {structure.v}")
    reference = structure.block_multiset()
    for g in group.generators:
        imaged = Counter(tuple(sorted(g(p) for p in block))
                         for block in structure.blocks)
        if imaged != reference:
            return False
    return True


def is_flag_transitive(group: PermutationGroup,
                       structure: IncidenceStructure) -> bool:
    """Whether the group has a single orbit on flags (incident point-block
    pairs).

    Flags are taken over distinct blocks; repeated blocks are a single flag
    class per point since automorphisms cannot tell copies apart.
    """
    if not is_automorphism_group(group, structure):
        raise ValueError("group does not act on the structure")
    distinct = sorted(structure.block_multiset())
    index = {block: i for i, block in enumerate(distinct)}
    flags = [(p, bi) for bi, block in enumerate(distinct) for p in block]
    if not flags:
        return False
    gen_block_maps = []
    for g in group.generators:
        gen_block_maps.append(
            [index[tuple(sorted(g(p) for p in block))] for block in distinct])
    seen = {flags[0]}
    frontier = [flags[0]]
    while frontier:
        new = []
        for point, bi in frontier:
            for g, bmap in zip(group.generators, gen_block_maps):
                flag = (g(point), bmap[bi])
                if flag not in seen:
                    seen.add(flag)
                    new.append(flag)
        frontier = new
    return len(seen) == len(flags)


def is_point_primitive(group: PermutationGroup,
                       structure: IncidenceStructure) -> bool:
    """Whether the point action preserves no nontrivial partition."""
    if group.degree != structure.v:
        raise ValueError(
            f"group degree {group.degree} != point count {structure.v}")
    return group.primitivity()[0]


def structure_to_json(structure: IncidenceStructure,
                      name: str | None = None) -> str:
    return canonical_json({
        "name": name or structure.name or "design",
        "v": structure.v,
        "blocks": [list(block) for block in structure.blocks],
    })


def structure_from_json(text: str) -> IncidenceStructure:
    doc = json.loads(text)
    return IncidenceStructure.from_blocks(doc["v"], doc["blocks"],
                                          name=doc.get("name"))


def load_structure(path) -> IncidenceStructure:
    with open(path, encoding="utf-8") as fh:
        return structure_from_json(fh.read())
