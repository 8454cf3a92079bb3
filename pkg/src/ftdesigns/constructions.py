"""Builders for concrete designs: the Fano complement, projective line
spaces over GF(3), point-deleted line designs, block orbits under a group,
and the bundled catalog of verified flag-transitive examples.

Catalog entries live as data files (group generators, a base block or an
explicit block list, and the expected parameters).  Nothing is trusted:
loading a catalog entry rebuilds the design and the caller is expected to
re-certify it, so a corrupted data file fails loudly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .design import Parameters
from .incidence import IncidenceStructure, verify_2design
from .perm import PermutationGroup, load_group


@dataclass(frozen=True)
class LinearSpace:
    """A certified 2-(v, k, 1) design: every point pair on exactly one line."""

    structure: IncidenceStructure
    params: Parameters

    @classmethod
    def certify(cls, structure: IncidenceStructure) -> "LinearSpace":
        cert = verify_2design(structure)
        if cert.params.lam != 1:
            raise ValueError(
                f"not a linear space: pair multiplicity {cert.params.lam}")
        return cls(structure, cert.params)


# Points are the nonzero vectors of GF(2)^3 in lexicographic order, so point
# i stands for the binary vector of i + 1 and a triple is a line exactly when
# the vectors sum to zero.  This matches the bundled PSL(2,7) generators.
_FANO_LINES = tuple(sorted(
    (a, b, c)
    for a in range(7) for b in range(a + 1, 7) for c in range(b + 1, 7)
    if (a + 1) ^ (b + 1) == c + 1))


def fano_plane() -> LinearSpace:
    """The 2-(7,3,1) design on the projective plane over GF(2)."""
    return LinearSpace.certify(
        IncidenceStructure.from_blocks(7, _FANO_LINES, name="fano_plane"))


def fano_complement() -> IncidenceStructure:
    """7 blocks, each the 4-point complement of a Fano line: a 2-(7,4,2)."""
    blocks = [sorted(set(range(7)) - set(line)) for line in _FANO_LINES]
    return IncidenceStructure.from_blocks(7, blocks, name="fano_complement")


def _pg_points(n: int) -> list[tuple[int, ...]]:
    """Projective points of PG(n-1, 3): vectors over GF(3) normalized so the
    first nonzero coordinate is 1, in lexicographic order."""
    points = []
    for code in range(3**n):
        vec = []
        x = code
        for _ in range(n):
            vec.append(x % 3)
            x //= 3
        vec.reverse()
        leading = next((c for c in vec if c != 0), 0)
        if leading == 1:
            points.append(tuple(vec))
    return sorted(points)


def pg_line_space(n: int, field_size: int = 3) -> LinearSpace:
    """Points and lines of PG(n-1, 3) as a 2-((3^n - 1)/2, 4, 1) design."""
    if field_size != 3:
        raise ValueError("only the field with 3 elements is supported")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    points = _pg_points(n)
    index = {pt: i for i, pt in enumerate(points)}

    def normalize(vec: tuple[int, ...]) -> tuple[int, ...]:
        leading = next(c for c in vec if c != 0)
        if leading == 2:
            vec = tuple((2 * c) % 3 for c in vec)
        return vec

    lines = set()
    for i, u in enumerate(points):
        for w in points[i + 1:]:
            su = tuple((a + b) % 3 for a, b in zip(u, w))
            s2 = tuple((a + 2 * b) % 3 for a, b in zip(u, w))
            line = frozenset((index[u], index[w],
                              index[normalize(su)], index[normalize(s2)]))
            lines.add(line)
    structure = IncidenceStructure.from_blocks(
        len(points), [sorted(line) for line in sorted(lines, key=sorted)],
        name=f"pg_{n - 1}_3_lines")
    return LinearSpace.certify(structure)


def derived_design(space: LinearSpace) -> IncidenceStructure:
    """Blocks are the lines with one point removed: a 2-(v, k-1, k-2) design
    with (number of lines) * k blocks."""
    if space.params.k < 3:
        raise ValueError("line size must be at least 3")
    blocks = []
    for line in space.structure.blocks:
        for point in line:
            blocks.append(tuple(p for p in line if p != point))
    name = space.structure.name
    return IncidenceStructure.from_blocks(
        space.structure.v, blocks,
        name=f"derived_{name}" if name else "derived")


def orbit_design(group: PermutationGroup, base_block) -> IncidenceStructure:
    """The orbit of a base block under the group, as a simple block set."""
    block = frozenset(base_block)
    if not 2 <= len(block) < group.degree:
        raise ValueError(
            f"base block size {len(block)} must be in 2..{group.degree - 1}")
    if any(not 0 <= p < group.degree for p in block):
        raise ValueError("base block is not a subset of the point set")
    seen = {block}
    frontier = [block]
    while frontier:
        new = []
        for blk in frontier:
            for g in group.generators:
                image = frozenset(g(p) for p in blk)
                if image not in seen:
                    seen.add(image)
                    new.append(image)
        frontier = new
    return IncidenceStructure.from_blocks(
        group.degree, [sorted(blk) for blk in seen])


# -- bundled catalog ---------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: PermutationGroup
    design: IncidenceStructure
    expected: Parameters
    socle: str
    automorphism_group: str


def data_dir() -> Path:
    override = os.environ.get("FTDESIGNS_DATA")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def catalog_names() -> list[str]:
    root = data_dir() / "catalog"
    if not root.is_dir():
        return []
    return sorted(p.name for p in root.iterdir() if p.is_dir())


def catalog(name: str) -> CatalogEntry:
    """Load a bundled example: its group, its design, and the expected
    parameter row.  The design is rebuilt from the base block when one is
    bundled, otherwise read directly from the block list."""
    entry_dir = data_dir() / "catalog" / name
    if not entry_dir.is_dir():
        known = ", ".join(catalog_names()) or "none found"
        raise KeyError(f"unknown catalog entry {name!r} (available: {known})")
    group = load_group(entry_dir / "group.json")
    with open(entry_dir / "expected.json", encoding="utf-8") as fh:
        expected_doc = json.load(fh)
    expected = Parameters(expected_doc["v"], expected_doc["b"],
                          expected_doc["r"], expected_doc["k"],
                          expected_doc["lambda"])
    base_path = entry_dir / "base_block.json"
    if base_path.exists():
        with open(base_path, encoding="utf-8") as fh:
            base_doc = json.load(fh)
        design = orbit_design(group, base_doc["block"])
        design = IncidenceStructure(design.v, design.blocks, name=name)
    else:
        with open(entry_dir / "blocks.json", encoding="utf-8") as fh:
            blocks_doc = json.load(fh)
        design = IncidenceStructure.from_blocks(
            blocks_doc["v"], blocks_doc["blocks"], name=name)
    return CatalogEntry(name, group, design, expected,
                        expected_doc.get("socle", ""),
                        expected_doc.get("automorphism_group", ""))
