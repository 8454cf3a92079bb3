"""Exact permutation groups via deterministic stabilizer chains.

A group is given by generators acting on {0..n-1}.  Internally we keep a
stabilizer chain: a sequence of base points beta_0, beta_1, ... where level i
stores the strong generators fixing beta_0..beta_{i-1} together with a
transversal for the orbit of beta_i under them.  The chain is built with the
(non-randomized) Schreier-Sims algorithm: Schreier generators are sifted in a
fixed order, new base points are the smallest moved point, and transversals
only ever extend, so identical input always produces the identical chain.

The product of the basic orbit lengths is the exact group order, and sifting
gives an exact membership test.  Degrees here stay modest (a few hundred
points), so no effort is spent on shallow Schreier trees or randomization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = [
    "Permutation",
    "PermutationGroup",
    "build_group",
    "load_group",
    "group_to_json",
]


class Permutation:
    """A permutation of {0..n-1}, stored as its tuple of images.

    Composition is left-to-right: (p * q)(x) = q(p(x)).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("image array is not a bijection on 0..n-1")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        p = cls.__new__(cls)
        p.images = tuple(range(n))
        return p

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            for x, y in zip(cycle, cycle[1:]):
                images[x] = y
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        p = Permutation.__new__(Permutation)
        p.images = tuple(q[i] for i in self.images)
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        p = Permutation.__new__(Permutation)
        p.images = tuple(inv)
        return p

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "Permutation(identity)"
        return "Permutation(%s)" % "".join(str(c) for c in cycles)


@dataclass
class _Level:
    beta: int
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)
    verified: set = field(default_factory=set)

    def extend_transversal(self) -> None:
        """Grow the orbit of beta under the current generators.

        Existing coset representatives are never replaced, so earlier
        Schreier verification stays valid when generators are added.
        """
        frontier = sorted(self.transversal)
        while frontier:
            new = []
            for gamma in frontier:
                u = self.transversal[gamma]
                for g in self.gens:
                    delta = g(gamma)
                    if delta not in self.transversal:
                        self.transversal[delta] = u * g
                        new.append(delta)
            frontier = sorted(new)


class PermutationGroup:
    """Permutation group with a verified stabilizer chain.

    Construct through build_group(); instances are immutable after
    construction and safe to share.
    """

    def __init__(self, degree: int, generators, base_hint=(), name: str | None = None):
        self.degree = degree
        self.name = name
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} != group degree {degree}")
            gens.append(g)
        self.generators = tuple(gens)
        self._identity = Permutation.identity(degree)
        self.levels: list[_Level] = []
        for beta in base_hint:
            level = _Level(beta)
            level.transversal[beta] = self._identity
            self.levels.append(level)
        for g in self.generators:
            self._insert(g)
        self._close()

    # -- chain construction -------------------------------------------------

    def _insert(self, g: Permutation) -> bool:
        """Register g as a strong generator at every level it stabilizes into."""
        if g.is_identity():
            return False
        depth = None
        for i, level in enumerate(self.levels):
            if g(level.beta) != level.beta:
                depth = i
                break
        if depth is None:
            beta = min(i for i, j in enumerate(g.images) if i != j)
            level = _Level(beta)
            level.transversal[beta] = self._identity
            self.levels.append(level)
            depth = len(self.levels) - 1
        for i in range(depth + 1):
            self.levels[i].gens.append(g)
            self.levels[i].extend_transversal()
        return True

    def _close(self) -> None:
        """Sift Schreier generators until every level passes."""
        changed = True
        while changed:
            changed = False
            for i in range(len(self.levels) - 1, -1, -1):
                level = self.levels[i]
                for gamma in sorted(level.transversal):
                    u = level.transversal[gamma]
                    for gi in range(len(level.gens)):
                        if (gamma, gi) in level.verified:
                            continue
                        level.verified.add((gamma, gi))
                        g = level.gens[gi]
                        u_target = level.transversal[g(gamma)]
                        schreier = u * g * u_target.inverse()
                        residue = self._sift(schreier, start=i + 1)
                        if not residue.is_identity():
                            self._insert(residue)
                            changed = True

    def _sift(self, perm: Permutation, start: int = 0) -> Permutation:
        for level in self.levels[start:]:
            u = level.transversal.get(perm(level.beta))
            if u is None:
                return perm
            perm = perm * u.inverse()
        return perm

    # -- queries -------------------------------------------------------------

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        return self._sift(perm).is_identity()

    def base(self) -> tuple[int, ...]:
        return tuple(level.beta for level in self.levels)

    def orbit(self, point: int) -> set[int]:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range 0..{self.degree - 1}")
        seen = {point}
        frontier = [point]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = g(x)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen

    def orbits(self) -> list[set[int]]:
        remaining = set(range(self.degree))
        out = []
        while remaining:
            orb = self.orbit(min(remaining))
            out.append(orb)
            remaining -= orb
        return out

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def stabilizer(self, point: int) -> "PermutationGroup":
        """Full point stabilizer, as an independent group."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range 0..{self.degree - 1}")
        anchored = self if (self.levels and self.levels[0].beta == point) else \
            PermutationGroup(self.degree, self.generators, base_hint=(point,))
        stab_gens = [g for g in anchored.levels[0].gens if g(point) == point]
        return PermutationGroup(self.degree, stab_gens)

    def subdegrees(self, point: int = 0) -> list[int]:
        """Sorted orbit lengths of the point stabilizer on all points."""
        if not self.is_transitive():
            raise ValueError("subdegrees require a transitive group")
        stab = self.stabilizer(point)
        return sorted(len(orb) for orb in stab.orbits())

    def primitivity(self) -> tuple[bool, frozenset | None]:
        """(True, None) for a primitive action, else (False, block) where
        block is a minimal nontrivial block containing point 0."""
        if self.degree < 2:
            raise ValueError("primitivity requires degree >= 2")
        if not self.is_transitive():
            raise ValueError("primitivity requires a transitive group")
        for beta in range(1, self.degree):
            block = self._minimal_block(0, beta)
            if len(block) < self.degree:
                return False, frozenset(block)
        return True, None

    def is_primitive(self) -> bool:
        return self.primitivity()[0]

    def _minimal_block(self, alpha: int, beta: int) -> set[int]:
        """Smallest block of imprimitivity containing {alpha, beta}."""
        parent = list(range(self.degree))

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        stack = [(alpha, beta)]
        while stack:
            x, y = stack.pop()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            parent[ry] = rx
            for g in self.generators:
                stack.append((g(rx), g(ry)))
        root = find(alpha)
        return {x for x in range(self.degree) if find(x) == root}

    def random_element(self, rng) -> Permutation:
        """Uniform random element, via random transversal representatives."""
        elem = self._identity
        for level in reversed(self.levels):
            gamma = rng.choice(sorted(level.transversal))
            elem = elem * level.transversal[gamma]
        return elem

    def elements(self, limit: int | None = None) -> set[Permutation]:
        """Exhaustive element set by generator closure; guard with limit."""
        els = {self._identity}
        frontier = [self._identity]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = x * g
                    if y not in els:
                        els.add(y)
                        new.append(y)
                        if limit is not None and len(els) > limit:
                            raise ValueError(f"group exceeds {limit} elements")
            frontier = new
        return els

    def __repr__(self) -> str:
        label = self.name or "PermutationGroup"
        return f"<{label} degree={self.degree} order={self.order()}>"


def build_group(degree: int, generators, name: str | None = None) -> PermutationGroup:
    """Group of the given degree generated by the given image arrays."""
    return PermutationGroup(degree, generators, name=name)


def canonical_json(obj) -> str:
    """Stable serialization used for every JSON artifact in this package."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def group_to_json(group: PermutationGroup, name: str | None = None,
                  expected_order: int | None = None) -> str:
    doc = {
        "name": name or group.name or "group",
        "degree": group.degree,
        "generators": [list(g.images) for g in group.generators],
    }
    if expected_order is not None:
        doc["expected_order"] = expected_order
    return canonical_json(doc)


def group_from_json(text: str) -> PermutationGroup:
    doc = json.loads(text)
    group = PermutationGroup(doc["degree"], doc["generators"],
                             name=doc.get("name"))
    expected = doc.get("expected_order")
    if expected is not None and group.order() != expected:
        raise ValueError(
            f"group {doc.get('name')!r}: computed order {group.order()} "
            f"!= expected {expected}")
    return group


def load_group(path) -> PermutationGroup:
    with open(path, encoding="utf-8") as fh:
        return group_from_json(fh.read())
