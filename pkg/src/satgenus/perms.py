"""Symmetric-group arithmetic for monodromy computations.

Permutations are stored as 0-indexed image tuples but every piece of text
I/O (cycle notation) is 1-indexed, matching the usual convention for
braid-strand and sheet labels.  Composition is left-to-right throughout:
``compose(a, b)`` means "apply a first, then b".
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

# Multiset of cycle lengths, fixed points included, sorted descending.
CycleType = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """An element of the symmetric group on ``{1, ..., degree}``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"images {self.images!r} do not describe a bijection")

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        """Image of a 1-indexed point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside 1..{self.degree}")
        return self.images[point - 1] + 1

    def __repr__(self) -> str:
        return f"Permutation({cycles_str(self)!r}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise ValueError("degree must be at least 1")
    return Permutation(tuple(range(degree)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return Permutation(tuple(b.images[x] for x in a.images))


def compose_all(perms: Iterable[Permutation]) -> Permutation:
    """Left-to-right product of a non-empty sequence."""
    result = None
    for p in perms:
        result = p if result is None else compose(result, p)
    if result is None:
        raise ValueError("cannot compose an empty sequence without a degree")
    return result


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for x, y in enumerate(p.images):
        inv[y] = x
    return Permutation(tuple(inv))


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """The product a b a^-1 b^-1, applied left to right."""
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles as 1-indexed tuples, each starting at its least point,
    ordered by least point.  Fixed points appear as length-1 cycles."""
    seen = [False] * p.degree
    out = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = p.images[x]
        out.append(tuple(cyc))
    return out


def cycle_count(p: Permutation) -> int:
    return len(cycles(p))


def cycle_type(p: Permutation) -> CycleType:
    """Cycle lengths, fixed points included, sorted descending."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def is_even(p: Permutation) -> bool:
    """Parity via degree minus number of cycles."""
    return (p.degree - cycle_count(p)) % 2 == 0


def cycles_str(p: Permutation) -> str:
    """Cycle notation with fixed points omitted; the identity prints as '()'."""
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in parts)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-indexed cycle notation such as ``(2 3)(4 5)``.

    Fixed points are omitted from the notation, so the degree must be given
    separately.  Cycles must be disjoint.  ``()`` and the empty string both
    denote the identity.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise ValueError(f"cycle notation syntax error near {stripped.strip()[:20]!r}")
    images = list(range(degree))
    used: set[int] = set()
    for group in _CYCLE_RE.findall(text):
        if not group.strip():
            continue
        try:
            points = [int(tok) for tok in group.split()]
        except ValueError:
            raise ValueError(f"non-integer entry in cycle ({group})") from None
        for pt in points:
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} outside 1..{degree}")
            if pt in used:
                raise ValueError(f"point {pt} appears in two cycles")
            used.add(pt)
        for src, dst in zip(points, points[1:] + points[:1]):
            images[src - 1] = dst - 1
    return Permutation(tuple(images))


def from_cycles(cycle_list: Sequence[Sequence[int]], degree: int) -> Permutation:
    """Build a permutation from disjoint cycles given as 1-indexed sequences."""
    text = "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycle_list)
    return parse_cycles(text, degree)


def orbits(gens: Sequence[Permutation], degree: int | None = None) -> list[tuple[int, ...]]:
    """Orbits of ``{1..degree}`` under the group generated by ``gens``.

    Computed by closing up under the generators point by point; the group
    itself is never enumerated.  An empty generator list needs an explicit
    degree and yields singletons.
    """
    if gens:
        n = gens[0].degree
        for g in gens[1:]:
            if g.degree != n:
                raise ValueError("generators act on different degrees")
        if degree is not None and degree != n:
            raise ValueError(f"degree {degree} does not match generators of degree {n}")
    elif degree is None:
        raise ValueError("degree is required when the generator list is empty")
    else:
        n = degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g.images):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    buckets: dict[int, list[int]] = {}
    for x in range(n):
        buckets.setdefault(find(x), []).append(x + 1)
    return [tuple(buckets[root]) for root in sorted(buckets)]


def is_transitive(gens: Sequence[Permutation], degree: int | None = None) -> bool:
    return len(orbits(gens, degree)) == 1


def example1_pair(m: int) -> tuple[Permutation, Permutation]:
    """Involutions s1 = (2 3)(4 5)...(2m 2m+1), s2 = (1 2)(3 4)...(2m-1 2m)
    on 2m+1 points; their commutator is a full (2m+1)-cycle."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2 * m + 1
    s1 = from_cycles([(2 * i, 2 * i + 1) for i in range(1, m + 1)], n)
    s2 = from_cycles([(2 * i - 1, 2 * i) for i in range(1, m + 1)], n)
    return s1, s2


def example2_pair(m: int) -> tuple[Permutation, Permutation]:
    """Involutions s1 = (2 3)...(2m-2 2m-1), s2 = (1 2)...(2m-1 2m) on 2m
    points; their commutator splits into two disjoint m-cycles while the pair
    still generates a transitive group."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = 2 * m
    s1 = from_cycles([(2 * i, 2 * i + 1) for i in range(1, m)], n)
    s2 = from_cycles([(2 * i - 1, 2 * i) for i in range(1, m + 1)], n)
    return s1, s2


@lru_cache(maxsize=None)
def _first_commutator_witnesses(degree: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]]:
    """First (a, b) in lexicographic image order with [a, b] = target, for
    every target that is a commutator in S_degree."""
    elements = list(itertools.permutations(range(degree)))
    inv = {}
    for p in elements:
        q = [0] * degree
        for x, y in enumerate(p):
            q[y] = x
        inv[p] = tuple(q)
    witnesses: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for a in elements:
        ai = inv[a]
        for b in elements:
            bi = inv[b]
            c = tuple(bi[ai[b[a[x]]]] for x in range(degree))
            if c not in witnesses:
                witnesses[c] = (a, b)
    return witnesses


def ore_commutator_search(target: Permutation, degree_limit: int = 6) -> tuple[Permutation, Permutation] | None:
    """Exhaustive search for (a, b) with ``commutator(a, b) == target``.

    Returns the lexicographically first witness pair, or None when the target
    is not a commutator (odd permutations are rejected up front).  The search
    space is all of S_n x S_n, so degrees above ``degree_limit`` (default 6)
    are refused; raise the limit explicitly if you accept the cost.
    """
    n = target.degree
    if n > degree_limit:
        raise ValueError(
            f"degree {n} exceeds the search limit {degree_limit}; "
            "pass a larger degree_limit to search anyway"
        )
    if not is_even(target):
        return None
    found = _first_commutator_witnesses(n).get(target.images)
    if found is None:
        return None
    a, b = found
    return Permutation(a), Permutation(b)
