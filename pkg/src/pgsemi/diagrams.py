"""Partition diagrams and the diagram monoids P_n, B_n, PB_n, TL_n, M_n.

A diagram of degree n is a set partition of the 2n points {1..n} u {1'..n'},
encoded on 0..2n-1 with point i-1 for i and n+i-1 for i'.  Blocks are sorted
tuples, the block list sorted by minimum, so equality and hashing are plain
structural comparisons.

Composition a*b stacks a over b, identifies a's primed row with b's unprimed
row, traces connections through the middle (union-find on 3n points), and
reads off the blocks on the outer 2n points.  The involution is the vertical
reflection (swap primed/unprimed).
"""

import itertools

import numpy as np

from .errors import CapExceeded, DegreeMismatch, InfeasibleDegree
from .semigroups import StarSemigroup

__all__ = [
    "PartitionDiagram",
    "identity_diagram",
    "tl_generators",
    "generate_monoid",
    "tl_monoid",
    "motzkin_monoid",
    "brauer_monoid",
    "partial_brauer_monoid",
    "partition_monoid",
]


def _canonical(blocks):
    bs = sorted(tuple(sorted(b)) for b in blocks)
    return tuple(bs)


class PartitionDiagram:
    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n, blocks):
        self.n = int(n)
        bs = _canonical(blocks)
        seen = [x for b in bs for x in b]
        if sorted(seen) != list(range(2 * self.n)):
            raise ValueError(
                f"blocks must partition 0..{2 * self.n - 1}, got {bs!r}"
            )
        self.blocks = bs
        self._hash = hash((self.n, bs))

    def __eq__(self, other):
        if not isinstance(other, PartitionDiagram):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PartitionDiagram({self.n}, {self.label()})"

    def label(self):
        """Readable block string: upper points 1..n, lower 1'..n'."""
        parts = []
        for b in self.blocks:
            names = [str(x + 1) if x < self.n else f"{x - self.n + 1}'" for x in b]
            parts.append("{" + ",".join(names) + "}")
        return "".join(parts)

    def signed_blocks(self):
        """Blocks with upper point i as +i and lower i' as -i (1-based)."""
        out = []
        for b in self.blocks:
            out.append([x + 1 if x < self.n else -(x - self.n + 1) for x in b])
        return out

    def multiply(self, other):
        """Stack self over other and trace through the middle row."""
        if not isinstance(other, PartitionDiagram):
            raise TypeError("can only multiply diagrams")
        if self.n != other.n:
            raise DegreeMismatch(f"degrees {self.n} and {other.n} differ")
        n = self.n
        parent = list(range(3 * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx

        # nodes: 0..n-1 outer top, n..2n-1 middle, 2n..3n-1 outer bottom.
        # self maps onto nodes x, other onto nodes x + n.
        for b in self.blocks:
            for x in b[1:]:
                union(b[0], x)
        for b in other.blocks:
            for x in b[1:]:
                union(b[0] + n, x + n)
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        for j in range(n):
            groups.setdefault(find(2 * n + j), []).append(n + j)
        return PartitionDiagram(n, groups.values())

    def __mul__(self, other):
        return self.multiply(other)

    def star(self):
        """Vertical reflection: swap the primed and unprimed rows."""
        n = self.n
        return PartitionDiagram(
            n, [[x + n if x < n else x - n for x in b] for b in self.blocks]
        )

    def _positions(self):
        # boundary cycle 1, ..., n, n', ..., 1': upper i at i, lower i' at 2n-1-i
        n = self.n
        return [
            sorted(x if x < n else 2 * n - 1 - (x - n) for x in b)
            for b in self.blocks
        ]

    def is_planar(self):
        """True iff no two blocks interleave on the boundary cycle."""
        from bisect import bisect_left

        pos = self._positions()
        for a, b in itertools.combinations(pos, 2):
            if len(a) == 1 or len(b) == 1:
                continue
            gap = None
            crossed = False
            for x in b:
                g = bisect_left(a, x) % len(a)
                if gap is None:
                    gap = g
                elif g != gap:
                    crossed = True
                    break
            if crossed:
                return False
        return True

    def max_block_size(self):
        return max(len(b) for b in self.blocks)


def identity_diagram(n):
    return PartitionDiagram(n, [[i, n + i] for i in range(n)])


def tl_generators(n):
    """The diagrams for t_1, ..., t_{n-1}: t_i joins {i, i+1} on top,
    {i', (i+1)'} on the bottom, and is the identity elsewhere."""
    gens = []
    for i in range(n - 1):
        blocks = [[i, i + 1], [n + i, n + i + 1]]
        blocks += [[j, n + j] for j in range(n) if j not in (i, i + 1)]
        gens.append(PartitionDiagram(n, blocks))
    return gens


def _table_from_elements(elements):
    """Full multiplication and star tables over a multiplicatively closed,
    star-closed element list."""
    index = {d: i for i, d in enumerate(elements)}
    k = len(elements)
    mult = np.empty((k, k), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mult[i, j] = index[a.multiply(b)]
    star = np.array([index[d.star()] for d in elements], dtype=np.int32)
    labels = [d.label() for d in elements]
    return StarSemigroup(mult, star, labels=labels)


def generate_monoid(gens, cap=100_000):
    """Breadth-first closure of gens (plus identity and stars) under
    multiplication.  Returns (StarSemigroup, elements) with elements in
    discovery order; raises CapExceeded past the cap."""
    gens = list(gens)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    degrees = {g.n for g in gens}
    if len(degrees) > 1:
        raise DegreeMismatch(f"mixed degrees {sorted(degrees)}")
    n = degrees.pop() if degrees else 1
    # stars of generators are included so the star table stays in range
    seed = [identity_diagram(n)]
    for g in gens + [g.star() for g in gens]:
        if g not in seed:
            seed.append(g)
    elements = list(seed)
    index = set(elements)
    frontier = list(elements)
    mby = gens + [g.star() for g in gens]
    while frontier:
        new = []
        for a in frontier:
            for g in mby:
                c = a.multiply(g)
                if c not in index:
                    index.add(c)
                    new.append(c)
                    if len(index) > cap:
                        raise CapExceeded(f"closure exceeded cap={cap}")
        elements.extend(new)
        frontier = new
    return _table_from_elements(elements), elements


def _set_partitions(m):
    """All set partitions of 0..m-1 via restricted growth strings."""
    if m == 0:
        yield []
        return
    rgs = [0] * m
    maxes = [0] * m
    while True:
        blocks = {}
        for i, c in enumerate(rgs):
            blocks.setdefault(c, []).append(i)
        yield list(blocks.values())
        i = m - 1
        while i > 0 and rgs[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        m2 = max(maxes[i - 1], rgs[i])
        maxes[i] = m2
        for j in range(i + 1, m):
            rgs[j] = 0
            maxes[j] = m2


def _matchings(points):
    """All perfect matchings of the given point list, as block lists."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k in range(len(rest)):
        other = rest[k]
        remaining = rest[:k] + rest[k + 1:]
        for tail in _matchings(remaining):
            yield [[first, other]] + tail


def _partial_matchings(points):
    """All partitions of the point list into blocks of size <= 2."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for tail in _partial_matchings(rest):
        yield [[first]] + tail
    for k in range(len(rest)):
        other = rest[k]
        remaining = rest[:k] + rest[k + 1:]
        for tail in _partial_matchings(remaining):
            yield [[first, other]] + tail


def _family(n, candidates, keep, bound, name, allow_large):
    if n < 1:
        raise InfeasibleDegree(f"{name} needs n >= 1")
    if n > bound and not allow_large:
        raise InfeasibleDegree(
            f"{name} is limited to n <= {bound} by default (pass allow_large=True)"
        )
    elems = sorted(
        (d for d in (PartitionDiagram(n, bs) for bs in candidates) if keep(d)),
        key=lambda d: d.blocks,
    )
    return _table_from_elements(elems), elems


def partition_monoid(n, allow_large=False):
    """All set partitions of the 2n points."""
    return _family(
        n, _set_partitions(2 * n), lambda d: True, 4, "partition_monoid", allow_large
    )


def motzkin_monoid(n, allow_large=False):
    """Planar diagrams with blocks of size <= 2."""
    return _family(
        n,
        _partial_matchings(list(range(2 * n))),
        lambda d: d.is_planar(),
        4,
        "motzkin_monoid",
        allow_large,
    )


def partial_brauer_monoid(n, allow_large=False):
    """All diagrams with blocks of size <= 2."""
    return _family(
        n,
        _partial_matchings(list(range(2 * n))),
        lambda d: True,
        4,
        "partial_brauer_monoid",
        allow_large,
    )


def brauer_monoid(n, allow_large=False):
    """All diagrams with blocks of size exactly 2."""
    return _family(
        n, _matchings(list(range(2 * n))), lambda d: True, 6, "brauer_monoid",
        allow_large,
    )


def tl_monoid(n, allow_large=False):
    """Planar perfect matchings (Temperley-Lieb diagrams)."""
    return _family(
        n,
        _matchings(list(range(2 * n))),
        lambda d: d.is_planar(),
        6,
        "tl_monoid",
        allow_large,
    )
