"""Finite semigroups with involution, given by multiplication and star tables.

The main consumers are the diagram monoids and the adjacency semigroups of
graphs.  ``projection_algebra_of`` extracts the projection algebra carried by
the projections of a regular *-semigroup via ``q theta_p = p q p``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSemigroup, MalformedTable
from .projections import ProjectionAlgebra, Violation, validate_axioms

__all__ = [
    "StarSemigroup",
    "AdjacencyGraph",
    "adjacency_semigroup",
    "validate_star_semigroup",
    "projection_algebra_of",
    "subsemigroup_closure",
]


class StarSemigroup:
    """A finite semigroup with involution: ``mult[a, b] = ab`` and
    ``star[a] = a*``.  Construction checks shapes and ranges only; the laws
    are checked by :func:`validate_star_semigroup`."""

    __slots__ = ("mult", "star", "labels")

    def __init__(self, mult, star, labels=None):
        mult = np.asarray(mult)
        star = np.asarray(star)
        if mult.ndim != 2 or mult.shape[0] != mult.shape[1]:
            raise MalformedTable(f"mult must be square, got shape {mult.shape}")
        n = mult.shape[0]
        if star.shape != (n,):
            raise MalformedTable("star must be a vector matching mult")
        for arr, name in ((mult, "mult"), (star, "star")):
            if arr.size and not np.issubdtype(arr.dtype, np.integer):
                raise MalformedTable(f"{name} entries must be integers")
            if arr.size and (arr.min() < 0 or arr.max() >= n):
                raise MalformedTable(f"{name} entries must lie in 0..n-1")
        self.mult = mult.astype(np.int32, copy=True)
        self.star = star.astype(np.int32, copy=True)
        self.mult.setflags(write=False)
        self.star.setflags(write=False)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise MalformedTable("labels length must equal the carrier size")
        self.labels = labels

    @property
    def size(self):
        return self.mult.shape[0]

    def product(self, a, b):
        return int(self.mult[a, b])

    def product_of(self, seq):
        it = iter(seq)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("empty product") from None
        for x in it:
            acc = self.mult[acc, x]
        return int(acc)

    def star_of(self, a):
        return int(self.star[a])

    def label(self, a):
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def idempotents(self):
        n = self.size
        rng = np.arange(n)
        return [int(a) for a in np.flatnonzero(self.mult[rng, rng] == rng)]

    def projections(self):
        """Elements with a a = a and a* = a, ascending."""
        n = self.size
        rng = np.arange(n)
        mask = (self.mult[rng, rng] == rng) & (self.star == rng)
        return [int(a) for a in np.flatnonzero(mask)]

    def __eq__(self, other):
        if not isinstance(other, StarSemigroup):
            return NotImplemented
        return np.array_equal(self.mult, other.mult) and np.array_equal(
            self.star, other.star
        )

    def __hash__(self):
        return hash((self.size, self.mult.tobytes(), self.star.tobytes()))

    def __repr__(self):
        return f"StarSemigroup(size={self.size})"


def _assoc_violation(mult):
    """First-found associativity failures, vectorized and chunked over the
    left factor."""
    n = mult.shape[0]
    M = mult.astype(np.intp)
    chunk = max(1, 500_000 // max(1, n * n))
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        rows = M[lo:hi]
        left = M[rows]                     # [a, b, c] -> (ab)c
        right = rows[:, M]                 # [a, b, c] -> a(bc)
        mism = left != right
        if mism.any():
            idx = np.argwhere(mism)
            wit = tuple(
                (int(a) + lo, int(b), int(c)) for a, b, c in idx[:20]
            )
            return Violation("associativity", wit, int(mism.sum()))
    return None


def validate_star_semigroup(S):
    """Check the regular *-semigroup laws on the tables.

    Beyond associativity, the involution laws and regularity, this checks the
    facts the projection extraction depends on: projections are exactly the
    elements a a*; products of projections are idempotent; every idempotent e
    factors as (e e*)(e* e); p q p and a q a* are projections; and a product
    of two friendly projections determines the pair.  Returns a list of
    Violations, empty iff all hold.
    """
    out = []
    M = S.mult.astype(np.intp)
    st = S.star.astype(np.intp)
    n = S.size
    if n == 0:
        return []
    rng = np.arange(n)

    v = _assoc_violation(S.mult)
    if v:
        out.append(v)

    v = _collect_mask(st[st] != rng, "star-involutive")
    if v:
        out.append(v)

    lhs = st[M]
    rhs = M[st[:, None], st[None, :]].T
    v = _collect_mask(lhs != rhs, "star-antihomomorphism")
    if v:
        out.append(v)

    aa = M[rng, st]                        # a a*
    v = _collect_mask(M[M[rng, st], rng] != rng, "regularity")
    if v:
        out.append(v)

    proj = set(S.projections())
    image = set(int(x) for x in aa)
    if proj != image:
        diff = sorted(proj ^ image)
        out.append(
            Violation("projections-vs-aa*", tuple((d,) for d in diff[:20]), len(diff))
        )

    plist = sorted(proj)
    if plist:
        P = np.array(plist, dtype=np.intp)
        PP = M[np.ix_(P, P)]
        idem = M[PP.ravel(), PP.ravel()] == PP.ravel()
        v = _collect_mask(
            ~idem.reshape(PP.shape),
            "projection-products-idempotent",
            decode=lambda w: (plist[w[0]], plist[w[1]]),
        )
        if v:
            out.append(v)

        # p q p is a projection
        pqp = M[PP, P[:, None]]
        members = np.isin(pqp, np.array(plist))
        v = _collect_mask(
            ~members,
            "pqp-projection",
            decode=lambda w: (plist[w[0]], plist[w[1]]),
        )
        if v:
            out.append(v)

        # a q a* is a projection
        aq = M[:, P]                        # [a, j] -> a q_j
        aqas = M[aq, st[:, None]]           # [a, j] -> a q_j a*
        v = _collect_mask(
            ~np.isin(aqas, np.array(plist)),
            "aqa*-projection",
            decode=lambda w: (w[0], plist[w[1]]),
        )
        if v:
            out.append(v)

    # idempotent factorization e = (e e*)(e* e)
    bad = []
    for e in S.idempotents():
        s = M[e, st[e]]
        t = M[st[e], e]
        if M[s, t] != e:
            bad.append((e,))
    if bad:
        out.append(Violation("idempotent-factorization", tuple(bad[:20]), len(bad)))

    # friendly pairs have distinct products
    if plist:
        seen = {}
        bad = []
        for p in plist:
            for q in plist:
                if M[M[p, q], p] == p and M[M[q, p], q] == q:
                    prod = int(M[p, q])
                    if prod in seen and seen[prod] != (p, q):
                        bad.append((seen[prod], (p, q)))
                    else:
                        seen[prod] = (p, q)
        if bad:
            out.append(Violation("friendly-product-injective", tuple(bad[:20]), len(bad)))

    return out


def _collect_mask(mask, law, decode=None):
    idx = np.argwhere(mask)
    if idx.size == 0:
        return None
    wit = [tuple(int(x) for x in row) for row in idx[:20]]
    if decode is not None:
        wit = [decode(w) for w in wit]
    return Violation(law, tuple(wit), int(idx.shape[0]))


def projection_algebra_of(S, validate=True):
    """Projection algebra on the projections of S, via q theta_p = p q p.

    Returns ``(P, embed)`` where ``embed[i]`` is the semigroup element id of
    the i-th projection (ascending element order).  Raises InvalidSemigroup
    if some p q p is not itself a projection, and, with ``validate=True``,
    if the resulting table fails the projection-algebra axioms.
    """
    plist = S.projections()
    index = {p: i for i, p in enumerate(plist)}
    M = S.mult.astype(np.intp)
    P = np.array(plist, dtype=np.intp)
    k = len(plist)
    theta = np.empty((k, k), dtype=np.int32)
    if k:
        pq = M[np.ix_(P, P)]
        pqp = M[pq, P[:, None]]             # [i, j] -> p_i q_j p_i
        for i in range(k):
            for j in range(k):
                val = int(pqp[i, j])
                if val not in index:
                    raise InvalidSemigroup(
                        f"p q p left the projections at p={plist[i]}, q={plist[j]}"
                    )
                theta[i, j] = index[val]
    labels = None
    if S.labels is not None:
        labels = [S.label(p) for p in plist]
    alg = ProjectionAlgebra(theta, labels=labels)
    if validate:
        report = validate_axioms(alg)
        if report:
            raise InvalidSemigroup(
                f"extracted table fails the axioms: {report[0]}"
            )
    return alg, plist


def subsemigroup_closure(S, seed):
    """Ids of the subsemigroup generated by ``seed``, ascending."""
    M = S.mult
    have = set(int(a) for a in seed)
    frontier = sorted(have)
    elems = list(frontier)
    while frontier:
        new = []
        for a in elems:
            for b in frontier:
                for c in (int(M[a, b]), int(M[b, a])):
                    if c not in have:
                        have.add(c)
                        new.append(c)
        elems.extend(new)
        frontier = new
    return sorted(have)


class AdjacencyGraph:
    """A finite reflexive symmetric graph on vertices 0..n-1.

    Edges are stored as an unordered set; loops at every vertex are implied
    and added on construction, and edge pairs are symmetrized.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n, edges=()):
        if n < 0:
            raise MalformedTable("vertex count must be nonnegative")
        self.n = int(n)
        es = set()
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedTable(f"edge {e!r} out of range")
            es.add((min(u, v), max(u, v)))
        for v in range(n):
            es.add((v, v))
        self.edges = frozenset(es)

    def adjacent(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def matrix(self):
        A = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            A[u, v] = A[v, u] = True
        return A

    def __repr__(self):
        return f"AdjacencyGraph(n={self.n}, edges={len(self.edges)})"


def adjacency_semigroup(G):
    """The adjacency semigroup of a reflexive symmetric graph.

    Elements: 0 is the zero; pair (p, q) has id 1 + p*n + q.  Products:
    (p, q)(r, s) = (p, s) if q r is an edge, else 0; star swaps coordinates.
    Returns the StarSemigroup; pair labels use the vertex numbers.
    """
    n = G.n
    A = G.matrix()
    m = 1 + n * n
    mult = np.zeros((m, m), dtype=np.int32)
    if n:
        # (p,q)(r,s) = (p,s) when q r is an edge, else 0
        p, q = np.divmod(np.arange(n * n), n)
        ok = A[q[:, None], p[None, :]]
        prod = np.where(ok, 1 + p[:, None] * n + q[None, :], 0)
        mult[1:, 1:] = prod
    star = np.zeros(m, dtype=np.int32)
    if n:
        p, q = np.divmod(np.arange(n * n), n)
        star[1:] = 1 + q * n + p
    labels = ["0"]
    for p in range(n):
        for q in range(n):
            labels.append(f"({p},{q})")
    return StarSemigroup(mult, star, labels=labels)
