"""The free projection-generated regular *-semigroup on a projection algebra.

Elements are reduced chains: friendly paths modulo the rules

    (p, p) -> (p),  (p, q, p) -> (p),  and  lambda = rho

for every linked pair.  The quotient is encoded per connected component of
the triangle complex: a chain is (component, dom, cod, word) where the word
lives in the component's fundamental group and spells the loop

    tree-path(base -> dom)^-1 . path . tree-path(base -> cod)^-1-complement

so equality of chains is endpoint equality plus a group word problem.  The
product is restriction + concatenation; the involution reverses.

Whenever a component group fails to classify as trivial, free, or finite,
equality there is refused with UndecidedEquality rather than approximated.
"""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .chains import (
    Path,
    enumerate_linked_pairs,
    lambda_rho,
    reduce_path,
    restrict_left,
    restrict_right,
)
from .errors import CapExceeded, NotAMorphism, UndecidedEquality
from .projections import is_morphism, relations
from .semigroups import StarSemigroup, projection_algebra_of
from .topology import (
    UNDECIDED,
    complex_KP_prime,
    components,
    pi1_presentation,
    tietze_simplify,
    word_solver,
)

__all__ = [
    "ReducedChain",
    "ChainSemigroupHandle",
    "build_chain_semigroup",
    "star_semigroup_of",
    "INFINITE",
    "UNKNOWN",
    "StarMorphism",
]


class _Named:
    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


INFINITE = _Named("Infinite")
UNKNOWN = _Named("Unknown")


@dataclass(frozen=True)
class ReducedChain:
    """Normal form of a chain: endpoints plus a canonical group word."""

    comp: int
    dom: int
    cod: int
    word: tuple

    def sort_key(self):
        return (self.comp, self.dom, self.cod, len(self.word), self.word)

    def __repr__(self):
        if self.dom == self.cod and not self.word:
            return f"<[{self.dom}]>"
        return f"<{self.dom}->{self.cod} w={list(self.word)}>"


class _Component:
    __slots__ = ("index", "vertices", "raw", "simplified", "classification",
                 "solver", "edge_letter")

    def __init__(self, index, vertices, raw, simplified, classification, solver):
        self.index = index
        self.vertices = vertices
        self.raw = raw
        self.simplified = simplified
        self.classification = classification
        self.solver = solver
        # non-tree edge -> 1-based raw letter
        self.edge_letter = {e: i + 1 for i, e in enumerate(raw.gen_edges)}


class ChainSemigroupHandle:
    """One-time build over a projection algebra; pure operations after."""

    def __init__(self, P, budget=50_000):
        self.algebra = P
        self.rel = relations(P)
        self.complex = complex_KP_prime(P, self.rel)
        self.comps = components(self.complex)
        self.comp_of = {}
        for i, comp in enumerate(self.comps):
            for v in comp:
                self.comp_of[v] = i
        self.components = []
        for i, comp in enumerate(self.comps):
            raw = pi1_presentation(self.complex, i)
            simplified, cls = tietze_simplify(raw, budget=budget)
            solver = word_solver(simplified, cls)
            self.components.append(
                _Component(i, tuple(comp), raw, simplified, cls, solver)
            )
        self._idem_cache = {}
        self._prod_cache = {}
        self._star_cache = {}

    # -- encoding ---------------------------------------------------------

    def _check_path(self, path):
        if path.algebra.digest != self.algebra.digest:
            raise ValueError("path belongs to a different algebra")

    def _raw_word(self, verts, comp):
        word = []
        tree = comp.raw.tree_parent
        for a, b in zip(verts, verts[1:]):
            e = (min(a, b), max(a, b))
            if tree.get(a) == b or tree.get(b) == a:
                continue
            letter = comp.edge_letter[e]
            word.append(letter if a < b else -letter)
        return word

    def normalize(self, path):
        """Canonical ReducedChain of a path; raises UndecidedEquality when
        the component solver is indecisive."""
        self._check_path(path)
        rp = reduce_path(path)
        ci = self.comp_of[rp.dom]
        comp = self.components[ci]
        raw = self._raw_word(rp.verts, comp)
        word = comp.simplified.translate(raw)
        canon = comp.solver.normalize(word)
        if canon is UNDECIDED:
            raise UndecidedEquality(
                f"component {ci} group is not decided", component=ci
            )
        return ReducedChain(ci, rp.dom, rp.cod, tuple(canon))

    def projection_chain(self, p):
        return ReducedChain(self.comp_of[p], int(p), int(p), ())

    def idempotent_chain(self, p, q):
        """The chain of the friendly pair (p, q); equals [[p]] when p = q."""
        key = (int(p), int(q))
        hit = self._idem_cache.get(key)
        if hit is None:
            hit = self.normalize(Path(self.algebra, key if p != q else (key[0],)))
            self._idem_cache[key] = hit
        return hit

    def expand(self, c):
        """A representative path: tree walk to dom, the word's loop, tree
        walk back to cod, reduced."""
        comp = self.components[c.comp]
        pres = comp.simplified
        base = pres.basepoint
        verts = list(reversed(pres.tree_path(c.dom)))   # dom -> base
        for l in c.word:
            u, v = pres.gen_edges[abs(l) - 1]
            if l < 0:
                u, v = v, u
            # walk base -> u, cross to v, walk v -> base
            verts.extend(pres.tree_path(u)[1:])
            verts.append(v)
            verts.extend(list(reversed(pres.tree_path(v)))[1:])
        tail = pres.tree_path(c.cod)
        verts.extend(tail[1:])
        path = Path(self.algebra, verts)
        return reduce_path(path)

    # -- semigroup operations --------------------------------------------

    def product(self, c, d):
        """c (*) d: restrict both sides to the linking projections and
        concatenate."""
        hit = self._prod_cache.get((c, d))
        if hit is not None:
            return hit
        T = self.algebra.theta
        p = c.cod
        q = d.dom
        p1 = int(T[p, q])          # q theta_p
        q1 = int(T[q, p])          # p theta_q
        left = restrict_right(self.expand(c), p1)
        right = restrict_left(self.expand(d), q1)
        joined = Path(self.algebra, left.verts + right.verts)
        out = self.normalize(joined)
        self._prod_cache[(c, d)] = out
        return out

    def star(self, c):
        """Reversal: swap endpoints and invert the word."""
        hit = self._star_cache.get(c)
        if hit is not None:
            return hit
        comp = self.components[c.comp]
        inv = tuple(-l for l in reversed(c.word))
        canon = comp.solver.normalize(inv)
        if canon is UNDECIDED:
            raise UndecidedEquality(
                f"component {c.comp} group is not decided", component=c.comp
            )
        out = ReducedChain(c.comp, c.cod, c.dom, tuple(canon))
        self._star_cache[c] = out
        return out

    def theta_map(self, c):
        """The composite operation of the chain: row-fold of theta along a
        representative path, as an array mapping q -> q Theta_c."""
        T = self.algebra.theta
        verts = self.expand(c).verts
        return reduce(lambda m, p: T[p][m], verts, np.arange(self.algebra.size))

    # -- global structure --------------------------------------------------

    def component_group(self, p):
        return self.components[self.comp_of[p]].classification

    def size(self):
        """|PG(P)| as int, or Infinite, or Unknown; finite answers are
        cross-checked against closure enumeration."""
        total = 0
        unknown = False
        for comp in self.components:
            cls = comp.classification
            v = len(comp.vertices)
            if cls.kind in ("trivial", "finite"):
                total += v * v * (cls.order or 1)
            elif cls.kind == "free":
                if cls.rank >= 1:
                    return INFINITE
                total += v * v
            else:
                if cls.abelian and cls.abelian[0] >= 1:
                    return INFINITE
                unknown = True
        if unknown:
            return UNKNOWN
        listed = self.enumerate(cap=total)
        if len(listed) != total:
            raise AssertionError(
                f"size formula {total} disagrees with closure {len(listed)}"
            )
        return total

    def enumerate(self, cap=100_000):
        """Closure of the projection chains under product and star."""
        if cap < self.algebra.size:
            raise ValueError("cap smaller than the projection count")
        elems = [self.projection_chain(p) for p in range(self.algebra.size)]
        seen = set(elems)

        def add(x, new):
            if x not in seen:
                seen.add(x)
                new.append(x)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeded cap={cap}")

        frontier = list(elems)
        while frontier:
            new = []
            for a in frontier:
                add(self.star(a), new)
            for a in elems:
                for b in frontier:
                    add(self.product(a, b), new)
                    add(self.product(b, a), new)
            elems.extend(new)
            frontier = new
        return sorted(seen, key=ReducedChain.sort_key)

    def idempotents(self):
        """All chains [[p, q]] for friendly (p, q); the idempotents when the
        semigroup is finite."""
        out = []
        n = self.algebra.size
        for p in range(n):
            for q in range(n):
                if self.rel.friendly[p, q]:
                    out.append(self.idempotent_chain(p, q))
        return out

    def maximal_subgroup(self, p):
        """(presentation, classification) of the group at p: pi1 of p's
        component re-based at p, simplified."""
        ci = self.comp_of[p]
        raw = pi1_presentation(self.complex, ci, basepoint=int(p))
        return tietze_simplify(raw)

    def extend_morphism(self, S, phi):
        """Extend a projection-algebra morphism into the projections of S to
        a *-homomorphism on chains."""
        return StarMorphism(self, S, phi)


def build_chain_semigroup(P, budget=50_000):
    return ChainSemigroupHandle(P, budget=budget)


def star_semigroup_of(handle, cap=100_000):
    """Concrete multiplication and star tables of a finite chain semigroup.

    Returns (StarSemigroup, elements) with elements[i] the chain carrying
    id i, in canonical sort order.
    """
    elems = handle.enumerate(cap=cap)
    index = {c: i for i, c in enumerate(elems)}
    n = len(elems)
    mult = np.empty((n, n), dtype=np.int64)
    star = np.empty(n, dtype=np.int64)
    for i, c in enumerate(elems):
        star[i] = index[handle.star(c)]
        for j, d in enumerate(elems):
            mult[i, j] = index[handle.product(c, d)]
    labels = [repr(c) for c in elems]
    return StarSemigroup(mult, star, labels=labels), elems


class StarMorphism:
    """chain -> element of S, via products of projection images along a
    representative path."""

    def __init__(self, handle, S, phi):
        self.handle = handle
        self.S = S
        self.phi = np.asarray(phi, dtype=np.intp)
        Q, embed = projection_algebra_of(S)
        proj_index = {s: i for i, s in enumerate(embed)}
        P = handle.algebra
        if self.phi.shape != (P.size,):
            raise NotAMorphism("phi must assign an element of S to every projection")
        psi = np.empty(P.size, dtype=np.intp)
        for i, s in enumerate(self.phi):
            if int(s) not in proj_index:
                raise NotAMorphism(f"phi({i}) = {s} is not a projection of S")
            psi[i] = proj_index[int(s)]
        if not is_morphism(P, Q, psi):
            raise NotAMorphism("phi does not respect the unary operations")
        self.psi = psi
        # well-definedness: the generating identifications map to equalities
        for lp in enumerate_linked_pairs(P, handle.rel):
            lam, rho = lambda_rho(lp)
            if self._eval_verts(lam.verts) != self._eval_verts(rho.verts):
                raise NotAMorphism(
                    f"images of the identified paths differ at {lp!r}"
                )

    def _eval_verts(self, verts):
        return self.S.product_of(int(self.phi[v]) for v in verts)

    def __call__(self, chain):
        return self._eval_verts(self.handle.expand(chain).verts)
