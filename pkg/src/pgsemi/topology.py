"""Friendliness graph, the 2-complexes K and K', and their fundamental groups.

The 1-skeleton has the projections as vertices and an edge for every
distinct friendly pair.  K attaches a quad cell (e, e1, f, f1, e) for every
p-linked pair (boundaries collapsing below cyclic length 3 are dropped); K'
attaches triangles only for the non-degenerate special pairs: (e, f, f1, e)
for type 2 and (e, e1, f, e) for type 3.

Per component, pi1 is presented off a breadth-first spanning tree: one
generator per non-tree edge (oriented low-to-high), one relator per cell.
Tietze simplification plus a bounded coset enumeration classify each group
as trivial, free, finite, or unknown; a word solver gives canonical words
whenever the classification is decisive.
"""

from dataclasses import dataclass, field

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form

from .chains import classify_linked_pair, enumerate_linked_pairs
from .cosets import enumerate_group
from .errors import BudgetExceeded
from .projections import relations

__all__ = [
    "Cell",
    "Complex2",
    "GroupPresentation",
    "Classification",
    "UNDECIDED",
    "friendliness_graph",
    "complex_KP",
    "complex_KP_prime",
    "components",
    "pi1_presentation",
    "tietze_simplify",
    "free_reduce",
    "word_solver",
]


@dataclass(frozen=True)
class Cell:
    """A 2-cell: closed boundary walk (last vertex = first) and the linked
    pair it came from."""

    boundary: tuple
    pair: object = None
    kind: str = "quad"


class Complex2:
    """Vertices 0..n-1, undirected edges between distinct vertices, cells."""

    __slots__ = ("n", "edges", "cells", "algebra")

    def __init__(self, n, edges, cells=(), algebra=None):
        self.n = int(n)
        es = sorted({(min(u, v), max(u, v)) for u, v in edges})
        for u, v in es:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad edge ({u}, {v})")
        self.edges = tuple(es)
        eset = set(es)
        for c in cells:
            b = c.boundary
            if len(b) < 2 or b[0] != b[-1]:
                raise ValueError(f"cell boundary must close up: {b!r}")
            for a, bb in zip(b, b[1:]):
                if (min(a, bb), max(a, bb)) not in eset:
                    raise ValueError(f"cell boundary uses missing edge ({a},{bb})")
        self.cells = tuple(cells)
        self.algebra = algebra

    @property
    def vertices(self):
        return tuple(range(self.n))

    def adjacency(self):
        adj = {v: [] for v in range(self.n)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: sorted(ws) for v, ws in adj.items()}

    def __repr__(self):
        return (
            f"Complex2(vertices={self.n}, edges={len(self.edges)}, "
            f"cells={len(self.cells)})"
        )


def friendliness_graph(P, rel=None):
    """Graph with an edge for every distinct friendly pair; no cells."""
    if rel is None:
        rel = relations(P)
    n = P.size
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rel.friendly[u, v]
    ]
    return Complex2(n, edges, (), algebra=P)


def _cyclic_dedup(walk):
    """Remove repeated consecutive vertices from an open cycle, including
    across the wraparound."""
    out = []
    for v in walk:
        if not out or out[-1] != v:
            out.append(v)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def complex_KP(P, rel=None, pairs=None):
    """The complex with a quad cell (e, e1, f, f1, e) per p-linked pair."""
    if rel is None:
        rel = relations(P)
    g = friendliness_graph(P, rel)
    if pairs is None:
        pairs = enumerate_linked_pairs(P, rel)
    cells = []
    for lp in pairs:
        cyc = _cyclic_dedup([lp.e, lp.e1, lp.f, lp.f1])
        if len(cyc) < 3:
            continue
        cells.append(Cell(tuple(cyc) + (cyc[0],), pair=lp, kind="quad"))
    return Complex2(P.size, g.edges, cells, algebra=P)


def complex_KP_prime(P, rel=None, pairs=None):
    """The subcomplex with triangles only for non-degenerate special pairs."""
    if rel is None:
        rel = relations(P)
    g = friendliness_graph(P, rel)
    if pairs is None:
        pairs = enumerate_linked_pairs(P, rel)
    cells = []
    seen = set()
    for lp in pairs:
        cls = classify_linked_pair(lp)
        if cls["degenerate"] or not cls["special"]:
            continue
        # (e, f) and (f, e) describe the same triangle with opposite
        # orientation; keep the first one found
        key = (lp.p, min(lp.e, lp.f), max(lp.e, lp.f))
        if key in seen:
            continue
        seen.add(key)
        if cls["nondegenerate_type"] == 2:
            b = (lp.e, lp.f, lp.f1, lp.e)
            cells.append(Cell(b, pair=lp, kind="triangle2"))
        elif cls["nondegenerate_type"] == 3:
            b = (lp.e, lp.e1, lp.f, lp.e)
            cells.append(Cell(b, pair=lp, kind="triangle3"))
    return Complex2(P.size, g.edges, cells, algebra=P)


def components(c):
    """Connected components of the 1-skeleton as sorted vertex lists,
    ordered by smallest vertex.  Asserts no cell spans components."""
    adj = c.adjacency()
    seen = [False] * c.n
    comps = []
    for start in range(c.n):
        if seen[start]:
            continue
        queue = [start]
        seen[start] = True
        comp = []
        while queue:
            v = queue.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    for cell in c.cells:
        ids = {where[v] for v in cell.boundary}
        if len(ids) != 1:
            raise AssertionError(f"cell {cell.boundary!r} spans components")
    return comps


def free_reduce(word):
    """Cancel adjacent inverse letters in a signed-index word."""
    out = []
    for l in word:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _cyclic_reduce(word):
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
        w = list(free_reduce(w))
    return tuple(w)


def _canonical_cyclic(word):
    """Smallest rotation over the word and its inverse, for dedup."""
    if not word:
        return ()
    best = None
    for w in (tuple(word), tuple(-l for l in reversed(word))):
        for i in range(len(w)):
            rot = w[i:] + w[:i]
            if best is None or rot < best:
                best = rot
    return best


@dataclass
class GroupPresentation:
    """pi1 presentation data for one component.

    Letters are 1-based and signed: +i / -i refer to generator i-1.  Each
    generator names a non-tree edge (u, v), oriented u -> v with u < v.
    Tree metadata (basepoint, parent map) stays attached so words can be
    expanded back into walks; ``kept`` maps the current generator index to
    the generator index of the presentation it was simplified from.
    """

    ngens: int
    relators: tuple
    gen_edges: tuple = ()
    basepoint: int = None
    tree_parent: dict = field(default_factory=dict)
    vertices: tuple = ()
    kept: tuple = None
    defs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kept is None:
            self.kept = tuple(range(self.ngens))

    def tree_path(self, v):
        """Vertex sequence from the basepoint to v along the tree."""
        path = [v]
        while path[-1] != self.basepoint:
            path.append(self.tree_parent[path[-1]])
        return path[::-1]

    def translate(self, word):
        """Rewrite a word over the pre-simplification generators into the
        surviving generators (apply eliminations, then renumber)."""
        out = []
        for l in word:
            g = abs(l) - 1
            if g in self.defs:
                rep = self.defs[g]
                out.extend(rep if l > 0 else [-x for x in reversed(rep)])
            else:
                out.append(l)
        renum = {orig: i for i, orig in enumerate(self.kept)}
        mapped = []
        for l in out:
            i = renum[abs(l) - 1]
            mapped.append(i + 1 if l > 0 else -(i + 1))
        return free_reduce(mapped)


def pi1_presentation(c, component, basepoint=None):
    """Spanning-tree presentation of pi1 of one component of the complex.

    ``component`` is either an index into components(c) or an iterable of
    vertices.  The tree is breadth-first from the basepoint (default: the
    smallest vertex); non-tree edges in sorted order give the generators.
    """
    comps = components(c)
    if isinstance(component, int):
        comp = comps[component]
    else:
        comp = sorted(int(v) for v in component)
        if comp not in comps:
            raise ValueError("not a component of the complex")
    if basepoint is None:
        basepoint = comp[0]
    if basepoint not in comp:
        raise ValueError(f"basepoint {basepoint} not in component")
    adj = c.adjacency()
    parent = {basepoint: None}
    order = [basepoint]
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    tree_edges = {
        (min(v, p), max(v, p)) for v, p in parent.items() if p is not None
    }
    comp_set = set(comp)
    nontree = [
        e for e in c.edges if e[0] in comp_set and e not in tree_edges
    ]
    gen_of = {e: i for i, e in enumerate(nontree)}

    def letter(a, b):
        e = (min(a, b), max(a, b))
        if e in tree_edges:
            return None
        i = gen_of[e]
        return i + 1 if a < b else -(i + 1)

    relators = []
    for cell in c.cells:
        if cell.boundary[0] not in comp_set:
            continue
        word = []
        for a, b in zip(cell.boundary, cell.boundary[1:]):
            l = letter(a, b)
            if l is not None:
                word.append(l)
        word = free_reduce(word)
        if word:
            relators.append(tuple(word))
    tp = {v: p for v, p in parent.items() if p is not None}
    return GroupPresentation(
        ngens=len(nontree),
        relators=tuple(relators),
        gen_edges=tuple(nontree),
        basepoint=basepoint,
        tree_parent=tp,
        vertices=tuple(comp),
    )


@dataclass
class Classification:
    """Group classification report.

    kind: 'trivial' | 'free' | 'finite' | 'unknown'.  ``abelian`` is
    (free rank, torsion invariants) from the Smith normal form and is
    filled in for every kind.  ``enumeration`` holds the completed coset
    table for finite groups.
    """

    kind: str
    order: int = None
    rank: int = None
    abelian: tuple = None
    enumeration: object = None

    def __str__(self):
        if self.kind == "free":
            return f"free(rank {self.rank})"
        if self.kind == "finite":
            return f"finite(order {self.order})"
        if self.kind == "unknown":
            return f"unknown(abelianization {self.abelian})"
        return self.kind


def abelian_invariants(ngens, relators):
    """(free rank, torsion tuple) of the abelianized group via Smith
    normal form of the exponent matrix."""
    if ngens == 0:
        return (0, ())
    if not relators:
        return (ngens, ())
    M = np.zeros((len(relators), ngens), dtype=np.int64)
    for i, r in enumerate(relators):
        for l in r:
            M[i, abs(l) - 1] += 1 if l > 0 else -1
    sm = smith_normal_form(sympy.Matrix(M.tolist()), domain=sympy.ZZ)
    diag = [abs(int(sm[i, i])) for i in range(min(sm.shape))]
    nonzero = [d for d in diag if d != 0]
    torsion = tuple(d for d in nonzero if d != 1)
    return (ngens - len(nonzero), torsion)


def tietze_simplify(g, budget=50_000):
    """Simplify a presentation and classify its group.

    Moves: free/cyclic reduction, empty-relator removal, duplicate removal,
    and elimination of a generator that occurs exactly once in some relator.
    Eliminations only remove generators, so surviving generators are a
    subset of the input ones (recorded in ``kept``; elimination words in
    ``defs``).  Classification: 0 generators -> trivial; no relators ->
    free(rank); completed coset enumeration -> finite(order); otherwise
    unknown with abelianization attached.
    """
    relators = [list(r) for r in g.relators]
    alive = set(range(g.ngens))
    defs = {}

    def substitute(word, gen, rep):
        out = []
        for l in word:
            if abs(l) - 1 == gen:
                out.extend(rep if l > 0 else [-x for x in reversed(rep)])
            else:
                out.append(l)
        return out

    steps = 0
    changed = True
    while changed and steps < 10_000:
        changed = False
        steps += 1
        cleaned = []
        seen = set()
        for r in relators:
            w = _cyclic_reduce(r)
            if not w:
                changed = changed or bool(r)
                continue
            key = _canonical_cyclic(w)
            if key in seen:
                changed = True
                continue
            seen.add(key)
            if tuple(w) != tuple(r):
                changed = True
            cleaned.append(list(w))
        relators = cleaned

        # elimination: find a relator containing some generator exactly once
        pick = None
        for idx in sorted(
            range(len(relators)), key=lambda i: (len(relators[i]), relators[i])
        ):
            counts = {}
            for l in relators[idx]:
                counts[abs(l) - 1] = counts.get(abs(l) - 1, 0) + 1
            singles = sorted(gen for gen, k in counts.items() if k == 1)
            if singles:
                pick = (idx, singles[0])
                break
        if pick is not None:
            idx, gen = pick
            r = relators[idx]
            pos = next(i for i, l in enumerate(r) if abs(l) - 1 == gen)
            rot = r[pos:] + r[:pos]
            head, rest = rot[0], rot[1:]
            # head * rest = 1  =>  gen = rest^-1 (if head positive) or rest
            if head > 0:
                rep = [-x for x in reversed(rest)]
            else:
                rep = list(rest)
            rep = list(free_reduce(rep))
            relators = [
                list(free_reduce(substitute(w, gen, rep)))
                for i, w in enumerate(relators)
                if i != idx
            ]
            for k in list(defs):
                defs[k] = list(free_reduce(substitute(defs[k], gen, rep)))
            defs[gen] = rep
            alive.discard(gen)
            changed = True

    kept_in = tuple(sorted(alive))          # surviving input-level gen ids
    renum = {orig: i for i, orig in enumerate(kept_in)}
    out_relators = []
    for r in relators:
        w = []
        for l in r:
            i = renum[abs(l) - 1]
            w.append(i + 1 if l > 0 else -(i + 1))
        w = _cyclic_reduce(w)
        if w:
            out_relators.append(tuple(w))
    simplified = GroupPresentation(
        ngens=len(kept_in),
        relators=tuple(out_relators),
        gen_edges=tuple(g.gen_edges[i] for i in kept_in) if g.gen_edges else (),
        basepoint=g.basepoint,
        tree_parent=g.tree_parent,
        vertices=g.vertices,
        kept=tuple(g.kept[i] for i in kept_in),
        defs={k: list(v) for k, v in defs.items()},
    )

    ab = abelian_invariants(simplified.ngens, simplified.relators)
    if simplified.ngens == 0:
        cls = Classification(kind="trivial", order=1, abelian=(0, ()))
    elif not simplified.relators:
        cls = Classification(kind="free", rank=simplified.ngens, abelian=ab)
    elif ab[0] >= 1:
        # infinite abelianization: coset enumeration cannot terminate
        cls = Classification(kind="unknown", abelian=ab)
    else:
        try:
            enum = enumerate_group(
                simplified.ngens, simplified.relators, budget=budget
            )
            if enum.size == 1:
                cls = Classification(kind="trivial", order=1, abelian=ab,
                                     enumeration=enum)
            else:
                cls = Classification(kind="finite", order=enum.size,
                                     abelian=ab, enumeration=enum)
        except BudgetExceeded:
            cls = Classification(kind="unknown", abelian=ab)
    return simplified, cls


class _Undecided:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undecided"

    def __bool__(self):
        return False


UNDECIDED = _Undecided()


class WordSolver:
    """Canonical-form oracle for one component group."""

    __slots__ = ("presentation", "classification")

    def __init__(self, presentation, classification):
        self.presentation = presentation
        self.classification = classification

    @property
    def decisive(self):
        return self.classification.kind in ("trivial", "free", "finite")

    def normalize(self, word):
        kind = self.classification.kind
        if kind == "trivial":
            return ()
        if kind == "free":
            return free_reduce(word)
        if kind == "finite":
            enum = self.classification.enumeration
            encoded = [
                2 * (abs(l) - 1) + (0 if l > 0 else 1) for l in word
            ]
            c = enum.act(0, encoded)
            rep = enum.reps[c]
            return tuple(
                x // 2 + 1 if x % 2 == 0 else -(x // 2 + 1) for x in rep
            )
        return UNDECIDED


def word_solver(presentation, classification):
    return WordSolver(presentation, classification)
