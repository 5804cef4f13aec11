"""Release checklist: one test per shipping criterion, one line per verdict.

Run with ``pytest tests/test_acceptance.py -v`` to get the pass/fail line
for each numbered criterion:

1.  axiom engine green on every cataloged algebra, in seconds;
2.  the ten-element example: exact inventory, products, and cell;
3.  square bands: finite 2x2 case, free rank 1 and Infinite at 3x3;
4.  planar diagram monoids n <= 5: trivial components, exact sizes,
    identity extension is a *-isomorphism, under two minutes;
5.  Motzkin degree 3: simply connected, injective extension onto the
    idempotent-generated subsemigroup;
6.  Motzkin degree 4: 35 vertices, 11 components, the 12-vertex
    component has fundamental group Z, size Infinite;
7.  presentation families sound and size-exact, straightener agrees
    with product evaluation on 10,000 seeded words per algebra;
8.  boset roundtrip table-for-table, semigroup comparisons on diagram,
    random adjacency, and chain-built instances;
9.  property suites: associativity, involution, composite-operation
    law, expand/normalize, and the quad-from-triangles decomposition.

An undecided equality anywhere is an error, never a skip.
"""

import random
import time

import networkx as nx
import numpy as np
import pytest

from pgsemi.boset import boset_of, compare_with_semigroup_boset, \
    projection_algebra_of_boset
from pgsemi.catalog import adjacency_algebra, parse_source, \
    random_adjacency_graph
from pgsemi.chains import LinkedPair, classify_linked_pair, \
    enumerate_linked_pairs
from pgsemi.chainsemigroup import INFINITE, star_semigroup_of
from pgsemi.presentations import presentation_RE, presentation_RE2, \
    presentation_RP, verify_presentation, word_to_friendly_path
from pgsemi.projections import check_derived_laws, relations, validate_axioms
from pgsemi.semigroups import AdjacencyGraph, subsemigroup_closure
from pgsemi.topology import free_reduce, friendliness_graph

from conftest import FLEET, bundle, chain_pool, handle, random_chain


def _assert_clean(P, name):
    bad = validate_axioms(P) + check_derived_laws(P, max_chain=3)
    assert not bad, f"{name}: {bad[0]}"


def test_criterion_1_axiom_engine():
    t0 = time.monotonic()
    checked = 0
    for n in range(1, 6):
        _assert_clean(bundle(f"tl:{n}").algebra, f"tl:{n}")
        checked += 1
    for n in range(2, 5):
        _assert_clean(bundle(f"motzkin:{n}").algebra, f"motzkin:{n}")
        checked += 1
    for n in range(2, 5):
        _assert_clean(bundle(f"brauer:{n}").algebra, f"brauer:{n}")
        checked += 1
    _assert_clean(bundle("kinyon").algebra, "kinyon")
    checked += 1
    atlas = [G for G in nx.graph_atlas_g() if 1 <= G.number_of_nodes() <= 6]
    assert len(atlas) == 208
    for i, G in enumerate(atlas):
        ab = adjacency_algebra(
            AdjacencyGraph(G.number_of_nodes(), list(G.edges())))
        _assert_clean(ab.algebra, f"atlas graph {i}")
        checked += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    print(f"PASS criterion 1: axioms and derived laws on {checked} "
          f"algebras in {elapsed:.1f}s")


def test_criterion_2_ten_element_example():
    h = handle("kinyon")
    assert h.size() == 10
    elems = h.enumerate()
    projections = [c for c in elems if c.dom == c.cod and not c.word]
    idems = [c for c in elems if h.product(c, c) == c]
    assert len(projections) == 4
    assert len(idems) == 10
    assert len([c for c in idems if c not in projections]) == 6
    # p, q, r, e are projections 0..3: the unfriendly product r (*) e
    # lands on the pair [[r, q]]
    r, e = h.projection_chain(2), h.projection_chain(3)
    assert h.product(r, e) == h.idempotent_chain(2, 1)
    cells = h.complex.cells
    assert len(cells) == 1
    assert set(cells[0].boundary) == {0, 1, 2}
    print("PASS criterion 2: 10 elements, 4 + 6 idempotent inventory, "
          "r (*) e = [[r, q]], one cell on {p, q, r}")


def test_criterion_3_square_bands():
    h2 = handle("band:2")
    assert h2.size() == 4
    for comp in h2.components:
        assert comp.classification.kind == "trivial"
    h3 = handle("band:3")
    for p in range(3):
        pres, cls = h3.maximal_subgroup(p)
        assert cls.kind == "free" and cls.rank == 1
    assert h3.size() is INFINITE
    print("PASS criterion 3: 2x2 gives 4 elements with trivial groups; "
          "3x3 gives Z subgroups and an infinite semigroup")


def test_criterion_4_planar_diagram_monoids():
    t0 = time.monotonic()
    sizes = {}
    for n in (2, 3, 4, 5):
        b = bundle(f"tl:{n}")
        h = handle(f"tl:{n}")
        for comp in h.components:
            assert comp.classification.kind == "trivial"
        S = b.semigroup
        assert h.size() == S.size
        sizes[n] = S.size
        phi = h.extend_morphism(S, b.embed)
        elems = h.enumerate()
        images = [phi(c) for c in elems]
        assert sorted(images) == list(range(S.size))
        index = dict(zip(elems, images))
        for c in elems:
            assert index[h.star(c)] == S.star_of(index[c])
            for d in elems:
                assert index[h.product(c, d)] == S.product(index[c], index[d])
    assert (sizes[3], sizes[4], sizes[5]) == (5, 14, 42)
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    print(f"PASS criterion 4: sizes {sizes} with *-isomorphic identity "
          f"extensions in {elapsed:.1f}s")


def test_criterion_5_motzkin_3():
    b = bundle("motzkin:3")
    h = handle("motzkin:3")
    for comp in h.components:
        assert comp.classification.kind == "trivial"
    S = b.semigroup
    phi = h.extend_morphism(S, b.embed)
    elems = h.enumerate()
    images = [phi(c) for c in elems]
    assert len(set(images)) == len(elems)
    generated = subsemigroup_closure(S, S.idempotents())
    assert sorted(images) == sorted(generated)
    print(f"PASS criterion 5: injective extension, image is the "
          f"{len(generated)}-element idempotent-generated subsemigroup")


def test_criterion_6_motzkin_4():
    h = handle("motzkin:4")
    assert h.complex.n == 35
    assert len(h.components) == 11
    twelve = [c for c in h.components if len(c.vertices) == 12]
    assert len(twelve) == 1
    cls = twelve[0].classification
    assert cls.kind == "free" and cls.rank == 1
    assert cls.abelian == (1, ())
    assert h.size() is INFINITE
    print("PASS criterion 6: 35 vertices, 11 components, 12-vertex "
          "component has group Z, size Infinite")


def test_criterion_7_presentations():
    algebras = ("kinyon", "band:1", "band:2", "tl:2", "tl:3", "tl:4")
    words = 10_000
    for src in algebras:
        h = handle(src)
        P = h.algebra
        families = (presentation_RP(P), presentation_RE(P, h),
                    presentation_RE2(P, h))
        for pres in families:
            r = verify_presentation(P, pres, "soundness", handle=h)
            assert bool(r), f"{src} {pres.name}: {r.summary()}"
        expected = h.size()
        assert isinstance(expected, int)
        for pres in families:
            r = verify_presentation(P, pres, "size", handle=h)
            assert bool(r), f"{src} {pres.name}: {r.summary()}"
            assert r.details["classes"] == expected
        rng = random.Random(hash(src) & 0xFFFF)
        for _ in range(words):
            w = [rng.randrange(P.size) for _ in range(rng.randint(1, 8))]
            path = word_to_friendly_path(P, w)
            acc = h.projection_chain(w[0])
            for p in w[1:]:
                acc = h.product(acc, h.projection_chain(p))
            assert h.normalize(path) == acc
    print(f"PASS criterion 7: three families sound and size-exact, "
          f"{words} straightened words agree on each of {len(algebras)} "
          f"algebras")


def test_criterion_8_boset_roundtrip():
    for src in FLEET:
        P = bundle(src).algebra
        back = projection_algebra_of_boset(boset_of(P, handle(src)))
        assert np.array_equal(back.theta, P.theta), src
    b3 = bundle("tl:3")
    assert compare_with_semigroup_boset(b3.algebra, b3.semigroup).ok
    rng = np.random.default_rng(2024)
    for i in range(10):
        G = random_adjacency_graph(rng)
        ab = adjacency_algebra(G, name=f"g{i}")
        assert compare_with_semigroup_boset(ab.algebra, ab.semigroup).ok
    hk = handle("kinyon")
    S, _ = star_semigroup_of(hk)
    assert compare_with_semigroup_boset(hk.algebra, S).ok
    print(f"PASS criterion 8: table-for-table roundtrip on {len(FLEET)} "
          f"algebras; semigroup comparisons on tl:3, 10 random adjacency "
          f"instances, and the chain-built 10-element example")


def _edge_letters(P, rel):
    g = friendliness_graph(P, rel)
    idx = {e: i + 1 for i, e in enumerate(g.edges)}

    def letter(a, b):
        i = idx[(min(a, b), max(a, b))]
        return i if a < b else -i

    return letter


def _walk_word(letter, verts):
    return [letter(a, b) for a, b in zip(verts, verts[1:])]


def test_criterion_9_property_suites():
    triples = 10_000
    expansions = 1_000
    quads = 0
    for src in FLEET:
        h = handle(src)
        P = h.algebra
        T = P.theta
        pool = chain_pool(src)
        rng = random.Random(len(src))
        for _ in range(triples):
            a, b, c = (rng.choice(pool) for _ in range(3))
            assert h.product(h.product(a, b), c) == \
                h.product(a, h.product(b, c))
        for a in pool:
            assert h.star(h.star(a)) == a
            assert h.product(h.product(a, h.star(a)), a) == a
            for b in pool[:12]:
                assert h.star(h.product(a, b)) == \
                    h.product(h.star(b), h.star(a))
        # the double product of projections lands on the mapped projection
        for p in range(P.size):
            cp = h.projection_chain(p)
            for q in range(P.size):
                lhs = h.product(h.product(cp, h.projection_chain(q)), cp)
                assert lhs == h.projection_chain(int(T[p, q]))
        for _ in range(expansions):
            c = random_chain(h, rng)
            assert h.normalize(h.expand(c)) == c
        # every nondegenerate quad is the conjugated product of the two
        # special triangles it restricts to
        rel = h.rel
        letter = _edge_letters(P, rel)
        pairs = enumerate_linked_pairs(P, rel)
        have = {(lp.p, lp.e, lp.f) for lp in pairs}
        for lp in pairs:
            if classify_linked_pair(lp)["nondegenerate_type"] != 1:
                continue
            e, f, e1, f1, p = lp.e, lp.f, lp.e1, lp.f1, lp.p
            assert (p, e1, f) in have and (p, e, f1) in have
            cB = classify_linked_pair(LinkedPair(P, p, e1, f))
            cA = classify_linked_pair(LinkedPair(P, p, e, f1))
            assert cB["special"] and cB["nondegenerate_type"] == 2
            assert cA["special"] and cA["nondegenerate_type"] == 3
            quad = _walk_word(letter, (e, e1, f, f1, e))
            triB = _walk_word(letter, (e1, f, f1, e1))
            triA = _walk_word(letter, (e, e1, f1, e))
            alpha = letter(e, e1)
            assert free_reduce(quad) == \
                free_reduce([alpha] + triB + [-alpha] + triA)
            quads += 1
    print(f"PASS criterion 9: {triples} triples, involution laws, "
          f"composite-operation law, {expansions} expansions per algebra; "
          f"{quads} quad decompositions across the fleet")
