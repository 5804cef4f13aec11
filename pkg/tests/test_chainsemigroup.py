"""The chain semigroup handle: products, star, size, subgroups, morphisms."""

import random

import numpy as np
import pytest

from pgsemi.chains import Path
from pgsemi.chainsemigroup import INFINITE, UNKNOWN, star_semigroup_of
from pgsemi.errors import CapExceeded, NotAMorphism
from pgsemi.semigroups import validate_star_semigroup

from conftest import FINITE_SIZES, bundle, chain_pool, handle, random_chain


def test_kinyon_size_and_inventory():
    h = handle("kinyon")
    assert h.size() == 10
    elems = h.enumerate()
    assert len(elems) == 10
    idem = h.idempotents()
    assert len(idem) == 10
    projections = [c for c in idem if c.dom == c.cod]
    assert len(projections) == 4
    # the other six idempotents are the proper friendly pairs
    assert len([c for c in idem if c.dom != c.cod]) == 6
    assert set(idem) == set(elems)


def test_kinyon_product_of_unfriendly_projections():
    h = handle("kinyon")
    r = h.projection_chain(2)
    e = h.projection_chain(3)
    assert h.product(r, e) == h.idempotent_chain(2, 1)
    assert h.star(h.product(r, e)) == h.idempotent_chain(1, 2)


def test_kinyon_components_are_trivial():
    h = handle("kinyon")
    for p in range(4):
        assert str(h.component_group(p)) == "trivial"


def test_star_is_an_involution_and_antihomomorphism():
    rng = random.Random(7)
    for src in ("kinyon", "band:3", "tl:4", "motzkin:3"):
        h = handle(src)
        for _ in range(40):
            a = random_chain(h, rng)
            b = random_chain(h, rng)
            assert h.star(h.star(a)) == a
            assert h.star(h.product(a, b)) == h.product(h.star(b), h.star(a))
            ab = h.product(a, b)
            assert h.product(h.product(ab, h.star(ab)), ab) == ab


def test_projection_chains_are_fixed_by_star():
    h = handle("tl:3")
    for p in range(h.algebra.size):
        c = h.projection_chain(p)
        assert h.star(c) == c
        assert h.product(c, c) == c


def test_idempotent_chains_are_idempotent():
    for src in ("kinyon", "band:4", "tl:4"):
        h = handle(src)
        for c in h.idempotents():
            assert h.product(c, c) == c


def test_theta_map_matches_a_manual_fold():
    rng = random.Random(3)
    h = handle("tl:4")
    T = h.algebra.theta
    for _ in range(30):
        c = random_chain(h, rng)
        m = np.arange(h.algebra.size)
        for p in h.expand(c).verts:
            m = T[p][m]
        assert np.array_equal(h.theta_map(c), m)


def test_theta_map_of_a_projection_is_its_row():
    h = handle("kinyon")
    T = h.algebra.theta
    for p in range(4):
        assert np.array_equal(h.theta_map(h.projection_chain(p)), T[p])


def test_square_band_multiplies_like_a_rectangular_band():
    h = handle("band:2")
    assert h.size() == 4
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    lhs = h.product(h.idempotent_chain(a, b), h.idempotent_chain(c, d))
                    assert lhs == h.idempotent_chain(a, d)


def test_larger_bands_are_infinite():
    assert handle("band:3").size() is INFINITE
    assert handle("band:4").size() is INFINITE


def test_finite_sizes():
    for src, n in FINITE_SIZES.items():
        assert handle(src).size() == n


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        handle("band:3").enumerate(cap=25)
    with pytest.raises(ValueError):
        handle("tl:3").enumerate(cap=2)


def test_normalize_expand_roundtrip():
    for src in ("kinyon", "tl:4"):
        h = handle(src)
        for c in h.enumerate():
            assert h.normalize(h.expand(c)) == c


def test_normalize_rejects_foreign_paths():
    h = handle("kinyon")
    other = bundle("tl:3").algebra
    with pytest.raises(ValueError):
        h.normalize(Path(other, (0, 1)))


def test_band_maximal_subgroups():
    # free of rank (k-1)(k-2)/2 at every projection of the k x k square band
    for k in (2, 3, 4):
        h = handle(f"band:{k}")
        want = (k - 1) * (k - 2) // 2
        for p in range(h.algebra.size):
            pres, cls = h.maximal_subgroup(p)
            if want == 0:
                assert cls.kind == "trivial"
            else:
                assert cls.kind == "free" and cls.rank == want


def test_extend_morphism_onto_tl3_is_a_star_isomorphism():
    b = bundle("tl:3")
    h = handle("tl:3")
    m = h.extend_morphism(b.semigroup, b.embed)
    elems = h.enumerate()
    images = [m(c) for c in elems]
    assert sorted(images) == list(range(b.semigroup.size))
    S = b.semigroup
    for c in elems:
        assert m(h.star(c)) == S.star_of(m(c))
        for d in elems:
            assert m(h.product(c, d)) == S.product(m(c), m(d))


def test_extend_morphism_rejects_non_projection_targets():
    b = bundle("tl:3")
    h = handle("tl:3")
    phi = b.embed.copy()
    # an idempotent that is not a projection (or any non-projection element)
    non_proj = [
        s for s in range(b.semigroup.size)
        if s not in set(int(x) for x in b.embed)
    ]
    phi[1] = non_proj[0]
    with pytest.raises(NotAMorphism):
        h.extend_morphism(b.semigroup, phi)


def test_extend_morphism_rejects_theta_breakers():
    b = bundle("tl:3")
    h = handle("tl:3")
    phi = b.embed.copy()
    # collapsing one hook onto the identity is not compatible with theta
    # (swapping the two hooks would be: that flip is an automorphism)
    phi[0] = phi[2]
    with pytest.raises(NotAMorphism):
        h.extend_morphism(b.semigroup, phi)


def test_star_semigroup_of_kinyon_validates():
    h = handle("kinyon")
    S, elems = star_semigroup_of(h)
    assert S.size == 10
    assert validate_star_semigroup(S) == []
    assert len(elems) == 10
    # labels carry the chain reprs
    assert S.labels[0] == repr(elems[0])
    # table multiplication agrees with handle multiplication
    idx = {c: i for i, c in enumerate(elems)}
    for c in elems:
        for d in elems:
            assert S.product(idx[c], idx[d]) == idx[h.product(c, d)]


def test_named_singletons():
    assert repr(INFINITE) == "Infinite"
    assert repr(UNKNOWN) == "Unknown"
    assert INFINITE is not UNKNOWN


def test_chain_repr_mentions_endpoints():
    h = handle("kinyon")
    c = h.idempotent_chain(2, 1)
    assert "2" in repr(c) and "1" in repr(c)
