"""A guided tour of the smallest interesting projection algebra.

Four projections p, q, r, e: the first three are mutually friendly, e sits
above p and q but is friendly with neither of them, and conjugating r
through e lands on q.  Small enough to print everything, rich enough to
exercise the whole pipeline.
"""

from pgsemi import (
    ChainSemigroupHandle,
    check_derived_laws,
    complex_KP_prime,
    components,
    kinyon_algebra,
    relations,
    validate_axioms,
)


def show_matrix(name, M):
    print(f"{name}:")
    for row in M.astype(int):
        print("   " + "".join(str(x) for x in row))


def main():
    P = kinyon_algebra()
    print(f"algebra on {P.size} projections:",
          ", ".join(P.label(p) for p in range(P.size)))
    show_matrix("theta (row p maps q to q theta_p)", P.theta)

    assert validate_axioms(P) == []
    assert check_derived_laws(P) == []
    print("axioms and derived laws: all pass\n")

    rel = relations(P)
    show_matrix("order (p <= q)", rel.leq)
    show_matrix("friendly", rel.friendly)

    c = complex_KP_prime(P, rel)
    comps = components(c)
    print(f"\ncomplex: {c.n} vertices, {len(c.edges)} edges, "
          f"{len(c.cells)} cell(s), components {comps}")
    walk = " -> ".join(P.label(v) for v in c.cells[0].boundary)
    print(f"the one triangle: {walk}")

    h = ChainSemigroupHandle(P)
    elems = h.enumerate()
    print(f"\nchain semigroup has {len(elems)} elements:")
    for x in elems:
        print("  ", x)

    r, e = h.projection_chain(2), h.projection_chain(3)
    re = h.product(r, e)
    print(f"\nr (*) e = {re}  (the pair [[r, q]]: e is not friendly with r, "
          "so the product routes through q)")
    print(f"(r (*) e)* = {h.star(re)}")

    print("\nevery element is an idempotent pair here:")
    print("  ", sorted(h.idempotents(), key=lambda c: c.sort_key()) == elems)


if __name__ == "__main__":
    main()
