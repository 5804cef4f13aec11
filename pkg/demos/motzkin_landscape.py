"""Two Motzkin monoids, two different stories.

Degree 3: every component of the complex is simply connected, the chain
semigroup is finite, and the identity extension embeds it onto the
idempotent-generated subsemigroup of M_3.  Degree 4: one component wakes
up with fundamental group Z and the chain semigroup turns infinite, even
though M_4 itself is finite.
"""

from collections import Counter

from pgsemi import ChainSemigroupHandle, parse_source, subsemigroup_closure


def main():
    b3 = parse_source("motzkin:3")
    h3 = ChainSemigroupHandle(b3.algebra)
    S = b3.semigroup
    print(f"M_3: |M_3| = {S.size}, projections {b3.algebra.size}, "
          f"components {len(h3.components)}, all trivial: "
          f"{all(c.classification.kind == 'trivial' for c in h3.components)}")
    phi = h3.extend_morphism(S, b3.embed)
    elems = h3.enumerate()
    images = sorted(phi(c) for c in elems)
    generated = sorted(subsemigroup_closure(S, S.idempotents()))
    print(f"  chains = {len(elems)}, injective image = "
          f"{len(set(images))}, idempotent-generated subsemigroup = "
          f"{len(generated)}, equal: {images == generated}")

    b4 = parse_source("motzkin:4")
    h4 = ChainSemigroupHandle(b4.algebra)
    sizes = Counter(len(c.vertices) for c in h4.components)
    print(f"\nM_4: projections {b4.algebra.size}, "
          f"components {len(h4.components)} "
          f"(vertex counts {dict(sorted(sizes.items()))})")
    for comp in h4.components:
        cls = comp.classification
        if cls.kind != "trivial":
            print(f"  component {comp.index}: {len(comp.vertices)} vertices, "
                  f"group {cls}")
    print(f"  size of the chain semigroup: {h4.size()} "
          f"(while |M_4| = {b4.semigroup.size})")


if __name__ == "__main__":
    main()
