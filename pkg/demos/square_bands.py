"""How free chain semigroups blow up: square bands.

The k x k square band has k projections, all friendly, order trivial.
Its friendliness graph is complete, there are no cells, and the
fundamental group is free of rank (k-1)(k-2)/2.  At k = 2 that rank is 0
and the chain semigroup is the band itself; from k = 3 on it is infinite,
one copy of Z (or a bigger free group) sitting inside each H-class.
"""

from pgsemi import ChainSemigroupHandle, parse_source


def main():
    for k in (2, 3, 4, 5):
        h = ChainSemigroupHandle(parse_source(f"band:{k}").algebra)
        pres, cls = h.maximal_subgroup(0)
        print(f"k = {k}: size {h.size()}, maximal subgroup {cls} "
              f"(expect free rank {(k - 1) * (k - 2) // 2})")

    print()
    h = ChainSemigroupHandle(parse_source("band:2").algebra)
    print("k = 2 multiplies like a rectangular band:")
    for a in range(2):
        for b in range(2):
            row = []
            for c in range(2):
                for d in range(2):
                    prod = h.product(h.idempotent_chain(a, b),
                                     h.idempotent_chain(c, d))
                    row.append(f"[[{a}{b}]][[{c}{d}]]={prod}")
            print("  " + "  ".join(row))

    print()
    h3 = ChainSemigroupHandle(parse_source("band:3").algebra)
    a = h3.idempotent_chain(0, 1)
    b = h3.idempotent_chain(1, 2)
    c = h3.idempotent_chain(2, 0)
    loop = h3.product(h3.product(a, b), c)
    print("k = 3: the loop [[0,1]][[1,2]][[2,0]] has a nontrivial word,")
    print(f"  {loop},")
    x = loop
    for i in (2, 3, 4):
        x = h3.product(x, loop)
        print(f"  and its power {i} is {x}: the word keeps growing,")
    print("  so the loop has infinite order.")


if __name__ == "__main__":
    main()
