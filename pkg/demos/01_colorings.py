"""Coloring a link diagram by a finite quandle.

A coloring assigns an element of the algebra to every semiarc so that
each crossing relates the four touching semiarcs through the two
operations.  The number of colorings is already a link invariant.
"""

from knotquiver import (
    colorings,
    core_cyclic,
    counting_invariant,
    get_diagram,
    parse_gauss,
    swap3,
)

# the four-crossing two-component link from the bundled catalog
link = get_diagram("L4a1")
bq = core_cyclic(4)
print("diagram:", link.name, "with", len(link.crossings), "crossings")
print("algebra:", bq)

cols = colorings(link, bq)
print("colorings by the order-4 core quandle:", len(cols))
for col in cols[:4]:
    print("  ", col)
print("   ...")

# counting_invariant is just the size of that homset
assert counting_invariant(link, bq) == 16

# a knot given inline as a signed Gauss code
trefoil = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+", name="trefoil")
print("trefoil colorings by swap3:", counting_invariant(trefoil, swap3()))
print("trefoil colorings by core-3:", counting_invariant(trefoil, core_cyclic(3)))
