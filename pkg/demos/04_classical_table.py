"""Batch run over the classical links with up to seven crossings.

One fixed data vector, eighteen links, four polynomials per row.  Equal
rows (L6a2/L6a3, L7a3/L7a4, L7a5/L7a6) show the invariant does not
separate everything; rows like L6a1 vs L7a2 differ only in the path
pair, showing the path polynomials see strictly more than the edge
ones.
"""

from knotquiver import (
    CoeffGroup,
    DataVector,
    build_representation,
    catalog_names,
    edge_char_polynomial,
    edge_matrix_polynomial,
    get_diagram,
    path_char_polynomial,
    path_matrix_polynomial,
    swap3,
)

data = DataVector(
    algebra=swap3(),
    coeff=CoeffGroup(3),
    vectors=[[0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]],
    endos=[(2, 2, 1)],
)

rows = []
for name in catalog_names():
    if not name.startswith("L"):
        continue
    rq = build_representation(get_diagram(name), data)
    rows.append((
        name,
        edge_char_polynomial(rq).render(),
        edge_matrix_polynomial(rq).render(),
        path_char_polynomial(rq).render(),
        path_matrix_polynomial(rq).render(),
    ))

w = max(len(r[1]) for r in rows)
print("%-6s %-*s %s" % ("link", w, "edge characteristic", "edge matrix"))
for name, chi_e, pm_e, _, _ in rows:
    print("%-6s %-*s %s" % (name, w, chi_e, pm_e))

print()
w = max(len(r[3]) for r in rows)
print("%-6s %-*s %s" % ("link", w, "path characteristic", "path matrix"))
for name, _, _, chi_p, pm_p in rows:
    print("%-6s %-*s %s" % (name, w, chi_p, pm_p))
