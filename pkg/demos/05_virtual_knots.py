"""Virtual knots: mirror detection and a three-class table.

Virtual crossings are left implicit in a signed Gauss code: whatever
cannot be realized planarly is virtual.  The order-2 biquandle whose
both operations flip the element colors every knot exactly twice, so
all quivers here have the same shape; the decoration still separates
knots into classes and tells a knot from its mirror image.
"""

from knotquiver import (
    CoeffGroup,
    DataVector,
    build_representation,
    catalog_names,
    constant_action_biquandle_z2,
    counting_invariant,
    edge_matrix_polynomial,
    get_diagram,
    mirror,
    path_matrix_polynomial,
)

data = DataVector(
    algebra=constant_action_biquandle_z2(),
    coeff=CoeffGroup(3),
    vectors=[[1, 0], [0, 1]],
    endos=[(1, 2), (2, 1)],
)

knot = get_diagram("2.1")
print("2.1 colorings:", counting_invariant(knot, data.algebra))

rq = build_representation(knot, data)
rq_m = build_representation(mirror(knot), data)
print("2.1        edge matrix:", edge_matrix_polynomial(rq).render())
print("mirror 2.1 edge matrix:", edge_matrix_polynomial(rq_m).render())
print("2.1        path matrix:", path_matrix_polynomial(rq).render())
print("mirror 2.1 path matrix:", path_matrix_polynomial(rq_m).render())
print()

# group the tabulated knots by the path matrix polynomial
classes = {}
for name in catalog_names():
    if "." not in name:
        continue
    rq = build_representation(get_diagram(name), data)
    classes.setdefault(path_matrix_polynomial(rq).render(), []).append(name)
for value in sorted(classes):
    print("%-14s %s" % (value, " ".join(classes[value])))
