"""Biquandle colorings of oriented diagrams and their chain vectors.

A coloring assigns an algebra element to every semiarc so that at each
positive crossing under_out = under(under_in, over_in) and
over_out = over(over_in, under_in), and at each negative crossing the
same relations hold with in and out swapped.  Colorings are stored as
tuples indexed by semiarc label.
"""


def _constraints(diagram):
    # each crossing as (p1, p2, q1, q2) with (q1, q2) = through(p1, p2)
    cons = []
    for c in diagram.crossings:
        if c.sign > 0:
            cons.append((c.under_in, c.over_in, c.under_out, c.over_out))
        else:
            cons.append((c.under_out, c.over_out, c.under_in, c.over_in))
    return cons


def colorings(diagram, bq):
    """All colorings in lexicographic order."""
    n = diagram.n_semiarcs
    cons = _constraints(diagram)
    touching = {}
    for idx, quad in enumerate(cons):
        for s in set(quad):
            touching.setdefault(s, []).append(idx)
    color = [0] * n
    out = []

    def propagate(queue, trail):
        while queue:
            idx = queue.pop()
            a, b, c, d = cons[idx]
            va, vb, vc, vd = color[a], color[b], color[c], color[d]
            if va and vb:
                q1, q2 = bq.through(va, vb)
                derived = ((c, q1), (d, q2))
            elif vc and vd:
                p1, p2 = bq.through_inv(vc, vd)
                derived = ((a, p1), (b, p2))
            elif va and vd:
                p2 = bq.over_inv(vd, va)
                derived = ((b, p2), (c, bq.under(va, p2)))
            elif vb and vc:
                p1 = bq.under_inv(vc, vb)
                derived = ((a, p1), (d, bq.over(vb, p1)))
            else:
                continue
            for s, v in derived:
                if color[s] == 0:
                    color[s] = v
                    trail.append(s)
                    queue.extend(j for j in touching[s] if j != idx)
                elif color[s] != v:
                    return False
        return True

    def search(pos):
        while pos < n and color[pos]:
            pos += 1
        if pos == n:
            out.append(tuple(color))
            return
        for v in bq.elements:
            trail = [pos]
            color[pos] = v
            if propagate(list(touching.get(pos, ())), trail):
                search(pos + 1)
            for s in trail:
                color[s] = 0

    search(0)
    return sorted(out)


def counting_invariant(diagram, bq):
    return len(colorings(diagram, bq))


def pair_basis(bq):
    """Nondegenerate element pairs (x, y), x != y, in lexicographic order."""
    return [
        (x, y) for x in bq.elements for y in bq.elements if x != y
    ]


def chain_vector(diagram, bq, coloring):
    """Integer 2-chain of a coloring over the nondegenerate pair basis.

    Positive crossings contribute +(under_in color, over_out color),
    negative ones -(under_out color, over_in color); pairs with equal
    entries are degenerate and dropped.
    """
    basis = pair_basis(bq)
    index = {p: i for i, p in enumerate(basis)}
    vec = [0] * len(basis)
    for c in diagram.crossings:
        if c.sign > 0:
            pair = (coloring[c.under_in], coloring[c.over_out])
        else:
            pair = (coloring[c.under_out], coloring[c.over_in])
        if pair[0] != pair[1]:
            vec[index[pair]] += c.sign
    return vec


def push_forward(coloring, endo):
    """Apply an endomorphism (image tuple) to every semiarc color."""
    return tuple(endo[v - 1] for v in coloring)
