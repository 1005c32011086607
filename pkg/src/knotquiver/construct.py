"""Diagram builders: braid closures, rational links, pretzel links.

The twist-based builders first assemble an unoriented planar diagram as
a list of crossing corner tuples and then orient it.  A corner tuple
(e0, e1, e2, e3) lists the four edges around a crossing in
counterclockwise order with the under strand occupying corners 0 and 2.
Once strand directions are traced, the tuple is rotated so that corner
0 is the incoming under edge; the over strand then enters either at
corner 3 (a positive crossing) or at corner 1 (a negative one).
"""

import itertools

from .diagram import Crossing, LinkDiagram, ValidationError


def braid_closure(word, strands=None, name=None):
    """Close a braid word, e.g. [1, 1] for the Hopf link.

    Letters are nonzero ints: +i crosses strand i under strand i+1 with
    positive sign, -i crosses strand i+1 under strand i with negative
    sign.  Every strand must take part in at least one crossing, else
    the closure would have a split unknot component.
    """
    if not word:
        raise ValidationError("empty braid word")
    k = strands or (max(abs(x) for x in word) + 1)
    if any(x == 0 or abs(x) >= k for x in word):
        raise ValidationError("braid letters must be nonzero and below strand count")
    if set(range(1, k)) - {abs(x) for x in word}:
        raise ValidationError("unused strand position: closure would be split")
    current = list(range(k))  # semiarc label now occupying each position
    fresh = itertools.count(k)
    raw = []
    for letter in word:
        i = abs(letter) - 1
        a, b = current[i], current[i + 1]
        out1, out2 = next(fresh), next(fresh)
        if letter > 0:
            # position i dives under position i+1, the strands swap places
            raw.append(Crossing(1, under_in=a, over_in=b, under_out=out1, over_out=out2))
            current[i], current[i + 1] = out2, out1
        else:
            raw.append(Crossing(-1, under_in=b, over_in=a, under_out=out1, over_out=out2))
            current[i], current[i + 1] = out1, out2
    # closing the braid identifies each final label with its initial one
    relabel = {current[p]: p for p in range(k)}
    word_tag = "".join(("+" if x > 0 else "-") + str(abs(x)) for x in word)
    return _compress(
        [_map_crossing(c, relabel) for c in raw], name or "braid" + word_tag
    )


def _map_crossing(c, mapping):
    return Crossing(
        c.sign,
        under_in=mapping.get(c.under_in, c.under_in),
        over_in=mapping.get(c.over_in, c.over_in),
        under_out=mapping.get(c.under_out, c.under_out),
        over_out=mapping.get(c.over_out, c.over_out),
    )


def _compress(crossings, name):
    seen = {}
    for c in crossings:
        for s in (c.under_in, c.over_in, c.under_out, c.over_out):
            if s not in seen:
                seen[s] = len(seen)
    return LinkDiagram([_map_crossing(c, seen) for c in crossings], name=name)


def orient(corner_tuples, name=None):
    """Orient an unoriented corner-tuple diagram into a LinkDiagram."""
    incidence = {}
    for ci, quad in enumerate(corner_tuples):
        if len(quad) != 4:
            raise ValidationError("corner tuple %r must have 4 edges" % (quad,))
        for slot, edge in enumerate(quad):
            incidence.setdefault(edge, []).append((ci, slot))
    for edge, ends in incidence.items():
        if len(ends) != 2:
            raise ValidationError("edge %r has %d ends, expected 2" % (edge, len(ends)))

    # walk each strand once, recording for every edge the end it points into
    direction = {}
    for start in incidence:
        if start in direction:
            continue
        edge, end = start, incidence[start][0]
        while edge not in direction:
            direction[edge] = end
            ci, slot = end
            exit_slot = (slot + 2) % 4
            nxt = corner_tuples[ci][exit_slot]
            a, b = incidence[nxt]
            end = b if a == (ci, exit_slot) else a
            edge = nxt

    crossings = []
    for ci, quad in enumerate(corner_tuples):
        if direction[quad[0]] == (ci, 0):
            base = 0
        elif direction[quad[2]] == (ci, 2):
            base = 2
        else:
            raise ValidationError("under strand never enters crossing %d" % ci)
        rot = tuple(quad[(base + k) % 4] for k in range(4))
        positive = direction[rot[3]] == (ci, (base + 3) % 4)
        negative = direction[rot[1]] == (ci, (base + 1) % 4)
        if positive == negative:
            raise ValidationError("over strand tracing failed at crossing %d" % ci)
        if positive:
            crossings.append(
                Crossing(1, under_in=rot[0], over_in=rot[3], under_out=rot[2], over_out=rot[1])
            )
        else:
            crossings.append(
                Crossing(-1, under_in=rot[0], over_in=rot[1], under_out=rot[2], over_out=rot[3])
            )
    return _compress(crossings, name)


def rational_link(cf, name=None):
    """Numerator closure of the twist sequence cf.

    Entries at even index add |a| twists on the right side of the
    tangle (horizontal stacking), odd index entries add |a| twists at
    the bottom (vertical stacking); the sign of a picks the crossing
    handedness within its group.
    """
    if not cf or not any(cf):
        raise ValidationError("empty twist sequence")
    fresh = itertools.count()
    top = next(fresh)
    bot = next(fresh)
    nw = ne = top
    sw = se = bot
    tuples = []
    for i, a in enumerate(cf):
        for _ in range(abs(a)):
            if i % 2 == 0:
                ne2, se2 = next(fresh), next(fresh)
                if a > 0:
                    tuples.append((se, se2, ne2, ne))
                else:
                    tuples.append((se2, ne2, ne, se))
                ne, se = ne2, se2
            else:
                sw2, se2 = next(fresh), next(fresh)
                if a > 0:
                    tuples.append((sw2, se2, se, sw))
                else:
                    tuples.append((se2, se, sw, sw2))
                sw, se = sw2, se2
    if ne == nw:
        raise ValidationError("closure would create a crossingless circle")
    merge = {ne: nw, se: sw}
    closed = [tuple(merge.get(e, e) for e in quad) for quad in tuples]
    return orient(closed, name or "rational" + "".join("-%d" % a for a in cf))


def pretzel_link(twists, name=None):
    """Pretzel link: vertical twist stacks joined in a ring."""
    if not twists or any(a == 0 for a in twists):
        raise ValidationError("pretzel needs nonzero twist counts")
    fresh = itertools.count()
    tuples = []
    ends = []  # (top_left, top_right, bottom_left, bottom_right) per stack
    for a in twists:
        tl, tr = next(fresh), next(fresh)
        l, r = tl, tr
        for _ in range(abs(a)):
            bl, br = next(fresh), next(fresh)
            if a > 0:
                tuples.append((br, r, l, bl))
            else:
                tuples.append((bl, br, r, l))
            l, r = bl, br
        ends.append((tl, tr, l, r))

    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    n = len(twists)
    for i in range(n):
        _, tr, _, br = ends[i]
        tl2, _, bl2, _ = ends[(i + 1) % n]
        union(tr, tl2)
        union(br, bl2)
    merged = [tuple(find(e) for e in quad) for quad in tuples]
    return orient(merged, name or "pretzel" + "".join("-%d" % a for a in twists))
