import pytest

from knotquiver.construct import braid_closure
from knotquiver.diagram import (
    Crossing,
    LinkDiagram,
    ValidationError,
    mirror,
    parse_gauss,
    parse_pd,
    pd_string,
    r1_kink,
    r2_poke,
    reverse_component,
    validate,
)


def virtual_trefoil():
    return parse_gauss("O1+ O2+ U1+ U2+")


def test_parse_pd_roundtrip():
    d = parse_pd("Xp[0,7,1,4] Xp[6,1,7,2] Xp[2,5,3,6] Xp[4,3,5,0]")
    assert len(d.crossings) == 4
    assert parse_pd(pd_string(d)).crossings == d.crossings


def test_parse_pd_compresses_labels():
    d = parse_pd("Xp[10,30,20,40] Xp[20,40,10,30]")
    assert d.crossings[0] == Crossing(1, 0, 1, 2, 3)
    assert d.crossings[1] == Crossing(1, 2, 3, 0, 1)


def test_parse_pd_errors():
    with pytest.raises(ValidationError):
        parse_pd("")
    with pytest.raises(ValidationError):
        parse_pd("Xp[1,2,3]")
    with pytest.raises(ValidationError):
        parse_pd("Xq[1,2,3,4]")
    with pytest.raises(ValidationError):
        # semiarc 0 consumed twice
        parse_pd("Xp[0,0,1,2] Xp[1,2,3,3]")


def test_parse_gauss_virtual_trefoil():
    d = virtual_trefoil()
    assert len(d.crossings) == 2
    assert d.crossings[0] == Crossing(1, under_in=1, over_in=3, under_out=2, over_out=0)
    assert d.crossings[1] == Crossing(1, under_in=2, over_in=0, under_out=3, over_out=1)
    assert len(d.components()) == 1


def test_parse_gauss_multicomponent():
    # Hopf link as a two-component Gauss code
    d = parse_gauss("O1+ U2+ ; U1+ O2+")
    assert len(d.crossings) == 2
    assert len(d.components()) == 2


def test_parse_gauss_errors():
    with pytest.raises(ValidationError):
        parse_gauss("O1+ U1+ O2+")
    with pytest.raises(ValidationError):
        parse_gauss("O1+ O1+ ")
    with pytest.raises(ValidationError):
        parse_gauss("O1+ U1- ")
    with pytest.raises(ValidationError):
        parse_gauss("O1+ banana U1+")


def test_validate_catches_bad_wiring():
    problems = validate(LinkDiagram([Crossing(1, 0, 1, 2, 3), Crossing(1, 0, 1, 2, 3)], check=False))
    assert problems


def test_mirror_is_involution_and_flips_signs():
    d = virtual_trefoil()
    m = mirror(d)
    assert [c.sign for c in m.crossings] == [-1, -1]
    assert mirror(m).crossings == d.crossings


def test_reverse_component_on_knot_keeps_writhe():
    t = braid_closure([1, 1, 1])
    r = reverse_component(t, 0)
    assert r.writhe == t.writhe == 3
    assert len(r.components()) == 1


def test_reverse_component_on_hopf_flips_writhe():
    h = braid_closure([1, 1])
    assert h.writhe == 2
    r = reverse_component(h, 1)
    assert r.writhe == -2
    assert reverse_component(r, 1).writhe == 2


def test_components_counts():
    assert len(braid_closure([1, 1]).components()) == 2
    assert len(braid_closure([1, 1, 1]).components()) == 1
    assert len(braid_closure([1, -2, 1, -2, 1, -2]).components()) == 3


def test_r1_kink_shapes():
    t = braid_closure([1, 1, 1])
    for over_first in (False, True):
        for sign in (1, -1):
            k = r1_kink(t, 2, sign=sign, over_first=over_first)
            assert len(k.crossings) == 4
            assert validate(k) == []
            assert len(k.components()) == 1
            assert k.writhe == t.writhe + sign


def test_r2_poke_shapes():
    h = braid_closure([1, 1])
    comp = h.component_of()
    # poke a strand of one component under the other
    arcs = sorted(comp)
    a = next(s for s in arcs if comp[s] == 0)
    b = next(s for s in arcs if comp[s] == 1)
    p = r2_poke(h, a, b)
    assert len(p.crossings) == 4
    assert validate(p) == []
    assert len(p.components()) == 2
    assert p.writhe == h.writhe
    with pytest.raises(ValueError):
        r2_poke(h, a, a)


def test_gauss_string_round_trip():
    from knotquiver.diagram import gauss_string

    cases = [
        parse_gauss("O1+ O2+ U1+ U2+"),
        braid_closure([1, 1, 1]),
        braid_closure([1, -2, 1, -2]),
    ]
    for d in cases:
        d2 = parse_gauss(gauss_string(d))
        assert len(d2.crossings) == len(d.crossings)
        assert sorted(c.sign for c in d2.crossings) == sorted(c.sign for c in d.crossings)
        assert [len(c) for c in d2.components()] == [len(c) for c in d.components()]
        assert gauss_string(d2) == gauss_string(d)
