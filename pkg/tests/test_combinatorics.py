import random

import pytest

from arrangis import catalog
from arrangis.combinatorics import (Character, Combinatorics, Cycle, EnumerationCapExceeded, InvalidCharacter,
                                    InvalidCombinatorics, MalformedCycle, NotInnerCyclic, blow_up,
                                    check_inner_cyclic, cycle_basis, enumerate_inner_cyclic_characters,
                                    incidence_graph, inner_unramified, validate_combinatorics)

from helpers import random_combinatorics


def test_ceva_incidence_graph():
    comb = catalog.ceva7_combinatorics()
    validate_combinatorics(comb)
    g = incidence_graph(comb)
    assert (len(g.vertices), len(g.edges)) == (16, 24)
    basis = cycle_basis(g)
    assert len(basis) == 9
    for c in basis:
        Cycle.from_tokens(c.tokens(), comb)     # each is a valid simple cycle


def test_axiom_violations():
    with pytest.raises(InvalidCombinatorics, match="lies on no point"):
        validate_combinatorics(Combinatorics(("A", "B", "C"), (("A", "B"), ("B", "C"))))
    with pytest.raises(InvalidCombinatorics, match="two points"):
        validate_combinatorics(Combinatorics(("A", "B", "C"), (("A", "B", "C"), ("A", "B"))))
    with pytest.raises(InvalidCombinatorics, match="unknown lines"):
        Combinatorics(("A", "B"), (("A", "Z"),))


def test_random_combinatorics_are_valid():
    rng = random.Random(5)
    for _ in range(30):
        validate_combinatorics(random_combinatorics(rng))


def test_character_product_rule():
    with pytest.raises(InvalidCharacter):
        Character.from_exponents(["A", "B"], ["1/2", "0"])
    xi = catalog.maclane_character()
    assert xi.order == 3
    assert (xi * xi.inverse()).is_trivial()
    with pytest.raises(InvalidCharacter, match="no value"):
        Character.from_json({"exponents": {"L0": "0"}}, ["L0", "L1"])
    with pytest.raises(InvalidCharacter, match="not 2-th"):
        Character.from_json({"order": 2, "exponents": {"A": "1/3", "B": "2/3"}})


def test_cycle_parsing_with_stars():
    comb = catalog.ceva7_combinatorics()
    c = Cycle.parse("L0,*,L3,*,L6,*", comb)
    assert c == catalog.ceva7_cycle()
    assert Cycle.parse("P:L0:L6,L0,P:L0:L3,L3,P:L3:L6,L6", comb) == c
    with pytest.raises(MalformedCycle):
        Cycle.parse("L0,*,L3,*", comb)
    with pytest.raises(MalformedCycle, match="does not join"):
        Cycle.parse("L0,P:L0:L3,L3,P:L1:L3:L5,L6,P:L0:L6", comb)


def test_inner_cyclic_conditions_are_named():
    comb = catalog.ceva7_combinatorics()
    xi = catalog.ceva7_character()
    check_inner_cyclic(comb, xi, catalog.ceva7_cycle())
    with pytest.raises(NotInnerCyclic) as err:
        check_inner_cyclic(comb, xi, Cycle.parse("L0,*,L1,*,L3,*", comb))
    assert err.value.condition == 1
    # a line with value 1 through a ramified point fails condition 2
    xi2 = Character.from_exponents(comb.lines, ["0", "0", "1/2", "0", "1/2", "0", "0"])
    with pytest.raises(NotInnerCyclic) as err:
        check_inner_cyclic(comb, xi2, Cycle.parse("L0,P:L0:L1:L2,L1,*,L6,*", comb))
    assert err.value.condition == 2


def test_condition_three():
    comb = catalog.ceva7_combinatorics()
    # conditions 1 and 2 hold, but the point L0 L1 L2 on L0 has value != 1
    xi = Character.from_exponents(comb.lines, ["0", "1/3", "1/3", "0", "2/3", "2/3", "0"])
    with pytest.raises(NotInnerCyclic) as err:
        check_inner_cyclic(comb, xi, catalog.ceva7_cycle())
    assert err.value.condition == 3


def test_blow_up_self_intersections():
    g = blow_up(catalog.maclane_combinatorics())
    assert g.self_intersection["L0"] == -1
    assert g.self_intersection["L5"] == -2
    assert g.self_intersection["P:L0:L1:L2:L3"] == -1
    sub = inner_unramified(g, catalog.maclane_character())
    assert sub.components == ("L0", "L5", "L6")
    assert sub.betti == 1


def test_enumeration_on_ceva_contains_the_example():
    found = enumerate_inner_cyclic_characters(catalog.ceva7_combinatorics(), 2)
    assert catalog.ceva7_character() in {xi for xi, _ in found}
    for xi, cycle in found:
        check_inner_cyclic(catalog.ceva7_combinatorics(), xi, cycle)


def test_enumeration_pencil_and_cap(monkeypatch):
    comb = catalog.pencil(4).combinatorics
    assert enumerate_inner_cyclic_characters(comb, 12) == []
    with pytest.raises(EnumerationCapExceeded):
        enumerate_inner_cyclic_characters(catalog.maclane_combinatorics(), 6, cap=1000)
    monkeypatch.setenv("ARRANGIS_ENUM_CAP", "10")
    with pytest.raises(EnumerationCapExceeded):
        enumerate_inner_cyclic_characters(catalog.maclane_combinatorics(), 2)


def test_cycle_rotation_and_reversal():
    c = catalog.ceva7_cycle()
    r = c.rotate_to("L6")
    assert r.lines == ("L6", "L0", "L3") and r.points == ("P:L0:L6", "P:L0:L3", "P:L3:L6")
    rev = c.reversed()
    assert rev.lines == ("L0", "L6", "L3")
    assert rev.points == ("P:L0:L6", "P:L3:L6", "P:L0:L3")
