from hypothesis import given, settings, strategies as st

from origamikz import permutations as pm
from origamikz.origami import (Origami, automorphisms, block_systems,
                               canonical_form, commutator, genus, one_turn,
                               stratum, vertex_orbits)
from origamikz.enumeration import enumerate_origamis


def test_torus(torus):
    assert torus.n == 1
    assert stratum(torus.r, torus.u) == ((), 1, 1)
    assert genus(torus.r, torus.u) == 1


def test_genus3_stratum_and_genus(genus3):
    assert stratum(genus3.r, genus3.u) == ((2, 2), 3, 2)
    assert genus(genus3.r, genus3.u) == 3
    assert genus3.area == 8


def test_genus3_commutator_cycles(genus3):
    c = commutator(genus3.r, genus3.u)
    assert pm.cycle_string(c) == "(2,4,5)(3,8,6)"
    # two fixed squares become the two regular vertices of the one-turn map
    assert pm.cycle_type(c, include_fixed=True) == (3, 3, 1, 1)


def test_genus3_no_symmetry(genus3):
    auts = automorphisms(genus3.r, genus3.u)
    assert auts == [pm.identity(8)]


def test_genus3_block_system(genus3):
    systems = block_systems(genus3.r, genus3.u)
    assert ((0, 2, 5, 7), (1, 3, 4, 6)) in systems
    sizes = {tuple(len(b) for b in s) for s in systems}
    assert (4, 4) in sizes


def test_genus4_stratum_and_genus(genus4):
    assert genus4.n == 9
    assert stratum(genus4.r, genus4.u) == ((3, 3), 4, 1)
    assert genus(genus4.r, genus4.u) == 4
    auts = automorphisms(genus4.r, genus4.u)
    assert auts == [pm.identity(9)]


def test_one_turn_matches_commutator_cycles(genus3):
    # the one-turn map around a vertex has the same nontrivial cycles as the
    # commutator, read on the squares whose corner sits at that vertex
    t = one_turn(genus3.r, genus3.u)
    c = commutator(genus3.r, genus3.u)
    assert pm.cycle_type(t) == pm.cycle_type(c)
    assert len(vertex_orbits(genus3.r, genus3.u)) == 4  # two zeros, two regular


def test_stratum_sums_to_2g_minus_2(genus3, genus4):
    for o in (genus3, genus4):
        kappa, g, _ = stratum(o.r, o.u)
        assert sum(kappa) == 2 * g - 2


def test_from_text_round_trip(genus3, genus4, torus):
    for o in (genus3, genus4, torus):
        assert Origami.from_text(o.to_text()) == o


def test_from_text_comments_and_labels():
    o = Origami.from_text("# demo\nr (1,2,3)\nu (1,2)\n")
    assert o.n == 3
    assert pm.cycle_string(o.r) == "(1,2,3)"


def test_constructor_rejects_disconnected():
    try:
        Origami((1, 0, 2, 3), (1, 0, 2, 3))
    except AssertionError:
        return
    raise AssertionError("accepted a disconnected square set")


def conjugators(n):
    return st.permutations(list(range(n))).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_canonical_form_conjugation_invariant(genus3, data):
    s = data.draw(conjugators(genus3.n))
    r2 = pm.conjugate(genus3.r, s)
    u2 = pm.conjugate(genus3.u, s)
    assert canonical_form(r2, u2) == canonical_form(genus3.r, genus3.u)


def test_canonical_form_separates_nonisomorphic():
    reps = enumerate_origamis(4, (1, 1))
    assert len(set(reps)) == len(reps)
    forms = {canonical_form(r, u) for r, u in reps}
    assert len(forms) == len(reps)


def test_automorphisms_act_freely_on_connected_pairs():
    # an automorphism fixing any square fixes all of them
    for r, u in enumerate_origamis(4, (1, 1)):
        for a in automorphisms(r, u):
            fixed = [i for i in range(4) if a[i] == i]
            assert a == pm.identity(4) or not fixed
