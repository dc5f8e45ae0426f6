import itertools

from hypothesis import given, settings, strategies as st

from origamikz import orbit as ob


def small_matrices(bound):
    """All of SL(2,Z) with entries in [-bound, bound]."""
    rng = range(-bound, bound + 1)
    for a, b, c in itertools.product(rng, repeat=3):
        if a == 0:
            if b * c == -1:
                for d in rng:
                    yield ((a, b), (c, d))
            continue
        # a*d - b*c = 1 with d in range
        num = 1 + b * c
        if num % a == 0 and -bound <= num // a <= bound:
            yield ((a, b), (c, num // a))


def test_genus3_orbit_size(genus3):
    nodes, lmap, rmap = ob.sl2_orbit(genus3.r, genus3.u)
    assert len(nodes) == 3
    assert len(lmap) == len(rmap) == 3


def test_genus4_orbit_size(genus4):
    nodes, lmap, rmap = ob.sl2_orbit(genus4.r, genus4.u)
    assert len(nodes) == 32


def test_genus3_veech_data(genus3):
    vd = ob.veech_data(genus3.r, genus3.u)
    assert vd["index"] == 3
    assert vd["cusp_widths"] == [1, 2]
    assert len(vd["cusps"]) == 2
    assert vd["e2"] == 1
    assert vd["e3"] == 0
    assert vd["curve_genus"] == 0
    assert vd["contains_minus_identity"]
    assert not vd["projective_only"]


def test_genus3_membership_is_odd_sum_congruence(genus3):
    """The stabilizer of the genus-3 surface is exactly the index-3
    congruence-type subgroup where both rows have odd sum."""
    data = ob.sl2_orbit(genus3.r, genus3.u)
    count = 0
    for m in small_matrices(10):
        inside, _ = ob.membership(genus3.r, genus3.u, m, orbit_data=data)
        assert inside == ob.congruence_odd_sums(m), m
        count += 1
    assert count > 1000


def test_membership_word_lands_on_base(genus3):
    data = ob.sl2_orbit(genus3.r, genus3.u)
    nodes, lmap, rmap = data
    act = ob.node_action(lmap, rmap)
    for m in (((1, 2), (0, 1)), ((3, 2), (1, 1)), ((-1, 0), (0, -1))):
        inside, word = ob.membership(genus3.r, genus3.u, m, orbit_data=data)
        assert ob.word_to_matrix(word) == m
        assert (act(word, 0) == 0) == inside


def sl2_elts():
    return st.lists(
        st.tuples(st.sampled_from("LR"), st.integers(-6, 6).filter(bool)),
        min_size=0, max_size=8).map(tuple)


@given(sl2_elts())
def test_decompose_inverts_word_to_matrix(w):
    m = ob.word_to_matrix(w)
    assert ob.word_to_matrix(ob.decompose(m)) == m


@given(sl2_elts())
def test_word_string_parses_back(w):
    m = ob.word_to_matrix(w)
    s = ob.word_string(w)
    assert ob.word_to_matrix(ob.parse_word(s)) == m


def test_parse_word_forms():
    assert ob.parse_word("L2R2") == (("L", 2), ("R", 2))
    assert ob.parse_word("L^2 R^-3") == (("L", 2), ("R", -3))
    assert ob.parse_word("I") == ()
    try:
        ob.parse_word("L2X")
    except ValueError:
        pass
    else:
        raise AssertionError("accepted a bad letter")


def test_inverse_word(genus3):
    w = (("L", 2), ("R", -3), ("L", 1))
    m = ob.mat_mul(ob.word_to_matrix(w), ob.word_to_matrix(ob.inverse_word(w)))
    assert m == ((1, 0), (0, 1))


def test_schreier_generators_stabilize_base(genus3):
    data = ob.sl2_orbit(genus3.r, genus3.u)
    nodes, lmap, rmap = data
    gens = ob.schreier_generators(nodes, lmap, rmap)
    # index 3 in SL(2,Z) (rank-2 free product quotient): expect a small
    # generating set, every element stabilizing the base node
    assert gens
    act = ob.node_action(lmap, rmap)
    for w in gens:
        assert act(w, 0) == 0
        inside, _ = ob.membership(genus3.r, genus3.u, ob.word_to_matrix(w),
                                  orbit_data=data)
        assert inside


def test_orbit_cap(genus4):
    try:
        ob.sl2_orbit(genus4.r, genus4.u, cap=5)
    except ob.CapExceeded:
        return
    raise AssertionError("cap was not enforced")


def test_torus_orbit(torus):
    nodes, lmap, rmap = ob.sl2_orbit(torus.r, torus.u)
    assert len(nodes) == 1
    vd = ob.veech_data(torus.r, torus.u)
    assert vd["index"] == 1
    assert vd["curve_genus"] == 0
