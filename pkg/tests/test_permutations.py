from hypothesis import given, strategies as st

from origamikz import permutations as pm
from origamikz.origami import Origami


def perms(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(n))).map(tuple))


def test_identity_and_inverse():
    e = pm.identity(5)
    assert e == (0, 1, 2, 3, 4)
    p = (2, 0, 1, 4, 3)
    assert pm.compose(p, pm.inverse(p)) == e
    assert pm.compose(pm.inverse(p), p) == e


def test_compose_order_applies_left_first():
    # compose(p, q) is "apply p, then q"
    p = (1, 0, 2)
    q = (0, 2, 1)
    pq = pm.compose(p, q)
    for i in range(3):
        assert pq[i] == q[p[i]]


@given(perms())
def test_cycles_round_trip(p):
    n = len(p)
    cyc = pm.cycles(p, include_fixed=True)
    covered = sorted(x for c in cyc for x in c)
    assert covered == list(range(n))
    rebuilt = pm.from_cycles(n, [[x + 1 for x in c] for c in cyc])
    assert rebuilt == p


@given(perms())
def test_cycle_string_parses_back(p):
    s = pm.cycle_string(p)
    assert pm.from_cycles(len(p), pm.parse_cycles(s)) == p


@given(perms(max_n=7), perms(max_n=7))
def test_conjugate_preserves_cycle_type(p, q):
    if len(p) != len(q):
        return
    assert pm.cycle_type(pm.conjugate(p, q)) == pm.cycle_type(p)


def test_cycles_ordered_by_smallest_element():
    p = pm.from_cycles(5, pm.parse_cycles("(4,5)(1,2,3)"))
    cyc = pm.cycles(p, include_fixed=False)
    assert [min(c) for c in cyc] == sorted(min(c) for c in cyc)


def test_parse_rejects_bad_cycles():
    for bad in ("(1,1)", "(0,2)"):
        try:
            pm.parse_cycles(bad)
        except AssertionError:
            continue
        raise AssertionError("parse accepted %r" % bad)


def test_from_text_rejects_out_of_range_label():
    try:
        Origami.from_text("n 5\nr (1,9)\nu ()")
    except AssertionError:
        return
    raise AssertionError("accepted a label beyond the square count")


def test_is_transitive():
    assert pm.is_transitive((1, 0), (0, 1))
    assert not pm.is_transitive((0, 1), (0, 1))
