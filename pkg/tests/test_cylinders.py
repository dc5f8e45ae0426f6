from fractions import Fraction

from origamikz import cylinders as cy
from origamikz.enumeration import enumerate_origamis
from origamikz.homology import ChainComplex, intersection
from origamikz.orbit import sl2_orbit


def test_genus3_cusp_inventories(genus3):
    data = cy.cusp_analysis(genus3.r, genus3.u)
    assert len(data) == 2
    inventories = sorted(d["cylinders"] for d in data)
    assert inventories == [[(1, 2), (3, 1), (3, 1)], [(4, 1), (4, 1)]]
    assert all(d["rank"] == 2 for d in data)
    three_cyl = next(d for d in data if len(d["cylinders"]) == 3)
    assert three_cyl["equal_pairs"] == [(1, 2)]
    two_cyl = next(d for d in data if len(d["cylinders"]) == 2)
    assert two_cyl["equal_pairs"] == []
    widths = sorted(d["width"] for d in data)
    assert widths == [1, 2]


def test_genus3_forni_hypothesis(genus3):
    rank, met = cy.forni_hypothesis(genus3.r, genus3.u)
    assert rank == 2
    assert met is False  # rank 2 < genus 3: the positivity criterion is silent


def test_genus4_forni_hypothesis(genus4):
    rank, met = cy.forni_hypothesis(genus4.r, genus4.u)
    assert rank == 3
    assert met is False  # rank 3 < genus 4


def test_area_conservation(genus3, genus4, torus):
    for o in (genus3, genus4, torus):
        cyls = cy.horizontal_cylinders(o.r, o.u)
        assert sum(w * h for w, h, _ in cyls) == o.n


def test_area_conservation_exhaustive_small():
    for n, kappa in ((2, ()), (3, (2,)), (4, (1, 1)), (5, (2,)), (6, (2, 2))):
        for r, u in enumerate_origamis(n, kappa):
            cyls = cy.horizontal_cylinders(r, u)
            assert sum(w * h for w, h, _ in cyls) == n
            for w, h, rows in cyls:
                assert len(rows) == h
                assert all(len(row) == w for row in rows)


def test_core_classes_isotropic(genus3):
    cyls = cy.horizontal_cylinders(genus3.r, genus3.u)
    cx = ChainComplex(genus3.r, genus3.u)
    cores = cy.core_classes(genus3.r, genus3.u, cyls, cx)
    assert len(cores) == len(cyls)
    for v in cores:
        for w in cores:
            assert intersection(cx, v, w) == 0


def test_rank_bounded_by_genus_on_small_census():
    from origamikz.origami import genus
    for r, u in enumerate_origamis(6, (2, 2)):
        rank, met = cy.forni_hypothesis(r, u)
        g = genus(r, u)
        assert 1 <= rank <= g
        assert met == (rank == g)


def test_torus_single_cylinder(torus):
    cyls = cy.horizontal_cylinders(torus.r, torus.u)
    assert cyls == [(1, 1, [(0,)])] or (len(cyls) == 1 and cyls[0][:2] == (1, 1))
    rank, met = cy.forni_hypothesis(torus.r, torus.u)
    assert (rank, met) == (1, True)
