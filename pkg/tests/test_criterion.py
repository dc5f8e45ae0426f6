import json
import random

from origamikz import criterion as cr
from origamikz import linalg as la
from origamikz.homology import char_poly
from origamikz.orbit import word_to_matrix

CHI1_G3 = [1, -2, -30, -2, 1]
CHI2_G3 = [1, -25, 624, -25, 1]
CHI1_G4 = [1, 39, 42, -596, 42, 39, 1]
CHI2_G4 = [1, -117, 2904, 5368, 2904, -117, 1]


def test_affine_word_normalization():
    w = cr.AffineWord("L8R2L2R2")
    assert w.blocks == (("L", 8), ("R", 2), ("L", 2), ("R", 2))
    assert w.total == 14
    assert str(w) == "L8R2L2R2"
    assert w == cr.AffineWord((("L", 8), ("R", 2), ("L", 2), ("R", 2)))
    merged = cr.AffineWord((("L", 2), ("L", 6), ("R", 2), ("L", 2), ("R", 2)))
    assert merged == w


def test_trace_and_hyperbolicity():
    w1 = cr.AffineWord("L8R2L2R2")
    w2 = cr.AffineWord("L6R2L2R2")
    assert w1.trace == 106
    assert w2.trace == 82
    assert cr.is_direct_hyperbolic(w1) and cr.is_direct_hyperbolic(w2)
    assert not cr.is_direct_hyperbolic(cr.AffineWord("L2"))


def test_words_by_total_ordering():
    words = cr.words_by_total(8)
    totals = [sum(k for _, k in w) for w in words]
    assert totals == sorted(totals)
    assert all(k % 2 == 0 and 0 < k <= 8 for w in words for _, k in w)
    # alternating letters
    for w in words:
        assert all(a != b for (a, _), (b, _) in zip(w, w[1:]))


def test_stated_pair_certificate(genus3):
    cert = cr.mmy_check(genus3.r, genus3.u, "L8R2L2R2", "L6R2L2R2")
    assert cert["verdict"] == "pass"
    assert cert["certification_level"] == "certified"
    assert cert["phi1"]["word"] == "L8R2L2R2"
    assert cert["phi2"]["word"] == "L6R2L2R2"
    assert cert["phi1"]["trace"] == 106
    assert cert["phi2"]["trace"] == 82
    assert cert["char_poly_phi1"] == CHI1_G3
    assert cert["char_poly_phi2_squared"] == CHI2_G3
    a1, a2 = cert["analysis1"], cert["analysis2"]
    assert a1["galois_type"] == "D4" and a1["splitting_degree"] == 8
    assert a1["quadratic_subfields"] == [3, 11, 33]
    assert a2["galois_type"] == "V4" and a2["splitting_degree"] == 4
    assert a2["quadratic_subfields"] == [-23, -3, 69]
    holds = {k: v["holds"] for k, v in cert["conditions"].items()}
    assert holds == {"chi1_irreducible": True,
                     "splitting_real_full_degree": True,
                     "chi2_irreducible_fields_disjoint": True}
    sl1 = cert["phi1"]["sl2"]
    assert sl1 == [list(row) for row in
                   word_to_matrix(cr.AffineWord("L8R2L2R2").blocks)]


def test_certificate_json_round_trip(genus3):
    cert = cr.mmy_check(genus3.r, genus3.u, "L8R2L2R2", "L6R2L2R2")
    text = json.dumps(cert, sort_keys=True)
    back = json.loads(text)
    ok, fresh = cr.recheck_certificate(back)
    assert ok
    assert fresh["verdict"] == "pass"


def test_recheck_detects_tampering(genus3):
    cert = cr.mmy_check(genus3.r, genus3.u, "L8R2L2R2", "L6R2L2R2")
    cert = json.loads(json.dumps(cert))
    cert["char_poly_phi1"] = [1, 0, 0, 0, 1]
    ok, _ = cr.recheck_certificate(cert)
    assert not ok


def test_same_word_pair_fails_disjointness(genus3):
    cert = cr.mmy_check(genus3.r, genus3.u, "L8R2L2R2", "L8R2L2R2")
    assert cert["verdict"] == "fail"
    assert cert["conditions"]["chi2_irreducible_fields_disjoint"]["holds"] is False


def test_non_hyperbolic_word_rejected(genus3):
    try:
        cr.mmy_check(genus3.r, genus3.u, "L2", "L6R2L2R2")
    except ValueError:
        return
    raise AssertionError("accepted a parabolic word")


def test_non_stabilizing_word_rejected(genus3):
    try:
        cr.mmy_check(genus3.r, genus3.u, "L3R3", "L6R2L2R2")
    except ValueError:
        return
    raise AssertionError("accepted a word outside the stabilizer")


def test_genus3_search_first_pair(genus3):
    res = cr.search_hyperbolic_pair(genus3.r, genus3.u)
    assert res is not None
    w1, w2, cert = res
    assert (str(w1), str(w2)) == ("L2R2L2R2L2R2L2", "L2R2")
    assert cert["verdict"] == "pass"
    assert cert["certification_level"] == "certified"
    assert cert["char_poly_phi1"] == [1, -8, -66, -8, 1]
    assert cert["char_poly_phi2_squared"] == [1, 7, 16, 7, 1]


def test_genus4_pair_certificate(genus4):
    cert = cr.mmy_check(genus4.r, genus4.u, "L4R2L4R8", "L4R2L4R2")
    assert cert["verdict"] == "pass"
    assert cert["certification_level"] == "certified"
    assert cert["char_poly_phi1"] == CHI1_G4
    assert cert["char_poly_phi2_squared"] == CHI2_G4
    for a in (cert["analysis1"], cert["analysis2"]):
        assert a["degree"] == 6
        assert a["certified"]
        assert a["evidence"]["surviving_orders"] == [48]
    ok, _ = cr.recheck_certificate(cert)
    assert ok


def test_orbit_engine_matches_direct(genus3):
    okz = cr.OrbitKZ(genus3.r, genus3.u)
    assert okz.dim == 4
    from origamikz.homology import kz_matrix
    for word in ("L8R2L2R2", "L6R2L2R2", "L2R2"):
        M = okz.word_matrix(word)
        direct, _, _ = kz_matrix(genus3.r, genus3.u, word)
        assert char_poly(M) == char_poly(direct)


def test_cyclic_rotation_preserves_char_poly(genus3):
    """Rotating a closed word corresponds to starting the same loop at
    another node, so the characteristic polynomial cannot change."""
    okz = cr.OrbitKZ(genus3.r, genus3.u)
    blocks = cr.AffineWord("L8R2L2R2").blocks
    base_poly = char_poly(okz.word_matrix(blocks))
    for cut in range(1, len(blocks)):
        rotated = blocks[cut:] + blocks[:cut]
        # follow the suffix from node 0 to find where the rotation is based
        node = 0
        for letter, k in reversed(blocks[cut:]):
            mp = okz.lmap if letter == "L" else okz.rmap
            for _ in range(k):
                node = mp[node]
        M = okz.word_matrix(rotated, base=node)
        assert M is not None
        assert char_poly(M) == base_poly


def test_torus_search_returns_none(torus):
    assert cr.search_hyperbolic_pair(torus.r, torus.u) is None


def test_counterexample_report_genus3(genus3):
    rep = cr.counterexample_report(genus3.r, genus3.u,
                                   word1="L8R2L2R2", word2="L6R2L2R2")
    assert rep["genus"] == 3
    assert rep["stratum"] == [2, 2] or rep["stratum"] == (2, 2)
    assert rep["max_isotropic_rank"] == 2
    assert rep["forni_hypothesis_met"] is False
    assert rep["mmy"]["verdict"] == "pass"
    assert rep["counterexample_to_converse"] is True


def test_counterexample_report_torus(torus):
    rep = cr.counterexample_report(torus.r, torus.u)
    assert rep["counterexample_to_converse"] is False
