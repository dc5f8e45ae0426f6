import random
from fractions import Fraction

from origamikz import linalg as la
from origamikz.homology import (REFERENCE_OMEGA_8, ChainComplex, char_poly,
                                express_in_basis, holonomy_rows, intersection,
                                intersection_matrix, homology_split,
                                kz_matrix, orbit_transport, reference_basis_8,
                                transport_word, zero_part_basis)

F = Fraction

EXPECTED_L2 = [[-1, 0, -1, -1], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]
EXPECTED_R2 = [[0, 1, 0, 0], [1, 0, 0, 0], [-1, 1, -1, 0], [0, 0, 0, 1]]


def ints(M):
    return [[int(x) for x in row] for row in M]


def test_reference_basis_matrices(genus3):
    cx = ChainComplex(genus3.r, genus3.u)
    ref = reference_basis_8(cx)
    ML, _, _ = kz_matrix(genus3.r, genus3.u, "L2", basis=ref, cx=cx)
    MR, _, _ = kz_matrix(genus3.r, genus3.u, "R2", basis=ref, cx=cx)
    assert ints(ML) == EXPECTED_L2
    assert ints(MR) == EXPECTED_R2
    gram = intersection_matrix(cx, ref)
    assert gram == REFERENCE_OMEGA_8


def test_reference_matrices_squared_unipotent(genus3):
    """kz(L^2) itself has eigenvalues {1,1,-1,-1}; its square is unipotent."""
    cx = ChainComplex(genus3.r, genus3.u)
    ref = reference_basis_8(cx)
    for word in ("L2", "R2"):
        M, _, _ = kz_matrix(genus3.r, genus3.u, word, basis=ref, cx=cx)
        k = len(M)
        I = la.identity(k)
        D = [[M[i][j] - I[i][j] for j in range(k)] for i in range(k)]
        D2 = la.matmul(D, D)
        assert any(any(x != 0 for x in row) for row in D2), \
            "unexpected: %s already unipotent" % word
        M2 = la.matmul(M, M)
        E = [[M2[i][j] - I[i][j] for j in range(k)] for i in range(k)]
        E2 = la.matmul(E, E)
        assert all(x == 0 for row in E2 for x in row)


def test_zero_part_dimension(genus3, genus4, torus):
    for o, g in ((genus3, 3), (genus4, 4), (torus, 1)):
        cx, basis = zero_part_basis(o.r, o.u)
        assert len(basis) == 2 * g - 2


def test_homology_split(genus3):
    split = homology_split(genus3.r, genus3.u)
    assert split["genus"] == 3
    cx = split["cx"]
    n = cx.n
    hol = holonomy_rows(n)
    for v in split["zero_basis"]:
        assert all(sum(row[k] * v[k] for k in range(2 * n)) == 0 for row in hol)
    # tautological pair pairs like a symplectic 2-plane against itself
    a, b = split["taut_a"], split["taut_b"]
    assert intersection(cx, a, b) != 0
    assert intersection(cx, a, a) == 0


def test_kz_is_a_homomorphism(genus3):
    M1, basis, cx = kz_matrix(genus3.r, genus3.u, "L2")
    M2, _, _ = kz_matrix(genus3.r, genus3.u, "R4", basis=basis, cx=cx)
    M12, _, _ = kz_matrix(genus3.r, genus3.u, "L2R4", basis=basis, cx=cx)
    assert M12 == la.matmul(M1, M2)  # rightmost letter acts first


def random_word(rng, blocks=4, kmax=4):
    out = []
    letter = rng.choice("LR")
    for _ in range(blocks):
        k = rng.randint(1, kmax) * rng.choice((1, -1))
        out.append((letter, k))
        letter = "L" if letter == "R" else "R"
    return tuple(out)


def even_word(rng, blocks=4, kmax=2):
    """Even exponents keep the word inside the stabilizer of the base node
    (both rows of the matrix keep odd sums)."""
    return tuple((l, 2 * k) for l, k in random_word(rng, blocks, kmax))


def test_random_words_symplectic_reciprocal(genus3):
    """kz matrices preserve the intersection form (asserted inside kz_matrix)
    and have palindromic characteristic polynomials."""
    rng = random.Random(11)
    _, basis, cx = kz_matrix(genus3.r, genus3.u, "L2")
    omega = intersection_matrix(cx, basis)
    for _ in range(100):
        w = even_word(rng)
        M, _, _ = kz_matrix(genus3.r, genus3.u, w, basis=basis, cx=cx)
        MT = [list(col) for col in zip(*M)]
        assert la.matmul(MT, la.matmul(omega, M)) == omega
        p = char_poly(M)
        assert p == p[::-1]


def test_orbit_transport_matches_direct_engine(genus3):
    nodes, lmap, rmap, data, mats = orbit_transport(genus3.r, genus3.u)
    assert len(nodes) == 3
    assert all(len(data[v][1]) == 4 for v in range(3))
    rng = random.Random(5)
    checked = 0
    for _ in range(40):
        w = random_word(rng, blocks=rng.randint(1, 5))
        M = transport_word(w, 0, lmap, rmap, mats)
        if M is None:
            continue
        direct, _, _ = kz_matrix(genus3.r, genus3.u, w)
        assert char_poly(M) == char_poly(direct)
        checked += 1
    assert checked >= 5


def test_transport_inverse_round_trip(genus3):
    nodes, lmap, rmap, data, mats = orbit_transport(genus3.r, genus3.u)
    for w in ((("L", 2), ("L", -2)), (("R", 4), ("R", -4))):
        M = transport_word(w, 0, lmap, rmap, mats)
        assert M == la.identity(4)


def test_transport_open_walk_returns_none(genus3):
    nodes, lmap, rmap, data, mats = orbit_transport(genus3.r, genus3.u)
    assert transport_word((("L", 1),), 0, lmap, rmap, mats) is None


def test_torus_transport(torus):
    nodes, lmap, rmap, data, mats = orbit_transport(torus.r, torus.u)
    assert len(nodes) == 1
    assert transport_word((("L", 3),), 0, lmap, rmap, mats) == []


def test_kz_rejects_non_affine_word(genus3):
    try:
        kz_matrix(genus3.r, genus3.u, "L1")
    except ValueError:
        return
    raise AssertionError("accepted a word outside the stabilizer")


def test_express_in_basis_consistency(genus3):
    M, basis, cx = kz_matrix(genus3.r, genus3.u, "L2")
    ref = reference_basis_8(cx)
    Mref = express_in_basis(cx, M, basis, ref)
    assert char_poly(Mref) == char_poly(M)
    assert ints(Mref) == EXPECTED_L2
