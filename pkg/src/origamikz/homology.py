"""Exact first homology of an origami and the homology action of affine words
(the Kontsevich-Zorich cocycle) restricted to the zero-holonomy part.

Edge indexing: a_i (bottom edge of square i) is coordinate i, b_i (left edge)
is coordinate n+i. All arithmetic is over Fractions.
"""
from fractions import Fraction
import itertools
import math

from . import linalg as la
from . import permutations as pm
from .origami import one_turn
from .orbit import (parse_word, word_to_matrix, sl2_orbit,
                    shear_L, shear_R, shear_L_inv, shear_R_inv)

F = Fraction

class ChainComplex:
    """Cell structure of the square-tiled surface: n square faces, 2n edges,
    vertices = orbits of the one-turn map on bottom-left corners."""

    def __init__(self, r, u):
        self.r, self.u = tuple(r), tuple(u)
        self.n = n = len(r)
        self.tau = one_turn(r, u)
        self.vertex_orbits = pm.cycles(self.tau, include_fixed=True)
        self.vertex_of = {}
        for vid, orb in enumerate(self.vertex_orbits):
            for x in orb:
                self.vertex_of[x] = vid
        self.V = len(self.vertex_orbits)
        self.E = 2*n
        self.F = n

    def euler_characteristic(self):
        return self.V - self.E + self.F

    def d1(self):
        """V x E boundary matrix, one column per edge."""
        D = [[F(0)]*self.E for _ in range(self.V)]
        for i in range(self.n):
            D[self.vertex_of[self.r[i]]][i] += 1
            D[self.vertex_of[i]][i] -= 1
            D[self.vertex_of[self.u[i]]][self.n + i] += 1
            D[self.vertex_of[i]][self.n + i] -= 1
        return D

    def face_columns(self):
        """Boundary of each square as an edge vector: a_i + b_{r(i)} - a_{u(i)} - b_i."""
        cols = []
        for i in range(self.n):
            v = [F(0)]*self.E
            v[i] += 1
            v[self.n + self.r[i]] += 1
            v[self.u[i]] -= 1
            v[self.n + i] -= 1
            cols.append(v)
        return cols

    def vertex_end_order(self):
        """Per vertex: the counterclockwise cyclic list of incident edge ends,
        as (edge_index, io) with io=+1 for an incoming head, -1 for an
        outgoing tail."""
        r, u, n = self.r, self.u, self.n
        ri, ui = pm.inverse(r), pm.inverse(u)
        out = []
        for orb in self.vertex_orbits:
            ends = []
            for i in orb:
                ends.append((i, -1))
                ends.append((n + i, -1))
                ends.append((ri[i], +1))
                ends.append((n + r[ui[ri[i]]], +1))
            out.append(ends)
        return out

    def holonomy(self, v):
        hx = sum(v[i] for i in range(self.n))
        hy = sum(v[self.n + i] for i in range(self.n))
        return (hx, hy)

    def is_cycle(self, v):
        return all(sum(row[k]*v[k] for k in range(self.E) if v[k] != 0) == 0
                   for row in self.d1())

def intersection(cx, x, y, offset=0, xfirst=True):
    """Algebraic intersection number of the cycles x and y.

    Strand model: |x_e| parallel x-strands and |y_e| parallel y-strands run
    along each edge e without crossing; at each vertex the counterclockwise
    order of the edge ends is expanded into distinct sub-slots (head ports
    keep the edge's cross-section order, tail ports reverse it), each strand
    kind is routed k-th-in to k-th-out in scan order, and signed chord
    crossings between x-chords and y-chords are summed. The result is
    independent of the scan offset and of the cross-section order; both knobs
    are kept for the property tests."""
    den = 1
    for v in itertools.chain(x, y):
        v = F(v)
        den = den * v.denominator // math.gcd(den, v.denominator)
    xs = [int(F(v)*den) for v in x]
    ys = [int(F(v)*den) for v in y]
    total = 0
    for ends in cx.vertex_end_order():
        tokens = []
        for (e, io) in ends:
            sub = []
            groups = (("x", xs[e]), ("y", ys[e])) if xfirst else (("y", ys[e]), ("x", xs[e]))
            for kind, coef in groups:
                if coef == 0:
                    continue
                # positive coefficient travels tail -> head
                arriving = (coef > 0) == (io == +1)
                sub.extend((kind, arriving) for _ in range(abs(coef)))
            if io == -1:
                sub.reverse()
            tokens.extend(sub)
        m = len(tokens)
        if m == 0:
            continue
        def chords(kind):
            ins = [p for p, (k, arr) in enumerate(tokens) if k == kind and arr]
            outs = [p for p, (k, arr) in enumerate(tokens) if k == kind and not arr]
            assert len(ins) == len(outs), "unbalanced flux: not a cycle"
            ins.sort(key=lambda p: (p - offset) % m)
            outs.sort(key=lambda p: (p - offset) % m)
            return list(zip(ins, outs))
        xch = chords("x")
        ych = chords("y")
        if not xch or not ych:
            continue
        def inarc(t, s, e):
            return 0 < (t - s) % m < (e - s) % m
        for (pi, po) in xch:
            for (qi, qo) in ych:
                qi_in = inarc(qi, pi, po)
                qo_in = inarc(qo, pi, po)
                if qi_in != qo_in:
                    total += 1 if qi_in else -1
    return F(total, den*den)

def intersection_matrix(cx, basis):
    m = len(basis)
    return [[intersection(cx, basis[i], basis[j]) for j in range(m)] for i in range(m)]

def holonomy_rows(n):
    """The two linear forms sending an edge vector to its (x, y) holonomy."""
    hx = [F(0)]*(2*n)
    hy = [F(0)]*(2*n)
    for i in range(n):
        hx[i] = F(1)
        hy[n + i] = F(1)
    return [hx, hy]

def zero_part_basis(r, u):
    """Integer basis of the zero-holonomy part of H1, as a complement of the
    boundary space inside the zero-holonomy cycle space.

    Returns (cx, basis); the basis has 2g-2 vectors."""
    n = len(r)
    cx = ChainComplex(r, u)
    rows = cx.d1() + holonomy_rows(n)
    ns = la.nullspace(rows)
    faces = cx.face_columns()
    chosen = []
    span = [list(col) for col in faces]
    rk = la.rank(span)
    for v in ns:
        cand = span + [list(v)]
        rk2 = la.rank(cand)
        if rk2 > rk:
            span = cand
            rk = rk2
            den = 1
            for c in v:
                den = den * c.denominator // math.gcd(den, c.denominator)
            chosen.append([F(c*den) for c in v])
    return cx, chosen

def homology_split(r, u):
    """Absolute H1 basis split into the holonomy-carrying pair and the zero
    part. Returns dict with keys cx, zero_basis, taut_a, taut_b, genus."""
    cx, zb = zero_part_basis(r, u)
    n = cx.n
    a = [F(1) if k < n else F(0) for k in range(2*n)]
    b = [F(0) if k < n else F(1) for k in range(2*n)]
    g = (2 - cx.euler_characteristic()) // 2
    assert len(zb) == 2*g - 2, "zero part dimension is not 2g-2"
    return {"cx": cx, "zero_basis": zb, "taut_a": a, "taut_b": b, "genus": g}

# ---------------------------------------------------------------------------
# homology action of the shears

def _chain_L(r, u):
    """Chain map of one L step: a_i -> a'_i, b_i -> a'_i + b'_{r(i)}."""
    n = len(r)
    C = [[F(0)]*(2*n) for _ in range(2*n)]
    for i in range(n):
        C[i][i] = F(1)
        C[i][n + i] = F(1)
        C[n + r[i]][n + i] = F(1)
    return shear_L(r, u), C

def _chain_R(r, u):
    """Chain map of one R step: b_j -> b'_j, a_j -> b'_j + a'_{u(j)}."""
    n = len(r)
    C = [[F(0)]*(2*n) for _ in range(2*n)]
    for j in range(n):
        C[n + j][n + j] = F(1)
        C[n + j][j] = F(1)
        C[u[j]][j] = F(1)
    return shear_R(r, u), C

def _chain_L_inv(r, u):
    n = len(r)
    ri = pm.inverse(r)
    C = [[F(0)]*(2*n) for _ in range(2*n)]
    for i in range(n):
        C[i][i] = F(1)
        C[n + ri[i]][n + i] = F(1)
        C[ri[i]][n + i] = F(-1)
    return shear_L_inv(r, u), C

def _chain_R_inv(r, u):
    n = len(r)
    ui = pm.inverse(u)
    C = [[F(0)]*(2*n) for _ in range(2*n)]
    for j in range(n):
        C[n + j][n + j] = F(1)
        C[ui[j]][j] = F(1)
        C[n + ui[j]][j] = F(-1)
    return shear_R_inv(r, u), C

def relabel_to(re, ue, r, u):
    """Permutation pi with r = pi o re o pi^-1 and u = pi o ue o pi^-1, i.e.
    a relabeling carrying (re,ue) onto (r,u); None if they are not conjugate.
    Unique when the automorphism group is trivial."""
    n = len(r)
    for t in range(n):
        pi = [None]*n
        pi[0] = t
        stack = [0]
        ok = True
        while stack and ok:
            i = stack.pop()
            for pe, p in ((re, r), (ue, u)):
                j = pe[i]
                img = p[pi[i]]
                if pi[j] is None:
                    pi[j] = img
                    stack.append(j)
                elif pi[j] != img:
                    ok = False
                    break
        if ok and None not in pi and len(set(pi)) == n:
            if all(pi[re[i]] == r[pi[i]] and pi[ue[i]] == u[pi[i]] for i in range(n)):
                return tuple(pi)
    return None

def relabel_chain_map(pi, n):
    """Chain map of the square relabeling pi: a_i -> a_{pi(i)}, b_i -> b_{pi(i)}."""
    P = [[F(0)]*(2*n) for _ in range(2*n)]
    for i in range(n):
        P[pi[i]][i] = F(1)
        P[n + pi[i]][n + i] = F(1)
    return P

def kz_chain(r, u, word):
    """Full chain map on edge vectors for an affine word (rightmost block acts
    first), ending with the relabeling back to (r,u). Raises ValueError if the
    word does not stabilize the origami."""
    n = len(r)
    blocks = parse_word(word) if isinstance(word, str) else tuple(word)
    rc, uc = r, u
    T = la.identity(2*n)
    for ch, k in reversed(blocks):
        step = _chain_L if ch == "L" else _chain_R
        stepi = _chain_L_inv if ch == "L" else _chain_R_inv
        for _ in range(abs(k)):
            (rc, uc), C = (step if k > 0 else stepi)(rc, uc)
            T = la.matmul(C, T)
    pi = relabel_to(rc, uc, r, u)
    if pi is None:
        raise ValueError("not an affine word for this origami: %r" % (word,))
    T = la.matmul(relabel_chain_map(pi, n), T)
    # the tautological part must transform by the word's 2x2 matrix
    M = word_to_matrix(blocks)
    for e, (ex, ey) in ((0, (1, 0)), (n, (0, 1))):
        col = [T[i][e] for i in range(2*n)]
        hx, hy = sum(col[:n]), sum(col[n:])
        assert (hx, hy) == (M[0][0]*ex + M[0][1]*ey, M[1][0]*ex + M[1][1]*ey), \
            "holonomy does not transform by the word matrix"
    return T

def restrict_to_basis(cx, T, basis, src_basis=None):
    """Matrix of the chain map T modulo boundaries: column j expresses the
    image of src_basis[j] in `basis` (both bases of the same homology
    subspace; cx is the codomain complex)."""
    if src_basis is None:
        src_basis = basis
    faces = cx.face_columns()
    cols = [list(v) for v in basis] + faces
    k = len(basis)
    out = [[None]*len(src_basis) for _ in range(k)]
    for j, v in enumerate(src_basis):
        img = la.matvec(T, [F(x) for x in v])
        x = la.solve_in_span(cols, img)
        assert x is not None, "image leaves span(basis) + boundaries"
        for i in range(k):
            out[i][j] = x[i]
    return out

def kz_matrix(r, u, word, basis=None, cx=None):
    """KZ cocycle matrix of an affine word on the zero part. Returns
    (matrix, basis, cx)."""
    if basis is None or cx is None:
        cx, basis = zero_part_basis(r, u)
    T = kz_chain(r, u, word)
    M = restrict_to_basis(cx, T, basis)
    G = intersection_matrix(cx, basis)
    assert la.matmul(la.transpose(M), la.matmul(G, M)) == G, \
        "matrix does not preserve the intersection form"
    return M, basis, cx

def express_in_basis(cx, M, src_basis, target_basis):
    """Conjugate a matrix written in src_basis into target_basis (same
    subspace mod boundaries)."""
    faces = cx.face_columns()
    cols = [list(v) for v in target_basis] + faces
    k = len(target_basis)
    X = [[None]*len(src_basis) for _ in range(k)]
    for j, v in enumerate(src_basis):
        x = la.solve_in_span(cols, [F(c) for c in v])
        if x is None:
            raise ValueError("bases do not span the same subspace")
        for i in range(k):
            X[i][j] = x[i]
    return la.matmul(X, la.matmul(M, la.inverse_matrix(X)))

def char_poly(M):
    """Characteristic polynomial of a KZ matrix, ascending integer
    coefficients [c0, ..., 1]."""
    return la.charpoly_ascending_int(M)

# ---------------------------------------------------------------------------
# reference basis for the eight-square genus-3 surface

def reference_basis_8(cx):
    """The half-integer cycle basis used in the genus-3 reports, valid for the
    bundled eight-square surface r=(1,2,3,4)(5,6,7,8), u=(1,2,3,5)(4,8,7,6)
    with its labels. Gram matrix [[0,M],[-M^T,0]], M=[[1,1],[-1,1]]."""
    n = cx.n
    assert n == 8, "reference basis is specific to the eight-square surface"
    def av(coins):
        v = [F(0)]*(2*n)
        for lab, c in coins:
            v[lab] += c
        return v
    def bv(coins):
        v = [F(0)]*(2*n)
        for lab, c in coins:
            v[n + lab] += c
        return v
    h = F(1, 2)
    basis = [
        av([(1, h), (2, h), (6, -h), (5, -h)]),
        av([(3, 1), (4, -1)]),
        bv([(1, h), (2, h), (7, -h), (6, -h)]),
        bv([(3, 1), (4, -1)]),
    ]
    for v in basis:
        assert cx.is_cycle(v) and cx.holonomy(v) == (0, 0)
    return basis

REFERENCE_OMEGA_8 = [[F(x) for x in row] for row in
                     [[0, 0, 1, 1], [0, 0, -1, 1], [-1, 1, 0, 0], [-1, -1, 0, 0]]]

# ---------------------------------------------------------------------------
# transport over a whole SL(2,Z) orbit
#
# For long products it is much cheaper to precompute, once per orbit node and
# per letter, the matrix of the one-step chain map restricted to the zero
# part, and then multiply those small matrices along the path of the word.
# The closed-path product is conjugate to the matrix kz_matrix computes
# directly, so characteristic polynomials agree.

def orbit_transport(r, u, cap=10**6):
    """Precompute per-node zero-part bases and exact one-letter transition
    matrices over the SL(2,Z) orbit of (r, u).

    Returns (nodes, lmap, rmap, data, mats) where data[v] = (cx, basis) for
    node v and mats[letter][v] is the (2g-2)-square matrix taking coordinates
    in node v's basis to coordinates in the basis of its letter-image node.
    """
    nodes, lmap, rmap = sl2_orbit(r, u, cap=cap)
    data = [zero_part_basis(rr, uu) for rr, uu in nodes]
    mats = {"L": [None] * len(nodes), "R": [None] * len(nodes)}
    for v, (rr, uu) in enumerate(nodes):
        for letter, step, mp in (("L", _chain_L, lmap), ("R", _chain_R, rmap)):
            (re, ue), C = step(rr, uu)
            w = mp[v]
            pi = relabel_to(re, ue, *nodes[w])
            assert pi is not None
            T = la.matmul(relabel_chain_map(pi, len(rr)), C)
            cxw, bw = data[w]
            bv = data[v][1]
            mats[letter][v] = restrict_to_basis(cxw, T, bw, src_basis=bv)
    return nodes, lmap, rmap, data, mats

def transport_word(blocks, base, lmap, rmap, mats):
    """Multiply one-letter transition matrices along a word's path starting
    at orbit node `base` (rightmost block acts first). Returns the exact
    product when the path closes up at `base`, else None."""
    if mats["L"] and len(mats["L"][base]) == 0:
        # genus 1: the zero part is trivial
        path_ok = True
        cur = base
        for letter, k in reversed(blocks):
            mp = lmap if letter == "L" else rmap
            steps = k if k > 0 else -k
            fwd = mp if k > 0 else _inverse_map(mp)
            for _ in range(steps):
                cur = fwd[cur]
        return [] if cur == base else None
    cur = base
    M = la.identity(len(mats["L"][base]))
    for letter, k in reversed(blocks):
        mp = lmap if letter == "L" else rmap
        if k > 0:
            for _ in range(k):
                M = la.matmul(mats[letter][cur], M)
                cur = mp[cur]
        else:
            inv = _inverse_map(mp)
            for _ in range(-k):
                prev = inv[cur]
                M = la.matmul(la.inverse_matrix(mats[letter][prev]), M)
                cur = prev
    return M if cur == base else None

def _inverse_map(mp):
    return {w: v for v, w in enumerate(mp)}
