"""Horizontal cylinder decompositions, core-curve homology, isotropic rank
per cusp, and the geometric positivity-criterion hypothesis test."""
from fractions import Fraction

from . import linalg as la
from . import permutations as pm
from .origami import one_turn, genus
from .orbit import sl2_orbit, cusps
from .homology import ChainComplex, intersection

F = Fraction

def horizontal_cylinders(r, u):
    """Rows are r-cycles; two vertically adjacent rows belong to the same
    cylinder when the horizontal line between them carries no singularity
    (every point on it is fixed by the one-turn map).

    Returns a list of (width, height, rows) with rows bottom-up."""
    n = len(r)
    tau = one_turn(r, u)
    rows = pm.cycles(r, include_fixed=True)
    row_of = {}
    for k, row in enumerate(rows):
        for i in row:
            row_of[i] = k
    above = {}
    for k, row in enumerate(rows):
        if all(tau[u[i]] == u[i] for i in row):
            above[k] = row_of[u[row[0]]]
    parent = list(range(len(rows)))
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for k, k2 in above.items():
        parent[find(k)] = find(k2)
    groups = {}
    for k in range(len(rows)):
        groups.setdefault(find(k), []).append(k)
    cyls = []
    for ks in sorted(groups.values()):
        widths = {len(rows[k]) for k in ks}
        assert len(widths) == 1, "merged rows of unequal width"
        # order the rows bottom-up inside the cylinder
        ordered = _stack_rows(ks, above, row_of, rows)
        cyls.append((widths.pop(), len(ks), [rows[k] for k in ordered]))
    assert sum(w*h for w, h, _ in cyls) == n, "area not conserved"
    return cyls

def _stack_rows(ks, above, row_of, rows):
    ks = set(ks)
    entered = {above[k] for k in ks if k in above and above[k] in ks}
    starts = [k for k in ks if k not in entered]
    # a cylinder is a cycle of rows when its top glues back to its bottom
    k0 = min(starts) if starts else min(ks)
    out = [k0]
    while len(out) < len(ks):
        nxt = above[out[-1]]
        if nxt == k0:
            break
        out.append(nxt)
    assert len(out) == len(ks)
    return out

def core_class(n, row):
    """Homology class of a cylinder's core curve: the sum of the a-edges of
    one row."""
    v = [F(0)]*(2*n)
    for i in row:
        v[i] += 1
    return v

def core_classes(r, u, cyls, cx=None):
    """One core class per cylinder; asserts row independence within each
    cylinder and pairwise zero intersection."""
    n = len(r)
    if cx is None:
        cx = ChainComplex(r, u)
    faces = cx.face_columns()
    cores = [core_class(n, rows[0]) for _, _, rows in cyls]
    for (_, _, rows), v in zip(cyls, cores):
        for row in rows[1:]:
            diff = [x - y for x, y in zip(core_class(n, row), v)]
            assert la.solve_in_span(faces, diff) is not None, \
                "rows of one cylinder are not homologous"
    for i in range(len(cores)):
        for j in range(len(cores)):
            assert intersection(cx, cores[i], cores[j]) == 0, "core classes not isotropic"
    return cores

def isotropic_rank(r, u, cyls=None):
    """Rank of the span of the cylinder core classes in H1, plus the list of
    pairs of cylinders with equal class."""
    if cyls is None:
        cyls = horizontal_cylinders(r, u)
    cx = ChainComplex(r, u)
    faces = cx.face_columns()
    cores = core_classes(r, u, cyls, cx)
    rk_faces = la.rank([list(c) for c in faces])
    rk = la.rank([list(c) for c in faces] + [list(c) for c in cores]) - rk_faces
    equal_pairs = []
    for i in range(len(cores)):
        for j in range(i+1, len(cores)):
            diff = [x - y for x, y in zip(cores[i], cores[j])]
            if la.solve_in_span(faces, diff) is not None:
                equal_pairs.append((i, j))
    return rk, equal_pairs

def cusp_analysis(r, u, orbit_data=None):
    """Per cusp: representative node, width, cylinder inventory and isotropic
    rank of the core classes."""
    if orbit_data is None:
        orbit_data = sl2_orbit(r, u)
    nodes, lmap, rmap = orbit_data
    out = []
    for cyc in cusps(lmap):
        rep = cyc[0]
        rr, uu = nodes[rep]
        cyls = horizontal_cylinders(rr, uu)
        rk, eq = isotropic_rank(rr, uu, cyls)
        out.append({
            "representative": rep,
            "width": len(cyc),
            "cylinders": sorted((w, h) for w, h, _ in cyls),
            "rank": rk,
            "equal_pairs": eq,
        })
    return out

def forni_hypothesis(r, u, orbit_data=None):
    """(max isotropic rank over cusps, whether it reaches the genus).

    The geometric positivity criterion applies in full exactly when some
    periodic direction has a Lagrangian core span (rank = g)."""
    data = cusp_analysis(r, u, orbit_data)
    max_rank = max(d["rank"] for d in data)
    return max_rank, max_rank == genus(r, u)
