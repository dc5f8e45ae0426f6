"""SL(2,Z) action on origamis: L/R shears, orbits, word decomposition,
Veech group data and cusps.

Convention: L = [[1,1],[0,1]] replaces u by u o r^-1, R = [[1,0],[1,1]]
replaces r by r o u^-1. Words act on the left, so the rightmost letter of a
word acts first. Pinned by the index-3 fixture of the eight-square surface
and its congruence description.
"""
from fractions import Fraction

from . import permutations as pm
from .origami import canonical_form

L_MAT = ((1, 1), (0, 1))
R_MAT = ((1, 0), (1, 1))
I_MAT = ((1, 0), (0, 1))
S_WORD = (("L", -1), ("R", 1), ("L", -1))   # = [[0,-1],[1,0]]

class CapExceeded(RuntimeError):
    """A configured resource cap (orbit size, search space) was hit."""

def shear_L(r, u):
    """One L step, keeping the square labels of the domain."""
    ri = pm.inverse(r)
    return r, pm.compose(ri, u)

def shear_R(r, u):
    ui = pm.inverse(u)
    return pm.compose(ui, r), u

def shear_L_inv(r, u):
    return r, pm.compose(r, u)

def shear_R_inv(r, u):
    return pm.compose(u, r), u

def act_L(r, u):
    """L shear followed by canonical relabeling."""
    return canonical_form(*shear_L(r, u))

def act_R(r, u):
    return canonical_form(*shear_R(r, u))

def mat_mul(A, B):
    return tuple(tuple(sum(A[i][k]*B[k][j] for k in range(2)) for j in range(2)) for i in range(2))

def letter_power(letter, k):
    if letter == "L":
        return ((1, k), (0, 1))
    return ((1, 0), (k, 1))

def parse_word(text):
    """'L8R2L2R2' -> (('L',8),('R',2),('L',2),('R',2)). Exponents may be
    negative; a missing exponent means 1; zero exponents are rejected.
    Spaces and '^' are ignored, 'I' (or '') is the empty word."""
    text = text.replace(" ", "").replace("^", "")
    if text in ("", "I"):
        return ()
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch not in "LR":
            raise ValueError("bad letter %r in word %r" % (ch, text))
        i += 1
        j = i
        if j < len(text) and text[j] == "-":
            j += 1
        while j < len(text) and text[j].isdigit():
            j += 1
        k = int(text[i:j]) if j > i else 1
        if k == 0:
            raise ValueError("zero exponent in word %r" % text)
        out.append((ch, k))
        i = j
    return tuple(out)

def word_string(blocks):
    return "".join("%s%d" % (ch, k) if k != 1 else ch for ch, k in blocks) or "I"

def word_to_matrix(word):
    """Product of the letter matrices, left to right."""
    blocks = parse_word(word) if isinstance(word, str) else word
    m = I_MAT
    for letter, k in blocks:
        m = mat_mul(m, letter_power(letter, k))
    return m

def decompose(m):
    """Write m in SL(2,Z) as a word over L^k, R^k (k in Z), by the Euclidean
    algorithm on the left column; -I enters as S^2 with S = L^-1 R L^-1."""
    (a, b), (c, d) = m
    if a*d - b*c != 1:
        raise ValueError("determinant is not 1")
    word = []
    ra, rb, rc, rd = a, b, c, d
    while rc != 0:
        if ra == 0:
            if rc == 1:                     # ((0,-1),(1,d)) = S L^d
                word.extend(S_WORD)
                word.append(("L", rd))
            else:                           # ((0,1),(-1,d)) = S^3 L^-d
                word.extend(S_WORD * 3)
                word.append(("L", -rd))
            ra, rb, rc, rd = 1, 0, 0, 1
            break
        if abs(ra) >= abs(rc):
            q = ra // rc
            word.append(("L", q))
            ra, rb = ra - q*rc, rb - q*rd
        else:
            q = rc // ra
            word.append(("R", q))
            rc, rd = rc - q*ra, rd - q*rb
    if ra == 1:
        if rb != 0:
            word.append(("L", rb))
    else:                                   # ra == -1: rest = -L^{-rb}
        word.extend(S_WORD * 2)
        if rb != 0:
            word.append(("L", -rb))
    w = tuple((l, k) for l, k in word if k != 0)
    assert word_to_matrix(w) == m
    return w

def sl2_orbit(r, u, cap=10**6):
    """BFS closure of the canonical form under L and R.

    Returns (nodes, lmap, rmap): nodes are canonical (r,u) pairs in discovery
    order with the seed at index 0, lmap/rmap are node permutations."""
    start = canonical_form(r, u)
    index = {start: 0}
    nodes = [start]
    lmap, rmap = {}, {}
    queue = [0]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        rv, uv = nodes[v]
        for act, m in ((act_L, lmap), (act_R, rmap)):
            key = act(rv, uv)
            if key not in index:
                if len(nodes) >= cap:
                    raise CapExceeded("orbit larger than cap %d (partial size %d)"
                                      % (cap, len(nodes)))
                index[key] = len(nodes)
                nodes.append(key)
                queue.append(index[key])
            m[v] = index[key]
    k = len(nodes)
    return nodes, tuple(lmap[v] for v in range(k)), tuple(rmap[v] for v in range(k))

def node_action(lmap, rmap):
    """apply(word, node): left action, rightmost letter first."""
    ilm, irm = pm.inverse(lmap), pm.inverse(rmap)
    def apply_word(word, node):
        for letter, k in reversed(word):
            p = (lmap if k > 0 else ilm) if letter == "L" else (rmap if k > 0 else irm)
            for _ in range(abs(k)):
                node = p[node]
        return node
    return apply_word

def stabilizes(lmap, rmap, word, base=0):
    return node_action(lmap, rmap)(word, base) == base

def membership(r, u, m, orbit_data=None):
    """Is m in the Veech group of (r,u)? Returns (bool, word)."""
    if orbit_data is None:
        orbit_data = sl2_orbit(r, u)
    nodes, lmap, rmap = orbit_data
    word = decompose(m)
    return stabilizes(lmap, rmap, word), word

def congruence_odd_sums(m):
    """The mod-2 description of the eight-square surface's Veech group:
    both row sums odd."""
    (a, b), (c, d) = m
    return (a + b) % 2 == 1 and (c + d) % 2 == 1

def inverse_word(word):
    return tuple((l, -k) for l, k in reversed(word))

def cusps(lmap):
    """L-cycles on orbit nodes; one cusp per cycle. Returns list of tuples of
    node indices, each starting at its smallest node."""
    return pm.cycles(lmap, include_fixed=True)

def veech_data(r, u, orbit_data=None):
    """Index, cusps, elliptic point counts and quotient curve genus.

    The index equals the orbit size when the origami has no nontrivial
    automorphisms (the node stabilizer is then the full point stabilizer);
    with automorphisms the result describes the projective picture only and
    is flagged.
    """
    from .origami import automorphisms
    if orbit_data is None:
        orbit_data = sl2_orbit(r, u)
    nodes, lmap, rmap = orbit_data
    k = len(nodes)
    apply_word = node_action(lmap, rmap)
    minus_i = decompose(((-1, 0), (0, -1)))
    s_word = S_WORD
    u6_word = decompose(((0, -1), (1, 1)))          # order 6 in SL(2,Z)
    mi = [apply_word(minus_i, v) for v in range(k)]
    sv = [apply_word(s_word, v) for v in range(k)]
    uv = [apply_word(u6_word, v) for v in range(k)]
    contains_minus_i = all(mi[v] == v for v in range(k))
    if contains_minus_i:
        classes = list(range(k))
        proj = list(range(k))
        lproj = lmap
    else:
        rep = [min(v, mi[v]) for v in range(k)]
        classes = sorted(set(rep))
        idx = {c: i for i, c in enumerate(classes)}
        proj = [idx[rep[v]] for v in range(k)]
        lp = {}
        for v in range(k):
            lp[proj[v]] = proj[lmap[v]]
        lproj = tuple(lp[i] for i in range(len(classes)))
    d = len(classes)
    e2 = sum(1 for v in classes if proj[sv[v]] == proj[v])
    e3 = sum(1 for v in classes if proj[uv[v]] == proj[v])
    cusp_cycles = pm.cycles(lproj, include_fixed=True)
    g = 1 + Fraction(d, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(len(cusp_cycles), 2)
    assert g.denominator == 1 and g >= 0, "curve genus is not a non-negative integer"
    auts = automorphisms(r, u)
    return {
        "index": k,
        "projective_index": d,
        "contains_minus_identity": contains_minus_i,
        "cusps": cusps(lmap),
        "cusp_widths": sorted(len(c) for c in cusps(lmap)),
        "e2": e2,
        "e3": e3,
        "curve_genus": int(g),
        "automorphisms": len(auts),
        "projective_only": len(auts) > 1,
    }

def schreier_generators(nodes, lmap, rmap, base=0):
    """Generator words of the stabilizer of base, from a BFS spanning tree of
    the (L,R) coset graph. Tree edges give trivial generators and are
    skipped."""
    k = len(nodes)
    path = {base: ()}
    order = [base]
    qi = 0
    tree_edges = set()
    while qi < len(order):
        v = order[qi]
        qi += 1
        for letter, mp in (("L", lmap), ("R", rmap)):
            w = mp[v]
            if w not in path:
                path[w] = (letter, v)
                order.append(w)
                tree_edges.add((v, letter))
    def path_word(v):
        out = []
        while v != base:
            letter, prev = path[v]
            out.append((letter, 1))
            v = prev
        return tuple(out)                    # leftmost letter acts last
    gens = []
    for v in range(k):
        for letter, mp in (("L", lmap), ("R", rmap)):
            if (v, letter) in tree_edges:
                continue
            w = mp[v]
            word = inverse_word(path_word(w)) + ((letter, 1),) + path_word(v)
            # collapse adjacent equal letters
            word = _collapse(word)
            if word:
                gens.append(word)
    return gens

def _collapse(word):
    out = []
    for l, k in word:
        if k == 0:
            continue
        if out and out[-1][0] == l:
            s = out[-1][1] + k
            out.pop()
            if s != 0:
                out.append((l, s))
        else:
            out.append((l, k))
    return tuple(out)

def orbit_edge_list(nodes, lmap, rmap):
    """Text export: one 'i L j' / 'i R j' line per edge plus a node table."""
    lines = []
    for v in range(len(nodes)):
        lines.append("%d L %d" % (v, lmap[v]))
        lines.append("%d R %d" % (v, rmap[v]))
    table = []
    for v, (rv, uv) in enumerate(nodes):
        table.append("%d r=%s u=%s" % (v, pm.cycle_string(rv), pm.cycle_string(uv)))
    return "\n".join(lines + table) + "\n"
