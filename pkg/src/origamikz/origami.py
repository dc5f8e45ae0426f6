"""Square-tiled surfaces encoded by a pair of permutations.

Square i has r(i) to its right and u(i) on top. The pair must act
transitively, otherwise the surface is disconnected.
"""
from . import permutations as pm

class Origami:
    def __init__(self, r, u, check=True):
        r, u = tuple(r), tuple(u)
        assert len(r) == len(u)
        if check:
            assert sorted(r) == list(range(len(r))), "r is not a permutation"
            assert sorted(u) == list(range(len(u))), "u is not a permutation"
            assert pm.is_transitive(r, u), "square adjacency is not transitive"
        self.r = r
        self.u = u
        self.n = len(r)

    def __eq__(self, other):
        return isinstance(other, Origami) and self.r == other.r and self.u == other.u

    def __hash__(self):
        return hash((self.r, self.u))

    def __repr__(self):
        return "Origami(%s, %s)" % (pm.cycle_string(self.r), pm.cycle_string(self.u))

    @classmethod
    def from_cycles(cls, n, r_cycles, u_cycles):
        return cls(pm.from_cycles(n, r_cycles), pm.from_cycles(n, u_cycles))

    @classmethod
    def from_text(cls, text):
        """Two-line format: a line for r and one for u, cycle notation with
        1-based labels. Optional 'n <int>' line pins the square count (needed
        when the largest label is fixed by both). '#' starts a comment."""
        n_decl = None
        perms = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("n ") or line.startswith("n="):
                n_decl = int(line.replace("n", "").replace("=", "").strip())
                continue
            if line[0] in "ru" and len(line) > 1 and line[1] in " =:":
                line = line[1:].lstrip(" =:")
            perms.append(pm.parse_cycles(line))
        assert len(perms) == 2, "expected exactly two permutation lines"
        labels = [x for cyc in perms[0] + perms[1] for x in cyc]
        n = n_decl if n_decl is not None else (max(labels) if labels else 1)
        assert not labels or max(labels) <= n, "label exceeds square count"
        return cls(pm.from_cycles(n, perms[0]), pm.from_cycles(n, perms[1]))

    def to_text(self):
        lines = []
        if not pm.cycles(self.r) or not pm.cycles(self.u):
            lines.append("n %d" % self.n)
        else:
            labels = {x for c in pm.cycles(self.r) + pm.cycles(self.u) for x in c}
            if max(labels) + 1 != self.n:
                lines.append("n %d" % self.n)
        lines.append("r %s" % pm.cycle_string(self.r))
        lines.append("u %s" % pm.cycle_string(self.u))
        return "\n".join(lines) + "\n"

    @property
    def area(self):
        return self.n

def commutator(r, u):
    """Apply r, then u, then r^-1, then u^-1."""
    return pm.compose(pm.compose(pm.compose(r, u), pm.inverse(r)), pm.inverse(u))

def one_turn(r, u):
    """Permutation turning once counterclockwise around the bottom-left corner
    of each square; its orbits are the vertices of the flat surface."""
    ri, ui = pm.inverse(r), pm.inverse(u)
    return tuple(u[r[ui[ri[i]]]] for i in range(len(r)))

def vertex_orbits(r, u):
    """Vertices as orbits of the one-turn map, every corner included."""
    return pm.cycles(one_turn(r, u), include_fixed=True)

def stratum(r, u):
    """(kappa, genus, regular_fixed_count): zero orders are commutator cycle
    lengths minus one, fixed points of the commutator are regular."""
    c = commutator(r, u)
    kappa = tuple(sorted((len(cyc) - 1 for cyc in pm.cycles(c)), reverse=True))
    g = (sum(kappa) + 2) // 2
    fixed = len(c) - sum(len(cyc) for cyc in pm.cycles(c))
    return kappa, g, fixed

def genus(r, u):
    return stratum(r, u)[1]

def automorphisms(r, u):
    """Centralizer of <r,u> in S_n. Transitivity makes each automorphism
    determined by the image of square 0."""
    n = len(r)
    ri, ui = pm.inverse(r), pm.inverse(u)
    auts = []
    for img0 in range(n):
        aut = {0: img0}
        stack = [0]
        ok = True
        while stack and ok:
            i = stack.pop()
            for f in (r, u, ri, ui):
                j, fj = f[i], f[aut[i]]
                if j in aut:
                    if aut[j] != fj:
                        ok = False
                        break
                else:
                    aut[j] = fj
                    stack.append(j)
        if ok and len(aut) == n:
            im = tuple(aut[i] for i in range(n))
            if sorted(im) == list(range(n)):
                auts.append(im)
    return auts

def block_systems(r, u):
    """Nontrivial block systems of the square action (imprimitivity witnesses).
    Each system is a sorted tuple of sorted blocks."""
    n = len(r)
    gens = (r, u)
    systems = set()
    for x in range(1, n):
        parent = list(range(n))
        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a
        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        union(0, x)
        changed = True
        while changed:
            changed = False
            for g in gens:
                for i in range(n):
                    for j in range(i+1, n):
                        if find(i) == find(j) and find(g[i]) != find(g[j]):
                            union(g[i], g[j])
                            changed = True
        cls = {}
        for i in range(n):
            cls.setdefault(find(i), []).append(i)
        sys_ = tuple(sorted(tuple(sorted(v)) for v in cls.values()))
        if 1 < len(sys_) < n:
            systems.add(sys_)
    return sorted(systems)

def canonical_form(r, u):
    """Lexicographically least relabeling of (r,u) over BFS orders from every
    start square. Conjugation-invariant, so it keys origamis up to relabeling."""
    n = len(r)
    best = None
    for start in range(n):
        lab = {start: 0}
        order = [start]
        qi = 0
        while qi < len(order):
            i = order[qi]
            qi += 1
            for f in (r, u):
                j = f[i]
                if j not in lab:
                    lab[j] = len(order)
                    order.append(j)
        rp = tuple(lab[r[order[k]]] for k in range(n))
        up = tuple(lab[u[order[k]]] for k in range(n))
        cand = (rp, up)
        if best is None or cand < best:
            best = cand
    return best
