"""Permutations as tuples of images on {0,...,n-1}."""

def identity(n):
    return tuple(range(n))

def inverse(p):
    q = [0]*len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)

def compose(p, q):
    """Apply p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))

def conjugate(p, s):
    """s o p o s^-1."""
    n = len(p)
    out = [0]*n
    for i in range(n):
        out[s[i]] = s[p[i]]
    return tuple(out)

def from_cycles(n, cycles):
    """Cycles given with 1-based labels, e.g. [(1,2,3),(4,8)]."""
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a-1] = b-1
    return tuple(p)

def cycles(p, include_fixed=False):
    """Cycles of p (0-based), in order of their smallest element."""
    seen = [False]*len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        t = p[s]
        while t != s:
            cyc.append(t)
            seen[t] = True
            t = p[t]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out

def cycle_type(p, include_fixed=False):
    return tuple(sorted((len(c) for c in cycles(p, include_fixed)), reverse=True))

def cycle_string(p):
    """1-based cycle notation; '()' for the identity."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x+1) for x in c) + ")" for c in cs)

def parse_cycles(text):
    """Inverse of cycle_string, plus an optional explicit degree elsewhere.
    Returns list of 1-based cycles."""
    text = text.strip()
    if text in ("()", "id", ""):
        return []
    assert text[0] == "(" and text[-1] == ")", "bad cycle notation: %r" % text
    out = []
    for chunk in text[1:-1].split(")("):
        labels = tuple(int(x) for x in chunk.replace(" ", "").split(","))
        assert len(labels) == len(set(labels)), "repeated label in cycle"
        assert all(x >= 1 for x in labels), "cycle labels are 1-based"
        out.append(labels)
    return out

def is_transitive(r, u):
    n = len(r)
    ri, ui = inverse(r), inverse(u)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in (r[i], u[i], ri[i], ui[i]):
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n
