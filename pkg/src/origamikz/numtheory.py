"""Exact number theory for the certificates: integer polynomial arithmetic,
irreducibility over Q, Sturm real-root counts, reciprocal trace polynomials,
quadratic subfields of reciprocal quartics, squarefree parts, and mod-p
Frobenius evidence with subgroup elimination in hyperoctahedral groups.

Polynomials are lists of ints (or Fractions where stated), ascending powers,
nonzero leading coefficient after trim().
"""
from fractions import Fraction
from collections import Counter
import itertools
import math
import random

F = Fraction

# ---------------------------------------------------------------------------
# integer / rational polynomial arithmetic

def deg(p):
    return len(p) - 1

def trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p

def padd(p, q):
    m = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(m)])

def pneg(p):
    return [-c for c in p]

def pmul(p, q):
    out = [0]*(len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i+j] += a*b
    return trim(out)

def pscale(p, c):
    return trim([c*x for x in p])

def peval(p, x):
    v = 0
    for c in reversed(p):
        v = v*x + c
    return v

def pdivmod_exact(p, q):
    """Polynomial division over Q: (quotient, remainder) with Fractions."""
    p = [F(c) for c in p]
    q = [F(c) for c in q]
    quot = [F(0)]*max(1, len(p) - len(q) + 1)
    while len(p) >= len(q) and any(c != 0 for c in p):
        if p[-1] == 0:
            p = p[:-1]
            continue
        k = len(p) - len(q)
        c = p[-1] / q[-1]
        quot[k] = c
        for i in range(len(q)):
            p[i+k] -= c*q[i]
        p = p[:-1]
    return trim(quot), trim(p if p else [F(0)])

def divides_int(q, p):
    """Does q divide p with an integer quotient?"""
    quo, rem = pdivmod_exact(p, q)
    if any(c != 0 for c in rem):
        return False
    return all(c.denominator == 1 for c in quo)

def content(p):
    g = 0
    for c in p:
        g = math.gcd(g, abs(int(c)))
    return g if g else 1

def derivative(p):
    return trim([i*p[i] for i in range(1, len(p))]) if len(p) > 1 else [0]

def poly_gcd_q(p, q):
    """Monic gcd over Q."""
    a = [F(c) for c in trim(p)]
    b = [F(c) for c in trim(q)]
    while any(c != 0 for c in b):
        _, r = pdivmod_exact(a, b)
        a, b = b, r
    a = trim(a)
    if a[-1] != 0:
        a = [c / a[-1] for c in a]
    return a

def is_squarefree(p):
    return deg(poly_gcd_q(p, derivative(p))) == 0

# ---------------------------------------------------------------------------
# real roots

def sturm_count_real(p):
    """Number of distinct real roots by Sturm's theorem (expects squarefree)."""
    chain = [trim([F(c) for c in p]), trim([F(c) for c in derivative(p)])]
    while deg(chain[-1]) > 0:
        _, rem = pdivmod_exact(chain[-2], chain[-1])
        rem = pneg(rem)
        if all(c == 0 for c in rem):
            break
        chain.append(trim(rem))
    def variations_at_inf(sign):
        ss = []
        for q in chain:
            lc = q[-1]
            if lc == 0:
                continue
            s = 1 if lc > 0 else -1
            if sign < 0 and deg(q) % 2 == 1:
                s = -s
            ss.append(s)
        return sum(1 for a, b in zip(ss, ss[1:]) if a*b < 0)
    return variations_at_inf(-1) - variations_at_inf(+1)

def totally_real(p):
    assert is_squarefree(p), "polynomial is not squarefree; pass its squarefree part"
    return sturm_count_real(p) == deg(p)

# ---------------------------------------------------------------------------
# integer factorization and squarefree parts

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

def _is_probable_prime(n):
    """Miller-Rabin over the first 12 prime bases: deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x*x % n
            if x == n - 1:
                break
        else:
            return False
    return True

def _rho(n):
    """One nontrivial factor of an odd composite (Brent's cycle finding)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y*y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y*y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys*ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g

def factorize(n):
    """Prime factorization dict; trial division below 1e5, then rho."""
    n = abs(n)
    fac = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    d = 17
    while d*d <= n and d < 10**5:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        g = _rho(m)
        stack.append(g)
        stack.append(m // g)
    return fac

def divisors(n):
    n = abs(n)
    if n == 0:
        return []
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)

def squarefree_part(d):
    """The squarefree integer in the same square class, sign preserved."""
    assert d != 0
    out = -1 if d < 0 else 1
    for p, e in factorize(d).items():
        if e % 2:
            out *= p
    return out

def next_prime(q):
    q += 1
    if q <= 2:
        return 2
    if q % 2 == 0:
        q += 1
    while not _is_probable_prime(q):
        q += 2
    return q

# ---------------------------------------------------------------------------
# irreducibility over Q (small degrees)

def rational_roots(p):
    p = trim(p)
    roots = []
    c0, lc = p[0], p[-1]
    if c0 == 0:
        roots.append(F(0))
        q = list(p)
        while q[0] == 0:
            q = q[1:]
        return roots + [r for r in rational_roots(q) if r != 0]
    for num in divisors(c0):
        for den in divisors(lc):
            for s in (1, -1):
                r = F(s*num, den)
                if peval(p, r) == 0 and r not in roots:
                    roots.append(r)
    return roots

def _monic_factor_candidates(p, d):
    """Kronecker's method: all monic integer degree-d candidate factors of
    monic p, interpolated through divisor combinations of p's values at d
    points. Callers must have excluded rational roots, so the values are
    nonzero."""
    pts = [0, 1, -1, 2, -2, 3, -3][:d]
    vals = [peval(p, m) for m in pts]
    if any(v == 0 for v in vals):
        pts = [5, 7, -5, 11, -7, 13, -11][:d]
        vals = [peval(p, m) for m in pts]
        if any(v == 0 for v in vals):
            return
    divs = []
    for v in vals:
        ds = divisors(v)
        divs.append(ds + [-x for x in ds])
    for combo in itertools.product(*divs):
        # monic degree-d g with g(pts[i]) = combo[i]: g = x^d + h, deg h < d
        ys = [combo[i] - pts[i]**d for i in range(d)]
        h = [F(0)]
        for i in range(d):
            li = [F(1)]
            denom = F(1)
            for j in range(d):
                if j == i:
                    continue
                li = pmul(li, [F(-pts[j]), F(1)])
                denom *= (pts[i] - pts[j])
            h = padd(h, pscale(li, F(ys[i]) / denom))
        g = padd(h, [F(0)]*d + [F(1)])
        if all(c.denominator == 1 for c in g):
            yield [int(c) for c in g]

def is_irreducible(p):
    """Exact irreducibility over Q: rational-root test plus exhaustive factor
    search (Kronecker). Intended for the small degrees arising here."""
    p = trim(p)
    n = deg(p)
    assert n >= 1 and p[-1] != 0
    if content(p) > 1:
        c = content(p)
        p = [x // c for x in p]
    if p[0] == 0:
        return n == 1
    if n == 1:
        return True
    if rational_roots(p):
        return False
    if p[-1] < 0:
        p = pneg(p)
    assert p[-1] == 1, "factor search implemented for monic polynomials"
    for d in range(2, n//2 + 1):
        for g in _monic_factor_candidates(p, d):
            if deg(g) == d and divides_int(g, p):
                return False
    return True

# ---------------------------------------------------------------------------
# mod-p polynomial machinery (distinct-degree factorization)

def pm_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p

def pm_mul(a, b, q):
    out = [0]*(len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i+j] = (out[i+j] + x*y) % q
    return pm_trim(out)

def pm_mod(a, m, q):
    a = list(a)
    inv_lead = pow(m[-1], q - 2, q)
    while len(a) >= len(m):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]*inv_lead % q
        k = len(a) - len(m)
        for i in range(len(m)):
            a[i+k] = (a[i+k] - c*m[i]) % q
        a.pop()
    return pm_trim(a if a else [0])

def pm_gcd(a, b, q):
    a, b = pm_trim([x % q for x in a]), pm_trim([x % q for x in b])
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, pm_mod(a, b, q)
    if a[-1] != 1 and not (len(a) == 1 and a[0] == 0):
        inv = pow(a[-1], q - 2, q)
        a = [x*inv % q for x in a]
    return a

def pm_div(a, b, q):
    """Exact division mod q (b must divide a)."""
    a = list(a)
    out = [0]*(len(a) - len(b) + 1)
    invb = pow(b[-1], q - 2, q)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]*invb % q
        k = len(a) - len(b)
        out[k] = c
        for i in range(len(b)):
            a[i+k] = (a[i+k] - c*b[i]) % q
        a.pop()
    assert all(x == 0 for x in a) or (len(a) == 1 and a[0] == 0)
    return pm_trim(out)

def ddf_degrees(p, q):
    """Sorted degrees of the irreducible factors of p mod q, or None when q is
    a bad prime (leading coefficient drops or p mod q not squarefree)."""
    f = pm_trim([c % q for c in p])
    if deg(f) != deg(p) or deg(f) < 1:
        return None
    df = pm_trim([(i*f[i]) % q for i in range(1, len(f))] or [0])
    if deg(pm_gcd(f, df, q)) != 0:
        return None
    if f[-1] != 1:
        inv = pow(f[-1], q - 2, q)
        f = [c*inv % q for c in f]
    degrees = []
    v = f
    h = [0, 1]                      # x^(q^d) mod v
    d = 0
    while deg(v) >= 1:
        d += 1
        if 2*d > deg(v):
            degrees.append(deg(v))
            break
        e = q
        base = pm_mod(h, v, q)
        res = [1]
        while e:
            if e & 1:
                res = pm_mod(pm_mul(res, base, q), v, q)
            base = pm_mod(pm_mul(base, base, q), v, q)
            e >>= 1
        h = res
        diff = [((h[i] if i < len(h) else 0) - (1 if i == 1 else 0)) % q
                for i in range(max(len(h), 2))]
        g = pm_gcd(v, pm_trim(diff), q)
        k = deg(g)
        if k > 0:
            degrees += [d]*(k // d)
            v = pm_div(v, g, q)
            if deg(v) > 0:
                h = pm_mod(h, v, q)
    return sorted(degrees)

# ---------------------------------------------------------------------------
# reciprocal polynomials

def is_reciprocal(p):
    return list(p) == list(reversed(p))

def trace_polynomial(p):
    """For monic reciprocal p of degree 2k: the degree-k polynomial whose
    roots are x + 1/x over the roots x of p."""
    assert is_reciprocal(p), "polynomial is not reciprocal"
    n = deg(p)
    assert n % 2 == 0, "odd-degree reciprocal polynomial has the root -1"
    k = n // 2
    # x^j + x^-j = C_j(y) with C_0 = 2, C_1 = y, C_j = y C_{j-1} - C_{j-2}
    C = [[2], [0, 1]]
    for j in range(2, k + 1):
        C.append(padd(pmul([0, 1], C[-1]), pneg(C[-2])))
    T = [p[k]]
    for j in range(1, k + 1):
        T = padd(T, pscale(C[j], p[k+j]))
    return T

def quartic_subfields(p):
    """Quadratic subfield square classes of the splitting field of an
    irreducible monic reciprocal quartic x^4+ax^3+bx^2+ax+1, derived from the
    trace discriminant a^2-4(b-2) and the resolvent (b+2)^2-4a^2, which equals
    (s^2-4)(t^2-4) for the trace roots s,t.

    Returns (galois_type, splitting_degree, set of square classes)."""
    assert deg(p) == 4 and is_reciprocal(p) and p[-1] == 1
    a, b = p[3], p[2]
    d1 = a*a - 4*(b - 2)
    d2 = (b + 2)**2 - 4*a*a
    s1, s2 = squarefree_part(d1), squarefree_part(d2)
    if s2 == 1:
        # V4: all three quadratic subfields are visible rationally
        e = math.isqrt(abs(d2))
        assert e*e == d2
        subs = {s1}
        for c in (a*a - 2*b - 4 + 2*e, a*a - 2*b - 4 - 2*e):
            if c != 0:
                subs.add(squarefree_part(c))
        for x, y in itertools.combinations(list(subs), 2):
            subs.add(squarefree_part(x*y))
        subs.discard(1)
        return "V4", 4, subs
    if squarefree_part(d1*d2) == 1:
        # cyclic: a single quadratic subfield
        return "other", 4, {s1}
    return "D4", 8, {s1, s2, squarefree_part(d1*d2)}

def quartic_subfields_alt_resolvent(p):
    """Same question with (b-2)^2-4a^2 in place of (b+2)^2-4a^2. This variant
    does not classify correctly in general; it is computed alongside
    quartic_subfields because the genus-3 report prints both triples for
    comparison."""
    assert deg(p) == 4 and is_reciprocal(p) and p[-1] == 1
    a, b = p[3], p[2]
    kprime = (b - 2)**2 - 4*a*a
    d1 = a*a - 4*(b - 2)
    if kprime != 0 and squarefree_part(kprime) == 1:
        return "V4", 4, set()
    subs = set()
    if kprime != 0:
        subs.add(squarefree_part(kprime))
    subs.add(squarefree_part(d1))
    if kprime != 0:
        subs.add(squarefree_part(kprime*d1))
    return "D4", 8, subs

def sextic_subfields(p):
    """Quadratic subfield square classes of the splitting field of a monic
    reciprocal sextic whose Galois group is the full rank-3 hyperoctahedral
    group: the trace-cubic discriminant class, the sign class
    -P(1)P(-1), and their product."""
    assert deg(p) == 6 and is_reciprocal(p) and p[-1] == 1
    T = trace_polynomial(p)
    c2, c1, c0 = T[2], T[1], T[0]
    disc = 18*c2*c1*c0 - 4*c2**3*c0 + c2**2*c1**2 - 4*c1**3 - 27*c0**2
    d_perm = squarefree_part(disc)
    d_sign = squarefree_part(-peval(p, 1)*peval(p, -1))
    subs = set()
    for d in (d_perm, d_sign, squarefree_part(d_perm*d_sign)):
        if d != 1:
            subs.add(d)
    return subs

def quadratic_subfields_disjoint(s1, s2):
    """Disjointness of the quadratic layers of two splitting fields. This
    settles full-field disjointness whenever every nontrivial quotient of each
    Galois group has a quotient of order 2 (true for 2-groups, hence for V4
    and D4, and for the rank-3 hyperoctahedral group)."""
    return set(s1).isdisjoint(set(s2))

# ---------------------------------------------------------------------------
# hyperoctahedral groups and mod-p Frobenius evidence

def signed_type_from_degrees(chi_degs, trace_degs, k):
    """Signed cycle type in W_k from the factor degree multisets of a
    reciprocal polynomial and its trace polynomial mod q. A positive m-cycle
    contributes two degree-m factors, a negative m-cycle one degree-2m factor.
    Returns a sorted tuple of (length, sign), or None when the degrees do not
    determine the type uniquely."""
    if sum(chi_degs) != 2*k or sum(trace_degs) != k:
        return None
    tn = Counter(trace_degs)
    lengths = sorted(tn)
    solutions = []
    split = {}
    def rec(idx, remaining):
        if idx == len(lengths):
            if all(v == 0 for v in remaining.values()):
                solutions.append(dict(split))
            return
        m = lengths[idx]
        for pos in range(tn[m] + 1):
            neg = tn[m] - pos
            need = Counter({m: 2*pos, 2*m: neg})
            if all(remaining[l] >= need[l] for l in need):
                nr = remaining.copy()
                for l in need:
                    nr[l] -= need[l]
                split[m] = (pos, neg)
                rec(idx + 1, nr)
                del split[m]
    rec(0, Counter(chi_degs))
    if len(solutions) != 1:
        return None
    out = []
    for m in lengths:
        pos, neg = solutions[0][m]
        out += [(m, +1)]*pos + [(m, -1)]*neg
    return tuple(sorted(out))

def wk_group(k):
    """The signed permutation group W_k acting on 2k points: point i is the
    i-th root, point k+i its inverse."""
    perms = []
    for sg in itertools.permutations(range(k)):
        for flips in itertools.product((0, 1), repeat=k):
            p = [0]*(2*k)
            for i in range(k):
                j = sg[i]
                if flips[i]:
                    p[i] = k + j
                    p[k+i] = j
                else:
                    p[i] = j
                    p[k+i] = k + j
            perms.append(tuple(p))
    return perms

def perm_signed_type(p, k):
    """Signed cycle type of a W_k element."""
    base = [p[i] % k for i in range(k)]
    seen = [False]*k
    out = []
    for s in range(k):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        t = base[s]
        while t != s:
            cyc.append(t)
            seen[t] = True
            t = base[t]
        cur = s
        for _ in cyc:
            cur = p[cur]
        # after len(cyc) steps the walk returns to s (positive) or to k+s
        out.append((len(cyc), +1 if cur == s else -1))
    return tuple(sorted(out))

def subgroups_of(perms):
    """All subgroups of a small group given as permutation tuples, via a
    Cayley table over element indices: cyclic subgroups plus closure of
    pairwise joins."""
    n = len(perms[0])
    order = len(perms)
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    e = idx[tuple(range(n))]
    def close(gens):
        S = {e}
        frontier = [e]
        for g in gens:
            if g not in S:
                S.add(g)
                frontier.append(g)
        while frontier:
            a = frontier.pop()
            row = table[a]
            for b in list(S):
                for c in (row[b], table[b][a]):
                    if c not in S:
                        S.add(c)
                        frontier.append(c)
        return frozenset(S)
    subs = {frozenset([e])}
    for g in range(order):
        subs.add(close([g]))
    changed = True
    while changed:
        changed = False
        cur = sorted(subs, key=len)
        for i in range(len(cur)):
            for j in range(i + 1, len(cur)):
                if cur[i] <= cur[j] or cur[j] <= cur[i]:
                    continue
                joined = close(cur[i] | cur[j])
                if joined not in subs:
                    subs.add(joined)
                    changed = True
    return {frozenset(perms[i] for i in H) for H in subs}

def is_transitive_on(points, group):
    reach = {points[0]}
    frontier = [points[0]]
    while frontier:
        x = frontier.pop()
        for g in group:
            y = g[x]
            if y not in reach:
                reach.add(y)
                frontier.append(y)
    return len(reach) == len(points)

_WK_SUBGROUPS = {}

def wk_transitive_subgroups(k):
    if k not in _WK_SUBGROUPS:
        W = wk_group(k)
        subs = subgroups_of(W)
        points = list(range(2*k))
        _WK_SUBGROUPS[k] = (W, [H for H in subs if is_transitive_on(points, H)])
    return _WK_SUBGROUPS[k]

_EVIDENCE_MEMO = {}

def galois_evidence(p, n_primes=200):
    """Mod-q Frobenius signed cycle types of an irreducible reciprocal
    polynomial, and subgroup elimination among the transitive subgroups of
    W_k. certified_full means every proper transitive subgroup is ruled out
    by some observed type, which pins the Galois group to all of W_k
    (irreducibility gives transitivity, and observed types are honest
    elements of the group)."""
    key = (tuple(p), n_primes)
    if key in _EVIDENCE_MEMO:
        return _EVIDENCE_MEMO[key]
    n = deg(p)
    assert n % 2 == 0 and is_reciprocal(p)
    k = n // 2
    T = trace_polynomial(p)
    W, transitive = wk_transitive_subgroups(k)
    observed = set()
    sampled = []
    q = 2
    count = 0
    while count < n_primes:
        q = next_prime(q)
        degs = ddf_degrees(p, q)
        tdegs = ddf_degrees(T, q)
        if degs is None or tdegs is None:
            continue
        count += 1
        sampled.append(q)
        st = signed_type_from_degrees(degs, tdegs, k)
        if st is not None:
            observed.add(st)
    surviving = []
    for H in transitive:
        types_h = {perm_signed_type(g, k) for g in H}
        if observed <= types_h:
            surviving.append(H)
    certified = all(len(H) == len(W) for H in surviving)
    out = {
        "k": k,
        "observed_types": observed,
        "primes": len(sampled),
        "surviving_orders": sorted({len(H) for H in surviving}),
        "certified_full": certified,
        "group_order": len(W),
    }
    _EVIDENCE_MEMO[key] = out
    return out

# ---------------------------------------------------------------------------
# assembled record for one characteristic polynomial

def reciprocal_analysis(p, evidence_primes=200):
    """Everything the positivity criterion needs to know about one monic
    reciprocal characteristic polynomial: irreducibility, total realness,
    trace polynomial, and the quadratic subfield square classes of the
    splitting field with a certification flag.

    Degree 4 is classified exactly. Degree 6 uses the exact subfield formulas
    plus mod-q Frobenius evidence for the Galois group size; `certified` is
    True only when the evidence pins the group to the full hyperoctahedral
    group, which makes the subfield triple and splitting degree exact."""
    p = trim(list(p))
    out = {"poly": list(p), "degree": deg(p), "reciprocal": is_reciprocal(p)}
    if not out["reciprocal"]:
        return out
    out["trace_poly"] = trace_polynomial(p)
    out["irreducible"] = is_irreducible(p)
    if not out["irreducible"]:
        return out
    out["totally_real"] = totally_real(p)
    if deg(p) == 4:
        gt, sd, subs = quartic_subfields(p)
        at, asd, asubs = quartic_subfields_alt_resolvent(p)
        out.update(galois_type=gt, splitting_degree=sd,
                   quadratic_subfields=sorted(subs), certified=True,
                   alt_resolvent_type=at,
                   alt_resolvent_subfields=sorted(asubs))
    elif deg(p) == 6:
        ev = galois_evidence(p, evidence_primes)
        out["evidence"] = {
            "observed_types": sorted(ev["observed_types"]),
            "primes": ev["primes"],
            "surviving_orders": ev["surviving_orders"],
            "certified_full": ev["certified_full"],
            "group_order": ev["group_order"],
        }
        out["quadratic_subfields"] = sorted(sextic_subfields(p))
        out["certified"] = ev["certified_full"]
        if ev["certified_full"]:
            out["galois_type"] = "hyperoctahedral"
            out["splitting_degree"] = ev["group_order"]
        else:
            out["galois_type"] = None
            out["splitting_degree"] = None
    return out
