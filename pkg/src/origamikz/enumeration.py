"""Exhaustive enumeration of origamis of small degree in a target stratum.

Generation fixes one canonical r per cycle type (partition of n) and
backtracks over u, pruning on commutator cycle lengths as they close;
deduplication across simultaneous conjugation uses canonical forms, which
also quotients out the centralizer of r. Orbit grouping and the rank filter
reproduce the search for surfaces where the positivity criterion's
hypothesis fails at every cusp.
"""

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from . import permutations as pm
from .origami import commutator, canonical_form, genus
from .orbit import sl2_orbit, CapExceeded
from .cylinders import forni_hypothesis


def partitions(n):
    """Partitions of n in decreasing lexicographic order, each a descending
    list."""
    def rec(rem, mx):
        if rem == 0:
            yield []
            return
        for first in range(min(rem, mx), 0, -1):
            for rest in rec(rem - first, first):
                yield [first] + rest
    yield from rec(n, n)


def canonical_r(part):
    """The permutation with consecutive cycles of the given lengths, longest
    first."""
    r = []
    start = 0
    for ln in part:
        for i in range(ln):
            r.append(start + (i + 1) % ln)
        start += ln
    return tuple(r)


def target_multiset(n, kappa):
    """Commutator cycle lengths, fixed points included, for stratum kappa on
    n squares."""
    lens = sorted((k + 1 for k in kappa), reverse=True)
    pad = n - sum(lens)
    if pad < 0:
        raise ValueError("stratum %r needs more than %d squares"
                         % (tuple(kappa), n))
    return sorted(lens + [1] * pad)


def _cycle_lengths(p):
    return sorted(len(c) for c in pm.cycles(p, include_fixed=True))


def enumerate_u(r, target):
    """All u completing r to a pair whose commutator has cycle lengths
    exactly `target` (transitivity checked at the leaves). Backtracks over
    the values of u, closing commutator cycles incrementally: a cycle of a
    length whose quota is already spent prunes the branch."""
    n = len(r)
    rinv = pm.inverse(r)
    allowed = Counter(target)
    u = [-1] * n
    uinv = [-1] * n
    csucc = [-1] * n
    results = []

    def try_complete(x):
        y = u[r[x]]
        if y == -1:
            return -1
        return uinv[rinv[y]]

    def assign(i, j, closed):
        u[i] = j
        uinv[j] = i
        new = []
        ok = True
        cands = [rinv[i]] + [x for x in range(n)
                             if u[r[x]] != -1 and rinv[u[r[x]]] == j]
        for x in cands:
            if csucc[x] != -1:
                continue
            z = try_complete(x)
            if z == -1:
                continue
            csucc[x] = z
            new.append(x)
            t = z
            ln = 1
            while t != x and csucc[t] != -1:
                t = csucc[t]
                ln += 1
            if t == x:
                if allowed[ln] - closed.get(ln, 0) <= 0:
                    ok = False
                else:
                    closed[ln] = closed.get(ln, 0) + 1
                    new.append(("cycle", ln))
        return new, ok

    def undo(i, j, new, closed):
        for item in reversed(new):
            if isinstance(item, tuple):
                closed[item[1]] -= 1
            else:
                csucc[item] = -1
        u[i] = -1
        uinv[j] = -1

    closed = {}

    def bt(i):
        if i == n:
            cand = tuple(u)
            c = commutator(r, cand)
            if _cycle_lengths(c) == target and pm.is_transitive(r, cand):
                results.append(cand)
            return
        for j in range(n):
            if uinv[j] != -1:
                continue
            new, ok = assign(i, j, closed)
            if ok:
                bt(i + 1)
            undo(i, j, new, closed)

    bt(0)
    return results


def _enumerate_partition(args):
    n, kappa, part = args
    r = canonical_r(part)
    target = target_multiset(n, kappa)
    return [canonical_form(r, u) for u in enumerate_u(r, target)]


def enumerate_origamis(n, kappa, threads=1, max_pairs=None):
    """All origamis of degree n with stratum kappa, as a sorted list of
    canonical (r, u) pairs. Work splits by the cycle type of r; the merged
    set is deterministic regardless of scheduling. max_pairs caps the number
    of distinct canonical pairs; exceeding it raises CapExceeded with the
    partial result attached."""
    jobs = [(n, tuple(kappa), part) for part in partitions(n)]
    seen = set()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(_enumerate_partition, jobs)
            for chunk in chunks:
                seen.update(chunk)
                if max_pairs is not None and len(seen) > max_pairs:
                    err = CapExceeded("more than %d canonical pairs"
                                      % max_pairs)
                    err.partial = sorted(seen)
                    raise err
    else:
        for job in jobs:
            seen.update(_enumerate_partition(job))
            if max_pairs is not None and len(seen) > max_pairs:
                err = CapExceeded("more than %d canonical pairs" % max_pairs)
                err.partial = sorted(seen)
                raise err
    return sorted(seen)


def group_orbits(reps, cap=10**6):
    """Group canonical pairs into SL(2,Z) orbits. Returns a list of sorted
    node lists, ordered by their smallest representative."""
    assigned = {}
    orbits = []
    for key in reps:
        if key in assigned:
            continue
        nodes, _, _ = sl2_orbit(*key, cap=cap)
        for nd in nodes:
            assigned[nd] = len(orbits)
        orbits.append(sorted(nodes))
    orbits.sort(key=lambda o: o[0])
    return orbits


def naive_enumerate(n, kappa):
    """Oracle: canonical transitive pairs with the right commutator type by
    brute force over all (r, u). Only feasible for n <= 6."""
    target = target_multiset(n, kappa)
    seen = set()
    for r in itertools.permutations(range(n)):
        for u in itertools.permutations(range(n)):
            c = commutator(r, u)
            if _cycle_lengths(c) != target:
                continue
            if not pm.is_transitive(r, u):
                continue
            seen.add(canonical_form(r, u))
    return seen


class SearchSpec:
    """Parameters for one enumeration run: degree, stratum, optional rank
    bound (defaults to g-1: keep orbits where the positivity criterion's
    hypothesis fails at every cusp), optional MMY search on survivors, and
    resource caps."""

    def __init__(self, n, kappa, max_rank=None, require_mmy=False,
                 threads=1, max_pairs=None, orbit_cap=10**6,
                 mmy_block_exponent=8, mmy_total=20):
        if n < 1:
            raise ValueError("degree must be at least 1")
        if any(k < 1 for k in kappa):
            raise ValueError("stratum orders must be positive")
        if sum(kappa) % 2:
            raise ValueError("stratum orders must have even sum")
        self.n = n
        self.kappa = tuple(kappa)
        self.max_rank = max_rank
        self.require_mmy = require_mmy
        self.threads = threads
        self.max_pairs = max_pairs
        self.orbit_cap = orbit_cap
        self.mmy_block_exponent = mmy_block_exponent
        self.mmy_total = mmy_total


def filter_candidates(orbits, spec):
    """Keep orbits whose maximal isotropic core rank over all cusps stays
    below the genus (or below spec.max_rank + 1 when set). With
    spec.require_mmy, additionally run the pair search on each survivor;
    passes are kept as certified candidates, inconclusive results are kept
    with a status flag."""
    from . import criterion as cr
    out = []
    for orbit in orbits:
        rep = orbit[0]
        g = genus(*rep)
        max_rank, reaches = forni_hypothesis(*rep)
        bound = spec.max_rank if spec.max_rank is not None else g - 1
        entry = {
            "representative": rep,
            "orbit_size": len(orbit),
            "genus": g,
            "max_isotropic_rank": max_rank,
            "forni_hypothesis_met": reaches,
        }
        if max_rank > bound:
            continue
        if spec.require_mmy:
            found = cr.search_hyperbolic_pair(
                *rep, max_block_exponent=spec.mmy_block_exponent,
                max_total=spec.mmy_total, cap=spec.orbit_cap)
            if found is None:
                entry["mmy"] = None
                entry["status"] = "inconclusive"
            else:
                w1, w2, cert = found
                entry["mmy"] = cert
                entry["status"] = ("candidate" if cert["verdict"] == "pass"
                                   else cert["verdict"])
        else:
            entry["status"] = "candidate"
        out.append(entry)
    return out


def run_search(spec):
    """Full enumeration pipeline: canonical pairs, orbit grouping, rank and
    optional MMY filtering. Returns a report dict; on a cap the report is
    flagged partial with whatever was collected."""
    report = {"n": spec.n, "kappa": list(spec.kappa), "complete": True}
    try:
        reps = enumerate_origamis(spec.n, spec.kappa, threads=spec.threads,
                                  max_pairs=spec.max_pairs)
    except CapExceeded as e:
        reps = getattr(e, "partial", [])
        report["complete"] = False
    report["pair_count"] = len(reps)
    orbits = group_orbits(reps, cap=spec.orbit_cap)
    report["orbit_count"] = len(orbits)
    report["orbit_sizes"] = sorted(len(o) for o in orbits)
    report["orbits"] = orbits
    report["candidates"] = filter_candidates(orbits, spec)
    return report
