"""Positivity and simplicity test for pairs of affine shear words.

The test takes an origami and two direct hyperbolic words phi1, phi2 in the
parabolic generators and checks three exact conditions on the characteristic
polynomials of their KZ matrices restricted to the zero part:

  1. chi(phi1) is irreducible over Q;
  2. the splitting field of chi(phi1) is totally real of the full degree
     2^(g-1) * (g-1)!;
  3. chi(phi2^2) is irreducible and its splitting field is disjoint from
     that of chi(phi1).

Disjointness is decided through the quadratic subfield square classes; that
settles full-field disjointness whenever each Galois group maps onto C2
through every nontrivial quotient, which holds for the groups appearing here
(2-groups in genus 3, the rank-3 hyperoctahedral group in genus 4).

Every verdict carries a certification level: "certified" when all inputs to
the decision are exact, "evidence" when a Galois group is pinned down only by
mod-q Frobenius sampling, "inconclusive" otherwise. A verdict is never
upgraded silently.
"""

import math
from fractions import Fraction

from . import linalg as la
from . import numtheory as nt
from . import homology as hm
from .orbit import parse_word, word_string, word_to_matrix
from .origami import genus, stratum
from .permutations import cycle_string
from .cylinders import forni_hypothesis

F = Fraction


def _normalize_blocks(blocks):
    out = []
    for letter, k in blocks:
        assert letter in ("L", "R")
        k = int(k)
        if k == 0:
            continue
        if out and out[-1][0] == letter:
            merged = out[-1][1] + k
            out.pop()
            if merged:
                out.append((letter, merged))
        else:
            out.append((letter, k))
    return tuple(out)


class AffineWord:
    """A word in the shear generators L=[[1,1],[0,1]], R=[[1,0],[1,1]],
    stored run-length as alternating (letter, exponent) blocks. The rightmost
    block acts first."""

    def __init__(self, word):
        blocks = parse_word(word) if isinstance(word, str) else tuple(word)
        self.blocks = _normalize_blocks(blocks)
        self.sl2 = word_to_matrix(self.blocks)
        self.total = sum(abs(k) for _, k in self.blocks)

    @property
    def trace(self):
        return self.sl2[0][0] + self.sl2[1][1]

    def __str__(self):
        return word_string(self.blocks)

    def __repr__(self):
        return "AffineWord(%r)" % (str(self),)

    def __eq__(self, other):
        return isinstance(other, AffineWord) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)


def is_direct_hyperbolic(word):
    """True when every exponent is positive (so the matrix lies in the
    nonnegative cone) and the trace exceeds 2."""
    w = word if isinstance(word, AffineWord) else AffineWord(word)
    return all(k > 0 for _, k in w.blocks) and w.trace > 2


def words_by_total(max_total, max_block_exponent=8, even_only=True):
    """All alternating run-length words with block exponents bounded by
    max_block_exponent (even exponents only by default) and total exponent at
    most max_total, sorted by (total, word string)."""
    exps = [e for e in range(2 if even_only else 1,
                             max_block_exponent + 1,
                             2 if even_only else 1)]
    words = []

    def rec(blocks, total):
        if blocks:
            words.append(tuple(blocks))
        for letter in ("L", "R"):
            if blocks and blocks[-1][0] == letter:
                continue
            for e in exps:
                if total + e <= max_total:
                    blocks.append((letter, e))
                    rec(blocks, total + e)
                    blocks.pop()

    rec([], 0)
    words.sort(key=lambda b: (sum(k for _, k in b), word_string(b)))
    return words


# ---------------------------------------------------------------------------
# orbit-wide exact KZ engine

class OrbitKZ:
    """Exact KZ transport over the whole SL(2,Z) orbit of one origami.

    Word matrices are products of precomputed one-letter transition matrices
    along the word's path through the orbit graph; the closed-path product is
    conjugate to the directly computed matrix, so characteristic polynomials
    agree exactly."""

    def __init__(self, r, u, cap=10**6):
        self.r, self.u = tuple(r), tuple(u)
        (self.nodes, self.lmap, self.rmap,
         self.data, self.mats) = hm.orbit_transport(r, u, cap=cap)
        self.dim = len(self.data[0][1])

    def word_matrix(self, word, base=0):
        """Exact matrix of an affine word at orbit node `base`, or None when
        the word does not stabilize that node."""
        blocks = word.blocks if isinstance(word, AffineWord) else \
            (parse_word(word) if isinstance(word, str) else tuple(word))
        return hm.transport_word(blocks, base, self.lmap, self.rmap,
                                 self.mats)


# ---------------------------------------------------------------------------
# the three conditions

def evaluate_conditions(a1, a2, g):
    """Combine the two polynomial analyses into the three conditions.

    Returns (conditions, verdict, level) where each condition is a dict
    {"holds": True/False/None, "level": ...}, verdict is "pass", "fail" or
    "inconclusive", and level is the overall certification level."""
    target = 2 ** (g - 1) * math.factorial(g - 1)
    conds = {}

    irr1 = bool(a1.get("irreducible"))
    conds["chi1_irreducible"] = {"holds": irr1, "level": "certified"}

    if not irr1:
        conds["splitting_real_full_degree"] = {"holds": False,
                                               "level": "certified"}
    elif not a1["totally_real"]:
        conds["splitting_real_full_degree"] = {"holds": False,
                                               "level": "certified"}
    elif a1.get("certified"):
        conds["splitting_real_full_degree"] = {
            "holds": a1["splitting_degree"] == target, "level": "certified"}
    else:
        ev = a1.get("evidence")
        if ev is not None and target in ev["surviving_orders"]:
            conds["splitting_real_full_degree"] = {"holds": True,
                                                   "level": "evidence"}
        else:
            conds["splitting_real_full_degree"] = {"holds": None,
                                                   "level": "inconclusive"}

    irr2 = bool(a2.get("irreducible"))
    if not irr2 or not irr1:
        conds["chi2_irreducible_fields_disjoint"] = {"holds": False,
                                                     "level": "certified"}
    else:
        disjoint = nt.quadratic_subfields_disjoint(
            a1["quadratic_subfields"], a2["quadratic_subfields"])
        level = "certified" if (a1.get("certified") and a2.get("certified")) \
            else "evidence"
        conds["chi2_irreducible_fields_disjoint"] = {"holds": disjoint,
                                                     "level": level}

    holds = [c["holds"] for c in conds.values()]
    if any(h is False for h in holds):
        verdict = "fail"
        level = "certified" if any(
            c["holds"] is False and c["level"] == "certified"
            for c in conds.values()) else "evidence"
    elif all(h is True for h in holds):
        verdict = "pass"
        level = "certified" if all(
            c["level"] == "certified" for c in conds.values()) else "evidence"
    else:
        verdict = "inconclusive"
        level = "inconclusive"
    return conds, verdict, level


# ---------------------------------------------------------------------------
# certificates

def _matrix_to_json(M):
    out = []
    for row in M:
        jr = []
        for x in row:
            fx = F(x)
            jr.append(int(fx) if fx.denominator == 1 else str(fx))
        out.append(jr)
    return out


def _matrix_from_json(M):
    return [[F(x) for x in row] for row in M]


def mmy_check(r, u, word1, word2, evidence_primes=200, matrices=None):
    """Run the positivity and simplicity test on one origami and two direct
    hyperbolic affine words. Returns a certificate dict; the certificate can
    be re-verified from its stored matrices alone with recheck_certificate.

    Raises ValueError when a word is not direct hyperbolic or does not
    stabilize the origami."""
    w1 = word1 if isinstance(word1, AffineWord) else AffineWord(word1)
    w2 = word2 if isinstance(word2, AffineWord) else AffineWord(word2)
    for w in (w1, w2):
        if not is_direct_hyperbolic(w):
            raise ValueError("word is not direct hyperbolic: %s" % w)
    g = genus(r, u)
    if matrices is None:
        M1, basis, cx = hm.kz_matrix(r, u, w1.blocks)
        M2, _, _ = hm.kz_matrix(r, u, w2.blocks, basis=basis, cx=cx)
    else:
        M1, M2 = matrices
    return _certificate(r, u, w1, w2, M1, M2, g, evidence_primes)


def _certificate(r, u, w1, w2, M1, M2, g, evidence_primes):
    chi1 = hm.char_poly(M1)
    chi2 = hm.char_poly(la.matmul(M2, M2))
    a1 = nt.reciprocal_analysis(chi1, evidence_primes)
    a2 = nt.reciprocal_analysis(chi2, evidence_primes)
    conds, verdict, level = evaluate_conditions(a1, a2, g)
    from . import __version__
    return {
        "origami": {"n": len(r), "r": cycle_string(r), "u": cycle_string(u)},
        "genus": g,
        "target_splitting_degree": 2 ** (g - 1) * math.factorial(g - 1),
        "phi1": {"word": str(w1), "sl2": [list(row) for row in w1.sl2],
                 "trace": w1.trace},
        "phi2": {"word": str(w2), "sl2": [list(row) for row in w2.sl2],
                 "trace": w2.trace},
        "matrix_phi1": _matrix_to_json(M1),
        "matrix_phi2": _matrix_to_json(M2),
        "char_poly_phi1": list(chi1),
        "char_poly_phi2_squared": list(chi2),
        "analysis1": a1,
        "analysis2": a2,
        "conditions": conds,
        "verdict": verdict,
        "certification_level": level,
        "evidence_primes": evidence_primes,
        "toolkit_version": __version__,
    }


def recheck_certificate(cert, evidence_primes=None):
    """Recompute a certificate's conclusions from its stored matrices alone.
    Returns (ok, fresh) where ok means char polys, conditions, verdict and
    level all reproduce."""
    if evidence_primes is None:
        evidence_primes = cert.get("evidence_primes", 200)
    M1 = _matrix_from_json(cert["matrix_phi1"])
    M2 = _matrix_from_json(cert["matrix_phi2"])
    g = cert["genus"]
    chi1 = hm.char_poly(M1)
    chi2 = hm.char_poly(la.matmul(M2, M2))
    a1 = nt.reciprocal_analysis(chi1, evidence_primes)
    a2 = nt.reciprocal_analysis(chi2, evidence_primes)
    conds, verdict, level = evaluate_conditions(a1, a2, g)
    fresh = {"char_poly_phi1": chi1, "char_poly_phi2_squared": chi2,
             "conditions": conds, "verdict": verdict,
             "certification_level": level}
    ok = (chi1 == list(cert["char_poly_phi1"])
          and chi2 == list(cert["char_poly_phi2_squared"])
          and conds == cert["conditions"]
          and verdict == cert["verdict"]
          and level == cert["certification_level"])
    return ok, fresh


# ---------------------------------------------------------------------------
# search

def search_hyperbolic_pair(r, u, max_block_exponent=8, max_total=20,
                           even_only=True, evidence_primes=200, engine=None,
                           cap=10**6):
    """First ordered pair of direct hyperbolic affine words passing the test.

    Enumerates alternating run-length words with even block exponents up to
    max_block_exponent and total exponent up to max_total per word, keeps the
    ones that stabilize the origami, and tries ordered pairs (word1, word2)
    of distinct words sorted by combined total then lexicographically by the
    two word strings. Polynomial analyses are memoized per word, and word
    matrices come from the orbit transport engine, so the scan is cheap; the
    returned certificate is recomputed with the direct chain-map engine.

    Returns (word1, word2, certificate) or None when the budget is exhausted
    (or the zero part is trivial)."""
    okz = engine if engine is not None else OrbitKZ(r, u, cap=cap)
    if okz.dim == 0:
        return None
    g = genus(r, u)
    words = []
    for blocks in words_by_total(max_total, max_block_exponent, even_only):
        w = AffineWord(blocks)
        if not is_direct_hyperbolic(w):
            continue
        M = okz.word_matrix(w)
        if M is None:
            continue
        words.append((w, M))

    memo1, memo2 = {}, {}

    def role1(i):
        if i not in memo1:
            memo1[i] = nt.reciprocal_analysis(hm.char_poly(words[i][1]),
                                              evidence_primes)
        return memo1[i]

    def role2(i):
        if i not in memo2:
            M = words[i][1]
            memo2[i] = nt.reciprocal_analysis(
                hm.char_poly(la.matmul(M, M)), evidence_primes)
        return memo2[i]

    order = sorted(
        ((i, j) for i in range(len(words)) for j in range(len(words))
         if i != j),
        key=lambda ij: (words[ij[0]][0].total + words[ij[1]][0].total,
                        str(words[ij[0]][0]), str(words[ij[1]][0])))
    for i, j in order:
        a1 = role1(i)
        if not a1.get("irreducible"):
            continue
        _, verdict, _ = evaluate_conditions(a1, role2(j), g)
        if verdict == "pass":
            w1, w2 = words[i][0], words[j][0]
            cert = mmy_check(r, u, w1, w2, evidence_primes=evidence_primes)
            assert cert["verdict"] == "pass", \
                "direct engine disagrees with orbit transport"
            return w1, w2, cert
    return None


# ---------------------------------------------------------------------------
# the full counterexample check

def counterexample_report(r, u, word1=None, word2=None, max_block_exponent=8,
                          max_total=20, evidence_primes=200, cap=10**6):
    """Check that an origami defeats the converse of the positivity
    criterion: every cusp's maximal isotropic core rank stays below the genus
    (so the criterion's hypothesis fails everywhere on the orbit) while some
    pair of affine words passes the simplicity test.

    Uses the given pair when both words are supplied, otherwise searches."""
    kappa, g, _ = stratum(r, u)
    out = {
        "origami": {"n": len(r), "r": cycle_string(r), "u": cycle_string(u)},
        "stratum": list(kappa),
        "genus": g,
    }
    engine = None
    if word1 is None or word2 is None:
        engine = OrbitKZ(r, u, cap=cap)
        orbit_data = (engine.nodes, engine.lmap, engine.rmap)
    else:
        orbit_data = None
    max_rank, reaches = forni_hypothesis(r, u, orbit_data=orbit_data)
    out["max_isotropic_rank"] = max_rank
    out["forni_hypothesis_met"] = reaches

    if g == 1:
        out["mmy"] = None
        out["search_exhausted"] = False
        out["counterexample_to_converse"] = False
        return out

    if word1 is not None and word2 is not None:
        cert = mmy_check(r, u, word1, word2,
                         evidence_primes=evidence_primes)
        out["search_exhausted"] = False
    else:
        found = search_hyperbolic_pair(
            r, u, max_block_exponent=max_block_exponent,
            max_total=max_total, evidence_primes=evidence_primes,
            engine=engine, cap=cap)
        if found is None:
            cert = None
            out["search_exhausted"] = True
        else:
            _, _, cert = found
            out["search_exhausted"] = False
    out["mmy"] = cert
    out["counterexample_to_converse"] = bool(
        (not reaches) and cert is not None and cert["verdict"] == "pass")
    return out
