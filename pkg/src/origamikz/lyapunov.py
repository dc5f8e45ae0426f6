"""Monte-Carlo estimation of the KZ Lyapunov spectrum over a Teichmuller
curve.

A random Teichmuller geodesic is modeled by alternating continued-fraction
blocks L^k, R^k with digits k drawn from the Gauss measure. The corresponding
exact one-letter KZ transition matrices (from homology.orbit_transport) are
floated once and multiplied along the orbit path; a full frame is
re-orthonormalized every `cadence` multiplications and the log-stretch
factors accumulate per direction. Everything is normalized by the accumulated
log-norm of the 2x2 base product, so the tautological exponent is exactly 1.

Floating point lives only in this module; everything upstream is exact.
"""

import math

import numpy as np

from . import homology as hm


def float_transport(r, u, transport=None):
    """Orbit maps and per-node one-letter transition matrices as float
    arrays. Returns (lmap, rmap, mats)."""
    if transport is None:
        transport = hm.orbit_transport(r, u)
    nodes, lmap, rmap, data, mats = transport
    fmats = {}
    for letter in ("L", "R"):
        fmats[letter] = [np.array([[float(x) for x in row] for row in M])
                         for M in mats[letter]]
    return lmap, rmap, fmats

BASE_MATS = {"L": np.array([[1.0, 1.0], [0.0, 1.0]]),
             "R": np.array([[1.0, 0.0], [1.0, 1.0]])}


def gauss_digit(rng):
    """Continued-fraction digit with the Gauss measure
    P(k) = log2(1 + 1/(k(k+2)))."""
    U = rng.random()
    t = 2.0 ** (U - 1.0)
    k = math.ceil((2.0 * t - 1.0) / (1.0 - t)) if t < 1.0 else 1
    return max(1, k)


def _run_chain(lmap, rmap, fmats, steps, seed, cadence, batches):
    d = fmats["L"][0].shape[0]
    rng = np.random.default_rng(np.random.PCG64(seed))
    node = 0
    frame = np.eye(d)
    B2 = np.eye(2)
    zero_logs = np.zeros(d)
    base_log = 0.0
    batch_hist = []
    done = 0
    pending = 0
    letter = "L"
    maps = {"L": lmap, "R": rmap}
    batch_edges = [steps * (i + 1) // batches for i in range(batches)]
    next_edge = 0

    def renorm():
        nonlocal frame, B2, zero_logs, base_log, pending
        q, rr = np.linalg.qr(frame)
        zero_logs += np.log(np.abs(np.diag(rr)))
        frame = q
        s = np.linalg.norm(B2, 2)
        base_log += math.log(s)
        B2 = B2 / s
        pending = 0

    while done < steps:
        k = min(gauss_digit(rng), steps - done)
        A = fmats[letter]
        mp = maps[letter]
        Bstep = BASE_MATS[letter]
        for _ in range(k):
            frame = A[node] @ frame
            B2 = Bstep @ B2
            node = mp[node]
            done += 1
            pending += 1
            if pending == cadence or done == steps:
                renorm()
            if next_edge < batches and done == batch_edges[next_edge]:
                if pending:
                    renorm()
                batch_hist.append((zero_logs.copy(), base_log))
                next_edge += 1
        letter = "R" if letter == "L" else "L"

    assert base_log > 0, "base product did not stretch"
    order = np.argsort(-zero_logs)
    lam = zero_logs[order] / base_log
    prev_z = np.zeros(d)
    prev_b = 0.0
    batch_vals = []
    for z, b in batch_hist:
        dz = (z - prev_z)[order]
        db = b - prev_b
        batch_vals.append(dz / db if db > 0 else dz * 0.0)
        prev_z, prev_b = z.copy(), b
    bv = np.array(batch_vals)
    se = bv.std(axis=0, ddof=1) / math.sqrt(len(bv))
    running = [tuple((z[order] / b).tolist()) for z, b in batch_hist if b > 0]
    return lam, se, {"running": running,
                     "batch_vals": [tuple(v.tolist()) for v in bv]}


def estimate_exponents(r, u, steps, seed, cadence=32, batches=20, chains=1,
                       transport=None):
    """Monte-Carlo zero-part Lyapunov exponents.

    Returns a dict with the non-negative half of the spectrum (nu_2 .. nu_g,
    descending; the tautological nu_1 = 1 is exact by normalization and not
    estimated), per-exponent batch-mean standard errors, the full signed
    spectrum, and per-chain histories. Deterministic given (steps, seed,
    cadence, batches, chains). A trivial zero part (torus) gives an empty
    exponent list."""
    lmap, rmap, fmats = float_transport(r, u, transport=transport)
    d = fmats["L"][0].shape[0]
    out = {"steps": steps, "seed": seed, "cadence": cadence,
           "batches": batches, "chains": chains,
           "origami": {"n": len(r)}, "dim_zero_part": d}
    if d == 0:
        out.update(exponents=[], std_errors=[], all_exponents=[],
                   histories=[])
        return out
    if chains == 1:
        chain_seeds = [seed]
    else:
        chain_seeds = [s.generate_state(1)[0]
                       for s in np.random.SeedSequence(seed).spawn(chains)]
    lams, ses, hists = [], [], []
    for cs in chain_seeds:
        lam, se, hist = _run_chain(lmap, rmap, fmats, steps, int(cs),
                                   cadence, batches)
        lams.append(lam)
        ses.append(se)
        hists.append(hist)
    lam = np.mean(lams, axis=0)
    se = np.sqrt(np.sum(np.array(ses) ** 2, axis=0)) / len(ses)
    half = d // 2
    out.update(exponents=lam[:half].tolist(),
               std_errors=se[:half].tolist(),
               all_exponents=lam.tolist(),
               all_std_errors=se.tolist(),
               histories=hists)
    return out


def convergence_diagnostics(history):
    """Batch means, running estimates, and a monotone-tail check for one
    chain history. The chain is flagged converged when the running top
    exponent moves by less than three standard errors over the last quarter
    of the batches."""
    bv = np.array(history["batch_vals"])
    running = history["running"]
    means = bv.mean(axis=0)
    se = bv.std(axis=0, ddof=1) / math.sqrt(len(bv))
    tail = [rn[0] for rn in running[max(0, 3 * len(running) // 4):]]
    tail_spread = (max(tail) - min(tail)) if tail else float("inf")
    return {
        "batch_means": means.tolist(),
        "batch_std_errors": se.tolist(),
        "running": running,
        "tail_spread_top": tail_spread,
        "converged": bool(tail_spread <= 3 * se[0]) if len(se) else False,
    }
