"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded, 4
inconclusive certificate under --strict. Resource caps come from flags or
the environment variables ORIGAMIKZ_ORBIT_CAP and ORIGAMIKZ_MAX_PAIRS.
"""

import os
import sys

import click

from . import __version__
from . import reports as rp
from .origami import Origami, stratum, commutator, automorphisms
from .permutations import cycle_string
from . import orbit as ob
from . import cylinders as cy
from . import homology as hm
from . import criterion as cr
from . import lyapunov as ly
from . import enumeration as en


def _load(path):
    try:
        with open(path) as f:
            return Origami.from_text(f.read())
    except OSError as e:
        raise click.UsageError("cannot read %s: %s" % (path, e))
    except (ValueError, AssertionError) as e:
        raise click.UsageError("bad origami file %s: %s" % (path, e))


def _orbit_cap():
    return int(os.environ.get("ORIGAMIKZ_ORBIT_CAP", 10**6))


def _origami_info(o):
    return {"n": o.n, "r": cycle_string(o.r), "u": cycle_string(o.u)}


def _emit(env, json_path):
    if json_path:
        rp.write_json(env, json_path)


def _word(text):
    try:
        w = cr.AffineWord(text)
    except (ValueError, AssertionError) as e:
        raise click.UsageError("bad word %r: %s" % (text, e))
    return w


@click.group()
@click.version_option(version=__version__, prog_name="origamikz")
def main():
    """Exact arithmetic for origamis: orbits, cylinders, KZ cocycle
    certificates and Lyapunov exponents."""


@main.command("stratum")
@click.option("--input", "path", required=True, type=str)
@click.option("--json", "json_path", default=None, type=str)
def stratum_cmd(path, json_path):
    """Stratum, genus and singularity data."""
    o = _load(path)
    kappa, g, fixed = stratum(o.r, o.u)
    c = commutator(o.r, o.u)
    env = rp.envelope("stratum", {"input": path, "origami": _origami_info(o)})
    rp.add_section(env, "stratum", {
        "kappa": list(kappa), "genus": g, "regular_vertices": fixed,
        "commutator": cycle_string(c),
        "automorphism_count": len(automorphisms(o.r, o.u)),
    })
    click.echo("n = %d" % o.n)
    click.echo("stratum kappa = %s" % (tuple(kappa),))
    click.echo("genus = %d" % g)
    click.echo("commutator = %s" % cycle_string(c))
    click.echo("regular vertices = %d" % fixed)
    _emit(env, json_path)


@main.command("orbit")
@click.option("--input", "path", required=True, type=str)
@click.option("--json", "json_path", default=None, type=str)
@click.option("--edges", "edges_path", default=None, type=str,
              help="write the orbit graph edge list to this file")
def orbit_cmd(path, json_path, edges_path):
    """SL(2,Z) orbit of the origami."""
    o = _load(path)
    try:
        nodes, lmap, rmap = ob.sl2_orbit(o.r, o.u, cap=_orbit_cap())
    except ob.CapExceeded as e:
        click.echo("orbit cap exceeded: %s" % e, err=True)
        sys.exit(3)
    env = rp.envelope("orbit", {"input": path, "origami": _origami_info(o)})
    rp.add_section(env, "orbit", {
        "size": len(nodes),
        "cusps": len(ob.cusps(lmap)),
        "nodes": [{"r": cycle_string(r), "u": cycle_string(u)}
                  for r, u in nodes],
    })
    click.echo("orbit size = %d" % len(nodes))
    click.echo("cusps = %d" % len(ob.cusps(lmap)))
    for v, (r, u) in enumerate(nodes[:20]):
        click.echo("node %d: r=%s u=%s" % (v, cycle_string(r),
                                           cycle_string(u)))
    if len(nodes) > 20:
        click.echo("... (%d more nodes)" % (len(nodes) - 20))
    if edges_path:
        with open(edges_path, "w") as f:
            f.write(ob.orbit_edge_list(nodes, lmap, rmap))
        click.echo("edge list written to %s" % edges_path)
    _emit(env, json_path)


@main.command("veech")
@click.option("--input", "path", required=True, type=str)
@click.option("--json", "json_path", default=None, type=str)
def veech_cmd(path, json_path):
    """Veech group data: index, cusps, elliptic points, curve genus."""
    o = _load(path)
    try:
        data = ob.veech_data(o.r, o.u)
    except ob.CapExceeded as e:
        click.echo("orbit cap exceeded: %s" % e, err=True)
        sys.exit(3)
    env = rp.envelope("veech", {"input": path, "origami": _origami_info(o)})
    rp.add_section(env, "veech", data)
    for key in ("index", "projective_index", "contains_minus_identity",
                "cusps", "cusp_widths", "e2", "e3", "curve_genus",
                "projective_only"):
        click.echo("%s = %s" % (key, data[key]))
    _emit(env, json_path)


@main.command("cusps")
@click.option("--input", "path", required=True, type=str)
@click.option("--json", "json_path", default=None, type=str)
def cusps_cmd(path, json_path):
    """Per-cusp cylinder inventories and isotropic ranks."""
    o = _load(path)
    try:
        rows = cy.cusp_analysis(o.r, o.u)
    except ob.CapExceeded as e:
        click.echo("orbit cap exceeded: %s" % e, err=True)
        sys.exit(3)
    g = stratum(o.r, o.u)[1]
    max_rank, reaches = cy.forni_hypothesis(o.r, o.u)
    env = rp.envelope("cusps", {"input": path, "origami": _origami_info(o)})
    rp.add_section(env, "cusps", {"per_cusp": rows, "genus": g,
                                  "max_isotropic_rank": max_rank,
                                  "forni_hypothesis_met": reaches})
    for c in rows:
        click.echo("cusp at node %d: width %d, cylinders %s, rank %d, "
                   "equal core pairs %s"
                   % (c["representative"], c["width"], c["cylinders"],
                      c["rank"], c["equal_pairs"]))
    click.echo("max isotropic rank = %d (genus %d) -> criterion hypothesis "
               "%s" % (max_rank, g, "met" if reaches else "not met"))
    _emit(env, json_path)


@main.command("cylinders")
@click.option("--input", "path", required=True, type=str)
@click.option("--json", "json_path", default=None, type=str)
def cylinders_cmd(path, json_path):
    """Horizontal cylinder decomposition of the input origami."""
    o = _load(path)
    cyls = cy.horizontal_cylinders(o.r, o.u)
    rank, eq = cy.isotropic_rank(o.r, o.u, cyls)
    env = rp.envelope("cylinders",
                      {"input": path, "origami": _origami_info(o)})
    rp.add_section(env, "cylinders", {
        "cylinders": [{"width": w, "height": h, "rows": rows}
                      for w, h, rows in cyls],
        "isotropic_rank": rank,
        "equal_core_pairs": eq,
    })
    for w, h, rows in cyls:
        click.echo("cylinder width %d height %d rows %s" % (w, h, rows))
    click.echo("isotropic rank = %d" % rank)
    _emit(env, json_path)


@main.command("kz")
@click.option("--input", "path", required=True, type=str)
@click.option("--word", "word_text", required=True, type=str)
@click.option("--reference-basis", is_flag=True,
              help="express the matrix in the bundled eight-square "
                   "reference basis")
@click.option("--json", "json_path", default=None, type=str)
def kz_cmd(path, word_text, reference_basis, json_path):
    """KZ matrix of an affine word on the zero part of homology."""
    o = _load(path)
    w = _word(word_text)
    try:
        M, basis, cx = hm.kz_matrix(o.r, o.u, w.blocks)
    except ValueError as e:
        raise click.UsageError(str(e))
    if reference_basis:
        try:
            ref = hm.reference_basis_8(cx)
        except AssertionError as e:
            raise click.UsageError(str(e))
        M = hm.express_in_basis(cx, M, basis, ref)
    chi = hm.char_poly(M)
    env = rp.envelope("kz", {"input": path, "origami": _origami_info(o),
                             "word": str(w),
                             "reference_basis": bool(reference_basis)})
    rp.add_section(env, "kz", {
        "word": str(w), "sl2": [list(r) for r in w.sl2], "trace": w.trace,
        "matrix": cr._matrix_to_json(M),
        "char_poly_ascending": chi,
    })
    click.echo("word %s, sl2 %s, trace %d" % (w, w.sl2, w.trace))
    for row in M:
        click.echo("  [%s]" % ", ".join(str(x) for x in row))
    click.echo("char poly (ascending) = %s" % (chi,))
    _emit(env, json_path)


def _mmy_section(env, cert):
    level = cert["certification_level"]
    certification = "exact" if level == "certified" else "evidence"
    status = "ok" if cert["verdict"] != "inconclusive" else "inconclusive"
    rp.add_section(env, "mmy", cert, certification=certification,
                   status=status)


def _echo_cert(cert):
    click.echo("phi1 = %s (trace %d)" % (cert["phi1"]["word"],
                                         cert["phi1"]["trace"]))
    click.echo("phi2 = %s (trace %d)" % (cert["phi2"]["word"],
                                         cert["phi2"]["trace"]))
    click.echo("char poly phi1        = %s" % (cert["char_poly_phi1"],))
    click.echo("char poly phi2 squared = %s"
               % (cert["char_poly_phi2_squared"],))
    a1, a2 = cert["analysis1"], cert["analysis2"]
    click.echo("splitting field 1: type %s degree %s quadratic subfields %s"
               % (a1.get("galois_type"), a1.get("splitting_degree"),
                  a1.get("quadratic_subfields")))
    if "alt_resolvent_subfields" in a1:
        click.echo("  (alternate resolvent route prints %s)"
                   % (a1["alt_resolvent_subfields"],))
    click.echo("splitting field 2: type %s degree %s quadratic subfields %s"
               % (a2.get("galois_type"), a2.get("splitting_degree"),
                  a2.get("quadratic_subfields")))
    if "alt_resolvent_subfields" in a2:
        click.echo("  (alternate resolvent route prints %s)"
                   % (a2["alt_resolvent_subfields"],))
    for name, c in cert["conditions"].items():
        click.echo("condition %s: %s (%s)" % (name, c["holds"], c["level"]))
    click.echo("verdict = %s (%s)" % (cert["verdict"],
                                      cert["certification_level"]))


@main.command("mmy")
@click.option("--input", "path", required=True, type=str)
@click.option("--phi1", "w1_text", required=True, type=str)
@click.option("--phi2", "w2_text", required=True, type=str)
@click.option("--evidence-primes", default=200, type=int)
@click.option("--strict", is_flag=True)
@click.option("--json", "json_path", default=None, type=str)
def mmy_cmd(path, w1_text, w2_text, evidence_primes, strict, json_path):
    """Positivity and simplicity certificate for a pair of affine words."""
    o = _load(path)
    w1, w2 = _word(w1_text), _word(w2_text)
    try:
        cert = cr.mmy_check(o.r, o.u, w1, w2,
                            evidence_primes=evidence_primes)
    except ValueError as e:
        raise click.UsageError(str(e))
    env = rp.envelope("mmy", {"input": path, "origami": _origami_info(o),
                              "phi1": str(w1), "phi2": str(w2),
                              "evidence_primes": evidence_primes})
    _mmy_section(env, cert)
    _echo_cert(cert)
    _emit(env, json_path)
    if strict and cert["verdict"] == "inconclusive":
        sys.exit(4)


@main.command("lyapunov")
@click.option("--input", "path", required=True, type=str)
@click.option("--steps", default=10**6, type=int)
@click.option("--seed", default=7, type=int)
@click.option("--chains", default=1, type=int)
@click.option("--cadence", default=32, type=int)
@click.option("--json", "json_path", default=None, type=str)
def lyapunov_cmd(path, steps, seed, chains, cadence, json_path):
    """Monte-Carlo KZ Lyapunov exponents."""
    o = _load(path)
    est = ly.estimate_exponents(o.r, o.u, steps, seed, cadence=cadence,
                                chains=chains)
    env = rp.envelope("lyapunov", {"input": path,
                                   "origami": _origami_info(o),
                                   "steps": steps, "seed": seed,
                                   "chains": chains, "cadence": cadence})
    payload = {k: est[k] for k in ("exponents", "std_errors",
                                   "all_exponents", "dim_zero_part",
                                   "steps", "seed", "chains")}
    rp.add_section(env, "lyapunov", payload, certification="monte-carlo",
                   status="ok" if est["exponents"] or est["dim_zero_part"]
                   == 0 else "empty")
    click.echo("nu_1 = 1 (exact by normalization)")
    if not est["exponents"]:
        click.echo("zero part is trivial; no further exponents")
    for i, (v, e) in enumerate(zip(est["exponents"], est["std_errors"])):
        click.echo("nu_%d = %.4f +- %.4f (monte-carlo)" % (i + 2, v, e))
    _emit(env, json_path)


@main.command("enumerate")
@click.option("--degree", required=True, type=int)
@click.option("--stratum", "stratum_text", default="", type=str,
              help="comma-separated zero orders, e.g. 2,2 (empty for genus "
                   "1)")
@click.option("--max-rank", default=None, type=int)
@click.option("--mmy", "require_mmy", is_flag=True)
@click.option("--threads", default=1, type=int)
@click.option("--max-pairs", default=None, type=int)
@click.option("--json", "json_path", default=None, type=str)
def enumerate_cmd(degree, stratum_text, max_rank, require_mmy, threads,
                  max_pairs, json_path):
    """Enumerate origamis of one degree and stratum, grouped into orbits,
    with the rank filter for criterion counterexample candidates."""
    try:
        kappa = tuple(int(x) for x in stratum_text.split(",") if x.strip())
    except ValueError:
        raise click.UsageError("bad stratum %r" % stratum_text)
    if max_pairs is None and "ORIGAMIKZ_MAX_PAIRS" in os.environ:
        max_pairs = int(os.environ["ORIGAMIKZ_MAX_PAIRS"])
    try:
        spec = en.SearchSpec(degree, kappa, max_rank=max_rank,
                             require_mmy=require_mmy, threads=threads,
                             max_pairs=max_pairs, orbit_cap=_orbit_cap())
    except ValueError as e:
        raise click.UsageError(str(e))
    try:
        report = en.run_search(spec)
    except ob.CapExceeded as e:
        click.echo("resource cap exceeded: %s" % e, err=True)
        sys.exit(3)
    env = rp.envelope("enumerate", {"degree": degree, "kappa": list(kappa),
                                    "max_rank": max_rank,
                                    "require_mmy": require_mmy})
    rp.add_section(env, "enumerate", {
        "pair_count": report["pair_count"],
        "orbit_count": report["orbit_count"],
        "orbit_sizes": report["orbit_sizes"],
        "complete": report["complete"],
        "candidates": [
            {k: (cycle_string(v[0]) + " / " + cycle_string(v[1])
                 if k == "representative" else v)
             for k, v in c.items()}
            for c in report["candidates"]],
    }, status="ok" if report["complete"] else "partial")
    click.echo("degree %d stratum %s: %d canonical pairs, %d orbits %s"
               % (degree, kappa, report["pair_count"],
                  report["orbit_count"], report["orbit_sizes"]))
    if not report["complete"]:
        click.echo("WARNING: pair cap hit; results are partial")
    click.echo("%d orbit(s) pass the rank filter:"
               % len(report["candidates"]))
    for c in report["candidates"]:
        r, u = c["representative"]
        click.echo("")
        click.echo("# orbit size %d, max isotropic rank %d, genus %d, "
                   "status %s" % (c["orbit_size"], c["max_isotropic_rank"],
                                  c["genus"], c["status"]))
        click.echo(Origami(r, u).to_text().rstrip("\n"))
    _emit(env, json_path)
    if not report["complete"]:
        sys.exit(3)


@main.command("counterexample")
@click.option("--input", "path", required=True, type=str)
@click.option("--phi1", "w1_text", default=None, type=str)
@click.option("--phi2", "w2_text", default=None, type=str)
@click.option("--max-block-exponent", default=8, type=int)
@click.option("--max-total", default=20, type=int)
@click.option("--evidence-primes", default=200, type=int)
@click.option("--steps", default=0, type=int,
              help="if positive, append a Monte-Carlo spectrum section")
@click.option("--seed", default=7, type=int)
@click.option("--strict", is_flag=True)
@click.option("--json", "json_path", default=None, type=str)
def counterexample_cmd(path, w1_text, w2_text, max_block_exponent,
                       max_total, evidence_primes, steps, seed, strict,
                       json_path):
    """Full check that the input defeats the converse of the positivity
    criterion: rank below genus at every cusp plus a passing simplicity
    certificate."""
    o = _load(path)
    kwargs = {}
    if w1_text and w2_text:
        kwargs["word1"] = _word(w1_text)
        kwargs["word2"] = _word(w2_text)
    try:
        rep = cr.counterexample_report(
            o.r, o.u, max_block_exponent=max_block_exponent,
            max_total=max_total, evidence_primes=evidence_primes,
            cap=_orbit_cap(), **kwargs)
    except ob.CapExceeded as e:
        click.echo("orbit cap exceeded: %s" % e, err=True)
        sys.exit(3)
    except ValueError as e:
        raise click.UsageError(str(e))
    env = rp.envelope("counterexample",
                      {"input": path, "origami": _origami_info(o)})
    rp.add_section(env, "rank", {
        "stratum": rep["stratum"], "genus": rep["genus"],
        "max_isotropic_rank": rep["max_isotropic_rank"],
        "forni_hypothesis_met": rep["forni_hypothesis_met"]})
    click.echo("stratum %s, genus %d" % (tuple(rep["stratum"]),
                                         rep["genus"]))
    click.echo("max isotropic rank over cusps = %d -> criterion hypothesis "
               "%s" % (rep["max_isotropic_rank"],
                       "met" if rep["forni_hypothesis_met"] else
                       "fails at every cusp"))
    cert = rep["mmy"]
    if cert is None:
        rp.add_section(env, "mmy", {"found": False,
                                    "search_exhausted":
                                        rep["search_exhausted"]},
                       certification="evidence", status="inconclusive")
        if rep["genus"] == 1:
            click.echo("zero part is trivial; the simplicity test is "
                       "vacuous")
        else:
            click.echo("no passing pair within the search budget")
    else:
        _mmy_section(env, cert)
        _echo_cert(cert)
    if steps > 0:
        est = ly.estimate_exponents(o.r, o.u, steps, seed)
        rp.add_section(env, "lyapunov",
                       {k: est[k] for k in ("exponents", "std_errors",
                                            "steps", "seed")},
                       certification="monte-carlo")
        for i, (v, e) in enumerate(zip(est["exponents"],
                                       est["std_errors"])):
            click.echo("nu_%d = %.4f +- %.4f (monte-carlo)" % (i + 2, v, e))
    verdict = rep["counterexample_to_converse"]
    rp.add_section(env, "verdict",
                   {"counterexample_to_converse": verdict},
                   certification="exact" if cert is not None and
                   cert["certification_level"] == "certified" else
                   "evidence",
                   status="ok" if cert is not None else "inconclusive")
    click.echo("counterexample to the converse: %s"
               % ("YES" if verdict else "no"))
    _emit(env, json_path)
    if strict and (cert is None or cert["verdict"] == "inconclusive"):
        sys.exit(4)


if __name__ == "__main__":
    main()
