"""Orchestrated verification suites.

Each suite function returns a JSON-serializable report of the shape

    {"suite": str, "pass": bool, "elapsed_s": float, "checks": [...]}

with one entry per verified identity.  The suites are side-effect free
and individually runnable; ``suite_all`` is their conjunction.  Random
data is drawn from seeded generators, and every report records its
parameters.
"""

from __future__ import annotations

import itertools
import random
import time

from . import chern, galois, gluing, hopf, numrep, s3core
from .scalars import ONE, P, Q, ParamScalar, scalar
from .s3core import AlgElement, BasisMonomial, mul

__all__ = [
    "random_element",
    "random_coinvariant",
    "suite_algebra",
    "suite_gluing",
    "suite_galois",
    "suite_chern",
    "suite_numeric",
    "suite_classical",
    "suite_all",
    "SUITES",
]


# ---------------------------------------------------------------------------
# random data
# ---------------------------------------------------------------------------

def _random_coeff(rng: random.Random) -> ParamScalar:
    c = scalar(rng.randint(-3, 3))
    if rng.random() < 0.4:
        c = c + P * rng.randint(-2, 2)
    if rng.random() < 0.4:
        c = c + Q * rng.randint(-2, 2)
    if c.is_zero():
        c = ONE
    return c


def random_element(rng: random.Random, max_shift: int = 2, max_flag: int = 2,
                   max_terms: int = 3) -> AlgElement:
    """A random bounded-degree element with small exact coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mu = rng.randint(-max_shift, max_shift)
        nu = rng.randint(-max_shift, max_shift)
        m = rng.randint(0, max_flag)
        n = 0 if m else rng.randint(0, max_flag)
        terms[BasisMonomial(mu, m, n, nu)] = _random_coeff(rng)
    return AlgElement(terms)


def random_coinvariant(rng: random.Random, max_shift: int = 2,
                       max_flag: int = 3, max_terms: int = 3) -> AlgElement:
    """A random element of the coinvariant subalgebra (winding zero)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mu = rng.randint(-max_shift, max_shift)
        m = rng.randint(0, max_flag)
        n = 0 if m else rng.randint(0, max_flag)
        terms[BasisMonomial(mu, m, n, mu)] = _random_coeff(rng)
    return AlgElement(terms)


def _check(name: str, ok: bool, **extra) -> dict:
    out = {"check_name": name, "pass": bool(ok)}
    out.update(extra)
    return out


def _finish(suite: str, checks: list, t0: float, **params) -> dict:
    return {
        "suite": suite,
        "params": params,
        "pass": all(c["pass"] for c in checks),
        "elapsed_s": round(time.perf_counter() - t0, 3),
        "checks": checks,
    }


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_algebra(seed: int = 7, triples: int = 500, pairs: int = 500) -> dict:
    """Defining relations, associativity, the involution, and the grading."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    a, ast = AlgElement.generator("a"), AlgElement.generator("a*")
    b, bst = AlgElement.generator("b"), AlgElement.generator("b*")
    one = AlgElement.one()
    checks = [
        _check("relation a*a - q aa* = 1-q",
               (mul(ast, a) - Q * mul(a, ast) - (ONE - Q) * one).is_zero()),
        _check("relation b*b - p bb* = 1-p",
               (mul(bst, b) - P * mul(b, bst) - (ONE - P) * one).is_zero()),
        _check("relation ab = ba",
               (mul(a, b) - mul(b, a)).is_zero()
               and (mul(ast, b) - mul(b, ast)).is_zero()),
        _check("relation (1-aa*)(1-bb*) = 0",
               mul(one - mul(a, ast), one - mul(b, bst)).is_zero()),
    ]
    f0 = s3core.iota_image("f0")
    f1 = s3core.iota_image("f1")
    f1s = s3core.iota_image("f1*")
    base_rels = {
        "base relation f0 = f0*": f0.star() - f0,
        "base relation f1*f1 - q f1f1* = (p-q)f0 + 1-p":
            mul(f1s, f1) - Q * mul(f1, f1s) - (P - Q) * f0 - (ONE - P) * one,
        "base relation f0f1 - p f1f0 = (1-p)f1":
            mul(f0, f1) - P * mul(f1, f0) - (ONE - P) * f1,
        "base relation (1-f0)(f1f1* - f0) = 0":
            mul(one - f0, mul(f1, f1s) - f0),
    }
    for name, val in base_rels.items():
        checks.append(_check(name, val.is_zero()))

    ok = True
    for _ in range(triples):
        x, y, z = (random_element(rng) for _ in range(3))
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            ok = False
            break
    checks.append(_check("associativity on random triples", ok,
                         count=triples))

    ok = True
    ok_inv = True
    ok_wind = True
    for _ in range(pairs):
        x, y = random_element(rng), random_element(rng)
        if mul(x, y).star() != mul(y.star(), x.star()):
            ok = False
        if x.star().star() != x:
            ok_inv = False
        conv: dict[int, AlgElement] = {}
        for i, xi in x.winding_components().items():
            for j, yj in y.winding_components().items():
                w = i + j
                conv[w] = conv.get(w, AlgElement.zero()) + mul(xi, yj)
        if {w: e for w, e in conv.items() if e} != mul(x, y).winding_components():
            ok_wind = False
    checks.append(_check("involution is anti-multiplicative", ok,
                         count=pairs))
    checks.append(_check("involution has order two", ok_inv, count=pairs))
    checks.append(_check("winding components multiply by convolution",
                         ok_wind, count=pairs))

    x = random_element(rng)
    checks.append(_check("unit laws",
                         mul(x, one) == x and mul(one, x) == x))
    ok = all(hopf.coaction_is_coassociative(random_element(rng))
             and hopf.counit_law_holds(random_element(rng))
             for _ in range(50))
    ok2 = all(hopf.coaction_is_multiplicative(random_element(rng),
                                              random_element(rng))
              for _ in range(50))
    checks.append(_check("coaction is coassociative with counit law", ok,
                         count=50))
    checks.append(_check("coaction is multiplicative", ok2, count=50))
    return _finish("algebra", checks, t0, seed=seed, triples=triples,
                   pairs=pairs)


def _basis_monomials_upto(degree: int):
    for mu, nu in itertools.product(range(-degree, degree + 1), repeat=2):
        rest = degree - abs(mu) - abs(nu)
        if rest < 0:
            continue
        yield BasisMonomial(mu, 0, 0, nu)
        for m in range(1, rest + 1):
            yield BasisMonomial(mu, m, 0, nu)
        for n in range(1, rest + 1):
            yield BasisMonomial(mu, 0, n, nu)


def suite_gluing(seed: int = 7, degree: int = 6, samples: int = 100) -> dict:
    """Chart maps, boundary matching, and trivialization laws."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    monos = list(_basis_monomials_upto(degree))
    ok = all(gluing.gluing_check(AlgElement.from_monomial(t)) for t in monos)
    checks = [_check(f"gluing on all basis monomials of degree <= {degree}",
                     ok, count=len(monos))]
    ok = all(gluing.gluing_check(random_element(rng)) for _ in range(samples))
    checks.append(_check("gluing on random elements", ok, count=samples))
    ok = all(gluing.trivialization_colinear(random_element(rng), leg)
             for leg in ("p", "q") for _ in range(samples // 2))
    checks.append(_check("charts intertwine coaction and coproduct", ok,
                         count=samples))
    ok = all(gluing.trivialization_over_base(random_coinvariant(rng), leg)
             for leg in ("p", "q") for _ in range(samples // 2))
    checks.append(_check("charts send the base into circle power zero", ok,
                         count=samples))
    f0 = s3core.iota_image("f0")
    f1 = s3core.iota_image("f1")
    xx = gluing.disc_mul(gluing.disc_generator("p"),
                         gluing.disc_generator("p", starred=True))
    want_f0_p = gluing.TrivializedElement(
        "p", {(t, 0): c for t, c in xx.terms.items()})
    checks.append(_check(
        "chart identification of the base generators",
        gluing.chi(f0, "p") == want_f0_p
        and gluing.chi(f0, "q") == gluing.TrivializedElement.one("q")
        and gluing.chi(f1, "p") == gluing.TrivializedElement(
            "p", {((1, 0), 0): ONE})
        and gluing.chi(f1, "q") == gluing.TrivializedElement(
            "q", {((1, 0), 0): ONE})))
    x = gluing.disc_generator("p")
    xs = gluing.disc_generator("p", starred=True)
    onep = gluing.DiscElement.one("p")
    checks.append(_check(
        "boundary kills the disc flag and is unital",
        gluing.boundary(x) == hopf.LaurentElement.u_power(1)
        and gluing.boundary(onep - gluing.disc_mul(x, xs)).is_zero()
        and gluing.boundary(gluing.disc_mul(xs, x)) ==
        hopf.LaurentElement.one()))
    return _finish("gluing", checks, t0, seed=seed, degree=degree,
                   samples=samples)


def suite_galois(k_max: int = 8) -> dict:
    """Connection recursion vs closed form and all connection identities."""
    t0 = time.perf_counter()
    checks = []
    ok = all(galois.strong_connection(n) ==
             galois.strong_connection_closed(n, "+") for n in range(1, k_max + 1))
    checks.append(_check("recursion equals closed form (positive powers)",
                         ok, count=k_max))
    ok = all(galois.strong_connection(-n) ==
             galois.strong_connection_closed(n, "-") for n in range(1, k_max + 1))
    checks.append(_check("recursion equals closed form (negative powers)",
                         ok, count=k_max))
    rep = galois.check_connection_properties(k_max)
    for ident in ("lifted_can", "right_colinearity", "left_colinearity",
                  "counit_law"):
        ok = all(c[ident] for c in rep["checks"])
        checks.append(_check(f"connection identity: {ident}", ok,
                             k_max=k_max))
    ok = all(galois.partition_identity_holds(n, s)
             for n in range(1, k_max + 1) for s in "+-")
    checks.append(_check("partition identities (both parameter sides)", ok,
                         count=2 * k_max))
    try:
        for k in range(1, 7):
            galois.galois_witness(k)
            galois.galois_witness(-k)
        ok = True
    except AssertionError:
        ok = False
    checks.append(_check("freeness witnesses for |k| <= 6", ok))
    return _finish("galois", checks, t0, k_max=k_max)


def suite_chern(n_max: int = 5, p_val: float = 0.5, q_val: float = 0.3,
                N: int = 300, seed: int = 7, tracial_pairs: int = 200) -> dict:
    """Idempotents, the exact trace, and the pairing."""
    t0 = time.perf_counter()
    checks = []
    for n in range(1, n_max + 1):
        for mu in (-n, n):
            e = chern.idempotent(mu)
            checks.append(_check(
                f"idempotent squared, winding {mu:+d}",
                (e @ e - e).is_zero() and e.all_coinvariant(),
                size=e.shape[0]))
    one = AlgElement.one()
    a, ast = AlgElement.generator("a"), AlgElement.generator("a*")
    beta = one - mul(a, ast)
    checks.append(_check("trace of the unit is 0",
                         chern.trace_functional(one).is_zero()))
    checks.append(_check("trace of 1-aa* is 1/(1-q)",
                         chern.trace_functional(beta) ==
                         ONE / (ONE - Q)))
    checks.append(_check(
        "trace of (1-bb*)^2 is -1/(1-p^2)",
        chern.trace_functional(
            AlgElement.from_monomial(BasisMonomial(0, 0, 2, 0))) ==
        -(ONE / (ONE - P * P))))
    val = chern.pairing(-1)
    checks.append(_check("pairing at winding -1 equals -1",
                         val == -(ONE), value=str(val)))
    pair_values = {}
    ok_int = True
    for mu in range(-3, 4):
        if mu == 0:
            continue
        v = chern.pairing(mu)
        pair_values[mu] = str(v)
        ok_int = ok_int and v.is_integer()
    checks.append(_check("pairings are integer constants for |mu| <= 3",
                         ok_int, values=pair_values))

    rng = random.Random(seed)
    ok = True
    for _ in range(tracial_pairs):
        x = random_coinvariant(rng)
        y = random_coinvariant(rng)
        if chern.trace_functional(mul(x, y)) != chern.trace_functional(
                mul(y, x)):
            ok = False
            break
    checks.append(_check("trace is tracial on random coinvariant pairs", ok,
                         count=tracial_pairs))

    reps = (numrep.build_rep("rho1theta", (0.0,), N, p_val, q_val),
            numrep.build_rep("rho2theta", (0.0,), N, p_val, q_val))
    tol_extra = 1e-9
    global_tail = (p_val ** N / (1 - p_val) + q_val ** N / (1 - q_val))
    worst = 0.0
    ok = True
    for _ in range(40):
        x = random_coinvariant(rng)
        sym = chern.trace_functional(x).evaluate(p_val, q_val)
        got = numrep.numeric_trace(x, N, p_val, q_val, reps=reps)
        err = abs(got.value - sym)
        worst = max(worst, err)
        if err > global_tail + tol_extra:
            ok = False
    checks.append(_check(
        "exact trace matches the truncated operator trace",
        ok, count=40, worst_error=worst,
        tolerance=global_tail + tol_extra, N=N))
    # the pairing values agree with truncated traces of the idempotents
    ok = True
    worst = 0.0
    for mu in (-2, -1, 1, 2):
        sym = chern.pairing(mu).evaluate(p_val, q_val)
        tr = chern.matrix_trace(chern.idempotent(mu))
        got = numrep.numeric_trace(tr, N, p_val, q_val, reps=reps)
        err = abs(got.value - sym)
        worst = max(worst, err)
        if err > got.tail_bound + tol_extra:
            ok = False
    checks.append(_check("pairings agree with truncated numeric traces", ok,
                         worst_error=worst))
    return _finish("chern", checks, t0, n_max=n_max, p=p_val, q=q_val,
                   N=N, seed=seed)


def suite_numeric(p_val: float = 0.5, q_val: float = 1.0 / 3.0,
                  N: int = 300, seed: int = 7,
                  truncations: tuple = (10, 50, 200),
                  phases_per_family: int = 5, hom_pairs: int = 200,
                  faithfulness_count: int = 100) -> dict:
    """Truncated representations against every symbolic claim."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    checks = []
    worst = 0.0
    for n in truncations:
        for family in ("rho1theta", "rho2theta"):
            for _ in range(phases_per_family):
                theta = 2.0 * 3.141592653589793 * rng.random()
                rep = numrep.build_rep(family, (theta,), n, p_val, q_val)
                worst = max(worst, max(numrep.relation_defects(rep).values()))
    rep = numrep.build_rep("classical", (0.37, 2.1), 2, p_val, q_val)
    worst = max(worst, max(numrep.relation_defects(rep).values()))
    checks.append(_check("defining relations hold on safe blocks",
                         worst <= 1e-12, defect=worst, tolerance=1e-12,
                         truncations=list(truncations)))

    ok = True
    worst = 0.0
    for n in truncations:
        for family in ("rho1theta", "rho2theta"):
            rep = numrep.build_rep(family, (0.0,), n, p_val, q_val)
            res = numrep.spectrum_check(rep)
            worst = max(worst, res["max_error"])
            ok = ok and res["simple"] and res["max_error"] <= 1e-10
    checks.append(_check("flag spectra are the geometric sequences", ok,
                         defect=worst, tolerance=1e-10))

    hom_n = 30
    rep1 = numrep.build_rep("rho1theta", (0.9,), hom_n, p_val, q_val)
    rep2 = numrep.build_rep("rho2theta", (2.2,), hom_n, p_val, q_val)
    worst = 0.0
    for _ in range(hom_pairs):
        x, y = random_element(rng), random_element(rng)
        worst = max(worst, numrep.homomorphism_defect(x, y, rep1),
                    numrep.homomorphism_defect(x, y, rep2))
    checks.append(_check("matrix images respect multiplication", worst <= 1e-10,
                         defect=worst, tolerance=1e-10, count=hom_pairs))

    reps = (numrep.build_rep("rho1theta", (0.0,), N, p_val, q_val),
            numrep.build_rep("rho2theta", (0.0,), N, p_val, q_val))
    ok = True
    worst = 0.0
    count = 0
    for mu in range(-3, 4):
        for m, n_exp in [(0, 0)] + [(m, 0) for m in range(1, 7)] + \
                        [(0, n) for n in range(1, 7)]:
            x = AlgElement.from_monomial(BasisMonomial(mu, m, n_exp, mu))
            sym = chern.trace_functional(x).evaluate(p_val, q_val)
            got = numrep.numeric_trace(x, N, p_val, q_val, reps=reps)
            err = abs(got.value - sym)
            worst = max(worst, err)
            count += 1
            if err > got.tail_bound + 1e-9:
                ok = False
    checks.append(_check(
        "truncated traces match the exact trace on basis monomials", ok,
        defect=worst, count=count, N=N))

    res = numrep.mvn_witness_check(10)
    checks.append(_check(
        "shift-tensor-projection witness identities",
        res["max_defect"] <= 1e-12 and res["projection_rank"] == 1
        and res["partial_isometry_defect"] <= 1e-12,
        defect=res["max_defect"], tolerance=1e-12))

    ok = True
    worst_defect = 0.0
    for family, gen, bound in (("rho2theta", "a", 1 - q_val),
                               ("rho1theta", "b", 1 - p_val),
                               ("rho1theta", "a", 1 - q_val)):
        rep = numrep.build_rep(family, (0.4,), 100, p_val, q_val)
        res = numrep.polar_isometry_check(rep, gen)
        worst_defect = max(worst_defect, res["isometry_defect"])
        if res["min_eig"] < bound - 1e-10 or res["isometry_defect"] > 1e-10:
            ok = False
    checks.append(_check("polar parts are isometries above the gap", ok,
                         defect=worst_defect, tolerance=1e-10))

    found = 0
    tried = 0
    for i in range(faithfulness_count):
        x = random_element(rng)
        if x.is_zero():
            continue
        tried += 1
        if numrep.faithfulness_probe(x, seed=seed + i):
            found += 1
    checks.append(_check("separation probe finds witnesses for nonzero "
                         "elements", found == tried, found=found,
                         count=tried))
    return _finish("numeric", checks, t0, p=p_val, q=q_val, N=N, seed=seed)


def suite_classical(samples: int = 1000, seed: int = 7) -> dict:
    """Round-trip and equivariance of the classical coordinate maps."""
    t0 = time.perf_counter()
    res = numrep.classical_maps_check(samples, seed=seed)
    checks = [_check("coordinate maps are mutually inverse circle maps",
                     res["max_error"] <= 1e-12, defect=res["max_error"],
                     tolerance=1e-12, samples=samples)]
    return _finish("classical", checks, t0, samples=samples, seed=seed)


def suite_all(p_val: float = 0.5, q_val: float = 1.0 / 3.0, N: int = 300,
              seed: int = 7) -> list[dict]:
    """Every suite with its acceptance-grade parameters."""
    return [
        suite_algebra(seed=seed),
        suite_gluing(seed=seed),
        suite_galois(),
        suite_chern(p_val=p_val, q_val=q_val, N=N, seed=seed),
        suite_numeric(p_val=p_val, q_val=q_val, N=N, seed=seed),
        suite_classical(seed=seed),
    ]


SUITES = {
    "algebra": suite_algebra,
    "gluing": suite_gluing,
    "galois": suite_galois,
    "chern": suite_chern,
    "numeric": suite_numeric,
    "classical": suite_classical,
}
