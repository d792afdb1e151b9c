"""Truncated operator models: the independent numeric oracle.

The two infinite-dimensional representation families act on the span of
an orthonormal basis e_0, e_1, ... by a phase times the identity on one
generator and a weighted shift on the other:

    family 1:  a e_k = e^(i theta) e_k,      b e_k = sqrt(1-p^(k+1)) e_(k+1)
    family 2:  a e_k = sqrt(1-q^(k+1)) e_(k+1),  b e_k = e^(i theta) e_k

plus a two-phase family of one-dimensional classical points.  Truncation
keeps the first N basis vectors and sends the top one to 0 under the
shift, so all identity checks restrict to the sub-block the boundary
cannot reach.

Also here: spectra of the flag operators, polar-isometry and
shift-tensor-projection witnesses, the defect of the classical
coordinate maps, and a randomized separation probe for nonzero algebra
elements.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .s3core import AlgElement, BasisMonomial

__all__ = [
    "TruncatedRep",
    "build_rep",
    "evaluate",
    "relation_defects",
    "homomorphism_defect",
    "numeric_trace",
    "trace_tail_bound",
    "TraceResult",
    "spectrum_check",
    "polar_isometry_check",
    "mvn_witness_check",
    "classical_maps_check",
    "faithfulness_probe",
]

FAMILIES = ("rho1theta", "rho2theta", "classical")


@dataclass
class TruncatedRep:
    """Generator matrices of one truncated irreducible representation."""

    family: str
    phases: tuple
    N: int
    p: float
    q: float
    matrices: dict = field(repr=False)
    _pows: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.matrices["a"].shape[0]

    def gen(self, name: str) -> np.ndarray:
        return self.matrices[name]

    def _power(self, key: str, base: np.ndarray, k: int) -> np.ndarray:
        hit = self._pows.get((key, k))
        if hit is None:
            hit = np.linalg.matrix_power(base, k)
            self._pows[(key, k)] = hit
        return hit

    def _flag(self, which: str) -> np.ndarray:
        # which is "fa" for 1 - aa* or "fb" for 1 - bb*
        hit = self._pows.get((which, 1))
        if hit is None:
            g = "a" if which == "fa" else "b"
            hit = np.eye(self.dim, dtype=complex) - \
                self.matrices[g] @ self.matrices[g + "*"]
            self._pows[(which, 1)] = hit
        return hit


def _weighted_shift(N: int, r: float) -> np.ndarray:
    m = np.zeros((N, N), dtype=complex)
    for k in range(N - 1):
        m[k + 1, k] = math.sqrt(1.0 - r ** (k + 1))
    return m


def build_rep(family: str, phases, N: int, p_val: float,
              q_val: float) -> TruncatedRep:
    """Assemble the generator matrices of one representation truncation."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not (0.0 < p_val < 1.0 and 0.0 < q_val < 1.0):
        raise ValueError("parameters must lie in (0, 1)")
    if isinstance(phases, (int, float)):
        phases = (float(phases),)
    else:
        phases = tuple(float(t) for t in phases)
    if family == "classical":
        if len(phases) != 2:
            raise ValueError("the classical family takes two phases")
        a = np.array([[cmath.exp(1j * phases[0])]])
        b = np.array([[cmath.exp(1j * phases[1])]])
    else:
        if len(phases) != 1:
            raise ValueError("the shift families take one phase")
        if N < 2:
            raise ValueError("truncation dimension must be at least 2")
        phase = cmath.exp(1j * phases[0]) * np.eye(N, dtype=complex)
        if family == "rho1theta":
            a, b = phase, _weighted_shift(N, p_val)
        else:
            a, b = _weighted_shift(N, q_val), phase
    mats = {"a": a, "a*": a.conj().T, "b": b, "b*": b.conj().T}
    return TruncatedRep(family, phases, N, p_val, q_val, mats)


def _mono_matrix(t: BasisMonomial, rep: TruncatedRep) -> np.ndarray:
    dim = rep.dim
    factors = []
    if t.mu:
        base = rep.gen("a") if t.mu > 0 else rep.gen("a*")
        factors.append(rep._power("a" if t.mu > 0 else "a*", base,
                                  abs(t.mu)))
    if t.m:
        factors.append(rep._power("fa", rep._flag("fa"), t.m))
    if t.n:
        factors.append(rep._power("fb", rep._flag("fb"), t.n))
    if t.nu:
        base = rep.gen("b") if t.nu > 0 else rep.gen("b*")
        factors.append(rep._power("b" if t.nu > 0 else "b*", base,
                                  abs(t.nu)))
    if not factors:
        return np.eye(dim, dtype=complex)
    out = factors[0]
    for m in factors[1:]:
        out = out @ m
    return out


def evaluate(x: AlgElement, rep: TruncatedRep) -> np.ndarray:
    """Matrix image of an element: substitute the generator matrices."""
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for t, c in x.terms.items():
        out += complex(c.evaluate(rep.p, rep.q)) * _mono_matrix(t, rep)
    return out


def _safe_norm(m: np.ndarray, cols: int) -> float:
    # operator norm of the restriction to the span of the first `cols`
    # basis vectors (the block the truncation boundary cannot corrupt)
    if cols <= 0:
        raise ValueError("no safe block at this truncation")
    return float(np.linalg.norm(m[:, :cols], 2))


def relation_defects(rep: TruncatedRep) -> dict[str, float]:
    """Defects of the four defining relations on the safe block."""
    a, ast = rep.gen("a"), rep.gen("a*")
    b, bst = rep.gen("b"), rep.gen("b*")
    eye = np.eye(rep.dim, dtype=complex)
    cols = rep.dim - 1 if rep.dim > 1 else 1
    rels = {
        "a*a - q aa* - (1-q)": ast @ a - rep.q * (a @ ast) - (1 - rep.q) * eye,
        "b*b - p bb* - (1-p)": bst @ b - rep.p * (b @ bst) - (1 - rep.p) * eye,
        "ab - ba": a @ b - b @ a,
        "(1-aa*)(1-bb*)": (eye - a @ ast) @ (eye - b @ bst),
    }
    return {name: _safe_norm(m, cols) for name, m in rels.items()}


def homomorphism_defect(x: AlgElement, y: AlgElement,
                        rep: TruncatedRep) -> float:
    """Compare the image of a product with the product of the images.

    Both sides agree exactly on basis vectors the shifts cannot push
    across the truncation boundary; the defect is measured there.
    """
    from .s3core import mul
    d = x.shift_reach() + y.shift_reach()
    cols = rep.dim - d
    lhs = evaluate(mul(x, y), rep)
    rhs = evaluate(x, rep) @ evaluate(y, rep)
    return _safe_norm(lhs - rhs, cols)


class TraceResult(tuple):
    """Value and rigorous geometric tail bound of a truncated trace."""

    __slots__ = ()

    def __new__(cls, value, tail_bound):
        return tuple.__new__(cls, (value, tail_bound))

    @property
    def value(self):
        return self[0]

    @property
    def tail_bound(self):
        return self[1]


def trace_tail_bound(x: AlgElement, N: int, p_val: float,
                     q_val: float) -> float:
    """Rigorous bound on the trace mass beyond the first N basis vectors.

    The diagonal of a winding-zero monomial is a geometric sequence, so
    the discarded tail is bounded by q^(N m)/(1-q^m) resp.
    p^(N n)/(1-p^n) per monomial, weighted by the coefficient evaluated
    at (p, q); monomials with a net shift have zero diagonal and
    contribute no tail at all.
    """
    bound = 0.0
    for t, c in x.terms.items():
        if t.mu != 0:
            continue
        w = abs(c.evaluate(p_val, q_val))
        if t.m:
            r = q_val ** t.m
            bound += w * r ** N / (1 - r)
        elif t.n:
            r = p_val ** t.n
            bound += w * r ** N / (1 - r)
    return bound


def numeric_trace(x: AlgElement, N: int, p_val: float, q_val: float,
                  reps: tuple[TruncatedRep, TruncatedRep] | None = None
                  ) -> TraceResult:
    """Trace difference of the two shift representations, truncated at N.

    Only winding-zero elements are accepted.  A pair of prebuilt
    zero-phase representations may be passed to amortize construction.
    """
    if not x.is_coinvariant():
        raise ValueError("numeric trace needs a coinvariant element")
    if reps is None:
        rho1 = build_rep("rho1theta", (0.0,), N, p_val, q_val)
        rho2 = build_rep("rho2theta", (0.0,), N, p_val, q_val)
    else:
        rho1, rho2 = reps
    value = complex(np.trace(evaluate(x, rho2)) - np.trace(evaluate(x, rho1)))
    return TraceResult(value, trace_tail_bound(x, N, p_val, q_val))


def spectrum_check(rep: TruncatedRep) -> dict:
    """Eigenvalues of the flag operator against the geometric sequence.

    In family 1 the operator 1 - bb* is diagonal with simple eigenvalues
    p^k, k < N; family 2 mirrors this with 1 - aa* and q.
    """
    if rep.family == "rho1theta":
        flag = np.eye(rep.dim) - rep.gen("b") @ rep.gen("b*")
        base = rep.p
    elif rep.family == "rho2theta":
        flag = np.eye(rep.dim) - rep.gen("a") @ rep.gen("a*")
        base = rep.q
    else:
        raise ValueError("spectrum check applies to the shift families")
    eig = np.sort(np.linalg.eigvalsh(flag))
    want = np.sort(np.array([base ** k for k in range(rep.dim)]))
    # multiplicity one is only resolvable where the geometric gaps beat
    # the floating tolerance; below that the values agree with 0 anyway
    simple = True
    for k in range(rep.dim):
        if want[k] <= 1e-8:
            continue
        lo = want[k - 1] if k > 0 else -math.inf
        hi = want[k + 1] if k + 1 < rep.dim else math.inf
        window = 0.4 * min(want[k] - lo, hi - want[k])
        hits = int(np.sum(np.abs(eig - want[k]) < window))
        if hits != 1:
            simple = False
    return {
        "max_error": float(np.max(np.abs(eig - want))),
        "simple": simple,
    }


def polar_isometry_check(rep: TruncatedRep, which: str = "a") -> dict:
    """Positivity of g*g and the isometry defect of g |g|^(-1).

    g*g is bounded below by 1-q (for g = a) resp. 1-p (for g = b), so
    the polar part is a well-defined isometry; both facts are checked on
    the block away from the truncation boundary.
    """
    if which not in ("a", "b"):
        raise ValueError("which must be 'a' or 'b'")
    g = rep.gen(which)
    dim = rep.dim
    m = dim - 1 if dim > 1 else 1
    gram = (g.conj().T @ g)[:m, :m]
    eigval, eigvec = np.linalg.eigh(gram)
    min_eig = float(eigval[0])
    inv_sqrt = eigvec @ np.diag(eigval ** -0.5) @ eigvec.conj().T
    v = g[:, :m] @ inv_sqrt
    defect = float(np.linalg.norm(v.conj().T @ v - np.eye(m), 2))
    bound = 1 - (rep.q if which == "a" else rep.p)
    return {"min_eig": min_eig, "lower_bound": bound,
            "isometry_defect": defect}


def mvn_witness_check(N: int) -> dict:
    """Shift-tensor-projection equivalence witness on a finite block.

    With s the truncated unilateral shift and e = 1 - s s* (a rank-one
    projection), the partial isometry s (x) e satisfies
    (s (x) e)*(s (x) e) = 1 (x) e and (s (x) e)(s (x) e)* = (1-e) (x) e;
    both identities are exact away from the top shift index.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    s = np.zeros((N, N))
    for k in range(N - 1):
        s[k + 1, k] = 1.0
    eye = np.eye(N)
    proj = eye - s @ s.T
    rank = int(round(np.trace(proj)))
    v = np.kron(s, proj)
    lhs1 = v.T @ v - np.kron(eye, proj)
    lhs2 = v @ v.T - np.kron(eye - proj, proj)
    mask = np.ones(N * N, dtype=bool)
    mask[(N - 1) * N:] = False  # drop the top shift index on the first leg
    defect1 = float(np.linalg.norm(lhs1[np.ix_(mask, mask)], 2))
    defect2 = float(np.linalg.norm(lhs2[np.ix_(mask, mask)], 2))
    pi = float(np.linalg.norm(v @ v.T @ v - v, 2))
    return {"projection_rank": rank, "defect_vstar_v": defect1,
            "defect_v_vstar": defect2, "partial_isometry_defect": pi,
            "max_defect": max(defect1, defect2)}


# ---------------------------------------------------------------------------
# classical coordinate maps
# ---------------------------------------------------------------------------

def _f_map(z1: complex, z2: complex) -> tuple[complex, complex]:
    norm = math.sqrt(abs(z1) ** 2 + abs(z2) ** 2)
    return (z1 / norm, z2.conjugate() / norm)


def _g_map(c1: complex, c2: complex) -> tuple[complex, complex]:
    scale = math.sqrt(2.0) / math.sqrt(1.0 + abs(2.0 * abs(c1) ** 2 - 1.0))
    return (scale * c1, scale * c2.conjugate())


def classical_maps_check(samples: int, seed: int = 0) -> dict:
    """Round-trip, membership, and equivariance defects of the two maps.

    The glued space X consists of pairs with one coordinate on the unit
    circle and the other in the closed disc; the circle acts on X with
    opposite phases on the two legs and on the unit sphere of C^2 with
    equal phases.  The forward map conjugates the second coordinate and
    normalizes; the inverse rescales by the function of |c1| above.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    worst = 0.0

    def circle():
        return cmath.exp(2j * math.pi * rng.random())

    def disc():
        return math.sqrt(rng.random()) * circle()

    for _ in range(samples):
        # a point of X: one leg on the circle, the other in the disc
        if rng.random() < 0.5:
            z = (circle(), disc())
        else:
            z = (disc(), circle())
        c = _f_map(*z)
        worst = max(worst, abs(abs(c[0]) ** 2 + abs(c[1]) ** 2 - 1.0))
        back = _g_map(*c)
        worst = max(worst, abs(back[0] - z[0]), abs(back[1] - z[1]))

        # a point of the 3-sphere
        raw = rng.normal(size=4)
        nrm = math.sqrt(float(np.sum(raw ** 2)))
        if nrm < 1e-6:
            continue
        c = (complex(raw[0], raw[1]) / nrm, complex(raw[2], raw[3]) / nrm)
        z = _g_map(*c)
        worst = max(worst,
                    abs((1 - abs(z[0]) ** 2) * (1 - abs(z[1]) ** 2)),
                    max(abs(z[0]), abs(z[1])) - 1.0)
        fwd = _f_map(*z)
        worst = max(worst, abs(fwd[0] - c[0]), abs(fwd[1] - c[1]))

        # equivariance of the forward map
        phase = circle()
        lhs = _f_map(z[0] * phase, z[1] / phase)
        rhs = (fwd[0] * phase, fwd[1] * phase)
        worst = max(worst, abs(lhs[0] - rhs[0]), abs(lhs[1] - rhs[1]))
    return {"samples": samples, "seed": seed, "max_error": worst}


def faithfulness_probe(x: AlgElement, N: int | None = None,
                       trials: int = 8, seed: int = 0,
                       threshold: float = 1e-8) -> bool:
    """Search for a numeric witness that a symbolic element is nonzero.

    Separation strategy matching the monomial-basis argument: family 1
    sees every monomial without an a-flag, family 2 every monomial
    without a b-flag, and the phases separate the a-powers (resp.
    b-powers) as Fourier modes.  Both the phase and the deformation
    parameters are sampled per trial: a coefficient is a rational
    function and may vanish at isolated parameter values without the
    element being zero.  Returns True when x is zero (nothing to
    witness) or when some sampled evaluation has norm above the
    threshold.
    """
    if x.is_zero():
        return True
    if N is None:
        N = max(abs(t.mu) + abs(t.nu) + t.m + t.n for t in x.terms) + 10
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        theta = 2.0 * math.pi * rng.random()
        p_val = 0.2 + 0.6 * rng.random()
        q_val = 0.2 + 0.6 * rng.random()
        for family in ("rho1theta", "rho2theta"):
            rep = build_rep(family, (theta,), N, p_val, q_val)
            if np.linalg.norm(evaluate(x, rep), 2) > threshold:
                return True
    return False
