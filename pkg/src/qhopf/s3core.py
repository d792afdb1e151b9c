"""Normal forms in the coordinate *-algebra of the glued quantum 3-sphere.

The algebra is generated by a and b subject to

    a* a - q a a* = 1 - q,        b* b - p b b* = 1 - p,
    a b = b a,  a* b = b a*,      (1 - a a*)(1 - b b*) = 0,

and has the vector-space basis  a_mu (1-aa*)^m (1-bb*)^n b_nu  with
mu, nu in Z, m, n >= 0 and m*n = 0, where a_mu means a^mu for mu >= 0
and a*^|mu| for mu < 0 (same for b_nu).  Elements are finite linear
combinations of these monomials with :class:`~qhopf.scalars.ParamScalar`
coefficients.

Products are computed by expanding the right factor into its generator
word (a-letters, then (1-aa*) powers, then (1-bb*) powers, then
b-letters) and folding single-generator multiplications; the rewrite
rules commute the flag factors past letters at the cost of powers of p
or q and kill any monomial with both flags present.  Monomial-pair
products are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from .scalars import ONE, ParamScalar, ppow, qpow, scalar

__all__ = [
    "BasisMonomial",
    "AlgElement",
    "FreeWord",
    "GENERATORS",
    "UNIT_MONO",
    "mul",
    "mul_by_generator",
    "star",
    "normalize_word",
    "winding_decompose",
    "iota_image",
    "iota_word",
    "iota",
    "is_coinvariant",
]

GENERATORS = ("a", "a*", "b", "b*")


class BasisMonomial(NamedTuple):
    """Index (mu, m, n, nu) of a basis monomial; invariant m*n == 0."""

    mu: int
    m: int
    n: int
    nu: int

    @property
    def winding(self) -> int:
        """Total circle weight: each a or b* adds +1, each a* or b adds -1."""
        return self.mu - self.nu

    @property
    def degree_label(self) -> int:
        """Grading label in the opposite sign convention (coaction by u^-mu)."""
        return -(self.mu - self.nu)

    def is_unit(self) -> bool:
        return self == UNIT_MONO

    def shift_reach(self) -> int:
        return abs(self.mu) + abs(self.nu)

    def text(self) -> str:
        parts = []
        if self.mu > 0:
            parts.append("a" if self.mu == 1 else f"a^{self.mu}")
        elif self.mu < 0:
            parts.append("a^*" if self.mu == -1 else f"a^*^{-self.mu}")
        if self.m:
            parts.append("(1 - a a^*)" if self.m == 1
                         else f"(1 - a a^*)^{self.m}")
        if self.n:
            parts.append("(1 - b b^*)" if self.n == 1
                         else f"(1 - b b^*)^{self.n}")
        if self.nu > 0:
            parts.append("b" if self.nu == 1 else f"b^{self.nu}")
        elif self.nu < 0:
            parts.append("b^*" if self.nu == -1 else f"b^*^{-self.nu}")
        return " ".join(parts) if parts else "1"


UNIT_MONO = BasisMonomial(0, 0, 0, 0)

_GEN_MONO = {
    "a": BasisMonomial(1, 0, 0, 0),
    "a*": BasisMonomial(-1, 0, 0, 0),
    "b": BasisMonomial(0, 0, 0, 1),
    "b*": BasisMonomial(0, 0, 0, -1),
}


def monomial(mu: int, m: int, n: int, nu: int) -> BasisMonomial:
    """Validated constructor: m, n >= 0 and m*n == 0."""
    if m < 0 or n < 0:
        raise ValueError("flag exponents must be nonnegative")
    if m and n:
        raise ValueError("(1-aa*)^m (1-bb*)^n vanishes for m, n >= 1")
    return BasisMonomial(mu, m, n, nu)


# ---------------------------------------------------------------------------
# single-generator rewrite rules
#
# Each rule returns the canonical expansion of t*g (or g*t) as a tuple of
# (monomial, coefficient) pairs.  Flag commutations:
#     (1-aa*) a  = q a (1-aa*),   (1-aa*) a* = q^-1 a* (1-aa*),
#     (1-bb*) b  = p b (1-bb*),   (1-bb*) b* = p^-1 b* (1-bb*),
# and (1-aa*)^m (1-bb*)^n = 0 whenever both exponents are positive.
# ---------------------------------------------------------------------------

_RIGHT_CACHE: dict = {}
_LEFT_CACHE: dict = {}


def _right_letter(t: BasisMonomial, g: str):
    key = (t, g)
    hit = _RIGHT_CACHE.get(key)
    if hit is not None:
        return hit
    mu, m, n, nu = t
    if g == "a":
        out = [(BasisMonomial(mu + 1, m, n, nu), qpow(m))]
        if mu < 0 and n == 0:
            out.append((BasisMonomial(mu + 1, m + 1, n, nu), -qpow(m + 1)))
    elif g == "a*":
        out = [(BasisMonomial(mu - 1, m, n, nu), qpow(-m))]
        if mu > 0 and n == 0:
            out.append((BasisMonomial(mu - 1, m + 1, n, nu), -qpow(-m)))
    elif g == "b":
        out = [(BasisMonomial(mu, m, n, nu + 1), ONE)]
        if nu < 0 and m == 0:
            out.append((BasisMonomial(mu, m, n + 1, nu + 1), -ppow(-nu)))
    elif g == "b*":
        out = [(BasisMonomial(mu, m, n, nu - 1), ONE)]
        if nu > 0 and m == 0:
            out.append((BasisMonomial(mu, m, n + 1, nu - 1), -ppow(1 - nu)))
    else:
        raise ValueError(f"unknown generator {g!r}")
    out = tuple(out)
    _RIGHT_CACHE[key] = out
    return out


def _left_letter(t: BasisMonomial, g: str):
    key = (t, g)
    hit = _LEFT_CACHE.get(key)
    if hit is not None:
        return hit
    mu, m, n, nu = t
    if g == "a":
        out = [(BasisMonomial(mu + 1, m, n, nu), ONE)]
        if mu < 0 and n == 0:
            out.append((BasisMonomial(mu + 1, m + 1, n, nu), -qpow(mu + 1)))
    elif g == "a*":
        out = [(BasisMonomial(mu - 1, m, n, nu), ONE)]
        if mu > 0 and n == 0:
            out.append((BasisMonomial(mu - 1, m + 1, n, nu), -qpow(mu)))
    elif g == "b":
        out = [(BasisMonomial(mu, m, n, nu + 1), ppow(-n))]
        if nu < 0 and m == 0:
            out.append((BasisMonomial(mu, m, n + 1, nu + 1), -ppow(-n)))
    elif g == "b*":
        out = [(BasisMonomial(mu, m, n, nu - 1), ppow(n))]
        if nu > 0 and m == 0:
            out.append((BasisMonomial(mu, m, n + 1, nu - 1), -ppow(n + 1)))
    else:
        raise ValueError(f"unknown generator {g!r}")
    out = tuple(out)
    _LEFT_CACHE[key] = out
    return out


def _fold(acc: dict, g: str, rules) -> dict:
    out: dict = {}
    for t, c in acc.items():
        for t2, c2 in rules(t, g):
            w = c if c2 is ONE else c * c2
            s = out.get(t2)
            s = w if s is None else s + w
            if s:
                out[t2] = s
            elif t2 in out:
                del out[t2]
    return out


def _fold_flag(acc: dict, g1: str, g2: str, rules) -> dict:
    # acc * (1 - g1 g2): used for the (1-aa*) and (1-bb*) letters
    prod = _fold(_fold(acc, g1, rules), g2, rules)
    out = dict(acc)
    for t, c in prod.items():
        s = out.get(t)
        s = -c if s is None else s - c
        if s:
            out[t] = s
        elif t in out:
            del out[t]
    return out


_MONO_MUL_CACHE: dict = {}


def _mono_mul(t1: BasisMonomial, t2: BasisMonomial):
    """Canonical expansion of the product t1 * t2 as ((mono, coeff), ...)."""
    key = (t1, t2)
    hit = _MONO_MUL_CACHE.get(key)
    if hit is not None:
        return hit
    acc = {t1: ONE}
    mu, m, n, nu = t2
    g = "a" if mu > 0 else "a*"
    for _ in range(abs(mu)):
        acc = _fold(acc, g, _right_letter)
    for _ in range(m):
        acc = _fold_flag(acc, "a", "a*", _right_letter)
    for _ in range(n):
        acc = _fold_flag(acc, "b", "b*", _right_letter)
    g = "b" if nu > 0 else "b*"
    for _ in range(abs(nu)):
        acc = _fold(acc, g, _right_letter)
    out = tuple(acc.items())
    _MONO_MUL_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

ScalarLike = Union[ParamScalar, int, Fraction]


class AlgElement:
    """A finite linear combination of basis monomials, zero terms absent."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[BasisMonomial, ScalarLike] | None = None):
        clean: dict = {}
        if terms:
            for t, c in terms.items():
                c = scalar(c)
                if c:
                    clean[t] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "AlgElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgElement":
        return cls({UNIT_MONO: ONE})

    @classmethod
    def generator(cls, name: str) -> "AlgElement":
        if name not in _GEN_MONO:
            raise ValueError(f"unknown generator {name!r}")
        return cls({_GEN_MONO[name]: ONE})

    @classmethod
    def from_monomial(cls, t: BasisMonomial, coeff: ScalarLike = 1) -> "AlgElement":
        return cls({t: coeff})

    # -- ring structure ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t)
            s = c if s is None else s + c
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        return _raw(out)

    def __sub__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t)
            s = -c if s is None else s - c
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        return _raw(out)

    def __neg__(self):
        return _raw({t: -c for t, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything, so right and left scaling agree
        return self.scale(other)

    def scale(self, c: ScalarLike) -> "AlgElement":
        c = scalar(c)
        if not c:
            return AlgElement()
        return _raw({t: k * c for t, k in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- structure maps ------------------------------------------------------

    def star(self) -> "AlgElement":
        """The *-involution: a -> a*, b -> b*, coefficients fixed."""
        out = {}
        for t, c in self.terms.items():
            mu, m, n, nu = t
            factor = qpow(-mu * m) * ppow(nu * n)
            out[BasisMonomial(-mu, m, n, -nu)] = c * factor
        return _raw(out)

    def winding_components(self) -> dict[int, "AlgElement"]:
        parts: dict[int, dict] = {}
        for t, c in self.terms.items():
            parts.setdefault(t.winding, {})[t] = c
        return {w: _raw(d) for w, d in sorted(parts.items())}

    def is_coinvariant(self) -> bool:
        return all(t.winding == 0 for t in self.terms)

    def coefficient(self, t: BasisMonomial) -> ParamScalar:
        return self.terms.get(t, scalar(0))

    def shift_reach(self) -> int:
        """Largest |mu| + |nu| over the support; 0 for the zero element."""
        return max((t.shift_reach() for t in self.terms), default=0)

    def flag_degree(self) -> int:
        return max((max(t.m, t.n) for t in self.terms), default=0)

    # -- rendering ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def text(self) -> str:
        from .scalars import format_linear
        return format_linear([(t.text(), c) for t, c in self.sorted_terms()])

    def json_terms(self) -> list[dict]:
        return [{"mu": t.mu, "m": t.m, "n": t.n, "nu": t.nu, "coeff": str(c)}
                for t, c in self.sorted_terms()]

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"AlgElement({self.text()!r})"


def _raw(terms: dict) -> AlgElement:
    el = AlgElement.__new__(AlgElement)
    el.terms = terms
    return el


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def mul(x: AlgElement, y: AlgElement) -> AlgElement:
    """Product in the algebra; bilinear extension of monomial products."""
    out: dict = {}
    for t1, c1 in x.terms.items():
        for t2, c2 in y.terms.items():
            c = c1 * c2
            for t, k in _mono_mul(t1, t2):
                w = c if k is ONE else c * k
                s = out.get(t)
                s = w if s is None else s + w
                if s:
                    out[t] = s
                elif t in out:
                    del out[t]
    return _raw(out)


def mul_by_generator(x: AlgElement, g: str, side: str = "right") -> AlgElement:
    """Multiply by a single generator on the chosen side."""
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}")
    if side == "right":
        return _raw(_fold(x.terms, g, _right_letter))
    if side == "left":
        return _raw(_fold(x.terms, g, _left_letter))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def star(x: AlgElement) -> AlgElement:
    return x.star()


@dataclass(frozen=True)
class FreeWord:
    """A word in the generators with an optional scalar prefactor."""

    letters: tuple[str, ...]
    prefactor: ParamScalar = field(default=ONE)

    def __post_init__(self):
        for g in self.letters:
            if g not in GENERATORS:
                raise ValueError(f"unknown generator {g!r}")


def normalize_word(word: FreeWord | Iterable[str]) -> AlgElement:
    """Canonical form of a free word; the empty word is the unit."""
    if isinstance(word, FreeWord):
        letters, pref = word.letters, word.prefactor
    else:
        letters, pref = tuple(word), ONE
    acc = {UNIT_MONO: pref}
    for g in letters:
        if g not in GENERATORS:
            raise ValueError(f"unknown generator {g!r}")
        acc = _fold(acc, g, _right_letter)
    return _raw(acc)


def winding_decompose(x: AlgElement) -> dict[int, AlgElement]:
    """Split by the circle weight mu - nu; the parts sum back to x."""
    return x.winding_components()


def is_coinvariant(x: AlgElement) -> bool:
    """True iff every monomial has winding 0 (x lies over the base)."""
    return x.is_coinvariant()


# ---------------------------------------------------------------------------
# the embedding of the base algebra
#
# The two-disc base is generated by f0 (selfadjoint) and f1; inside the
# sphere algebra they become f0 = b b*, f1 = b a, f1* = a* b*.  All
# images have winding 0.
# ---------------------------------------------------------------------------

_IOTA = {
    "f0": AlgElement({UNIT_MONO: ONE, BasisMonomial(0, 0, 1, 0): -ONE}),
    "f1": AlgElement({BasisMonomial(1, 0, 0, 1): ONE}),
    "f1*": AlgElement({BasisMonomial(-1, 0, 0, -1): ONE}),
}


def iota_image(name: str) -> AlgElement:
    """Image of a base generator: f0 -> bb*, f1 -> ba, f1* -> a*b*."""
    try:
        return _IOTA[name]
    except KeyError:
        raise ValueError(f"unknown base generator {name!r}") from None


def iota_word(letters: Iterable[str]) -> AlgElement:
    """Image of a product of base generators (empty product is 1)."""
    out = AlgElement.one()
    for name in letters:
        out = mul(out, iota_image(name))
    return out


def iota(poly: Mapping[tuple, ScalarLike]) -> AlgElement:
    """Image of a polynomial in f0, f1, f1*, given as {word: coefficient}."""
    out = AlgElement.zero()
    for word, c in poly.items():
        out = out + iota_word(word).scale(c)
    return out
