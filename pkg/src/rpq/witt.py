"""Deformed Witt/Virasoro generators and the identity-verification engine.

Two pictures coexist and are kept carefully apart:

* The *realized* picture: generators are ``GradedOp`` values acting on
  Laurent polynomials, products are true operator composition.  The
  degree-graded bracket relations (the conventional-Witt bracket, its
  twisted forms, the su(1,1) triple, the first-generator lemma) are exact
  theorems here and the suite asserts them with zero residuals.

* The *formal* picture: the algebra spanned by the generators over the
  degree-coefficient ring, with the bilinear generator product

      (f * l_j) . (g * l_k)  =  f * g * D_j * l_{j+k},
      D_j = eps1^(-N+j) [N-j],

  coefficients commuting with everything.  Operator composition is
  associative, so the associator/Leibniz/left-right-multiplication
  identities are statements about this product, not about composition;
  two-path checks for them run in this layer.

Closed forms quoted from the literature are built verbatim where they are
self-consistent, and with the minimal grading fix (all terms of a triple
identity live at the total mode) where the quoted subscripts are not;
every such adjudication is surfaced through the discrepancy records rather
than silently patched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .deformations import DeformationPreset
from .operators import DegreeCoeff, GradedOp, commutator, deformed_bracket
from .scalars import ONE, ZERO, EpsScalar


class GeneratorKind(str, Enum):
    E = "e"            # z^k -> [k] z^(k+n)
    L = "l"            # z^k -> eps1^-(k+n) [k] z^(k+n)
    CAL_L = "call"     # z^k -> eps2^-(k+n) [k] z^(k+n)
    DIAG_D = "diag"    # shift-0 multiplier eps1^(-N+n) [N-n]


def _inv_eps_diff(preset: DeformationPreset) -> EpsScalar:
    return (preset.eps1 - preset.eps2).inverse()


def degree_bracket(n: int, preset: DeformationPreset) -> DegreeCoeff:
    """[N - n] as a degree coefficient: (A eps1^-n - B eps2^-n)/(eps1-eps2)."""
    inv = _inv_eps_diff(preset)
    return DegreeCoeff({
        preset.degree_key(1, 0): preset.eps_monomial(-n, 0) * inv,
        preset.degree_key(0, 1): -(preset.eps_monomial(0, -n) * inv),
    })


@lru_cache(maxsize=4096)
def d_coeff(n: int, preset: DeformationPreset) -> DegreeCoeff:
    """The product multiplier D_n = eps1^(-N+n) [N-n] as a ring element."""
    inv = _inv_eps_diff(preset)
    return DegreeCoeff({
        preset.degree_key(0, 0): inv,
        preset.degree_key(-1, 1): -(preset.eps_monomial(n, -n) * inv),
    })


def diag_power(x: int, y: int, i: int, j: int, preset: DeformationPreset) -> GradedOp:
    """The diagonal operator eps1^(x N + i) * eps2^(y N + j)."""
    return GradedOp.diagonal(
        DegreeCoeff({preset.degree_key(x, y): preset.eps_monomial(i, j)})
    )


def gen(kind: GeneratorKind, n: int, preset: DeformationPreset) -> GradedOp:
    inv = _inv_eps_diff(preset)
    if kind is GeneratorKind.E:
        coeff = DegreeCoeff({
            preset.degree_key(1, 0): inv,
            preset.degree_key(0, 1): -inv,
        })
        return GradedOp.single(n, coeff)
    if kind is GeneratorKind.L:
        front = preset.eps_monomial(-n, 0) * inv
        coeff = DegreeCoeff({
            preset.degree_key(0, 0): front,
            preset.degree_key(-1, 1): -front,
        })
        return GradedOp.single(n, coeff)
    if kind is GeneratorKind.CAL_L:
        front = preset.eps_monomial(0, -n) * inv
        coeff = DegreeCoeff({
            preset.degree_key(1, -1): front,
            preset.degree_key(0, 0): -front,
        })
        return GradedOp.single(n, coeff)
    if kind is GeneratorKind.DIAG_D:
        return GradedOp.diagonal(d_coeff(n, preset))
    raise ValueError(f"unknown generator kind {kind!r}")


def gen_l(n: int, preset: DeformationPreset) -> GradedOp:
    return gen(GeneratorKind.L, n, preset)


# ---------------------------------------------------------------------------
# Realized-picture identities (operator composition; residual == 0 expected)
# ---------------------------------------------------------------------------

def rwa_residual(n: int, m: int, preset: DeformationPreset) -> GradedOp:
    """Weighted bracket vs [m-n] * l_(n+m)."""
    ln, lm = gen_l(n, preset), gen_l(m, preset)
    lhs = deformed_bracket(
        preset.eps_power(1, m - n), preset.eps_power(2, m - n), ln, lm
    )
    rhs = gen_l(n + m, preset).scale(preset.number(m - n))
    return lhs - rhs


def rwb_residual(n: int, m: int, preset: DeformationPreset) -> GradedOp:
    """Plain commutator vs [m-n] * eps1^(-N+n) eps2^(N-m) o l_(n+m)."""
    lhs = commutator(gen_l(n, preset), gen_l(m, preset))
    twist = diag_power(-1, 1, n, -m, preset)
    rhs = twist.compose(gen_l(n + m, preset)).scale(preset.number(m - n))
    return lhs - rhs


def su11_residuals(preset: DeformationPreset) -> Dict[str, GradedOp]:
    l0, l1, lm1 = gen_l(0, preset), gen_l(1, preset), gen_l(-1, preset)
    e1, e2 = preset.eps1, preset.eps2
    raising = deformed_bracket(e1, e2, l0, l1) - l1
    lowering = deformed_bracket(e1, e2, lm1, l0) - lm1
    twist = diag_power(-1, 1, -1, -1, preset)
    cartan = commutator(lm1, l1) - twist.compose(l0).scale(preset.number(2))
    return {"raising": raising, "lowering": lowering, "cartan": cartan}


def lemma_e_residual(n: int, m: int, preset: DeformationPreset) -> GradedOp:
    """First-generator bracket with weights (1, eps2^(m-n))."""
    en, em = gen(GeneratorKind.E, n, preset), gen(GeneratorKind.E, m, preset)
    lhs = deformed_bracket(ONE, preset.eps_power(2, m - n), en, em)
    twist = diag_power(1, 0, -m, 0, preset)
    rhs = twist.compose(gen(GeneratorKind.E, n + m, preset)).scale(preset.number(m - n))
    return lhs - rhs


def crv_residual(n: int, m: int, preset: DeformationPreset) -> GradedOp:
    """Mirror-twisted commutator of the second-kind generators."""
    cn = gen(GeneratorKind.CAL_L, n, preset)
    cm = gen(GeneratorKind.CAL_L, m, preset)
    lhs = commutator(cn, cm)
    twist = diag_power(1, -1, -m, n, preset)
    rhs = twist.compose(gen(GeneratorKind.CAL_L, n + m, preset)).scale(preset.number(m - n))
    return lhs - rhs


def product_residual(n: int, m: int, preset: DeformationPreset) -> GradedOp:
    """l_n o l_m = D_n o l_(n+m) as composed operators."""
    lhs = gen_l(n, preset).compose(gen_l(m, preset))
    rhs = gen(GeneratorKind.DIAG_D, n, preset).compose(gen_l(n + m, preset))
    return lhs - rhs


# ---------------------------------------------------------------------------
# Formal generator-product layer
# ---------------------------------------------------------------------------

class FormalSum:
    """Finite sum of (mode, degree coefficient) in the spanned module."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, DegreeCoeff] | None = None):
        self.terms: Dict[int, DegreeCoeff] = {}
        if terms:
            for mode, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[mode] = coeff

    @staticmethod
    def generator(n: int) -> "FormalSum":
        return FormalSum({n: DegreeCoeff.unit()})

    @staticmethod
    def zero() -> "FormalSum":
        return FormalSum()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for mode, coeff in other.terms.items():
            s = out.get(mode)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(mode, None)
            else:
                out[mode] = s
        res = FormalSum.__new__(FormalSum)
        res.terms = out
        return res

    def __neg__(self) -> "FormalSum":
        res = FormalSum.__new__(FormalSum)
        res.terms = {mode: -coeff for mode, coeff in self.terms.items()}
        return res

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def scale_coeff(self, coeff: DegreeCoeff) -> "FormalSum":
        out = {mode: coeff * c for mode, c in self.terms.items()}
        return FormalSum(out)

    def realize(self, preset: DeformationPreset) -> GradedOp:
        """Left-multiply each coefficient onto its generator as operators."""
        total = GradedOp.zero()
        for mode, coeff in self.terms.items():
            total = total + GradedOp.diagonal(coeff).compose(gen_l(mode, preset))
        return total

    def render(self, names=("e1", "e2")) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[mode].render(names)}) * l[{mode}]"
            for mode in sorted(self.terms)
        )


def dot(x: FormalSum, y: FormalSum, preset: DeformationPreset) -> FormalSum:
    """The bilinear generator product of the formal picture."""
    out = FormalSum.zero()
    for j, f in x.terms.items():
        dj = d_coeff(j, preset)
        for k, g in y.terms.items():
            out = out + FormalSum({j + k: f * g * dj})
    return out


def dot_commutator(x: FormalSum, y: FormalSum, preset: DeformationPreset) -> FormalSum:
    return dot(x, y, preset) - dot(y, x, preset)


@lru_cache(maxsize=8192)
def pair_coeff(i: int, j: int, preset: DeformationPreset) -> DegreeCoeff:
    """D_i * D_j, the coefficient of every displayed triple-product term."""
    return d_coeff(i, preset) * d_coeff(j, preset)


def tau_coeff(sup: int, sub: int, preset: DeformationPreset) -> DegreeCoeff:
    """tau^sup_(sub, *) = (D_sub - D_sup) * D_(sub+sup); mode is the caller's."""
    return (d_coeff(sub, preset) - d_coeff(sup, preset)) * d_coeff(sub + sup, preset)


def _lgen(n: int) -> FormalSum:
    return FormalSum.generator(n)


def associator_direct(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    inner = dot(_lgen(m), _lgen(k), preset)
    left = dot(_lgen(n), inner, preset)
    right = dot(dot(_lgen(n), _lgen(m), preset), _lgen(k), preset)
    return left - right


def associator_closed(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    coeff = pair_coeff(n, m, preset) - pair_coeff(n, n + m, preset)
    return FormalSum({n + m + k: coeff})


def property2_sides(n: int, m: int, k: int, preset: DeformationPreset) -> Tuple[FormalSum, FormalSum]:
    def cyc_sum(a, b, c):
        out = FormalSum.zero()
        for i, j, l in ((a, b, c), (b, c, a), (c, a, b)):
            out = out + associator_direct(i, j, l, preset)
        return out

    lhs = cyc_sum(n, m, k) - cyc_sum(n, k, m)
    coeff = (
        tau_coeff(n, m, preset)
        + tau_coeff(k, n, preset)
        + tau_coeff(m, k, preset)
    )
    return lhs, FormalSum({n + m + k: coeff})


def leibniz_defect(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    ln, lm, lk = _lgen(n), _lgen(m), _lgen(k)
    prod_mk = dot(lm, lk, preset)
    lhs = dot_commutator(ln, prod_mk, preset)
    lhs = lhs - dot(lm, dot_commutator(ln, lk, preset), preset)
    lhs = lhs - dot(dot_commutator(ln, lm, preset), lk, preset)
    return lhs


def leibniz_closed(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    coeff = (
        pair_coeff(m, m + n, preset)
        - pair_coeff(n, n + m, preset)
        + pair_coeff(m, k, preset)
        - pair_coeff(m, m + k, preset)
    )
    return FormalSum({n + m + k: coeff})


def property4_sides(n: int, m: int, k: int, preset: DeformationPreset) -> Tuple[FormalSum, FormalSum]:
    lhs = associator_direct(n, m, k, preset) - associator_direct(m, n, k, preset)
    rhs = FormalSum({n + m + k: tau_coeff(n, m, preset)})
    return lhs, rhs


def left_symmetry_tau_vanishes(n: int, m: int, k: int, preset: DeformationPreset) -> bool:
    """Reporter for the conditional left-symmetry requirement tau^n_(mk) = 0."""
    return tau_coeff(n, m, preset).is_zero()


def nambu3_direct(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    out = FormalSum.zero()
    for i, j, l in ((n, m, k), (m, k, n), (k, n, m)):
        out = out + dot(_lgen(i), dot_commutator(_lgen(j), _lgen(l), preset), preset)
    return out


def nambu3_definitional(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    """Expansion of the definition term by term: sum of D_i D_j - D_i D_l."""
    coeff = DegreeCoeff.zero()
    for i, j, l in ((n, m, k), (m, k, n), (k, n, m)):
        coeff = coeff + pair_coeff(i, j, preset) - pair_coeff(i, l, preset)
    return FormalSum({n + m + k: coeff})


def nambu3_displayed(n: int, m: int, k: int, preset: DeformationPreset) -> FormalSum:
    """The printed closed form: positive halves only."""
    coeff = (
        pair_coeff(n, m, preset)
        + pair_coeff(m, k, preset)
        + pair_coeff(k, n, preset)
    )
    return FormalSum({n + m + k: coeff})


def nambu3_trilinear(x: FormalSum, y: FormalSum, z: FormalSum,
                     preset: DeformationPreset) -> FormalSum:
    out = dot(x, dot_commutator(y, z, preset), preset)
    out = out + dot(y, dot_commutator(z, x, preset), preset)
    out = out + dot(z, dot_commutator(x, y, preset), preset)
    return out


def property6_sides(n: int, m: int, k: int, s: int,
                    preset: DeformationPreset) -> Tuple[FormalSum, FormalSum]:
    ln, lm, lk, ls = _lgen(n), _lgen(m), _lgen(k), _lgen(s)
    lhs = nambu3_trilinear(ln, lm, dot(lk, ls, preset), preset)
    lhs = lhs - dot(nambu3_trilinear(ln, lm, lk, preset), ls, preset)
    lhs = lhs - dot(lk, nambu3_trilinear(ln, lm, ls, preset), preset)
    rhs_coeff = d_coeff(n + m + k, preset) * tau_coeff(m, n, preset)
    return lhs, FormalSum({n + m + k + s: rhs_coeff})


def proposition_sides(item: str, n: int, m: int, k: int,
                      preset: DeformationPreset) -> Tuple[FormalSum, FormalSum]:
    """Both sides of the left/right-multiplication identities (i)-(iv)."""
    ln, lm, lk = _lgen(n), _lgen(m), _lgen(k)
    total = n + m + k
    if item == "i":
        lhs = dot(ln, dot(lm, lk, preset), preset) - dot(lm, dot(ln, lk, preset), preset)
        rhs = dot(dot_commutator(ln, lm, preset), lk, preset) + FormalSum(
            {total: tau_coeff(n, m, preset)}
        )
        return lhs, rhs
    if item == "ii":
        lhs = dot(ln, dot(lk, lm, preset), preset) - dot(dot(ln, lk, preset), lm, preset)
        rhs = dot(ln, dot_commutator(lk, lm, preset), preset) + FormalSum(
            {total: pair_coeff(m, n, preset) - pair_coeff(n, n + k, preset)}
        )
        return lhs, rhs
    if item == "iii":
        lhs = dot(dot(lm, lk, preset), ln, preset) - dot(lm, dot(lk, ln, preset), preset)
        # Corrected sub/superscripts; the printed second term reads (m, m+n)
        # which breaks the grading (see the discrepancy records).
        rhs = dot(lm, dot_commutator(ln, lk, preset), preset) + FormalSum(
            {total: -pair_coeff(m, n, preset) + pair_coeff(m, m + k, preset)}
        )
        return lhs, rhs
    if item == "iv":
        lhs = dot(dot(lk, lm, preset), ln, preset) + dot(lk, dot(ln, lm, preset), preset)
        sym = dot(lm, ln, preset) + dot(ln, lm, preset)
        rhs = dot(lk, sym, preset) + FormalSum(
            {total: -pair_coeff(m, k, preset) + pair_coeff(k, m + k, preset)}
        )
        return lhs, rhs
    raise ValueError(f"unknown proposition item {item!r}")


def associator(n: int, m: int, k: int, preset: DeformationPreset) -> GradedOp:
    """Realized image of l_n.(l_m.l_k) - (l_n.l_m).l_k (generator product)."""
    return associator_direct(n, m, k, preset).realize(preset)


def nambu3(n: int, m: int, k: int, preset: DeformationPreset) -> GradedOp:
    """Realized image of the cyclic three-bracket (vanishes identically)."""
    return nambu3_direct(n, m, k, preset).realize(preset)


def left_right_identities(n: int, m: int, k: int,
                          preset: DeformationPreset) -> Dict[str, bool]:
    """Exact two-path verdicts for the multiplication identities (i)-(iv)."""
    out = {}
    for item in ("i", "ii", "iii", "iv"):
        lhs, rhs = proposition_sides(item, n, m, k, preset)
        out[item] = (lhs - rhs).is_zero()
    return out


def proposition_iii_literal_rhs(n: int, m: int, k: int,
                                preset: DeformationPreset) -> FormalSum:
    """Second term exactly as printed, for the discrepancy record."""
    lm = _lgen(m)
    total = n + m + k
    return dot(lm, dot_commutator(_lgen(n), _lgen(k), preset), preset) + FormalSum(
        {total: -pair_coeff(m, n, preset) + pair_coeff(m, m + n, preset)}
    )


# ---------------------------------------------------------------------------
# Cyclic-weighted Jacobi residual
# ---------------------------------------------------------------------------

def jacobi_term(i: int, j: int, l: int, preset: DeformationPreset) -> GradedOp:
    """One cyclic summand under the adopted weight reading x=eps1^(l-j) etc."""
    inner = deformed_bracket(
        preset.eps_power(1, l - j), preset.eps_power(2, l - j),
        gen_l(j, preset), gen_l(l, preset),
    )
    outer = deformed_bracket(
        preset.eps_power(1, (j + l) - i), preset.eps_power(2, (j + l) - i),
        gen_l(i, preset), inner,
    )
    weight = preset.eps_monomial(-l, -l) * preset.number_ratio(i)
    return outer.scale(weight)


def jacobi_residual(n: int, m: int, k: int, preset: DeformationPreset) -> GradedOp:
    out = GradedOp.zero()
    for i, j, l in ((n, m, k), (m, k, n), (k, n, m)):
        out = out + jacobi_term(i, j, l, preset)
    return out


# Classical cross-check: coefficients are plain polynomials in the degree.
class _ClassicalOp:
    """Graded operator with polynomial-in-degree coefficients over Q."""

    def __init__(self, parts: Dict[int, Tuple[Fraction, ...]] | None = None):
        # coefficient polys stored as tuples of Fractions, index = power of N
        self.parts = {s: p for s, p in (parts or {}).items() if any(p)}

    @staticmethod
    def gen(n: int) -> "_ClassicalOp":
        return _ClassicalOp({n: (Fraction(0), Fraction(1))})  # coeff(k) = k

    @staticmethod
    def _poly_mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return tuple(out)

    @staticmethod
    def _poly_shift(p, s):
        # p(N + s) via binomial expansion
        out = [Fraction(0)] * len(p)
        for i, a in enumerate(p):
            # expand a*(N+s)^i
            row = [Fraction(0)] * (i + 1)
            row[0] = Fraction(1)
            for _ in range(i):
                nxt = [Fraction(0)] * (i + 1)
                for d, c in enumerate(row):
                    if c:
                        nxt[d] += c * s
                        if d + 1 <= i:
                            nxt[d + 1] += c
                row = nxt
            for d, c in enumerate(row):
                out[d] += a * c
        return tuple(out)

    def compose(self, other: "_ClassicalOp") -> "_ClassicalOp":
        out: Dict[int, List[Fraction]] = {}
        for s1, c1 in self.parts.items():
            for s2, c2 in other.parts.items():
                prod = self._poly_mul(self._poly_shift(c1, s2), c2)
                acc = out.get(s1 + s2)
                if acc is None:
                    out[s1 + s2] = list(prod)
                else:
                    for i, v in enumerate(prod):
                        if i < len(acc):
                            acc[i] += v
                        else:
                            acc.append(v)
        return _ClassicalOp({s: tuple(p) for s, p in out.items()})

    def scale(self, c: Fraction) -> "_ClassicalOp":
        return _ClassicalOp(
            {s: tuple(c * a for a in p) for s, p in self.parts.items()}
        )

    def __add__(self, other):
        out = {s: list(p) for s, p in self.parts.items()}
        for s, p in other.parts.items():
            acc = out.get(s)
            if acc is None:
                out[s] = list(p)
            else:
                for i, v in enumerate(p):
                    if i < len(acc):
                        acc[i] += v
                    else:
                        acc.append(v)
        return _ClassicalOp({s: tuple(p) for s, p in out.items()})

    def __sub__(self, other):
        return self + other.scale(Fraction(-1))

    def is_zero(self) -> bool:
        return not self.parts


def jacobi_residual_classical(n: int, m: int, k: int) -> bool:
    """True iff the integer-number (undeformed) cyclic sum vanishes."""
    out = None
    for i, j, l in ((n, m, k), (m, k, n), (k, n, m)):
        gi, gj, gl = _ClassicalOp.gen(i), _ClassicalOp.gen(j), _ClassicalOp.gen(l)
        inner = gj.compose(gl) - gl.compose(gj)
        term = (gi.compose(inner) - inner.compose(gi)).scale(Fraction(2))
        out = term if out is None else out + term
    return out.is_zero()


# ---------------------------------------------------------------------------
# Central extension (formal picture)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CentralData:
    n: int
    value: EpsScalar


@dataclass
class VirasoroVec:
    """Finitely supported mode vector plus a central coordinate."""

    modes: Dict[int, EpsScalar] = field(default_factory=dict)
    central: EpsScalar = ZERO

    def is_zero(self) -> bool:
        return self.central.is_zero() and all(c.is_zero() for c in self.modes.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, VirasoroVec):
            return NotImplemented
        keys = set(self.modes) | set(other.modes)
        return self.central == other.central and all(
            self.modes.get(k, ZERO) == other.modes.get(k, ZERO) for k in keys
        )


def central_term(n: int, preset: DeformationPreset) -> CentralData:
    """C(n) = C(p,q) (eps1 eps2)^(-2n) [n-1][n][n+1] / (eps1^n + eps2^n).

    [n]/[2n] collapses to 1/(eps1^n + eps2^n); the n = 0 value is fixed by
    continuation and vanishes with the [n] factor, as do n = +-1 with the
    neighbor factors.
    """
    if n in (-1, 0, 1):
        return CentralData(n, ZERO)
    ratio = (preset.eps_power(1, n) + preset.eps_power(2, n)).inverse()
    value = (
        preset.central_c
        * preset.eps_monomial(-2 * n, -2 * n)
        * ratio
        * preset.number(n - 1)
        * preset.number(n)
        * preset.number(n + 1)
    )
    return CentralData(n, value)


def virasoro_bracket(n: int, m: int, preset: DeformationPreset) -> VirasoroVec:
    central = central_term(n, preset).value if n + m == 0 else ZERO
    return VirasoroVec(modes={n + m: preset.number(m - n)}, central=central)


def central_commutant_bracket(k: int, n: int, preset: DeformationPreset) -> VirasoroVec:
    """Bracket of any mode with a pure-central vector: zero by construction."""
    return VirasoroVec(modes={}, central=ZERO)
