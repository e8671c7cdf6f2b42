"""Bell polynomials, truncated constraint operators, and their x-images.

The generating function being constrained is a formal power series in x
with coefficients in the polynomial ring over the time parameters t_1..t_K;
everything here works with exact truncated series:

  TPoly    polynomial in t_1..t_K with EpsScalar coefficients, truncated by
           weighted degree (t_j carries weight j, matching x-order bookkeeping)
  XSeries  array of TPoly coefficients by power of x, truncated at a fixed
           order, with the truncation order carried along
  DiffOp   first-order operator sum_j c_j(t) d/dt_j

The constraint operators are built verbatim from their displayed formula;
the independent oracle re-derives the same bracket by exact series expansion
of the scaled derivative acting on x^(m+gamma+1) exp(sum t_s x^s / s!), and
the difference is reported, not assumed.  The substitution rule
j! d/dt_j <-> x^j turns operators into XSeries; products map composition to
series products plus the derivative-of-coefficient terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .deformations import DeformationPreset
from .scalars import ONE, EpsScalar, rational

Expo = Tuple[int, ...]


def _weight(expo: Expo) -> int:
    return sum((j + 1) * e for j, e in enumerate(expo))


class TPoly:
    """Polynomial in t_1..t_width over EpsScalar, weight-truncated."""

    __slots__ = ("width", "max_weight", "terms")

    def __init__(self, width: int, max_weight: int,
                 terms: Dict[Expo, EpsScalar] | None = None):
        self.width = width
        self.max_weight = max_weight
        self.terms: Dict[Expo, EpsScalar] = {}
        if terms:
            for expo, coeff in terms.items():
                if not coeff.is_zero() and _weight(expo) <= max_weight:
                    self.terms[expo] = coeff

    @staticmethod
    def zero(width: int, max_weight: int) -> "TPoly":
        return TPoly(width, max_weight)

    @staticmethod
    def const(width: int, max_weight: int, value: EpsScalar) -> "TPoly":
        return TPoly(width, max_weight, {(0,) * width: value})

    @staticmethod
    def var(width: int, max_weight: int, j: int, coeff: EpsScalar = ONE) -> "TPoly":
        """The variable t_j (1-based)."""
        if not 1 <= j <= width:
            raise ValueError(f"t index {j} outside width {width}")
        expo = [0] * width
        expo[j - 1] = 1
        return TPoly(width, max_weight, {tuple(expo): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    __hash__ = None

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            s = out.get(expo)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(expo, None)
            else:
                out[expo] = s
        return TPoly(self.width, self.max_weight, out)

    def __neg__(self) -> "TPoly":
        return TPoly(self.width, self.max_weight,
                     {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other: "TPoly") -> "TPoly":
        out: Dict[Expo, EpsScalar] = {}
        for e1, c1 in self.terms.items():
            w1 = _weight(e1)
            for e2, c2 in other.terms.items():
                if w1 + _weight(e2) > self.max_weight:
                    continue
                expo = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(expo)
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(expo, None)
                else:
                    out[expo] = s
        return TPoly(self.width, self.max_weight, out)

    def scale(self, coeff: EpsScalar) -> "TPoly":
        if coeff.is_zero():
            return TPoly.zero(self.width, self.max_weight)
        return TPoly(self.width, self.max_weight,
                     {e: c * coeff for e, c in self.terms.items()})

    def derivative(self, j: int) -> "TPoly":
        """d/dt_j (1-based); j = 0 is the formal constant slot, killed here."""
        if j == 0:
            return TPoly.zero(self.width, self.max_weight)
        out: Dict[Expo, EpsScalar] = {}
        for expo, coeff in self.terms.items():
            e = expo[j - 1]
            if e == 0:
                continue
            lowered = list(expo)
            lowered[j - 1] = e - 1
            out[tuple(lowered)] = coeff.scale(e)
        return TPoly(self.width, self.max_weight, out)

    def substitute_scaled(self, factors: Sequence[EpsScalar]) -> "TPoly":
        """Map t_j -> factors[j-1] * t_j."""
        out: Dict[Expo, EpsScalar] = {}
        for expo, coeff in self.terms.items():
            scaled = coeff
            for j, e in enumerate(expo):
                if e:
                    scaled = scaled * factors[j] ** e
            if not scaled.is_zero():
                out[expo] = scaled
        return TPoly(self.width, self.max_weight, out)

    def eval_numeric(self, e1: float, e2: float, tvals: Sequence[float]) -> float:
        total = 0.0
        for expo, coeff in self.terms.items():
            term = coeff.eval_numeric(e1, e2)
            for j, e in enumerate(expo):
                if e:
                    term *= tvals[j] ** e
            total += term
        return total

    def eval_exact(self, e1: Fraction, e2: Fraction,
                   tvals: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff.eval_exact(e1, e2)
            for j, e in enumerate(expo):
                if e:
                    term *= tvals[j] ** e
            total += term
        return total

    def render(self, names: Tuple[str, str] = ("e1", "e2")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=lambda e: (_weight(e), e)):
            coeff = self.terms[expo].render(names)
            if "+" in coeff or "- " in coeff:
                coeff = f"({coeff})"
            factors = [] if coeff == "1" else [coeff]
            for j, e in enumerate(expo):
                if e == 1:
                    factors.append(f"t{j + 1}")
                elif e:
                    factors.append(f"t{j + 1}^{e}")
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"TPoly({self.render()})"


def bell_polynomial(n: int, width: int | None = None,
                    max_weight: int | None = None) -> TPoly:
    """Complete Bell polynomial B_n via B_(n+1) = sum C(n,j) B_(n-j) t_(j+1)."""
    if n < 0:
        raise ValueError(f"Bell index must be nonnegative, got {n}")
    width = width if width is not None else max(n, 1)
    max_weight = max_weight if max_weight is not None else max(n, 1)
    cache: List[TPoly] = [TPoly.const(width, max_weight, ONE)]
    for m in range(n):
        nxt = TPoly.zero(width, max_weight)
        for j in range(m + 1):
            if j + 1 > width:
                continue
            term = cache[m - j] * TPoly.var(width, max_weight, j + 1)
            nxt = nxt + term.scale(rational(_binom(m, j)))
        cache.append(nxt)
    return cache[n]


def _binom(n: int, k: int) -> Fraction:
    return Fraction(factorial(n), factorial(k) * factorial(n - k))


def bell_from_series(n: int) -> TPoly:
    """Independent oracle: n! times the x^n coefficient of exp(sum t_s x^s/s!)."""
    width = max(n, 1)
    # exp series: sum over powers of T(x) = sum_(s=1..n) t_s x^s / s!
    coeffs = [TPoly.zero(width, n) for _ in range(n + 1)]
    coeffs[0] = TPoly.const(width, n, ONE)
    t_series = [TPoly.zero(width, n) for _ in range(n + 1)]
    for s in range(1, n + 1):
        t_series[s] = TPoly.var(width, n, s, rational(Fraction(1, factorial(s))))
    power = [TPoly.const(width, n, ONE)] + [TPoly.zero(width, n) for _ in range(n)]
    for k in range(1, n + 1):
        power = _series_mul(power, t_series, n)
        inv_kfact = rational(Fraction(1, factorial(k)))
        for r in range(n + 1):
            coeffs[r] = coeffs[r] + power[r].scale(inv_kfact)
    return coeffs[n].scale(rational(factorial(n)))


def _series_mul(a: List[TPoly], b: List[TPoly], order: int) -> List[TPoly]:
    width = a[0].width
    mw = a[0].max_weight
    out = [TPoly.zero(width, mw) for _ in range(order + 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


class XSeries:
    """Truncated power series in x with TPoly coefficients."""

    __slots__ = ("order", "coeffs", "exact")

    def __init__(self, order: int, coeffs: List[TPoly], exact: bool = True):
        if len(coeffs) != order + 1:
            raise ValueError("coefficient list does not match order")
        self.order = order
        self.coeffs = coeffs
        self.exact = exact

    @staticmethod
    def zero(order: int, width: int) -> "XSeries":
        return XSeries(order, [TPoly.zero(width, order) for _ in range(order + 1)])

    def __add__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        coeffs = [self.coeffs[r] + other.coeffs[r] for r in range(order + 1)]
        return XSeries(order, coeffs, self.exact and other.exact)

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + other.scale(rational(-1))

    def __mul__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        out = _series_mul(self.coeffs[: order + 1], other.coeffs[: order + 1], order)
        return XSeries(order, out, self.exact and other.exact)

    def scale(self, coeff: EpsScalar) -> "XSeries":
        return XSeries(self.order, [c.scale(coeff) for c in self.coeffs], self.exact)

    def shift_x(self, k: int) -> "XSeries":
        """Multiply by x^k (k >= 0); top coefficients fall off the truncation."""
        if k < 0:
            raise ValueError("negative x-shift would leave the series ring")
        width = self.coeffs[0].width
        coeffs = [TPoly.zero(width, self.coeffs[0].max_weight) for _ in range(self.order + 1)]
        for r in range(self.order + 1 - k):
            coeffs[r + k] = self.coeffs[r]
        exact = self.exact and all(
            self.coeffs[r].is_zero() for r in range(self.order + 1 - k, self.order + 1)
        )
        return XSeries(self.order, coeffs, exact)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def eval_numeric(self, e1: float, e2: float, tvals: Sequence[float],
                     x: float) -> float:
        return sum(
            c.eval_numeric(e1, e2, tvals) * x**r for r, c in enumerate(self.coeffs)
        )

    def max_abs_coeff(self, e1: float, e2: float, tvals: Sequence[float]) -> float:
        return max(
            (abs(c.eval_numeric(e1, e2, tvals)) for c in self.coeffs), default=0.0
        )

    def max_abs_exact(self, e1: Fraction, e2: Fraction,
                      tvals: Sequence[Fraction]) -> Fraction:
        """Largest coefficient magnitude at an exact rational point.

        Near the collapsed locus eps1 = eps2 the float path cancels
        catastrophically; limits are measured through this exact path.
        """
        best = Fraction(0)
        for c in self.coeffs:
            value = abs(c.eval_exact(e1, e2, tvals))
            if value > best:
                best = value
        return best

    def render(self, names: Tuple[str, str] = ("e1", "e2")) -> str:
        parts = [
            f"x^{r}: {c.render(names)}" for r, c in enumerate(self.coeffs)
            if not c.is_zero()
        ]
        tail = "" if self.exact else f"  [inconclusive beyond order {self.order}]"
        return ("0" if not parts else "; ".join(parts)) + tail


@dataclass(frozen=True)
class ToyParams:
    """Configuration of the constraint-operator family."""

    gamma: Fraction
    alpha: int
    k_x: int
    h_choice: EpsScalar = ONE

    def __post_init__(self):
        if self.k_x < 1:
            raise ValueError("truncation order k_x must be at least 1")
        if self.alpha < 1:
            raise ValueError("alpha must be a positive integer")


class DiffOp:
    """First-order operator sum_j c_j(t) d/dt_j with TPoly coefficients."""

    __slots__ = ("width", "max_weight", "coeffs")

    def __init__(self, width: int, max_weight: int,
                 coeffs: Dict[int, TPoly] | None = None):
        self.width = width
        self.max_weight = max_weight
        self.coeffs: Dict[int, TPoly] = {
            j: c for j, c in (coeffs or {}).items() if not c.is_zero()
        }

    def apply(self, poly: TPoly) -> TPoly:
        out = TPoly.zero(self.width, self.max_weight)
        for j, c in self.coeffs.items():
            out = out + c * poly.derivative(j)
        return out


def _gamma_shifted_int(m: int, gamma: Fraction) -> int:
    value = m + 1 + gamma
    if value.denominator != 1:
        raise ValueError(
            f"m+1+gamma = {value} is not an integer; the exact ring only "
            "carries integer symbol exponents (evaluate numerically instead)"
        )
    return int(value)


def scaled_t_factors(alpha: int, width: int, preset: DeformationPreset) -> List[EpsScalar]:
    """Multipliers turning t_k into (eps1^(alpha k) - eps2^(alpha k)) t_k."""
    return [
        preset.eps_power(1, alpha * k) - preset.eps_power(2, alpha * k)
        for k in range(1, width + 1)
    ]


def constraint_op(m: int, params: ToyParams, preset: DeformationPreset) -> DiffOp:
    """The displayed constraint operator, truncated at derivative index k_x."""
    if m < 0:
        raise ValueError(f"constraint index must be nonnegative, got {m}")
    width = params.k_x
    mw = params.k_x
    alpha = params.alpha
    y = _gamma_shifted_int(m, params.gamma)
    coeffs: Dict[int, TPoly] = {}
    if m <= width:
        # Slot 0 is the formal d/dt_0, which substitutes to x^0 and kills
        # every truncated polynomial (t_0 itself is not carried).
        first = (
            preset.alpha_number(y, alpha)
            * rational(factorial(m))
            * preset.eps_power(1, -alpha * m)
        )
        coeffs[m] = TPoly.const(width, mw, first)
    factors = scaled_t_factors(alpha, width, preset)
    front = (
        params.h_choice
        * preset.eps_power(2, alpha * y)
        / (preset.eps_power(1, alpha) - preset.eps_power(2, alpha))
    )
    for k in range(1, width - m + 1):
        b_k = bell_polynomial(k, width, mw).substitute_scaled(factors)
        weight = front * rational(Fraction(factorial(k + m), factorial(k)))
        target = k + m
        if target < 1 or target > width:
            continue
        term = b_k.scale(weight)
        coeffs[target] = coeffs.get(target, TPoly.zero(width, mw)) + term
    return DiffOp(width, mw, coeffs)


def substitution_map(op: DiffOp, order: int) -> XSeries:
    """Rewrite sum c_j(t) d/dt_j as sum c_j(t) x^j / j!."""
    width = op.width
    coeffs = [TPoly.zero(width, op.max_weight) for _ in range(order + 1)]
    exact = True
    for j, c in op.coeffs.items():
        if j > order:
            exact = exact and c.is_zero()
            continue
        coeffs[j] = coeffs[j] + c.scale(rational(Fraction(1, factorial(j))))
    return XSeries(order, coeffs, exact)


def compose_to_xseries(lhs: DiffOp, rhs: DiffOp, order: int) -> XSeries:
    """x-image of the operator composition lhs o rhs.

    Composition of first-order operators splits into the derivative-of-
    coefficient part (still first order) and the doubled part; under
    j! d/dt_j <-> x^j the doubled part maps to x^(i+j)/(i! j!).
    """
    width = lhs.width
    out = XSeries.zero(order, width)
    for i, a in lhs.coeffs.items():
        for j, b in rhs.coeffs.items():
            da_b = a * b.derivative(i)
            if not da_b.is_zero() and j <= order:
                add = [TPoly.zero(width, lhs.max_weight) for _ in range(order + 1)]
                add[j] = da_b.scale(rational(Fraction(1, factorial(j))))
                out = out + XSeries(order, add)
            if i + j <= order:
                add = [TPoly.zero(width, lhs.max_weight) for _ in range(order + 1)]
                add[i + j] = (a * b).scale(
                    rational(Fraction(1, factorial(i) * factorial(j)))
                )
                out = out + XSeries(order, add)
    return out


@dataclass
class EquivalenceReport:
    """Exact residual of the displayed product equivalence in x-representation."""

    m: int
    n: int
    alpha: int
    beta: int
    order: int
    residual: XSeries
    truncation_exact: bool

    @property
    def matches(self) -> bool:
        return self.residual.is_zero()


def product_equivalence(m: int, n: int, alpha: int, beta: int,
                        params: ToyParams, preset: DeformationPreset) -> EquivalenceReport:
    order = params.k_x
    pa = ToyParams(params.gamma, alpha, params.k_x, params.h_choice)
    pb = ToyParams(params.gamma, beta, params.k_x, params.h_choice)
    pab = ToyParams(params.gamma, alpha + beta, params.k_x, params.h_choice)
    op_a = constraint_op(m, pa, preset)
    op_b = constraint_op(n, pb, preset)
    lhs = compose_to_xseries(op_a, op_b, order)

    da = preset.eps_power(1, alpha) - preset.eps_power(2, alpha)
    db = preset.eps_power(1, beta) - preset.eps_power(2, beta)
    dab = preset.eps_power(1, alpha + beta) - preset.eps_power(2, alpha + beta)
    norm = preset.eps_power(1, -(alpha * m + beta * n))
    c1 = dab * preset.eps_power(1, -m * beta) * norm / (da * db)
    c2 = preset.eps_power(2, (n + 1) * beta) * norm / db
    c3 = preset.eps_power(1, -m * beta) * preset.eps_power(2, (m + n + 1) * alpha) * norm / da
    rhs = (
        substitution_map(constraint_op(m + n, pab, preset), order).scale(c1)
        - substitution_map(constraint_op(m + n, pa, preset), order).scale(c2)
        - substitution_map(constraint_op(m + n, pb, preset), order).scale(c3)
    )
    residual = lhs - rhs
    return EquivalenceReport(
        m=m, n=n, alpha=alpha, beta=beta, order=order,
        residual=residual, truncation_exact=residual.exact,
    )


def derivative_bracket_residual(m: int, params: ToyParams,
                                preset: DeformationPreset) -> XSeries:
    """Series oracle for the displayed derivative-action bracket.

    Both sides are divided by the common x^gamma: the left side is the exact
    expansion of the scaled derivative acting on x^(m+gamma+1) exp(T(x)),
    the right side the displayed bracket times exp(T(x)).  The residual is
    reported as-is; nonzero entries are adjudicated in the discrepancy
    records, with the classical limit checked numerically.
    """
    order = params.k_x
    alpha = params.alpha
    width = order
    y = _gamma_shifted_int(m, params.gamma)
    exp_series = _exp_series(width, order)

    # Left side: sum_j (B_j/j!) [j+y]_alpha x^(j+m)
    lhs = XSeries.zero(order, width)
    for j in range(order + 1):
        if j + m > order or j + m < 0:
            continue
        coeff = exp_series.coeffs[j].scale(preset.alpha_number(j + y, alpha))
        add = [TPoly.zero(width, order) for _ in range(order + 1)]
        add[j + m] = coeff
        lhs = lhs + XSeries(order, add)

    # Right side: ([y] eps1^(-alpha m) x^m + h eps2^(alpha y)/(d_alpha)
    #              * sum B_k(t^alpha) x^(k+m)/k!) * exp(T)
    factors = scaled_t_factors(alpha, width, preset)
    bracket = XSeries.zero(order, width)
    if 0 <= m <= order:
        head = [TPoly.zero(width, order) for _ in range(order + 1)]
        head[m] = TPoly.const(
            width, order,
            preset.alpha_number(y, alpha) * preset.eps_power(1, -alpha * m),
        )
        bracket = bracket + XSeries(order, head)
    front = (
        params.h_choice
        * preset.eps_power(2, alpha * y)
        / (preset.eps_power(1, alpha) - preset.eps_power(2, alpha))
    )
    for k in range(1, order - m + 1):
        b_k = bell_polynomial(k, width, order).substitute_scaled(factors)
        add = [TPoly.zero(width, order) for _ in range(order + 1)]
        add[k + m] = b_k.scale(front * rational(Fraction(1, factorial(k))))
        bracket = bracket + XSeries(order, add)
    rhs = bracket * exp_series
    return lhs - rhs


def _exp_series(width: int, order: int) -> XSeries:
    """exp(sum_(s>=1) t_s x^s / s!) to the given order: coefficients B_r/r!."""
    coeffs = [
        bell_polynomial(r, width, order).scale(rational(Fraction(1, factorial(r))))
        for r in range(order + 1)
    ]
    return XSeries(order, coeffs)
