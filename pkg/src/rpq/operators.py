"""The exact graded shift-operator algebra.

Operators here are finite sums of parts (shift m, coefficient f), acting on
Laurent polynomials in z by

    z^k  |->  f(k) * z^(k + m)

where the coefficient f is a Laurent polynomial in the two degree symbols
(A, B) = (eps1^N, eps2^N) with EpsScalar coefficients, N being the degree
operator z d/dz.  Keeping the degree dependence closed-form makes every
operator identity a finite structural comparison, i.e. a statement about
all monomials at once rather than a sampled check.

Coefficients are stored in the source-degree convention: evaluating a
``DegreeCoeff`` at degree k substitutes A -> eps1^k, B -> eps2^k, and a part
(m, f) sends z^k to f(k) z^(k+m).  Composition therefore reads

    (s1, c1) o (s2, c2)  =  (s1 + s2, substitute(c1, s2) * c2)

with substitute(c, s) the exact shift A -> A*eps1^s, B -> B*eps2^s.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .scalars import ONE, ZERO, EpsScalar

DegreeKey = Tuple[int, int]


class DegreeCoeff:
    """Laurent polynomial in the degree symbols A, B over EpsScalar."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[DegreeKey, EpsScalar] | None = None):
        self.terms: Dict[DegreeKey, EpsScalar] = {}
        if terms:
            for key, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[key] = coeff

    @staticmethod
    def zero() -> "DegreeCoeff":
        return DegreeCoeff()

    @staticmethod
    def const(scalar: EpsScalar) -> "DegreeCoeff":
        return DegreeCoeff({(0, 0): scalar})

    @staticmethod
    def unit() -> "DegreeCoeff":
        return DegreeCoeff({(0, 0): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeCoeff):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def __add__(self, other: "DegreeCoeff") -> "DegreeCoeff":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        res = DegreeCoeff.__new__(DegreeCoeff)
        res.terms = out
        return res

    def __neg__(self) -> "DegreeCoeff":
        res = DegreeCoeff.__new__(DegreeCoeff)
        res.terms = {key: -coeff for key, coeff in self.terms.items()}
        return res

    def __sub__(self, other: "DegreeCoeff") -> "DegreeCoeff":
        return self + (-other)

    def __mul__(self, other: "DegreeCoeff") -> "DegreeCoeff":
        out: Dict[DegreeKey, EpsScalar] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                prod = c1 * c2
                s = out.get(key)
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        res = DegreeCoeff.__new__(DegreeCoeff)
        res.terms = out
        return res

    def scale(self, scalar: EpsScalar) -> "DegreeCoeff":
        if scalar.is_zero():
            return DegreeCoeff()
        res = DegreeCoeff.__new__(DegreeCoeff)
        res.terms = {key: coeff * scalar for key, coeff in self.terms.items()}
        return res

    def substitute_shift(self, s: int) -> "DegreeCoeff":
        """Exact degree shift N -> N + s, i.e. A -> A*eps1^s, B -> B*eps2^s."""
        if s == 0:
            return self
        res = DegreeCoeff.__new__(DegreeCoeff)
        res.terms = {
            key: coeff * EpsScalar.monomial(key[0] * s, key[1] * s)
            for key, coeff in self.terms.items()
        }
        return res

    def eval_at_degree(self, k: int) -> EpsScalar:
        total = ZERO
        for (a, b), coeff in self.terms.items():
            total = total + coeff * EpsScalar.monomial(a * k, b * k)
        return total

    def render(self, names: Tuple[str, str] = ("e1", "e2"),
               degree_names: Tuple[str, str] = ("A", "B")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            a, b = key
            factors = []
            for name, e in zip(degree_names, key):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            coeff = self.terms[key].render(names)
            if "+" in coeff or "- " in coeff:
                coeff = f"({coeff})"
            parts.append("*".join([coeff] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"DegreeCoeff({self.render()})"


class LaurentPoly:
    """Laurent polynomial in z with EpsScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, EpsScalar] | None = None):
        self.terms: Dict[int, EpsScalar] = {}
        if terms:
            for exp, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[exp] = coeff

    @staticmethod
    def monomial(exp: int, coeff: EpsScalar = ONE) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {exp: -coeff for exp, coeff in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def scale(self, scalar: EpsScalar) -> "LaurentPoly":
        if scalar.is_zero():
            return LaurentPoly()
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {exp: coeff * scalar for exp, coeff in self.terms.items()}
        return res

    def render(self, names: Tuple[str, str] = ("e1", "e2")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp].render(names)
            if "+" in coeff or "- " in coeff:
                coeff = f"({coeff})"
            if exp == 0:
                parts.append(coeff)
            else:
                parts.append(f"{coeff}*z^{exp}" if coeff != "1" else f"z^{exp}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


class GradedOp:
    """Finite sum of (integer shift, DegreeCoeff) parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Dict[int, DegreeCoeff] | None = None):
        self.parts: Dict[int, DegreeCoeff] = {}
        if parts:
            for shift, coeff in parts.items():
                if not coeff.is_zero():
                    self.parts[shift] = coeff

    @staticmethod
    def zero() -> "GradedOp":
        return GradedOp()

    @staticmethod
    def identity() -> "GradedOp":
        return GradedOp({0: DegreeCoeff.unit()})

    @staticmethod
    def single(shift: int, coeff: DegreeCoeff) -> "GradedOp":
        return GradedOp({shift: coeff})

    @staticmethod
    def diagonal(coeff: DegreeCoeff) -> "GradedOp":
        return GradedOp({0: coeff})

    def is_zero(self) -> bool:
        return not self.parts

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedOp):
            return NotImplemented
        if set(self.parts) != set(other.parts):
            return False
        return all(self.parts[s] == other.parts[s] for s in self.parts)

    __hash__ = None

    def __add__(self, other: "GradedOp") -> "GradedOp":
        out = dict(self.parts)
        for shift, coeff in other.parts.items():
            s = out.get(shift)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(shift, None)
            else:
                out[shift] = s
        res = GradedOp.__new__(GradedOp)
        res.parts = out
        return res

    def __neg__(self) -> "GradedOp":
        res = GradedOp.__new__(GradedOp)
        res.parts = {shift: -coeff for shift, coeff in self.parts.items()}
        return res

    def __sub__(self, other: "GradedOp") -> "GradedOp":
        return self + (-other)

    def scale(self, scalar: EpsScalar) -> "GradedOp":
        if scalar.is_zero():
            return GradedOp()
        res = GradedOp.__new__(GradedOp)
        res.parts = {shift: coeff.scale(scalar) for shift, coeff in self.parts.items()}
        return res

    def compose(self, other: "GradedOp") -> "GradedOp":
        """self o other: other acts first."""
        out: Dict[int, DegreeCoeff] = {}
        for s1, c1 in self.parts.items():
            for s2, c2 in other.parts.items():
                shift = s1 + s2
                coeff = c1.substitute_shift(s2) * c2
                acc = out.get(shift)
                acc = coeff if acc is None else acc + coeff
                if acc.is_zero():
                    out.pop(shift, None)
                else:
                    out[shift] = acc
        res = GradedOp.__new__(GradedOp)
        res.parts = out
        return res

    def apply(self, poly: LaurentPoly) -> LaurentPoly:
        out = LaurentPoly()
        for shift, coeff in self.parts.items():
            for exp, pcoeff in poly.terms.items():
                value = coeff.eval_at_degree(exp) * pcoeff
                if not value.is_zero():
                    out = out + LaurentPoly.monomial(exp + shift, value)
        return out

    def render(self, names: Tuple[str, str] = ("e1", "e2"),
               degree_names: Tuple[str, str] = ("A", "B")) -> str:
        if not self.parts:
            return "0"
        lines = []
        for shift in sorted(self.parts):
            lines.append(f"z^{shift} :: {self.parts[shift].render(names, degree_names)}")
        return "\n".join(lines)

    def __repr__(self):
        return f"GradedOp({self.render()!s})"


def op_equal(lhs: GradedOp, rhs: GradedOp) -> bool:
    """Exact operator equality on the full monomial basis."""
    return lhs == rhs


def deformed_bracket(u: EpsScalar, v: EpsScalar, x: GradedOp, y: GradedOp) -> GradedOp:
    """The weighted commutator u*x@y - v*y@x; u = v = 1 is the commutator."""
    return x.compose(y).scale(u) - y.compose(x).scale(v)


def commutator(x: GradedOp, y: GradedOp) -> GradedOp:
    return x.compose(y) - y.compose(x)
