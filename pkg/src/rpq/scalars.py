"""Exact scalar arithmetic for the two-symbol deformed calculus.

Everything symbolic in this package bottoms out in ``EpsScalar``: an exact
rational function in the two deformation symbols (called ``e1`` and ``e2``
generically, or ``p`` and ``q`` after a preset substitution).  The layers:

  Monomial  = (a, b)                 exponents of the two symbols, ints,
                                     negative exponents allowed (Laurent)
  BiLaurent = {Monomial: Fraction}   sparse Laurent polynomial, no zero terms
  EpsScalar = BiLaurent / BiLaurent  normalized fraction

Normalization strips the common monomial factor, scales so the denominator
has content 1 with a positive leading coefficient (graded-lex order), and
performs exact polynomial division when the denominator divides the
numerator.  Full multivariate gcd is deliberately avoided: equality is
decided by cross-multiplication, which is exact regardless of how far the
fraction was reduced.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Tuple

Monomial = Tuple[int, int]
Terms = Dict[Monomial, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _grlex_key(mono: Monomial) -> Tuple[int, int, int]:
    a, b = mono
    return (a + b, a, b)


class BiLaurent:
    """Sparse Laurent polynomial in two symbols over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Terms | None = None):
        self.terms: Terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "BiLaurent":
        return BiLaurent()

    @staticmethod
    def const(value) -> "BiLaurent":
        c = Fraction(value)
        return BiLaurent({(0, 0): c}) if c else BiLaurent()

    @staticmethod
    def monomial(a: int, b: int, coeff=_ONE) -> "BiLaurent":
        c = Fraction(coeff)
        return BiLaurent({(a, b): c}) if c else BiLaurent()

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, _ZERO) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = BiLaurent.__new__(BiLaurent)
        res.terms = out
        return res

    def __neg__(self) -> "BiLaurent":
        res = BiLaurent.__new__(BiLaurent)
        res.terms = {mono: -coeff for mono, coeff in self.terms.items()}
        return res

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return self + (-other)

    def __mul__(self, other: "BiLaurent") -> "BiLaurent":
        if not self.terms or not other.terms:
            return BiLaurent()
        out: Terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                mono = (a1 + a2, b1 + b2)
                s = out.get(mono, _ZERO) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        res = BiLaurent.__new__(BiLaurent)
        res.terms = out
        return res

    def scale(self, value) -> "BiLaurent":
        c = Fraction(value)
        if not c:
            return BiLaurent()
        res = BiLaurent.__new__(BiLaurent)
        res.terms = {mono: coeff * c for mono, coeff in self.terms.items()}
        return res

    def shift(self, a: int, b: int) -> "BiLaurent":
        """Multiply by the monomial e1^a e2^b."""
        if a == 0 and b == 0:
            return self
        res = BiLaurent.__new__(BiLaurent)
        res.terms = {(ma + a, mb + b): c for (ma, mb), c in self.terms.items()}
        return res

    def __pow__(self, n: int) -> "BiLaurent":
        if n < 0:
            raise ValueError("BiLaurent power must be nonnegative; use EpsScalar")
        out = BiLaurent.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- structure ----------------------------------------------------

    def min_exponents(self) -> Monomial:
        its = iter(self.terms)
        a0, b0 = next(its)
        for a, b in its:
            if a < a0:
                a0 = a
            if b < b0:
                b0 = b
        return (a0, b0)

    def leading(self) -> Tuple[Monomial, Fraction]:
        mono = max(self.terms, key=_grlex_key)
        return mono, self.terms[mono]

    def content(self) -> Fraction:
        nums = 0
        dens = 1
        for coeff in self.terms.values():
            nums = gcd(nums, coeff.numerator)
            dens = dens * coeff.denominator // gcd(dens, coeff.denominator)
        return Fraction(nums, dens)

    def exact_div(self, divisor: "BiLaurent") -> "BiLaurent | None":
        """Quotient self/divisor when the division is exact, else None."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return BiLaurent()
        if len(divisor.terms) == 1:
            (da, db), dc = next(iter(divisor.terms.items()))
            return self.shift(-da, -db).scale(1 / dc)
        # Work with nonnegative exponents so graded-lex reduction terminates.
        na, nb = self.min_exponents()
        da, db = divisor.min_exponents()
        rem = self.shift(-na, -nb)
        div = divisor.shift(-da, -db)
        lead_mono, lead_coeff = div.leading()
        quot: Terms = {}
        while not rem.is_zero():
            rmono, rcoeff = rem.leading()
            qa, qb = rmono[0] - lead_mono[0], rmono[1] - lead_mono[1]
            if qa < 0 or qb < 0:
                return None
            qc = rcoeff / lead_coeff
            quot[(qa, qb)] = qc
            rem = rem - div.shift(qa, qb).scale(qc)
            if not rem.is_zero() and _grlex_key(rem.leading()[0]) >= _grlex_key(rmono):
                return None
        res = BiLaurent.__new__(BiLaurent)
        res.terms = quot
        return res.shift(na - da, nb - db)

    def eval_numeric(self, x1: float, x2: float) -> float:
        total = 0.0
        for (a, b), coeff in self.terms.items():
            total += float(coeff) * x1**a * x2**b
        return total

    def eval_exact(self, x1: Fraction, x2: Fraction) -> Fraction:
        total = Fraction(0)
        for (a, b), coeff in self.terms.items():
            total += coeff * x1**a * x2**b
        return total

    # -- rendering ----------------------------------------------------

    def render(self, names: Tuple[str, str] = ("e1", "e2")) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[mono]
            mag = -coeff if coeff < 0 else coeff
            factors = []
            if mag != 1 or mono == (0, 0):
                factors.append(str(mag))
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            term = "*".join(factors) if factors else "1"
            if not out:
                out.append(f"-{term}" if coeff < 0 else term)
            else:
                out.append(f"- {term}" if coeff < 0 else f"+ {term}")
        return " ".join(out)

    def __repr__(self):
        return f"BiLaurent({self.render()})"


_BL_ONE = BiLaurent.const(1)


class EpsScalar:
    """Exact rational function in the two deformation symbols."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiLaurent, den: BiLaurent | None = None):
        if den is None:
            den = _BL_ONE
        if den.is_zero():
            raise ZeroDivisionError("EpsScalar with zero denominator")
        self.num, self.den = _normalize(num, den)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(value) -> "EpsScalar":
        return EpsScalar(BiLaurent.const(value))

    @staticmethod
    def symbol_power(index: int, exponent: int) -> "EpsScalar":
        """The monomial e1^j (index 1) or e2^j (index 2) as a scalar."""
        if index not in (1, 2):
            raise ValueError(f"symbol index must be 1 or 2, got {index}")
        mono = (exponent, 0) if index == 1 else (0, exponent)
        return EpsScalar(BiLaurent.monomial(*mono))

    @staticmethod
    def monomial(a: int, b: int, coeff=_ONE) -> "EpsScalar":
        return EpsScalar(BiLaurent.monomial(a, b, coeff))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_monomial(self) -> bool:
        return len(self.num.terms) == 1 and self.den == _BL_ONE

    def __eq__(self, other) -> bool:
        if not isinstance(other, EpsScalar):
            if isinstance(other, (int, Fraction)):
                other = EpsScalar.from_rational(other)
            else:
                return NotImplemented
        if self.num.terms == other.num.terms and self.den.terms == other.den.terms:
            return True
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # A value equal to a polynomial always normalizes to den == 1 (the
        # exact division fires), so polynomial hashes are sharp; genuine
        # fractions share one bucket, keeping hash consistent with the
        # cross-multiplication equality.
        if self.den == _BL_ONE:
            return hash(self.num)
        return hash("eps-fraction")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "EpsScalar") -> "EpsScalar":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return EpsScalar(self.num + other.num, self.den)
        return EpsScalar(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "EpsScalar") -> "EpsScalar":
        return self + (-other)

    def __neg__(self) -> "EpsScalar":
        res = EpsScalar.__new__(EpsScalar)
        res.num, res.den = -self.num, self.den
        return res

    def __mul__(self, other: "EpsScalar") -> "EpsScalar":
        if self.is_zero() or other.is_zero():
            return ZERO
        return EpsScalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "EpsScalar") -> "EpsScalar":
        if other.is_zero():
            raise ZeroDivisionError("EpsScalar division by zero")
        return EpsScalar(self.num * other.den, self.den * other.num)

    def inverse(self) -> "EpsScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return EpsScalar(self.den, self.num)

    def __pow__(self, n: int) -> "EpsScalar":
        if n == 0:
            return ONE
        if n < 0:
            return self.inverse() ** (-n)
        return EpsScalar(self.num**n, self.den**n)

    def scale(self, value) -> "EpsScalar":
        return EpsScalar(self.num.scale(value), self.den)

    # -- evaluation ---------------------------------------------------

    def eval_numeric(self, x1: float, x2: float) -> float:
        den = self.den.eval_numeric(x1, x2)
        if den == 0.0:
            raise ZeroDivisionError(f"pole at ({x1}, {x2})")
        return self.num.eval_numeric(x1, x2) / den

    def eval_exact(self, x1: Fraction, x2: Fraction) -> Fraction:
        den = self.den.eval_exact(x1, x2)
        if den == 0:
            raise ZeroDivisionError(f"pole at ({x1}, {x2})")
        return self.num.eval_exact(x1, x2) / den

    # -- rendering ----------------------------------------------------

    def render(self, names: Tuple[str, str] = ("e1", "e2")) -> str:
        num = self.num.render(names)
        if self.den == _BL_ONE:
            return num
        den = self.den.render(names)
        return f"({num})/({den})"

    def __repr__(self):
        return f"EpsScalar({self.render()})"


def _normalize(num: BiLaurent, den: BiLaurent) -> Tuple[BiLaurent, BiLaurent]:
    if num.is_zero():
        return BiLaurent(), _BL_ONE
    # Strip the common monomial factor (joint minimum exponents).
    na, nb = num.min_exponents()
    da, db = den.min_exponents()
    sa, sb = min(na, da), min(nb, db)
    if sa or sb:
        num = num.shift(-sa, -sb)
        den = den.shift(-sa, -sb)
    # Make the denominator content 1 with positive leading coefficient.
    c = den.content()
    if den.leading()[1] < 0:
        c = -c
    if c != 1:
        inv = 1 / c
        num = num.scale(inv)
        den = den.scale(inv)
    if den == _BL_ONE:
        return num, den
    quot = num.exact_div(den)
    if quot is not None:
        return quot, _BL_ONE
    return num, den


ZERO = EpsScalar(BiLaurent.zero())
ONE = EpsScalar(BiLaurent.const(1))
TWO = EpsScalar(BiLaurent.const(2))


def rational(value) -> EpsScalar:
    return EpsScalar.from_rational(value)


# -- parsing ----------------------------------------------------------

def parse_scalar(text: str, names: Tuple[str, str] = ("e1", "e2")) -> EpsScalar:
    """Parse the textual rendering produced by :meth:`EpsScalar.render`.

    Grammar: optional "(num)/(den)" split, each side a "+"-separated sum of
    terms "c*x^a*y^b" with any factor optional.
    """
    text = text.strip()
    if text.startswith("(") and ")/(" in text and text.endswith(")"):
        ntext, dtext = text[1:-1].split(")/(", 1)
        return EpsScalar(_parse_poly(ntext, names), _parse_poly(dtext, names))
    return EpsScalar(_parse_poly(text, names))


def _parse_poly(text: str, names: Tuple[str, str]) -> BiLaurent:
    out = BiLaurent.zero()
    for chunk in text.replace("- ", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk or chunk == "0":
            continue
        coeff = _ONE
        mono = [0, 0]
        if chunk.startswith("-"):
            coeff = -coeff
            chunk = chunk[1:].strip()
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            base, _, exp = factor.partition("^")
            if base in names:
                mono[names.index(base)] += int(exp) if exp else 1
            else:
                coeff *= Fraction(base)
        out = out + BiLaurent.monomial(mono[0], mono[1], coeff)
    return out


def field_arith(lhs: EpsScalar, rhs: EpsScalar, kind: str) -> EpsScalar:
    """Dispatch arithmetic by name; kind is one of add/sub/mul/div."""
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        return lhs / rhs
    raise ValueError(f"unknown arithmetic kind {kind!r}")
