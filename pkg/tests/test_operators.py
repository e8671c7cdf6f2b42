"""Graded shift-operator algebra: action, composition, brackets."""

import random

import pytest

from rpq.deformations import GENERIC, get_preset
from rpq.operators import (
    DegreeCoeff,
    GradedOp,
    LaurentPoly,
    commutator,
    deformed_bracket,
    op_equal,
)
from rpq.scalars import ONE, rational
from rpq.witt import GeneratorKind, gen, gen_l


def random_coeff(rng):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        coeff = rational(rng.randint(-5, 5))
        if coeff.is_zero():
            continue
        terms[(rng.randint(-2, 2), rng.randint(-2, 2))] = coeff
    return DegreeCoeff(terms)


def random_op(rng, max_parts=3):
    parts = {}
    for _ in range(rng.randint(1, max_parts)):
        parts[rng.randint(-3, 3)] = random_coeff(rng)
    return GradedOp(parts)


def random_poly(rng, max_terms=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(-5, 5)] = rational(rng.randint(-4, 4))
    return LaurentPoly(terms)


def test_identity_action():
    rng = random.Random(1)
    poly = random_poly(rng)
    assert GradedOp.identity().apply(poly) == poly


def test_first_kind_generator_action():
    e2 = gen(GeneratorKind.E, 2, GENERIC)
    out = e2.apply(LaurentPoly.monomial(3))
    assert out == LaurentPoly.monomial(5, GENERIC.number(3))


def test_second_kind_generator_action():
    l1 = gen_l(1, GENERIC)
    out = l1.apply(LaurentPoly.monomial(2))
    expected = LaurentPoly.monomial(3, GENERIC.eps_power(1, -3) * GENERIC.number(2))
    assert out == expected


def test_compose_definition_on_monomial():
    rng = random.Random(4)
    a = random_op(rng, 1)
    b = random_op(rng, 1)
    (sa, ca), = a.parts.items()
    (sb, cb), = b.parts.items()
    for k in range(-4, 5):
        direct = a.compose(b).apply(LaurentPoly.monomial(k))
        expected = LaurentPoly.monomial(
            k + sa + sb, cb.eval_at_degree(k) * ca.eval_at_degree(k + sb)
        )
        assert direct == expected


def test_compose_with_zero():
    rng = random.Random(9)
    a = random_op(rng)
    assert a.compose(GradedOp.zero()).is_zero()
    assert GradedOp.zero().compose(a).is_zero()


def test_compose_apply_homomorphism():
    rng = random.Random(17)
    for _ in range(25):
        x = random_op(rng)
        y = random_op(rng)
        p = random_poly(rng)
        assert x.compose(y).apply(p) == x.apply(y.apply(p))


def test_two_path_on_generators():
    l1, l2 = gen_l(1, GENERIC), gen_l(2, GENERIC)
    for k in range(-5, 6):
        mono = LaurentPoly.monomial(k)
        assert l1.compose(l2).apply(mono) == l1.apply(l2.apply(mono))


def test_deformed_bracket_properties():
    u = GENERIC.eps1
    v = GENERIC.eps2
    rng = random.Random(23)
    x, y, z = random_op(rng), random_op(rng), random_op(rng)
    assert deformed_bracket(ONE, ONE, x, x).is_zero()
    # bilinearity
    lhs = deformed_bracket(u, v, x + y, z)
    rhs = deformed_bracket(u, v, x, z) + deformed_bracket(u, v, y, z)
    assert lhs == rhs
    lhs = deformed_bracket(u, v, x, y + z)
    rhs = deformed_bracket(u, v, x, y) + deformed_bracket(u, v, x, z)
    assert lhs == rhs
    c = rational(3)
    assert deformed_bracket(u, v, x.scale(c), y) == deformed_bracket(u, v, x, y).scale(c)


def test_su11_lowest_case():
    l0, l1 = gen_l(0, GENERIC), gen_l(1, GENERIC)
    bracket = deformed_bracket(GENERIC.eps1, GENERIC.eps2, l0, l1)
    assert op_equal(bracket, l1)


def test_shift_substitute_group_law():
    rng = random.Random(31)
    for _ in range(20):
        c = random_coeff(rng)
        assert c.substitute_shift(0) == c
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        assert c.substitute_shift(a).substitute_shift(b) == c.substitute_shift(a + b)


def test_degree_grading_of_compose():
    x = GradedOp({1: DegreeCoeff.unit(), 3: DegreeCoeff.unit()})
    y = GradedOp({-1: DegreeCoeff.unit(), 2: DegreeCoeff.unit()})
    shifts = set(x.compose(y).parts)
    assert shifts == {0, 2, 3, 5}


def test_op_equal_distinguishes_generators():
    l1 = gen_l(1, GENERIC)
    e1 = gen(GeneratorKind.E, 1, GENERIC)
    assert op_equal(l1, l1)
    assert not op_equal(l1, e1)


def test_render_is_shift_ordered():
    op = GradedOp({2: DegreeCoeff.unit(), -1: DegreeCoeff.unit()})
    lines = op.render().splitlines()
    assert lines[0].startswith("z^-1 ::")
    assert lines[1].startswith("z^2 ::")


def test_preset_substituted_generators_agree_with_numeric():
    # spot-check that preset monomial mapping matches numeric evaluation
    cj = get_preset("cj")
    l2 = gen_l(2, cj)
    out = l2.apply(LaurentPoly.monomial(3))
    (exp, coeff), = out.terms.items()
    assert exp == 5
    p, q = 0.9, 0.5
    e1, e2 = cj.numeric_eps(p, q)
    expected = e1 ** (-5) * (e1**3 - e2**3) / (e1 - e2)
    assert coeff.eval_numeric(p, q) == pytest.approx(expected, rel=1e-12)
