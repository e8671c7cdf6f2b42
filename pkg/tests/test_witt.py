"""Generator bracket relations, the generator-product layer, central data."""

import pytest

from rpq.deformations import GENERIC, NAMED_PRESETS, get_preset
from rpq.operators import commutator, op_equal
from rpq.scalars import ZERO, parse_scalar, rational
from rpq import witt as w

ALL = [get_preset(name) for name in NAMED_PRESETS]
JS = get_preset("js")


def test_weighted_bracket_examples():
    for preset in ALL + [GENERIC]:
        assert w.rwa_residual(0, 1, preset).is_zero()
        assert w.rwa_residual(1, 2, preset).is_zero()
        assert w.rwa_residual(2, -1, preset).is_zero()


def test_twisted_bracket_and_mirror():
    for preset in ALL:
        assert w.rwb_residual(2, -1, preset).is_zero()
        assert w.crv_residual(1, 2, preset).is_zero()
        assert w.lemma_e_residual(3, -2, preset).is_zero()


def test_su11_triple():
    for preset in ALL + [GENERIC]:
        residuals = w.su11_residuals(preset)
        assert all(r.is_zero() for r in residuals.values())


def test_product_multiplier_form():
    # l_n o l_m = D_n o l_(n+m), checked at (1, 2) and a few others
    for n, m in ((1, 2), (0, 3), (-2, 1)):
        assert w.product_residual(n, m, GENERIC).is_zero()


def test_degree_bracket_evaluates_to_shifted_numbers():
    for preset in (GENERIC, JS, get_preset("sym")):
        for n in (-2, 0, 3):
            coeff = w.degree_bracket(n, preset)
            for k in range(-4, 5):
                assert coeff.eval_at_degree(k) == preset.number(k - n)


def test_generator_single_part():
    for kind in (w.GeneratorKind.E, w.GeneratorKind.L, w.GeneratorKind.CAL_L):
        op = w.gen(kind, 2, JS)
        assert set(op.parts) == {2}
    assert set(w.gen(w.GeneratorKind.DIAG_D, 5, JS).parts) == {0}


def test_antisymmetry():
    for n, m in ((0, 1), (2, -1), (-2, 2)):
        anti = commutator(w.gen_l(n, JS), w.gen_l(m, JS)) + commutator(
            w.gen_l(m, JS), w.gen_l(n, JS))
        assert anti.is_zero()


# -- generator-product (formal) layer ------------------------------------

def test_associator_two_path():
    for preset in ALL:
        for n, m, k in ((1, 1, 1), (1, 2, -1), (2, -2, 1)):
            direct = w.associator_direct(n, m, k, preset)
            closed = w.associator_closed(n, m, k, preset)
            assert (direct - closed).is_zero(), (preset.name, n, m, k)


def test_associator_trivial_at_zero():
    for m, k in ((3, -2), (1, 1), (-1, 2)):
        assert w.associator_direct(0, m, k, GENERIC).is_zero()


def test_cyclic_associator_difference():
    for n, m, k in ((1, 0, -1), (2, 1, -2), (1, 2, 0)):
        lhs, rhs = w.property2_sides(n, m, k, GENERIC)
        assert (lhs - rhs).is_zero()


def test_leibniz_defect_two_path():
    for n, m, k in ((0, 2, -1), (1, 2, 0), (2, -1, 1), (1, 1, 1)):
        direct = w.leibniz_defect(n, m, k, GENERIC)
        closed = w.leibniz_closed(n, m, k, GENERIC)
        assert (direct - closed).is_zero()


def test_adjoint_is_derivation_of_composition():
    # in the realized picture the commutator adjoint satisfies the product
    # rule identically; the generator-product defect above is the formal
    # picture's correction (see the decisions ledger on the n = 0 example)
    for n, m, k in ((0, 2, -1), (1, 2, 0), (2, -1, 1)):
        ln, lm, lk = (w.gen_l(j, JS) for j in (n, m, k))
        lhs = commutator(ln, lm.compose(lk))
        rhs = lm.compose(commutator(ln, lk)) + commutator(ln, lm).compose(lk)
        assert (lhs - rhs).is_zero()


def test_associator_swap_and_left_symmetry_reporter():
    for n, m, k in ((2, -1, 1), (1, 0, 2)):
        lhs, rhs = w.property4_sides(n, m, k, GENERIC)
        assert (lhs - rhs).is_zero()
    assert w.left_symmetry_tau_vanishes(2, 2, 0, GENERIC)
    assert not w.left_symmetry_tau_vanishes(2, 1, 0, GENERIC)


def test_three_bracket_direct_vanishes():
    for n, m, k in ((1, 0, -1), (2, 1, -1), (1, 1, 1)):
        direct = w.nambu3_direct(n, m, k, GENERIC)
        assert direct.is_zero()
        assert (direct - w.nambu3_definitional(n, m, k, GENERIC)).is_zero()


def test_three_bracket_cyclic_invariance():
    a = w.nambu3_direct(1, 0, -1, GENERIC)
    b = w.nambu3_direct(0, -1, 1, GENERIC)
    assert (a - b).is_zero()


def test_three_bracket_displayed_form_is_not_the_bracket():
    # the printed positive-half sum is nonzero while the bracket vanishes;
    # the discrepancy is carried in the ledger
    disp = w.nambu3_displayed(1, 0, -1, GENERIC)
    assert not disp.is_zero()


@pytest.mark.xfail(strict=True,
                   reason="printed three-bracket closed form is symmetric in "
                          "(n,m,k) while the bracket is antisymmetric; see the "
                          "discrepancy ledger")
def test_three_bracket_displayed_two_path_literal():
    direct = w.nambu3_direct(1, 0, -1, GENERIC)
    disp = w.nambu3_displayed(1, 0, -1, GENERIC)
    assert (direct - disp).is_zero()


@pytest.mark.xfail(strict=True,
                   reason="printed derivation identity of the three-bracket "
                          "does not hold under any product reading tried; see "
                          "the discrepancy ledger")
def test_three_bracket_derivation_literal():
    lhs, rhs = w.property6_sides(1, 0, -1, 2, GENERIC)
    assert (lhs - rhs).is_zero()


def test_multiplication_identities():
    for item in ("i", "ii", "iii", "iv"):
        for n, m, k in ((1, 2, 0), (1, -1, 2), (2, 1, -2)):
            lhs, rhs = w.proposition_sides(item, n, m, k, GENERIC)
            assert (lhs - rhs).is_zero(), (item, n, m, k)
    report = w.left_right_identities(1, -1, 2, JS)
    assert report == {"i": True, "ii": True, "iii": True, "iv": True}


def test_realized_wrappers():
    op = w.associator(1, 2, -1, JS)
    closed = w.associator_closed(1, 2, -1, JS).realize(JS)
    assert op_equal(op, closed)
    assert w.nambu3(1, 0, -1, JS).is_zero()


def test_generator_product_realizes_to_composition_on_pure_generators():
    # for two bare generators the product layer and composition agree;
    # nesting introduces the coefficient twist that separates the pictures
    x = w.dot(w.FormalSum.generator(1), w.FormalSum.generator(2), JS)
    assert op_equal(x.realize(JS), w.gen_l(1, JS).compose(w.gen_l(2, JS)))
    nested = w.dot(w.FormalSum.generator(-1), x, JS)
    composed = w.gen_l(-1, JS).compose(w.gen_l(1, JS)).compose(w.gen_l(2, JS))
    assert not op_equal(nested.realize(JS), composed)


def test_multiplication_iii_printed_subscripts_mismatch():
    lhs, _ = w.proposition_sides("iii", 1, -1, 2, GENERIC)
    literal = w.proposition_iii_literal_rhs(1, -1, 2, GENERIC)
    assert not (lhs - literal).is_zero()


# -- weighted cyclic identity --------------------------------------------

def test_jacobi_residual_vanishes_under_adopted_weights():
    for preset in ALL:
        for n, m, k in ((0, 0, 0), (1, 0, -1), (2, -1, 1), (2, 2, -1)):
            assert w.jacobi_residual(n, m, k, preset).is_zero(), (preset.name, n, m, k)


def test_jacobi_classical_mode():
    assert w.jacobi_residual_classical(1, 0, -1)
    assert w.jacobi_residual_classical(2, -1, 3)
    assert w.jacobi_residual_classical(0, 0, 0)


# -- central extension -----------------------------------------------------

def test_central_term_degenerate_modes():
    for preset in ALL:
        for n in (-1, 0, 1):
            assert w.central_term(n, preset).value.is_zero()


def test_central_term_js_mode_two():
    expected = parse_scalar(
        "(p^3 + 2*p^2*q + 2*p*q^2 + q^3)/(p^6*q^4 + p^4*q^6)", names=("p", "q"))
    assert w.central_term(2, JS).value == expected


def test_central_term_scales_with_prefactor():
    scaled = JS.with_central(rational(5))
    assert w.central_term(2, scaled).value == w.central_term(2, JS).value.scale(5)


def test_virasoro_bracket_structure():
    vec = w.virasoro_bracket(0, 1, JS)
    assert vec.modes == {1: JS.number(1)}
    assert vec.central.is_zero()

    vec = w.virasoro_bracket(2, -2, JS)
    assert vec.modes == {0: JS.number(-4)}
    assert vec.central == w.central_term(2, JS).value
    assert not vec.central.is_zero()

    assert w.central_commutant_bracket(3, 2, JS).is_zero()


def test_virasoro_vec_equality():
    a = w.VirasoroVec(modes={1: JS.number(2)}, central=ZERO)
    b = w.VirasoroVec(modes={1: JS.number(2), 5: ZERO}, central=ZERO)
    assert a == b
