"""Acceptance criteria, one test per criterion.

Each test prints a PASS line on success (visible with pytest -s / on
failure); two sub-criteria that hinge on printed closed forms that the
engine refutes are strict expected failures with the analysis carried in
the committed discrepancy ledgers and the decisions log.
"""

import math
import time
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

import numpy as np
import pytest

from rpq import kdv
from rpq import nbrackets as nb
from rpq import suites
from rpq import toymodel as tm
from rpq import witt as w
from rpq.deformations import GENERIC, NAMED_PRESETS, get_preset
from rpq.ledger import FAIL, ledger_to_json
from rpq.scalars import EpsScalar, rational

DATA = Path(__file__).parent / "data"
ALL = [get_preset(name) for name in NAMED_PRESETS]
GRID6 = range(-6, 7)


def _announce(criterion: str, detail: str = ""):
    print(f"ACCEPT {criterion} PASS {detail}".rstrip())


def test_criterion_1_weighted_bracket_grid():
    start = time.perf_counter()
    cells = 0
    for preset in ALL:
        for n in GRID6:
            for m in GRID6:
                assert w.rwa_residual(n, m, preset).is_zero(), (preset.name, n, m)
                cells += 1
    elapsed = time.perf_counter() - start
    assert cells == 845
    assert elapsed < 30.0
    _announce("C1", f"weighted bracket exact on {cells} cells in {elapsed:.1f}s")


def test_criterion_2_companion_bracket_relations():
    for preset in ALL:
        for n in GRID6:
            for m in GRID6:
                assert w.rwb_residual(n, m, preset).is_zero(), (preset.name, n, m)
                assert w.crv_residual(n, m, preset).is_zero(), (preset.name, n, m)
                assert w.lemma_e_residual(n, m, preset).is_zero(), (preset.name, n, m)
        assert all(r.is_zero() for r in w.su11_residuals(preset).values())
    _announce("C2", "twisted/mirror/first-kind brackets and su(1,1) exact")


def test_criterion_3_product_layer_identities():
    records = suites.properties_suite(2, None)
    failures = [r for r in records if r.status == FAIL]
    assert not failures, failures[:3]
    # associator with leading index zero vanishes identically
    for m, k in product(range(-2, 3), range(-2, 3)):
        assert w.associator_direct(0, m, k, GENERIC).is_zero()
    _announce("C3", f"{len(records)} product-layer checks, no failures")


@pytest.mark.xfail(strict=True,
                   reason="printed three-bracket closed form is symmetric "
                          "while the bracket is antisymmetric; residuals are "
                          "ledgered (see decisions log)")
def test_criterion_3_printed_three_bracket_form():
    for preset in ALL:
        direct = w.nambu3_direct(1, 0, -1, preset)
        displayed = w.nambu3_displayed(1, 0, -1, preset)
        assert (direct - displayed).is_zero()


@pytest.mark.xfail(strict=True,
                   reason="printed derivation identity of the three-bracket "
                          "has no validating reading; residuals are ledgered")
def test_criterion_3_printed_bracket_derivation():
    lhs, rhs = w.property6_sides(1, 0, -1, 2, GENERIC)
    assert (lhs - rhs).is_zero()


def test_criterion_4_cyclic_identity_ledger_locked():
    records = suites.criterion4_records(2, None)
    regenerated = ledger_to_json(records)
    golden = (DATA / "cyclic_identity_ledger.json").read_text(encoding="utf-8")
    assert regenerated == golden
    cyclic = [r for r in records if r.identity == "weighted-cyclic"]
    assert len(cyclic) == 125 * len(ALL)
    assert all(r.detail == "0" for r in cyclic)
    classical = [r for r in records if r.identity == "classical-cyclic"]
    assert classical and all(r.status == "pass" for r in classical)
    _announce("C4", "cyclic identity residuals all zero and byte-locked")


def test_criterion_5_bracket_oracle_and_closed_forms():
    # antisymmetry and multilinearity of the antisymmetrization oracle
    for n, modes in ((2, (0, 1)), (3, (0, 1, 2)), (4, (-1, 0, 1, 2))):
        ops = [nb.t_op(1, m, GENERIC) for m in modes]
        swapped = list(ops)
        swapped[0], swapped[1] = swapped[1], swapped[0]
        assert (nb.n_bracket_oracle(ops) + nb.n_bracket_oracle(swapped)).is_zero()
        scaled = list(ops)
        scaled[-1] = nb.TOp(1, modes[-1], ops[-1].op.scale(rational(5)))
        assert (nb.n_bracket_oracle(scaled)
                - nb.n_bracket_oracle(ops).scale(rational(5))).is_zero()
    # product/commutator two-path comparison over the stated grid
    checked = 0
    for preset in ALL:
        for alpha in (1, 2, 3):
            for beta in (1, 2, 3):
                for m in range(-4, 5):
                    for n in range(-4, 5):
                        assert nb.product_unit_residual(
                            alpha, beta, m, n, preset).is_zero()
                        assert nb.commutator_unit_residual(
                            alpha, beta, m, n, preset).is_zero()
                        checked += 1
    # the n = 2 reduction of the bracket closed form anchors the sign reading
    for preset in ALL:
        for alpha, pair in ((1, (0, 1)), (2, (1, -1)), (3, (-2, 3))):
            assert nb.n_bracket_unit_residual(2, alpha, pair, preset,
                                              m_sign=-1).is_zero()
    # n = 3: residuals are recorded per mode triple (ledgered, not asserted
    # zero); both sides vanish identically exactly on the degenerate cells
    # with sum(modes) = -1, where every term carries the factor [0]
    for preset in ALL:
        for triple in combinations(range(-2, 4), 3):
            res = nb.n_bracket_unit_residual(3, 1, triple, preset, m_sign=-1)
            assert res.is_zero() == (sum(triple) == -1), (preset.name, triple)
    _announce("C5", f"{checked} product/commutator cells exact on the unit; "
                    "n=2 anchor exact; n=3 residuals ledgered")


def test_criterion_6_bell_polynomials():
    for n in range(9):
        assert tm.bell_polynomial(n, max(n, 1), max(n, 1)) == tm.bell_from_series(n)
    b3 = tm.bell_polynomial(3)
    t1 = tm.TPoly.var(3, 3, 1)
    t2 = tm.TPoly.var(3, 3, 2)
    t3 = tm.TPoly.var(3, 3, 3)
    assert b3 == t3 + (t1 * t2).scale(rational(3)) + t1 * t1 * t1
    for n in range(1, 9):
        poly = tm.bell_polynomial(n)
        assert all(sum((j + 1) * e for j, e in enumerate(expo)) == n
                   for expo in poly.terms)
        collapse = [e for e in poly.terms if all(v == 0 for v in e[1:])]
        assert collapse == [tuple([n] + [0] * (poly.width - 1))]
    _announce("C6", "Bell recurrence == series oracle through n = 8")


def test_criterion_7_toy_model():
    # first-term vanishing at the degenerate exponent
    for preset in ALL:
        for m in (0, 1, 3):
            op = tm.constraint_op(
                m, tm.ToyParams(Fraction(-1 - m), 1, 6), preset)
            assert m not in op.coeffs
    # one-parameter scheme: engine coefficients equal the displayed form
    sym = get_preset("sym")
    k_x, alpha, m = 8, 2, 1
    engine = tm.constraint_op(m, tm.ToyParams(Fraction(0), alpha, k_x), sym)
    q = lambda j: sym.eps_power(1, j)
    factors = [q(alpha * k) - q(-alpha * k) for k in range(1, k_x + 1)]
    display = {m: tm.TPoly.const(k_x, k_x, sym.alpha_number(m + 1, alpha)
                                 * q(-alpha * m))}
    front = q(-alpha * (m + 1)) / (q(alpha) - q(-alpha))
    for k in range(1, k_x - m + 1):
        weight = front * rational(Fraction(math.factorial(k + m),
                                           math.factorial(k)))
        display[k + m] = tm.bell_polynomial(k, k_x, k_x).substitute_scaled(
            factors).scale(weight)
    assert set(engine.coeffs) == set(display)
    for key in display:
        assert engine.coeffs[key] == display[key], key
    # residual ledger is regression-locked byte for byte
    regenerated = ledger_to_json(suites.toy_suite(None))
    golden = (DATA / "toy_residual_ledger.json").read_text(encoding="utf-8")
    assert regenerated == golden
    # the bracket oracle residual collapses linearly toward the classical point
    params = tm.ToyParams(Fraction(0), 1, 5)
    res = tm.derivative_bracket_residual(1, params, GENERIC)
    tvals = [Fraction(3, 10), Fraction(-1, 5), Fraction(11, 100),
             Fraction(7, 100), Fraction(-1, 20)]
    sizes = [res.max_abs_exact(1 + d, 1 - d, tvals)
             for d in (Fraction(1, 100), Fraction(1, 10000))]
    assert sizes[1] < sizes[0] / 50
    _announce("C7", "constraint operators verified; residuals byte-locked; "
                    "oracle residual collapses classically")


@pytest.mark.xfail(strict=True,
                   reason="the printed product equivalence leaves an O(1) "
                          "residual in the classical limit under every "
                          "product reading tried; measured values are in the "
                          "decisions log and the toy residual ledger")
def test_criterion_7_product_equivalence_classical_limit():
    params = tm.ToyParams(Fraction(0), 1, 5)
    rep = tm.product_equivalence(0, 0, 1, 1, params, GENERIC)
    tvals = [Fraction(3, 10), Fraction(-1, 5), Fraction(11, 100),
             Fraction(7, 100), Fraction(-1, 20)]
    d = Fraction(1, 10000)
    residual = rep.residual.max_abs_exact(1 + d, 1 - d, tvals)
    assert float(residual) < 1e-8


def test_criterion_8_lattice_simulator():
    start = time.perf_counter()
    # constant field is an exact fixed point
    params = kdv.KdVParams(tau=0.05, theta=1.0, central_c=1.0, grid_points=64,
                           shift_steps=1, dt=0.01, steps=1)
    state = kdv.KdVState(np.full(64, 1.3))
    assert np.all(kdv.rhs(state, params) == 0.0)
    # dispersion phase over 1000 steps on 256 points
    params = kdv.KdVParams(tau=0.05, theta=1.2, central_c=1.0, grid_points=256,
                           shift_steps=2, dt=0.002, steps=1000, nonlinear=False)
    st = kdv.cosine_profile(params, amplitude=0.8, wavenumber=3)
    final = None
    for snap in kdv.run(st, params, snapshot_every=params.steps):
        final = snap
    exact = kdv.dispersion_phase(params, 3, final.t)
    measured = kdv.mode_phase(final, 3)
    diff = (measured - exact + math.pi) % (2 * math.pi) - math.pi
    assert abs(diff / exact) < 1e-6

    def integrate(dt, steps):
        p = kdv.KdVParams(tau=0.05, theta=1.0, central_c=1.0, grid_points=64,
                          shift_steps=1, dt=dt, steps=steps)
        s = kdv.cosine_profile(p, amplitude=0.5)
        out = None
        for snap in kdv.run(s, p, snapshot_every=steps):
            out = snap
        return out.v

    reference = integrate(0.001, 400)
    coarse = np.max(np.abs(integrate(0.02, 20) - reference))
    fine = np.max(np.abs(integrate(0.01, 40) - reference))
    assert 12.0 <= coarse / fine <= 20.0

    errors = []
    taus = [0.02, 0.01, 0.005]
    for tau in taus:
        s = int(round(2 * tau / 0.001))
        p = kdv.KdVParams(tau=tau, theta=1.1, central_c=0.7, grid_points=1000,
                          shift_steps=s, dt=1e-3, steps=1)
        st = kdv.cosine_profile(p, amplitude=0.6)
        errors.append(float(np.max(np.abs(
            kdv.rhs(st, p) - kdv.taylor_rhs_small_tau(st, p)))))
    for i in range(2):
        slope = math.log(errors[i] / errors[i + 1]) / math.log(taus[i] / taus[i + 1])
        assert 1.8 <= slope <= 2.2
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _announce("C8", f"simulator checks in {elapsed:.1f}s")


def test_criterion_9_published_number_forms():
    p = EpsScalar.symbol_power(1, 1)
    q = EpsScalar.symbol_power(2, 1)
    one = rational(1)
    published = {
        "heine": lambda n: (one - q**n) / (one - q),
        "quesne": lambda n: (one - q**-n) / (q - one),
        "jagannathan-srinivasa": lambda n: (p**n - q**n) / (p - q),
        "chakrabarty-jagannathan": lambda n: (p**-n - q**n) / (p**-1 - q),
        "hounkonnou-ngompe": lambda n: (p**n - q**-n) / (q - p**-1),
        "symmetric-q": lambda n: (q**n - q**-n) / (q - q**-1),
    }
    for name, form in published.items():
        preset = get_preset(name)
        for n in range(1, 13):
            assert preset.display_number(n) == form(n), (name, n)
    _announce("C9", "display numbers equal the published closed forms, n = 1..12")
