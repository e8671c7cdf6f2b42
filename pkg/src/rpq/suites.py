"""Verification suites: grids of exact identity checks producing records.

Suite names mirror the CLI: witt (bracket relations of the realized
generators), properties (the generator-product layer), jacobi (the weighted
cyclic identity plus its classical cross-check), nalg (derivative-operator
closed forms vs the antisymmetrization oracle), toy (constraint-operator
adjudications).  Asserted identities record pass/fail; displayed closed
forms under adjudication record their exact residuals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, List, Sequence

from . import nbrackets as nb
from . import toymodel as toy
from . import witt as w
from .deformations import NAMED_PRESETS, DeformationPreset, get_preset
from .ledger import FAIL, PASS, RESIDUAL, CheckRecord
from .operators import commutator


def _presets(names: Sequence[str] | None) -> List[DeformationPreset]:
    return [get_preset(n) for n in (names or NAMED_PRESETS)]


def _verdict(suite: str, identity: str, preset: str, indices, ok: bool,
             residual: str = "") -> CheckRecord:
    return CheckRecord(
        suite=suite,
        identity=identity,
        preset=preset,
        indices=tuple(indices),
        status=PASS if ok else FAIL,
        detail="" if ok else residual,
    )


def _adjudication(suite: str, identity: str, preset: str, indices,
                  rendered: str) -> CheckRecord:
    return CheckRecord(
        suite=suite,
        identity=identity,
        preset=preset,
        indices=tuple(indices),
        status=RESIDUAL,
        detail=rendered,
    )


def witt_suite(bound: int, preset_names: Sequence[str] | None = None) -> List[CheckRecord]:
    """Bracket relations of the realized generators on [-bound, bound]^2."""
    records: List[CheckRecord] = []
    for preset in _presets(preset_names):
        names = preset.base_names
        for n in range(-bound, bound + 1):
            for m in range(-bound, bound + 1):
                res = w.rwa_residual(n, m, preset)
                records.append(_verdict("witt", "weighted-bracket", preset.name,
                                        (n, m), res.is_zero(), res.render(names)))
                res = w.rwb_residual(n, m, preset)
                records.append(_verdict("witt", "twisted-bracket", preset.name,
                                        (n, m), res.is_zero(), res.render(names)))
                res = w.crv_residual(n, m, preset)
                records.append(_verdict("witt", "mirror-bracket", preset.name,
                                        (n, m), res.is_zero(), res.render(names)))
                res = w.lemma_e_residual(n, m, preset)
                records.append(_verdict("witt", "first-kind-bracket", preset.name,
                                        (n, m), res.is_zero(), res.render(names)))
                res = w.product_residual(n, m, preset)
                records.append(_verdict("witt", "product-multiplier", preset.name,
                                        (n, m), res.is_zero(), res.render(names)))
        for label, res in w.su11_residuals(preset).items():
            records.append(_verdict("witt", f"su11-{label}", preset.name,
                                    (), res.is_zero(), res.render(names)))
    return records


def properties_suite(bound: int, preset_names: Sequence[str] | None = None,
                     six_term_samples: int = 2) -> List[CheckRecord]:
    """Generator-product layer: two-path checks and display adjudications."""
    records: List[CheckRecord] = []
    grid = range(-bound, bound + 1)
    for preset in _presets(preset_names):
        names = preset.base_names
        for n, m, k in product(grid, grid, grid):
            ok = (w.associator_direct(n, m, k, preset)
                  - w.associator_closed(n, m, k, preset)).is_zero()
            records.append(_verdict("properties", "associator", preset.name,
                                    (n, m, k), ok))
            lhs, rhs = w.property2_sides(n, m, k, preset)
            records.append(_verdict("properties", "cyclic-associator-sum",
                                    preset.name, (n, m, k), (lhs - rhs).is_zero()))
            ok = (w.leibniz_defect(n, m, k, preset)
                  - w.leibniz_closed(n, m, k, preset)).is_zero()
            records.append(_verdict("properties", "leibniz-defect", preset.name,
                                    (n, m, k), ok))
            l4, r4 = w.property4_sides(n, m, k, preset)
            records.append(_verdict("properties", "associator-swap", preset.name,
                                    (n, m, k), (l4 - r4).is_zero()))
            records.append(CheckRecord(
                "properties", "left-symmetry-tau-vanishes", preset.name,
                (n, m, k), RESIDUAL,
                "zero" if w.left_symmetry_tau_vanishes(n, m, k, preset) else "nonzero",
            ))
            for item in ("i", "ii", "iii", "iv"):
                li, ri = w.proposition_sides(item, n, m, k, preset)
                records.append(_verdict("properties", f"multiplication-{item}",
                                        preset.name, (n, m, k), (li - ri).is_zero()))
            nd = w.nambu3_direct(n, m, k, preset)
            ok = (nd - w.nambu3_definitional(n, m, k, preset)).is_zero()
            records.append(_verdict("properties", "three-bracket", preset.name,
                                    (n, m, k), ok))
            disp = w.nambu3_displayed(n, m, k, preset)
            res = nd - disp
            records.append(_adjudication("properties", "three-bracket-displayed",
                                         preset.name, (n, m, k),
                                         "zero" if res.is_zero() else "nonzero"))
        # antisymmetry of the realized commutator (trivial but stated)
        for n, m in ((0, 1), (2, -1), (-2, 2)):
            anti = commutator(w.gen_l(n, preset), w.gen_l(m, preset)) + commutator(
                w.gen_l(m, preset), w.gen_l(n, preset))
            records.append(_verdict("properties", "antisymmetry", preset.name,
                                    (n, m), anti.is_zero()))
        # derivation defect of the three-bracket: residual per sampled tuple
        sample = [(1, 0, -1, 2), (1, 2, 0, 1)][:six_term_samples]
        for n, m, k, s in sample:
            lhs6, rhs6 = w.property6_sides(n, m, k, s, preset)
            res6 = lhs6 - rhs6
            records.append(_adjudication(
                "properties", "three-bracket-derivation", preset.name,
                (n, m, k, s),
                "zero" if res6.is_zero() else res6.render(names)))
        # literal sub/superscripts of multiplication identity (iii)
        li, _ = w.proposition_sides("iii", 1, -1, 2, preset)
        lit = w.proposition_iii_literal_rhs(1, -1, 2, preset)
        res = li - lit
        records.append(_adjudication("properties", "multiplication-iii-literal",
                                     preset.name, (1, -1, 2),
                                     "zero" if res.is_zero() else res.render(names)))
    return records


def jacobi_suite(bound: int, preset_names: Sequence[str] | None = None) -> List[CheckRecord]:
    """Weighted cyclic identity residuals plus the classical cross-check."""
    records: List[CheckRecord] = []
    grid = range(-bound, bound + 1)
    for preset in _presets(preset_names):
        names = preset.base_names
        for n, m, k in product(grid, grid, grid):
            res = w.jacobi_residual(n, m, k, preset)
            records.append(_adjudication(
                "jacobi", "weighted-cyclic", preset.name, (n, m, k),
                "0" if res.is_zero() else res.render(names)))
    for n, m, k in product(grid, grid, grid):
        records.append(_verdict("jacobi", "classical-cyclic", "classical",
                                (n, m, k), w.jacobi_residual_classical(n, m, k)))
    return records


def tau_reporter_suite(bound: int, preset_names: Sequence[str] | None = None) -> List[CheckRecord]:
    """Left-symmetry reporter: records whether each tau coefficient vanishes."""
    records: List[CheckRecord] = []
    grid = range(-bound, bound + 1)
    for preset in _presets(preset_names):
        for n, m, k in product(grid, grid, grid):
            records.append(CheckRecord(
                "properties", "left-symmetry-tau-vanishes", preset.name,
                (n, m, k), RESIDUAL,
                "zero" if w.left_symmetry_tau_vanishes(n, m, k, preset) else "nonzero",
            ))
    return records


def criterion4_records(bound: int = 2,
                       preset_names: Sequence[str] | None = None) -> List[CheckRecord]:
    """The regression-locked ledger: cyclic-identity residuals plus the
    left-symmetry reporter on the same grid."""
    return jacobi_suite(bound, preset_names) + tau_reporter_suite(bound, preset_names)


def nalg_suite(preset_names: Sequence[str] | None = None,
               alphas: Sequence[int] = (1, 2, 3),
               mode_bound: int = 4) -> List[CheckRecord]:
    """Derivative-operator product/commutator/n-bracket adjudications."""
    records: List[CheckRecord] = []
    modes = range(-mode_bound, mode_bound + 1)
    for preset in _presets(preset_names):
        names = preset.base_names
        for alpha in alphas:
            for beta in alphas:
                for m in modes:
                    for n in modes:
                        unit = nb.product_unit_residual(alpha, beta, m, n, preset)
                        records.append(_verdict(
                            "nalg", "product-on-unit", preset.name,
                            (alpha, beta, m, n), unit.is_zero(), unit.render(names)))
                        unit = nb.commutator_unit_residual(alpha, beta, m, n, preset)
                        records.append(_verdict(
                            "nalg", "commutator-on-unit", preset.name,
                            (alpha, beta, m, n), unit.is_zero(), unit.render(names)))
        # literal third-term sign of the printed commutator: adjudicated once
        direct = commutator(nb.t_op(1, 1, preset).op, nb.t_op(2, -1, preset).op)
        lit = nb.t_commutator_closed(1, 2, 1, -1, preset, literal_sign=True)
        unit = nb.act_on_one(direct) - nb.act_on_one(lit)
        records.append(_adjudication("nalg", "commutator-literal-sign",
                                     preset.name, (1, 2, 1, -1),
                                     "zero" if unit.is_zero() else unit.render(names)))
        # operator-level (all-degree) residual of the product closed form
        lhs = nb.t_op(1, 1, preset).op.compose(nb.t_op(2, -1, preset).op)
        rhs = nb.t_product_closed(1, 2, 1, -1, preset)
        res = lhs - rhs
        records.append(_adjudication("nalg", "product-all-degrees", preset.name,
                                     (1, 2, 1, -1),
                                     "zero" if res.is_zero() else "nonzero"))
        # n = 2 anchor of the n-bracket closed form, both sign readings
        for alpha in alphas:
            for pair in ((1, -1), (0, 2), (-2, 3)):
                for m_sign in (1, -1):
                    res = nb.n_bracket_unit_residual(2, alpha, pair, preset,
                                                     m_sign=m_sign)
                    records.append(_adjudication(
                        "nalg", f"two-bracket-closed-msign{m_sign:+d}",
                        preset.name, (alpha,) + pair,
                        "zero" if res.is_zero() else "nonzero"))
                records.append(_verdict(
                    "nalg", "two-bracket-anchor", preset.name, (alpha,) + pair,
                    nb.n_bracket_unit_residual(2, alpha, pair, preset,
                                               m_sign=-1).is_zero()))
        # n = 3 closed form vs oracle: residuals per mode triple
        for triple in combinations(range(-2, 4), 3):
            for m_sign in (1, -1):
                res = nb.n_bracket_unit_residual(3, 1, triple, preset,
                                                 m_sign=m_sign)
                records.append(_adjudication(
                    "nalg", f"three-bracket-closed-msign{m_sign:+d}", preset.name,
                    triple,
                    "zero" if res.is_zero() else res.render(names)))
    return records


def toy_suite(preset_names: Sequence[str] | None = None,
              order: int = 6) -> List[CheckRecord]:
    """Constraint-operator adjudications against the series oracle."""
    records: List[CheckRecord] = []
    params = toy.ToyParams(gamma=Fraction(0), alpha=1, k_x=order)
    for preset in _presets(preset_names):
        names = preset.base_names
        for m in (0, 1, 2):
            res = toy.derivative_bracket_residual(m, params, preset)
            records.append(_adjudication(
                "toy", "derivative-bracket", preset.name, (m,),
                "zero" if res.is_zero() else res.render(names)))
        for m, n, alpha, beta in ((0, 0, 1, 1), (1, 0, 1, 2)):
            rep = toy.product_equivalence(m, n, alpha, beta, params, preset)
            records.append(_adjudication(
                "toy", "product-equivalence", preset.name,
                (m, n, alpha, beta),
                "zero" if rep.matches else rep.residual.render(names)))
        # first-term vanishing at gamma = -1-m is an engine assertion
        for m in (0, 1, 3):
            killed = toy.constraint_op(
                m, toy.ToyParams(Fraction(-1 - m), 1, order), preset)
            ok = m not in killed.coeffs
            records.append(_verdict("toy", "first-term-vanishes", preset.name,
                                    (m,), ok))
    return records


SUITES = {
    "witt": lambda bound, presets: witt_suite(min(bound, 12), presets),
    "properties": lambda bound, presets: properties_suite(min(bound, 2), presets),
    "jacobi": lambda bound, presets: jacobi_suite(min(bound, 2), presets),
    "nalg": lambda bound, presets: nalg_suite(presets, mode_bound=min(bound, 4)),
    "toy": lambda bound, presets: toy_suite(presets),
}


def run_suites(names: Iterable[str], bound: int,
               preset_names: Sequence[str] | None = None) -> List[CheckRecord]:
    records: List[CheckRecord] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
        records.extend(SUITES[name](bound, preset_names))
    return records
