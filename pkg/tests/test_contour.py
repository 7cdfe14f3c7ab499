"""Contour reconstruction against the enumeration oracle."""

import math

import numpy as np
import pytest

from smoothlab import (
    ContourSpec,
    SmoothCountQuery,
    SmoothingKernel,
    character_group,
    contour_psi,
    count_smooth_weighted,
    main_term_ratio,
    oscillating_integral,
    principal_character,
    truncation_bound,
)
from smoothlab.lseries import euler_product
from smoothlab.saddle import saddle_alpha

KERNEL = SmoothingKernel()


def _direct(x, chi, y):
    return count_smooth_weighted(SmoothCountQuery(x=x, y=y, q=chi.modulus), KERNEL, chi=chi).value


def test_trivial_character_reconstruction():
    chi = principal_character(1)
    res = contour_psi(100.0, chi, 5.0, KERNEL, ContourSpec(T=50.0))
    want = _direct(100.0, chi, 5.0)
    assert abs(res.value - want) <= 1e-6 * abs(want)
    assert abs(res.value - want) <= res.tail_bound + 10 * res.quadrature_error_estimate


def test_nonprincipal_mod4_reconstruction():
    chi = character_group(4)[1]
    res = contour_psi(100.0, chi, 5.0, KERNEL, ContourSpec(T=60.0))
    want = _direct(100.0, chi, 5.0)
    assert abs(res.value - want) <= max(1e-6 * abs(want), 1e-7)
    assert abs(res.value - want) <= res.tail_bound + 10 * res.quadrature_error_estimate


def test_all_characters_mod5():
    for chi in character_group(5):
        res = contour_psi(1000.0, chi, 10.0, KERNEL, ContourSpec(T=80.0))
        want = _direct(1000.0, chi, 10.0)
        assert abs(res.value - want) <= res.tail_bound + 10 * res.quadrature_error_estimate
        if abs(want) > 1:
            assert abs(res.value - want) <= 1e-6 * abs(want)


def test_conjugation_symmetry():
    chi = next(c for c in character_group(5) if c.order == 4)
    spec = ContourSpec(T=40.0)
    plus = contour_psi(500.0, chi, 10.0, KERNEL, spec).value
    minus = contour_psi(500.0, chi.conjugate(), 10.0, KERNEL, spec).value
    assert abs(minus - plus.conjugate()) < 1e-10


def test_degenerate_truncation_height():
    chi = principal_character(1)
    res = contour_psi(100.0, chi, 5.0, KERNEL, ContourSpec(T=1.0))
    want = _direct(100.0, chi, 5.0)
    assert abs(res.value - want) <= res.tail_bound  # bound dominates the answer
    assert res.tail_bound > abs(want)


def test_refinement_changes_value_within_estimate():
    chi = character_group(4)[1]
    x, y = 200.0, 10.0
    width = min(1.0, 2 * math.pi / math.log(x))
    base = contour_psi(x, chi, y, KERNEL, ContourSpec(T=50.0, panel_width=width))
    halved = contour_psi(x, chi, y, KERNEL, ContourSpec(T=50.0, panel_width=width / 2))
    assert abs(halved.value - base.value) <= base.quadrature_error_estimate + 1e-13 * abs(
        base.value
    )


def test_panel_width_invariant_enforced():
    with pytest.raises(ValueError):
        contour_psi(1e6, principal_character(1), 10.0, KERNEL, ContourSpec(T=10.0, panel_width=2.0))


def test_truncation_bound_shape():
    l_val = euler_product(0.7, principal_character(16), 100.0).value.real
    b1 = truncation_bound(0.7, 10.0, l_val, 1e4, KERNEL)
    b2 = truncation_bound(0.7, 20.0, l_val, 1e4, KERNEL)
    b3 = truncation_bound(0.7, 40.0, l_val, 1e4, KERNEL)
    assert b1 > b2 > b3 > 0
    assert b1 / b2 == pytest.approx(256.0, rel=1e-12)
    # at the (y q)^(1/4) cut height the bound is finite and positive
    cut = (100.0 * 16) ** 0.25
    assert truncation_bound(0.7, cut, l_val, 1e4, KERNEL) > 0
    with pytest.raises(ValueError):
        truncation_bound(0.7, 0.5, l_val, 1e4, KERNEL)


def test_oscillating_integral_degenerate_and_flat():
    assert oscillating_integral(1.0, 1.0, 100.0, 1.0, KERNEL).value == 0
    flat = oscillating_integral(0.0, 2.0, 1.0, 1.0, KERNEL)
    # no oscillation at x=1: plain integral of the transform along the segment
    ts = np.linspace(0.0, 2.0, 20001)
    vals = KERNEL.mellin_many(1.0, ts)
    w = np.ones(ts.size)
    w[1:-1:2], w[2:-1:2] = 4.0, 2.0
    want = complex(np.sum(w * vals) * (ts[1] - ts[0]) / 3.0)
    assert flat.value == pytest.approx(want, abs=1e-9)
    assert flat.decay_product == 0.0


def test_oscillating_decay_product_bounded_and_stable():
    sups = []
    for scale in (1, 2):
        prods = []
        for x in (1e3, 1e6, 1e9):
            width = min(1.0, 2 * math.pi / math.log(x))
            n = max(4, int(math.ceil(3.0 / width))) * scale
            prods.append(oscillating_integral(0.0, 3.0, x, 1.0, KERNEL, n_panels=n).decay_product)
        sups.append(max(prods))
    assert max(sups) / min(sups) < 2.0


def test_oscillating_preconditions():
    with pytest.raises(ValueError):
        oscillating_integral(2.0, 1.0, 100.0, 1.0, KERNEL)
    with pytest.raises(ValueError):
        oscillating_integral(0.0, 1.0, 100.0, 0.5, KERNEL)


def test_main_term_ratio_grid():
    ratios = []
    for x in (1e3, 1e4, 1e5, 1e6):
        for y in (10.0, 30.0, 100.0, 300.0):
            if y > x:
                continue
            for q in (3, 4, 5):
                ratios.append(main_term_ratio(x, y, q, KERNEL))
    assert min(ratios) > 0
    assert max(ratios) / min(ratios) < 10.0
