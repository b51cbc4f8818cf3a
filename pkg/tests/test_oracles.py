"""The reference tables are only trustworthy if the machinery that
produced them is; these checks rebuild a few entries against closed
forms and against each other, at reduced precision so they stay fast."""

import math

from mpmath import mp, mpf, pi, log

from .oracles import (
    FROZEN,
    frozen_complex,
    frozen_real,
    series_li,
    dirichlet_zeta,
    integral_li,
)


def test_series_oracle_matches_dilogarithm_closed_form():
    mp.dps = 30
    got = series_li(2, 0.5, terms=300)
    want = pi**2 / 12 - log(2) ** 2 / 2
    assert abs(got - want) < mpf(10) ** -25


def test_series_oracle_matches_rational_orders():
    mp.dps = 30
    assert abs(series_li(-1, 0.5, terms=300) - 2) < mpf(10) ** -25
    assert abs(series_li(-2, 0.5, terms=300) - 6) < mpf(10) ** -25
    # z/(1-z)^2 at z = -0.5 is -2/9
    assert abs(series_li(-1, -0.5, terms=300) + mpf(2) / 9) < mpf(10) ** -25


def test_dirichlet_oracle_matches_even_zeta_closed_forms():
    mp.dps = 30
    assert abs(dirichlet_zeta(2, cutoff=2000) - pi**2 / 6) < mpf(10) ** -15
    assert abs(dirichlet_zeta(4, cutoff=2000) - pi**4 / 90) < mpf(10) ** -20


def test_integral_oracle_agrees_with_series_inside_disk():
    mp.dps = 30
    a = integral_li(0.75, 0.4)
    b = series_li(0.75, 0.4, terms=300)
    assert abs(a - b) < mpf(10) ** -20


def test_frozen_entries_regenerate():
    # spot-check one entry per route at working precision
    mp.dps = 40
    got = series_li(-0.5, 0.3, terms=600)
    want = frozen_real("li_mhalf_0p3")
    assert abs(float(got.real) - want) < 1e-15
    got = dirichlet_zeta(1.5, cutoff=20000)
    assert abs(float(got.real) - frozen_real("zeta_3_2")) < 1e-13
    got = integral_li(0.5, -2)
    assert abs(complex(got) - frozen_complex("ia_half_m2")) < 1e-15


def test_frozen_table_is_populated_and_finite():
    for name in FROZEN:
        v = frozen_complex(name)
        assert math.isfinite(v.real) and math.isfinite(v.imag)
        assert v != 0
