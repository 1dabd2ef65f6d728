import math

import numpy as np
import pytest

import polsim

FIG3 = dict(
    model="double_peak",
    lambda_pump_nm=780,
    n_h=1.51004,
    n_v=1.54360,
    k=-1,
    fwhm_nm=0.5,
    separation_nm=3,
    x_steps=81,
)


def medium():
    return polsim.Medium(1.51004, 1.54360)


def test_units():
    w = polsim.wavelength_to_angular_frequency(1560.0)
    assert w == pytest.approx(2 * math.pi * polsim.SPEED_OF_LIGHT_NM_PER_FS / 1560.0)
    tau = polsim.path_difference_to_time(260.0, medium())
    assert polsim.time_to_path_difference(tau, medium()) == pytest.approx(260.0, rel=1e-14)
    with pytest.raises(ValueError):
        polsim.wavelength_to_angular_frequency(-1.0)


def test_density_matrix_and_concurrence():
    w0 = polsim.wavelength_to_angular_frequency(780.0)
    sep = polsim.wavelength_span_to_omega(3.0, 1560.0)
    delta = polsim.fwhm_nm_to_sigma(0.5, 1560.0)
    spec = polsim.DoublePeak((w0 - sep) / 2, (w0 + sep) / 2, delta, -1.0)
    _, tau_d = polsim.critical_times(spec.omega1, spec.omega2, medium())
    rho = polsim.density_matrix(tau_d, spec, medium())
    assert rho.shape == (4, 4)
    assert np.allclose(rho, rho.conj().T, atol=1e-12)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert polsim.concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert polsim.purity(np.eye(4) / 4) == pytest.approx(0.25)
    assert np.allclose(polsim.density_matrix(0.0, spec, medium()), 0.25)


def test_discrete_state():
    m = medium()
    _, tau_d = polsim.critical_times(1.2063, 1.2086, m, 1)
    assert polsim.concurrence(polsim.discrete_state(tau_d, 1.2063, 1.2086, m)) == pytest.approx(1.0, abs=1e-10)


def test_oracle_matches_closed_form():
    w0 = polsim.wavelength_to_angular_frequency(780.0)
    sep = polsim.wavelength_span_to_omega(3.0, 1560.0)
    spec = polsim.DoublePeak((w0 - sep) / 2, (w0 + sep) / 2, polsim.fwhm_nm_to_sigma(0.5, 1560.0), -0.99)
    tau = polsim.path_difference_to_time(50.0, medium())
    rho_q, raw = polsim.quadrature_matrix(tau, spec, medium())
    closed = polsim.closed_form_element("HV", "VH", tau, spec, medium())
    assert abs(raw[1, 2] - closed) <= 1e-6 * abs(closed)
    assert np.allclose(rho_q, polsim.density_matrix(tau, spec, medium()), atol=1e-9)
    with pytest.raises(ValueError, match="0.99999"):
        polsim.quadrature_matrix(tau, polsim.DoublePeak(spec.omega1, spec.omega2, spec.delta, -1.0), medium())
    with pytest.raises(RuntimeError):
        polsim.quadrature_matrix(1e8, spec, medium(), order=16)


def test_sweep_and_preset():
    out = polsim.sweep(FIG3, threads=3)
    assert len(out["x"]) == 81
    assert out["x"][-1] == 400.0
    assert max(out["concurrence"]) > 0.99
    csv = polsim.sweep_csv(FIG3)
    assert csv.splitlines()[0] == "x,tau_fs,concurrence,purity"
    assert len(csv.splitlines()) == 82
    with pytest.raises(ValueError, match="bogus"):
        polsim.sweep(dict(FIG3, bogus=1))
    assert polsim.preset_names() == ["fig3", "fig4", "fig5", "fig6"]
    fig6 = polsim.preset("fig6")
    assert set(fig6) == {"fwhm0.5", "fwhm1", "fwhm2"}


def test_validate():
    results = polsim.validate()
    assert results and all(r["passed"] for r in results)
    with pytest.raises(ValueError):
        polsim.validate(k=-1.0)
