# Copyright 2026 The noonlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import noonlab


def test_noon4_single_photon_scheme():
    r = noonlab.run_scheme(noonlab.noon_factor_angles(4), noonlab.optimal_schedule(4))
    assert r.total_yield == pytest.approx(3 / 256, rel=1e-9)
    assert not r.impossible
    target = noonlab.noon_target(4).to_state()
    assert noonlab.fidelity(r.final_state, target) > 1 - 1e-9


def test_noon4_two_photon_scheme():
    r = noonlab.run_scheme_double(4, noonlab.noon_pair_phases(4), noonlab.optimal_schedule(2))
    assert r.total_yield == pytest.approx(3 / 16, rel=1e-9)
    assert noonlab.yield_noon_double(4) == pytest.approx(3 / 16)


def test_factorize_round_trip():
    rng = np.random.default_rng(5)
    c = rng.normal(size=6) + 1j * rng.normal(size=6)
    t = noonlab.TargetSpec(5, list(c))
    f = noonlab.factorize(t)
    assert len(f.factors) == 5
    assert f.normalization > 0
    rec = noonlab.reconstruct(f)
    assert noonlab.fidelity(rec, t.to_state()) > 1 - 1e-9
    amps = rec.amplitudes
    assert isinstance(amps, np.ndarray)
    assert amps.dtype == np.complex128
    assert len(rec.kets()) == len(amps)


def test_state_access():
    s = noonlab.fock_ket(2, 1, 1)
    assert s.amp(1, 1) == 1
    assert s.to_dict() == {(1, 1): 1}
    with pytest.raises(noonlab.CutoffOverflow):
        noonlab.TwoModeState(1).set(2, 0, 1.0)


def test_block_closed_form():
    p = noonlab.BlockParams(theta=0.4, phi=0.3, transmittance=0.5)
    s = noonlab.fock_ket(1, 1, 0)
    out = noonlab.run_block_single(s, p)
    q = math.cos(p.kappa) * math.sin(p.kappa)
    want = noonlab.apply_linear_factor(noonlab.fock_ket(2, 1, 0), 0.4, 0.3)
    np.testing.assert_allclose(out.state.amplitudes, q * want.amplitudes, atol=1e-12)
    assert out.probability == pytest.approx(out.state.norm2())


def test_unconditional_and_litho():
    f = noonlab.noon_factor_angles(3)
    t = noonlab.optimal_schedule(3)
    rho = noonlab.run_scheme_unconditional(f, t)
    assert rho.trace() == pytest.approx(1.0, abs=1e-12)
    r = noonlab.run_scheme(f, t)
    mixed = noonlab.absorption_rate_mixed(rho, 3)
    pure = noonlab.absorption_rate_pure(r.final_state, 3)
    assert mixed == pytest.approx(r.total_yield * pure, rel=1e-9)
    assert rho.matrix.shape == (10, 10)


def test_fringe():
    for n in range(1, 5):
        sweep = noonlab.fringe_sweep(noonlab.noon_target(n).to_state(), n, 32)
        assert noonlab.dominant_frequency(sweep) == n
        assert len(sweep.rates) == 32


def test_yields_and_errors():
    assert noonlab.yield_noon_single(4) == pytest.approx(3 / 256)
    assert noonlab.optimal_transmittance(3) == pytest.approx(1 / 3)
    with pytest.raises(ValueError):
        noonlab.optimal_transmittance(0)
    with pytest.raises(ValueError):
        noonlab.TargetSpec(2, [0, 0, 0])


def test_oracle_check():
    rep = noonlab.oracle_check(seed=3, trials=2)
    assert rep["passed"]
    assert not noonlab.oracle_check(seed=3, trials=2, perturb=True)["passed"]
