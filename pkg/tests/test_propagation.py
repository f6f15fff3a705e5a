import math

import numpy as np
import pytest

from helpers import random_couplings
from spinholonomy import (
    OutOfRange,
    ZeroCoupling,
    build_hamiltonians,
    couplings_to_polar,
    expm_hermitian,
    gaussian_pulse,
    propagator_closed_form,
    propagator_time_ordered,
    pulse_area,
    scaled_to_area,
    solve_cyclic,
    square_pulse,
    tabulated_pulse,
)
from spinholonomy.linalg import max_abs, unitarity_defect


def random_tabulated(rng, duration, nodes=16):
    times = np.linspace(0.0, duration, nodes + 1)
    values = rng.uniform(0.2, 1.0, size=nodes + 1)
    return tabulated_pulse(list(zip(times, values)))


# --- pulse areas ------------------------------------------------------

def test_square_area_is_rectangle():
    assert pulse_area(square_pulse(2.0, 5.0), 3.0) == 6.0


def test_area_at_zero():
    for p in (square_pulse(1.0, 1.0), gaussian_pulse(1.0, 1.0)):
        assert pulse_area(p, 0.0) == 0.0


def test_gaussian_area_against_trapezoid_oracle():
    p = gaussian_pulse(3.0, 2.0)
    t = np.linspace(0.0, 2.0, 1_000_001)
    oracle = np.trapezoid([p.envelope(x) for x in t], t)
    assert abs(pulse_area(p, 2.0) - oracle) <= 1e-9


def test_tabulated_area_against_trapezoid_oracle(rng):
    p = random_tabulated(rng, 1.5)
    t = np.linspace(0.0, 1.5, 300_001)
    oracle = np.trapezoid([p.envelope(x) for x in t], t)
    assert abs(pulse_area(p, 1.5) - oracle) <= 1e-9


def test_area_rejects_out_of_window():
    with pytest.raises(OutOfRange):
        pulse_area(square_pulse(1.0, 1.0), 1.5)
    with pytest.raises(OutOfRange):
        pulse_area(square_pulse(1.0, 1.0), -0.1)


def test_scaled_to_area(rng):
    p = scaled_to_area(random_tabulated(rng, 2.0), 4.0)
    assert abs(pulse_area(p, p.duration) - 4.0) <= 1e-9


# --- cyclicity --------------------------------------------------------

def test_solve_cyclic_direct_formula():
    assert solve_cyclic(math.pi, 1.0, 0).duration == 1.0
    assert abs(solve_cyclic(1.0, 1.0, 1).duration - 3 * math.pi) <= 1e-15


def test_solve_cyclic_area_condition(rng):
    for _ in range(50):
        omega = rng.uniform(0.1, 3.0)
        amp = rng.uniform(0.1, 3.0)
        n = int(rng.integers(0, 4))
        p = solve_cyclic(omega, amp, n)
        assert abs(pulse_area(p, p.duration) * omega - (2 * n + 1) * math.pi) <= 1e-12


def test_solve_cyclic_rejects_zero_omega():
    with pytest.raises(ZeroCoupling):
        solve_cyclic(0.0, 1.0, 0)


def test_cyclic_pulse_gives_block_diagonal_propagator(rng):
    c = random_couplings(rng)
    omega = couplings_to_polar(c).omega
    p = solve_cyclic(omega, 1.3, 0)
    u = propagator_closed_form(build_hamiltonians(c), pulse_area(p, p.duration))
    assert max_abs(u[:4, 4:]) <= 1e-12
    assert max_abs(u[4:, :4]) <= 1e-12


# --- closed form ------------------------------------------------------

def test_closed_form_zero_area_is_identity(rng):
    ham = build_hamiltonians(random_couplings(rng))
    assert max_abs(propagator_closed_form(ham, 0.0) - np.eye(8)) <= 1e-15


def test_closed_form_matches_exponential(rng):
    for _ in range(200):
        c = random_couplings(rng)
        ham = build_hamiltonians(c)
        area = rng.uniform(0.0, 10.0)
        u_closed = propagator_closed_form(ham, area)
        u_exp = expm_hermitian(ham.h_eff, area)
        assert max_abs(u_closed - u_exp) <= 1e-10
        assert unitarity_defect(u_closed) <= 1e-12


# --- time-ordered oracle ----------------------------------------------

def test_time_ordered_zero_hamiltonian():
    u = propagator_time_ordered([(np.zeros((8, 8)), lambda t: 1.0)], 1.0, 7)
    assert max_abs(u - np.eye(8)) == 0


def test_time_ordered_square_matches_closed_form(rng):
    for _ in range(20):
        c = random_couplings(rng)
        ham = build_hamiltonians(c)
        p = solve_cyclic(couplings_to_polar(c).omega, 1.0, 0)
        u = propagator_time_ordered([(ham.h_eff, p.envelope)], p.duration, 200)
        want = propagator_closed_form(ham, pulse_area(p, p.duration))
        assert max_abs(u - want) <= 1e-8


def test_time_ordered_two_arms_sum_to_chain(rng):
    from spinholonomy import arm_hamiltonians

    for _ in range(10):
        c = random_couplings(rng)
        h1, h2 = arm_hamiltonians(c)
        p = solve_cyclic(couplings_to_polar(c).omega, 0.8, 1)
        u = propagator_time_ordered(
            [(h1, p.envelope), (h2, p.envelope)], p.duration, 200
        )
        want = propagator_closed_form(
            build_hamiltonians(c), pulse_area(p, p.duration)
        )
        assert max_abs(u - want) <= 1e-8


def test_time_ordered_unitarity(rng):
    for _ in range(20):
        c = random_couplings(rng)
        ham = build_hamiltonians(c)
        p = gaussian_pulse(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0))
        u = propagator_time_ordered([(ham.h_eff, p.envelope)], p.duration, 50)
        assert unitarity_defect(u) <= 1e-10


# --- shape independence and convergence --------------------------------

def test_pulse_shape_independence(rng):
    # Equal-area pulses of any shape realize the same propagator.
    for _ in range(5):
        c = random_couplings(rng, min_omega=0.3)
        ham = build_hamiltonians(c)
        omega = couplings_to_polar(c).omega
        area = math.pi / omega
        duration = rng.uniform(0.8, 1.5)
        shapes = [
            scaled_to_area(square_pulse(1.0, duration), area),
            scaled_to_area(gaussian_pulse(1.0, duration), area),
            scaled_to_area(random_tabulated(rng, duration), area),
        ]
        gates = [
            propagator_time_ordered([(ham.h_eff, p.envelope)], duration, 4000)
            for p in shapes
        ]
        for u in gates[1:]:
            assert max_abs(u - gates[0]) <= 1e-8


def test_doubling_steps_improves_convergence(rng):
    # Midpoint stepping is second order: doubling the step count shrinks
    # the deviation from the closed form by at least a factor of 3.
    improved = []
    for _ in range(20):
        c = random_couplings(rng, min_omega=0.3)
        ham = build_hamiltonians(c)
        duration = rng.uniform(0.5, 2.0)
        peak = rng.uniform(0.5, 2.0)

        def envelope(t, _d=duration, _p=peak):
            return _p * t * (_d - t)

        area = peak * duration**3 / 6  # integral of p t (d - t)
        want = propagator_closed_form(ham, area)
        dev = [
            max_abs(
                propagator_time_ordered([(ham.h_eff, envelope)], duration, n) - want
            )
            for n in (64, 128)
        ]
        improved.append(dev[0] / dev[1])
    assert min(improved) >= 3.0


def test_pulse_plan_validation():
    with pytest.raises(ValueError):
        square_pulse(1.0, -1.0)
    with pytest.raises(ValueError):
        tabulated_pulse([(0.0, 1.0)])  # too few samples
    with pytest.raises(ValueError):
        tabulated_pulse([(0.0, 1.0), (2.0, 1.0), (1.0, 0.5)])  # non-monotone times
