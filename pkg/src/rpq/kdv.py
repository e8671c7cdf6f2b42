"""Lattice simulator for the deformed KdV evolution.

The evolution is genuinely a lattice system: the two shift operators
e^(+-2 tau d/dx) act as integer grid shifts, so the grid spacing is tied to
tau by 2*tau = s*dx with integer s >= 1 and shifts are exact index rolls,
never interpolation.  The right side at each point is

    [ Theta*(v(x-2tau)^2 - v(x) v(x+2tau))
      - C*Theta^3*(v(x+2tau) - v(x-2tau)) ] / (2 sin tau)

and time stepping is classical RK4.  Theta and C are plain reals, computed
from a preset at numeric (p, q) or given directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np


@dataclass(frozen=True)
class KdVParams:
    tau: float
    theta: float
    central_c: float
    grid_points: int
    shift_steps: int          # s, with 2*tau = s*dx
    dt: float
    steps: int
    nonlinear: bool = True
    cfl_constant: float | None = 4.0

    def __post_init__(self):
        if self.tau <= 0.0:
            raise ValueError("tau must be positive")
        if self.shift_steps < 1:
            raise ValueError("shift steps s must be >= 1")
        if self.grid_points <= 2 * self.shift_steps:
            raise ValueError("grid must be wider than twice the shift")
        if self.dt <= 0.0:
            raise ValueError("dt must be positive")
        if abs(math.sin(self.tau)) < 1e-12:
            raise ValueError("sin(tau) = 0 makes the evolution singular")

    @property
    def dx(self) -> float:
        return 2.0 * self.tau / self.shift_steps

    @property
    def length(self) -> float:
        return self.grid_points * self.dx


@dataclass
class KdVState:
    v: np.ndarray
    t: float = 0.0

    def copy(self) -> "KdVState":
        return KdVState(self.v.copy(), self.t)


def rhs(state: KdVState, params: KdVParams) -> np.ndarray:
    s = params.shift_steps
    v = state.v
    v_minus = np.roll(v, s)      # v(x - 2 tau)
    v_plus = np.roll(v, -s)      # v(x + 2 tau)
    out = -params.central_c * params.theta**3 * (v_plus - v_minus)
    if params.nonlinear:
        out = out + params.theta * (v_minus**2 - v * v_plus)
    return out / (2.0 * math.sin(params.tau))


def rk4_step(state: KdVState, params: KdVParams) -> KdVState:
    if params.cfl_constant is not None:
        peak = float(np.max(np.abs(state.v)))
        if peak > 0.0 and params.dt > params.cfl_constant * params.dx / peak:
            raise ValueError(
                f"dt={params.dt} violates the step guard "
                f"{params.cfl_constant}*dx/max|v| = "
                f"{params.cfl_constant * params.dx / peak:.3e}"
            )
    dt = params.dt
    k1 = rhs(state, params)
    k2 = rhs(KdVState(state.v + 0.5 * dt * k1, state.t + 0.5 * dt), params)
    k3 = rhs(KdVState(state.v + 0.5 * dt * k2, state.t + 0.5 * dt), params)
    k4 = rhs(KdVState(state.v + dt * k3, state.t + dt), params)
    v_next = state.v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(v_next)):
        raise FloatingPointError(
            f"non-finite field after step at t={state.t + dt:.6g}"
        )
    return KdVState(v_next, state.t + dt)


def run(initial: KdVState, params: KdVParams,
        snapshot_every: int = 1) -> Iterator[KdVState]:
    """Advance `steps` RK4 steps, yielding snapshots (including the start)."""
    if snapshot_every < 1:
        raise ValueError("snapshot stride must be >= 1")
    state = initial.copy()
    yield state.copy()
    for step in range(1, params.steps + 1):
        state = rk4_step(state, params)
        if step % snapshot_every == 0 or step == params.steps:
            yield state.copy()


# -- initial profiles ---------------------------------------------------

def cosine_profile(params: KdVParams, amplitude: float = 1.0,
                   wavenumber: int = 1) -> KdVState:
    x = np.arange(params.grid_points) * params.dx
    v = amplitude * np.cos(2.0 * math.pi * wavenumber * x / params.length)
    return KdVState(v)


def soliton_profile(params: KdVParams, amplitude: float = 1.0,
                    width: float | None = None,
                    center: float | None = None) -> KdVState:
    x = np.arange(params.grid_points) * params.dx
    center = params.length / 2.0 if center is None else center
    width = params.length / 12.0 if width is None else width
    v = amplitude / np.cosh((x - center) / width) ** 2
    return KdVState(v)


def dispersion_phase(params: KdVParams, wavenumber: int, time: float) -> float:
    """Exact phase advance of one Fourier mode under the linear part.

    With v = cos(theta_k x - w t), the shift difference gives
    w = C * Theta^3 * sin(2 tau theta_k) / sin(tau).
    """
    theta_k = 2.0 * math.pi * wavenumber / params.length
    omega = (
        params.central_c * params.theta**3
        * math.sin(2.0 * params.tau * theta_k) / math.sin(params.tau)
    )
    return omega * time


def mode_phase(state: KdVState, wavenumber: int) -> float:
    """Measured phase of the given Fourier mode of the field."""
    spectrum = np.fft.rfft(state.v)
    return float(-np.angle(spectrum[wavenumber]))


def taylor_rhs_small_tau(state: KdVState, params: KdVParams) -> np.ndarray:
    """Small-tau expansion of the right side through first order.

    rhs = -3 Theta v v' - 2 C Theta^3 v' + tau * Theta (2 v'^2 + v v'') + O(tau^2)
    on a periodic grid, with spectral derivatives of the smooth profile.
    """
    n = params.grid_points
    k = np.fft.rfftfreq(n, d=params.dx) * 2.0 * math.pi
    spectrum = np.fft.rfft(state.v)
    v1 = np.fft.irfft(1j * k * spectrum, n)
    v2 = np.fft.irfft(-(k**2) * spectrum, n)
    out = -2.0 * params.central_c * params.theta**3 * v1
    if params.nonlinear:
        out = out - 3.0 * params.theta * state.v * v1
        out = out + params.tau * params.theta * (2.0 * v1**2 + state.v * v2)
    return out
