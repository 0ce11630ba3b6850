"""Cascaded H-bridge staircase synthesis and series-resistive circuit solution.

A cascade of m H-bridges produces a 2m+1 level staircase voltage. Bridge k
switches in at its firing angle theta_k (degrees) in the first quarter
period; the rest of the period follows by quarter-wave symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, SingularCircuitError


@dataclass(frozen=True)
class ResistiveLoad:
    r_load: float  # ohm


@dataclass(frozen=True)
class IdealGrid:
    """Stiff sinusoidal network voltage behind the line resistor."""

    v_rms: float = 220.0  # V
    frequency: float = 50.0  # Hz
    phase: float = 0.0  # rad, relative to the staircase fundamental


@dataclass(frozen=True)
class OpenCircuit:
    pass


Load = ResistiveLoad | IdealGrid | OpenCircuit


@dataclass(frozen=True)
class InverterConfig:
    """Static description of one cascaded inverter and its connection.

    vdc[k] is the DC source of bridge k; bridge k is the k-th to fire.
    r_internal are DC-link/inter-level resistors that sit permanently in the
    series conduction path; r_line sits between inverter and network.
    """

    bridges: int
    vdc: tuple[float, ...]
    r_internal: tuple[float, ...] = ()
    r_line: float = 0.0
    load: Load = field(default_factory=OpenCircuit)
    f0: float = 50.0  # Hz, fundamental

    def __post_init__(self):
        object.__setattr__(self, "vdc", tuple(float(v) for v in self.vdc))
        object.__setattr__(self, "r_internal", tuple(float(r) for r in self.r_internal))
        if self.bridges < 1:
            raise ConfigError("bridges must be >= 1")
        if len(self.vdc) != self.bridges:
            raise ConfigError(
                f"vdc has {len(self.vdc)} entries for {self.bridges} bridges"
            )
        if any(v < 0 for v in self.vdc):
            raise ConfigError("vdc entries must be >= 0")
        if any(r < 0 for r in self.r_internal) or self.r_line < 0:
            raise ConfigError("resistances must be >= 0")
        if isinstance(self.load, ResistiveLoad) and self.load.r_load < 0:
            raise ConfigError("r_load must be >= 0")
        if self.f0 <= 0:
            raise ConfigError("f0 must be > 0")

    @property
    def levels(self) -> int:
        return 2 * self.bridges + 1

    @property
    def r_series(self) -> float:
        """Series resistance between bridge stack and network terminal."""
        return sum(self.r_internal) + self.r_line


@dataclass(frozen=True)
class PeriodWaveform:
    """One fundamental period of terminal voltage and injected current."""

    n_samples: int
    v_out: np.ndarray  # V
    i_out: np.ndarray  # A


def validate_angles(config: InverterConfig, angles) -> np.ndarray:
    """Check an angle vector against the config and return it as an array."""
    theta = np.asarray(angles, dtype=float)
    if theta.shape != (config.bridges,):
        raise ConfigError(
            f"expected {config.bridges} firing angles, got shape {theta.shape}"
        )
    if np.any(theta < 0.0) or np.any(theta > 90.0):
        raise ConfigError("firing angles must lie in [0, 90] degrees")
    if np.any(np.diff(theta) < 0.0):
        raise ConfigError("firing angles must be non-decreasing")
    return theta


def _check_n_samples(n_samples: int, bridges: int) -> None:
    if n_samples < 4 * bridges or n_samples & (n_samples - 1):
        raise ConfigError(
            f"n_samples must be a power of two >= {4 * bridges}, got {n_samples}"
        )


def _staircase_batch(vdc: np.ndarray, thetas: np.ndarray, n_samples: int) -> np.ndarray:
    """Sample staircases for a (B, m) batch of sorted angle rows; returns (B, n).

    Samples sit at phi_j = 360*j/n. The second quadrant mirrors the first and
    the second half negates the first by index arithmetic, so half-wave
    antisymmetry holds sample-exactly. A bridge clamped at exactly 90 degrees
    fires and unfires at the same instant and therefore never conducts.
    """
    n4 = n_samples // 4
    phi = 360.0 * np.arange(n4 + 1) / n_samples  # first quadrant inclusive
    th = thetas[:, None, :]
    engaged = (phi[None, :, None] >= th) & (th < 90.0)
    quadrant = engaged @ vdc  # (B, n4+1)
    v = np.empty((thetas.shape[0], n_samples))
    v[:, : n4 + 1] = quadrant
    v[:, n4 + 1 : n_samples // 2] = quadrant[:, n4 - 1 : 0 : -1]
    v[:, n_samples // 2 :] = -v[:, : n_samples // 2]
    return v


def synth_staircase(config: InverterConfig, angles, n_samples: int = 1024) -> np.ndarray:
    """Ideal no-load staircase over one period, sampled at phi_j = 360*j/n."""
    theta = validate_angles(config, angles)
    _check_n_samples(n_samples, config.bridges)
    vdc = np.asarray(config.vdc)
    return _staircase_batch(vdc, theta[None, :], n_samples)[0]


def _grid_wave(grid: IdealGrid, f0: float, n_samples: int) -> np.ndarray:
    t = np.arange(n_samples) / (f0 * n_samples)
    return np.sqrt(2.0) * grid.v_rms * np.sin(2.0 * np.pi * grid.frequency * t + grid.phase)


def output_map(config: InverterConfig, n_samples: int):
    """Affine map from staircase to terminal voltage: v_out = gain*v_inv + offset.

    The circuit is linear and memoryless, so the terminal voltage is an
    affine function of the staircase sample. offset is None except for a
    grid connection, where the stiff grid wave leaks through the divider.
    """
    load = config.load
    if isinstance(load, OpenCircuit):
        return 1.0, None
    if isinstance(load, ResistiveLoad):
        r_total = config.r_series + load.r_load
        if r_total == 0.0:
            raise SingularCircuitError("resistive loop has zero total resistance")
        return load.r_load / r_total, None
    r_link = config.r_series
    if r_link == 0.0:
        raise SingularCircuitError("grid connection has zero series resistance")
    rho = sum(config.r_internal) / r_link
    return 1.0 - rho, rho * _grid_wave(load, config.f0, n_samples)


def simulate_period(config: InverterConfig, angles, n_samples: int = 1024) -> PeriodWaveform:
    """Solve the series circuit for one period of the staircase.

    ResistiveLoad: i = v_inv / R_total, v_out = i * r_load.
    IdealGrid:     i = (v_inv - v_grid) / (r_internal + r_line),
                   v_out = v_inv - i * sum(r_internal)  (inverter terminal).
    OpenCircuit:   i = 0, v_out = v_inv.
    """
    v_inv = synth_staircase(config, angles, n_samples)
    gain, offset = output_map(config, n_samples)
    v_out = gain * v_inv if offset is None else gain * v_inv + offset
    load = config.load
    if isinstance(load, OpenCircuit):
        i = np.zeros(n_samples)
    elif isinstance(load, ResistiveLoad):
        i = v_inv / (config.r_series + load.r_load)
    else:
        i = (v_inv - _grid_wave(load, config.f0, n_samples)) / config.r_series
    return PeriodWaveform(n_samples, v_out, i)
