"""Scalar fitness of a firing-angle set: THD plus weighted RMS regulation error."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .harmonics import DEFAULT_N_MAX
from .inverter import InverterConfig, _staircase_batch, output_map, validate_angles

DEGENERATE_PENALTY = 1.0e6

# below this fundamental peak (volts) the waveform carries no usable tone
_FUNDAMENTAL_FLOOR = 1.0e-9


@dataclass(frozen=True)
class ObjectiveConfig:
    k_v: float = 0.5  # 1/V, weight of the regulation error
    v_target: float = 220.0  # V rms
    n_max: int = DEFAULT_N_MAX
    n_samples: int = 1024

    def __post_init__(self):
        if self.k_v < 0 or self.v_target <= 0:
            raise ValueError("k_v must be >= 0 and v_target > 0")


@dataclass(frozen=True)
class Fitness:
    """of_value = thd_percent + k_v * vrms_error, except for degenerate waveforms."""

    of_value: float
    thd_percent: float
    vrms_error: float
    v_rms: float

    @property
    def degenerate(self) -> bool:
        return self.of_value >= DEGENERATE_PENALTY


def evaluate_many(inv: InverterConfig, obj: ObjectiveConfig, thetas: np.ndarray):
    """Fitness parts for a (B, m) batch of sorted angle rows.

    Returns (of, thd_pct, vrms) arrays of length B. Degenerate rows (no
    fundamental) get of = DEGENERATE_PENALTY and thd = inf instead of an
    error so that population searches can discard them.
    """
    thetas = np.asarray(thetas, dtype=float)
    n = obj.n_samples
    v = _staircase_batch(np.asarray(inv.vdc), thetas, n)
    gain, offset = output_map(inv, n)
    v = gain * v if offset is None else gain * v + offset
    mags = 2.0 * np.abs(np.fft.rfft(v, axis=1)[:, 1 : obj.n_max + 1]) / n
    fund = mags[:, 0]
    vrms = np.sqrt(np.mean(v * v, axis=1))
    live = fund > _FUNDAMENTAL_FLOOR
    thd_pct = np.full(thetas.shape[0], np.inf)
    harm = mags[:, 1:]
    with np.errstate(invalid="ignore", divide="ignore"):
        thd_pct[live] = 100.0 * np.sqrt(np.sum(harm[live] ** 2, axis=1)) / fund[live]
    of = np.where(live, thd_pct + obj.k_v * np.abs(obj.v_target - vrms), DEGENERATE_PENALTY)
    return of, thd_pct, vrms


def evaluate(inv: InverterConfig, obj: ObjectiveConfig, angles) -> Fitness:
    """Simulate one period under the configured load and score it."""
    theta = validate_angles(inv, angles)
    of, thd_pct, vrms = evaluate_many(inv, obj, theta[None, :])
    return Fitness(
        of_value=float(of[0]),
        thd_percent=float(thd_pct[0]),
        vrms_error=float(abs(obj.v_target - vrms[0])),
        v_rms=float(vrms[0]),
    )
