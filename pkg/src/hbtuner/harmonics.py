"""Harmonic spectrum, THD and RMS measures for sampled periodic waveforms.

Two independent routes to the staircase spectrum exist on purpose: a plain
DFT of the samples (dft_spectrum, the measurement path used everywhere at
run time) and the closed-form Fourier series of the ideal staircase
(analytic_spectrum, used as a cross-check oracle in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DegenerateWaveformError
from .inverter import InverterConfig, validate_angles

DEFAULT_N_MAX = 50


@dataclass(frozen=True)
class HarmonicSpectrum:
    """Peak amplitudes of harmonics 1..n_max (index n-1 holds harmonic n)."""

    magnitudes: np.ndarray
    n_max: int

    def magnitude(self, n: int) -> float:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"harmonic {n} outside 1..{self.n_max}")
        return float(self.magnitudes[n - 1])

    @property
    def fundamental(self) -> float:
        return float(self.magnitudes[0])


@dataclass(frozen=True)
class HarmonicMetrics:
    thd_percent: float
    v_rms: float


def dft_spectrum(samples, n_max: int = DEFAULT_N_MAX) -> HarmonicSpectrum:
    """Harmonic magnitudes 2/N * |sum_j x_j exp(-i 2 pi n j / N)|, n = 1..n_max."""
    x = np.asarray(samples, dtype=float)
    n = x.shape[-1]
    if n < 2 or n & (n - 1):
        raise ConfigError(f"sample count must be a power of two, got {n}")
    if n_max < 1 or 2 * n_max > n:
        raise ConfigError(f"n_max={n_max} exceeds the Nyquist bound for {n} samples")
    mags = 2.0 * np.abs(np.fft.rfft(x)[1 : n_max + 1]) / n
    return HarmonicSpectrum(mags, n_max)


def analytic_spectrum(
    config: InverterConfig, angles, n_max: int = DEFAULT_N_MAX
) -> HarmonicSpectrum:
    """Closed-form staircase spectrum: V_n = |4/(n pi) * sum_k vdc_k cos(n theta_k)|.

    Even harmonics vanish by half-wave antisymmetry. A bridge at exactly
    90 degrees contributes cos(n*90deg) = 0 for every odd n, matching the
    zero-conduction convention of the synthesizer.
    """
    theta = np.deg2rad(validate_angles(config, angles))
    n = np.arange(1, n_max + 1)
    vdc = np.asarray(config.vdc)
    mags = np.abs(4.0 / (n * np.pi) * (np.cos(np.outer(n, theta)) @ vdc))
    mags[n % 2 == 0] = 0.0
    return HarmonicSpectrum(mags, n_max)


def thd(spectrum: HarmonicSpectrum) -> float:
    """Total harmonic distortion in percent: 100*sqrt(sum_{n>=2} V_n^2)/V_1.

    Even harmonics are included in the sum; they only matter for waveforms
    that lost their half-wave symmetry (e.g. grid-coupled terminals).
    """
    fund = spectrum.fundamental
    if fund <= 0.0:
        raise DegenerateWaveformError("zero fundamental; THD undefined")
    harm = spectrum.magnitudes[1:]
    return 100.0 * float(np.sqrt(np.sum(harm * harm))) / fund


def rms(samples) -> float:
    """Root mean square over the sample window."""
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise ConfigError("rms of an empty sequence")
    return float(np.sqrt(np.mean(x * x)))
