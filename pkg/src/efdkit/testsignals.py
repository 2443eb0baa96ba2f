"""Synthetic benchmark signals Sig1-Sig6 and their ground-truth components.

All generators are deterministic given (spec, seed).  Noisy signals carry
Gaussian white noise scaled to an exact 10 dB signal-to-noise ratio
against the noiseless part.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError
from .spectral import Signal

DEFAULT_SEED = 42

#: Mode counts used throughout the benchmark tables, per method family.
MODE_COUNTS = {
    "sig1": {"efd": 3, "ewt": 3},
    "sig2": {"efd": 3, "ewt": 4},
    "sig3": {"efd": 2, "ewt": 2},
    "sig4": {"efd": 3, "ewt": 3},
    "sig5": {"efd": 3, "ewt": 4},
    "sig6": {"efd": 2, "ewt": 3},
}


@dataclass(frozen=True)
class TestSignalSpec:
    """Identifier plus sampling setup and signal-specific parameters."""

    id: str
    sample_rate_hz: float
    duration_s: float
    params: dict = field(default_factory=dict)

    @property
    def n_samples(self):
        return int(round(self.sample_rate_hz * self.duration_s))


def sig1_spec(seed=DEFAULT_SEED):
    return TestSignalSpec("sig1", 1000.0, 1.0, {"seed": seed})


def sig2_spec(seed=DEFAULT_SEED):
    return TestSignalSpec("sig2", 1000.0, 1.0, {"seed": seed})


def sig3_spec():
    return TestSignalSpec("sig3", 1000.0, 1.0)


def sig4_spec():
    return TestSignalSpec("sig4", 1000.0, 1.0)


def sig5_spec():
    return TestSignalSpec("sig5", 50.0, 20.0)


def sig6_spec(a, lambda_r):
    if not (0.01 <= a <= 100.0) or not (0.01 <= lambda_r <= 1.0):
        raise InvalidInputError("sig6 requires 0.01 <= a <= 100 and 0.01 <= lambda_r <= 1")
    return TestSignalSpec("sig6", 10.0, 300.0, {"a": a, "lambda_r": lambda_r})


def _noise_for_snr(clean, snr_db, seed):
    """White Gaussian noise rescaled so the realized SNR is exact."""
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal(clean.size)
    target_power = np.mean(clean ** 2) / 10.0 ** (snr_db / 10.0)
    return noise * np.sqrt(target_power / np.mean(noise ** 2))


def generate(spec: TestSignalSpec):
    """Composite Signal and its ground-truth component Signals.

    Components exclude the noise term of sig1/sig2.
    """
    t = np.arange(spec.n_samples) / spec.sample_rate_hz
    rate = spec.sample_rate_hz
    sid = spec.id
    if sid == "sig1":
        comps = [6.0 * t, np.cos(24 * np.pi * t), np.cos(50 * np.pi * t)]
        clean = np.sum(comps, axis=0)
        samples = clean + _noise_for_snr(clean, 10.0, spec.params.get("seed", DEFAULT_SEED))
    elif sid == "sig2":
        comps = [np.cos(20 * np.pi * t), np.cos(24 * np.pi * t), np.cos(50 * np.pi * t)]
        clean = np.sum(comps, axis=0)
        samples = clean + _noise_for_snr(clean, 10.0, spec.params.get("seed", DEFAULT_SEED))
    elif sid == "sig3":
        comps = [
            1.0 / (1.2 + np.cos(2 * np.pi * t)),
            np.cos(32 * np.pi * t + 0.2 * np.cos(64 * np.pi * t)) / (1.5 + np.sin(2 * np.pi * t)),
        ]
        samples = np.sum(comps, axis=0)
    elif sid == "sig4":
        comps = [6.0 * t, np.cos(8 * np.pi * t), 0.5 * np.cos(40 * np.pi * t)]
        samples = np.sum(comps, axis=0)
    elif sid == "sig5":
        comps = [np.cos(2 * np.pi * lam * t) for lam in (1.1, 1.3, 3.1)]
        samples = np.sum(comps, axis=0)
    elif sid == "sig6":
        a, lam = spec.params["a"], spec.params["lambda_r"]
        comps = [np.cos(2 * np.pi * t), a * np.cos(2 * np.pi * lam * t)]
        samples = np.sum(comps, axis=0)
    else:
        raise InvalidInputError("unknown test signal id %r" % sid)
    return Signal(samples, rate), [Signal(c, rate) for c in comps]
