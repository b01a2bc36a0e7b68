"""Virtual traffic source: pyramid-shaped packet rate profiles and arrival times.

The generator replaces a physical traffic core with a deterministic stream of
arrival timestamps (integer microseconds). The rate is quantized per virtual
second, which keeps expected packet counts analytic: second ``s`` carries
exactly ``round(rate_at(s))`` arrivals in uniform mode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MICROSECONDS_PER_SECOND = 1_000_000


@dataclass(frozen=True)
class PyramidProfile:
    """Piecewise-linear load profile: ramp up, optional plateau, ramp down."""

    floor_rate: float = 0.0
    peak_rate: float = 100_000.0
    ramp_seconds: int = 60
    plateau_seconds: int = 0

    def __post_init__(self) -> None:
        if self.ramp_seconds < 0 or self.plateau_seconds < 0:
            raise ValueError("ramp_seconds and plateau_seconds must be non-negative")
        if self.floor_rate < 0 or self.peak_rate < self.floor_rate:
            raise ValueError("need 0 <= floor_rate <= peak_rate")
        if self.ramp_seconds == 0 and self.plateau_seconds == 0:
            raise ValueError("profile has zero duration")

    @property
    def duration_seconds(self) -> int:
        return 2 * self.ramp_seconds + self.plateau_seconds

    def rate_at(self, second: int) -> float:
        """Packet rate (packets/s) during virtual second ``second``."""
        if second < 0 or second >= self.duration_seconds:
            raise ValueError(
                f"second {second} outside profile duration {self.duration_seconds}"
            )
        ramp, plateau = self.ramp_seconds, self.plateau_seconds
        span = self.peak_rate - self.floor_rate
        if second <= ramp:
            if ramp == 0:
                return self.peak_rate
            return self.floor_rate + span * (second / ramp)
        if second < ramp + plateau:
            return self.peak_rate
        return self.peak_rate - span * ((second - ramp - plateau) / ramp)

    def packets_in_second(self, second: int) -> int:
        return _round_half_up(self.rate_at(second))


def _round_half_up(x: float) -> int:
    return int(np.floor(x + 0.5))


@dataclass(frozen=True)
class ArrivalProcess:
    """Turns a rate profile into concrete arrival timestamps.

    ``uniform`` spaces arrivals evenly within each second and is fully
    deterministic. ``poisson`` draws exponential inter-arrival gaps from a
    per-second substream of ``seed`` so runs are reproducible.
    """

    mode: str = "uniform"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("uniform", "poisson"):
            raise ValueError(f"unknown arrival mode {self.mode!r}")

    def arrivals_for_second(self, profile: PyramidProfile, second: int) -> np.ndarray:
        """Arrival timestamps (int64 µs) within ``[second, second+1)``."""
        rate = profile.rate_at(second)
        base = second * MICROSECONDS_PER_SECOND
        if self.mode == "uniform":
            n = _round_half_up(rate)
            if n <= 0:
                return np.empty(0, dtype=np.int64)
            step = MICROSECONDS_PER_SECOND / n
            offsets = np.floor(np.arange(n, dtype=np.float64) * step).astype(np.int64)
            return base + offsets
        return base + self._poisson_offsets(rate, second)

    def _poisson_offsets(self, rate: float, second: int) -> np.ndarray:
        if rate <= 0:
            return np.empty(0, dtype=np.int64)
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((self.seed, second))))
        mean_gap_us = MICROSECONDS_PER_SECOND / rate
        expected = int(rate)
        offsets: list[np.ndarray] = []
        total = 0.0
        while total < MICROSECONDS_PER_SECOND:
            chunk = rng.exponential(mean_gap_us, size=max(64, expected // 4 + 1))
            cum = total + np.cumsum(chunk)
            offsets.append(cum)
            total = cum[-1]
        cum = np.concatenate(offsets)
        cum = cum[cum < MICROSECONDS_PER_SECOND]
        return np.floor(cum).astype(np.int64)

    def arrival_times(self, profile: PyramidProfile) -> np.ndarray:
        """All arrival timestamps for the full profile, sorted ascending."""
        parts = [
            self.arrivals_for_second(profile, s)
            for s in range(profile.duration_seconds)
        ]
        if not parts:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(parts)


def total_packets(profile: PyramidProfile) -> int:
    """Exact packet count a uniform process generates over the full profile."""
    return sum(profile.packets_in_second(s) for s in range(profile.duration_seconds))
