"""Device population model for the over-the-air FL system.

Each device has a flat-fading channel with amplitude gain and phase, plus a
transmit power budget. Scheduling decisions are driven by the effective
coefficient c_k = gain_k * sqrt(power_k), i.e. the best received amplitude
the device can realize at full power.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class DeviceProfile:
    """One device's wireless parameters.

    channel_gain is the fading amplitude |h_k| (unitless), phase is the
    channel phase in [0, 2*pi) radians, max_power the power budget in watts.
    """

    id: int
    channel_gain: float
    phase: float
    max_power: float

    def __post_init__(self):
        if self.channel_gain <= 0:
            raise ValueError(f"device {self.id}: channel_gain must be > 0")
        if self.max_power <= 0:
            raise ValueError(f"device {self.id}: max_power must be > 0")
        if not 0.0 <= self.phase < TWO_PI:
            raise ValueError(f"device {self.id}: phase must lie in [0, 2*pi)")

    @property
    def effective_coefficient(self) -> float:
        """c_k = |h_k| * sqrt(P_k), the full-power received amplitude."""
        return self.channel_gain * math.sqrt(self.max_power)


@dataclass(frozen=True)
class Fleet:
    """Immutable device population with a deterministic sorted view.

    sorted_order holds device ids ordered by ascending effective coefficient,
    ties broken by ascending id.
    """

    devices: tuple[DeviceProfile, ...]
    sorted_order: tuple[int, ...]

    @classmethod
    def from_devices(cls, devices) -> "Fleet":
        devices = tuple(devices)
        if not devices:
            raise ValueError("fleet must contain at least one device")
        ids = [d.id for d in devices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate device ids in fleet")
        order = tuple(
            d.id for d in sorted(devices, key=lambda d: (d.effective_coefficient, d.id))
        )
        return cls(devices=devices, sorted_order=order)

    def __len__(self) -> int:
        return len(self.devices)

    def device(self, device_id: int) -> DeviceProfile:
        for d in self.devices:
            if d.id == device_id:
                return d
        raise KeyError(f"no device with id {device_id}")


def sample_fleet(n: int, power: float, min_gain: float, seed: int) -> Fleet:
    """Draw a fleet of n devices with Rayleigh-faded channel gains.

    Gains follow a unit-scale Rayleigh distribution clamped below at
    min_gain, phases are uniform in [0, 2*pi), and every device gets the
    same power budget. Pure function of (n, power, min_gain, seed).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if power <= 0:
        raise ValueError("power must be > 0")
    if min_gain <= 0:
        raise ValueError("min_gain must be > 0")
    rng = np.random.default_rng(seed)
    gains = np.maximum(rng.rayleigh(scale=1.0, size=n), min_gain)
    phases = rng.uniform(0.0, TWO_PI, size=n)
    devices = [
        DeviceProfile(id=i, channel_gain=float(gains[i]), phase=float(phases[i]),
                      max_power=float(power))
        for i in range(n)
    ]
    return Fleet.from_devices(devices)


def effective_coefficients(fleet: Fleet) -> tuple[np.ndarray, tuple[int, ...]]:
    """Ascending vector of c_k = gain * sqrt(power) with the id permutation.

    Returns (c, ids) where c[i] is the coefficient of device ids[i] and c is
    non-decreasing.
    """
    by_id = {d.id: d.effective_coefficient for d in fleet.devices}
    c = np.array([by_id[i] for i in fleet.sorted_order], dtype=float)
    return c, fleet.sorted_order


def save_fleet(fleet: Fleet, path) -> None:
    """Write the fleet as a JSON array of {id, gain, phase, power} objects."""
    rows = [
        {"id": d.id, "gain": d.channel_gain, "phase": d.phase, "power": d.max_power}
        for d in fleet.devices
    ]
    Path(path).write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8")


def load_fleet(path) -> Fleet:
    """Read a fleet JSON file, validating invariants and rejecting duplicates."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list) or not raw:
        raise ValueError("fleet file must be a non-empty JSON array")
    devices = []
    for entry in raw:
        try:
            devices.append(
                DeviceProfile(
                    id=int(entry["id"]),
                    channel_gain=float(entry["gain"]),
                    phase=float(entry["phase"]),
                    max_power=float(entry["power"]),
                )
            )
        except KeyError as exc:
            raise ValueError(f"fleet entry missing field {exc}") from exc
    return Fleet.from_devices(devices)
