"""Gaussian differential-privacy accounting for aligned analog aggregation.

The channel noise at the receiver acts as the Gaussian mechanism. With
every scheduled device aligning its gradient to amplitude nu and gradients
clipped to norm w, swapping one sample at one device moves the received
signal by at most 2*w*nu, so a single round leaks

    eps = (2 * w * nu / sigma) * sqrt(2 * ln(1.25 / delta))

with slack delta. Accounting here is per round only; composing leakage
across rounds is left to the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_REL_TOL = 1e-12


def privacy_multiplier(delta: float) -> float:
    """sqrt(2 * ln(1.25 / delta)) for delta in (0, 1)."""
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    return math.sqrt(2.0 * math.log(1.25 / delta))


@dataclass(frozen=True)
class PrivacySpec:
    """Per-device privacy budget (epsilon, delta) with its derived multiplier."""

    epsilon: float
    delta: float
    multiplier: float | None = None  # derived from delta when omitted

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")
        expected = privacy_multiplier(self.delta)
        if self.multiplier is None:
            object.__setattr__(self, "multiplier", expected)
        elif abs(self.multiplier - expected) > _REL_TOL * expected:
            raise ValueError("multiplier inconsistent with delta")


def sensitivity(grad_bound: float, alignment: float) -> float:
    """Worst-case received-signal shift from swapping one sample: 2*w*nu."""
    if grad_bound <= 0 or alignment <= 0:
        raise ValueError("grad_bound and alignment must be > 0")
    return 2.0 * grad_bound * alignment


def epsilon_per_round(grad_bound: float, alignment: float, noise_std: float,
                      delta: float) -> float:
    """Single-round privacy loss 2*w*nu*multiplier/sigma.

    Strictly increasing in alignment and grad_bound, strictly decreasing in
    noise_std. alignment == 0 is allowed and leaks nothing.
    """
    if grad_bound <= 0:
        raise ValueError("grad_bound must be > 0")
    if alignment < 0:
        raise ValueError("alignment must be >= 0")
    if noise_std <= 0:
        raise ValueError("noise_std must be > 0: no privacy without noise")
    return 2.0 * grad_bound * alignment * privacy_multiplier(delta) / noise_std


def max_theta_for_privacy(spec: PrivacySpec, noise_std: float) -> float:
    """Largest theta = w*nu that keeps the round within budget: eps*sigma/(2*phi)."""
    if noise_std <= 0:
        raise ValueError("noise_std must be > 0")
    return spec.epsilon * noise_std / (2.0 * spec.multiplier)


def within_budget(spec: PrivacySpec, grad_bound: float, alignment: float,
                  noise_std: float) -> bool:
    """Whether a round at this alignment stays within the epsilon budget.

    Running below the budget only strengthens the guarantee, so any
    alignment at or under the ceiling is compliant.
    """
    eps = epsilon_per_round(grad_bound, alignment, noise_std, spec.delta)
    return eps <= spec.epsilon * (1.0 + 1e-9)
