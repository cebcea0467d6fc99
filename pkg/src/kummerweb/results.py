"""Uniform record for a single pass/fail check."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check.

    ``metric`` is ``"residual"`` (pass when ``value < threshold``), ``"rank"``
    (pass when ``value == threshold``) or ``"curvature-verdict"`` (pass when
    the boolean verdict ``value`` equals the expected ``threshold``).
    """

    name: str
    metric: str
    value: object
    threshold: object
    inputs: dict = field(default_factory=dict)
    corrections: tuple = ()

    @property
    def passed(self):
        if self.metric == "residual":
            return bool(self.value < self.threshold)
        return self.value == self.threshold

    def __float__(self):
        return float(self.value)

    def __bool__(self):
        return self.passed

    def as_dict(self):
        return {
            "name": self.name,
            "inputs": self.inputs,
            "metric": self.metric,
            "value": self.value,
            "threshold": self.threshold,
            "pass": self.passed,
            "corrections": list(self.corrections),
        }
