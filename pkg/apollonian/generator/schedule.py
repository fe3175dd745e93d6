"""
Occupation-parameter schedules {q_n} for evolving networks.
"""
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, model_validator

from apollonian.errors import InvalidArgument


class QSchedule(BaseModel):
    """
    q_n for steps n = 1, 2, ...

    constant: q_n = q
    harmonic: q_n = min(1, c/n)
    power:    q_n = min(1, c * n^-gamma)
    custom:   q_n = values[n-1], only defined through len(values)
    """
    kind:   Literal["constant", "harmonic", "power", "custom"] = "constant"
    q:      Optional[float] = None
    c:      Optional[float] = None
    gamma:  Optional[float] = None
    values: Optional[List[float]] = None

    @model_validator(mode="after")
    def _check_params(self) -> "QSchedule":
        if self.kind == "constant":
            if self.q is None or not 0.0 <= self.q <= 1.0:
                raise ValueError("constant schedule needs 0 <= q <= 1")
        elif self.kind == "harmonic":
            if self.c is None or self.c < 0:
                raise ValueError("harmonic schedule needs c >= 0")
        elif self.kind == "power":
            if self.c is None or self.c < 0 or self.gamma is None or self.gamma < 0:
                raise ValueError("power schedule needs c >= 0 and gamma >= 0")
        else:
            if not self.values:
                raise ValueError("custom schedule needs a non-empty list of values")
            if any(not 0.0 <= v <= 1.0 for v in self.values):
                raise ValueError("custom schedule values must lie in [0, 1]")
        return self

    @classmethod
    def parse(cls, text: str) -> "QSchedule":
        """Read `const:Q`, `harmonic:C`, `power:C,G` or `custom:Q1,Q2,...`."""
        kind, sep, params = text.partition(":")
        if not sep or not params:
            raise InvalidArgument(f"schedule {text!r} is not of the form kind:params")
        try:
            numbers = [float(p) for p in params.split(",")]
        except ValueError:
            raise InvalidArgument(f"schedule {text!r} has non-numeric parameters") from None
        kind = kind.strip().lower()
        if kind in ("const", "constant") and len(numbers) == 1:
            return cls(kind="constant", q=numbers[0])
        if kind == "harmonic" and len(numbers) == 1:
            return cls(kind="harmonic", c=numbers[0])
        if kind == "power" and len(numbers) == 2:
            return cls(kind="power", c=numbers[0], gamma=numbers[1])
        if kind == "custom":
            return cls(kind="custom", values=numbers)
        raise InvalidArgument(f"unknown schedule {text!r}")

    @property
    def label(self) -> str:
        if self.kind == "constant":
            return f"const:{self.q:g}"
        if self.kind == "harmonic":
            return f"harmonic:{self.c:g}"
        if self.kind == "power":
            return f"power:{self.c:g},{self.gamma:g}"
        return "custom:" + ",".join(f"{v:g}" for v in self.values)

    def q_at(self, n: int) -> float:
        if n < 1:
            raise InvalidArgument(f"schedule steps start at 1, got {n}")
        if self.kind == "constant":
            return self.q
        if self.kind == "harmonic":
            return min(1.0, self.c / n)
        if self.kind == "power":
            return min(1.0, self.c * n ** -self.gamma)
        if n > len(self.values):
            raise InvalidArgument(f"custom schedule defined through step {len(self.values)}, not {n}")
        return self.values[n - 1]

    def values_through(self, n: int) -> np.ndarray:
        """Array [q_1, ..., q_n]."""
        if n < 0:
            raise InvalidArgument(f"step count must be >= 0, got {n}")
        steps = np.arange(1, n + 1, dtype=float)
        if self.kind == "constant":
            return np.full(n, self.q)
        if self.kind == "harmonic":
            return np.minimum(1.0, self.c / steps)
        if self.kind == "power":
            return np.minimum(1.0, self.c * steps ** -self.gamma)
        if n > len(self.values):
            raise InvalidArgument(f"custom schedule defined through step {len(self.values)}, not {n}")
        return np.asarray(self.values[:n], dtype=float)

    def partial_sums(self, n: int) -> tuple[float, float]:
        """(sum q_i, sum q_i (1 - q_i)) over i = 1..n."""
        q = self.values_through(n)
        return float(np.sum(q)), float(np.sum(q * (1.0 - q)))
