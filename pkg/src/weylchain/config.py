"""Resource limits shared by the library entry points and the command line."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ScaleError


@dataclass(frozen=True)
class ScaleLimits:
    max_n: int = 5
    max_wedge_dim: int = 25000
    max_nodes: int = 64
    max_primitive_dim: int = 20

    def check_rank(self, n: int) -> None:
        if n > self.max_n:
            raise ScaleError(f"n = {n} exceeds the rank guard {self.max_n} (raise --max-n)")

    def check_wedge(self, family: str, n: int, k: int) -> None:
        self.check_rank(n)
        N = 2 * n + 1 if family == "B" else 2 * n
        size = comb(N, k)
        if size > self.max_wedge_dim:
            raise ScaleError(f"wedge^{k} of dimension {size} exceeds {self.max_wedge_dim} (raise --max-wedge-dim)")


DEFAULT_LIMITS = ScaleLimits()
