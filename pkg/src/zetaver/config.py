"""Evaluation configuration shared by series and quadrature code."""

from __future__ import annotations

import dataclasses

from .errors import ConfigError


@dataclasses.dataclass(frozen=True)
class EvalConfig:
    """Tolerances and truncation controls governing every numeric routine.

    abs_tol / rel_tol: target absolute / relative accuracy.
    em_terms: minimum number of direct terms before the Euler-Maclaurin
        tail is applied (grows automatically with |Im s|).
    bernoulli_order: number of Bernoulli correction terms (even).
    max_series_terms: hard budget for any single series evaluation.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    em_terms: int = 10
    bernoulli_order: int = 16
    max_series_terms: int = 2_000_000

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ConfigError("abs_tol and rel_tol must be positive")
        if self.em_terms < 1:
            raise ConfigError("em_terms must be >= 1")
        if self.bernoulli_order < 2 or self.bernoulli_order % 2:
            raise ConfigError("bernoulli_order must be even and >= 2")
        if self.max_series_terms < self.em_terms:
            raise ConfigError("max_series_terms too small")

    def with_tols(self, abs_tol: float | None = None, rel_tol: float | None = None) -> "EvalConfig":
        return dataclasses.replace(
            self,
            abs_tol=self.abs_tol if abs_tol is None else abs_tol,
            rel_tol=self.rel_tol if rel_tol is None else rel_tol,
        )


DEFAULT_CONFIG = EvalConfig()
