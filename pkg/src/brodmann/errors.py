"""Shared exceptions and the enumeration budget."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV_VAR = "BRODMANN_BUDGET"


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ParseError(InputError):
    """Input file rejected; carries the offending location."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")


class BudgetError(RuntimeError):
    """An enumeration would exceed the lattice-point budget; no partial result."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree disagreed; carries both answers."""

    def __init__(self, message: str, payload: dict | None = None):
        self.payload = payload or {}
        super().__init__(message)


def enumeration_budget(override: int | None = None) -> int:
    """Lattice points allowed per enumeration: explicit override, else env, else default."""
    if override is not None:
        value = override
    else:
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None:
            return DEFAULT_BUDGET
        try:
            value = int(raw)
        except ValueError as exc:
            raise InputError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InputError(f"enumeration budget must be positive, got {value}")
    return value


def charge_budget(points: int, budget: int | None = None, what: str = "enumeration") -> None:
    limit = enumeration_budget(budget)
    if points > limit:
        raise BudgetError(f"{what} needs {points} lattice points, budget is {limit}")
