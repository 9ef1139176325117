"""Multi-window exact byte search.

Thin wrapper over the C++ core: window-blocked bad-character scanning with
classical single-window engines for comparison, a seeded corpus generator,
and an instrumented benchmark harness.
"""

from ._core import (
    ConfigError,
    CostCase,
    Error,
    InvalidArgument,
    InvalidSpec,
    Metrics,
    OpCounts,
    SymbolOutOfAlphabet,
    TableTooLarge,
    bench,
    cost_model,
    find_all,
    find_all_with_metrics,
    gen_random_text,
    table_bytes,
    table_entries,
)

__version__ = "1.0.0"

__all__ = [
    "ConfigError",
    "CostCase",
    "Error",
    "InvalidArgument",
    "InvalidSpec",
    "Metrics",
    "OpCounts",
    "SymbolOutOfAlphabet",
    "TableTooLarge",
    "bench",
    "cost_model",
    "find_all",
    "find_all_with_metrics",
    "gen_random_text",
    "table_bytes",
    "table_entries",
]
