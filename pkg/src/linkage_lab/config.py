"""Computation budgets.

Budgets exist to fail loudly, not to approximate: exceeding one raises
BudgetError and never yields a partial answer.  The vanishing bound used
by Ext/Tor-searching invariants defaults to 2*(n+1) per ring and lives in
the calling layer; the caps here bound single kernel computations.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    max_degree: int = 24
    max_rank: int = 512
    iso_search_tries: int = 24

    def with_overrides(self, **kw) -> "Budgets":
        data = {
            "max_degree": self.max_degree,
            "max_rank": self.max_rank,
            "iso_search_tries": self.iso_search_tries,
        }
        data.update({k: v for k, v in kw.items() if v is not None})
        return Budgets(**data)


DEFAULT_BUDGETS = Budgets()


def default_bound(ring) -> int:
    """Default Ext/Tor vanishing bound for a ring: 2*(n+1)."""
    return 2 * (ring.nvars + 1)
