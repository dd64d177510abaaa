"""Optional cap for the internal memo tables.

The memo tables are observationally pure; by default they grow without
bound (desk-scale workloads stay small).  The CLI's --cache-size flag sets
a limit; a table that outgrows it is simply cleared.
"""

from __future__ import annotations

from typing import Optional

LIMIT: Optional[int] = None


def set_limit(n: Optional[int]) -> None:
    global LIMIT
    LIMIT = n


def trim(table: dict) -> None:
    if LIMIT is not None and len(table) > LIMIT:
        table.clear()
