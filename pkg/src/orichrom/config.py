"""Search caps.

Every exhaustive routine takes an optional :class:`Caps`; ``None`` means
``Caps.default()``. The orientation cap can be overridden process-wide
with the ``ORICHROM_CAP_EDGES`` environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import CapExceededError

ENV_CAP_EDGES = "ORICHROM_CAP_EDGES"


@dataclass(frozen=True)
class Caps:
    edges: int = 30  # orientation enumeration: at most 2**edges graphs
    order: int = 16  # vertex count for exact colouring solvers
    chromatic_order: int = 12
    target_order: int = 5  # tournament order searched by chi_o_plus
    epsilon_n: int = 4  # largest n accepted by universal_tournament_size
    word: int = 16  # largest m accepted by bipartite_target

    @classmethod
    def default(cls) -> "Caps":
        env = os.environ.get(ENV_CAP_EDGES)
        if env:
            return cls(edges=int(env))
        return cls()

    def with_(self, **changes) -> "Caps":
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {
            "edges": self.edges,
            "order": self.order,
            "chromatic_order": self.chromatic_order,
            "target_order": self.target_order,
            "epsilon_n": self.epsilon_n,
            "word": self.word,
        }


def resolve(caps: Caps | None) -> Caps:
    return Caps.default() if caps is None else caps


def check_cap(what: str, value: int, cap: int) -> None:
    if value > cap:
        raise CapExceededError(what, value, cap)
