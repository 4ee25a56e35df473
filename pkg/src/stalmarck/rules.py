"""The seven simple rules and 0-saturation.

Rules are tried in a fixed order and only the first match fires:

    (1) (0, y, z)  ->  y = 1, z = 0
    (2) (x, y, 1)  ->  x = 1
    (3) (x, 0, z)  ->  x = 1
    (4) (x, 1, z)  ->  x = z
    (5) (x, y, 0)  ->  x = -y
    (6) (x, x, z)  ->  x = 1, z = 1
    (7) (x, y, y)  ->  x = 1
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from .equiv import EquivState
from .literal import FALSE, TRUE
from .normalize import Triplet


class Status(Enum):
    SATURATED = "saturated"
    CONTRADICTION = "contradiction"


class Timeout(Exception):
    pass


@dataclass
class SaturationResult:
    status: Status
    merges_performed: int
    passes: int
    # triplets that can still fire, in the order they were given
    active: List[Triplet] = field(default_factory=list, repr=False)

    @property
    def contradiction(self) -> bool:
        return self.status is Status.CONTRADICTION


def canonicalize(state: EquivState, t: Triplet) -> Triplet:
    f = state.find
    return Triplet(f(t.x), f(t.y), f(t.z), t.index)


def match_rule(x: int, y: int, z: int) -> Tuple[Tuple[int, int], ...]:
    """Conclusions of the first rule matching canonical triplet ``(x, y, z)``."""
    if x == FALSE:
        return ((y, TRUE), (z, FALSE))
    if z == TRUE:
        return ((x, TRUE),)
    if y == FALSE:
        return ((x, TRUE),)
    if y == TRUE:
        return ((x, z),)
    if z == FALSE:
        return ((x, y ^ 1),)
    if x == y:
        return ((x, TRUE), (z, TRUE))
    if y == z:
        return ((x, TRUE),)
    return ()


def _inert(x: int, y: int, z: int) -> bool:
    # Fully constant, or x = 1 with rule (2)/(3) as first match: every future
    # match is the no-op x = 1.
    return (x < 2 and y < 2 and z < 2) or (x == TRUE and (y == FALSE or z == TRUE))


def saturate(
    state: EquivState,
    triplets: Sequence[Triplet],
    deadline: Optional[float] = None,
) -> SaturationResult:
    """Apply the simple rules in full passes over ``triplets`` until a pass adds nothing.

    Merges take effect immediately. Inert triplets are dropped from later
    passes. Raises :class:`Timeout` at a pass boundary once ``deadline``
    (a ``time.monotonic()`` value) has passed.
    """
    if state.contradiction:
        return SaturationResult(Status.CONTRADICTION, 0, 0, list(triplets))
    root = state._root
    canon = state._canon
    merge = state.merge
    start = state.num_merges
    active = list(triplets)
    passes = 0
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise Timeout
        passes += 1
        before = state.num_merges
        kept = []
        for t in active:
            x = canon[root[t.x]]
            y = canon[root[t.y]]
            z = canon[root[t.z]]
            for a, b in match_rule(x, y, z):
                if not merge(a, b):
                    return SaturationResult(
                        Status.CONTRADICTION, state.num_merges - start, passes, active
                    )
            if not _inert(canon[root[t.x]], canon[root[t.y]], canon[root[t.z]]):
                kept.append(t)
        active = kept
        if state.num_merges == before:
            return SaturationResult(Status.SATURATED, state.num_merges - start, passes, active)
