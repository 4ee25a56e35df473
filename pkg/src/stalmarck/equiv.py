"""Equivalence classes over literals with complement closure and rollback.

Every class has a mirror class holding the complements of its members, so
the two are always updated together. A literal's class is identified by a
root literal (``_root``); the visible representative of the class is kept
separately (``_canon``) and is always the member with the lowest variable
index, which makes the constants represent any class they belong to.

Merges relabel the smaller class, so ``find`` is two list lookups and every
merge is undone exactly by popping the trail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .literal import FALSE, TRUE


class StaleMark(RuntimeError):
    pass


@dataclass(frozen=True)
class RollbackMark:
    depth: int
    serial: int


class EquivState:
    def __init__(self, num_vars: int):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        self.num_vars = num_vars
        size = 2 * (num_vars + 1)
        self._root = list(range(size))
        self._canon = list(range(size))
        self._members: List[List[int]] = [[l] for l in range(size)]
        # (absorbed root, surviving root, previous canon of survivor, absorbed size)
        self._trail: List[Tuple[int, int, int, int]] = []
        self._marks: List[Tuple[int, bool, int]] = []
        self._serial = 0
        self.contradiction = False

    def find(self, l: int) -> int:
        return self._canon[self._root[l]]

    def equivalent(self, a: int, b: int) -> bool:
        return self._root[a] == self._root[b]

    def value(self, l: int) -> Optional[bool]:
        c = self._canon[self._root[l]]
        if c == TRUE:
            return True
        if c == FALSE:
            return False
        return None

    def class_of(self, l: int) -> List[int]:
        return sorted(self._members[self._root[l]])

    @property
    def num_merges(self) -> int:
        return len(self._trail)

    def merge(self, a: int, b: int) -> bool:
        """Make ``a`` and ``b`` equivalent. Returns False on contradiction.

        A contradicting merge is not applied; it only raises the flag, and
        the state refuses further merges until rolled back.
        """
        if self.contradiction:
            return False
        root = self._root
        ra, rb = root[a], root[b]
        if ra == rb:
            return True
        if ra == rb ^ 1:
            self.contradiction = True
            return False
        members = self._members
        if len(members[ra]) < len(members[rb]):
            small, big = ra, rb
        else:
            small, big = rb, ra
        moved = members[small]
        for m in moved:
            root[m] = big
            root[m ^ 1] = big ^ 1
        members[big].extend(moved)
        members[big ^ 1].extend(members[small ^ 1])
        canon = self._canon
        old = canon[big]
        incoming = canon[small]
        self._trail.append((small, big, old, len(moved)))
        if incoming >> 1 < old >> 1:
            canon[big] = incoming
            canon[big ^ 1] = incoming ^ 1
        return True

    def mark(self) -> RollbackMark:
        self._serial += 1
        self._marks.append((len(self._trail), self.contradiction, self._serial))
        return RollbackMark(len(self._marks) - 1, self._serial)

    def rollback(self, m: RollbackMark) -> None:
        """Restore the state captured by ``m``, discarding ``m`` and any later marks."""
        if m.depth >= len(self._marks) or self._marks[m.depth][2] != m.serial:
            raise StaleMark("rollback to a mark that is no longer live")
        trail_len, flag, _ = self._marks[m.depth]
        del self._marks[m.depth:]
        self._undo_to(trail_len)
        self.contradiction = flag

    def _undo_to(self, trail_len: int) -> None:
        root, canon, members, trail = self._root, self._canon, self._members, self._trail
        while len(trail) > trail_len:
            small, big, old, n = trail.pop()
            del members[big][-n:]
            del members[big ^ 1][-n:]
            for m in members[small]:
                root[m] = small
                root[m ^ 1] = small ^ 1
            canon[big] = old
            canon[big ^ 1] = old ^ 1
