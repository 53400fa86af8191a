"""Small deterministic augmenting-path matcher shared by several modules."""

from __future__ import annotations

from typing import Sequence


def match_all(options: Sequence[Sequence[int]], forbidden: int = 0) -> list[int] | None:
    """Assign each left index a distinct right index from its option list.

    Returns the assignment, or ``None`` when no left-saturating matching
    exists.  Right indices whose bit is set in ``forbidden`` are never used.
    Options are tried in the given order, so the result is deterministic.
    """
    owner: dict[int, int] = {}

    def augment(a: int, seen: set[int]) -> bool:
        for b in options[a]:
            if forbidden >> b & 1 or b in seen:
                continue
            seen.add(b)
            if b not in owner or augment(owner[b], seen):
                owner[b] = a
                return True
        return False

    for a in range(len(options)):
        if not augment(a, set()):
            return None
    out = [-1] * len(options)
    for b, a in owner.items():
        out[a] = b
    return out
