"""2-core towers.

The tower of a partition is built by splitting it into its 2-core and
2-quotient, then recursing into each quotient component. A binary path
``x`` is a string over ``"01"``; ``""`` is the root, and child ``x + "0"``
comes from quotient component 0. Row ``i`` holds the paths of length ``i``,
read left to right in lexicographic order.

Every 2-core is a staircase ``(m, m-1, ..., 1)``, so a tower stores only
the staircase index ``m >= 1`` of each non-empty entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from chiralpart.partition import (
    Partition,
    core_and_quotient,
    from_core_and_quotient,
    nu,
)


def staircase(m: int) -> Partition:
    return tuple(range(m, 0, -1))


def staircase_index(lam: Partition) -> int:
    """Return ``m`` if ``lam`` is the staircase ``(m, ..., 1)``, else raise."""
    m = len(lam)
    if lam != staircase(m):
        raise ValueError(f"{lam} is not a 2-core")
    return m


@dataclass(frozen=True)
class CoreTower:
    entries: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for path, m in self.entries.items():
            if set(path) - {"0", "1"}:
                raise ValueError(f"bad binary path {path!r}")
            if m < 0:
                raise ValueError(f"staircase index must be non-negative, got {m}")
            if m:
                clean[path] = m
        object.__setattr__(self, "entries", dict(sorted(clean.items(), key=_path_key)))

    @classmethod
    def from_partitions(cls, entries: Mapping[str, Partition]) -> "CoreTower":
        return cls({path: staircase_index(tuple(lam)) for path, lam in entries.items()})

    def depth(self) -> int:
        """Number of rows up to and including the deepest non-empty one."""
        return max((len(p) + 1 for p in self.entries), default=0)

    def row(self, i: int) -> dict[str, int]:
        return {p: m for p, m in self.entries.items() if len(p) == i}

    def rows_below(self, i: int) -> "CoreTower":
        """Keep rows ``0..i-1`` only."""
        return CoreTower({p: m for p, m in self.entries.items() if len(p) < i})

    def rows_from(self, i: int) -> "CoreTower":
        """Empty rows ``0..i-1``, keep the rest."""
        return CoreTower({p: m for p, m in self.entries.items() if len(p) >= i})

    def mirrored(self) -> "CoreTower":
        """Tower of the conjugate partition: complement every path."""
        flip = str.maketrans("01", "10")
        return CoreTower({p.translate(flip): m for p, m in self.entries.items()})

    def size(self) -> int:
        return sum(w << i for i, w in enumerate(row_weights(self)))

    def __eq__(self, other):
        if not isinstance(other, CoreTower):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))


def _path_key(item):
    return len(item[0]), item[0]


def tower_of(lam: Partition) -> CoreTower:
    entries: dict[str, int] = {}
    stack = [("", tuple(lam))]
    while stack:
        path, mu = stack.pop()
        if not mu:
            continue
        core, (q0, q1) = core_and_quotient(mu, 2)
        if core:
            entries[path] = len(core)
        stack.append((path + "0", q0))
        stack.append((path + "1", q1))
    return CoreTower(entries)


def partition_of(tower: CoreTower) -> Partition:
    """Invert :func:`tower_of`."""
    prefixes = {p[:i] for p in tower.entries for i in range(len(p))}

    def build(path: str) -> Partition:
        core = staircase(tower.entries.get(path, 0))
        if path not in prefixes:
            return core
        return from_core_and_quotient(core, (build(path + "0"), build(path + "1")), 2)

    return build("")


def row_weights(tower: CoreTower) -> list[int]:
    """Total size of each row, through the deepest non-empty row."""
    weights = [0] * tower.depth()
    for path, m in tower.entries.items():
        weights[len(path)] += m * (m + 1) // 2
    return weights


def deviation(lam: Partition) -> int:
    """The 2-deviation: total tower weight minus the binary popcount of ``|lam|``.

    Equals the 2-adic valuation of the dimension of ``lam``.
    """
    return sum(row_weights(tower_of(lam))) - nu(sum(lam))


def truncated_core(lam: Partition, i: int) -> Partition:
    """``core(lam, 2**i)``, computed by dropping tower rows ``i`` and beyond."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return partition_of(tower_of(lam).rows_below(i))


def render(tower: CoreTower) -> Iterable[str]:
    """Text lines ``rowI: path:m ...``; the root path prints as ``-``."""
    for i in range(tower.depth()):
        cells = " ".join(f"{p or '-'}:{m}" for p, m in tower.row(i).items())
        yield f"row{i}: {cells}".rstrip()
