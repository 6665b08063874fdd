"""Slow, independent references used by the test suite.

Nothing here is re-exported from the package root. The recursions walk
Young's lattice, and :func:`g_tableaux` builds every standard tableau
explicitly.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from chiralpart.partition import Partition

TABLEAU_CAP = 14


def removable(lam: Partition) -> list[Partition]:
    """Partitions obtained by deleting one corner cell of ``lam``."""
    out = []
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            mu = list(lam)
            mu[i] -= 1
            if mu[i] == 0:
                mu.pop()
            out.append(tuple(mu))
    return out


@lru_cache(maxsize=None)
def f_recursive(lam: Partition) -> int:
    if sum(lam) <= 1:
        return 1
    return sum(f_recursive(mu) for mu in removable(lam))


@lru_cache(maxsize=None)
def _g(lam: Partition) -> int:
    if lam == (2,):
        return 0
    if lam == (1, 1):
        return 1
    return sum(_g(mu) for mu in removable(lam))


def g_recursive(lam: Partition) -> int:
    lam = tuple(lam)
    if sum(lam) < 2:
        raise ValueError("g is defined for partitions of n >= 2")
    return _g(lam)


def standard_tableaux(lam: Partition):
    """Yield every standard Young tableau of shape ``lam`` as a list of rows."""
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def fill(k):
        if k > n:
            yield [list(r) for r in rows]
            return
        for i, target in enumerate(lam):
            length = len(rows[i])
            if length < target and (i == 0 or len(rows[i - 1]) > length):
                rows[i].append(k)
                yield from fill(k + 1)
                rows[i].pop()

    yield from fill(1)


def g_tableaux(lam: Partition, cap: int = TABLEAU_CAP) -> int:
    """Count standard tableaux of shape ``lam`` with 2 in the first column."""
    n = sum(lam)
    if n < 2:
        raise ValueError("g is defined for partitions of n >= 2")
    if n > cap:
        raise ValueError(f"tableau enumeration capped at n = {cap}, got {n}")
    return sum(1 for t in standard_tableaux(lam) if len(t) > 1 and t[1] and t[1][0] == 2)


def multinomial_exact(lam: Partition) -> int:
    total, result = 0, 1
    for part in lam:
        total += part
        result *= comb(total, part)
    return result
