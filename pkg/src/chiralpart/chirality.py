"""Chiral partitions: those whose irreducible S_n-module has sign determinant.

``lam`` is chiral exactly when ``g_lam``, the number of standard tableaux
with 2 in the first column, is odd. Writing ``N = binom(n, 2)`` and ``C``
for the content sum, ``g_lam = f_lam * (N - C) / (2N)``, so the test only
needs 2-adic valuations.

Chiral partitions of ``n = eps + 2**k1 + ... + 2**kr`` have one of three
2-core tower shapes (:class:`ChiralConfig`). Every row ``k2..kr`` holds a
single ``(1)`` anywhere in the row, and so does row 0 when ``eps = 1``.
Beyond that, with ``v = v2(f_lam)``:

* ``v = 0``: one ``(1)`` in row ``k1`` on a path starting with bit ``eps``;
* ``0 < v < k1``: two ``(1)`` entries in row ``k1 - v``, one in each half,
  and one ``(1)`` in each row strictly between ``k1 - v`` and ``k1``;
* ``v = k1`` (only when ``eps = 1``): root ``(2, 1)`` and one ``(1)`` in each
  row ``1..k1-1``.

Counting, enumeration and uniform sampling all walk these shapes directly.
Enumeration order: ``v = 0`` first, then ``v = k1 - 1`` down to ``1``,
then ``v = k1``. Within a stratum the free path choices are read as a
mixed-radix number, first component most significant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional, Protocol

from chiralpart.partition import (
    BinaryDecomposition,
    Partition,
    binary_decomposition,
    content_sum,
    dimension,
    nu,
    partition_count,
    v2,
    v2_dimension,
)
from chiralpart.tower import CoreTower, partition_of, row_weights, tower_of


class RandomSource(Protocol):
    def randrange(self, stop: int) -> int: ...


def is_chiral(lam: Partition) -> bool:
    n = sum(lam)
    if n < 2:
        return False
    pairs = n * (n - 1) // 2
    gap = pairs - content_sum(lam)
    if gap == 0:
        return False
    return v2_dimension(lam) + v2(gap) - 1 - v2(pairs) == 0


def g_exact(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` with 2 in the first column."""
    n = sum(lam)
    if n < 2:
        raise ValueError("g is defined for partitions of n >= 2")
    pairs = n * (n - 1) // 2
    g, rem = divmod(dimension(lam) * (pairs - content_sum(lam)), 2 * pairs)
    if rem:
        raise ArithmeticError(f"inexact division computing g for {lam}")
    return g


@dataclass(frozen=True)
class ChiralConfig:
    """One tower shape of a chiral partition.

    ``case`` is 1, 2 or 3; ``valuation`` is ``v2(f_lam)``. ``root`` is the
    staircase index at the root (0, 1 or 2) and ``paths`` lists the paths
    holding a ``(1)`` entry below the root.
    """

    n: int
    case: int
    valuation: int
    root: int
    paths: tuple[str, ...] = field(default=())

    def tower(self) -> CoreTower:
        entries = {p: 1 for p in self.paths}
        if self.root:
            entries[""] = self.root
        return CoreTower(entries)

    def partition(self) -> Partition:
        return partition_of(self.tower())


def _valuation_range(dec: BinaryDecomposition) -> range:
    if dec.degenerate:
        return range(0)
    return range(dec.k1 + dec.epsilon)


def _weights_by_row(tower: CoreTower) -> dict[int, int]:
    return {i: w for i, w in enumerate(row_weights(tower)) if w}


def classify(lam: Partition) -> Optional[ChiralConfig]:
    """Match the tower of ``lam`` against the three chiral shapes.

    Returns the matching :class:`ChiralConfig`, or None when ``lam`` is not
    chiral.
    """
    n = sum(lam)
    if n < 2:
        return None
    dec = binary_decomposition(n)
    eps, k1 = dec.epsilon, dec.k1
    tower = tower_of(lam)
    weights = _weights_by_row(tower)
    base = {k: 1 for k in dec.high}
    if eps:
        base[0] = 1
    paths = tuple(p for p in tower.entries if p)
    root = tower.entries.get("", 0)

    if weights == {**base, k1: 1}:
        (path,) = tower.row(k1)
        if path[0] == str(eps):
            return ChiralConfig(n, 1, 0, root, paths)
        return None
    for v in range(1, k1):
        low = k1 - v
        if weights == {**base, low: 2, **{i: 1 for i in range(low + 1, k1)}}:
            first = sorted(p[0] for p in tower.row(low))
            if first == ["0", "1"]:
                return ChiralConfig(n, 2, v, root, paths)
            return None
    if eps and weights == {**base, 0: 3, **{i: 1 for i in range(1, k1)}}:
        return ChiralConfig(n, 3, k1, root, paths)
    return None


def is_chiral_by_tower(lam: Partition) -> bool:
    return classify(lam) is not None


def count_chiral_by_valuation(n: int, v: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    dec = binary_decomposition(n)
    if dec.degenerate or v < 0 or v > dec.k1:
        return 0
    k1 = dec.k1
    scale = 1 << sum(dec.high)
    if v == 0:
        return scale << (k1 - 1)
    if v < k1:
        return scale << ((v + 1) * (k1 - 2) - comb(v, 2))
    return (scale << comb(k1, 2)) if dec.epsilon else 0


def count_chiral(n: int) -> int:
    """Number of chiral partitions of ``n`` (closed form)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    dec = binary_decomposition(n)
    if dec.degenerate:
        return 0
    k1 = dec.k1
    inner = (1 << (k1 - 1)) + sum(1 << ((v + 1) * (k1 - 2) - comb(v, 2)) for v in range(1, k1))
    if dec.epsilon:
        inner += 1 << comb(k1, 2)
    return inner << sum(dec.high)


def _strata(dec: BinaryDecomposition) -> list[int]:
    """Valuations in enumeration order."""
    if dec.degenerate:
        return []
    k1 = dec.k1
    order = [0] + list(range(k1 - 1, 0, -1))
    if dec.epsilon:
        order.append(k1)
    return order


def _components(dec: BinaryDecomposition, v: int) -> list[tuple[int, str, int]]:
    """Free choices of stratum ``v`` as ``(row, forced_prefix, free_bits)``."""
    k1 = dec.k1
    if v == 0:
        comps = [(k1, str(dec.epsilon), k1 - 1)]
    elif v < k1:
        low = k1 - v
        comps = [(low, "0", low - 1), (low, "1", low - 1)]
        comps += [(i, "", i) for i in range(low + 1, k1)]
    else:
        comps = [(i, "", i) for i in range(1, k1)]
    return comps + [(k, "", k) for k in dec.high]


def _unrank(dec: BinaryDecomposition, v: int, rank: int) -> ChiralConfig:
    comps = _components(dec, v)
    digits = []
    for _, _, bits in reversed(comps):
        digits.append(rank & ((1 << bits) - 1))
        rank >>= bits
    digits.reverse()
    paths = tuple(
        prefix + (format(d, f"0{bits}b") if bits else "")
        for (_, prefix, bits), d in zip(comps, digits)
    )
    if v == 0:
        case = 1
    elif v < dec.k1:
        case = 2
    else:
        case = 3
    root = 2 if case == 3 else dec.epsilon
    return ChiralConfig(dec.n, case, v, root, paths)


def chiral_configs(n: int, v: Optional[int] = None) -> Iterator[ChiralConfig]:
    dec = binary_decomposition(n)
    for val in _strata(dec):
        if v is not None and val != v:
            continue
        for rank in range(count_chiral_by_valuation(n, val)):
            yield _unrank(dec, val, rank)


def enumerate_chiral(n: int, v: Optional[int] = None) -> Iterator[Partition]:
    """Yield each chiral partition of ``n`` once, optionally only those with
    ``v2(f_lam) == v``."""
    for config in chiral_configs(n, v):
        yield config.partition()


def sample_config(
    n: int,
    v: Optional[int] = None,
    seed: Optional[int] = None,
    rng: Optional[RandomSource] = None,
) -> ChiralConfig:
    if rng is None:
        rng = random.Random(seed)
    dec = binary_decomposition(n)
    strata = [val for val in _strata(dec) if v is None or val == v]
    sizes = [count_chiral_by_valuation(n, val) for val in strata]
    total = sum(sizes)
    if total == 0:
        what = f"valuation {v}" if v is not None else "any valuation"
        raise ValueError(f"no chiral partitions of {n} with {what}")
    rank = rng.randrange(total)
    for val, size in zip(strata, sizes):
        if rank < size:
            return _unrank(dec, val, rank)
        rank -= size
    raise AssertionError("unreachable")


def sample_chiral(
    n: int,
    v: Optional[int] = None,
    seed: Optional[int] = None,
    rng: Optional[RandomSource] = None,
) -> Partition:
    """Uniformly random chiral partition of ``n`` (restricted to ``v`` if given).

    Draws a rank below the exact stratum count and unranks it, so the
    distribution is exactly uniform. Pass either ``seed`` or an ``rng`` with
    a ``randrange`` method.
    """
    return sample_config(n, v, seed, rng).partition()


def count_self_conjugate_chiral(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 3:
        return 1
    k = (n - (n & 1)).bit_length() - 1
    if k >= 2 and n - (1 << k) in (0, 1):
        return 1 << (k - 2)
    return 0


def enumerate_self_conjugate_chiral(n: int) -> Iterator[Partition]:
    if count_self_conjugate_chiral(n) == 0:
        return
    if n == 3:
        yield (2, 1)
        return
    dec = binary_decomposition(n)
    low = dec.k1 - 1
    flip = str.maketrans("01", "10")
    for x in range(1 << (low - 1)):
        path = "0" + (format(x, f"0{low - 1}b") if low > 1 else "")
        config = ChiralConfig(n, 2, 1, dec.epsilon, (path, path.translate(flip)))
        yield config.partition()


def count_odd(n: int) -> int:
    """Number of partitions of ``n`` with odd dimension."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 1 << sum(binary_decomposition(n).exponents)


def is_chiral_hook(a: int, b: int) -> bool:
    """Whether the hook ``(a + 1, 1**b)`` is chiral.

    True iff ``b > 0`` and ``binom(a + b - 1, a)`` is odd; by Lucas that is
    ``a & (b - 1) == 0``.
    """
    return b > 0 and a & (b - 1) == 0


def hook(a: int, b: int) -> Partition:
    return (a + 1,) + (1,) * b


def chiral_hook_count(n: int) -> int:
    """Number of chiral hooks of size ``n``.

    Hooks of size ``n`` have ``a + b = n - 1``, so the chiral ones are the
    odd entries of row ``n - 2`` of Pascal's triangle: ``2**nu(n - 2)``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 0 if n == 1 else 1 << nu(n - 2)


@dataclass(frozen=True)
class RatioCheck:
    n: int
    lower_ok: bool
    upper_ok: bool
    equality: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.equality == (self.n % 4 == 0)


def ratio_inequality_holds(n: int) -> RatioCheck:
    """Compare ``a(n)`` with ``b(n + 2)``: expect ``2/5 <= a/b <= 1``."""
    a, b = count_odd(n), count_chiral(n + 2)
    return RatioCheck(n, 2 * b <= 5 * a, a <= b, a == b)


@dataclass
class CountReport:
    n: int
    b: int
    b_by_valuation: dict[int, int]
    a: int
    self_conjugate: int
    hooks: int
    p: Optional[int] = None

    def __post_init__(self):
        if sum(self.b_by_valuation.values()) != self.b:
            raise ValueError("valuation counts do not add up to b")

    @classmethod
    def for_n(cls, n: int, with_p: bool = False) -> "CountReport":
        dec = binary_decomposition(n)
        return cls(
            n=n,
            b=count_chiral(n),
            b_by_valuation={v: count_chiral_by_valuation(n, v) for v in _valuation_range(dec)},
            a=count_odd(n),
            self_conjugate=count_self_conjugate_chiral(n),
            hooks=chiral_hook_count(n),
            p=partition_count(n) if with_p else None,
        )
