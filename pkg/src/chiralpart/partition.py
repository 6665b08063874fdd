"""Partition arithmetic.

A partition is a plain tuple of positive ints in weakly decreasing order;
``()`` is the empty partition of 0. All functions are pure.

Cores and quotients go through the p-runner abacus in
:mod:`chiralpart.kernels`. The bead count is padded to a multiple of ``p``,
so quotient component ``k`` collects the p-hooks whose hand node has
content congruent to ``k`` mod ``p``. With this convention
``p_quotient((5, 4, 2, 2, 1, 1), 2) == ((2, 2, 1, 1), (1,))``.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from chiralpart import kernels

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple.

    Raises ValueError unless the parts are positive ints in weakly
    decreasing order.
    """
    lam = tuple(parts)
    for i, part in enumerate(lam):
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            raise ValueError(f"parts must be positive integers, got {part!r}")
        if i and part > lam[i - 1]:
            raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` in reverse lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        rem = 0
        while parts and parts[-1] == 1:
            parts.pop()
            rem += 1
        if not parts:
            return
        top = parts.pop() - 1
        parts.append(top)
        rem += 1
        while rem >= top:
            parts.append(top)
            rem -= top
        if rem:
            parts.append(rem)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def content_sum(lam: Partition) -> int:
    """Sum of ``j - i`` over the cells ``(i, j)`` of the diagram (1-indexed)."""
    return kernels.content_sum(lam)


def hook_lengths(lam: Partition) -> list[int]:
    cols = conjugate(lam)
    return [part - j + cols[j] - i - 1 for i, part in enumerate(lam) for j in range(part)]


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula).

    ``dimension(()) == 1``.
    """
    return math.factorial(sum(lam)) // math.prod(hook_lengths(lam))


def v2_dimension(lam: Partition) -> int:
    """2-adic valuation of :func:`dimension`, without forming the integer."""
    n = sum(lam)
    return n - nu(n) - kernels.hook_v2_sum(lam)


def _check_modulus(p: int) -> None:
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")


def p_core(lam: Partition, p: int) -> Partition:
    _check_modulus(p)
    return kernels.core_quotient(lam, p)[0]


def p_quotient(lam: Partition, p: int) -> tuple[Partition, ...]:
    _check_modulus(p)
    return tuple(kernels.core_quotient(lam, p)[1])


def core_and_quotient(lam: Partition, p: int) -> tuple[Partition, tuple[Partition, ...]]:
    _check_modulus(p)
    core, quotient = kernels.core_quotient(lam, p)
    return core, tuple(quotient)


def is_p_core(lam: Partition, p: int) -> bool:
    return p_core(lam, p) == tuple(lam)


def from_core_and_quotient(core: Partition, quotient: Sequence[Partition], p: int) -> Partition:
    """Rebuild the partition with the given p-core and p-quotient."""
    _check_modulus(p)
    if len(quotient) != p:
        raise ValueError(f"quotient must have {p} components, got {len(quotient)}")
    if not is_p_core(core, p):
        raise ValueError(f"{core} is not a {p}-core")
    return kernels.assemble(tuple(core), [tuple(q) for q in quotient], p)


class FrobeniusCoords(NamedTuple):
    arms: tuple[int, ...]
    legs: tuple[int, ...]


def frobenius(lam: Partition) -> FrobeniusCoords:
    if not lam:
        raise ValueError("the empty partition has no Frobenius coordinates")
    cols = conjugate(lam)
    d = sum(1 for i, part in enumerate(lam) if part > i)
    return FrobeniusCoords(
        tuple(lam[i] - i - 1 for i in range(d)),
        tuple(cols[i] - i - 1 for i in range(d)),
    )


def from_frobenius(coords: FrobeniusCoords | tuple[Sequence[int], Sequence[int]]) -> Partition:
    arms, legs = (tuple(c) for c in coords)
    d = len(arms)
    if len(legs) != d:
        raise ValueError("arms and legs must have the same length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
            raise ValueError("arms and legs must be strictly decreasing and non-negative")
    if d == 0:
        return ()
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = legs[0] + 1
    rows += [sum(1 for j in range(d) if legs[j] + j >= i) for i in range(d, depth)]
    return tuple(rows)


def nu(m: int) -> int:
    """Number of ones in the binary expansion of ``m``."""
    if m < 0:
        raise ValueError("nu is defined for non-negative integers")
    return bin(m).count("1")


def v2(m: int) -> int:
    """Largest ``v`` with ``2**v`` dividing ``m``."""
    if m == 0:
        raise ValueError("v2(0) is undefined")
    m = abs(m)
    return (m & -m).bit_length() - 1


@dataclass(frozen=True)
class BinaryDecomposition:
    """``n = epsilon + 2**k_1 + ... + 2**k_r`` with ``0 < k_1 < ... < k_r``."""

    epsilon: int
    exponents: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.epsilon + sum(1 << k for k in self.exponents)

    @property
    def k1(self) -> int:
        if not self.exponents:
            raise ValueError("n = 1 has no exponent k_1")
        return self.exponents[0]

    @property
    def high(self) -> tuple[int, ...]:
        return self.exponents[1:]

    @property
    def degenerate(self) -> bool:
        return not self.exponents


def binary_decomposition(n: int) -> BinaryDecomposition:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return BinaryDecomposition(n & 1, tuple(k for k in range(1, n.bit_length()) if n >> k & 1))


_pcache = [1]
_plock = threading.Lock()


def partition_count(n: int) -> int:
    """Exact p(n) from Euler's pentagonal-number recurrence (memoized)."""
    if n < 0:
        return 0
    with _plock:
        table = _pcache
        for m in range(len(table), n + 1):
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k & 1 else -1
                total += sign * table[m - g1]
                g2 = g1 + k
                if g2 <= m:
                    total += sign * table[m - g2]
                k += 1
            table.append(total)
        return table[n]


_LITERAL = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``[5,4,2,2,1,1]``; ``[]`` is the empty partition."""
    if not _LITERAL.match(text):
        raise ValueError(f"not a partition literal: {text!r}")
    body = text.strip()[1:-1].strip()
    return as_partition([int(x) for x in body.split(",")] if body else [])


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def format_frobenius(coords: FrobeniusCoords) -> str:
    arms, legs = coords
    return f"([{','.join(map(str, arms))}],[{','.join(map(str, legs))}])"


def parse_frobenius(text: str) -> FrobeniusCoords:
    match = re.fullmatch(r"\s*\(\s*(\[[^\]]*\])\s*,\s*(\[[^\]]*\])\s*\)\s*", text)
    if not match:
        raise ValueError(f"not a Frobenius literal: {text!r}")
    arms, legs = (
        tuple(int(x) for x in g.strip("[] ").split(",") if x.strip()) for g in match.groups()
    )
    return FrobeniusCoords(arms, legs)
