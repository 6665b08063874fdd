"""Chirality of the permutation modules C[X_lam].

``X_lam`` is the set of set-partitions of ``{1..n}`` with block sizes
``lam``. A partition is *neat* when the binary digits of its parts are
pairwise disjoint, i.e. the parts' bit sets partition the bit set of
``n``; this is exactly when the multinomial ``binom(n; lam)`` is odd.
"""

from __future__ import annotations

import threading
from math import comb
from typing import Sequence

from chiralpart.partition import Partition, nu, v2


def bin_set(m: int) -> frozenset[int]:
    """Positions of the set bits of ``m``."""
    if m < 0:
        raise ValueError("bin_set is defined for non-negative integers")
    return frozenset(i for i in range(m.bit_length()) if m >> i & 1)


def is_neat(parts: Sequence[int]) -> bool:
    seen = 0
    for part in parts:
        if seen & part:
            return False
        seen |= part
    return True


def multinomial_is_odd(parts: Sequence[int]) -> bool:
    return is_neat(parts)


def perm_is_chiral(lam: Partition) -> bool:
    """Whether C[X_lam] has sign determinant.

    True iff ``lam`` has two or three odd parts and lowering each odd part
    by one leaves a neat partition, or it has a single odd part ``a`` whose
    bits all occur in ``n - 2`` and whose even parts form a neat partition.
    Dropping the odd parts outright is not enough: ``(3, 3)`` has an empty
    even remainder but ``(2, 2)`` is not neat.
    """
    n = sum(lam)
    if n < 2:
        return False
    odd = [part for part in lam if part & 1]
    even = [part for part in lam if not part & 1]
    if len(odd) in (2, 3):
        return is_neat(even + [part - 1 for part in odd])
    if len(odd) == 1:
        a = odd[0]
        return a & (n - 2) == a and is_neat(even)
    return False


def perm_is_chiral_oracle(lam: Partition, exact: bool = False) -> bool:
    """Parity of the sum over pairs ``i < j`` of ``binom(n-2; lam - e_i - e_j)``.

    Counts the 2-element orbits of the transposition (1 2) on ``X_lam``.
    With ``exact=True`` every multinomial is evaluated as a big integer.
    """
    n = sum(lam)
    if n < 2:
        return False
    parity = 0
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            reduced = list(lam)
            reduced[i] -= 1
            reduced[j] -= 1
            if exact:
                parity ^= multinomial(reduced) & 1
            else:
                parity ^= is_neat(reduced)
    return bool(parity)


def multinomial(parts: Sequence[int]) -> int:
    total, result = 0, 1
    for part in parts:
        total += part
        result *= comb(total, part)
    return result


_bell = [1]
_bell_lock = threading.Lock()


def bell(k: int) -> int:
    """Bell number ``B_k`` via ``B_{m+1} = sum_i binom(m, i) B_i``."""
    if k < 0:
        raise ValueError("Bell numbers are defined for k >= 0")
    with _bell_lock:
        for m in range(len(_bell) - 1, k):
            _bell.append(sum(comb(m, i) * _bell[i] for i in range(m + 1)))
        return _bell[k]


def count_two_odd_parts(n: int) -> int:
    m = nu(n - 2)
    return (bell(m + 2) - bell(m + 1) + bell(m)) // 2


def count_three_odd_parts(n: int) -> int:
    m = nu(n - 3)
    # second coefficient is on B_{m+2}; B_{m+3} there disagrees with brute force
    total = bell(m + 3) - 3 * bell(m + 2) + 5 * bell(m + 1) + 2 * bell(m)
    q, r = divmod(total, 6)
    if r:
        raise ArithmeticError(f"three-odd-part count not integral at n={n}")
    return q


def count_one_odd_part(n: int) -> int:
    m, k = nu(n), v2(n - 1)
    return bell(m + k - 2) + bell(m) - 2 * bell(m - 1)


def count_perm_chiral(n: int) -> int:
    """Number of partitions ``lam`` of ``n >= 3`` with C[X_lam] chiral."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if n % 2 == 0:
        return count_two_odd_parts(n)
    return count_three_odd_parts(n) + count_one_odd_part(n)


def count_perm_odd_dimension(n: int) -> int:
    """Partitions of ``n`` whose permutation module has odd dimension."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return bell(nu(n))
