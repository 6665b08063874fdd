"""Pure-Python versions of the per-cell kernels.

Every function here has a twin with the same signature in the compiled
``_speedups`` extension; :mod:`chiralpart.kernels` picks one at import.
Parts are passed as any sequence of positive ints in weakly decreasing order.
"""


def content_sum(parts):
    total = 0
    for row, part in enumerate(parts):
        total += part * (part - 1) // 2 - row * part
    return total


def hook_v2_sum(parts):
    """Sum of the 2-adic valuations of all hook lengths."""
    if not parts:
        return 0
    cols = [0] * parts[0]
    for part in parts:
        for j in range(part):
            cols[j] += 1
    total = 0
    for i, part in enumerate(parts):
        for j in range(part):
            h = part - j + cols[j] - i - 1
            total += (h & -h).bit_length() - 1
    return total


def _beta_set(parts, p):
    length = len(parts) + (-len(parts)) % p
    beta = [(parts[i] if i < len(parts) else 0) - i + length - 1 for i in range(length)]
    return beta, length


def _parts_from_beta(beta):
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [b - (length - 1 - t) for t, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def core_quotient(parts, p):
    """Return ``(core, quotient)`` from the p-runner abacus.

    The bead count is padded to a multiple of ``p`` so that runner ``r``
    holds exactly the hooks whose hand node has content ``r`` mod ``p``.
    """
    beta, length = _beta_set(parts, p)
    runners = [[] for _ in range(p)]
    for b in beta:  # already strictly decreasing
        runners[b % p].append(b // p)
    quotient = []
    for levels in runners:
        c = len(levels)
        mu = [levels[t] - (c - 1 - t) for t in range(c)]
        while mu and mu[-1] == 0:
            mu.pop()
        quotient.append(tuple(mu))
    core_beta = [r + p * j for r in range(p) for j in range(len(runners[r]))]
    return _parts_from_beta(core_beta), quotient


def assemble(core, quotient, p):
    """Inverse of :func:`core_quotient`; ``core`` must already be a p-core."""
    beta, length = _beta_set(core, p)
    counts = [0] * p
    for b in beta:
        counts[b % p] += 1
    shift = max([0] + [len(q) - counts[r] for r, q in enumerate(quotient)])
    beads = []
    for r in range(p):
        c = counts[r] + shift
        mu = quotient[r]
        for t in range(c):
            level = (mu[t] if t < len(mu) else 0) + c - 1 - t
            beads.append(r + p * level)
    return _parts_from_beta(beads)
