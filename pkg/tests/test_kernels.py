from hypothesis import given, settings

from chiralpart import _purepy, kernels
from chiralpart.partition import partitions

from conftest import BACKENDS, partitions_st


def test_backend_is_reported():
    assert kernels.BACKEND in {"cython", "python"}


def brute_content_sum(lam):
    return sum(j - i for i, part in enumerate(lam, 1) for j in range(1, part + 1))


def brute_hook_v2_sum(lam):
    total = 0
    for i, part in enumerate(lam):
        for j in range(part):
            arm = part - j - 1
            leg = sum(1 for r in lam[i + 1:] if r > j)
            h = arm + leg + 1
            while h % 2 == 0:
                h //= 2
                total += 1
    return total


def test_content_sum_matches_cellwise(backend):
    for n in range(13):
        for lam in partitions(n):
            assert backend.content_sum(lam) == brute_content_sum(lam)


def test_hook_v2_sum_matches_cellwise(backend):
    for n in range(13):
        for lam in partitions(n):
            assert backend.hook_v2_sum(lam) == brute_hook_v2_sum(lam)


def test_core_quotient_examples(backend):
    assert backend.core_quotient((5, 4, 2, 2, 1, 1), 2) == ((1,), [(2, 2, 1, 1), (1,)])
    assert backend.core_quotient((), 3) == ((), [(), (), ()])
    assert backend.assemble((1,), [(2, 2, 1, 1), (1,)], 2) == (5, 4, 2, 2, 1, 1)


@settings(max_examples=300, deadline=None)
@given(partitions_st(max_n=60))
def test_backends_agree(lam):
    reference = BACKENDS[0]
    for other in BACKENDS[1:]:
        assert other.content_sum(lam) == reference.content_sum(lam)
        assert other.hook_v2_sum(lam) == reference.hook_v2_sum(lam)
        for p in (2, 3, 5, 7):
            core, quotient = reference.core_quotient(lam, p)
            assert other.core_quotient(lam, p) == (core, quotient)
            assert other.assemble(core, quotient, p) == _purepy.assemble(core, quotient, p) == lam
