"""The v-palindrome predicate, range enumeration, and the two classic
infinite families.

A v-palindrome in base b is an n >= 1 with b not dividing n, n different
from its b-reverse r, and v(n) = v(r).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import v, v_segment
from .digits import reverse
from .errors import DomainError

# Fixed shard width keeps enumeration output independent of worker count.
SHARD_SIZE = 1 << 16

_MODES = ("all", "canonical")


@dataclass(frozen=True)
class VPalindromeHit:
    """A confirmed v-palindrome with its reversal and the shared v value."""

    n: int
    reversal: int
    shared_v: int
    base: int = 10


def is_v_palindrome(n: int, base: int = 10, budget: int | None = None) -> bool:
    """Whether n is a v-palindrome in the given base.

    Multiples of the base and reversal fixed points return False rather
    than raising; only n < 1 is a domain error.
    """
    if n < 1:
        raise DomainError(f"the predicate is defined for n >= 1, got {n}")
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if n % base == 0:
        return False
    r = reverse(n, base)
    if r == n:
        return False
    return v(n, budget) == v(r, budget)


def as_hit(n: int, base: int = 10, budget: int | None = None):
    """VPalindromeHit for n when it is a v-palindrome, else None."""
    if n < 1:
        raise DomainError(f"the predicate is defined for n >= 1, got {n}")
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if n % base == 0:
        return None
    r = reverse(n, base)
    if r == n:
        return None
    shared = v(n, budget)
    if shared != v(r, budget):
        return None
    return VPalindromeHit(n, r, shared, base)


def _shard_hits(lo: int, hi: int, base: int, canonical: bool) -> list[tuple[int, int, int]]:
    """Hits in [lo, hi] as (n, reversal, shared_v) tuples, ascending.

    v of every n in the shard comes from one segmented sieve; reversals
    landing outside the shard are factored on demand.
    """
    table = v_segment(lo, hi)
    out = []
    for n in range(lo, hi + 1):
        if n % base == 0:
            continue
        r = reverse(n, base)
        if r == n or (canonical and r < n):
            continue
        vn = table[n - lo]
        vr = table[r - lo] if lo <= r <= hi else v(r)
        if vn == vr:
            out.append((n, r, vn))
    return out


def _shard_task(args):
    return _shard_hits(*args)


def enumerate_v_palindromes(lo: int, hi: int, base: int = 10, mode: str = "all",
                            workers: int = 1):
    """Yield every v-palindrome hit in [lo, hi] in ascending order of n.

    mode "all" reports every qualifying n (for base 10 this is OEIS
    A338039); mode "canonical" keeps only hits with n < reversal.  Shards
    are disjoint fixed-width segments, so the merged stream is identical
    for any worker count, and enumerating [a, c] equals concatenating
    enumerations of [a, b] and [b+1, c].
    """
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if mode not in _MODES:
        raise DomainError(f"mode must be one of {_MODES}, got {mode!r}")
    start = max(lo, 1)
    if hi < start:
        return
    canonical = mode == "canonical"
    shards = [(a, min(a + SHARD_SIZE - 1, hi), base, canonical)
              for a in range(start, hi + 1, SHARD_SIZE)]
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(shards))) as pool:
            for hits in pool.map(_shard_task, shards):
                for n, r, shared in hits:
                    yield VPalindromeHit(n, r, shared, base)
    else:
        for shard in shards:
            for n, r, shared in _shard_hits(*shard):
                yield VPalindromeHit(n, r, shared, base)


def family_nines(k: int) -> int:
    """k-th member of the family 18, 198, 1998, ...: the digit string
    1 9...9 8 with k-1 nines, i.e. 2*10**k - 2."""
    if k < 1:
        raise DomainError(f"family index must be >= 1, got {k}")
    return 2 * 10**k - 2


def family_repeat18(j: int) -> int:
    """j-th member of the family 18, 1818, 181818, ...: the block "18"
    repeated j times, i.e. 18*(100**j - 1)/99."""
    if j < 1:
        raise DomainError(f"family index must be >= 1, got {j}")
    return 18 * (100**j - 1) // 99
