"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive (trial division, digit loops) and
shares no code with the package, so expected values come from a second
route.
"""


def trial_factorize(n: int) -> list[tuple[int, int]]:
    assert n >= 1
    out = []
    x = n
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if x > 1:
        out.append((x, 1))
    return out


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return trial_factorize(n) == [(n, 1)]


def oracle_v(n: int) -> int:
    return sum(p + (e if e > 1 else 0) for p, e in trial_factorize(n))


def oracle_reverse(n: int, base: int = 10) -> int:
    assert n >= 1
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    acc = 0
    for d in digits:
        acc = acc * base + d
    return acc


def oracle_sieve(limit: int) -> list[bool]:
    """is_prime flags for 0..limit."""
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    p = 2
    while p * p <= limit:
        if flags[p]:
            for m in range(p * p, limit + 1, p):
                flags[m] = False
        p += 1
    return flags


def oracle_is_v_palindrome(n: int, base: int = 10) -> bool:
    if n % base == 0:
        return False
    r = oracle_reverse(n, base)
    if r == n:
        return False
    return oracle_v(n) == oracle_v(r)
