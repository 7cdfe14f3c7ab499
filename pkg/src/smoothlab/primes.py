"""Shared incremental prime sieve.

The sieve grows geometrically and is cached at module level; requests are
served by slicing, so repeated calls with the same floor(y) are cheap and
concurrent initialization is idempotent.
"""

from __future__ import annotations

import bisect
import threading

_LOCK = threading.Lock()
_LIMIT = 0
_PRIMES: list[int] = []


def primes_upto(y: float) -> list[int]:
    """All primes p <= y in increasing order."""
    n = int(y)
    if n < 2:
        return []
    if n > _LIMIT:
        _grow(n)
    return _PRIMES[: bisect.bisect_right(_PRIMES, n)]


def _grow(n: int) -> None:
    global _LIMIT, _PRIMES
    with _LOCK:
        if n <= _LIMIT:
            return
        limit = max(n, 2 * _LIMIT, 1 << 10)
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        p = 2
        while p * p <= limit:
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
            p += 1
        _PRIMES = [i for i in range(limit + 1) if sieve[i]]
        _LIMIT = limit
