"""Exact counting of y-smooth integers.

Counts are produced by recursive product generation over the primes up to y
(never a sieve array), so memory is proportional to the output.  A separate
lattice path handles astronomically large x for small y, and an Ennola-type
closed form provides the matching first-order estimate.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass
from math import gcd

import numpy as np

from .dirichlet import DirichletCharacter
from .errors import (
    InvalidResidueError,
    ModulusMismatchError,
    ThresholdExceededError,
    TooManyPrimesError,
)
from .kernel import SmoothingKernel
from .primes import primes_upto

DEFAULT_CEILING = 1e8
CEILING_ENV = "SMOOTHLAB_CEILING"

# Width of the log-space guard band inside which huge-x comparisons fall back
# to exact integer arithmetic.
LOG_GUARD = 1e-9

MAX_LATTICE_PRIMES = 25


def enumeration_ceiling() -> float:
    """Exact-enumeration ceiling; overridable via the SMOOTHLAB_CEILING env var."""
    raw = os.environ.get(CEILING_ENV)
    return float(raw) if raw else DEFAULT_CEILING


@dataclass(frozen=True)
class SmoothCountQuery:
    """Parameters (x, y, q, a) of a smooth-counting request.

    Exactly one of x and bigx is set; bigx = (base, exponent) stands for
    x = base**exponent without ever materializing it.
    """

    x: float | None
    y: float
    q: int = 1
    a: int | None = None
    bigx: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if (self.x is None) == (self.bigx is None):
            raise ValueError("exactly one of x and bigx must be given")
        if self.y < 2:
            raise ValueError("smoothness bound y must be >= 2")
        if self.q < 1:
            raise ValueError("modulus q must be >= 1")
        if self.x is not None and self.x < 1:
            raise ValueError("threshold x must be >= 1")
        if self.bigx is not None:
            base, exponent = self.bigx
            if base < 2 or exponent < 1:
                raise ValueError("bigx needs base >= 2 and exponent >= 1")
        if self.a is not None:
            if not (0 <= self.a < self.q):
                raise ValueError("residue a must lie in [0, q)")
            if gcd(self.a, self.q) != 1:
                raise InvalidResidueError(f"gcd({self.a}, {self.q}) > 1")


@dataclass(frozen=True)
class SmoothCount:
    """A count (or weighted count) together with an exactness flag."""

    value: int | float | complex
    exact: bool


def is_smooth(n: int, y: float) -> bool:
    """True iff every prime factor of n is <= y (n = 1 vacuously smooth)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    m = n
    for p in primes_upto(y):
        if p * p > m:
            break
        while m % p == 0:
            m //= p
    return m <= y


def smooth_values(limit: float, y: float, q: int = 1) -> list[int]:
    """All y-smooth n <= limit built from primes not dividing q, including 1."""
    if limit < 1:
        return []
    vals = [1]
    for p in primes_upto(y):
        if q % p == 0:
            continue
        out = []
        for v in vals:
            w = v
            while w <= limit:
                out.append(w)
                w *= p
        vals = out
    return vals


def count_smooth(query: SmoothCountQuery, ceiling: float | None = None) -> SmoothCount:
    """Exact |{n <= x : n y-smooth, gcd(n, q) = 1}|, or the class n = a (mod q).

    Queries carrying bigx are routed to the huge-x lattice counter.
    """
    if query.bigx is not None:
        if query.a is not None:
            raise ValueError("residue classes require a plain-x query")
        return count_smooth_bigx(query.bigx, query.y, query.q)
    assert query.x is not None
    cap = enumeration_ceiling() if ceiling is None else ceiling
    if query.x > cap:
        raise ThresholdExceededError(
            f"x={query.x:g} exceeds the enumeration ceiling {cap:g}"
        )
    vals = smooth_values(query.x, query.y, query.q)
    if query.a is None:
        return SmoothCount(len(vals), exact=True)
    a, q = query.a, query.q
    return SmoothCount(sum(1 for v in vals if v % q == a), exact=True)


def count_smooth_weighted(
    query: SmoothCountQuery,
    kernel: SmoothingKernel,
    chi: DirichletCharacter | None = None,
    ceiling: float | None = None,
) -> SmoothCount:
    """Kernel-weighted smooth count.

    With a character: sum of chi(n) * phi(n/x) over all y-smooth n (the
    character kills residues sharing a factor with q).  Without: sum of
    phi(n/x) over the class n = a (mod q), or over all n coprime to q.
    """
    if query.bigx is not None:
        raise ValueError("weighted counts require a plain-x query")
    assert query.x is not None
    if chi is not None:
        if chi.modulus != query.q:
            raise ModulusMismatchError(
                f"character modulus {chi.modulus} != query modulus {query.q}"
            )
        if query.a is not None:
            raise ValueError("give either a character or a residue class, not both")
    cap = enumeration_ceiling() if ceiling is None else ceiling
    if query.x > cap:
        raise ThresholdExceededError(
            f"x={query.x:g} exceeds the enumeration ceiling {cap:g}"
        )
    x, q = query.x, query.q
    vals = np.array(smooth_values(kernel.hi * x, query.y, q), dtype=np.int64)
    if vals.size == 0:
        return SmoothCount(0j if chi is not None else 0.0, exact=True)
    weights = kernel.phi_many(vals / x)
    if chi is not None:
        table = chi.value_table()
        total = complex(np.sum(table[vals % q] * weights))
        return SmoothCount(total, exact=True)
    if query.a is not None:
        mask = (vals % q) == query.a
        return SmoothCount(float(np.sum(weights[mask])), exact=True)
    return SmoothCount(float(np.sum(weights)), exact=True)


def count_smooth_bigx(bigx: tuple[int, int], y: float, q: int = 1) -> SmoothCount:
    """Exact |{n <= base**exponent : n y-smooth, gcd(n, q) = 1}| for small y.

    Counts exponent vectors (e_p) with sum e_p log p <= exponent * log(base)
    by guarded floating comparison; ties inside the 1e-9 log-space guard band
    are settled by exact big-integer comparison.
    """
    base, exponent = bigx
    if base < 2 or exponent < 1:
        raise ValueError("bigx needs base >= 2 and exponent >= 1")
    plist = [p for p in primes_upto(y) if q % p != 0]
    if len(plist) > MAX_LATTICE_PRIMES:
        raise TooManyPrimesError(
            f"{len(plist)} primes <= {y} exceed the lattice bound {MAX_LATTICE_PRIMES}"
        )
    if not plist:
        return SmoothCount(1, exact=True)  # only n = 1

    budget = exponent * math.log(base)
    logs = [math.log(p) for p in plist]
    p0, log0 = plist[0], logs[0]
    # Recurse over the larger primes; the smallest prime is filled in closed
    # form, with boundary ties resolved exactly.
    rest = sorted(zip(plist[1:], logs[1:]), key=lambda t: -t[0])
    target: int | None = None  # base**exponent, built only if a tie occurs

    def exact_fits(stack: list[tuple[int, int]], e0: int) -> bool:
        nonlocal target
        if target is None:
            target = base**exponent
        n = p0**e0
        for p, e in stack:
            n *= p**e
        return n <= target

    count = 0
    stack: list[tuple[int, int]] = []

    def visit(i: int, spent: float) -> None:
        nonlocal count
        if i == len(rest):
            count += _closed_form_cap(spent)
            return
        p, lp = rest[i]
        e = 0
        while True:
            s2 = spent + e * lp
            if s2 > budget + LOG_GUARD:
                break
            stack.append((p, e))
            visit(i + 1, s2)
            stack.pop()
            e += 1

    def _closed_form_cap(spent: float) -> int:
        r = (budget - spent) / log0
        m = round(r)
        if abs(r - m) * log0 < LOG_GUARD:
            if m < 0:
                return 0
            return m + 1 if exact_fits(stack, m) else m
        e_max = math.floor(r)
        return e_max + 1 if e_max >= 0 else 0

    visit(0, 0.0)
    return SmoothCount(count, exact=True)


@dataclass(frozen=True)
class EnnolaEstimate:
    """First-order closed form for the huge-x regime, with its error factor."""

    main_term: float
    error_factor: float
    log_x: float
    prime_count: int


def ennola_estimate(bigx: tuple[int, int], y: float, q: int = 1) -> EnnolaEstimate:
    """Main term (1/m!) * prod(log x / log p) over primes p <= y, p not | q.

    The heuristic relative error factor y^2 / (log x log y) is returned
    alongside; a warning is issued outside the regime 2 <= y <= sqrt(log x).
    """
    base, exponent = bigx
    if base < 2 or exponent < 1:
        raise ValueError("bigx needs base >= 2 and exponent >= 1")
    log_x = exponent * math.log(base)
    if not (2 <= y <= math.sqrt(log_x)):
        warnings.warn(
            f"y={y:g} outside the recommended window [2, sqrt(log x)={math.sqrt(log_x):.3g}]",
            stacklevel=2,
        )
    plist = [p for p in primes_upto(y) if q % p != 0]
    main = 1.0 / math.factorial(len(plist))
    for p in plist:
        main *= log_x / math.log(p)
    error = y * y / (log_x * math.log(y))
    return EnnolaEstimate(main, error, log_x, len(plist))
