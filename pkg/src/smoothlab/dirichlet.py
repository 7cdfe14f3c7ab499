"""Dirichlet character groups with exact root-of-unity arithmetic.

The unit group (Z/qZ)* is split by CRT into cyclic pieces (primitive roots
at odd prime powers, <-1, 5> at powers of two), and a character is the tuple
of its exponents against those generators.  A discrete-log table per
prime-power factor makes evaluation a dictionary lookup, and character
values are carried as exact fractions of a full turn, so products,
conjugates and long factor products do not drift.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm

import numpy as np

from .errors import ModulusTooLargeError

MAX_MODULUS = 10**6


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime p."""
    factors = [f for f, _ in _factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ArithmeticError(f"no primitive root found mod {p}")


@dataclass(frozen=True)
class _Component:
    """One prime-power factor of the modulus with its generators and dlogs."""

    modulus: int
    prime: int
    gens: tuple[int, ...]
    orders: tuple[int, ...]
    dlog: dict[int, tuple[int, ...]] = field(repr=False)


def _build_component(p: int, e: int) -> _Component | None:
    pk = p**e
    if p == 2:
        if e == 1:
            return None
        if e == 2:
            return _Component(4, 2, (3,), (2,), {1: (0,), 3: (1,)})
        table: dict[int, tuple[int, ...]] = {}
        v = 1
        for b in range(pk // 4):
            table[v] = (0, b)
            table[pk - v] = (1, b)
            v = v * 5 % pk
        return _Component(pk, 2, (pk - 1, 5), (2, pk // 4), table)
    g = _primitive_root(p)
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    order = pk - pk // p
    table = {}
    v = 1
    for j in range(order):
        table[v] = (j,)
        v = v * g % pk
    return _Component(pk, p, (g % pk,), (order,), table)


@dataclass(frozen=True)
class _UnitGroup:
    q: int
    components: tuple[_Component, ...]

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(d for comp in self.components for d in comp.orders)

    @cached_property
    def phi(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out

    @cached_property
    def lifted_generators(self) -> tuple[int, ...]:
        """Generators lifted to modulus q (1 in every other CRT coordinate)."""
        gens = []
        for comp in self.components:
            rest = self.q // comp.modulus
            for g in comp.gens:
                if rest == 1:
                    gens.append(g % self.q)
                else:
                    inv = pow(rest, -1, comp.modulus)
                    gens.append((1 + rest * ((g - 1) * inv % comp.modulus)) % self.q)
        return tuple(gens)

    def dlog_of(self, n: int) -> tuple[int, ...]:
        out: tuple[int, ...] = ()
        for comp in self.components:
            out += comp.dlog[n % comp.modulus]
        return out


@lru_cache(maxsize=128)
def _unit_group(q: int) -> _UnitGroup:
    comps = tuple(c for p, e in _factorize(q) if (c := _build_component(p, e)) is not None)
    return _UnitGroup(q, comps)


_QUARTER_VALUES = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod q, indexed by exponents against fixed generators."""

    modulus: int
    exponents: tuple[int, ...]
    group: _UnitGroup = field(repr=False, compare=False)

    @property
    def is_principal(self) -> bool:
        return all(m == 0 for m in self.exponents)

    @cached_property
    def order(self) -> int:
        out = 1
        for d, m in zip(self.group.orders, self.exponents):
            out = lcm(out, d // gcd(d, m))
        return out

    @cached_property
    def conductor(self) -> int:
        f = 1
        idx = 0
        for comp in self.group.components:
            k = len(comp.gens)
            f *= _local_conductor(comp, self.exponents[idx : idx + k])
            idx += k
        return f

    def angle(self, n: int) -> Fraction | None:
        """chi(n) as an exact fraction of a full turn, or None off the support."""
        r = n % self.modulus
        if gcd(r, self.modulus) != 1:
            return None
        if not self.exponents:
            return Fraction(0)
        logs = self.group.dlog_of(r)
        total = sum(
            (Fraction(m * l, d) for m, l, d in zip(self.exponents, logs, self.group.orders)),
            Fraction(0),
        )
        return total % 1

    def __call__(self, n: int) -> complex:
        a = self.angle(n)
        if a is None:
            return 0j
        exact = _QUARTER_VALUES.get(a)
        if exact is not None:
            return exact
        return cmath.exp(2j * cmath.pi * float(a))

    def conjugate(self) -> "DirichletCharacter":
        exps = tuple((-m) % d for m, d in zip(self.exponents, self.group.orders))
        return DirichletCharacter(self.modulus, exps, self.group)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.modulus != self.modulus:
            raise ValueError("can only multiply characters to the same modulus")
        exps = tuple(
            (m1 + m2) % d for m1, m2, d in zip(self.exponents, other.exponents, self.group.orders)
        )
        return DirichletCharacter(self.modulus, exps, self.group)

    @cached_property
    def _value_table(self) -> np.ndarray:
        q = self.modulus
        table = np.zeros(q, dtype=complex)
        if q == 1:
            table[0] = 1.0
            return table
        for r in range(q):
            if gcd(r, q) == 1:
                table[r] = self(r)
        return table

    def value_table(self) -> np.ndarray:
        """chi on all residues 0..q-1 as a complex array (zeros off support)."""
        return self._value_table

    def values_on_generators(self) -> list[tuple[int, Fraction]]:
        """(lifted generator, angle) pairs describing chi completely."""
        gens = self.group.lifted_generators
        return [(g, Fraction(m, d)) for g, m, d in zip(gens, self.exponents, self.group.orders)]


def _local_conductor(comp: _Component, exps: tuple[int, ...]) -> int:
    p = comp.prime
    if p == 2 and len(exps) == 2:
        m_neg, m_five = exps
        d5 = comp.orders[1]
        t5 = d5 // gcd(d5, m_five)
        if t5 > 1:
            return 4 * t5
        return 4 if m_neg else 1
    (m,) = exps
    d = comp.orders[0]
    t = d // gcd(d, m)
    if t == 1:
        return 1
    if p == 2:
        return 4
    e = 0
    while t % p == 0:
        t //= p
        e += 1
    return p ** (e + 1)


def character_group(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q, principal first, in generator-exponent order."""
    if q < 1:
        raise ValueError("modulus must be a positive integer")
    if q > MAX_MODULUS:
        raise ModulusTooLargeError(f"modulus {q} exceeds table bound {MAX_MODULUS}")
    group = _unit_group(q)
    return [
        DirichletCharacter(q, exps, group)
        for exps in itertools.product(*[range(d) for d in group.orders])
    ]


def principal_character(q: int) -> DirichletCharacter:
    if q < 1:
        raise ValueError("modulus must be a positive integer")
    if q > MAX_MODULUS:
        raise ModulusTooLargeError(f"modulus {q} exceeds table bound {MAX_MODULUS}")
    group = _unit_group(q)
    return DirichletCharacter(q, (0,) * len(group.orders), group)


def evaluate(chi: DirichletCharacter, n: int) -> complex:
    """chi(n) as a unit-modulus complex number, or exactly 0 off the support."""
    return chi(n)


def order_of(chi: DirichletCharacter) -> int:
    """Least k >= 1 with chi^k principal."""
    return chi.order


def conductor_of(chi: DirichletCharacter) -> int:
    """Smallest f dividing q such that chi is induced by a character mod f."""
    return chi.conductor
