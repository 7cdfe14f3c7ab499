"""Compactly supported C^9 cutoff weight and its Mellin transform.

The weight equals 1 on [0, lo], 0 on [hi, infinity), and crosses the
transition with the order-9 polynomial smoothstep (degree 19), so nine
derivatives vanish at both junction points and the Mellin transform decays
like |s|^-9 on vertical lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

_STEP_ORDER = 9

# S(u) = u^10 * sum_k c_k u^k with integer c_k; S has 9 vanishing derivatives
# at u=0 and u=1, S(0)=0, S(1)=1, and S(u) + S(1-u) = 1.
_STEP_COEFFS = [
    (-1) ** k * math.comb(_STEP_ORDER + k, k) * math.comb(2 * _STEP_ORDER + 1, _STEP_ORDER - k)
    for k in range(_STEP_ORDER + 1)
]
_STEP_DESC = np.array(_STEP_COEFFS[::-1], dtype=float)

_MELLIN_ABS_TOL = 1e-12


@lru_cache(maxsize=64)
def _gauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = leggauss(order)
    return nodes, weights


def _panel_nodes(a: float, b: float, n_panels: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights on [a, b]."""
    xi, wi = _gauss(order)
    edges = np.linspace(a, b, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    nodes = (mid[:, None] + half * xi[None, :]).ravel()
    weights = np.tile(half * wi, n_panels)
    return nodes, weights


def _smoothstep(u: np.ndarray) -> np.ndarray:
    """S(u) for u in [0, 1], evaluated on the mirrored half to limit cancellation."""
    w = np.clip(u, 0.0, 1.0)
    upper = w > 0.5
    z = np.where(upper, 1.0 - w, w)
    core = np.polyval(_STEP_DESC, z) * z**10
    return np.where(upper, 1.0 - core, core)


def _smoothstep_exact(u: Fraction) -> Fraction:
    if u <= 0:
        return Fraction(0)
    if u >= 1:
        return Fraction(1)
    acc = Fraction(0)
    for c in reversed(_STEP_COEFFS):
        acc = acc * u + c
    return acc * u**10


@dataclass(frozen=True)
class SmoothingKernel:
    """Weight that is 1 on [0, lo], 0 on [hi, inf), C^9 smoothstep between."""

    lo: float = 0.5
    hi: float = 2.0

    def __post_init__(self) -> None:
        if not (0 < self.lo < self.hi):
            raise ValueError(f"need 0 < lo < hi, got lo={self.lo}, hi={self.hi}")

    # -- direct evaluation -------------------------------------------------

    def phi(self, t: float) -> float:
        """Kernel value at t >= 0; exactly 1 below lo and 0 above hi."""
        if t < 0:
            raise ValueError("kernel argument must be nonnegative")
        if t <= self.lo:
            return 1.0
        if t >= self.hi:
            return 0.0
        u = (self.hi - t) / (self.hi - self.lo)
        return float(_smoothstep(np.asarray(u)))

    def phi_many(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        u = (self.hi - t) / (self.hi - self.lo)
        return _smoothstep(u)

    def phi_exact(self, t: Fraction) -> Fraction:
        """Exact rational kernel value, for finite-difference smoothness checks."""
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if t <= lo:
            return Fraction(1)
        if t >= hi:
            return Fraction(0)
        return _smoothstep_exact((hi - t) / (hi - lo))

    # -- Mellin transform --------------------------------------------------

    def mellin(self, s: complex) -> complex:
        """Mellin transform at s with Re(s) > 0, to absolute accuracy ~1e-12.

        The [0, lo] piece is the closed form lo^s / s; the transition piece is
        integrated by adaptive composite Gauss-Legendre quadrature.
        """
        s = complex(s)
        if s.real <= 0:
            raise ValueError("Mellin transform requires Re(s) > 0")
        head = self.lo**s / s
        n = self._base_panels(abs(s.imag))
        prev = self._transition_integral(s, n, order=16)
        for _ in range(12):
            n *= 2
            cur = self._transition_integral(s, n, order=16)
            if abs(cur - prev) < _MELLIN_ABS_TOL:
                return head + cur
            prev = cur
        return head + prev

    def mellin_many(self, c: float, ts: np.ndarray) -> np.ndarray:
        """Vectorized transform at s = c + i*t for an array of ordinates t.

        Panel count is tied to max |t| so the oscillation of t^(s-1) is
        resolved; order-24 panels then give near machine accuracy.
        """
        ts = np.asarray(ts, dtype=float)
        s = c + 1j * ts
        head = np.exp(s * math.log(self.lo)) / s
        tmax = float(np.max(np.abs(ts))) if ts.size else 0.0
        n = self._base_panels(tmax)
        nodes, weights = _panel_nodes(self.lo, self.hi, n, 24)
        coeff = weights * self.phi_many(nodes)
        log_nodes = np.log(nodes)
        out = np.empty(s.shape, dtype=complex)
        flat_s = s.ravel()
        flat_out = out.ravel()
        block = 2048
        for i in range(0, flat_s.size, block):
            sb = flat_s[i : i + block]
            flat_out[i : i + block] = np.exp(np.outer(sb - 1.0, log_nodes)) @ coeff
        return head + out

    def _base_panels(self, tmax: float) -> int:
        periods = tmax * math.log(self.hi / self.lo) / (2 * math.pi)
        return max(6, int(math.ceil(2.5 * periods)) + 2)

    def _transition_integral(self, s: complex, n_panels: int, order: int) -> complex:
        nodes, weights = _panel_nodes(self.lo, self.hi, n_panels, order)
        vals = self.phi_many(nodes) * np.exp((s - 1.0) * np.log(nodes))
        return complex(np.sum(weights * vals))

    # -- measured decay constant --------------------------------------------

    def decay_constant(self) -> float:
        """Measured sup of |mellin(s)| * |s| * (|s|+1)^8 over vertical strips.

        Used as the constant in contour tail bounds; cached per (lo, hi).
        """
        return _measured_decay_constant(self.lo, self.hi)


@lru_cache(maxsize=8)
def _measured_decay_constant(lo: float, hi: float) -> float:
    kernel = SmoothingKernel(lo, hi)
    best = 0.0
    for n_sigma, n_t in ((8, 160), (16, 320)):
        for sigma in np.linspace(0.1, 1.5, n_sigma):
            ts = np.geomspace(1.0, 400.0, n_t)
            vals = kernel.mellin_many(float(sigma), ts)
            mod_s = np.hypot(sigma, ts)
            prod = np.abs(vals) * mod_s * (mod_s + 1.0) ** 8
            best = max(best, float(prod.max()))
    return best


def phi_eval(kernel: SmoothingKernel, t: float) -> float:
    """Kernel value at t (module-level spelling of SmoothingKernel.phi)."""
    return kernel.phi(t)


def mellin(kernel: SmoothingKernel, s: complex) -> complex:
    """Mellin transform of the kernel at s with Re(s) > 0."""
    return kernel.mellin(s)
