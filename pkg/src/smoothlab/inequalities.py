"""Property-based numerical verification of proved inequalities.

Each check computes both sides of one inequality at full precision and emits
an InequalityReport; these are proved statements, so any violation beyond
the quadrature tolerance indicates a bug somewhere in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MajorantHypothesisError, NearPoleError
from .kernel import SmoothingKernel, _panel_nodes
from .primes import primes_upto

TOL_REL = 1e-6
TOL_ABS = 1e-9
POLE_GUARD = 1e-12

MAX_MAJORANT_TERMS = 30
MAX_EULER_Y = 60.0


@dataclass(frozen=True)
class InequalityReport:
    """One verified instance: lhs <= rhs up to the fixed tolerance policy."""

    lhs: float
    rhs: float
    slack: float
    holds: bool
    seed: int
    label: str = ""


def _report(lhs: float, rhs: float, seed: int, label: str) -> InequalityReport:
    lhs, rhs = float(lhs), float(rhs)
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        holds=bool(lhs <= rhs * (1 + TOL_REL) + TOL_ABS),
        seed=seed,
        label=label,
    )


# -- random Euler products -----------------------------------------------------

G_RULE_UNIT_PHASE = "unit_phase"
G_RULE_DISC = "disc"
G_RULE_ZERO = "zero"


@dataclass(frozen=True)
class RandomEulerSpec:
    """Seeded Euler product over primes <= y with coefficients |g(p)| <= 1."""

    y: float
    beta: float
    r: float
    seed: int
    rule: str = G_RULE_UNIT_PHASE

    def __post_init__(self) -> None:
        if self.y > MAX_EULER_Y:
            raise ValueError(f"need y <= {MAX_EULER_Y}")
        if not (0.75 <= self.beta <= 1.3):
            raise ValueError("need beta in [0.75, 1.3]")
        if not (0 < self.r <= 6):
            raise ValueError("need r in (0, 6]")
        if self.rule not in (G_RULE_UNIT_PHASE, G_RULE_DISC, G_RULE_ZERO):
            raise ValueError(f"unknown coefficient rule {self.rule!r}")

    def coefficients(self) -> tuple[np.ndarray, np.ndarray]:
        """(primes, g values) arrays; the modulus of every g(p) is <= 1."""
        ps = np.array(primes_upto(self.y), dtype=float)
        if self.rule == G_RULE_ZERO:
            return ps, np.zeros(ps.size, dtype=complex)
        rng = np.random.default_rng(self.seed)
        phases = np.exp(2j * np.pi * rng.uniform(0.0, 1.0, ps.size))
        if self.rule == G_RULE_DISC:
            phases = phases * rng.uniform(0.0, 1.0, ps.size)
        return ps, phases


def _euler_factors(
    ps: np.ndarray, gs: np.ndarray, beta: float, ts: np.ndarray
) -> np.ndarray:
    """Matrix of 1 - g(p) p^-(beta+it) over (node, prime)."""
    if ps.size == 0:
        return np.ones((ts.size, 0), dtype=complex)
    logp = np.log(ps)
    factors = 1.0 - gs[None, :] * np.exp(-np.outer(beta + 1j * ts, logp))
    if np.min(np.abs(factors)) < POLE_GUARD:
        raise NearPoleError("random Euler factor within the pole guard band")
    return factors


# -- test functions on the vertical segment -------------------------------------


@dataclass(frozen=True)
class MellinPowerF:
    """F(s) = scale * x^s * mellin(s), the integrand the contour method uses."""

    x: float
    kernel: SmoothingKernel
    scale: float = 1.0

    def values(self, beta: float, ts: np.ndarray) -> np.ndarray:
        s = beta + 1j * np.asarray(ts, dtype=float)
        return self.scale * np.exp(s * math.log(self.x)) * self.kernel.mellin_many(beta, ts)


@dataclass(frozen=True)
class PolyExpF:
    """F(s) = scale * (sum_j c_j s^j) * exp(-rate * s)."""

    coeffs: tuple[complex, ...]
    rate: float
    scale: float = 1.0

    def values(self, beta: float, ts: np.ndarray) -> np.ndarray:
        s = beta + 1j * np.asarray(ts, dtype=float)
        poly = np.zeros(s.shape, dtype=complex)
        for c in reversed(self.coeffs):
            poly = poly * s + c
        return self.scale * poly * np.exp(-self.rate * s)


@dataclass(frozen=True)
class ZeroF:
    """F identically zero (degenerate sanity case)."""

    scale: float = 1.0

    def values(self, beta: float, ts: np.ndarray) -> np.ndarray:
        return np.zeros(np.asarray(ts).shape, dtype=complex)


# -- segment quadrature ----------------------------------------------------------

_SEG_ORDER = 12
_SEG_TOL = 1e-8
_SEG_START = 64
_SEG_CAP = 8192


def _segment_quantities(
    spec: RandomEulerSpec, F, split_at: float | None
) -> tuple[float, float, float, float, float]:
    """Refining quadrature of all segment integrals entering the bounds.

    Returns (lhs, sup_term, gg_integral, g2_integral, g_at_beta) where the
    sup_term is M (split_at None) or M* (tail product over p > split_at
    folded into the supremum), and g2/g_at_beta use the head product.
    """
    ps, gs = spec.coefficients()
    if split_at is None:
        head = np.ones(ps.size, dtype=bool)
    else:
        head = ps <= split_at
    beta, r = spec.beta, spec.r

    prev: tuple[float, float, float, float] | None = None
    m = _SEG_START
    while True:
        nodes, weights = _panel_nodes(0.0, r, m, _SEG_ORDER)
        factors = _euler_factors(ps, gs, beta, nodes)
        g_full = np.prod(1.0 / factors, axis=1)
        g_head = np.prod(1.0 / factors[:, head], axis=1)
        logp = np.log(ps) if ps.size else np.zeros(0)
        ratio = (1.0 - factors) * logp[None, :] / factors  # g(p) p^-s log p / (1 - ...)
        logderiv = -np.sum(ratio, axis=1)
        fvals = F.values(beta, nodes)

        lhs = abs(np.sum(weights * g_full * fvals))
        gg = float(np.sum(weights * np.abs(logderiv) ** 2))
        g2 = float(np.sum(weights * np.abs(g_head) ** 2))

        # Suffix integrals of F at the panel boundaries give the supremum grid.
        per_panel = (weights * fvals).reshape(m, _SEG_ORDER).sum(axis=1)
        suffix = np.concatenate([np.cumsum(per_panel[::-1])[::-1], [0.0 + 0j]])
        if split_at is None:
            sup_term = float(np.max(np.abs(suffix)))
        else:
            bounds = np.linspace(0.0, r, m + 1)
            tail_factors = _euler_factors(ps, gs, beta, bounds)[:, ~head]
            tail_prod = np.prod(1.0 / np.abs(tail_factors), axis=1)
            sup_term = float(np.max(np.abs(suffix) * tail_prod))

        cur = (lhs, sup_term, gg, g2)
        if prev is not None:
            scale = max(1.0, *(abs(v) for v in cur))
            if max(abs(a - b) for a, b in zip(cur, prev)) <= _SEG_TOL * scale:
                break
        if m >= _SEG_CAP:
            break
        prev = cur
        m *= 2

    beta_factors = _euler_factors(ps, gs, beta, np.zeros(1))
    g_at_beta = float(abs(np.prod(1.0 / beta_factors[:, head])))
    return lhs, sup_term, gg, g2, g_at_beta


def check_lemma1(spec: RandomEulerSpec, F) -> InequalityReport:
    """|int G F| <= M (|G(beta)| + sqrt(int |G'/G|^2 int |G|^2)) on the segment,
    M the supremum of sub-segment integrals of F."""
    lhs, m_sup, gg, g2, g_beta = _segment_quantities(spec, F, split_at=None)
    rhs = m_sup * (g_beta + math.sqrt(gg * g2))
    return _report(lhs, rhs, spec.seed, "lemma1")


def check_lemma2(spec: RandomEulerSpec, F) -> InequalityReport:
    """Variant with the head product over p <= sqrt(y) and the tail product
    over sqrt(y) < p <= y folded into the supremum factor."""
    lhs, m_sup, gg, g2, g_beta = _segment_quantities(spec, F, split_at=math.sqrt(spec.y))
    rhs = m_sup * (g_beta + math.sqrt(gg * g2))
    return _report(lhs, rhs, spec.seed, "lemma2")


# -- majorant principle -----------------------------------------------------------


def mean_square_trig(lambdas: np.ndarray, coeffs: np.ndarray, T: float) -> float:
    """Closed-form int_{-T}^{T} |sum_n c_n e^(2 pi i lambda_n t)|^2 dt.

    The cross kernel is sin(2 pi T delta)/(pi delta), 2T on the diagonal, so
    the result is exact up to floating rounding (no quadrature).
    """
    delta = lambdas[:, None] - lambdas[None, :]
    kernel = 2.0 * T * np.sinc(2.0 * T * delta)
    return float(np.real(coeffs @ kernel @ np.conj(coeffs)))


def check_majorant(
    n: int,
    lambdas: np.ndarray,
    a: np.ndarray,
    big_a: np.ndarray,
    T: float,
    seed: int = 0,
) -> InequalityReport:
    """Mean square of a trigonometric sum against 3x that of its majorant."""
    lambdas = np.asarray(lambdas, dtype=float)
    a = np.asarray(a, dtype=complex)
    big_a = np.asarray(big_a, dtype=float)
    if not (1 <= n <= MAX_MAJORANT_TERMS):
        raise ValueError(f"need 1 <= n <= {MAX_MAJORANT_TERMS}")
    if not (lambdas.size == a.size == big_a.size == n):
        raise ValueError("lambdas, a, big_a must all have length n")
    if T <= 0:
        raise ValueError("need T > 0")
    if np.any(big_a < 0):
        raise MajorantHypothesisError("majorant coefficients must be nonnegative")
    if np.any(np.abs(a) > big_a * (1 + 1e-12)):
        raise MajorantHypothesisError("|a_n| <= A_n violated")
    lhs = mean_square_trig(lambdas, a, T)
    rhs = 3.0 * mean_square_trig(lambdas, big_a.astype(complex), T)
    return _report(lhs, rhs, seed, "majorant")


# -- pointwise factor chain --------------------------------------------------------


def pointwise_product_chain(
    p: int, chi_p: complex, t: float, alpha: float
) -> tuple[float, float, float]:
    """(|1 + (1-z)/(p^a - 1)|, 1 + (1-Re z)/(p^a - 1), exp((1-Re z)/p^a))
    with z = chi_p p^-it; the first dominates the second dominates the third."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    if alpha <= 0:
        raise ValueError("need alpha > 0 so p^alpha > 1")
    z = chi_p * complex(math.cos(t * math.log(p)), -math.sin(t * math.log(p)))
    pa = p**alpha
    product_side = abs(1 + (1 - z) / (pa - 1))
    series_side = 1 + (1 - z.real) / (pa - 1)
    exp_side = math.exp((1 - z.real) / pa)
    return product_side, series_side, exp_side


def check_pointwise_product(
    p: int, chi_p: complex, t: float, alpha: float, seed: int = 0
) -> InequalityReport:
    """Both links of the factor chain; the reported pair is the binding link."""
    if chi_p != 0 and abs(abs(chi_p) - 1.0) > 1e-9:
        raise ValueError("chi_p must be 0 or unit modulus")
    q1, q2, q3 = pointwise_product_chain(p, chi_p, t, alpha)
    first = _report(q2, q1, seed, "pointwise")
    second = _report(q3, q2, seed, "pointwise")
    binding = first if first.slack <= second.slack else second
    return InequalityReport(
        lhs=binding.lhs,
        rhs=binding.rhs,
        slack=binding.slack,
        holds=first.holds and second.holds,
        seed=seed,
        label="pointwise",
    )


# -- elementary calculus bound ------------------------------------------------------


def check_calculus(c: float, t: float, seed: int = 0) -> InequalityReport:
    """(1 + t)^c <= 1 + c t for t >= 0 and c in [0, 1]."""
    if not (0 <= c <= 1):
        raise ValueError("need c in [0, 1]")
    if t < 0:
        raise ValueError("need t >= 0")
    return _report((1.0 + t) ** c, 1.0 + c * t, seed, "calculus")


def calculus_grid(n_c: int = 100, n_t: int = 100, t_max: float = 20.0) -> list[InequalityReport]:
    """Dense (c, t) grid sweep of the calculus bound."""
    out = []
    for i, c in enumerate(np.linspace(0.0, 1.0, n_c)):
        for j, t in enumerate(np.linspace(0.0, t_max, n_t)):
            out.append(check_calculus(float(c), float(t), seed=i * n_t + j))
    return out


# -- seeded corpus driver -------------------------------------------------------------

SUITES = ("lemma1", "lemma2", "majorant", "pointwise", "calculus")


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    reports: list[InequalityReport]
    violations: int
    min_ratio: float | None  # smallest rhs/lhs seen (majorant headroom record)


def _draw_euler_instance(seed: int) -> tuple[RandomEulerSpec, object]:
    rng = np.random.default_rng(seed)
    y = float(rng.uniform(0.0, MAX_EULER_Y))
    spec = RandomEulerSpec(
        y=y,
        beta=float(rng.uniform(0.75, 1.3)),
        r=float(rng.uniform(0.2, 6.0)),
        seed=seed,
        rule=G_RULE_UNIT_PHASE if seed % 2 == 0 else G_RULE_DISC,
    )
    if rng.uniform() < 0.5:
        F = MellinPowerF(x=float(10 ** rng.uniform(1.0, 4.0)), kernel=SmoothingKernel())
    else:
        coeffs = tuple(rng.normal(size=3) + 1j * rng.normal(size=3))
        F = PolyExpF(coeffs=coeffs, rate=float(rng.uniform(0.0, 2.0)))
    return spec, F


def _run_one(suite: str, seed: int) -> InequalityReport:
    if suite in ("lemma1", "lemma2"):
        check = check_lemma1 if suite == "lemma1" else check_lemma2
        attempt = seed
        for _ in range(5):
            spec, F = _draw_euler_instance(attempt)
            try:
                return check(spec, F)
            except NearPoleError:
                attempt += 1_000_000  # resample
        raise NearPoleError(f"persistent near-pole draws starting at seed {seed}")
    rng = np.random.default_rng(seed)
    if suite == "majorant":
        n = int(rng.integers(1, MAX_MAJORANT_TERMS + 1))
        lambdas = rng.uniform(-5.0, 5.0, n)
        big_a = np.abs(rng.normal(size=n))
        shrink = np.where(rng.uniform(size=n) < 0.5, rng.uniform(0.0, 1.0, n), 1.0)
        a = big_a * shrink * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))
        return check_majorant(n, lambdas, a, big_a, float(rng.uniform(0.1, 10.0)), seed)
    if suite == "pointwise":
        ps = primes_upto(10_000)
        p = int(ps[rng.integers(0, len(ps))])
        chi_p = 0j if rng.uniform() < 0.05 else complex(np.exp(2j * np.pi * rng.uniform()))
        return check_pointwise_product(
            p, chi_p, float(rng.uniform(-50.0, 50.0)), float(rng.uniform(0.3, 1.5)), seed
        )
    if suite == "calculus":
        return check_calculus(float(rng.uniform(0.0, 1.0)), float(rng.uniform(0.0, 50.0)), seed)
    raise ValueError(f"unknown suite {suite!r}")


def run_suite(suite: str, count: int, seed_base: int = 0) -> SuiteResult:
    """Run `count` seeded instances of one suite; reports come in seed order."""
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    reports = [_run_one(suite, seed_base + i) for i in range(count)]
    violations = sum(1 for rep in reports if not rep.holds)
    ratios = [rep.rhs / rep.lhs for rep in reports if rep.lhs > 0]
    return SuiteResult(
        suite=suite,
        reports=reports,
        violations=violations,
        min_ratio=float(min(ratios)) if ratios else None,
    )
