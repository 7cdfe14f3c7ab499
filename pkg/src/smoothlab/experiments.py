"""Equidistribution, coset and unsmoothing experiments over (x, y, q) grids.

Every run produces deterministic, sorted records; the CSV/JSON writers are
byte-stable so repeated runs of one config compare equal.
"""

from __future__ import annotations

import csv
import json
import math
from collections import Counter
from dataclasses import asdict, dataclass
from math import gcd
from pathlib import Path

from .dirichlet import character_group
from .errors import ExportError, InvalidSubgroupError
from .saddle import saddle_alpha
from .smooth_core import SmoothCountQuery, count_smooth, smooth_values

CSV_COLUMNS = ("x", "y", "q", "a", "count", "expected", "discrepancy", "u", "v", "w", "alpha")


@dataclass(frozen=True)
class ExperimentConfig:
    """Grids and constants for one experiment run."""

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    qs: tuple[int, ...]
    kernel_lo: float = 0.5
    kernel_hi: float = 2.0
    epsilons: tuple[float, ...] = (0.0, 0.05, 0.1, 0.2, 0.5, 1.0)
    order_threshold: int = 2
    range_a: float = 1.0
    range_d: float = 1.0
    output_path: str | None = None
    output_format: str = "csv"

    def __post_init__(self) -> None:
        if not self.xs or not self.ys or not self.qs:
            raise ValueError("xs, ys, qs must be nonempty")
        if min(self.qs) < 2:
            raise ValueError("every modulus must be >= 2")
        if max(self.ys) > min(self.xs):
            raise ValueError("every grid point must satisfy y <= x")
        if any(not 0 <= e <= 1 for e in self.epsilons):
            raise ValueError("epsilons must lie in [0, 1]")
        if self.output_format not in ("csv", "json"):
            raise ValueError("output_format must be 'csv' or 'json'")

    @classmethod
    def from_json(cls, path: str | Path) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        for key in ("xs", "ys", "qs", "epsilons"):
            if key in raw:
                raw[key] = tuple(raw[key])
        return cls(**raw)


@dataclass(frozen=True)
class ResultRecord:
    x: float
    y: float
    q: int
    a: int | str
    count: float
    expected: float
    discrepancy: float
    u: float
    v: float
    w: float
    alpha: float


@dataclass(frozen=True)
class UnsmoothingRecord:
    x: float
    y: float
    q: int
    epsilon: float
    ratio: float


def _grid_frame(x: float, y: float, q: int) -> tuple[float, float, float, float]:
    sp = saddle_alpha(x, y)
    v = math.log(x) / math.log(q)
    return sp.u, v, min(v, y), sp.alpha


def _class_counts(x: float, y: float, q: int) -> tuple[Counter, int]:
    values = smooth_values(x, y, q)
    counts = Counter(v % q for v in values)
    return counts, len(values)


def run_equidistribution(config: ExperimentConfig) -> list[ResultRecord]:
    """One record per (x, y, q, a) with a coprime to q.

    count is the exact class count, expected the equidistributed share, and
    discrepancy the relative deviation |count * phi(q) / total - 1|.
    """
    records = []
    for x in config.xs:
        for y in config.ys:
            for q in config.qs:
                counts, total = _class_counts(x, y, q)
                classes = [a for a in range(q) if gcd(a, q) == 1]
                phi = len(classes)
                u, v, w, alpha = _grid_frame(x, y, q)
                for a in classes:
                    c = counts.get(a, 0)
                    records.append(
                        ResultRecord(
                            x=x,
                            y=y,
                            q=q,
                            a=a,
                            count=c,
                            expected=total / phi,
                            discrepancy=abs(c * phi / total - 1.0) if total else 0.0,
                            u=u,
                            v=v,
                            w=w,
                            alpha=alpha,
                        )
                    )
    return records


def max_discrepancy(records: list[ResultRecord]) -> dict[tuple[float, float, int], float]:
    """Largest class discrepancy per grid point."""
    out: dict[tuple[float, float, int], float] = {}
    for rec in records:
        key = (rec.x, rec.y, rec.q)
        out[key] = max(out.get(key, 0.0), rec.discrepancy)
    return out


def power_subgroup(q: int, exponent: int) -> list[int]:
    """The subgroup of exponent-th powers in (Z/qZ)*, a surrogate coset structure."""
    units = [a for a in range(q) if gcd(a, q) == 1]
    return sorted({pow(a, exponent, q) for a in units})


def _validate_subgroup(q: int, subgroup: list[int]) -> list[int]:
    elems = sorted(set(h % q for h in subgroup))
    if not elems:
        raise InvalidSubgroupError("subgroup must be nonempty")
    for h in elems:
        if gcd(h, q) != 1:
            raise InvalidSubgroupError(f"element {h} shares a factor with {q}")
    elem_set = set(elems)
    if 1 not in elem_set:
        raise InvalidSubgroupError("subgroup must contain 1")
    for h1 in elems:
        for h2 in elems:
            if h1 * h2 % q not in elem_set:
                raise InvalidSubgroupError(f"not closed: {h1}*{h2} mod {q} escapes")
    return elems


def run_coset(
    config: ExperimentConfig, subgroup: list[int] | None = None
) -> list[ResultRecord]:
    """Pairwise class-count differences within cosets of H, normalized by the
    equidistributed share.

    H defaults to the subgroup of order_threshold-th powers.  count holds the
    signed difference and the a-field a "repH:a/b" pair label.
    """
    records = []
    for x in config.xs:
        for y in config.ys:
            for q in config.qs:
                h = _validate_subgroup(
                    q, subgroup if subgroup is not None else power_subgroup(q, config.order_threshold)
                )
                counts, total = _class_counts(x, y, q)
                classes = [a for a in range(q) if gcd(a, q) == 1]
                phi = len(classes)
                u, v, w, alpha = _grid_frame(x, y, q)
                seen: set[int] = set()
                for a in classes:
                    if a in seen:
                        continue
                    coset = sorted(a * hh % q for hh in h)
                    seen.update(coset)
                    rep = coset[0]
                    for i, a1 in enumerate(coset):
                        for a2 in coset[i + 1 :]:
                            diff = counts.get(a1, 0) - counts.get(a2, 0)
                            records.append(
                                ResultRecord(
                                    x=x,
                                    y=y,
                                    q=q,
                                    a=f"{rep}H:{a1}/{a2}",
                                    count=diff,
                                    expected=total / phi,
                                    discrepancy=abs(diff) * phi / total if total else 0.0,
                                    u=u,
                                    v=v,
                                    w=w,
                                    alpha=alpha,
                                )
                            )
    return records


def unsmoothing_ratio(x: float, y: float, q: int, epsilon: float) -> float:
    """Relative count lost when the threshold shrinks from x to (1 - eps) x.

    Exactly 0 at eps = 0 and exactly 1 at eps = 1 (nothing survives below 1).
    """
    if not 0 <= epsilon <= 1:
        raise ValueError("epsilon must lie in [0, 1]")
    total = count_smooth(SmoothCountQuery(x=x, y=y, q=q)).value
    if epsilon == 0.0:
        return 0.0
    shrunk = (
        0
        if epsilon == 1.0
        else count_smooth(SmoothCountQuery(x=(1 - epsilon) * x, y=y, q=q)).value
    )
    return (total - shrunk) / total


def run_unsmoothing(config: ExperimentConfig) -> list[UnsmoothingRecord]:
    """unsmoothing_ratio over the config grid and epsilon list."""
    records = []
    for x in config.xs:
        for y in config.ys:
            for q in config.qs:
                for eps in config.epsilons:
                    records.append(
                        UnsmoothingRecord(
                            x=x, y=y, q=q, epsilon=eps, ratio=unsmoothing_ratio(x, y, q, eps)
                        )
                    )
    return records


def unsmoothing_slopes(
    records: list[UnsmoothingRecord],
) -> dict[tuple[float, float, int], float]:
    """Least-squares slope through the origin of ratio against epsilon."""
    acc: dict[tuple[float, float, int], tuple[float, float]] = {}
    for rec in records:
        key = (rec.x, rec.y, rec.q)
        num, den = acc.get(key, (0.0, 0.0))
        acc[key] = (num + rec.ratio * rec.epsilon, den + rec.epsilon**2)
    return {key: (num / den if den else 0.0) for key, (num, den) in acc.items()}


# -- persistence -----------------------------------------------------------------


def _sort_key(rec: ResultRecord) -> tuple:
    if isinstance(rec.a, str):
        return (rec.x, rec.y, rec.q, 1, 0, rec.a)
    return (rec.x, rec.y, rec.q, 0, rec.a, "")


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float) and value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.12g}"


def export_results(records: list[ResultRecord], fmt: str, path: str | Path) -> None:
    """Write records sorted by (x, y, q, a); CSV carries exactly the fixed
    column set at 12 significant digits, JSON mirrors the field names."""
    if fmt not in ("csv", "json"):
        raise ValueError("format must be 'csv' or 'json'")
    ordered = sorted(records, key=_sort_key)
    try:
        if fmt == "csv":
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(CSV_COLUMNS)
                for rec in ordered:
                    row = asdict(rec)
                    writer.writerow([_format_cell(row[col]) for col in CSV_COLUMNS])
        else:
            payload = [
                {col: asdict(rec)[col] for col in CSV_COLUMNS} for rec in ordered
            ]
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2, sort_keys=True)
                fh.write("\n")
    except OSError as exc:
        raise ExportError(f"cannot write results to {path}: {exc}") from exc


def load_results(path: str | Path) -> list[ResultRecord]:
    """Parse back a CSV written by export_results."""
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            a: int | str = row["a"]
            if isinstance(a, str) and a.isdigit():
                a = int(a)
            records.append(
                ResultRecord(
                    x=float(row["x"]),
                    y=float(row["y"]),
                    q=int(row["q"]),
                    a=a,
                    count=float(row["count"]),
                    expected=float(row["expected"]),
                    discrepancy=float(row["discrepancy"]),
                    u=float(row["u"]),
                    v=float(row["v"]),
                    w=float(row["w"]),
                    alpha=float(row["alpha"]),
                )
            )
    return records


def export_unsmoothing(records: list[UnsmoothingRecord], path: str | Path) -> None:
    ordered = sorted(records, key=lambda r: (r.x, r.y, r.q, r.epsilon))
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(("x", "y", "q", "epsilon", "ratio"))
            for rec in ordered:
                writer.writerow(
                    [
                        _format_cell(rec.x),
                        _format_cell(rec.y),
                        _format_cell(rec.q),
                        _format_cell(rec.epsilon),
                        f"{rec.ratio:.12g}",
                    ]
                )
    except OSError as exc:
        raise ExportError(f"cannot write results to {path}: {exc}") from exc


def export_plot_data(records: list[ResultRecord], path: str | Path) -> None:
    """(v, max discrepancy) pairs per grid point, for external plotting."""
    by_point = max_discrepancy(records)
    frame = {(r.x, r.y, r.q): r.v for r in records}
    rows = sorted((frame[key], dmax) for key, dmax in by_point.items())
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(("v", "max_discrepancy"))
            for v, dmax in rows:
                writer.writerow([f"{v:.12g}", f"{dmax:.12g}"])
    except OSError as exc:
        raise ExportError(f"cannot write results to {path}: {exc}") from exc
