# apps/cli/services.py
"""
Services behind the management commands.

Provides:
- read_json / write_json: UTF-8 JSON files with IO failures mapped to InputError
- parse_pair / parse_path: 1-based CLI labels to 0-based indices
- sweep_pairs / run_sweep: (d, q) sweeps of the witness and measurement bounds
- write_sweep_csv / read_sweep_csv: the fixed-header sweep CSV
- fit_decay: least-squares fit of ln(value) = a' + b·d per (kind, bound, q) group

Notes:
- Sweep cells run through joblib; rows are sorted before writing, so the CSV bytes never depend
  on the thread count.
"""
from __future__ import annotations

import json
from pathlib import Path as FilePath
from typing import Any, Sequence

import numpy as np
import pandas as pd
import structlog
from joblib import Parallel, delayed
from sklearn.linear_model import LinearRegression

from apps.codes.lattice import ColorCodeLattice, lattice_distance, local_graph
from apps.codes.logical import logical_plus_tableau
from apps.codes.witness import WitnessConstruction, canonical_pair, witness_plaquette_paths
from apps.common.enums import Bound, GraphSource, NoiseKind, Strategy, WitnessLayout
from apps.common.exceptions import InputError, InsufficientData, NonpositiveValues
from apps.graphs.paths import Path
from apps.le.optimize import mlb_optimize
from apps.le.witness import wlb
from apps.noise.channels import standard_channel
from apps.stab.tableau import StabilizerTableau, graph_to_tableau

from .configs import SweepConfigs
from .types import DecayFit, SweepRow

logger = structlog.get_logger(__name__)


# --- files ---
def read_json(path: str) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise InputError(f"{path} does not hold a JSON object")
    return payload


def dump_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def write_json(payload: dict[str, Any], path: str) -> None:
    try:
        FilePath(path).write_text(dump_json(payload), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


# --- labels ---
def parse_pair(a: int, b: int, n: int) -> tuple[int, int]:
    """1-based CLI labels to a 0-based pair."""
    for label in (a, b):
        if not 1 <= label <= n:
            raise InputError(f"qubit label {label} outside 1..{n}")
    if a == b:
        raise InputError("pair endpoints coincide")
    return a - 1, b - 1


def parse_path(text: str) -> Path:
    try:
        labels = [int(token) for token in text.split(",") if token.strip()]
    except ValueError as exc:
        raise InputError(f"path {text!r} is not a comma-separated list of labels") from exc
    if any(label < 1 for label in labels):
        raise InputError("path labels are 1-based")
    return Path(tuple(label - 1 for label in labels))


# --- sweeps ---
def sweep_pairs(
    lattice: ColorCodeLattice,
    ds: Sequence[int],
    pairs: Sequence[tuple[int, int]],
    layout: WitnessLayout,
) -> list[tuple[int, tuple[int, int]]]:
    """
    (d, pair) jobs of a sweep: explicit pairs keep their lattice distance, otherwise the canonical
    bulk pair of every requested d is used.
    """
    if pairs:
        return [(lattice_distance(lattice, a, b), (a, b)) for a, b in pairs]
    if not ds:
        raise InputError("a sweep needs --d values or explicit --pair entries")
    return [(d, canonical_pair(lattice, d, layout)) for d in sorted(set(ds))]


def _mlb_source(
    lattice: ColorCodeLattice, source: GraphSource
) -> tuple[StabilizerTableau, ColorCodeLattice | None]:
    if source is GraphSource.LOCAL:
        return graph_to_tableau(local_graph(lattice)), None
    return logical_plus_tableau(lattice), lattice


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, float(value)))


def _wlb_cell(w: WitnessConstruction, n: int, d: int, kind: NoiseKind, q: float) -> SweepRow:
    value = wlb(w, standard_channel(kind, q, n))
    return SweepRow(
        d=d,
        q=q,
        kind=kind.value,
        bound=Bound.WLB.value,
        value=_clamp(value),
        n_x=w.n_x,
        n_z=w.n_z,
    )


def _mlb_cell(
    t: StabilizerTableau,
    lattice: ColorCodeLattice | None,
    pair: tuple[int, int],
    d: int,
    kind: NoiseKind,
    q: float,
    strategy: Strategy,
    n_samples: int,
    seed: int,
) -> SweepRow:
    result = mlb_optimize(
        t,
        pair[0],
        pair[1],
        standard_channel(kind, q, t.n_qubits),
        strategy=strategy,
        n_samples=n_samples,
        seed=seed,
        lattice=lattice,
        n_jobs=1,
    )
    return SweepRow(
        d=d,
        q=q,
        kind=kind.value,
        bound=Bound.MLB.value,
        value=_clamp(result.value),
        n_min=result.n_min,
        n_lc_mean=result.n_lc_mean,
        n_samples=result.n_samples,
        seed=seed,
    )


def run_sweep(
    lattice: ColorCodeLattice,
    bound: Bound,
    kinds: Sequence[NoiseKind],
    qs: Sequence[float],
    *,
    ds: Sequence[int] = (),
    pairs: Sequence[tuple[int, int]] = (),
    layout: WitnessLayout = WitnessLayout.STAIRCASE,
    strategy: Strategy = Strategy.ALC,
    n_samples: int = 1,
    seed: int | None = None,
    source: GraphSource = GraphSource.CODE,
    n_jobs: int | None = None,
) -> list[SweepRow]:
    """One row per (pair, kind, q), sorted by (d, q, kind, bound)."""
    if not kinds or not qs:
        raise InputError("a sweep needs at least one noise kind and one q value")
    if NoiseKind.CUSTOM in kinds:
        raise InputError("sweeps run over the standard channels only")
    if bound is Bound.MLB and seed is None:
        raise InputError("measurement-based sweeps need --seed")
    jobs = sweep_pairs(lattice, ds, pairs, layout)
    n = lattice.n_qubits
    n_jobs = n_jobs or SweepConfigs.get("THREADS")
    parallel = Parallel(n_jobs=n_jobs, prefer="threads")

    if bound is Bound.WLB:
        witnesses = [(d, witness_plaquette_paths(lattice, a, b, layout)) for d, (a, b) in jobs]
        rows = parallel(
            delayed(_wlb_cell)(w, n, d, kind, float(q))
            for d, w in witnesses
            for kind in kinds
            for q in qs
        )
    else:
        t, conversion_lattice = _mlb_source(lattice, source)
        mlb_seed = 0 if seed is None else seed
        rows = parallel(
            delayed(_mlb_cell)(
                t, conversion_lattice, pair, d, kind, float(q), strategy, n_samples, mlb_seed
            )
            for d, pair in jobs
            for kind in kinds
            for q in qs
        )
    logger.info("sweep finished", bound=bound.value, n_rows=len(rows), distance=lattice.distance)
    return sorted(rows, key=lambda row: row.sort_key)


def sweep_frame(rows: Sequence[SweepRow]) -> pd.DataFrame:
    columns = SweepConfigs.get("CSV_COLUMNS")
    return pd.DataFrame([row.to_dict() for row in rows], columns=columns)


def write_sweep_csv(rows: Sequence[SweepRow], path: str) -> None:
    digits = SweepConfigs.get("FLOAT_DIGITS")
    try:
        sweep_frame(rows).to_csv(path, index=False, float_format=f"%.{digits}g", na_rep="")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def read_sweep_csv(path: str) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise InputError(f"cannot read sweep CSV {path}: {exc}") from exc
    missing = {"d", "q", "kind", "bound", "value"} - set(frame.columns)
    if missing:
        raise InputError(f"sweep CSV {path} lacks columns {sorted(missing)}")
    return frame


# --- fits ---
def _fit_group(frame: pd.DataFrame) -> tuple[float, float, float, float]:
    d = frame["d"].to_numpy(dtype=np.float64)
    values = frame["value"].to_numpy(dtype=np.float64)
    if np.unique(d).size < 3:
        raise InsufficientData(f"{np.unique(d).size} distinct d values, at least 3 required")
    if (values <= 0).any():
        raise NonpositiveValues("ln(value) needs strictly positive bound values")
    y = np.log(values)
    model = LinearRegression().fit(d.reshape(-1, 1), y)
    a_prime, b = float(model.intercept_), float(model.coef_[0])
    residuals = y - model.predict(d.reshape(-1, 1))
    dof = d.size - 2
    variance = float(residuals @ residuals) / dof if dof > 0 else 0.0
    spread = float(((d - d.mean()) ** 2).sum())
    b_error = float(np.sqrt(variance / spread))
    a_error = float(np.sqrt(variance * (1.0 / d.size + d.mean() ** 2 / spread)))
    return a_prime, b, a_error, b_error


def fit_decay(frame: pd.DataFrame) -> list[DecayFit]:
    """Ordinary least squares of ln(value) on d, one fit per (kind, bound, q) group."""
    if frame.empty:
        raise InsufficientData("the sweep CSV holds no rows")
    fits = []
    for (kind, bound, q), group in frame.groupby(["kind", "bound", "q"], sort=True):
        a_prime, b, a_error, b_error = _fit_group(group)
        fits.append(
            DecayFit(
                kind=str(kind),
                bound=str(bound),
                q=float(q),
                a_prime=a_prime,
                b=b,
                a_prime_error=a_error,
                b_error=b_error,
                n_points=len(group),
            )
        )
        logger.debug("decay fitted", kind=kind, bound=bound, q=q, a_prime=a_prime, b=b)
    return fits
