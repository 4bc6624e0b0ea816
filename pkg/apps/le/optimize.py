# apps/le/optimize.py
"""
Maximization of the measurement-based bound over sampled graphs.

``Strategy.ALC`` converts the state to a graph once per sampled control selection and creates
the (a, b) link along sampled paths by adaptive local complementation. ``Strategy.DIRECT_LINK``
resamples the control selection itself until the conversion already links a and b; on a color
code that selection makes a the control of the plaquette strip running to b. Every sample
is evaluated with Z measurements on the transformed graph; the winning setting is carried back
to the original state through the inverse of the accumulated local Clifford layer.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Collection

import numpy as np
import structlog
from joblib import Parallel, delayed

from apps.codes.assignment import code_conversion
from apps.codes.lattice import ColorCodeLattice
from apps.common.enums import ControlBasis, Pauli, Strategy
from apps.common.exceptions import DimensionMismatch, InvalidTableau, NoValidAssignment
from apps.graphs.alc import alc_create_link
from apps.graphs.paths import as_generator, random_simple_path, shortest_path
from apps.noise.channels import NoiseModel, transform_noise
from apps.stab.clifford import LocalCliffordLayer
from apps.stab.conversion import GraphConversionResult, stab_to_graph
from apps.stab.tableau import StabilizerTableau, check_valid

from .configs import LeConfigs
from .dense import check_pair
from .neighborhood import mlb_neighborhood
from .types import MlbResult

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class _Sample:
    index: int
    value: float
    n: int
    n_lc: int
    link_operations: int
    path: tuple[int, ...]
    controls: tuple[int, ...]
    unitary: LocalCliffordLayer
    seconds: float


def original_setting(unitary: LocalCliffordLayer, pair: tuple[int, int]) -> dict[int, Pauli]:
    """Z measurements on the transformed state, expressed on the original qubits."""
    inverse = unitary.inverse()
    return {
        q: inverse.map_pauli(q, Pauli.Z) for q in range(unitary.n_qubits) if q not in pair
    }


def _evaluate(
    conversion: GraphConversionResult,
    a: int,
    b: int,
    m: NoiseModel,
    index: int,
    path_seed: list[int] | None,
) -> _Sample:
    start = time.perf_counter()
    graph = conversion.graph
    unitary = conversion.unitary
    n_lc, link_operations, path = 0, 0, ()
    if not graph.has_edge(a, b):
        sampled = (
            shortest_path(graph, a, b)
            if path_seed is None
            else random_simple_path(graph, a, b, path_seed)
        )
        graph, record = alc_create_link(graph, a, b, sampled)
        unitary = unitary.then(record.unitary)
        n_lc, link_operations, path = record.n_lc, record.link_operations, record.path.nodes
    result = mlb_neighborhood(graph, a, b, transform_noise(m, unitary))
    return _Sample(
        index=index,
        value=result.value,
        n=result.n,
        n_lc=n_lc,
        link_operations=link_operations,
        path=path,
        controls=conversion.controls,
        unitary=unitary,
        seconds=time.perf_counter() - start,
    )


def _convert(
    t: StabilizerTableau,
    lattice: ColorCodeLattice | None,
    control_basis: ControlBasis,
    controls: Collection[int] | None,
    stream: list[int] | None,
    forced_pair: tuple[int, int] | None = None,
) -> GraphConversionResult:
    if lattice is not None:
        return code_conversion(lattice, seed=stream, forced_pair=forced_pair)
    return stab_to_graph(
        t,
        control_basis=control_basis,
        controls=controls,
        forced_pair=forced_pair,
        rng=as_generator(stream) if stream is not None else None,
    )


def _direct_link_sample(
    t: StabilizerTableau,
    lattice: ColorCodeLattice | None,
    control_basis: ControlBasis,
    a: int,
    b: int,
    m: NoiseModel,
    seed: int,
    index: int,
) -> _Sample | None:
    try:
        conversion = _convert(t, lattice, control_basis, None, [seed, index], forced_pair=(a, b))
    except NoValidAssignment:
        return None
    return _evaluate(conversion, a, b, m, index, None)


def mlb_optimize(
    t: StabilizerTableau,
    a: int,
    b: int,
    m: NoiseModel,
    strategy: Strategy = Strategy.ALC,
    n_samples: int = 1,
    seed: int = 0,
    *,
    n_graphs: int = 1,
    control_basis: ControlBasis = ControlBasis.X,
    controls: Collection[int] | None = None,
    lattice: ColorCodeLattice | None = None,
    n_jobs: int | None = None,
) -> MlbResult:
    """
    Best bound over ``n_samples`` samples (per graph for ALC). Sample 0 of each graph follows the
    breadth-first shortest path; later samples use random simple paths seeded by
    ``[seed, graph, sample]``. Graph 0 uses the deterministic control selection (or
    ``controls``); later graphs shuffle it. With ``lattice`` the conversion uses the geometric
    control assignment of that code. Ties keep the lowest sample index.
    """
    if not check_valid(t):
        raise InvalidTableau("tableau generators are dependent or do not commute")
    n = t.n_qubits
    check_pair(n, a, b)
    if m.n_qubits != n:
        raise DimensionMismatch(f"noise on {m.n_qubits} qubits, state on {n}")
    if n_samples < 1 or n_graphs < 1:
        raise ValueError("at least one graph and one sample are required")
    n_jobs = n_jobs or LeConfigs.get("THREADS")
    parallel = Parallel(n_jobs=n_jobs, prefer="threads")

    if strategy is Strategy.ALC:
        conversions = [
            _convert(t, lattice, control_basis, controls, None if g == 0 else [seed, g])
            for g in range(n_graphs)
        ]
        jobs = [
            (conversion, g * n_samples + i, None if i == 0 else [seed, g, i])
            for g, conversion in enumerate(conversions)
            for i in range(n_samples)
        ]
        samples = parallel(
            delayed(_evaluate)(conversion, a, b, m, index, path_seed)
            for conversion, index, path_seed in jobs
        )
    else:
        outcomes = parallel(
            delayed(_direct_link_sample)(t, lattice, control_basis, a, b, m, seed, i)
            for i in range(n_samples)
        )
        samples = [s for s in outcomes if s is not None]
        if not samples:
            logger.warning("direct link never realized", pair=(a, b), n_samples=n_samples)
            raise NoValidAssignment(f"no sampled control selection links {a} and {b}")

    best = samples[0]
    for sample in samples[1:]:
        if sample.value > best.value:
            best = sample
    result = MlbResult(
        value=best.value,
        setting=original_setting(best.unitary, (a, b)),
        n=best.n,
        pair=(a, b),
        n_lc=best.n_lc,
        link_operations=best.link_operations,
        path=best.path,
        controls=best.controls,
        seed=seed,
        sample=best.index,
        n_samples=len(samples),
        n_min=min(s.n for s in samples),
        n_lc_mean=float(np.mean([s.n_lc for s in samples])),
        link_operations_mean=float(np.mean([s.link_operations for s in samples])),
        seconds_mean=float(np.mean([s.seconds for s in samples])),
    )
    logger.debug(
        "bound optimized",
        pair=(a, b),
        strategy=strategy.value,
        value=result.value,
        n_min=result.n_min,
        n_lc_mean=result.n_lc_mean,
    )
    return result
