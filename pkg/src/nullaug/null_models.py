"""0k, 1k and 2k null-model augmentation by randomized edge rewiring.

* 0k moves one random edge to a random absent node pair (keeps n and m).
* 1k swaps the endpoints of two disjoint edges (keeps every degree).
* 2k is a 1k swap restricted to equal-degree swapped endpoints (keeps the
  endpoint-degree pair of every edge, hence the joint degree counts).
"""

from __future__ import annotations

import logging

import numpy as np

from .config import AugmentationConfig, AugmentResult, Strategy
from .errors import AttemptsExhaustedError, AugmentationFailedError, NoCandidateError
from .graph import Graph, RewireOp, apply_rewire, canonical

log = logging.getLogger(__name__)


def _budget(g: Graph, max_attempts: int | None) -> int:
    return max(1, 100 * g.m) if max_attempts is None else max_attempts


def _draws(rng: np.random.Generator, high: tuple, budget: int):
    """Yield up to ``budget`` integer tuples, drawn from ``rng`` in growing blocks."""
    left, chunk = budget, 2
    while left > 0:
        size = min(chunk, left)
        yield from rng.integers(0, high, size=(size, len(high))).tolist()
        left -= size
        chunk = min(2 * chunk, 256)


def _sample_0k(g: Graph, rng: np.random.Generator, budget: int):
    n, m = g.n, g.m
    if m == 0:
        raise NoCandidateError("graph has no edge to delete")
    if m == n * (n - 1) // 2:
        raise NoCandidateError("complete graph has no absent node pair")
    edges = g.edge_list
    for attempt, (k, i, j) in enumerate(_draws(rng, (m, n, n - 1), budget), 1):
        if j >= i:
            j += 1
        new = canonical(i, j)
        if new in g.edges:
            continue
        return RewireOp.of([edges[k]], [new]), attempt
    raise AttemptsExhaustedError(f"no absent node pair found in {budget} attempts")


def _sample_swap(g: Graph, rng: np.random.Generator, budget: int, same_degree: bool):
    m = g.m
    if m < 2:
        raise NoCandidateError("degree-preserving swaps need at least two edges")
    edges = g.edge_list
    adj = g.adjacency
    for attempt, (i, j, flip_first, flip_second) in enumerate(_draws(rng, (m, m - 1, 2, 2), budget), 1):
        if j >= i:
            j += 1
        a, b = edges[i]
        c, d = edges[j]
        if flip_first:
            a, b = b, a
        if flip_second:
            c, d = d, c
        if a == c or a == d or b == c or b == d:
            continue
        if d in adj[a] or b in adj[c]:
            continue
        if same_degree and len(adj[b]) != len(adj[d]):
            continue
        return RewireOp.of([(a, b), (c, d)], [(a, d), (c, b)]), attempt
    raise AttemptsExhaustedError(f"no valid edge swap found in {budget} attempts")


def rewire_0k_step(g: Graph, rng: np.random.Generator, max_attempts: int | None = None) -> RewireOp:
    """Delete a uniformly random edge and add a uniformly random absent pair."""
    return _sample_0k(g, rng, _budget(g, max_attempts))[0]


def rewire_1k_step(g: Graph, rng: np.random.Generator, max_attempts: int | None = None) -> RewireOp:
    """Replace disjoint edges (a, b), (c, d) with (a, d), (c, b)."""
    return _sample_swap(g, rng, _budget(g, max_attempts), same_degree=False)[0]


def rewire_2k_step(g: Graph, rng: np.random.Generator, max_attempts: int | None = None) -> RewireOp:
    """As :func:`rewire_1k_step`, but only when ``deg(b) == deg(d)``."""
    return _sample_swap(g, rng, _budget(g, max_attempts), same_degree=True)[0]


_SAMPLERS = {
    Strategy.ZERO_K: lambda g, rng, budget: _sample_0k(g, rng, budget),
    Strategy.ONE_K: lambda g, rng, budget: _sample_swap(g, rng, budget, False),
    Strategy.TWO_K: lambda g, rng, budget: _sample_swap(g, rng, budget, True),
}


def run_null_model(g: Graph, cfg: AugmentationConfig, rng: np.random.Generator) -> AugmentResult:
    """Apply ``ceil(alpha * m)`` successful rewires of the configured order.

    Stops early (returning the partial result with ``warnings`` set to the
    shortfall) when a rewire cannot be found within the attempt budget.
    """
    if not cfg.strategy.is_null_model:
        raise ValueError(f"{cfg.strategy.value} is not a null-model strategy")
    sample = _SAMPLERS[cfg.strategy]
    target = cfg.swap_target(g.m)
    budget = cfg.attempt_budget(g.m)
    current = g
    swaps = attempts = 0
    failures = []
    while swaps < target:
        try:
            op, used = sample(current, rng, budget)
        except (NoCandidateError, AttemptsExhaustedError) as exc:
            attempts += budget if isinstance(exc, AttemptsExhaustedError) else 0
            failures.append(f"swap {swaps + 1}: {exc}")
            break
        attempts += used
        current = apply_rewire(current, op)
        swaps += 1
    if swaps == 0:
        reason = failures[0] if failures else "graph has no edges"
        raise AugmentationFailedError(f"{cfg.strategy.value}: no rewire possible ({reason})", failures)
    if swaps < target:
        log.warning("%s: only %d of %d rewires applied", cfg.strategy.value, swaps, target)
    return AugmentResult(
        graph=current,
        strategy=cfg.strategy,
        target=target,
        swaps=swaps,
        attempts=attempts,
        warnings=target - swaps,
    )
