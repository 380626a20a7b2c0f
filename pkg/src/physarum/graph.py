"""Weighted undirected graph model shared by the flow solver and strategies.

Vertices are dense integers 0..n-1 internally; arbitrary external labels from
input files are preserved in a label map for round-tripping. Edges carry a
fixed length plus the solver-owned conductivity and flux state. Networks are
treated as immutable: solver steps produce updated copies via ``with_state``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidEdge,
    UnbalancedFlow,
    UnknownTerminal,
)

#: Conductivity assigned to fresh edges unless the caller overrides it.
DEFAULT_INIT_CONDUCTIVITY = 0.5

#: Relative slack when checking that terminal inflow and outflow agree.
FLOW_BALANCE_RTOL = 1e-9


@dataclass(frozen=True)
class Edge:
    """One undirected edge; ``flux`` is signed, positive for flow u -> v."""

    u: int
    v: int
    length: float
    conductivity: float = 0.0
    flux: float = 0.0


@dataclass(frozen=True)
class TerminalConfig:
    """Per-iteration assignment of injection (sources) and absorption (sinks)."""

    sources: tuple[tuple[int, float], ...]
    sinks: tuple[tuple[int, float], ...]

    @property
    def total_inflow(self) -> float:
        return math.fsum(amount for _, amount in self.sources)

    @property
    def total_outflow(self) -> float:
        return math.fsum(amount for _, amount in self.sinks)

    def source_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.sources)

    def sink_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.sinks)


class Network:
    """Simple undirected graph with per-edge length, conductivity, and flux.

    Construction goes through :func:`build_network`; the raw constructor takes
    already-densified arrays and performs no validation beyond shape checks.
    """

    def __init__(
        self,
        n_vertices: int,
        edge_u: np.ndarray,
        edge_v: np.ndarray,
        length: np.ndarray,
        conductivity: np.ndarray,
        flux: np.ndarray,
        labels: tuple | None = None,
    ):
        self.n_vertices = int(n_vertices)
        self.edge_u = np.asarray(edge_u, dtype=np.int64)
        self.edge_v = np.asarray(edge_v, dtype=np.int64)
        self.length = np.asarray(length, dtype=np.float64)
        self.conductivity = np.asarray(conductivity, dtype=np.float64)
        self.flux = np.asarray(flux, dtype=np.float64)
        self.labels = labels
        m = len(self.edge_u)
        if not (len(self.edge_v) == len(self.length) == len(self.conductivity) == len(self.flux) == m):
            raise ValueError("edge arrays must have equal length")
        self._edge_index = {
            (min(u, v), max(u, v)): i
            for i, (u, v) in enumerate(zip(self.edge_u.tolist(), self.edge_v.tolist()))
        }
        self._adjacency: list[list[tuple[int, int]]] | None = None

    # -- basic queries ---------------------------------------------------

    @property
    def n_edges(self) -> int:
        return len(self.edge_u)

    @property
    def edges(self) -> list[Edge]:
        return [
            Edge(int(u), int(v), float(c), float(d), float(q))
            for u, v, c, d, q in zip(
                self.edge_u, self.edge_v, self.length, self.conductivity, self.flux
            )
        ]

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge between u and v, or KeyError."""
        return self._edge_index[(min(u, v), max(u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def flux_between(self, u: int, v: int) -> float:
        """Signed flux u -> v; antisymmetric by construction."""
        i = self.edge_index(u, v)
        q = float(self.flux[i])
        return q if self.edge_u[i] == u else -q

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (edge index, opposite vertex), built lazily."""
        if self._adjacency is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
            for i, (u, v) in enumerate(zip(self.edge_u.tolist(), self.edge_v.tolist())):
                adj[u].append((i, v))
                adj[v].append((i, u))
            self._adjacency = adj
        return self._adjacency

    def vertex_label(self, i: int):
        return self.labels[i] if self.labels is not None else i

    def edge_triples(self) -> list[tuple[object, object, float]]:
        """(label_u, label_v, length) triples in construction order."""
        return [
            (self.vertex_label(int(u)), self.vertex_label(int(v)), float(c))
            for u, v, c in zip(self.edge_u, self.edge_v, self.length)
        ]

    # -- derived copies ----------------------------------------------------

    def with_state(
        self,
        conductivity: np.ndarray | None = None,
        flux: np.ndarray | None = None,
    ) -> "Network":
        """Copy with replaced solver state; topology and lengths shared."""
        return Network(
            self.n_vertices,
            self.edge_u,
            self.edge_v,
            self.length,
            self.conductivity if conductivity is None else conductivity,
            self.flux if flux is None else flux,
            self.labels,
        )

    def with_edges(self, indices: Sequence[int]) -> "Network":
        """Copy restricted to the given edges; all vertices retained."""
        idx = np.asarray(sorted(indices), dtype=np.int64)
        return Network(
            self.n_vertices,
            self.edge_u[idx],
            self.edge_v[idx],
            self.length[idx],
            self.conductivity[idx],
            self.flux[idx],
            self.labels,
        )

    # -- traversal -----------------------------------------------------------

    def component_labels(self, active: np.ndarray | None = None) -> np.ndarray:
        """Connected-component label per vertex; ``active`` masks edges."""
        labels = np.full(self.n_vertices, -1, dtype=np.int64)
        adj = self.adjacency()
        current = 0
        for start in range(self.n_vertices):
            if labels[start] >= 0:
                continue
            stack = [start]
            labels[start] = current
            while stack:
                x = stack.pop()
                for edge_i, y in adj[x]:
                    if active is not None and not active[edge_i]:
                        continue
                    if labels[y] < 0:
                        labels[y] = current
                        stack.append(y)
            current += 1
        return labels


def build_network(
    edge_list: Iterable[tuple],
    init_conductivity: float = DEFAULT_INIT_CONDUCTIVITY,
) -> Network:
    """Build a validated Network from (u, v, length) triples.

    Vertex labels may be any hashable values; integer labels are densified in
    numeric order, anything else in order of first appearance. Fresh edges get
    ``init_conductivity`` and zero flux.
    """
    triples = list(edge_list)
    if not triples:
        raise InvalidEdge("network needs at least one edge")
    if init_conductivity <= 0:
        raise InvalidEdge(f"initial conductivity must be positive, got {init_conductivity}")

    raw_labels: list = []
    seen = set()
    for u, v, _ in triples:
        for x in (u, v):
            if x not in seen:
                seen.add(x)
                raw_labels.append(x)
    all_ints = all(isinstance(x, (int, np.integer)) for x in raw_labels)
    ordered = sorted(raw_labels) if all_ints else raw_labels
    index = {label: i for i, label in enumerate(ordered)}
    dense_identity = all_ints and all(index[x] == x for x in ordered)

    n = len(ordered)
    m = len(triples)
    edge_u = np.empty(m, dtype=np.int64)
    edge_v = np.empty(m, dtype=np.int64)
    length = np.empty(m, dtype=np.float64)
    used = set()
    for i, (u, v, c) in enumerate(triples):
        if u == v:
            raise InvalidEdge(f"self loop at vertex {u!r}")
        c = float(c)
        if not (c > 0) or not math.isfinite(c):
            raise InvalidEdge(f"edge ({u!r}, {v!r}) has non-positive length {c}")
        iu, iv = index[u], index[v]
        key = (min(iu, iv), max(iu, iv))
        if key in used:
            raise DuplicateEdge(u, v)
        used.add(key)
        edge_u[i], edge_v[i], length[i] = iu, iv, c

    return Network(
        n,
        edge_u,
        edge_v,
        length,
        np.full(m, float(init_conductivity)),
        np.zeros(m),
        labels=None if dense_identity else tuple(ordered),
    )


def validate(network: Network, terminals: TerminalConfig) -> None:
    """Check connectivity, terminal membership/disjointness, and flow balance.

    Raises Disconnected, UnknownTerminal, or UnbalancedFlow naming the
    offending element; returns None when everything holds.
    """
    labels = network.component_labels()
    if network.n_vertices and labels.max() > 0:
        offender = int(np.argmax(labels != labels[0]))
        raise Disconnected(network.vertex_label(offender))

    n = network.n_vertices
    for vertex, amount in list(terminals.sources) + list(terminals.sinks):
        if not (0 <= vertex < n):
            raise UnknownTerminal(vertex)
        if not (amount > 0):
            raise UnbalancedFlow(terminals.total_inflow, terminals.total_outflow)
    src = set(terminals.source_vertices())
    snk = set(terminals.sink_vertices())
    overlap = src & snk
    if overlap:
        raise UnknownTerminal(
            network.vertex_label(min(overlap)), reason="appears as both source and sink"
        )
    if not src or not snk:
        raise UnknownTerminal(None, reason="missing: need at least one source and one sink")

    inflow, outflow = terminals.total_inflow, terminals.total_outflow
    if abs(inflow - outflow) > FLOW_BALANCE_RTOL * max(1.0, abs(inflow)):
        raise UnbalancedFlow(inflow, outflow)
