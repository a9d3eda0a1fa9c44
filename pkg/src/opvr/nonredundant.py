"""Non-redundant configuration sets, the auxiliary pole graph and 5-matchings."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .configs import ForbiddenConfig, is_separating_t
from .flow import FlowNetwork
from .graph import OnePlaneGraph

MAX_LOAD = 5


class MatchingError(RuntimeError):
    """Raised when no 5-matching exists; never expected on a valid 1-plane graph."""


@dataclass(frozen=True)
class Entry:
    """One element of F; a W copy carries the crossing it stands for."""

    config: ForbiddenConfig
    copy_of: str | None = None

    @property
    def kind(self) -> str:
        return self.config.kind

    @property
    def poles(self) -> tuple[str, ...]:
        return self.config.poles

    @property
    def name(self) -> str:
        n = self.config.name
        return n if self.copy_of is None else f"{n}@{self.copy_of}"


@dataclass
class NonRedundantSet:
    entries: list[Entry]
    poles: frozenset[str]
    beta: int
    tau: int
    omega: int
    dropped_t: list[ForbiddenConfig] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def distinct(self) -> list[ForbiddenConfig]:
        seen, out = set(), []
        for e in self.entries:
            if e.config.key not in seen:
                seen.add(e.config.key)
                out.append(e.config)
        return out

    def summary(self) -> dict:
        return {"F": len(self), "P": len(self.poles), "beta": self.beta,
                "tau": self.tau, "omega": self.omega}


def build_F(g: OnePlaneGraph, configs: Sequence[ForbiddenConfig]) -> NonRedundantSet:
    bs = [c for c in configs if c.kind == "B"]
    ts = [c for c in configs if c.kind == "T"]
    ws = [c for c in configs if c.kind == "W"]
    b_cross = {p for b in bs for p in b.crossings}
    entries = [Entry(b) for b in bs]
    kept_t = [t for t in ts if not b_cross & set(t.crossings)]
    entries += [Entry(t) for t in kept_t]
    omega = 0
    for w in ws:
        free = [p for p in sorted(w.crossings) if p not in b_cross]
        entries += [Entry(w, p) for p in free]
        omega += len(free)
    poles = frozenset(p for e in entries for p in e.poles)
    dropped = [t for t in ts if t not in kept_t]
    return NonRedundantSet(entries, poles, len(bs), len(kept_t), omega, dropped)


# ---------------------------------------------------------------------------
# Auxiliary graph
# ---------------------------------------------------------------------------


@dataclass
class AuxiliaryGraph:
    """Pole multigraph with one edge per (configuration, crossing) curve.

    An edge is identified by its crossing and pole pair, so curves shared by
    several configurations (a W and a dependent B, say) appear once.
    ``rotation`` lists edge ids ccw around each pole.
    """

    nodes: tuple[str, ...]
    edges: dict[int, tuple[str, str, str]]  # id -> (pole, pole, crossing)
    rotation: dict[str, list[int]]
    contributions: int
    faces: int = 0
    components: int = 0

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def shared(self) -> int:
        return self.contributions - self.m

    def multiplicity(self) -> Counter:
        return Counter(frozenset((a, b)) for a, b, _ in self.edges.values())

    @property
    def euler_ok(self) -> bool:
        return self.n - self.m + self.faces == 1 + self.components


def _curves(config: ForbiddenConfig) -> list[tuple[str, str, str]]:
    out = []
    walk = config.boundary
    for i, (a, b) in enumerate(walk):
        if b in config.crossings:
            c = walk[(i + 1) % len(walk)][1]
            out.append((a, c, b))
    return out


def build_aux_graph(g: OnePlaneGraph, F: NonRedundantSet) -> AuxiliaryGraph:
    ident: dict[tuple, int] = {}
    contributions = 0
    for cfg in F.distinct:
        for a, c, p in _curves(cfg):
            contributions += 1
            key = (p, frozenset((a, c)))
            if key not in ident:
                ident[key] = len(ident)
    edges = {}
    for (p, pair), i in ident.items():
        a, c = sorted(pair)
        edges[i] = (a, c, p)

    # rotation: order by the fragment dart toward the crossing, then by the
    # side of that fragment the curve turns to at the crossing
    ends: dict[str, list[tuple[tuple[int, int], int]]] = defaultdict(list)
    for i, (a, c, p) in edges.items():
        for x, y in ((a, c), (c, a)):
            rot_p = g.rotation[p]
            k = len(rot_p)
            ix, iy = rot_p.index(x), rot_p.index(y)
            side = -1 if (ix + 1) % k == iy else 1
            ends[x].append(((g.rotation[x].index(p), side), i))
    rotation = {v: [i for _, i in sorted(lst)] for v, lst in ends.items()}
    nodes = tuple(sorted(F.poles))
    aux = AuxiliaryGraph(nodes, edges, rotation, contributions)
    aux.faces, aux.components = _aux_faces(aux)
    return aux


def _aux_faces(aux: AuxiliaryGraph) -> tuple[int, int]:
    if not aux.edges:
        return 1, len(aux.nodes)
    pos = {v: {e: i for i, e in enumerate(r)} for v, r in aux.rotation.items()}

    def other(e, v):
        a, c, _ = aux.edges[e]
        return c if v == a else a

    # half-edge (v, e) leaves v along e; next = at w, the edge cw of e
    seen = set()
    faces = 0
    for v, r in aux.rotation.items():
        for e in r:
            if (v, e) in seen:
                continue
            faces += 1
            cur = (v, e)
            while cur not in seen:
                seen.add(cur)
                x, f = cur
                w = other(f, x)
                rw = aux.rotation[w]
                cur = (w, rw[(pos[w][f] - 1) % len(rw)])
    # components over nodes touched by edges plus isolated poles
    parent = {v: v for v in aux.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, c, _ in aux.edges.values():
        parent[find(a)] = find(c)
    comps = len({find(v) for v in aux.nodes})
    isolated = sum(1 for v in aux.nodes if v not in aux.rotation)
    # an isolated node contributes a component but no face walk; the formula
    # n - m + f = 1 + c counts the shared unbounded face once
    faces_total = faces - (comps - isolated) + 1
    return faces_total, comps


# ---------------------------------------------------------------------------
# Counting bound
# ---------------------------------------------------------------------------


@dataclass
class BoundReport:
    size: int
    poles: int
    beta: int
    tau: int
    omega: int
    bound: int | None
    applicable: bool
    holds: bool
    equality: bool
    characterization_ok: bool
    aux_ok: bool
    note: str = ""

    def to_json(self) -> dict:
        return dict(self.__dict__)


def check_lemma3(F: NonRedundantSet, aux: AuxiliaryGraph, has_separating_t: bool) -> BoundReport:
    n_p = len(F.poles)
    size = len(F)
    bound = 4 * n_p - (7 if F.omega > 0 else 8)
    note = ""
    applicable = not has_separating_t and n_p >= 3
    if has_separating_t:
        note = "separating T-configuration present; bound not asserted"
    elif size and n_p < 3:
        note = f"degenerate pole set |P|={n_p}; bound reported, not asserted"
    holds = size <= bound if applicable else True
    equality = size == bound
    char_ok = True
    if applicable and F.omega == 0:
        char_ok = equality == (F.beta == 3 * n_p - 6 and F.tau == n_p - 2)
    aux_ok = aux.euler_ok and all(v <= 2 for v in aux.multiplicity().values())
    if aux.n >= 3:
        aux_ok = aux_ok and aux.m <= 6 * aux.n - 12
    return BoundReport(size, n_p, F.beta, F.tau, F.omega, bound, applicable, holds, equality,
                       char_ok, aux_ok, note)


def has_separating_t(g: OnePlaneGraph, configs: Sequence[ForbiddenConfig]) -> bool:
    poles = {p for c in configs for p in c.poles}
    return any(is_separating_t(g, t, poles) for t in configs if t.kind == "T")


# ---------------------------------------------------------------------------
# 5-matching
# ---------------------------------------------------------------------------


@dataclass
class PoleAssignment:
    pairs: list[tuple[Entry, str]]

    @property
    def loads(self) -> Counter:
        return Counter(p for _, p in self.pairs)

    @property
    def max_load(self) -> int:
        return max(self.loads.values(), default=0)

    def pole_of(self, entry: Entry) -> str:
        for e, p in self.pairs:
            if e == entry:
                return p
        raise KeyError(entry.name)

    def to_json(self) -> dict:
        hist = Counter(self.loads.values())
        return {"assignment": [{"config": e.name, "pole": p} for e, p in self.pairs],
                "loads": dict(sorted(self.loads.items())),
                "load_histogram": {str(k): hist[k] for k in sorted(hist)}}


def compute_assignment(F: NonRedundantSet, max_load: int = MAX_LOAD) -> PoleAssignment:
    poles = sorted(F.poles)
    net = FlowNetwork(2)
    src, snk = 0, 1
    pole_node = {p: net.add_node() for p in poles}
    pole_arc = {}
    for p in poles:
        pole_arc[p] = net.add_arc(pole_node[p], snk, max_load)

    units: list[tuple[list[Entry], dict[str, int]]] = []
    w_groups: dict[tuple, list[Entry]] = defaultdict(list)
    for e in F.entries:
        if e.copy_of is not None:
            w_groups[e.config.key].append(e)
    for e in F.entries:
        if e.copy_of is not None and len(w_groups[e.config.key]) == 2:
            if e is not w_groups[e.config.key][0]:
                continue
            group = w_groups[e.config.key]
        else:
            group = [e]
        node = net.add_node()
        net.add_arc(src, node, len(group))
        arcs = {p: net.add_arc(node, pole_node[p], 1) for p in sorted(set(e.poles))}
        units.append((group, arcs))

    flow = net.max_flow(src, snk)
    if flow != len(F):
        raise MatchingError(f"no 5-matching: matched {flow} of {len(F)} entries")
    pairs = []
    for group, arcs in units:
        chosen = [p for p, a in arcs.items() if net.flow(a) > 0]
        for e, p in zip(group, chosen):
            pairs.append((e, p))
    return PoleAssignment(pairs)


def hall_check_bruteforce(F: NonRedundantSet | Sequence[Entry], max_load: int = MAX_LOAD,
                          limit: int = 20) -> bool:
    """Hall's condition for a ``max_load``-matching, by subset enumeration.

    Copies of a W are treated as independent entries; the distinct-pole
    requirement of the flow gadget is not part of this check.
    """
    entries = F.entries if isinstance(F, NonRedundantSet) else list(F)
    if len(entries) > limit:
        raise ValueError(f"brute-force Hall check limited to {limit} entries")
    poles = sorted({p for e in entries for p in e.poles})
    bit = {p: 1 << i for i, p in enumerate(poles)}
    masks = [sum(bit[p] for p in set(e.poles)) for e in entries]
    nb = np.zeros(1, dtype=np.int64)
    size = np.zeros(1, dtype=np.int64)
    for m in masks:
        nb = np.concatenate([nb, nb | m])
        size = np.concatenate([size, size + 1])
    nbs = np.zeros_like(nb)
    for i in range(len(poles)):
        nbs += (nb >> i) & 1
    return bool(np.all(size <= max_load * nbs))
