"""Integer network flow: Dinic max flow and primal-dual min-cost flow.

Arcs are stored in paired arrays (arc ``i`` and its residual ``i ^ 1``).
Both solvers work on the same network object, so a max-flow feasibility
probe can be followed by a min-cost solve on a fresh copy.
"""

from __future__ import annotations

import heapq
from collections import deque

INF = float("inf")


class FlowNetwork:
    def __init__(self, n: int = 0) -> None:
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.orig: list[int] = []

    def add_node(self) -> int:
        self.adj.append([])
        self.n += 1
        return self.n - 1

    def add_nodes(self, k: int) -> range:
        start = self.n
        for _ in range(k):
            self.add_node()
        return range(start, self.n)

    def add_arc(self, u: int, v: int, cap: int, cost: int = 0) -> int:
        if cap < 0:
            raise ValueError("negative capacity")
        i = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.orig += [cap, 0]
        self.adj[u].append(i)
        self.adj[v].append(i + 1)
        return i

    def flow(self, arc: int) -> int:
        return self.orig[arc] - self.cap[arc]

    def tail(self, arc: int) -> int:
        return self.to[arc ^ 1]

    # -- max flow -------------------------------------------------------------

    def _levels(self, s: int, t: int, admissible) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if level[v] < 0 and self.cap[a] > 0 and admissible(a):
                    level[v] = level[u] + 1
                    dq.append(v)
        return level if level[t] >= 0 else None

    def _blocking(self, s: int, t: int, level: list[int], limit, admissible) -> int:
        """Iterative DFS blocking flow on the level graph."""
        it = [0] * self.n
        total = 0
        cap, to, adj = self.cap, self.to, self.adj
        while limit is None or total < limit:
            # find one augmenting path with current-arc pointers
            path: list[int] = []
            u = s
            while u != t:
                advanced = False
                arcs = adj[u]
                while it[u] < len(arcs):
                    a = arcs[it[u]]
                    v = to[a]
                    if cap[a] > 0 and level[v] == level[u] + 1 and admissible(a):
                        path.append(a)
                        u = v
                        advanced = True
                        break
                    it[u] += 1
                if not advanced:
                    if u == s:
                        return total
                    level[u] = -1  # dead end
                    a = path.pop()
                    u = to[a ^ 1]
                    it[u] += 1
            push = min(cap[a] for a in path)
            if limit is not None:
                push = min(push, limit - total)
            for a in path:
                cap[a] -= push
                cap[a ^ 1] += push
            total += push
        return total

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        total = 0
        always = lambda a: True  # noqa: E731
        while limit is None or total < limit:
            level = self._levels(s, t, always)
            if level is None:
                break
            pushed = self._blocking(s, t, level, None if limit is None else limit - total, always)
            if pushed == 0:
                break
            total += pushed
        return total

    # -- min-cost flow ----------------------------------------------------------

    def min_cost_flow(self, s: int, t: int, limit: int | None = None) -> tuple[int, int]:
        """Min-cost flow of value min(limit, max flow); costs must be non-negative.

        Primal-dual: Dijkstra with potentials, then a blocking flow on arcs
        of zero reduced cost.  Returns (flow, cost).
        """
        if any(c < 0 for i, c in enumerate(self.cost) if i % 2 == 0 and self.cap[i] > 0):
            raise ValueError("negative arc costs are not supported")
        pot = [0] * self.n
        total = cost = 0
        while limit is None or total < limit:
            dist = self._dijkstra(s, pot)
            if dist[t] == INF:
                break
            for v in range(self.n):
                if dist[v] < INF:
                    pot[v] += dist[v]
            reduced_zero = lambda a: self.cost[a] + pot[self.to[a ^ 1]] - pot[self.to[a]] == 0  # noqa: E731
            level = self._levels(s, t, reduced_zero)
            if level is None:  # cannot happen with exact potentials
                break
            pushed = self._blocking(s, t, level, None if limit is None else limit - total, reduced_zero)
            if pushed == 0:
                break
            total += pushed
            cost += pushed * (pot[t] - pot[s])
        return total, cost

    def _dijkstra(self, s: int, pot: list[int]) -> list[float]:
        dist = [INF] * self.n
        dist[s] = 0
        heap = [(0, s)]
        cap, to, cst, adj = self.cap, self.to, self.cost, self.adj
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            pu = pot[u]
            for a in adj[u]:
                if cap[a] <= 0:
                    continue
                v = to[a]
                nd = d + cst[a] + pu - pot[v]
                if nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        return dist

    def total_cost(self) -> int:
        return sum(self.flow(i) * self.cost[i] for i in range(0, len(self.to), 2))
