"""Finite rooted balls of the regular tree.

The infinite tree has d+1 neighbors at every vertex.  We root it, so the
root has d+1 children while every deeper vertex has d children.  A ball of
radius R keeps the vertices up to depth R as interior sites and stores the
depth R+1 layer as an explicit boundary shell: shell vertices carry
boundary-condition spins only and never appear in enumerations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceededError, ConfigError

SUBTREE_ENUM_BUDGET = 10**7


@dataclass(frozen=True)
class TreeBall:
    """Breadth-first indexed ball of the (d+1)-regular tree.

    Vertices 0..n_interior-1 are interior (root is 0), the remaining
    indices up to n_total-1 form the boundary shell at depth R+1.
    Indexing is deterministic: children are created in order, level by
    level, so rebuilding with the same (d, R) gives identical maps.
    """

    degree: int
    radius: int
    n_interior: int
    n_total: int
    parent: np.ndarray        # parent[v], -1 for the root
    depth: np.ndarray
    child_start: np.ndarray   # children of v are child_start[v]:child_end[v]
    child_end: np.ndarray
    level_start: np.ndarray   # first index at each depth 0..R+1
    _neighbors: list[tuple[int, ...]] = field(repr=False, default=None)

    def children(self, v: int) -> range:
        return range(self.child_start[v], self.child_end[v])

    def interior_children(self, v: int) -> range:
        lo, hi = self.child_start[v], min(self.child_end[v], self.n_interior)
        return range(lo, max(lo, hi))

    def is_interior(self, v: int) -> bool:
        return 0 <= v < self.n_interior

    def neighbors(self, v: int) -> tuple[int, ...]:
        """All neighbors of an interior vertex (parent first), shell included."""
        return self._neighbors[v]

    def interior_vertices(self) -> range:
        return range(self.n_interior)

    def shell_vertices(self) -> range:
        return range(self.n_interior, self.n_total)

    def level(self, k: int) -> range:
        """Vertices at depth k, 0 <= k <= R+1."""
        if not 0 <= k <= self.radius + 1:
            raise ConfigError(f"depth {k} outside ball of radius {self.radius}")
        return range(self.level_start[k], self.level_start[k + 1])

    def edges(self) -> list[tuple[int, int]]:
        """All (parent, child) edges with at least one interior endpoint."""
        return [(int(self.parent[v]), v) for v in range(1, self.n_total)]

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] >= 0:
            out.append(int(self.parent[out[-1]]))
        return out


def build_ball(d: int, R: int) -> TreeBall:
    """Construct the ball of radius R of the (d+1)-regular tree."""
    if d < 2:
        raise ConfigError(f"tree degree must be >= 2, got {d}")
    if R < 0:
        raise ConfigError(f"ball radius must be >= 0, got {R}")

    level_sizes = [1] + [(d + 1) * d ** max(k - 1, 0) for k in range(1, R + 2)]
    level_start = np.cumsum([0] + level_sizes)
    n_total = int(level_start[-1])
    n_interior = int(level_start[R + 1])

    parent = np.full(n_total, -1, dtype=np.int64)
    depth = np.zeros(n_total, dtype=np.int64)
    child_start = np.zeros(n_total, dtype=np.int64)
    child_end = np.zeros(n_total, dtype=np.int64)

    nxt = 1
    for v in range(n_interior):
        k = d + 1 if v == 0 else d
        child_start[v] = nxt
        child_end[v] = nxt + k
        for w in range(nxt, nxt + k):
            parent[w] = v
            depth[w] = depth[v] + 1
        nxt += k
    for v in range(n_interior, n_total):
        child_start[v] = child_end[v] = 0

    neighbors = []
    for v in range(n_interior):
        nb = () if v == 0 else (int(parent[v]),)
        neighbors.append(nb + tuple(range(child_start[v], child_end[v])))

    return TreeBall(
        degree=d,
        radius=R,
        n_interior=n_interior,
        n_total=n_total,
        parent=parent,
        depth=depth,
        child_start=child_start,
        child_end=child_end,
        level_start=level_start,
        _neighbors=neighbors,
    )


def annulus(ball: TreeBall, r: int, Rr: int) -> list[int]:
    """Vertices at depths r+1..Rr (inclusive)."""
    if not 0 <= r < Rr <= ball.radius:
        raise ConfigError(f"need 0 <= r < Rr <= radius, got r={r}, Rr={Rr}")
    return list(range(ball.level_start[r + 1], ball.level_start[Rr + 1]))


def _connected_extensions(ball, current, candidates, forbidden, l, out, budget):
    """Include/exclude recursion over the candidate frontier.

    Each connected superset of `current` is reached along exactly one
    decision path because candidates are consumed in a fixed order, and a
    skipped candidate goes into `forbidden` for the whole branch.
    """
    if len(current) == l:
        out.append(frozenset(current))
        if len(out) > budget:
            raise BudgetExceededError(
                f"subtree enumeration exceeded budget of {budget} sets"
            )
        return
    if not candidates:
        return
    u = candidates[0]
    rest = candidates[1:]

    fresh = [
        w for w in ball.neighbors(u)
        if ball.is_interior(w)
        and w not in current and w not in forbidden
        and w != u and w not in rest and not any(w == c for c in candidates[:1])
    ]
    fresh = [w for w in fresh if w not in rest]
    current.add(u)
    _connected_extensions(ball, current, rest + fresh, forbidden, l, out, budget)
    current.remove(u)

    forbidden.add(u)
    _connected_extensions(ball, current, rest, forbidden, l, out, budget)
    forbidden.remove(u)


def enumerate_rooted_subtrees(ball: TreeBall, v: int, l: int,
                              forbidden=(), budget: int = SUBTREE_ENUM_BUDGET):
    """All connected interior vertex sets of size exactly l containing v.

    `forbidden` vertices may not be used; this is how contour enumeration
    assigns each support to a unique anchor.  Raises BudgetExceededError if
    more than `budget` sets would be produced.
    """
    if l < 1:
        raise ConfigError(f"subtree size must be >= 1, got {l}")
    if not ball.is_interior(v):
        raise ConfigError(f"vertex {v} is not interior")
    if v in forbidden:
        return []
    out = []
    forb = set(forbidden)
    cands = [w for w in ball.neighbors(v) if ball.is_interior(w) and w not in forb]
    _connected_extensions(ball, {v}, cands, forb, l, out, budget)
    return out


def count_rooted_subtrees(ball: TreeBall, v: int, l: int) -> int:
    return len(enumerate_rooted_subtrees(ball, v, l))


def subtree_entropy_bound(d: int, l: int) -> int:
    """Upper bound (d+1)^(2(l-1)) on the number of l-site connected sets
    through a fixed vertex; l-1 is the number of bonds of such a set."""
    return (d + 1) ** (2 * (l - 1))
