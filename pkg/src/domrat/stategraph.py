"""State-graph engine for exact domination ratios of integer distance digraphs.

With a = largest forward step, b = largest backward step and c = a + b, the
integers split into consecutive length-c windows, and the intersection of a
dominating set with one window (a "state", stored as a c-bit mask, bit i for
element i+1 of [1, c]) interacts only with its two neighbours.  A pair
(T, T') of adjacent window contents is consistent exactly when every j in
[a+1, c+a] is in or dominated by T together with T' shifted right by c;
nothing outside those two windows can reach j.

Doubly infinite walks in the digraph of consistent pairs correspond to
dominating sets, the minimum density equals the minimum cycle mean of state
weights divided by c, and repeating the minimizing cycle yields a periodic
witness of period (cycle length) * c <= c * 2^c.

The consistency test factors through two per-state masks over the window:

    uncovered(T) = window positions not dominated by T alone
    covers(T')   = window positions dominated by T' shifted right by c

    (T, T') consistent  <=>  uncovered(T) is a subset of covers(T')

so the whole edge relation is two arrays of 2^c masks, never a 2^c x 2^c
table.  The minimum cycle mean is found by testing candidate means mu = p/q
exactly: subtracting p from q-scaled weights makes cycles below mu negative,
and a vectorized Bellman-Ford pass either certifies none exist or yields a
strictly better cycle from its predecessor pointers.  All arithmetic is
integer/Fraction; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import GeneratorSet, PeriodicSet, coverage_counts, verify_dominating
from .errors import CapExceededError, InputError

DEFAULT_C_MAX = 16


def state_elements(t: int) -> tuple[int, ...]:
    """Members of [1, c] present in a state bitmask."""
    out = []
    i = 1
    while t:
        if t & 1:
            out.append(i)
        t >>= 1
        i += 1
    return tuple(out)


def state_of(elements) -> int:
    """Bitmask for a collection of elements of [1, c]."""
    m = 0
    for e in elements:
        if e < 1:
            raise InputError(f"state element {e} out of range")
        m |= 1 << (e - 1)
    return m


def is_transition(t: int, t_prime: int, s: GeneratorSet) -> bool:
    """Direct window check for consistency of adjacent window contents.

    Positions of t live on [1, c], positions of t_prime on [c+1, 2c]; every
    j in [a+1, c+a] must be a member or have a member at j - step.
    """
    a, c = s.a, s.c
    if c < 1:
        raise InputError("generator set must be nonempty")
    if not 0 <= t < (1 << c) or not 0 <= t_prime < (1 << c):
        raise InputError("state mask out of range")
    members = set(state_elements(t))
    members.update(e + c for e in state_elements(t_prime))
    for j in range(a + 1, c + a + 1):
        if j in members:
            continue
        if not any(j - step in members for step in s):
            return False
    return True


class StateGraph:
    """All 2^c states with the consistency relation as per-state masks.

    Adjacency is implicit: state u has an edge to v iff uncovered[u] is a
    subset of covers[v].  Successor lists are computed on demand and
    memoized.  Instances are immutable after construction.
    """

    def __init__(self, generators: GeneratorSet, c: int,
                 uncovered: np.ndarray, covers: np.ndarray,
                 weights: np.ndarray):
        self.generators = generators
        self.c = c
        self.n_states = 1 << c
        self.uncovered = uncovered
        self.covers = covers
        self.weights = weights
        self._succ_cache: dict[int, tuple[int, ...]] = {}

    @property
    def full_state(self) -> int:
        return self.n_states - 1

    def states(self) -> range:
        return range(self.n_states)

    def weight(self, t: int) -> int:
        return int(self.weights[t])

    def is_edge(self, t: int, t_prime: int) -> bool:
        return (int(self.uncovered[t]) & ~int(self.covers[t_prime])) == 0

    def successors(self, t: int) -> tuple[int, ...]:
        cached = self._succ_cache.get(t)
        if cached is None:
            u = self.uncovered[t]
            mask = (self.covers & u) == u
            cached = tuple(int(x) for x in np.nonzero(mask)[0])
            self._succ_cache[t] = cached
        return cached

    def out_degree(self, t: int) -> int:
        return len(self.successors(t))


def build_state_graph(s: GeneratorSet, c_max: int = DEFAULT_C_MAX) -> StateGraph:
    """Construct the state graph for a nonempty generator set with c <= c_max."""
    c = s.c
    if c < 1:
        raise InputError("generator set must be nonempty")
    if c > c_max:
        raise CapExceededError("c", c, c_max)
    a = s.a
    n = 1 << c
    v = np.arange(n, dtype=np.int64)

    # line bit i <-> integer position i+1; a member at position x dominates
    # x + step, i.e. shifts its bit left by step (right for negative steps)
    def coverage(block: np.ndarray) -> np.ndarray:
        cov = block.copy()
        for step in s:
            cov |= (block << step) if step > 0 else (block >> -step)
        return cov

    window = np.int64(((1 << c) - 1) << a)  # positions [a+1, a+c]
    uncovered = (~coverage(v) & window) >> a
    covers = (coverage(v << c) & window) >> a
    weights = np.bitwise_count(v).astype(np.int64)
    return StateGraph(s, c, uncovered, covers, weights)


# ---------------------------------------------------------------------------
# minimum mean cycle


def _submin_transform(t: np.ndarray, c: int) -> None:
    """In place: t[m] becomes min of t over all submasks of m."""
    for i in range(c):
        tt = t.reshape(-1, 2, 1 << i)
        np.minimum(tt[:, 1, :], tt[:, 0, :], out=tt[:, 1, :])


def _supmax_transform(t: np.ndarray, c: int) -> None:
    """In place: t[m] becomes max of t over all supermasks of m."""
    for i in range(c):
        tt = t.reshape(-1, 2, 1 << i)
        np.maximum(tt[:, 0, :], tt[:, 1, :], out=tt[:, 0, :])


_INF = np.int64(1) << np.int64(61)


@dataclass
class _ThresholdResult:
    converged: bool
    y: np.ndarray | None = None
    mean: Fraction | None = None
    cycle: tuple[int, ...] | None = None


def _scan_pred_cycles(pred: np.ndarray, starts: np.ndarray, weights: np.ndarray,
                      mu: Fraction) -> tuple[Fraction, tuple[int, ...]] | None:
    """Search the predecessor pointers for a cycle with mean below mu.

    Predecessor edges are real graph edges, so any pointer cycle is a real
    cycle; pointers are only (re)assigned on strict improvement, which makes
    every pointer cycle strictly negative for the current threshold.
    """
    n = pred.shape[0]
    color = np.zeros(n, dtype=np.int8)  # 0 new, 1 on walk, 2 finished
    best: tuple[Fraction, tuple[int, ...]] | None = None
    for s0 in starts:
        v = int(s0)
        if color[v]:
            continue
        path: list[int] = []
        while v >= 0 and color[v] == 0:
            color[v] = 1
            path.append(v)
            v = int(pred[v])
        if v >= 0 and color[v] == 1:
            i = path.index(v)
            # pointers run backwards: forward cycle is v then the walk suffix reversed
            cyc = [path[i]] + path[:i:-1]
            total = int(weights[cyc].sum())
            mean = Fraction(total, len(cyc))
            if mean < mu and (best is None or (mean, len(cyc)) < (best[0], len(best[1]))):
                best = (mean, tuple(cyc))
        for x in path:
            color[x] = 2
    return best


def _test_threshold(uncovered: np.ndarray, covers: np.ndarray,
                    weights: np.ndarray, n: int, c: int,
                    mu: Fraction) -> _ThresholdResult:
    """Decide whether some cycle has mean < mu.

    Runs value iteration y(v) <- min(y(v), q*w(v) - p + min over consistent
    predecessors u of y(u)), the inner min taken through a subset-minimum
    transform keyed by the uncovered masks.  Convergence certifies that no
    cycle beats mu; otherwise a strictly better cycle is extracted from the
    predecessor pointers (guaranteed to exist by round n+1).
    """
    p, q = np.int64(mu.numerator), np.int64(mu.denominator)
    wq = q * weights - p
    y = np.zeros(n, dtype=np.int64)
    pred = np.full(n, -1, dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    t = np.empty(n, dtype=np.int64)
    for rnd in range(1, n + 2):
        base = y.min()
        if (int(y.max()) - int(base) + 1) * n >= int(_INF):
            # never reachable for c <= 16, but silent wraparound is worse
            # than a loud stop
            raise RuntimeError("64-bit packing range exceeded in cycle search")
        # pack (value, node) so one transform yields min value and its argmin
        packed = (y - base) * n + idx
        t.fill(_INF)
        np.minimum.at(t, uncovered, packed)
        _submin_transform(t, c)
        gval = t[covers]
        has = gval < _INF
        cand = np.where(has, wq + (gval // n + base), _INF)
        improved = cand < y
        if not improved.any():
            return _ThresholdResult(converged=True, y=y)
        pred = np.where(improved, gval % n, pred)
        y = np.where(improved, cand, y)
        if rnd & (rnd - 1) == 0 or rnd == n + 1:
            found = _scan_pred_cycles(pred, np.nonzero(improved)[0], weights, mu)
            if found is not None:
                return _ThresholdResult(converged=False, mean=found[0], cycle=found[1])
            if rnd == n + 1:
                raise AssertionError("value iteration passed round n+1 without a cycle")
    raise AssertionError("unreachable")


def _cycle_nodes(uncovered, covers, y, tgt, n, c) -> np.ndarray:
    """States that can lie on a cycle of tight edges.

    Edge u -> v is tight when y(u) == tgt(v) (and u -> v is an edge); with
    converged potentials every minimizing cycle is all-tight and every
    all-tight cycle is minimizing.  Iteratively drop states lacking a tight
    successor or predecessor among the survivors.
    """
    active = np.ones(n, dtype=bool)
    t = np.empty(n, dtype=np.int64)
    for _ in range(n + 1):
        t.fill(_INF)
        np.minimum.at(t, uncovered[active], y[active])
        _submin_transform(t, c)
        in_ok = t[covers] == tgt

        t.fill(-_INF)
        np.maximum.at(t, covers[active], tgt[active])
        _supmax_transform(t, c)
        out_ok = t[uncovered] == y

        new_active = active & in_ok & out_ok
        if np.array_equal(new_active, active):
            break
        active = new_active
    if not active.any():
        raise AssertionError("tight subgraph lost all cycles")
    return np.nonzero(active)[0]


def _canonical_cycle(uncovered, covers, weights, n, c, mu: Fraction,
                     y: np.ndarray) -> tuple[int, ...]:
    """Shortest minimizing cycle; ties to the lexicographically smallest
    state sequence started at its smallest state."""
    p, q = np.int64(mu.numerator), np.int64(mu.denominator)
    tgt = y - (q * weights - p)
    nodes = _cycle_nodes(uncovered, covers, y, tgt, n, c)

    u_r, h_r = uncovered[nodes], covers[nodes]
    y_r, tgt_r = y[nodes], tgt[nodes]
    m = len(nodes)
    adj: list[np.ndarray] = []
    for i in range(m):
        mask = ((h_r & u_r[i]) == u_r[i]) & (tgt_r == y_r[i])
        adj.append(np.nonzero(mask)[0])

    keep = _nontrivial_scc_members(adj, m)
    if not keep:
        raise AssertionError("no cycle in the tight subgraph")
    radj: list[list[int]] = [[] for _ in range(m)]
    for i in keep:
        for j in adj[i]:
            if int(j) in keep:
                radj[int(j)].append(i)

    best_len = None
    order = sorted(keep)
    for v in order:
        if v in adj[v]:
            best_len = 1
            break
    if best_len is None:
        best_len = _shortest_cycle_length(adj, keep, order)

    for v in order:  # nodes are sorted by state value already
        seq = _lex_min_cycle_from(v, best_len, adj, radj, keep)
        if seq is not None:
            return tuple(int(nodes[i]) for i in seq)
    raise AssertionError("canonical cycle extraction failed")


def _nontrivial_scc_members(adj: list[np.ndarray], m: int) -> set[int]:
    """Indices lying in a strongly connected component that contains a cycle."""
    index = [0] * m
    low = [0] * m
    on_stack = [False] * m
    visited = [False] * m
    stack: list[int] = []
    counter = [1]
    result: set[int] = set()

    for root in range(m):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                visited[v] = True
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            neighbors = adj[v]
            while pi < len(neighbors):
                wv = int(neighbors[pi])
                pi += 1
                if not visited[wv]:
                    work[-1] = (v, pi)
                    work.append((wv, 0))
                    advanced = True
                    break
                if on_stack[wv]:
                    low[v] = min(low[v], index[wv])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack[x] = False
                    comp.append(x)
                    if x == v:
                        break
                if len(comp) > 1 or any(int(j) == v for j in adj[v]):
                    result.update(comp)
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
    return result


def _shortest_cycle_length(adj, keep: set[int], order: list[int]) -> int:
    best = None
    for v in order:
        seen = {v}
        frontier = [v]
        d = 0
        closed = False
        while frontier and not closed and (best is None or d + 1 < best):
            d += 1
            nxt = []
            for x in frontier:
                if closed:
                    break
                for j in adj[x]:
                    j = int(j)
                    if j not in keep:
                        continue
                    if j == v:
                        best = d
                        closed = True
                        break
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
    assert best is not None
    return best


def _lex_min_cycle_from(start: int, length: int, adj, radj,
                        keep: set[int]) -> list[int] | None:
    """Smallest cycle sequence of the given length starting at `start`,
    with every other node larger than `start`.  Depth-first in ascending
    order, pruned by backward distances to the start."""
    # distances to start through allowed nodes (> start, inside keep)
    dist_to = {start: 0}
    frontier = [start]
    d = 0
    while frontier and d < length:
        d += 1
        nxt = []
        for x in frontier:
            for u in radj[x]:
                if u != start and u > start and u in keep and u not in dist_to:
                    dist_to[u] = d
                    nxt.append(u)
        frontier = nxt

    path = [start]
    used = {start}

    def extend(cur: int, remaining: int) -> bool:
        for j in sorted(int(x) for x in adj[cur]):
            if remaining == 1:
                if j == start:
                    return True
                continue
            if j <= start or j not in keep or j in used:
                continue
            if dist_to.get(j, length + 1) > remaining - 1:
                continue
            used.add(j)
            path.append(j)
            if extend(j, remaining - 1):
                return True
            path.pop()
            used.remove(j)
        return False

    if extend(start, length):
        return path
    return None


def min_mean_cycle(g: StateGraph) -> tuple[Fraction, tuple[int, ...]]:
    """Exact minimum cycle mean and the canonical minimizing cycle.

    Edge weight into a state is that state's population count.  Candidate
    means decrease strictly (each is achieved by an explicit cycle) until a
    convergence certificate shows no cycle beats the last one.
    """
    n, c = g.n_states, g.c
    mu = Fraction(c + 1)  # above any cycle mean, so the first test finds a cycle
    result = None
    while True:
        result = _test_threshold(g.uncovered, g.covers, g.weights, n, c, mu)
        if result.converged:
            break
        mu = result.mean
    if mu == Fraction(c + 1):
        raise InputError("state graph has no cycle")
    cycle = _canonical_cycle(g.uncovered, g.covers, g.weights, n, c, mu, result.y)
    return mu, cycle


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class RatioCertificate:
    """Exact domination ratio plus everything needed to recheck it."""

    ratio: Fraction
    cycle: tuple[int, ...]
    witness: PeriodicSet
    period: int


def domination_ratio(s: GeneratorSet, c_max: int = DEFAULT_C_MAX) -> RatioCertificate:
    """Exact domination ratio with a periodic witness.

    The witness concatenates the minimizing cycle's states as consecutive
    length-c windows; its density equals the ratio and its period is at most
    c * 2^c.
    """
    g = build_state_graph(s, c_max=c_max)
    mean, cycle = min_mean_cycle(g)
    c = g.c
    ratio = mean / c
    period = len(cycle) * c
    residues = []
    for i, t in enumerate(cycle):
        residues.extend(e + i * c for e in state_elements(t))
    witness = PeriodicSet(period, residues)
    assert witness.density == ratio
    assert period <= c * (1 << c)
    assert verify_dominating(witness, s)
    return RatioCertificate(ratio=ratio, cycle=cycle, witness=witness, period=period)


# ---------------------------------------------------------------------------
# efficient dominating sets (exact cover)


def _eds_count_tables(s: GeneratorSet, c_max: int):
    c = s.c
    if c < 1:
        raise InputError("generator set must be nonempty")
    if c > c_max:
        raise CapExceededError("c", c, c_max)
    a = s.a
    n = 1 << c
    v = np.arange(n, dtype=np.int64)
    count_left = np.zeros((n, c), dtype=np.int16)
    count_right = np.zeros((n, c), dtype=np.int16)
    for sigma in [0, *s.elements]:
        for tpos in range(c):
            sh = a + tpos - sigma  # dominator inside the left window
            if 0 <= sh < c:
                count_left[:, tpos] += ((v >> sh) & 1).astype(np.int16)
            shr = sh - c  # dominator inside the right window
            if 0 <= shr < c:
                count_right[:, tpos] += ((v >> shr) & 1).astype(np.int16)
    return count_left, count_right


def eds_exists(s: GeneratorSet,
               c_max: int = DEFAULT_C_MAX) -> tuple[bool, PeriodicSet | None]:
    """Decide whether some set dominates every integer exactly once.

    Transitions are restricted to pairs whose window coverage counts are
    exactly one everywhere; such a set exists iff the restricted relation
    has a cycle, and any cycle unrolls into a periodic witness.
    """
    count_left, count_right = _eds_count_tables(s, c_max)
    c = s.c
    window_full = (1 << c) - 1
    powers = (np.int64(1) << np.arange(c, dtype=np.int64))

    eligible = (count_left <= 1).all(axis=1) & (count_right <= 1).all(axis=1)
    states = np.nonzero(eligible)[0]
    if len(states) == 0:
        return False, None
    left_mask = (count_left[states].astype(np.int64) * powers).sum(axis=1)
    right_mask = (count_right[states].astype(np.int64) * powers).sum(axis=1)
    needed = window_full & ~left_mask

    # quotient graph on coverage masks: each eligible state is one edge
    # right_mask(T) -> needed(T); any cycle there lifts to a state cycle
    adjacency: dict[int, list[int]] = {}
    lift: dict[tuple[int, int], int] = {}
    for st, frm, to in sorted(zip(states.tolist(), right_mask.tolist(), needed.tolist()),
                              key=lambda z: (z[1], z[2], z[0])):
        key = (frm, to)
        if key not in lift:
            lift[key] = st
            adjacency.setdefault(frm, []).append(to)

    meta_cycle = _find_meta_cycle(adjacency)
    if meta_cycle is None:
        return False, None
    length = len(meta_cycle)
    cycle_states = [lift[(meta_cycle[i], meta_cycle[(i + 1) % length])]
                    for i in range(length)]
    residues = []
    for i, t in enumerate(cycle_states):
        residues.extend(e + i * c for e in state_elements(t))
    witness = PeriodicSet(length * c, residues)
    assert all(k == 1 for k in coverage_counts(witness, s))
    return True, witness


def _find_meta_cycle(adjacency: dict[int, list[int]]) -> list[int] | None:
    color: dict[int, int] = {}
    for start in sorted(adjacency):
        if color.get(start):
            continue
        path = [start]
        color[start] = 1
        stack = [(start, iter(sorted(adjacency[start])))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nb in it:
                if nb not in adjacency:
                    continue  # dead end, cannot close a cycle
                col = color.get(nb, 0)
                if col == 1:
                    return path[path.index(nb):]
                if col == 0:
                    color[nb] = 1
                    path.append(nb)
                    stack.append((nb, iter(sorted(adjacency[nb]))))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                path.pop()
                stack.pop()
    return None
