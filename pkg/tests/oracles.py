"""Independent reference computations used only by the tests.

These deliberately share no code with the engine: the cycle mean comes from
a dynamic program over walk lengths, and the canonical cycle from plain
depth-first enumeration."""

from fractions import Fraction


def karp_min_mean(g):
    """Exact minimum cycle mean by the classic walk-length recurrence,
    rooted at the full state (which reaches everything)."""
    n = g.n_states
    succ = {u: g.successors(u) for u in g.states()}
    d = [[None] * n for _ in range(n + 1)]
    d[0][g.full_state] = 0
    for k in range(1, n + 1):
        dk, dk1 = d[k], d[k - 1]
        for u in range(n):
            du = dk1[u]
            if du is None:
                continue
            for v in succ[u]:
                w = du + g.weight(v)
                if dk[v] is None or w < dk[v]:
                    dk[v] = w
    best = None
    for v in range(n):
        if d[n][v] is None:
            continue
        m = max(Fraction(d[n][v] - d[k][v], n - k)
                for k in range(n) if d[k][v] is not None)
        if best is None or m < best:
            best = m
    return best


def brute_canonical_cycle(g, mu):
    """Shortest cycle of mean mu; ties resolved to the lexicographically
    smallest sequence starting from the cycle's smallest state.

    Enumerates lengths upward and, per candidate start, searches greedily in
    state order.  Pruned by an exact reachable-weight-sum table (walks, not
    paths, so it never cuts a real solution).
    """
    n, c = g.n_states, g.c
    succ = {u: sorted(g.successors(u)) for u in g.states()}
    for length in range(1, n + 1):
        target = mu * length
        if target.denominator != 1:
            continue
        target = target.numerator
        for start in range(n):
            if length == 1:
                if start in succ[start] and g.weight(start) == target:
                    return (start,)
                continue
            found = _search_from(g, succ, start, length, target)
            if found:
                return tuple(found)
    return None


def _search_from(g, succ, start, length, target):
    n = g.n_states
    # reach[r][v]: bitmask of weight sums of length-r walks v -> start
    # through states larger than start (repeats allowed)
    full_bits = (1 << (target + 1)) - 1
    reach = [{start: 1}]
    for _ in range(1, length):
        prev, cur = reach[-1], {}
        for v in range(n):
            if v != start and v <= start:
                continue
            acc = 0
            for x in succ[v]:
                m = prev.get(x)
                if m:
                    acc |= (m << g.weight(x)) & full_bits
            if acc:
                cur[v] = acc
        reach.append(cur)

    path = [start]
    used = {start}

    def extend(cur, total, depth):
        rem = length - depth
        if rem == 1:
            return start in succ[cur] and total + g.weight(start) == target
        for v in succ[cur]:
            if v <= start or v in used:
                continue
            tw = total + g.weight(v)
            if tw > target:
                continue
            m = reach[rem - 1].get(v)
            if not m or not (m >> (target - tw)) & 1:
                continue
            used.add(v)
            path.append(v)
            if extend(v, tw, depth + 1):
                return True
            path.pop()
            used.remove(v)
        return False

    if extend(start, 0, 0):
        return path
    return None


def all_transitions_naive(g, is_transition, s):
    """Edge set recomputed pairwise from the direct window definition."""
    return {(t, u) for t in g.states() for u in g.states()
            if is_transition(t, u, s)}


def brute_small_period_exact_cover(s, coverage_counts, periodic_set, max_period=10):
    """Search every residue subset of every period up to max_period for a
    set that dominates each integer exactly once."""
    from itertools import combinations

    for p in range(1, max_period + 1):
        for size in range(1, p + 1):
            for combo in combinations(range(1, p + 1), size):
                u = periodic_set(p, combo)
                if all(k == 1 for k in coverage_counts(u, s)):
                    return True, u
    return False, None
