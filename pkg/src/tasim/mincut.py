"""Minimum-cut utilities for small weighted graphs.

Graphs are adjacency mappings ``{node: {neighbor: weight}}`` with symmetric
positive integer weights; every node appears as a key even when isolated.
Nodes must be mutually comparable (ints or tuples) so that results can be
ordered deterministically.

The module provides:

- ``min_cut_value``: global minimum cut via repeated max-flow from a fixed
  source (optionally capped for early exit when only "is it below tau?"
  matters),
- ``enumerate_min_cut_sides``: every global minimum cut, each reported once
  as the side containing the smallest node,
- ``brute_force_min_cuts``: exhaustive 2^(n-1)-1 cut enumeration, kept as the
  test oracle,
- ``contract_edges_over``: quotient graph contracting edges too heavy to
  cross any cut of interest.

All functions are pure; none mutate their inputs.
"""
from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Mapping

Node = Hashable
Adj = Mapping[Node, Mapping[Node, int]]

INF = float("inf")


class CutEnumerationBudgetExceeded(RuntimeError):
    """Raised when a cut enumeration would produce more sides than allowed."""


def components(adj: Adj) -> list[frozenset]:
    """Connected components of the graph, as frozensets of nodes."""
    seen: set = set()
    out: list[frozenset] = []
    for start in adj:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    seen.add(v)
                    queue.append(v)
        out.append(frozenset(comp))
    return out


def maxflow(adj: Adj, s: Node, t: Node, cap: int | None = None):
    """Max flow between s and t (shortest-augmenting-path).

    Undirected edges become a pair of directed arcs of the same capacity.
    If ``cap`` is given, augmentation stops once the flow reaches ``cap``
    (the returned value is then min(true max flow, cap), and the residual is
    only meaningful when the returned value is < cap).

    Returns (flow_value, residual) where residual[u][v] is remaining
    capacity on the directed arc u->v.
    """
    residual: dict = {u: dict(nbrs) for u, nbrs in adj.items()}
    for u in adj:
        residual.setdefault(u, {})
    flow = 0
    while cap is None or flow < cap:
        parent: dict = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for v, r in residual[u].items():
                if r > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            break
        path = []
        v = t
        while parent[v] is not None:
            u = parent[v]
            path.append((u, v))
            v = u
        aug = min(residual[u][v] for u, v in path)
        if cap is not None:
            aug = min(aug, cap - flow)
        for u, v in path:
            residual[u][v] -= aug
            residual[v][u] = residual[v].get(u, 0) + aug
        flow += aug
    return flow, residual


def min_cut_value(adj: Adj, cap: int | None = None):
    """Global minimum cut value.

    Returns INF for graphs with fewer than two nodes (no cuts exist),
    0 for disconnected graphs, and otherwise the minimum total weight
    crossing any nontrivial bipartition. With ``cap`` set, the computation
    exits early and returns ``cap`` as soon as the minimum is known to be
    >= cap.
    """
    nodes = sorted(adj)
    if len(nodes) < 2:
        return INF
    s = nodes[0]
    best: float | int = INF
    for t in nodes[1:]:
        limit = best if cap is None else min(best, cap)
        eff = None if limit is INF else int(limit)
        f, _ = maxflow(adj, s, t, cap=eff)
        if f < best:
            best = f
        if best == 0:
            break
    return best


def brute_force_min_cuts(adj: Adj):
    """Oracle: enumerate all 2^(n-1)-1 bipartitions.

    Returns (min_value, [side, ...]) where each side is the frozenset of
    nodes on the anchor node's side of a minimum cut (anchor = smallest
    node). Only usable for small graphs.
    """
    nodes = sorted(adj)
    n = len(nodes)
    if n < 2:
        raise ValueError("need at least two nodes")
    if n > 22:
        raise ValueError("brute force limited to 22 nodes")
    anchor = nodes[0]
    rest = nodes[1:]
    best: float | int = INF
    sides: list[frozenset] = []
    for mask in range(2 ** (n - 1) - 1):
        side = {anchor}
        for i in range(n - 1):
            if mask >> i & 1:
                side.add(rest[i])
        value = 0
        for u in side:
            for v, w in adj[u].items():
                if v not in side:
                    value += w
        if value < best:
            best = value
            sides = [frozenset(side)]
        elif value == best:
            sides.append(frozenset(side))
    return best, sides


def contract_edges_over(adj: Adj, threshold: int):
    """Contract every edge with weight > threshold.

    No cut of value <= threshold can cross such an edge, so those cuts
    survive contraction unchanged. Returns (quotient_adj, groups) where
    groups maps each quotient node (the smallest original node of its
    class) to the frozenset of original nodes it represents.
    """
    parent = {u: u for u in adj}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, nbrs in adj.items():
        for v, w in nbrs.items():
            if w > threshold:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
    members: dict = {}
    for u in adj:
        members.setdefault(find(u), []).append(u)
    rep_of_root = {root: min(nodes) for root, nodes in members.items()}
    rep = {u: rep_of_root[find(u)] for u in adj}
    groups = {rep_of_root[root]: frozenset(nodes) for root, nodes in members.items()}
    quotient: dict = {r: {} for r in groups}
    for u, nbrs in adj.items():
        ru = rep[u]
        for v, w in nbrs.items():
            rv = rep[v]
            if ru == rv:
                continue
            quotient[ru][rv] = quotient[ru].get(rv, 0) + w
    return quotient, groups


def _tarjan_scc(graph: Mapping[Node, Iterable[Node]]) -> dict:
    """Iterative strongly-connected components; returns node -> component id."""
    index_of: dict = {}
    lowlink: dict = {}
    on_stack: set = set()
    stack: list = []
    comp_of: dict = {}
    counter = [0]
    comp_counter = [0]

    for root in graph:
        if root in index_of:
            continue
        work = [(root, iter(graph[root]))]
        index_of[root] = lowlink[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index_of:
                    index_of[nxt] = lowlink[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(graph[nxt])))
                    advanced = True
                    break
                elif nxt in on_stack:
                    if index_of[nxt] < lowlink[node]:
                        lowlink[node] = index_of[nxt]
            if advanced:
                continue
            work.pop()
            if work:
                parent_node = work[-1][0]
                if lowlink[node] < lowlink[parent_node]:
                    lowlink[parent_node] = lowlink[node]
            if lowlink[node] == index_of[node]:
                cid = comp_counter[0]
                comp_counter[0] += 1
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp_of[w] = cid
                    if w == node:
                        break
    return comp_of


def _closed_set_sides(adj, residual, s, t, budget):
    """All minimum s-t cut sides from a max-flow residual.

    A set S with s in S, t not in S is the source side of a minimum s-t cut
    iff no residual arc leaves S. Such sets are unions of strongly connected
    components of the residual graph: the components reachable from s are
    mandatory, the components reaching t are excluded, and any
    out-closure-closed collection of the remaining components may be added.
    Yields each side as a frozenset of nodes of ``adj``.
    """
    rgraph = {
        u: [v for v, r in residual[u].items() if r > 0] for u in adj
    }
    comp_of = _tarjan_scc(rgraph)
    comp_nodes: dict = {}
    for u, cid in comp_of.items():
        comp_nodes.setdefault(cid, []).append(u)
    cond_out: dict = {cid: set() for cid in comp_nodes}
    for u, outs in rgraph.items():
        cu = comp_of[u]
        for v in outs:
            cv = comp_of[v]
            if cu != cv:
                cond_out[cu].add(cv)

    def reach(start, graph_out):
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in graph_out[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    must_in = reach(comp_of[s], cond_out)
    cond_in: dict = {cid: set() for cid in comp_nodes}
    for cid, outs in cond_out.items():
        for o in outs:
            cond_in[o].add(cid)
    must_out = reach(comp_of[t], cond_in)
    if must_in & must_out:
        raise AssertionError("source side reaches sink in residual graph")
    free = [c for c in comp_nodes if c not in must_in and c not in must_out]
    # A free component with any path to an excluded component can never be
    # chosen; drop those up front.
    poisoned = set()
    for c in free:
        if c in poisoned:
            continue
        seen = reach(c, cond_out)
        if seen & must_out:
            poisoned |= seen & set(free)
    usable = [c for c in free if c not in poisoned]
    usable_set = set(usable)
    # Out-closure (descendants within the usable set) per usable component,
    # computed iteratively to avoid deep recursion.
    closure: dict = {}
    order = sorted(usable)
    for c in order:
        stack = [c]
        while stack:
            x = stack[-1]
            if x in closure:
                stack.pop()
                continue
            pending = [o for o in cond_out[x] if o in usable_set and o not in closure]
            if pending:
                stack.extend(pending)
                continue
            acc = {x}
            for o in cond_out[x]:
                if o in usable_set:
                    acc |= closure[o]
            closure[x] = frozenset(acc)
            stack.pop()

    sides: list[frozenset] = []

    def emit(chosen: frozenset):
        comp_ids = must_in | chosen
        side = []
        for cid in comp_ids:
            side.extend(comp_nodes[cid])
        sides.append(frozenset(side))
        if len(sides) > budget:
            raise CutEnumerationBudgetExceeded(
                f"more than {budget} minimum-cut sides"
            )

    nodes_order = order

    def rec(i, chosen: frozenset, forbidden: frozenset):
        if i == len(nodes_order):
            emit(chosen)
            return
        c = nodes_order[i]
        if c in chosen or c in forbidden:
            rec(i + 1, chosen, forbidden)
            return
        rec(i + 1, chosen, forbidden | {c})
        clo = closure[c]
        if not (clo & forbidden):
            rec(i + 1, chosen | clo, forbidden)

    # Recursion depth is bounded by the number of usable components, which is
    # small in practice; convert to explicit stack if that ever changes.
    rec(0, frozenset(), frozenset())
    return sides


def enumerate_min_cut_sides(adj: Adj, lam: int, budget: int = 100_000):
    """Every global minimum cut of value ``lam``.

    Each cut is reported exactly once, as the frozenset side containing the
    smallest node. ``lam`` must be the true global minimum cut value of the
    (connected) graph. Raises CutEnumerationBudgetExceeded rather than
    silently truncating.
    """
    nodes = sorted(adj)
    if len(nodes) < 2:
        return []
    anchor = nodes[0]
    quotient, groups = contract_edges_over(adj, lam)
    qnodes = sorted(quotient)
    if len(qnodes) < 2:
        return []

    def expand_and_normalize(qside: frozenset) -> frozenset:
        side = set()
        for q in qside:
            side |= groups[q]
        if anchor not in side:
            side = set(adj) - side
        return frozenset(side)

    found: set[frozenset] = set()
    if len(qnodes) <= 16:
        value, qsides = brute_force_min_cuts(quotient)
        if value == lam:
            for qside in qsides:
                found.add(expand_and_normalize(qside))
                if len(found) > budget:
                    raise CutEnumerationBudgetExceeded(
                        f"more than {budget} minimum-cut sides"
                    )
    else:
        s = qnodes[0]
        for t in qnodes[1:]:
            f, residual = maxflow(quotient, s, t, cap=lam + 1)
            if f != lam:
                continue
            for qside in _closed_set_sides(quotient, residual, s, t, budget):
                found.add(expand_and_normalize(qside))
                if len(found) > budget:
                    raise CutEnumerationBudgetExceeded(
                        f"more than {budget} minimum-cut sides"
                    )
    return sorted(found, key=sorted)
