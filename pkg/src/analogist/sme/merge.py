"""Merging local matches into maximal consistent collections.

Every expression match owes support to matches on its arguments, recursively
down to entities: that set is its closure. A closure is dead when some
argument pair has no local match or when it binds one item to two
counterparts. Live matches are pairwise compatible when the union of their
closures is still one-to-one, and the candidate analogies are exactly the
maximal cliques of the compatibility graph, each expanded to the union of
its members' closures.
"""

from __future__ import annotations

from ..kr.graph import node_key
from ..kr.model import EntitySymbol, Experience, Expression
from .local import local_matches
from .model import DEFAULT_PARAMS, MatchHypothesis, MatchParams, MergeLimitError

PairKey = tuple[tuple, tuple]


def _pair_key(m: MatchHypothesis) -> PairKey:
    return (node_key(m.base), node_key(m.target))


def closure_of(
    m: MatchHypothesis, by_pair: dict[PairKey, MatchHypothesis]
) -> frozenset[MatchHypothesis] | None:
    """The support closure of an expression match, or None if it is dead."""
    members: set[MatchHypothesis] = set()
    stack = [m]
    while stack:
        cur = stack.pop()
        if cur in members:
            continue
        members.add(cur)
        if not isinstance(cur.base, Expression):
            continue
        for barg, targ in zip(cur.base.args, cur.target.args):
            if isinstance(barg, Expression) != isinstance(targ, Expression):
                return None
            child = by_pair.get((node_key(barg), node_key(targ)))
            if child is None:
                return None
            stack.append(child)

    forward: dict[tuple, tuple] = {}
    backward: dict[tuple, tuple] = {}
    for member in members:
        bk, tk = node_key(member.base), node_key(member.target)
        if forward.setdefault(bk, tk) != tk:
            return None
        if backward.setdefault(tk, bk) != bk:
            return None
    return frozenset(members)


def _compatible(
    maps_a: tuple[dict, dict], closure_b: frozenset[MatchHypothesis]
) -> bool:
    forward, backward = maps_a
    for m in closure_b:
        bk, tk = node_key(m.base), node_key(m.target)
        if forward.get(bk, tk) != tk:
            return False
        if backward.get(tk, bk) != bk:
            return False
    return True


def merge_gmaps(
    base: Experience,
    target: Experience,
    params: MatchParams = DEFAULT_PARAMS,
    matches: list[MatchHypothesis] | None = None,
) -> tuple[frozenset[MatchHypothesis], ...]:
    """Maximal consistent match sets, as closures unioned over the maximal
    cliques of the pairwise compatibility graph. Raises MergeLimitError when
    the clique search visits more states than params.merge_cap."""
    if matches is None:
        matches = local_matches(base, target, params)
    by_pair = {_pair_key(m): m for m in matches}

    live: list[MatchHypothesis] = []
    closures: list[frozenset[MatchHypothesis]] = []
    for m in matches:
        if not m.is_expression:
            continue
        c = closure_of(m, by_pair)
        if c is not None:
            live.append(m)
            closures.append(c)
    if not live:
        return ()

    order = sorted(range(len(live)), key=lambda i: (live[i].base.id, live[i].target.id))
    live = [live[i] for i in order]
    closures = [closures[i] for i in order]

    maps = []
    for c in closures:
        forward = {node_key(m.base): node_key(m.target) for m in c}
        backward = {node_key(m.target): node_key(m.base) for m in c}
        maps.append((forward, backward))

    n = len(live)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _compatible(maps[i], closures[j]):
                adj[i].add(j)
                adj[j].add(i)

    cliques: list[tuple[int, ...]] = []
    states = 0

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        nonlocal states
        states += 1
        if states > params.merge_cap:
            raise MergeLimitError(states, params.merge_cap)
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda v: len(p & adj[v]))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    cliques.sort()

    seen: set[frozenset[MatchHypothesis]] = set()
    unions: list[frozenset[MatchHypothesis]] = []
    for clique in cliques:
        merged: set[MatchHypothesis] = set()
        for idx in clique:
            merged |= closures[idx]
        frozen = frozenset(merged)
        if frozen not in seen:
            seen.add(frozen)
            unions.append(frozen)
    return tuple(unions)
