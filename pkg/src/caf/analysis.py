"""Structural analysis of extension-sets.

Everything here is computed from the co-occurrence ("Pairs") relation of an
extension-set: two arguments are paired iff some member contains both.  An
argument is paired with itself iff it occurs in some member, so the
complement graph used for component structure never has loops.
"""

from __future__ import annotations

from itertools import combinations

from .core import bits
from .semantics import ExtensionSet, Semantics, as_semantics, maximal_cliques

CF_CLOSURE_LIMIT = 22

PairsRelation = frozenset  # of (name, name) tuples


def pair_masks(S: ExtensionSet) -> list[int]:
    """``pm[i]``: mask of arguments paired with argument ``i`` (itself included)."""
    pm = [0] * len(S.universe)
    for m in S.members:
        for i in bits(m):
            pm[i] |= m
    return pm


def pairs_of(S: ExtensionSet) -> PairsRelation:
    pm = pair_masks(S)
    u = S.universe
    return frozenset((u[i], u[j]) for i in range(len(u)) for j in bits(pm[i]))


def args_of(S: ExtensionSet) -> frozenset[str]:
    return S.names_of(S.args)


def _is_paired_clique(pm: list[int], m: int) -> bool:
    return all(m & ~pm[i] == 0 for i in bits(m))


def cf_closure(S: ExtensionSet) -> ExtensionSet:
    """All subsets of ``Arg`` whose members are pairwise paired."""
    args = list(bits(S.args))
    if len(args) > CF_CLOSURE_LIMIT:
        raise ValueError(f"cf-closure limited to {CF_CLOSURE_LIMIT} arguments")
    pm = pair_masks(S)
    found = []

    def rec(cur: int, cand: int) -> None:
        found.append(cur)
        for i in bits(cand):
            rec(cur | 1 << i, cand & pm[i] & ~((2 << i) - 1))

    rec(0, S.args)
    return ExtensionSet(S.universe, tuple(found))


def plus_masks(S: ExtensionSet) -> list[int]:
    pm = pair_masks(S)
    adj = [p & ~(1 << i) for i, p in enumerate(pm)]
    return sorted(maximal_cliques(adj, S.args))


def plus_of(S: ExtensionSet) -> ExtensionSet:
    """The maximal pairwise-paired sets."""
    return ExtensionSet(S.universe, tuple(plus_masks(S)))


def minus_of(S: ExtensionSet) -> ExtensionSet:
    """Maximal pairwise-paired sets that are not members of ``S``."""
    own = set(S.members)
    return ExtensionSet(S.universe, tuple(m for m in plus_masks(S) if m not in own))


def component_masks(S: ExtensionSet) -> list[int]:
    pm = pair_masks(S)
    args = S.args
    seen = 0
    blocks = []
    for start in bits(args):
        if seen >> start & 1:
            continue
        block = frontier = 1 << start
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= args & ~pm[i]
            frontier = nxt & ~block
            block |= frontier
        seen |= block
        blocks.append(block)
    return blocks


def component_structure(S: ExtensionSet) -> list[frozenset[str]]:
    """Components of the graph on ``Arg`` whose edges are the unpaired pairs."""
    return [S.names_of(b) for b in component_masks(S)]


def nontrivial_components(S: ExtensionSet) -> list[frozenset[str]]:
    return [c for c in component_structure(S) if len(c) >= 2]


def is_incomparable(S: ExtensionSet) -> bool:
    ms = S.members
    return not any(a != b and a & ~b == 0 for a in ms for b in ms)


def _tight(members: set[int], args: int, pm: list[int]) -> bool:
    for m in members:
        for a in bits(args & ~m):
            if (m | 1 << a) not in members and m & ~pm[a] == 0:
                return False
    return True


def is_tight(S: ExtensionSet) -> bool:
    """Adding an argument to a member either stays in ``S`` or hits an unpaired member."""
    return _tight(set(S.members), S.args, pair_masks(S))


def dcl(S: ExtensionSet) -> ExtensionSet:
    """Downward closure: every subset of every member."""
    out: set[int] = set()
    for m in S.members:
        idx = list(bits(m))
        for k in range(len(idx) + 1):
            for c in combinations(idx, k):
                out.add(sum(1 << i for i in c))
    return ExtensionSet(S.universe, tuple(out))


def is_dcl_tight(S: ExtensionSet) -> bool:
    D = dcl(S)
    return _tight(set(D.members), D.args, pair_masks(S))


def is_adm_closed(S: ExtensionSet) -> bool:
    pm = pair_masks(S)
    members = set(S.members)
    for a in S.members:
        for b in S.members:
            u = a | b
            if _is_paired_clique(pm, u) and u not in members:
                return False
    return True


def is_subset_of_plus(S: ExtensionSet) -> bool:
    plus = set(plus_masks(S))
    return all(m in plus for m in S.members)


def pref_sem_predicate(S: ExtensionSet) -> bool:
    """No union of two distinct members fits inside a maximal paired set."""
    pm = pair_masks(S)
    ms = S.members
    return all(not _is_paired_clique(pm, a | b) for a, b in combinations(ms, 2))


def in_signature(S: ExtensionSet, sigma: Semantics | str) -> bool:
    """Whether some framework (compact or not) has exactly ``S`` as its sigma-extensions."""
    sigma = as_semantics(sigma)
    if sigma is Semantics.STB:
        return is_subset_of_plus(S)
    if not len(S):
        return False
    if sigma is Semantics.NAIVE:
        return set(S.members) == set(plus_masks(S))
    if sigma is Semantics.STAGE:
        return is_subset_of_plus(S)
    if sigma in (Semantics.PREF, Semantics.SEM):
        return pref_sem_predicate(S)
    raise ValueError(f"no signature characterisation for {sigma}")


def analysis_report(S: ExtensionSet) -> dict:
    """Summary used by the ``analyze`` command."""
    plus = plus_of(S)
    minus = minus_of(S)
    pairs = pairs_of(S)
    return {
        "extensions": len(S),
        "args": S.arg_names(),
        "pairs": sorted([a, b] for a, b in pairs if a < b),
        "plus": [S.ordered_names(m) for m in plus.members],
        "minus": [S.ordered_names(m) for m in minus.members],
        "components": [S.ordered_names(b) for b in component_masks(S)],
        "incomparable": is_incomparable(S),
        "tight": is_tight(S),
        "signature": {str(s): in_signature(S, s) for s in (Semantics.NAIVE, Semantics.STB, Semantics.STAGE,
                                                           Semantics.SEM, Semantics.PREF)},
        "contains_empty_set": 0 in S.members,
    }
