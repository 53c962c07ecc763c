"""Compact stable realization, exclusion mappings and conflict-explicit repairs.

The central search assigns every maximal paired set that is *not* wanted as
an extension (the "spurious" sets) a target argument it must fail to
attack.  Each assignment forbids the attacks from the spurious set's
unpaired members onto the target; a mapping is usable when the forbidden
attacks never clash in both directions and every wanted extension still
attacks each argument outside it through some non-forbidden unpaired attack.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .analysis import pair_masks, plus_masks
from .core import ArgumentationFramework, bits, to_apx
from .digraphs import code_to_af, iso_class_codes
from .semantics import ExtensionSet, Semantics, as_semantics, enumerate_masks, maximal_cliques

DEFAULT_EXPLICIT_GUARD = 3 ** 18
EC_SEARCH_LIMIT = 5


@dataclass(frozen=True)
class ExclusionMapping:
    """Targets for the spurious sets and the attack pairs this forbids."""

    universe: tuple[str, ...]
    assignment: tuple[tuple[int, int], ...]  # (spurious set mask, target index)
    induced_pairs: frozenset[tuple[int, int]]

    def named_assignment(self) -> list[tuple[list[str], str]]:
        return [([self.universe[i] for i in bits(m)], self.universe[t]) for m, t in self.assignment]

    def named_pairs(self) -> set[tuple[str, str]]:
        return {(self.universe[a], self.universe[b]) for a, b in self.induced_pairs}


def _mapping_search(universe: int, pm: list[int], wanted: Sequence[int], spurious: Sequence[int],
                    key: Callable[[int, int, int], tuple] | None = None) -> list[tuple[int, int]] | None:
    """Backtracking over targets; returns ``[(spurious, target)]`` or ``None``.

    ``pm`` must be symmetric; ``universe`` is the set of admissible targets and
    of arguments every wanted set must attack.
    """
    n = len(pm)
    forbid = [0] * n  # forbid[x]: targets y with (x, y) forbidden
    wanted = list(wanted)
    # wanted sets not containing a given argument
    missing_from = [[w for w in wanted if not w >> a & 1] for a in range(n)]
    order = sorted(spurious, key=lambda m: (-bin(m).count("1"), m))

    def ok_after(t: int, sources: int) -> bool:
        for w in missing_from[t]:
            if not w & sources:
                continue
            if not any(not pm[s] >> t & 1 and not forbid[s] >> t & 1 for s in bits(w)):
                return False
        return True

    def options(T: int) -> list[tuple[int, int]]:
        res = []
        for t in bits(universe & ~T):
            src = T & ~pm[t]
            if forbid[t] & src:  # would need both (s,t) and (t,s) forbidden
                continue
            res.append((t, src))
        if key is not None:
            res.sort(key=lambda ts: key(T, ts[0], ts[1]))
        else:
            res.sort(key=lambda ts: (bin(ts[1] & ~_already(ts[0], ts[1])).count("1"), ts[0]))
        return res

    def _already(t: int, src: int) -> int:
        return sum(1 << s for s in bits(src) if forbid[s] >> t & 1)

    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        T = order[i]
        for t, src in options(T):
            saved = [(s, forbid[s]) for s in bits(src)]
            for s in bits(src):
                forbid[s] |= 1 << t
            if ok_after(t, src):
                chosen.append((T, t))
                if rec(i + 1):
                    return True
                chosen.pop()
            for s, v in saved:
                forbid[s] = v
        return False

    # wanted sets must attack every outside argument before anything is forbidden
    for w in wanted:
        for a in bits(universe & ~w):
            if not w & ~pm[a]:
                return None
    return chosen if rec(0) else None


def _induced(pm: list[int], assignment: list[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    return frozenset((s, t) for T, t in assignment for s in bits(T & ~pm[t]))


def find_exclusion_mapping(S: ExtensionSet) -> ExclusionMapping | None:
    """Antisymmetric exclusion mapping satisfying the independence condition, if any."""
    pm = pair_masks(S)
    wanted = set(S.members)
    spurious = [m for m in plus_masks(S) if m not in wanted]
    assignment = _mapping_search(S.args, pm, S.members, spurious)
    if assignment is None:
        return None
    return ExclusionMapping(S.universe, tuple(assignment), _induced(pm, assignment))


def is_independent(S: ExtensionSet) -> bool:
    return find_exclusion_mapping(S) is not None


def _check_independence(S: ExtensionSet, pm: list[int], induced: frozenset[tuple[int, int]]) -> bool:
    if any((b, a) in induced for a, b in induced):
        return False
    for w in S.members:
        for a in bits(S.args & ~w):
            if not any(not pm[s] >> a & 1 and (s, a) not in induced for s in bits(w)):
                return False
    return True


def canonical_cf_af(S: ExtensionSet) -> ArgumentationFramework:
    """Framework on ``Arg`` attacking exactly along the unpaired argument pairs."""
    if not len(S) or not S.args:
        raise ValueError("canonical framework needs a non-empty extension-set with arguments")
    T = S.compact_universe()
    pm = pair_masks(T)
    n = len(T.universe)
    atts = frozenset((i, j) for i in range(n) for j in range(n) if not pm[i] >> j & 1)
    return ArgumentationFramework(T.universe, atts)


def realize_stable_compact(S: ExtensionSet) -> ArgumentationFramework | None:
    """Compact framework with exactly ``S`` as stable extensions, or ``None`` if no mapping exists."""
    if not len(S) or not S.args:
        raise ValueError("realization needs a non-empty extension-set with arguments")
    T = S.compact_universe()
    pm = pair_masks(T)
    plus = plus_masks(T)
    wanted = set(T.members)
    if not wanted <= set(plus):
        raise ValueError("extension-set is not contained in its maximal paired sets")
    spurious = [m for m in plus if m not in wanted]
    induced = None
    if len(T) <= 3 and len(spurious) == 1:
        bad = spurious[0]
        first = T.members[0]
        t = next(bits(first & ~bad))
        cand = _induced(pm, [(bad, t)])
        if _check_independence(T, pm, cand):
            induced = cand
    if induced is None:
        assignment = _mapping_search(T.args, pm, T.members, spurious)
        if assignment is None:
            return None
        induced = _induced(pm, assignment)
    base = canonical_cf_af(T)
    F = ArgumentationFramework(base.names, base.attacks - induced)
    if set(enumerate_masks(F, Semantics.STB)) != wanted:
        raise AssertionError("constructed framework does not realize the extension-set")
    return F


# ---------------------------------------------------------------------------
# conflict-explicit frameworks

def is_conflict_explicit(F: ArgumentationFramework, sigma: Semantics | str = Semantics.STB,
                         reflexive: bool = True) -> bool:
    """Every pair of arguments that never co-occur is linked by an attack."""
    exts = enumerate_masks(F, sigma)
    pm = [0] * len(F)
    for e in exts:
        for i in bits(e):
            pm[i] |= e
    for i in range(len(F)):
        unpaired = F.full & ~pm[i] & ~(1 << i)
        if unpaired & ~F.conflicts[i]:
            return False
        if reflexive and not pm[i] >> i & 1 and not F.loops >> i & 1:
            return False
    return True


def make_conflict_explicit(F: ArgumentationFramework, sigma: Semantics | str = Semantics.STB,
                           guard: int = DEFAULT_EXPLICIT_GUARD) -> ArgumentationFramework | None:
    """A stable-equivalent, conflict-explicit framework on the same arguments, or ``None``.

    Attacks are only ever placed between arguments that never co-occur.  The
    search picks, for each spurious maximal paired set, an argument it must
    not attack (arguments in no extension included); the result keeps as
    many of the original attacks as the choice allows.
    """
    if as_semantics(sigma) is not Semantics.STB:
        raise ValueError("conflict-explicit repair is implemented for stable semantics only")
    n = len(F)
    exts = enumerate_masks(F, Semantics.STB)
    pm = [0] * n
    args = 0
    for e in exts:
        args |= e
        for i in bits(e):
            pm[i] |= e
    adj = [p & ~(1 << i) for i, p in enumerate(pm)]
    plus = maximal_cliques(adj, args)
    wanted = set(exts)
    spurious = [m for m in plus if m not in wanted]
    space = 1
    for T in spurious:
        space *= bin(F.full & ~T).count("1")
    if space > guard:
        raise ValueError(f"search space {space} exceeds guard {guard}")
    out = F.out

    def key(T: int, t: int, src: int) -> tuple:
        broken = sum(1 for s in bits(src) if out[s] >> t & 1)
        return (broken, bin(src).count("1"), t)

    assignment = _mapping_search(F.full, pm, exts, spurious, key=key)
    if assignment is None:
        return None
    forbidden = _induced(pm, assignment)
    atts = {p for p in F.attacks if p not in forbidden}
    for x in range(n):
        for y in range(x + 1, n):
            if pm[x] >> y & 1 or (x, y) in atts or (y, x) in atts:
                continue
            atts.add((x, y) if (x, y) not in forbidden else (y, x))
    for w in exts:
        for a in bits(F.full & ~w):
            if not any((s, a) in atts for s in bits(w)):
                s = next(s for s in bits(w) if not pm[s] >> a & 1 and (s, a) not in forbidden)
                atts.add((s, a))
    for y in bits(F.full & ~args):
        atts.add((y, y))
    G = ArgumentationFramework(F.names, frozenset(atts))
    if set(enumerate_masks(G, Semantics.STB)) != wanted or not is_conflict_explicit(G, Semantics.STB):
        raise AssertionError("conflict-explicit repair failed verification")
    return G


def stb_of_conflict_explicit_is_independent(F: ArgumentationFramework) -> bool:
    """Independence of the stable extensions of a compact conflict-explicit framework."""
    exts = enumerate_masks(F, Semantics.STB)
    cred = 0
    for e in exts:
        cred |= e
    if cred != F.full:
        raise ValueError("framework is not compact under stable semantics")
    if not is_conflict_explicit(F, Semantics.STB):
        raise ValueError("framework is not conflict-explicit under stable semantics")
    return is_independent(ExtensionSet.from_framework(F, exts))


# ---------------------------------------------------------------------------
# exhaustive harness

def _ec_chunk(job: tuple[int, Sequence[int]]) -> tuple[int, int, int, list[str]]:
    n, codes = job
    tested = repaired = explicit = 0
    cex: list[str] = []
    for c in codes:
        F = code_to_af(n, c)
        tested += 1
        if is_conflict_explicit(F):
            explicit += 1
        G = make_conflict_explicit(F)
        if G is None:
            cex.append(to_apx(F))
        else:
            repaired += 1
    return tested, repaired, explicit, cex


def ec_counterexample_search(n_max: int = 4, threads: int = 1, chunk: int = 256) -> dict:
    """Try to repair every framework with at most ``n_max`` arguments.

    For ``n <= 4`` one framework per isomorphism class is tested; ``n = 5``
    falls back to all labelled frameworks, which is very slow.
    """
    if n_max > EC_SEARCH_LIMIT:
        raise ValueError(f"exhaustive search limited to n <= {EC_SEARCH_LIMIT}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    start = time.perf_counter()
    jobs = []
    for n in range(1, n_max + 1):
        codes: Sequence[int] = iso_class_codes(n) if n <= 4 else range(1 << (n * n))
        for i in range(0, len(codes), chunk):
            jobs.append((n, codes[i:i + chunk]))
    workers = (os.cpu_count() or 1) if threads == 0 else threads
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_ec_chunk, jobs))
    else:
        results = [_ec_chunk(j) for j in jobs]
    tested = sum(r[0] for r in results)
    repaired = sum(r[1] for r in results)
    explicit = sum(r[2] for r in results)
    cex = sorted(x for r in results for x in r[3])
    return {
        "n_max": n_max,
        "tested": tested,
        "repaired": repaired,
        "already_explicit": explicit,
        "counterexamples": cex,
        "wall_time_ms": round((time.perf_counter() - start) * 1000),
    }
