"""Extension enumeration and verification for the standard semantics.

Fast paths work on bit masks: naive sets are the maximal independent sets of
the conflict graph (Bron-Kerbosch with pivoting), stable and stage extensions
are filtered from them, admissible sets come from a pruned backtracking search
and preferred / semi-stable extensions are filtered from those.
:func:`oracle_enumerate` re-derives everything from the plain definitions by
scanning all subsets and is only meant as a test oracle.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .core import ArgumentationFramework, FrameworkError, SetLike, bits


class Semantics(str, enum.Enum):
    CF = "cf"
    ADM = "adm"
    NAIVE = "naive"
    STB = "stb"
    STAGE = "stage"
    SEM = "sem"
    PREF = "pref"

    def __str__(self) -> str:
        return self.value


# the five semantics compactness is defined for
MAIN_SEMANTICS = (Semantics.NAIVE, Semantics.STB, Semantics.STAGE, Semantics.SEM, Semantics.PREF)


def as_semantics(sigma: Semantics | str) -> Semantics:
    try:
        return Semantics(sigma)
    except ValueError:
        raise ValueError(f"unknown semantics {sigma!r}") from None


# ---------------------------------------------------------------------------
# extension-sets

@dataclass(frozen=True, eq=False)
class ExtensionSet:
    """A finite family of argument sets over an ordered name universe.

    ``members`` are masks over ``universe``, deduplicated and sorted.  Two
    extension-sets compare equal iff they contain the same sets of names,
    regardless of universe order or unused universe entries.
    """

    universe: tuple[str, ...]
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("duplicate names in universe")

    @classmethod
    def of(cls, sets: Iterable[Iterable[str]], universe: Iterable[str] | None = None) -> "ExtensionSet":
        sets = [frozenset(s) for s in sets]
        if universe is None:
            universe = sorted(set().union(*sets)) if sets else []
        universe = tuple(universe)
        index = {n: i for i, n in enumerate(universe)}
        masks = []
        for s in sets:
            m = 0
            for n in s:
                if n not in index:
                    raise ValueError(f"{n!r} not in universe")
                m |= 1 << index[n]
            masks.append(m)
        return cls(universe, tuple(masks))

    @classmethod
    def from_framework(cls, F: ArgumentationFramework, masks: Iterable[int]) -> "ExtensionSet":
        return cls(F.names, tuple(masks))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[frozenset[str]]:
        for m in self.members:
            yield self.names_of(m)

    def __contains__(self, item: object) -> bool:
        return frozenset(item) in self.sets()  # type: ignore[arg-type]

    def names_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.universe[i] for i in bits(mask))

    def ordered_names(self, mask: int) -> list[str]:
        return [self.universe[i] for i in bits(mask)]

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for n in names:
            m |= 1 << self.universe.index(n)
        return m

    def sets(self) -> frozenset[frozenset[str]]:
        return frozenset(self)

    @property
    def args(self) -> int:
        m = 0
        for s in self.members:
            m |= s
        return m

    def arg_names(self) -> list[str]:
        return self.ordered_names(self.args)

    def compact_universe(self) -> "ExtensionSet":
        """Same family over the universe ``Arg`` (order kept)."""
        keep = list(bits(self.args))
        remap = {old: new for new, old in enumerate(keep)}
        masks = []
        for m in self.members:
            nm = 0
            for i in bits(m):
                nm |= 1 << remap[i]
            masks.append(nm)
        return ExtensionSet(tuple(self.universe[i] for i in keep), tuple(masks))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtensionSet):
            return self.sets() == other.sets()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.sets())

    def __repr__(self) -> str:
        return "ExtensionSet(" + ", ".join(format_extension(self.ordered_names(m)) for m in self.members) + ")"

    def to_text(self) -> str:
        return "".join(format_extension(self.ordered_names(m)) + "\n" for m in self.members)


def format_extension(names: Iterable[str]) -> str:
    return "{" + ",".join(names) + "}"


_EXT_RE = re.compile(r"\{([^{}]*)\}\Z")


def parse_extensions(text: str) -> ExtensionSet:
    """Read one ``{a,b,c}`` per line; ``#`` starts a comment."""
    universe: list[str] = []
    seen: set[str] = set()
    sets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _EXT_RE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected '{{a,b,...}}', got {line!r}")
        inner = m.group(1).strip()
        names = [p.strip() for p in inner.split(",")] if inner else []
        for n in names:
            if not re.match(r"[A-Za-z][A-Za-z0-9_']*\Z", n):
                raise ValueError(f"line {lineno}: bad argument name {n!r}")
            if n not in seen:
                seen.add(n)
                universe.append(n)
        sets.append(names)
    return ExtensionSet.of(sets, universe)


# ---------------------------------------------------------------------------
# search primitives

def maximal_cliques(adj: Iterable[int], candidates: int) -> list[int]:
    """All maximal cliques within ``candidates`` of the graph given by ``adj``."""
    adj = list(adj)
    found: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P:
            if not X:
                found.append(R)
            return
        pivot = max(bits(P | X), key=lambda u: (P & adj[u]).bit_count())
        for v in bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    expand(0, candidates, 0)
    return found


def _compat(F: ArgumentationFramework) -> list[int]:
    usable = F.full & ~F.loops
    return [usable & ~c & ~(1 << i) for i, c in enumerate(F.conflicts)]


def naive_sets(F: ArgumentationFramework) -> list[int]:
    return maximal_cliques(_compat(F), F.full & ~F.loops)


def conflict_free_sets(F: ArgumentationFramework) -> list[int]:
    compat = _compat(F)
    found: list[int] = []

    def rec(S: int, cand: int) -> None:
        if not cand:
            found.append(S)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(S | low, cand & compat[v])
        rec(S, cand & ~low)

    rec(0, F.full & ~F.loops)
    return found


def _admissible_search(F: ArgumentationFramework, must_in: int = 0, cover: int = 0,
                       first_only: bool = False) -> list[int]:
    """Admissible sets containing ``must_in`` whose range includes ``cover``."""
    compat = _compat(F)
    conflicts = F.conflicts
    if must_in & F.loops or F.attacked_by(must_in) & must_in:
        return []
    und = F.full & ~F.loops & ~must_in
    for i in bits(must_in):
        und &= ~conflicts[i]
    found: list[int] = []

    def rec(IN: int, UND: int) -> bool:
        poss = IN | UND
        poss_att = F.attacked_by(poss)
        threats = F.attackers_of(IN)
        if threats & ~poss_att or cover & ~(poss | poss_att):
            return False
        if not UND:
            if threats & ~F.attacked_by(IN) == 0 and cover & ~(IN | F.attacked_by(IN)) == 0:
                found.append(IN)
                return first_only
            return False
        low = UND & -UND
        v = low.bit_length() - 1
        if rec(IN | low, UND & compat[v]):
            return True
        return rec(IN, UND & ~low)

    rec(must_in, und)
    return found


def _find_cf_covering(F: ArgumentationFramework, must_in: int, cover: int) -> int | None:
    """Some conflict-free ``T`` containing ``must_in`` with ``cover`` inside its range."""
    compat = _compat(F)
    if must_in & F.loops or F.attacked_by(must_in) & must_in:
        return None
    cand = F.full & ~F.loops & ~must_in
    for i in bits(must_in):
        cand &= compat[i]
    inc = F.inc

    def rec(T: int, rng: int, cand: int) -> int | None:
        todo = cover & ~rng
        if not todo:
            return T
        u = (todo & -todo).bit_length() - 1
        options = (inc[u] | (1 << u)) & cand
        for v in bits(options):
            got = rec(T | 1 << v, rng | 1 << v | F.out[v], cand & compat[v])
            if got is not None:
                return got
        return None

    return rec(must_in, must_in | F.attacked_by(must_in), cand)


def _maximal(masks: list[int]) -> list[int]:
    keep: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in keep):
            keep.append(m)
    return keep


def _range_maximal(F: ArgumentationFramework, masks: list[int]) -> list[int]:
    ranges = {m: m | F.attacked_by(m) for m in masks}
    top = set(_maximal(list(ranges.values())))
    return [m for m in masks if ranges[m] in top]


# ---------------------------------------------------------------------------
# public API

def enumerate_masks(F: ArgumentationFramework, sigma: Semantics | str) -> list[int]:
    """Extensions of ``F`` under ``sigma`` as a sorted list of masks."""
    sigma = as_semantics(sigma)
    if sigma is Semantics.CF:
        res = conflict_free_sets(F)
    elif sigma is Semantics.ADM:
        res = _admissible_search(F)
    elif sigma in (Semantics.NAIVE, Semantics.STB, Semantics.STAGE):
        res = naive_sets(F)
        if sigma is Semantics.STB:
            res = [m for m in res if m | F.attacked_by(m) == F.full]
        elif sigma is Semantics.STAGE:
            res = _range_maximal(F, res)
    else:
        res = _maximal(_admissible_search(F))
        if sigma is Semantics.SEM:
            res = _range_maximal(F, res)
    return sorted(res)


def enumerate_extensions(F: ArgumentationFramework, sigma: Semantics | str) -> ExtensionSet:
    return ExtensionSet.from_framework(F, enumerate_masks(F, sigma))


def verify(F: ArgumentationFramework, sigma: Semantics | str, E: SetLike) -> bool:
    """Decide ``E in sigma(F)`` without enumerating ``sigma(F)``."""
    sigma = as_semantics(sigma)
    e = F.mask(E)
    attacked = F.attacked_by(e)
    if attacked & e:
        return False
    rng = e | attacked
    if sigma is Semantics.CF:
        return True
    if sigma is Semantics.STB:
        return rng == F.full
    if sigma is Semantics.NAIVE:
        compat = _compat(F)
        free = F.full & ~F.loops & ~e
        for i in bits(e):
            free &= compat[i]
        return free == 0
    if sigma is Semantics.STAGE:
        return all(_find_cf_covering(F, 0, rng | 1 << u) is None for u in bits(F.full & ~rng))
    admissible = F.attackers_of(e) & ~attacked == 0
    if sigma is Semantics.ADM or not admissible:
        return admissible
    if sigma is Semantics.PREF:
        compat = _compat(F)
        free = F.full & ~F.loops & ~e
        for i in bits(e):
            free &= compat[i]
        return all(not _admissible_search(F, e | 1 << a, first_only=True) for a in bits(free))
    # semi-stable
    return all(not _admissible_search(F, 0, rng | 1 << u, first_only=True) for u in bits(F.full & ~rng))


def credulous(F: ArgumentationFramework, sigma: Semantics | str, a: str) -> bool:
    i = F.arg(a)
    return any(m >> i & 1 for m in enumerate_masks(F, sigma))


def skeptical(F: ArgumentationFramework, sigma: Semantics | str, a: str) -> bool:
    """Membership in every extension; vacuously true if there are none."""
    i = F.arg(a)
    return all(m >> i & 1 for m in enumerate_masks(F, sigma))


# ---------------------------------------------------------------------------
# reference oracle

ORACLE_LIMIT = 22


def oracle_enumerate(F: ArgumentationFramework, sigma: Semantics | str) -> ExtensionSet:
    """Subset scan straight from the definitions, on plain Python sets."""
    sigma = as_semantics(sigma)
    n = len(F)
    if n > ORACLE_LIMIT:
        raise FrameworkError(f"oracle limited to {ORACLE_LIMIT} arguments, got {n}")
    A = list(range(n))
    R = set(F.attacks)

    def cf(S: frozenset) -> bool:
        return not any((a, b) in R for a in S for b in S)

    def rng(S: frozenset) -> frozenset:
        return S | {b for b in A if any((s, b) in R for s in S)}

    def adm(S: frozenset) -> bool:
        return cf(S) and all(any((s, b) in R for s in S) for a in S for b in A if (b, a) in R)

    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(A, k)]
    cfs = [S for S in subsets if cf(S)]
    adms = [S for S in cfs if adm(S)]
    if sigma is Semantics.CF:
        res = cfs
    elif sigma is Semantics.ADM:
        res = adms
    elif sigma is Semantics.NAIVE:
        res = [S for S in cfs if not any(T > S for T in cfs)]
    elif sigma is Semantics.STB:
        res = [S for S in cfs if all(any((s, a) in R for s in S) for a in A if a not in S)]
    elif sigma is Semantics.STAGE:
        res = [S for S in cfs if not any(rng(T) > rng(S) for T in cfs)]
    elif sigma is Semantics.PREF:
        res = [S for S in adms if not any(T > S for T in adms)]
    else:
        res = [S for S in adms if not any(rng(T) > rng(S) for T in adms)]
    return ExtensionSet.of([[F.names[i] for i in S] for S in res], F.names)
