"""Argumentation frameworks, argument sets and APX text I/O.

Arguments are interned to dense indices in declaration order, and every
set of arguments is handled as an ``int`` bit mask over those indices
(bit ``i`` set means argument ``i`` is a member).  Public helpers accept
either a mask or an iterable of argument names wherever a set is expected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Union

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")

SetLike = Union[int, Iterable[str]]


class FrameworkError(ValueError):
    """Raised for malformed frameworks or references to unknown arguments."""


class APXSyntaxError(FrameworkError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite framework ``(A, R)``.

    ``names`` fixes the argument order (and thereby the bit assigned to each
    argument); ``attacks`` holds ``(attacker, target)`` index pairs.
    """

    names: tuple[str, ...]
    attacks: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.names:
            raise FrameworkError("a framework needs at least one argument")
        if len(set(self.names)) != len(self.names):
            dup = next(n for n in self.names if self.names.count(n) > 1)
            raise FrameworkError(f"duplicate argument {dup!r}")
        for n in self.names:
            if not NAME_RE.match(n):
                raise FrameworkError(f"invalid argument name {n!r}")
        size = len(self.names)
        for a, b in self.attacks:
            if not (0 <= a < size and 0 <= b < size):
                raise FrameworkError(f"attack ({a},{b}) outside framework")

    @classmethod
    def build(cls, names: Iterable[str], attacks: Iterable[tuple[str, str]] = ()) -> "ArgumentationFramework":
        """Construct from argument names and name pairs."""
        names = tuple(names)
        index = {n: i for i, n in enumerate(names)}
        pairs = set()
        for a, b in attacks:
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise FrameworkError(f"attack references undeclared argument {missing!r}")
            pairs.add((index[a], index[b]))
        return cls(names, frozenset(pairs))

    # -- derived structure -------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    @cached_property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    @cached_property
    def out(self) -> tuple[int, ...]:
        """``out[i]``: mask of arguments attacked by ``i``."""
        res = [0] * len(self.names)
        for a, b in self.attacks:
            res[a] |= 1 << b
        return tuple(res)

    @cached_property
    def inc(self) -> tuple[int, ...]:
        """``inc[i]``: mask of attackers of ``i``."""
        res = [0] * len(self.names)
        for a, b in self.attacks:
            res[b] |= 1 << a
        return tuple(res)

    @cached_property
    def loops(self) -> int:
        m = 0
        for a, b in self.attacks:
            if a == b:
                m |= 1 << a
        return m

    @cached_property
    def conflicts(self) -> tuple[int, ...]:
        """Neighbourhood in the underlying undirected graph (self excluded)."""
        return tuple((o | i) & ~(1 << k) for k, (o, i) in enumerate(zip(self.out, self.inc)))

    def attacked_by(self, mask: int) -> int:
        res = 0
        out = self.out
        for i in bits(mask):
            res |= out[i]
        return res

    def attackers_of(self, mask: int) -> int:
        res = 0
        inc = self.inc
        for i in bits(mask):
            res |= inc[i]
        return res

    # -- name <-> mask conversion -----------------------------------------

    def mask(self, members: SetLike) -> int:
        """Convert names (or an existing mask) into a mask, checking membership."""
        if isinstance(members, int):
            if members < 0 or members & ~self.full:
                raise FrameworkError("set contains arguments outside the framework")
            return members
        if isinstance(members, str):
            members = [members]
        m = 0
        for n in members:
            try:
                m |= 1 << self.index[n]
            except KeyError:
                raise FrameworkError(f"unknown argument {n!r}") from None
        return m

    def arg(self, name: str) -> int:
        """Index of a single argument."""
        try:
            return self.index[name]
        except KeyError:
            raise FrameworkError(f"unknown argument {name!r}") from None

    def names_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.names[i] for i in bits(mask))

    def ordered_names(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def attack_names(self) -> set[tuple[str, str]]:
        return {(self.names[a], self.names[b]) for a, b in self.attacks}

    def same_as(self, other: "ArgumentationFramework") -> bool:
        """Equality up to argument order."""
        return set(self.names) == set(other.names) and self.attack_names() == other.attack_names()

    def with_attacks(self, add: Iterable[tuple[str, str]] = (), remove: Iterable[tuple[str, str]] = ()) -> "ArgumentationFramework":
        atts = self.attack_names()
        atts |= set(add)
        atts -= set(remove)
        return ArgumentationFramework.build(self.names, sorted(atts))

    def __repr__(self) -> str:
        atts = sorted(self.attacks)
        shown = ", ".join(f"({self.names[a]},{self.names[b]})" for a, b in atts)
        return f"AF({{{', '.join(self.names)}}}, {{{shown}}})"


# ---------------------------------------------------------------------------
# basic set operations

def range_of(F: ArgumentationFramework, S: SetLike) -> int:
    """``S`` together with everything ``S`` attacks."""
    m = F.mask(S)
    return m | F.attacked_by(m)


def is_conflict_free(F: ArgumentationFramework, S: SetLike) -> bool:
    m = F.mask(S)
    return F.attacked_by(m) & m == 0


def defends(F: ArgumentationFramework, S: SetLike, a: str | int) -> bool:
    """True iff every attacker of ``a`` is attacked by ``S``."""
    m = F.mask(S)
    i = a if isinstance(a, int) else F.arg(a)
    if not 0 <= i < len(F):
        raise FrameworkError(f"argument index {i} outside framework")
    return F.inc[i] & ~F.attacked_by(m) == 0


def restriction(F: ArgumentationFramework, K: SetLike) -> ArgumentationFramework:
    """The sub-framework induced by ``K`` (argument order preserved)."""
    m = F.mask(K)
    if not m:
        raise FrameworkError("cannot restrict to an empty argument set")
    keep = list(bits(m))
    remap = {old: new for new, old in enumerate(keep)}
    atts = frozenset((remap[a], remap[b]) for a, b in F.attacks if a in remap and b in remap)
    return ArgumentationFramework(tuple(F.names[i] for i in keep), atts)


def weak_components(F: ArgumentationFramework) -> list[int]:
    """Weakly connected components as masks, ordered by smallest member."""
    seen = 0
    blocks = []
    conf = F.conflicts
    for start in range(len(F)):
        if seen >> start & 1:
            continue
        block = frontier = 1 << start
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= conf[i]
            frontier = nxt & ~block
            block |= frontier
        seen |= block
        blocks.append(block)
    return blocks


def is_connected(F: ArgumentationFramework) -> bool:
    return len(weak_components(F)) == 1


def symmetrize(F: ArgumentationFramework) -> ArgumentationFramework:
    return ArgumentationFramework(F.names, F.attacks | {(b, a) for a, b in F.attacks})


def deloop(F: ArgumentationFramework) -> ArgumentationFramework:
    return ArgumentationFramework(F.names, frozenset((a, b) for a, b in F.attacks if a != b))


def underlying_graph(F: ArgumentationFramework) -> set[frozenset[str]]:
    """Unordered edges of the symmetric, loop-free version of ``F``."""
    return {frozenset((F.names[a], F.names[b])) for a, b in F.attacks if a != b}


def disjoint_union(*frameworks: ArgumentationFramework) -> ArgumentationFramework:
    names: list[str] = []
    atts: set[tuple[int, int]] = set()
    for G in frameworks:
        off = len(names)
        names.extend(G.names)
        atts |= {(a + off, b + off) for a, b in G.attacks}
    return ArgumentationFramework(tuple(names), frozenset(atts))


def clique(names: Iterable[str]) -> ArgumentationFramework:
    """Symmetric, loop-free complete framework on ``names``."""
    names = tuple(names)
    k = len(names)
    return ArgumentationFramework(names, frozenset((i, j) for i in range(k) for j in range(k) if i != j))


# ---------------------------------------------------------------------------
# APX format

_STMT_RE = re.compile(r"\s*(arg|att)\s*\(([^()]*)\)\s*\.")


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse ``arg(x).`` / ``att(x,y).`` statements; ``%`` starts a comment."""
    names: list[str] = []
    declared: set[str] = set()
    raw_attacks: list[tuple[str, str, int]] = []

    # strip comments but keep line structure for error messages
    lines = [ln.split("%", 1)[0] for ln in text.splitlines()]
    body = "\n".join(lines)
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body):
            break
        line = body.count("\n", 0, pos) + 1
        m = _STMT_RE.match(body, pos)
        if not m:
            snippet = body[pos:pos + 20].split("\n", 1)[0]
            raise APXSyntaxError(f"cannot parse statement starting at {snippet!r}", line)
        kind, inner = m.group(1), m.group(2)
        parts = [p.strip() for p in inner.split(",")]
        if kind == "arg":
            if len(parts) != 1 or not NAME_RE.match(parts[0]):
                raise APXSyntaxError(f"bad argument declaration arg({inner})", line)
            if parts[0] in declared:
                raise APXSyntaxError(f"duplicate argument {parts[0]!r}", line)
            declared.add(parts[0])
            names.append(parts[0])
        else:
            if len(parts) != 2 or not all(NAME_RE.match(p) for p in parts):
                raise APXSyntaxError(f"bad attack att({inner})", line)
            raw_attacks.append((parts[0], parts[1], line))
        pos = m.end()

    for a, b, line in raw_attacks:
        for n in (a, b):
            if n not in declared:
                raise APXSyntaxError(f"attack references undeclared argument {n!r}", line)
    if not names:
        raise APXSyntaxError("no arguments declared", 1)
    return ArgumentationFramework.build(names, [(a, b) for a, b, _ in raw_attacks])


def to_apx(F: ArgumentationFramework, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"% {ln}" for ln in comment.splitlines())
    out.extend(f"arg({n})." for n in F.names)
    out.extend(f"att({F.names[a]},{F.names[b]})." for a, b in sorted(F.attacks))
    return "\n".join(out) + "\n"
