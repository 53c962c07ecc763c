"""Exhaustive enumeration of small frameworks, optionally up to isomorphism.

A framework on ``n`` arguments is encoded as an ``n*n``-bit integer where
bit ``i*n + j`` stands for the attack ``(i, j)``; self-attacks included.
The canonical code of a framework is the minimum code over all argument
permutations, which is cheap for ``n <= 4`` via byte-wise lookup tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .core import ArgumentationFramework

DEFAULT_NAMES = "abcdefghij"
_CHUNK = 8


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    nbits = n * n
    chunks = (nbits + _CHUNK - 1) // _CHUNK
    tables = []
    for p in permutations(range(n)):
        target = [p[k // n] * n + p[k % n] for k in range(nbits)]
        per_chunk = []
        for c in range(chunks):
            width = min(_CHUNK, nbits - c * _CHUNK)
            row = []
            for val in range(1 << width):
                out = 0
                for b in range(width):
                    if val >> b & 1:
                        out |= 1 << target[c * _CHUNK + b]
                row.append(out)
            per_chunk.append(tuple(row))
        tables.append(tuple(per_chunk))
    return tuple(tables)


def canonical_code(n: int, code: int) -> int:
    best = code
    mask = (1 << _CHUNK) - 1
    for tabs in _perm_tables(n):
        c = 0
        rest = code
        for t in tabs:
            c |= t[rest & mask]
            rest >>= _CHUNK
        if c < best:
            best = c
    return best


@lru_cache(maxsize=None)
def iso_class_codes(n: int) -> tuple[int, ...]:
    """One canonical code per isomorphism class of frameworks on ``n`` arguments."""
    if n > 4:
        raise ValueError("isomorphism reduction is only tabulated for n <= 4")
    return tuple(c for c in range(1 << (n * n)) if canonical_code(n, c) == c)


def code_to_af(n: int, code: int, names: str | tuple[str, ...] = DEFAULT_NAMES) -> ArgumentationFramework:
    atts = frozenset((k // n, k % n) for k in range(n * n) if code >> k & 1)
    return ArgumentationFramework(tuple(names[:n]), atts)


def af_to_code(F: ArgumentationFramework) -> int:
    n = len(F)
    return sum(1 << (a * n + b) for a, b in F.attacks)


def frameworks(n: int, up_to_iso: bool = True) -> Iterator[ArgumentationFramework]:
    """All frameworks on ``n`` arguments; one per isomorphism class if requested (n <= 4)."""
    if n < 1:
        return
    if up_to_iso and n <= 4:
        codes: range | tuple[int, ...] = iso_class_codes(n)
    else:
        codes = range(1 << (n * n))
    for c in codes:
        yield code_to_af(n, c)
