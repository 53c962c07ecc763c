"""Extension-count bounds, extremal frameworks and compact-realizability triage."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .analysis import component_masks, in_signature
from .core import ArgumentationFramework, bits, clique, disjoint_union, is_connected
from .digraphs import frameworks
from .semantics import ExtensionSet, Semantics, as_semantics, enumerate_masks

DEFAULT_EXHAUSTIVE_GUARD = 4


def sigma_max(n: int) -> int:
    """Largest possible number of extensions of a framework with ``n`` arguments."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return 1
    s, r = divmod(n, 3)
    if r == 0:
        return 3 ** s
    if r == 1:
        return 4 * 3 ** (s - 1)
    return 2 * 3 ** s


def sigma_max_con(n: int) -> int:
    """Largest possible number of extensions of a connected framework."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 5:
        return n
    s, r = divmod(n, 3)
    if r == 0:
        return 2 * 3 ** (s - 1) + 2 ** (s - 1)
    if r == 1:
        return 3 ** s + 2 ** (s - 1)
    return 4 * 3 ** (s - 1) + 3 * 2 ** (s - 2)


def sigma_max_2(n: int) -> int:
    """Second largest possible number of extensions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n <= 7:
        return sigma_max(n) - 1
    factor = Fraction(11, 12) if n % 3 == 1 else Fraction(8, 9)
    v = sigma_max(n) * factor
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral second maximum for n={n}")
    return int(v)


@dataclass(frozen=True)
class CountProfile:
    n: int
    sigma_max: int
    sigma_max_con: int
    sigma_max_2: int | None

    def as_dict(self) -> dict:
        return {"n": self.n, "sigma_max": self.sigma_max, "sigma_max_con": self.sigma_max_con,
                "sigma_max_2": self.sigma_max_2}


def count_profile(n: int) -> CountProfile:
    return CountProfile(n, sigma_max(n), sigma_max_con(n), sigma_max_2(n) if n >= 1 else None)


def _clique_sizes(n: int) -> list[int]:
    s, r = divmod(n, 3)
    if r == 0:
        return [3] * s
    if r == 1:
        return [3] * (s - 1) + [4]
    return [3] * s + [2]


def extremal_af(n: int) -> ArgumentationFramework:
    """Disjoint union of symmetric cliques with the maximum number of extensions."""
    if n < 2:
        raise ValueError("extremal framework needs n >= 2")
    parts = []
    for k, size in enumerate(_clique_sizes(n)):
        parts.append(clique([f"k{k + 1}_{j + 1}" for j in range(size)]))
    return disjoint_union(*parts)


# ---------------------------------------------------------------------------
# achievable counts

@lru_cache(maxsize=None)
def _achievable(n: int, connected: bool, compact: bool, sigma: Semantics) -> frozenset[int]:
    out = set()
    for F in frameworks(n, up_to_iso=True):
        if connected and not is_connected(F):
            continue
        exts = enumerate_masks(F, sigma)
        if compact:
            cred = 0
            for e in exts:
                cred |= e
            if cred != F.full:
                continue
        out.add(len(exts))
    return frozenset(out)


def achievable_counts(n: int, connected: bool = True, compact: bool = True,
                      sigma: Semantics | str = Semantics.STB,
                      guard: int = DEFAULT_EXHAUSTIVE_GUARD) -> set[int]:
    """Exact set of extension counts over all frameworks on ``n`` arguments."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > guard:
        raise ValueError(f"exhaustive search limited to n <= {guard}")
    if n > 5:
        raise ValueError("exhaustive search is not supported beyond n = 5")
    return set(_achievable(n, connected, compact, as_semantics(sigma)))


# ---------------------------------------------------------------------------
# non-compact count realization

def _exclude(F: ArgumentationFramework, removed: Iterable[int]) -> ArgumentationFramework:
    """Add one self-attacking argument per removed extension, attacked by everything outside it."""
    names = list(F.names)
    atts = set(F.attacks)
    base = F.full
    for k, e in enumerate(removed):
        z = len(names)
        names.append(f"z{k + 1}")
        atts.add((z, z))
        for a in bits(base & ~e):
            atts.add((a, z))
    return ArgumentationFramework(tuple(names), frozenset(atts))


def realize_count_noncompact(n: int, k: int) -> ArgumentationFramework:
    """A framework whose stable extensions number ``k`` and jointly use exactly ``n`` arguments."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= k <= sigma_max(n):
        raise ValueError(f"k must lie in [1, {sigma_max(n)}]")
    if k <= n:
        # k mutually attacking arguments plus isolated ones
        parts = [clique([f"k{j + 1}" for j in range(k)])]
        parts += [clique([f"i{j + 1}"]) for j in range(n - k)]
        result = disjoint_union(*parts)
    else:
        base = extremal_af(n)
        exts = enumerate_masks(base, Semantics.STB)
        keep = _covering_choice(exts, k, base.full)
        result = _exclude(base, [e for e in exts if e not in keep])
    stb = enumerate_masks(result, Semantics.STB)
    used = 0
    for e in stb:
        used |= e
    if len(stb) != k or bin(used).count("1") != n:
        raise AssertionError("count realization failed verification")
    return result


def _covering_choice(exts: list[int], k: int, full: int) -> set[int]:
    """Pick ``k`` extensions whose union is ``full``: greedy cover first, then fill up."""
    chosen: list[int] = []
    covered = 0
    while covered != full:
        best = max(exts, key=lambda e: bin(e & ~covered).count("1"))
        chosen.append(best)
        covered |= best
    if len(chosen) > k:
        raise AssertionError("cover needs more extensions than requested")
    for e in exts:
        if len(chosen) == k:
            break
        if e not in chosen:
            chosen.append(e)
    return set(chosen)


# ---------------------------------------------------------------------------
# triage

@dataclass(frozen=True)
class TriageVerdict:
    outcome: str  # "impossible" | "realized" | "unknown"
    rule: str | None = None
    reason: str = ""
    framework: ArgumentationFramework | None = None

    @property
    def impossible(self) -> bool:
        return self.outcome == "impossible"

    def as_dict(self) -> dict:
        from .core import to_apx
        return {
            "outcome": self.outcome,
            "rule": self.rule,
            "reason": self.reason,
            "framework": to_apx(self.framework) if self.framework is not None else None,
        }


def _impossible(rule: str, reason: str) -> TriageVerdict:
    return TriageVerdict("impossible", rule, reason)


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % f == 0:
            return False
        f += 1
    return True


def prime_factor_count(k: int) -> int:
    """Number of prime factors of ``k`` counted with multiplicity."""
    count, f = 0, 2
    while f * f <= k:
        while k % f == 0:
            k //= f
            count += 1
        f += 1
    return count + (1 if k > 1 else 0)


def _component_factor_options(size: int, sigma: Semantics, guard: int, target: int) -> set[int] | None:
    """Possible counts of one connected compact component; ``None`` means interval bounds."""
    if size <= guard:
        return achievable_counts(size, True, True, sigma, guard=guard)
    return None


def product_realizable(total: int, sizes: list[int], sigma: Semantics = Semantics.STB,
                       guard: int = DEFAULT_EXHAUSTIVE_GUARD) -> bool:
    """Can ``total`` be written as a product with one admissible factor per component size?"""
    options = [(_component_factor_options(s, sigma, guard, total), s) for s in sorted(sizes, reverse=True)]

    def rec(i: int, rest: int) -> bool:
        if i == len(options):
            return rest == 1
        exact, size = options[i]
        if exact is not None:
            cands: Iterable[int] = (p for p in exact if p >= 1 and rest % p == 0)
        else:
            hi = min(sigma_max_con(size), rest)
            cands = (p for p in range(2, hi + 1) if rest % p == 0)
        return any(rec(i + 1, rest // p) for p in cands)

    return rec(0, total)


def triage(S: ExtensionSet, sigma: Semantics | str = Semantics.STB,
           guard: int = DEFAULT_EXHAUSTIVE_GUARD) -> TriageVerdict:
    """Decide (soundly, possibly inconclusively) whether ``S`` is compactly realizable."""
    sigma = as_semantics(sigma)
    count = len(S)
    n = bin(S.args).count("1")
    hi = sigma_max(n)
    if count > hi:
        return _impossible("sigma-max", f"{count} extensions exceed the maximum {hi} for {n} arguments")
    if n >= 1:
        hi2 = sigma_max_2(n)
        if hi2 < count < hi:
            return _impossible("sigma-max-2-gap",
                               f"{hi2} < {count} < {hi}: no framework on {n} arguments has this many extensions")
    blocks = component_masks(S)
    big = [bin(b).count("1") for b in blocks if b & (b - 1)]
    if count % 2 == 1 and 2 in big:
        return _impossible("parity", f"odd count {count} with a component of size 2 (which forces an even factor)")
    con = sigma_max_con(n)
    if _is_prime(count) and count > con:
        return _impossible("prime", f"{count} is prime and exceeds the connected maximum {con} for {n} arguments")
    omega = prime_factor_count(count) if count >= 1 else 0
    if count >= 1 and omega < len(big):
        return _impossible("factorization",
                           f"{count} has {omega} prime factor(s) but there are {len(big)} components of size >= 2")
    if count >= 1 and big and not product_realizable(count, big, sigma, guard):
        return _impossible("product",
                           f"{count} is not a product of achievable counts for component sizes {sorted(big)}")
    if n == 0:
        return _impossible("degenerate", "a compact framework needs at least one argument occurring in an extension")
    if not in_signature(S, sigma):
        return _impossible("signature", f"the extension-set violates the {sigma} signature conditions")
    if sigma is Semantics.STB:
        from .realization import realize_stable_compact
        F = realize_stable_compact(S)
        if F is not None:
            return TriageVerdict("realized", None, "compact framework constructed and verified", F)
    return TriageVerdict("unknown", None, "no impossibility rule applies and no construction was found")
