"""Compactness checks and the catalog of witness frameworks."""

from __future__ import annotations

from importlib import resources

from .core import ArgumentationFramework, FrameworkError, parse_apx
from .semantics import MAIN_SEMANTICS, Semantics, as_semantics, enumerate_masks

WITNESS_IDS = (
    "intro-F1",
    "sect4-F2",
    "fig2-F",
    "fig2-Fprime",
    "longG-semNotStage",
    "3-cycle",
    "fig3-prefWitness",
    "fig4-orientation",
    "fig5-ec",
    "sect52-cd",
)


def credulous_mask(F: ArgumentationFramework, sigma: Semantics | str) -> int:
    m = 0
    for e in enumerate_masks(F, sigma):
        m |= e
    return m


def is_compact(F: ArgumentationFramework, sigma: Semantics | str) -> bool:
    """Every argument belongs to some extension."""
    return credulous_mask(F, sigma) == F.full


def compact_skeptical(F: ArgumentationFramework, sigma: Semantics | str, a: str) -> bool:
    """Skeptical acceptance in a compact framework: ``a`` must be isolated."""
    sigma = as_semantics(sigma)
    if not is_compact(F, sigma):
        raise FrameworkError(f"framework is not compact under {sigma}")
    i = F.arg(a)
    return F.out[i] == 0 and F.inc[i] == 0


def witness(wid: str) -> ArgumentationFramework:
    if wid not in WITNESS_IDS:
        raise KeyError(f"unknown witness {wid!r}; choose from {', '.join(WITNESS_IDS)}")
    return parse_apx(witness_apx(wid))


def witness_apx(wid: str) -> str:
    if wid not in WITNESS_IDS:
        raise KeyError(f"unknown witness {wid!r}")
    return resources.files("caf.data.witnesses").joinpath(f"{wid}.apx").read_text(encoding="utf-8")


# expected compactness per witness; None means the claim is not made
_CLAIMS: dict[str, dict[Semantics, bool]] = {
    "fig2-F": {Semantics.PREF: True, Semantics.SEM: True, Semantics.STAGE: True, Semantics.STB: False},
    "fig2-Fprime": {Semantics.PREF: True, Semantics.SEM: False, Semantics.STAGE: False},
    "longG-semNotStage": {Semantics.SEM: True, Semantics.STAGE: False},
    "3-cycle": {Semantics.STAGE: True, Semantics.PREF: False, Semantics.SEM: False},
}


def class_relation_report() -> list[dict]:
    """Recompute compactness of the class-separating witnesses under all five semantics."""
    rows = []
    for wid, claims in _CLAIMS.items():
        F = witness(wid)
        observed = {str(s): is_compact(F, s) for s in MAIN_SEMANTICS}
        mismatches = [str(s) for s, v in claims.items() if observed[str(s)] != v]
        rows.append({
            "witness": wid,
            "compact": observed,
            "expected": {str(s): v for s, v in claims.items()},
            "agrees": not mismatches,
            "mismatches": mismatches,
        })
    return rows
