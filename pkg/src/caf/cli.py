"""``caf`` command-line interface.

Exit codes: 0 yes/success, 1 no/negative verdict, 2 error, 3 unknown.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable

from . import analysis, compact, counting, realization, reductions
from .core import FrameworkError, parse_apx, to_apx
from .semantics import (MAIN_SEMANTICS, ExtensionSet, Semantics, enumerate_extensions, format_extension,
                        parse_extensions, verify)

YES, NO, ERROR, UNKNOWN = 0, 1, 2, 3
SCHEMA_VERSION = "v1"


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None


def _load_af(path: str):
    return parse_apx(_read(path))


def _load_exts(path: str) -> ExtensionSet:
    return parse_extensions(_read(path))


def _sets(S: ExtensionSet) -> list[list[str]]:
    return [S.ordered_names(m) for m in S.members]


class Output:
    def __init__(self, as_json: bool, command: str):
        self.as_json = as_json
        self.command = command

    def emit(self, payload: dict[str, Any], text: str) -> None:
        if self.as_json:
            doc = {"schema": f"caf/{SCHEMA_VERSION}/{self.command}", **payload}
            sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        else:
            sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


# ---------------------------------------------------------------------------
# commands

def cmd_solve(a, out: Output) -> int:
    F = _load_af(a.file)
    S = enumerate_extensions(F, a.semantics)
    out.emit({"semantics": a.semantics, "count": len(S), "extensions": _sets(S)}, S.to_text())
    return YES


def cmd_verify(a, out: Output) -> int:
    F = _load_af(a.file)
    E = parse_extensions(a.set)
    if len(E) != 1:
        raise CliError("--set must contain exactly one set such as '{a,b}'")
    members = next(iter(E))
    ok = verify(F, a.semantics, members)
    out.emit({"semantics": a.semantics, "set": sorted(members), "verdict": "yes" if ok else "no"},
             "YES" if ok else "NO")
    return YES if ok else NO


def cmd_compact(a, out: Output) -> int:
    F = _load_af(a.file)
    cred = compact.credulous_mask(F, a.semantics)
    missing = F.ordered_names(F.full & ~cred)
    ok = not missing
    text = "YES" if ok else "NO (in no extension: " + ", ".join(missing) + ")"
    out.emit({"semantics": a.semantics, "verdict": "yes" if ok else "no", "uncovered": missing}, text)
    return YES if ok else NO


def cmd_analyze(a, out: Output) -> int:
    S = _load_exts(a.file)
    rep = analysis.analysis_report(S)
    lines = [
        f"extensions: {rep['extensions']}",
        f"Arg: {format_extension(rep['args'])}",
        f"co-occurring pairs: {len(rep['pairs'])}",
        "maximal paired sets: " + " ".join(format_extension(s) for s in rep["plus"]),
        "spurious maximal sets: " + (" ".join(format_extension(s) for s in rep["minus"]) or "none"),
        "components: " + " ".join(format_extension(c) for c in rep["components"]),
        f"incomparable: {rep['incomparable']}",
        f"tight: {rep['tight']}",
        "signature: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in rep["signature"].items()),
    ]
    if rep["contains_empty_set"]:
        lines.append("note: the empty set is a member")
    out.emit(rep, "\n".join(lines))
    return YES


def cmd_triage(a, out: Output) -> int:
    S = _load_exts(a.file)
    v = counting.triage(S, a.semantics)
    if v.outcome == "impossible":
        text = f"IMPOSSIBLE (rule: {v.rule}) {v.reason}"
        code = NO
    elif v.outcome == "realized":
        text = "REALIZED\n" + to_apx(v.framework)
        code = YES
    else:
        text = f"UNKNOWN {v.reason}"
        code = UNKNOWN
    out.emit({"semantics": a.semantics, **v.as_dict()}, text)
    return code


def cmd_realize(a, out: Output) -> int:
    S = _load_exts(a.file)
    if not len(S) or not S.args:
        raise CliError("realization needs at least one non-empty extension")
    if not analysis.in_signature(S, Semantics.STB):
        out.emit({"realized": False, "reason": "not contained in its maximal paired sets", "framework": None},
                 "NOT REALIZABLE (some extension is not a maximal paired set)")
        return NO
    F = realization.realize_stable_compact(S)
    if F is None:
        out.emit({"realized": False, "reason": "no exclusion mapping exists", "framework": None},
                 "NOT REALIZED (extension-set is not independent)")
        return NO
    out.emit({"realized": True, "reason": "", "framework": to_apx(F)}, to_apx(F))
    return YES


def cmd_explicit(a, out: Output) -> int:
    F = _load_af(a.file)
    ok = realization.is_conflict_explicit(F, Semantics.STB, reflexive=not a.irreflexive)
    if not a.repair:
        out.emit({"explicit": ok, "framework": None}, "YES" if ok else "NO")
        return YES if ok else NO
    G = realization.make_conflict_explicit(F, Semantics.STB, guard=a.guard)
    if G is None:
        out.emit({"explicit": ok, "framework": None}, "NO REPAIR FOUND")
        return NO
    added = sorted(G.attack_names() - F.attack_names())
    removed = sorted(F.attack_names() - G.attack_names())
    out.emit({"explicit": ok, "framework": to_apx(G), "added": [list(p) for p in added],
              "removed": [list(p) for p in removed]}, to_apx(G))
    return YES


def cmd_ec_search(a, out: Output) -> int:
    rep = realization.ec_counterexample_search(a.n, threads=a.threads)
    if a.out:
        Path(a.out).write_text(json.dumps(rep, indent=2) + "\n", encoding="utf-8")
    text = (f"tested {rep['tested']} frameworks, repaired {rep['repaired']}, "
            f"counterexamples {len(rep['counterexamples'])}, {rep['wall_time_ms']} ms")
    out.emit(rep, text)
    return YES if not rep["counterexamples"] else NO


def cmd_numbers(a, out: Output) -> int:
    if a.n < 0:
        raise CliError("n must be non-negative")
    p = counting.count_profile(a.n)
    text = (f"n={p.n} sigma_max={p.sigma_max} sigma_max_con={p.sigma_max_con} "
            f"sigma_max_2={p.sigma_max_2 if p.sigma_max_2 is not None else '-'}")
    out.emit(p.as_dict(), text)
    return YES


def cmd_reduce(a, out: Output) -> int:
    cnf = reductions.parse_dimacs(_read(a.file))
    if a.standard:
        F = reductions.standard_reduction(cnf)
        decision = None
    else:
        F = reductions.compact_hardness_af(cnf, a.semantics)
        decision = sorted(reductions.decision_set(cnf, a.semantics))
    out.emit({"framework": to_apx(F), "decision_set": decision}, to_apx(F))
    return YES


def cmd_witness(a, out: Output) -> int:
    text = compact.witness_apx(a.id)
    compact.witness(a.id)  # validates the resource
    out.emit({"id": a.id, "framework": text}, text)
    return YES


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sem_names = [str(s) for s in MAIN_SEMANTICS]

    p = argparse.ArgumentParser(
        prog="caf", description="Workbench for argumentation frameworks whose arguments all occur in some extension.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("solve", cmd_solve, "enumerate extensions of an APX framework")
    sp.add_argument("file")
    sp.add_argument("--semantics", "-s", required=True, choices=sem_names + ["cf", "adm"])

    sp = add("verify", cmd_verify, "check whether a set is an extension")
    sp.add_argument("file")
    sp.add_argument("--semantics", "-s", required=True, choices=sem_names + ["cf", "adm"])
    sp.add_argument("--set", required=True, help="candidate set, e.g. '{a,b}'")

    sp = add("compact", cmd_compact, "check compactness")
    sp.add_argument("file")
    sp.add_argument("--semantics", "-s", required=True, choices=sem_names)

    sp = add("analyze", cmd_analyze, "structural analysis of an extension-set file")
    sp.add_argument("file")

    sp = add("triage", cmd_triage, "decide compact realizability of an extension-set")
    sp.add_argument("file")
    sp.add_argument("--semantics", "-s", default="stb", choices=sem_names)

    sp = add("realize", cmd_realize, "construct a compact framework with the given stable extensions")
    sp.add_argument("file")

    sp = add("explicit", cmd_explicit, "check (or repair) conflict-explicitness under stable semantics")
    sp.add_argument("file")
    sp.add_argument("--repair", action="store_true")
    sp.add_argument("--irreflexive", action="store_true", help="ignore self-pairs when checking")
    sp.add_argument("--guard", type=int, default=realization.DEFAULT_EXPLICIT_GUARD)

    sp = add("ec-search", cmd_ec_search, "exhaustive conflict-explicit repair sweep")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.add_argument("--threads", type=int, default=1, help="worker processes (0 = all cores)")

    sp = add("numbers", cmd_numbers, "extension-count bounds for n arguments")
    sp.add_argument("n", type=int)

    sp = add("reduce", cmd_reduce, "build a hardness gadget from a DIMACS formula")
    sp.add_argument("file")
    sp.add_argument("--semantics", "-s", default="pref", choices=["pref", "sem", "stage"])
    sp.add_argument("--standard", action="store_true", help="plain reduction without compactness gadget")

    sp = add("witness", cmd_witness, "print a catalogued witness framework")
    sp.add_argument("id", choices=compact.WITNESS_IDS)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ERROR if e.code else YES
    out = Output(args.json, args.command)
    try:
        return args.func(args, out)
    except (CliError, FrameworkError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        sys.stderr.write(f"caf {args.command}: error: {msg}\n")
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
