"""CNF formulas and the framework gadgets that encode unsatisfiability.

Naming convention for generated arguments: variable ``i`` becomes ``x<i>``
with negation ``nx<i>``; clause ``j`` becomes ``c<j>``; the formula argument
is ``phi`` and its three guards ``nphi1..nphi3``.  Gadget arguments use
``t<i>``, ``g<i>``, ``h<i>`` and, for stage, ``s``, ``a``, ``b``, ``d`` with
their ``a<i>``, ``b<i>``, ``d<i>`` satellites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import ArgumentationFramework
from .semantics import Semantics, as_semantics

SAT_LIMIT = 20


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise CnfError("negative variable count")
        for c in self.clauses:
            if not c:
                raise CnfError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range")

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfError(f"line {lineno}: malformed header {line!r}") from None
            continue
        if header is None:
            raise CnfError(f"line {lineno}: clause before header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfError(f"line {lineno}: malformed literal {tok!r}") from None
            if lit == 0:
                if not current:
                    raise CnfError(f"line {lineno}: empty clause")
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > header[0]:
                raise CnfError(f"line {lineno}: literal {lit} out of range")
            else:
                current.append(lit)
    if header is None:
        raise CnfError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != header[1]:
        raise CnfError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def is_satisfiable(cnf: CnfFormula) -> bool:
    """Truth-table check."""
    if cnf.num_vars > SAT_LIMIT:
        raise CnfError(f"truth-table check limited to {SAT_LIMIT} variables")
    # clause as (positive mask, negative mask)
    cls = []
    for c in cnf.clauses:
        pos = neg = 0
        for lit in c:
            if lit > 0:
                pos |= 1 << (lit - 1)
            else:
                neg |= 1 << (-lit - 1)
        cls.append((pos, neg))
    for assignment in range(1 << cnf.num_vars):
        if all(assignment & pos or ~assignment & neg for pos, neg in cls):
            return True
    return False


def random_cnf(rng: random.Random, num_vars: int, num_clauses: int, width: int = 3) -> CnfFormula:
    """Random clauses over distinct variables with random signs."""
    width = min(width, num_vars)
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), width)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(num_vars, tuple(clauses))


def _normalized(cnf: CnfFormula) -> list[tuple[int, ...]]:
    if not cnf.clauses:
        raise CnfError("formula has no clauses")
    out = []
    for j, c in enumerate(cnf.clauses, 1):
        lits = tuple(dict.fromkeys(c))
        if any(-lit in lits for lit in lits):
            raise CnfError(f"clause {j} is tautological")
        out.append(lits)
    return out


def _lit(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"nx{-lit}"


class _Builder:
    def __init__(self) -> None:
        self.names: list[str] = []
        self.atts: list[tuple[str, str]] = []

    def arg(self, *names: str) -> None:
        self.names.extend(names)

    def att(self, a: str, b: str) -> None:
        self.atts.append((a, b))

    def mutual(self, *names: str) -> None:
        for a in names:
            for b in names:
                if a != b:
                    self.att(a, b)

    def cycle(self, *names: str) -> None:
        for a, b in zip(names, names[1:] + names[:1]):
            self.att(a, b)

    def build(self) -> ArgumentationFramework:
        return ArgumentationFramework.build(self.names, self.atts)


def _formula_part(B: _Builder, cnf: CnfFormula, clauses: list[tuple[int, ...]]) -> list[str]:
    cs = [f"c{j}" for j in range(1, len(clauses) + 1)]
    B.arg(*cs)
    for v in range(1, cnf.num_vars + 1):
        B.arg(f"x{v}", f"nx{v}")
        B.mutual(f"x{v}", f"nx{v}")
    for c, lits in zip(cs, clauses):
        for lit in lits:
            B.att(_lit(lit), c)
        B.att(c, "phi")
    return cs


def _standard(B: _Builder, cnf: CnfFormula) -> list[str]:
    clauses = _normalized(cnf)
    B.arg("phi", "nphi1", "nphi2", "nphi3")
    cs = _formula_part(B, cnf, clauses)
    B.att("phi", "nphi1")
    B.cycle("nphi1", "nphi2", "nphi3")
    for v in range(1, cnf.num_vars + 1):
        B.att("nphi1", f"x{v}")
        B.att("nphi1", f"nx{v}")
    return cs


def standard_reduction(cnf: CnfFormula) -> ArgumentationFramework:
    """Framework with a non-empty preferred extension iff the formula is satisfiable."""
    B = _Builder()
    _standard(B, cnf)
    return B.build()


def _selector_attacks(B: _Builder, cs: list[str]) -> None:
    for c in cs:
        B.att("t1", c)
        B.att("t2", c)
    B.att("t2", "nphi2")
    B.att("t3", "nphi3")


def compact_hardness_af(cnf: CnfFormula, sigma: Semantics | str) -> ArgumentationFramework:
    """Compact framework whose designated set is an extension iff the formula is unsatisfiable."""
    sigma = as_semantics(sigma)
    B = _Builder()
    if sigma is Semantics.PREF:
        cs = _standard(B, cnf)
        ts = [f"t{i}" for i in range(1, 5)]
        B.arg(*ts)
        B.mutual(*ts)
        _selector_attacks(B, cs)
    elif sigma is Semantics.SEM:
        cs = _standard(B, cnf)
        ts = [f"t{i}" for i in range(1, 7)]
        B.arg(*ts)
        B.mutual(*ts)
        _selector_attacks(B, cs)
        B.arg("g1", "g2", "g3", "h1", "h2", "h3")
        B.cycle("g1", "g2", "g3")
        B.cycle("h1", "h2", "h3")
        for t, x in zip(ts, ["h1", "h2", "h3", "g1", "g2", "g3"]):
            B.att(t, x)
    elif sigma is Semantics.STAGE:
        clauses = _normalized(cnf)
        if any(len(c) > 3 for c in clauses):
            raise CnfError("stage gadget needs clauses with at most three literals")
        B.arg("s", "phi")
        cs = _formula_part(B, cnf, clauses)
        for v in range(1, cnf.num_vars + 1):
            B.att("s", f"x{v}")
            B.att("s", f"nx{v}")
        B.mutual("s", "phi")
        B.arg("a", "b", "d")
        B.mutual("a", "b", "d")
        for p in ("a", "b", "d", "g"):
            B.arg(*(f"{p}{i}" for i in range(1, 4)))
            B.cycle(*(f"{p}{i}" for i in range(1, 4)))
        for i in range(1, 4):
            B.att("phi", f"g{i}")
            B.att("a", f"a{i}")
            B.att("b", f"b{i}")
            B.att("d", f"d{i}")
        B.att("d", "s")
        for c in cs:
            B.att("d", c)
        B.att("a", "phi")
    else:
        raise ValueError(f"no compact hardness gadget for {sigma}")
    return B.build()


def decision_set(cnf: CnfFormula, sigma: Semantics | str) -> frozenset[str]:
    """The set whose membership in the gadget's extensions encodes unsatisfiability."""
    sigma = as_semantics(sigma)
    if sigma is Semantics.PREF:
        return frozenset({"t4"})
    if sigma is Semantics.SEM:
        return frozenset({"t4", "g2"})
    if sigma is Semantics.STAGE:
        return frozenset({"b", "s", "a1", "d1", "g1"} | {f"c{j}" for j in range(1, len(cnf.clauses) + 1)})
    raise ValueError(f"no compact hardness gadget for {sigma}")
