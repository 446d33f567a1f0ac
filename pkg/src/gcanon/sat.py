"""Minimal complete SAT solver with all-solutions enumeration and DIMACS I/O.

The solver is plain DPLL with two-watched-literal unit propagation,
branching on the lowest-numbered unassigned variable and trying false before
true, so the model order is stable.  solve_all enumerates satisfying
assignments modulo a projection set by re-solving under accumulated blocking
clauses.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class SatError(ValueError):
    """Malformed formula or DIMACS text."""


@dataclass(frozen=True)
class Literal:
    variable: int
    sign: bool

    def __post_init__(self):
        if self.variable < 1:
            raise SatError("variable ids start at 1")

    def as_int(self) -> int:
        return self.variable if self.sign else -self.variable

    @staticmethod
    def of(i: int) -> "Literal":
        if i == 0:
            raise SatError("0 is not a literal")
        return Literal(abs(i), i > 0)


@dataclass(frozen=True)
class Clause:
    literals: tuple[Literal, ...]

    def __post_init__(self):
        if not self.literals:
            raise SatError("empty clause")
        seen = []
        for lit in self.literals:
            if lit not in seen:
                seen.append(lit)
        object.__setattr__(self, "literals", tuple(seen))

    def is_tautology(self) -> bool:
        pos = {l.variable for l in self.literals if l.sign}
        neg = {l.variable for l in self.literals if not l.sign}
        return bool(pos & neg)

    def as_ints(self) -> list[int]:
        return [l.as_int() for l in self.literals]

    @staticmethod
    def of(ints: Iterable[int]) -> "Clause":
        return Clause(tuple(Literal.of(i) for i in ints))


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        kept = []
        for c in self.clauses:
            for lit in c.literals:
                if lit.variable > self.num_vars:
                    raise SatError(
                        f"literal on variable {lit.variable} exceeds "
                        f"num_vars={self.num_vars}")
            if not c.is_tautology():
                kept.append(c)
        object.__setattr__(self, "clauses", tuple(kept))

    @staticmethod
    def of(num_vars: int, int_clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        return CnfFormula(num_vars, tuple(Clause.of(c) for c in int_clauses))


@dataclass(frozen=True)
class Model:
    assignment: dict[int, bool]

    def __getitem__(self, var: int) -> bool:
        return self.assignment[var]


class DpllSolver:
    """Incremental DPLL instance: clauses may be added between solve calls;
    every solve restarts from an empty trail."""

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        # one extra slot: a sentinel variable pinned false, used to pad
        # unit blocking clauses up to the two-watch minimum
        self.val: list[Optional[bool]] = [None] * (num_vars + 2)
        self.pos: list[int] = [0] * (num_vars + 2)
        self.watches: dict[int, list] = {}
        self.units: list[int] = []
        self.has_empty = False
        self.trail: list[int] = []

    def add_clause(self, lits: Sequence[int]) -> None:
        lits = list(dict.fromkeys(lits))
        if not lits:
            self.has_empty = True
            return
        if len(lits) == 1:
            self.units.append(lits[0])
            return
        clause = lits
        self.watches.setdefault(clause[0], []).append(clause)
        self.watches.setdefault(clause[1], []).append(clause)

    def _value(self, lit: int) -> Optional[bool]:
        v = self.val[abs(lit)]
        if v is None:
            return None
        return v == (lit > 0)

    def _assign(self, lit: int) -> None:
        self.val[abs(lit)] = lit > 0
        self.pos[abs(lit)] = len(self.trail)
        self.trail.append(lit)

    def _propagate(self, qhead: int) -> bool:
        """Exhaust unit propagation from trail position qhead; False on
        conflict."""
        trail = self.trail
        while qhead < len(trail):
            lit = trail[qhead]
            qhead += 1
            wl = self.watches.get(-lit)
            if wl is None:
                continue
            i = 0
            while i < len(wl):
                c = wl[i]
                if c[0] == -lit:
                    c[0], c[1] = c[1], c[0]
                first = self._value(c[0])
                if first is True:
                    i += 1
                    continue
                for j in range(2, len(c)):
                    if self._value(c[j]) is not False:
                        c[1], c[j] = c[j], c[1]
                        self.watches.setdefault(c[1], []).append(c)
                        wl[i] = wl[-1]
                        wl.pop()
                        break
                else:
                    if first is False:
                        return False
                    self._assign(c[0])
                    i += 1
        return True

    def _reset(self) -> bool:
        """Clear the trail and re-propagate unit clauses; False on conflict."""
        for v in range(1, self.num_vars + 2):
            self.val[v] = None
        self.trail = []
        self.val[self.num_vars + 1] = False  # sentinel, pinned at root
        self.pos[self.num_vars + 1] = 0
        for u in self.units:
            v = self._value(u)
            if v is False:
                return False
            if v is None:
                self._assign(u)
        return self._propagate(0)

    def _undo_to(self, mark: int) -> int:
        """Unassign everything past the trail mark; returns the smallest
        variable undone (for the branching pointer)."""
        low = self.num_vars + 2
        for lit in self.trail[mark:]:
            v = abs(lit)
            self.val[v] = None
            if v < low:
                low = v
        del self.trail[mark:]
        return low

    def _resolve(self, decisions: list, ptr: int) -> Optional[int]:
        """Chronological conflict handling: flip the deepest unflipped
        decision (false was tried first).  Returns the updated branching
        pointer, or None when the search space is exhausted."""
        while True:
            while decisions and decisions[-1][2]:
                mark, _, _ = decisions.pop()
                ptr = min(ptr, self._undo_to(mark))
            if not decisions:
                return None
            mark, var, _ = decisions[-1]
            ptr = min(ptr, self._undo_to(mark))
            decisions[-1][2] = True
            self._assign(var)
            if self._propagate(len(self.trail) - 1):
                return ptr

    def solve(self) -> Optional[list[bool]]:
        """One model (val[1..num_vars]) or None if unsatisfiable."""
        if self.has_empty or not self._reset():
            return None
        decisions: list[list] = []  # [trail mark, variable, flipped]
        ptr = 1
        while True:
            while ptr <= self.num_vars and self.val[ptr] is not None:
                ptr += 1
            if ptr > self.num_vars:
                return self.val[1:self.num_vars + 1]
            decisions.append([len(self.trail), ptr, False])
            self._assign(-ptr)  # try false first
            if not self._propagate(len(self.trail) - 1):
                nxt = self._resolve(decisions, ptr)
                if nxt is None:
                    return None
                ptr = nxt

    def enumerate_projected(self, projection: Sequence[int]
                            ) -> list[list[bool]]:
        """All models pairwise distinct on the projection variables.

        Each model's projection is blocked with a clause and the search
        resumes from the deepest decision level that assigned a projection
        variable, so no projection assignment is ever reported twice.
        Models arrive in the same lexicographic (false-first, lowest
        variable most significant) order a restart-per-model loop would
        produce."""
        models: list[list[bool]] = []
        if self.has_empty or not self._reset():
            return models
        nv = self.num_vars
        proj = sorted(set(projection))
        sentinel_false = nv + 1  # positive literal on the pinned-false var
        decisions: list[list] = []
        ptr = 1
        while True:
            while ptr <= nv and self.val[ptr] is not None:
                ptr += 1
            if ptr <= nv:
                decisions.append([len(self.trail), ptr, False])
                self._assign(-ptr)
                if self._propagate(len(self.trail) - 1):
                    continue
            else:
                models.append(list(self.val[1:nv + 1]))
                if not proj or not decisions:
                    return models
                blocking = [-v if self.val[v] else v for v in proj]
                deepest = max(blocking, key=lambda l: self.pos[abs(l)])
                marks = [d[0] for d in decisions]
                level = bisect.bisect_right(marks, self.pos[abs(deepest)])
                if level == 0:
                    return models  # projection forced at the root
                while len(decisions) > level:
                    mark, _, _ = decisions.pop()
                    ptr = min(ptr, self._undo_to(mark))
                clause = [deepest] + [l for l in blocking if l != deepest]
                if len(clause) == 1:
                    clause.append(sentinel_false)
                self.watches.setdefault(clause[0], []).append(clause)
                self.watches.setdefault(clause[1], []).append(clause)
            nxt = self._resolve(decisions, ptr)
            if nxt is None:
                return models
            ptr = nxt


def _build_solver(f: CnfFormula) -> DpllSolver:
    solver = DpllSolver(f.num_vars)
    for c in f.clauses:
        solver.add_clause(c.as_ints())
    return solver


def solve(f: CnfFormula) -> Optional[Model]:
    """A satisfying model, or None iff the formula is unsatisfiable."""
    raw = _build_solver(f).solve()
    if raw is None:
        return None
    return Model({v: raw[v - 1] for v in range(1, f.num_vars + 1)})


def solve_all(f: CnfFormula, projection: Iterable[int]) -> list[Model]:
    """All models distinct on the projection variables, in solver order.

    After each model the clause negating its projection is added before the
    search resumes, so exactly one model per satisfiable projection
    assignment is returned.
    """
    proj = sorted(set(projection))
    for v in proj:
        if not 1 <= v <= f.num_vars:
            raise SatError(f"projection variable {v} out of range")
    solver = _build_solver(f)
    return [Model({v: raw[v - 1] for v in range(1, f.num_vars + 1)})
            for raw in solver.enumerate_projected(proj)]


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for c in f.clauses:
        lines.append(" ".join(str(i) for i in c.as_ints()) + " 0")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> CnfFormula:
    num_vars = None
    num_clauses = None
    tokens: list[int] = []
    clauses: list[list[int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise SatError(f"malformed DIMACS header: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise SatError("clause before DIMACS header")
        for tok in line.split():
            i = int(tok)
            if i == 0:
                clauses.append(tokens)
                tokens = []
            else:
                if abs(i) > num_vars:
                    raise SatError(f"literal {i} out of declared range")
                tokens.append(i)
    if num_vars is None:
        raise SatError("missing DIMACS header")
    if tokens:
        raise SatError("clause missing 0 terminator")
    if num_clauses is not None and len(clauses) != num_clauses:
        raise SatError(
            f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula.of(num_vars, clauses)
