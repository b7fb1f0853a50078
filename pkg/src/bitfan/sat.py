"""Bar checking as propositional unsatisfiability.

Each member ``b`` of a prefix set contributes the clause "the assignment
does not start with ``b``", so the clause set is satisfiable exactly when
some bitstring escapes the set.  A small DPLL solver decides the resulting
formulas; DIMACS output allows cross-checking with any external solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bars import BarTrie
from .bitstring import EPB, normalize

Clause = tuple[int, ...]


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.var_count < 0:
            raise ValueError("var_count must be >= 0")
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            if any(lit == 0 or abs(lit) > self.var_count for lit in clause):
                raise ValueError(f"literal out of range in clause {clause}")
            if any(-lit in clause for lit in clause):
                raise ValueError(f"tautological clause {clause}")


def prefix_clause(bits: str) -> Clause:
    """Literals of "not (a_1 = b_1 and ... and a_k = b_k)"."""
    return tuple(-i if b == "1" else i for i, b in enumerate(bits, start=1))


def encode_bar_cnf(B: BarTrie) -> CnfFormula:
    members = list(B)
    if "" in B:
        raise ValueError("the empty prefix encodes to the empty clause; {e} is trivially a bar")
    return CnfFormula(B.max_length, [prefix_clause(b) for b in members])


def dimacs_emit(f: CnfFormula) -> str:
    lines = [f"p cnf {f.var_count} {len(f.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def dimacs_parse(text: str | Iterable[str]) -> CnfFormula:
    if isinstance(text, str):
        text = text.splitlines()
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for line in text:
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"invalid DIMACS header {line!r}")
            try:
                header = int(parts[2]), int(parts[3])
            except ValueError:
                raise ValueError(f"invalid DIMACS header {line!r}") from None
            continue
        if header is None:
            raise ValueError("DIMACS clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ValueError(f"invalid DIMACS literal {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ValueError("missing DIMACS 'p cnf' header")
    if current:
        clauses.append(current)
    if len(clauses) != header[1]:
        raise ValueError(f"DIMACS header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], clauses)


def _simplify(clauses: list[Clause], lit: int) -> list[Clause] | None:
    """Set ``lit`` true; None on an empty clause."""
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = tuple(x for x in c if x != -lit)
            if not c:
                return None
        out.append(c)
    return out


def _dpll(clauses: list[Clause], assignment: dict[int, int], var_count: int) -> dict[int, int] | None:
    assignment = dict(assignment)
    while True:
        unit = next((c[0] for c in clauses if len(c) == 1), None)
        if unit is None:
            lits = {x for c in clauses for x in c}
            unit = next((x for x in sorted(lits, key=abs) if -x not in lits), None)
        if unit is None:
            break
        assignment[abs(unit)] = int(unit > 0)
        clauses = _simplify(clauses, unit)
        if clauses is None:
            return None
    if not clauses:
        return assignment
    var = next(v for v in range(1, var_count + 1) if v not in assignment)
    for lit in (-var, var):
        reduced = _simplify(clauses, lit)
        if reduced is None:
            continue
        result = _dpll(reduced, {**assignment, var: int(lit > 0)}, var_count)
        if result is not None:
            return result
    return None


def dpll_solve(f: CnfFormula) -> dict[int, int] | None:
    """A satisfying assignment ``{var: bit}`` total on ``1..var_count``, or None if UNSAT.

    Unit propagation and pure-literal elimination run to fixpoint before each
    decision; decisions take the lowest unassigned variable, 0 first.
    Variables left free by the search are set to 0.
    """
    model = _dpll(list(f.clauses), {}, f.var_count)
    if model is None:
        return None
    return {v: model.get(v, 0) for v in range(1, f.var_count + 1)}


def satisfies(model: dict[int, int], f: CnfFormula) -> bool:
    return all(any(model[abs(x)] == (x > 0) for x in c) for c in f.clauses)


def check_bar_via_sat(B: BarTrie) -> tuple[bool, EPB | None]:
    if "" in B:
        return True, None
    f = encode_bar_cnf(B)
    model = dpll_solve(f)
    if model is None:
        return True, None
    bits = "".join(str(model[v]) for v in range(1, f.var_count + 1))
    return False, normalize(EPB(bits, "0"))
