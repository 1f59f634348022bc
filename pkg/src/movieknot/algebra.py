"""Finite binary-operation tables and degree-3 cocycle functions.

A MagmaTable is a set {0..n-1} with an arbitrary operation table.  The
checkers test the three quandle axioms (idempotence, right-invertibility,
right self-distributivity) plus involutivity, and report the least
violating witness when an axiom fails.  CocycleFunction wraps a map
Q^3 -> Z, either as an explicit value table or as the built-in polynomial
(x-y)(y-z), with an optional modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom sweep: holds, or the least violating tuple."""

    axiom: str
    holds: bool
    witness: Optional[tuple] = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise AlgebraError("report must carry a witness exactly when it fails")

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


class MagmaTable:
    """A finite set {0..n-1} with a binary operation given by a table.

    ``table[i][j]`` is i*j.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "table", "name", "_rinv")

    def __init__(self, table, name: str = ""):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n < 1:
            raise AlgebraError("empty operation table")
        for row in rows:
            if len(row) != n:
                raise AlgebraError("operation table is not square")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise AlgebraError(f"table entry {v!r} outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_rinv", None)

    def __setattr__(self, *a):
        raise AttributeError("MagmaTable is immutable")

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, MagmaTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"MagmaTable(n={self.n}, name={self.name!r})"


def check_q1(m: MagmaTable) -> AxiomReport:
    """Idempotence: a*a = a for every a."""
    for a in m.elements():
        if m.op(a, a) != a:
            return AxiomReport("Q1", False, (a,))
    return AxiomReport("Q1", True)


def check_q2(m: MagmaTable) -> AxiomReport:
    """Right-invertibility: every column a -> a*b is a permutation.

    The witness is the least (a, b) such that c*b = a has no solution or
    more than one.
    """
    for b in m.elements():
        seen = [0] * m.n
        for c in m.elements():
            seen[m.op(c, b)] += 1
        for a in m.elements():
            if seen[a] != 1:
                return AxiomReport("Q2", False, (a, b))
    return AxiomReport("Q2", True)


def check_q3(m: MagmaTable) -> AxiomReport:
    """Right self-distributivity: (a*b)*c = (a*c)*(b*c) on all triples."""
    for a in m.elements():
        for b in m.elements():
            for c in m.elements():
                if m.op(m.op(a, b), c) != m.op(m.op(a, c), m.op(b, c)):
                    return AxiomReport("Q3", False, (a, b, c))
    return AxiomReport("Q3", True)


def check_involutory(m: MagmaTable) -> AxiomReport:
    """(a*b)*b = a for all pairs."""
    for a in m.elements():
        for b in m.elements():
            if m.op(m.op(a, b), b) != a:
                return AxiomReport("involutory", False, (a, b))
    return AxiomReport("involutory", True)


def right_inverse(m: MagmaTable, a: int, b: int) -> int:
    """The unique c with c*b = a.  Requires Q2."""
    rinv = m._rinv
    if rinv is None:
        rep = check_q2(m)
        if not rep.holds:
            raise AlgebraError(f"right_inverse needs Q2; witness {rep.witness}")
        rinv = [[0] * m.n for _ in range(m.n)]
        for c in m.elements():
            for b2 in m.elements():
                rinv[m.op(c, b2)][b2] = c
        rinv = tuple(tuple(row) for row in rinv)
        object.__setattr__(m, "_rinv", rinv)
    return rinv[a][b]


# The two tables from the source material, entry (i, j) = i*j.
_S4_TABLE = (
    (0, 2, 3, 1),
    (3, 1, 0, 2),
    (1, 3, 2, 0),
    (2, 0, 1, 3),
)

_X_TABLE = (
    (0, 2, 1),
    (1, 1, 0),
    (2, 0, 2),
)


def builtin(name: str) -> MagmaTable:
    """Named tables: s4, x, dihedral(n), trivial(n)."""
    key = name.strip().lower()
    if key == "s4":
        return MagmaTable(_S4_TABLE, name="s4")
    if key == "x":
        return MagmaTable(_X_TABLE, name="x")
    for family in ("dihedral", "trivial"):
        if key.startswith(family + "(") and key.endswith(")"):
            try:
                n = int(key[len(family) + 1 : -1])
            except ValueError:
                raise AlgebraError(f"bad parameter in {name!r}")
            if n < 1:
                raise AlgebraError(f"{family} needs n >= 1")
            if family == "dihedral":
                table = [[(2 * b - a) % n for b in range(n)] for a in range(n)]
            else:
                table = [[a for _ in range(n)] for a in range(n)]
            return MagmaTable(table, name=f"{family}({n})")
    raise AlgebraError(f"unknown builtin algebra {name!r}")


class CocycleFunction:
    """A function domain^3 -> Z, as a value table or the polynomial form.

    The polynomial form evaluates (x-y)(y-z) over the integers, treating
    elements as the integers 0..n-1.  With a modulus set, values are
    reduced into 0..modulus-1.
    """

    __slots__ = ("domain", "form", "values", "modulus", "name")

    def __init__(self, domain: MagmaTable, form: str = "poly",
                 values=None, modulus: Optional[int] = None, name: str = ""):
        if form not in ("poly", "table"):
            raise AlgebraError(f"unknown cocycle form {form!r}")
        if form == "table":
            values = tuple(int(v) for v in values)
            if len(values) != domain.n ** 3:
                raise AlgebraError(
                    f"table form needs {domain.n ** 3} entries, got {len(values)}")
        else:
            values = None
        if modulus is not None and modulus <= 0:
            raise AlgebraError("modulus must be positive")
        self.domain = domain
        self.form = form
        self.values = values
        self.modulus = modulus
        self.name = name

    def __call__(self, a: int, b: int, c: int) -> int:
        n = self.domain.n
        for v in (a, b, c):
            if not 0 <= v < n:
                raise AlgebraError(f"element {v} outside 0..{n - 1}")
        if self.form == "poly":
            val = (a - b) * (b - c)
        else:
            val = self.values[(a * n + b) * n + c]
        if self.modulus is not None:
            val %= self.modulus
        return val

    def as_table(self) -> "CocycleFunction":
        n = self.domain.n
        vals = [self(a, b, c)
                for a in range(n) for b in range(n) for c in range(n)]
        return CocycleFunction(self.domain, "table", vals, self.modulus, self.name)

    def __repr__(self):
        return f"CocycleFunction(form={self.form!r}, n={self.domain.n}, mod={self.modulus})"


def delta3(theta: CocycleFunction, a: int, b: int, c: int, d: int) -> int:
    """The 6-term alternating sum whose vanishing is cocycle condition (ii)."""
    op = theta.domain.op
    val = (theta(a, c, d)
           - theta(op(a, b), c, d)
           - theta(a, b, d)
           + theta(op(a, c), op(b, c), d)
           + theta(a, b, c)
           - theta(op(a, d), op(b, d), op(c, d)))
    if theta.modulus is not None:
        val %= theta.modulus
    return val


def check_cocycle_i(theta: CocycleFunction) -> AxiomReport:
    """Condition (i): theta(a,a,b) = 0 and theta(a,b,b) = 0 for all pairs."""
    n = theta.domain.n
    for a in range(n):
        for b in range(n):
            if theta(a, a, b) != 0 or theta(a, b, b) != 0:
                return AxiomReport("cocycle_i", False, (a, b))
    return AxiomReport("cocycle_i", True)


def check_cocycle_ii(theta: CocycleFunction) -> AxiomReport:
    """Condition (ii): delta3 vanishes on all n^4 quadruples."""
    n = theta.domain.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if delta3(theta, a, b, c, d) != 0:
                        return AxiomReport("cocycle_ii", False, (a, b, c, d))
    return AxiomReport("cocycle_ii", True)


def check_all(m: MagmaTable) -> list[AxiomReport]:
    return [check_q1(m), check_q2(m), check_q3(m), check_involutory(m)]


# ---------------------------------------------------------------------------
# file formats

def parse_algebra(text: str) -> MagmaTable:
    """Parse the plain-text table format.

    Line 1 is ``magma n=<N> name=<label>``, then N rows of N integers.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise AlgebraError("empty algebra file")
    head = lines[0].split()
    if not head or head[0] != "magma":
        raise AlgebraError(f"line 1: expected 'magma', got {lines[0]!r}")
    fields = dict(kv.split("=", 1) for kv in head[1:] if "=" in kv)
    try:
        n = int(fields["n"])
    except (KeyError, ValueError):
        raise AlgebraError("line 1: missing or bad n=<N>")
    name = fields.get("name", "")
    if len(lines) != n + 1:
        raise AlgebraError(f"expected {n} table rows, got {len(lines) - 1}")
    table = []
    for i, ln in enumerate(lines[1:]):
        row = ln.split()
        if len(row) != n:
            raise AlgebraError(f"row {i}: expected {n} entries, got {len(row)}")
        try:
            table.append([int(v) for v in row])
        except ValueError:
            raise AlgebraError(f"row {i}: non-integer entry")
    return MagmaTable(table, name=name)


def serialize_algebra(m: MagmaTable) -> str:
    out = [f"magma n={m.n}" + (f" name={m.name}" if m.name else "")]
    for row in m.table:
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def parse_cocycle(text: str, domain: MagmaTable) -> CocycleFunction:
    """Parse ``cocycle domain=<label> form=poly|table [mod=<m>]`` plus values."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise AlgebraError("empty cocycle file")
    head = lines[0].split()
    if not head or head[0] != "cocycle":
        raise AlgebraError(f"line 1: expected 'cocycle', got {lines[0]!r}")
    fields = dict(kv.split("=", 1) for kv in head[1:] if "=" in kv)
    form = fields.get("form", "poly")
    modulus = int(fields["mod"]) if "mod" in fields else None
    name = fields.get("domain", "")
    if form == "poly":
        return CocycleFunction(domain, "poly", modulus=modulus, name=name)
    vals = []
    for ln in lines[1:]:
        vals.extend(int(v) for v in ln.split())
    return CocycleFunction(domain, "table", vals, modulus=modulus, name=name)


def serialize_cocycle(theta: CocycleFunction) -> str:
    head = f"cocycle domain={theta.name or theta.domain.name} form={theta.form}"
    if theta.modulus is not None:
        head += f" mod={theta.modulus}"
    if theta.form == "poly":
        return head + "\n"
    n = theta.domain.n
    out = [head]
    vals = theta.values
    for a in range(n):
        block = vals[a * n * n : (a + 1) * n * n]
        out.append(" ".join(str(v) for v in block))
    return "\n".join(out) + "\n"
