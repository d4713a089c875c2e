"""Exact rational linear algebra and a small two-phase simplex solver.

Everything here is exact: ``int`` and ``Fraction`` at the interface, with
gmpy2's ``mpq`` used inside the tableau when it is installed. The simplex uses
Bland's rule, so it cannot cycle, and every outcome carries a certificate
that can be re-checked by substitution:

* ``OPTIMAL``: primal ``x`` and equality duals ``y`` with zero duality gap.
* ``INFEASIBLE``: a Farkas vector ``y`` for the equality rows with
  ``y.b > sup { y.A x : lower <= x <= upper }``. With plain ``x >= 0``
  bounds this is the familiar ``y.A <= 0, y.b > 0``.
* ``UNBOUNDED``: a feasible point ``x`` and a ray ``d`` with ``A d = 0``,
  ``d`` compatible with the bounds and ``c.d > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

try:  # gmpy2's mpq is exact like Fraction but several times faster inside pivots
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class StepCounter:
    """Tallies elementary work so different checks can be compared."""

    def __init__(self):
        self.row_ops = 0
        self.pivots = 0

    def __repr__(self):
        return f"StepCounter(row_ops={self.row_ops}, pivots={self.pivots})"


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------

def _reduce_row(row: List[int]) -> List[int]:
    g = 0
    for a in row:
        if a:
            g = gcd(g, a)
            if g == 1:
                return row
    if g > 1:
        return [a // g for a in row]
    return row


class EchelonBasis:
    """Incrementally maintained integer row-echelon basis.

    Rows are kept primitive (gcd 1) and reduction is fraction-free:
    ``r <- p*r - r[c]*pivot_row``.
    """

    def __init__(self, dim: int, counter: Optional[StepCounter] = None):
        self.dim = dim
        self.rows: List[Tuple[int, List[int]]] = []  # (pivot column, row)
        self.counter = counter

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: Sequence[int]) -> List[int]:
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)} in a {self.dim}-dimensional basis")
        r = [int(a) for a in vec]
        for col, prow in self.rows:
            if r[col]:
                p, f = prow[col], r[col]
                r = _reduce_row([p * a - f * b for a, b in zip(r, prow)])
                if self.counter is not None:
                    self.counter.row_ops += 1
        return r

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence[int]) -> bool:
        """Insert ``vec``; returns True if the rank went up."""
        r = self._reduce(vec)
        for col, a in enumerate(r):
            if a:
                if a < 0:
                    r = [-b for b in r]
                self.rows.append((col, r))
                return True
        return False


def rank(vectors: Sequence[Sequence[int]], counter: Optional[StepCounter] = None) -> int:
    """Exact rank of a list of integer vectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    basis = EchelonBasis(len(vectors[0]), counter)
    for v in vectors:
        basis.add(v)
        if basis.rank == basis.dim:
            break
    return basis.rank


def in_span(vec: Sequence[int], basis: Sequence[Sequence[int]],
            counter: Optional[StepCounter] = None) -> bool:
    """True iff ``vec`` is a rational linear combination of ``basis``."""
    eb = EchelonBasis(len(vec), counter)
    for b in basis:
        if len(b) != len(vec):
            raise ValueError("inconsistent vector lengths")
        eb.add(b)
    return eb.contains(vec)


# ---------------------------------------------------------------------------
# Linear programming
# ---------------------------------------------------------------------------

@dataclass
class LPProblem:
    """maximize c.x  subject to  A x = b,  lower <= x <= upper.

    A bound of ``None`` means unbounded on that side. ``lower`` defaults to
    all zeros and ``upper`` to all ``None``.
    """

    c: Sequence
    A: Sequence[Sequence]
    b: Sequence
    lower: Optional[Sequence] = None
    upper: Optional[Sequence] = None

    def __post_init__(self):
        nvar = len(self.c)
        self.c = [Fraction(v) for v in self.c]
        self.A = [[Fraction(a) for a in row] for row in self.A]
        self.b = [Fraction(v) for v in self.b]
        if len(self.A) != len(self.b):
            raise ValueError(f"{len(self.A)} constraint rows but {len(self.b)} right-hand sides")
        for i, row in enumerate(self.A):
            if len(row) != nvar:
                raise ValueError(f"row {i} has {len(row)} entries, expected {nvar}")
        if self.lower is None:
            self.lower = [Fraction(0)] * nvar
        if self.upper is None:
            self.upper = [None] * nvar
        if len(self.lower) != nvar or len(self.upper) != nvar:
            raise ValueError("bound vectors must match the number of variables")
        self.lower = [None if v is None else Fraction(v) for v in self.lower]
        self.upper = [None if v is None else Fraction(v) for v in self.upper]
        for j, (lo, up) in enumerate(zip(self.lower, self.upper)):
            if lo is not None and up is not None and up < lo:
                raise ValueError(f"variable {j} has empty bound interval [{lo}, {up}]")

    @property
    def nvar(self) -> int:
        return len(self.c)


@dataclass
class LPOutcome:
    status: str
    x: Optional[List[Fraction]] = None
    objective: Optional[Fraction] = None
    y: Optional[List[Fraction]] = None  # equality duals, or Farkas vector when infeasible
    ray: Optional[List[Fraction]] = None
    pivots: int = 0
    rows: int = 0
    cols: int = 0


def _sup_linear(coef: Fraction, lo, up):
    """sup of coef*t over lo <= t <= up, or None when it is +infinity."""
    if coef > 0:
        return None if up is None else coef * up
    if coef < 0:
        return None if lo is None else coef * lo
    return Fraction(0)


def verify_outcome(problem: LPProblem, out: LPOutcome) -> bool:
    """Re-check a solver outcome by exact substitution."""
    A, b, c = problem.A, problem.b, problem.c
    lower, upper = problem.lower, problem.upper
    m, nv = len(A), problem.nvar

    def feasible(x):
        if any(sum(A[i][j] * x[j] for j in range(nv)) != b[i] for i in range(m)):
            return False
        return all((lower[j] is None or x[j] >= lower[j]) and (upper[j] is None or x[j] <= upper[j])
                   for j in range(nv))

    if out.status == OPTIMAL:
        x, y = out.x, out.y
        if not feasible(x) or sum(c[j] * x[j] for j in range(nv)) != out.objective:
            return False
        bound = sum(y[i] * b[i] for i in range(m))
        for j in range(nv):
            red = c[j] - sum(y[i] * A[i][j] for i in range(m))
            s = _sup_linear(red, lower[j], upper[j])
            if s is None:
                return False
            bound += s
        return bound == out.objective
    if out.status == INFEASIBLE:
        y = out.y
        total = Fraction(0)
        for j in range(nv):
            coef = sum(y[i] * A[i][j] for i in range(m))
            s = _sup_linear(coef, lower[j], upper[j])
            if s is None:
                return False
            total += s
        return sum(y[i] * b[i] for i in range(m)) > total
    if out.status == UNBOUNDED:
        x, d = out.x, out.ray
        if not feasible(x):
            return False
        if any(sum(A[i][j] * d[j] for j in range(nv)) != 0 for i in range(m)):
            return False
        for j in range(nv):
            if d[j] < 0 and lower[j] is not None:
                return False
            if d[j] > 0 and upper[j] is not None:
                return False
        return sum(c[j] * d[j] for j in range(nv)) > 0
    return False


def _fr(values) -> List[Fraction]:
    return [Fraction(int(v.numerator), int(v.denominator)) for v in values]


class _Tableau:
    """Dense simplex tableau ``B^-1 [A | b]`` with an objective row."""

    def __init__(self, rows, rhs, basis, counter):
        self.T = rows
        self.rhs = rhs
        self.basis = basis
        self.counter = counter
        self.pivots = 0

    def pivot(self, r: int, j: int, zrow: List[Fraction]):
        T = self.T
        prow = T[r]
        p = prow[j]
        if p != 1:
            inv = 1 / p
            for k, a in enumerate(prow):
                if a:
                    prow[k] = a * inv
            self.rhs[r] *= inv
        nz = [k for k, a in enumerate(prow) if a]
        br = self.rhs[r]
        for i, row in enumerate(T):
            if i != r:
                f = row[j]
                if f:
                    for k in nz:
                        row[k] -= f * prow[k]
                    self.rhs[i] -= f * br
                    if self.counter is not None:
                        self.counter.row_ops += 1
        f = zrow[j]
        if f:
            for k in nz:
                zrow[k] -= f * prow[k]
            zrow[-1] -= f * br
        self.basis[r] = j
        self.pivots += 1
        if self.counter is not None:
            self.counter.pivots += 1

    def objective_row(self, cost: Sequence[Fraction]) -> List[Fraction]:
        """Entries z_j - c_j plus the current objective value at the end."""
        ncol = len(cost)
        z = [-cj for cj in cost] + [Fraction(0)]
        for i, bi in enumerate(self.basis):
            cb = cost[bi]
            if cb:
                row = self.T[i]
                for k in range(ncol):
                    if row[k]:
                        z[k] += cb * row[k]
                z[-1] += cb * self.rhs[i]
        return z

    def run(self, zrow, allowed) -> Optional[int]:
        """Bland's rule iterations; returns an unbounded column or None at optimum."""
        T = self.T
        while True:
            enter = next((j for j in allowed if zrow[j] < 0), None)
            if enter is None:
                return None
            best = None
            for i, row in enumerate(T):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < best[1]):
                        best = (ratio, self.basis[i], i)
            if best is None:
                return enter
            self.pivot(best[2], enter, zrow)


def solve(problem: LPProblem, counter: Optional[StepCounter] = None) -> LPOutcome:
    """Solve ``problem`` exactly with a two-phase Bland's-rule simplex."""
    if not isinstance(problem, LPProblem):
        raise TypeError("solve expects an LPProblem")
    A = [[_Q(a) for a in row] for row in problem.A]
    b = [_Q(v) for v in problem.b]
    c = [_Q(v) for v in problem.c]
    lower = [None if v is None else _Q(v) for v in problem.lower]
    upper = [None if v is None else _Q(v) for v in problem.upper]
    m, nv = len(A), problem.nvar
    zero, one = _Q(0), _Q(1)

    # Standard form: every original variable becomes one or two columns >= 0.
    # x_j = shift_j + sum(sign * col) over its columns.
    cols: List[Tuple[int, int]] = []  # (original var, sign)
    shift = [zero] * nv
    ub_rows: List[Tuple[int, Fraction]] = []  # (column index, capacity)
    for j in range(nv):
        lo, up = lower[j], upper[j]
        if lo is not None:
            shift[j] = lo
            cols.append((j, 1))
            if up is not None:
                ub_rows.append((len(cols) - 1, up - lo))
        elif up is not None:
            shift[j] = up
            cols.append((j, -1))
        else:
            cols.append((j, 1))
            cols.append((j, -1))
    nstruct = len(cols)
    nslack = len(ub_rows)
    nrows = m + nslack
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    sigma: List[int] = []
    for i in range(m):
        row = [A[i][oj] * s for oj, s in cols] + [zero] * nslack
        r = b[i] - sum(A[i][k] * shift[k] for k in range(nv) if A[i][k])
        sg = -1 if r < 0 else 1
        if sg < 0:
            row = [-a for a in row]
            r = -r
        rows.append(row)
        rhs.append(r)
        sigma.append(sg)
    for t, (col, cap) in enumerate(ub_rows):
        row = [zero] * (nstruct + nslack)
        row[col] = one
        row[nstruct + t] = one
        rows.append(row)
        rhs.append(cap)
        sigma.append(1)

    # Artificial columns for the equality rows; bound rows start on their slack.
    nart = m
    ncol = nstruct + nslack + nart
    for i in range(nrows):
        rows[i].extend([zero] * nart)
        if i < m:
            rows[i][nstruct + nslack + i] = one
    init_col = [nstruct + nslack + i for i in range(m)] + [nstruct + t for t in range(nslack)]
    tab = _Tableau(rows, rhs, list(init_col), counter)
    real_cols = list(range(nstruct + nslack))

    phase1_cost = [zero] * (nstruct + nslack) + [_Q(-1)] * nart
    z = tab.objective_row(phase1_cost)
    tab.run(z, real_cols)

    def duals(zrow, cost):
        pi = [zrow[init_col[i]] + cost[init_col[i]] for i in range(nrows)]
        return [sigma[i] * pi[i] for i in range(m)]

    def primal():
        val = [zero] * ncol
        for i, bi in enumerate(tab.basis):
            val[bi] = tab.rhs[i]
        x = list(shift)
        for k, (oj, s) in enumerate(cols):
            if val[k]:
                x[oj] += s * val[k]
        return x

    dims = dict(rows=nrows, cols=ncol)
    if z[-1] < 0:
        y = [-v for v in duals(z, phase1_cost)]
        return LPOutcome(INFEASIBLE, y=_fr(y), pivots=tab.pivots, **dims)

    # Drive zero-level artificials out of the basis where possible.
    art_start = nstruct + nslack
    for i, bi in enumerate(tab.basis):
        if bi >= art_start:
            j = next((k for k in real_cols if tab.T[i][k] != 0), None)
            if j is not None:
                tab.pivot(i, j, z)

    cost = [zero] * ncol
    for k, (oj, s) in enumerate(cols):
        cost[k] = c[oj] * s
    z = tab.objective_row(cost)
    enter = tab.run(z, real_cols)
    x = primal()
    if enter is not None:
        d = [zero] * ncol
        d[enter] = one
        for i, bi in enumerate(tab.basis):
            d[bi] -= tab.T[i][enter]
        ray = [zero] * nv
        for k, (oj, s) in enumerate(cols):
            if d[k]:
                ray[oj] += s * d[k]
        return LPOutcome(UNBOUNDED, x=_fr(x), ray=_fr(ray), pivots=tab.pivots, **dims)
    obj = sum((c[j] * x[j] for j in range(nv)), zero)
    return LPOutcome(OPTIMAL, x=_fr(x), objective=Fraction(obj), y=_fr(duals(z, cost)), pivots=tab.pivots, **dims)
