"""Exact-rational linear feasibility with a parametric right-hand side.

Systems are equality constraints A x = y0 + c*y1 over variables that are
either sign-constrained (>= 0) or free.  There is deliberately no
objective: everything downstream only needs basic feasible solutions
(polytope vertices) and the exact interval of the parameter c on which a
given basic solution stays feasible.

Basis enumeration is exhaustive.  That is combinatorial in the number of
columns, which is fine at the intended scale (games of at most ~12
actions per player); callers prune infeasible systems before getting
here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .rational import ONE, ZERO, Rat

Vec = tuple[Rat, ...]
Basis = tuple[int, ...]


@dataclass(frozen=True)
class Interval:
    """Closed interval over the rationals, with +-infinity as None ends."""

    lo: Rat | None = None
    hi: Rat | None = None
    is_empty: bool = False

    @staticmethod
    def all() -> "Interval":
        return Interval()

    @staticmethod
    def empty() -> "Interval":
        return Interval(is_empty=True)

    @staticmethod
    def point(c: Rat) -> "Interval":
        return Interval(lo=c, hi=c)

    @staticmethod
    def closed(lo: Rat | None, hi: Rat | None) -> "Interval":
        if lo is not None and hi is not None and lo > hi:
            return Interval.empty()
        return Interval(lo=lo, hi=hi)

    def contains(self, c: Rat) -> bool:
        if self.is_empty:
            return False
        if self.lo is not None and c < self.lo:
            return False
        if self.hi is not None and c > self.hi:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval":
        if self.is_empty or other.is_empty:
            return Interval.empty()
        lo = self.lo if other.lo is None else (other.lo if self.lo is None else max(self.lo, other.lo))
        hi = self.hi if other.hi is None else (other.hi if self.hi is None else min(self.hi, other.hi))
        return Interval.closed(lo, hi)

    def finite_endpoints(self) -> tuple[Rat, ...]:
        if self.is_empty:
            return ()
        ends = []
        if self.lo is not None:
            ends.append(self.lo)
        if self.hi is not None and self.hi != self.lo:
            ends.append(self.hi)
        return tuple(ends)


@dataclass(frozen=True)
class LinearSystem:
    """Equality system A x = rhs_base + c * rhs_slope.

    ``nonneg[j]`` marks variable j as sign-constrained; the rest are free.
    """

    rows: tuple[Vec, ...]
    rhs_base: Vec
    rhs_slope: Vec
    nonneg: tuple[bool, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        ncols = len(self.nonneg)
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("matrix column count does not match variable count")
        if len(self.rhs_base) != len(self.rows) or len(self.rhs_slope) != len(self.rows):
            raise ValueError("rhs length does not match row count")

    @property
    def ncols(self) -> int:
        return len(self.nonneg)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def free_columns(self) -> tuple[int, ...]:
        return tuple(j for j, n in enumerate(self.nonneg) if not n)

    def at(self, c: Rat) -> "LinearSystem":
        """The same system with the parameter fixed to c (slope folded in)."""
        base = tuple(b + c * s for b, s in zip(self.rhs_base, self.rhs_slope))
        zero = tuple(ZERO for _ in self.rows)
        return LinearSystem(self.rows, base, zero, self.nonneg, self.names)


@dataclass(frozen=True)
class Reduced:
    """Row-independent equivalent system.

    ``only_at`` is None when the reduction is valid for every c and holds
    the single admissible c when dependent rows force a specific
    parameter value.
    """

    system: LinearSystem
    only_at: Rat | None = None


@dataclass(frozen=True)
class Unsolvable:
    reason: str = "inconsistent rows"


@dataclass(frozen=True)
class ParametricSolution:
    """Basic solution x(c) = value_base + c*value_slope for one basis.

    ``feasible_interval`` is exactly the set of c where every
    sign-constrained coordinate is >= 0.  ``bases`` collects every basis
    generating this same affine solution (degenerate systems can have
    several).
    """

    basis: Basis
    value_base: Vec
    value_slope: Vec
    feasible_interval: Interval
    bases: tuple[Basis, ...] = field(default=())

    def value_at(self, c: Rat) -> Vec:
        return tuple(b + c * s for b, s in zip(self.value_base, self.value_slope))


def row_reduce(system: LinearSystem) -> Reduced | Unsolvable:
    """Gaussian elimination to independent rows, tracking the parametric rhs.

    A dependent row whose eliminated rhs is b + c*s != 0 either makes the
    system unsolvable for every c (s == 0, b != 0) or pins c to -b/s.
    """
    rows = [list(r) for r in system.rows]
    base = list(system.rhs_base)
    slope = list(system.rhs_slope)
    ncols = system.ncols
    kept: list[int] = []
    pivot_cols: list[int] = []
    m = len(rows)
    used = [False] * m
    for col in range(ncols):
        pivot = None
        for i in range(m):
            if not used[i] and rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        used[pivot] = True
        kept.append(pivot)
        pivot_cols.append(col)
        pv = rows[pivot][col]
        for i in range(m):
            if i != pivot and not used[i] and rows[i][col] != 0:
                f = rows[i][col] / pv
                ri, rp = rows[i], rows[pivot]
                for j in range(col, ncols):
                    if rp[j] != 0:
                        ri[j] -= f * rp[j]
                base[i] -= f * base[pivot]
                slope[i] -= f * slope[pivot]
    only_at: Rat | None = None
    for i in range(m):
        if used[i]:
            continue
        # fully eliminated row: 0 = base[i] + c*slope[i]
        if slope[i] == 0:
            if base[i] != 0:
                return Unsolvable("inconsistent rows for every parameter value")
        else:
            c_star = -base[i] / slope[i]
            if only_at is None:
                only_at = c_star
            elif only_at != c_star:
                return Unsolvable("dependent rows pin the parameter to conflicting values")
    kept.sort()
    reduced = LinearSystem(
        rows=tuple(tuple(rows[i]) for i in kept),
        rhs_base=tuple(base[i] for i in kept),
        rhs_slope=tuple(slope[i] for i in kept),
        nonneg=system.nonneg,
        names=system.names,
    )
    return Reduced(reduced, only_at)


def det_fraction_free(matrix: list[list[Rat]]) -> Rat:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Works on integers after clearing denominators, which keeps the
    intermediate entries from exploding the way naive rational
    elimination can.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    scale = ONE
    m: list[list[int]] = []
    for row in matrix:
        den = 1
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
        scale = scale * den
        m.append([int(v * den) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Rat(sign * m[n - 1][n - 1], 1) / scale


def _solve_square(rows: tuple[Vec, ...], cols: Basis, rhs: list[Vec]) -> list[Vec] | None:
    """Solve the square submatrix on ``cols`` for several rhs vectors.

    Returns one solution vector per rhs, or None when singular.
    """
    n = len(rows)
    aug = [[rows[i][j] for j in cols] + [r[i] for r in rhs] for i in range(n)]
    width = n + len(rhs)
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        if pv != 1:
            aug[col] = [v / pv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [tuple(aug[i][n + k] for i in range(n)) for k in range(len(rhs))]


def enumerate_bases(system: LinearSystem) -> list[Basis]:
    """All column subsets of size rank(A) with an invertible submatrix.

    Rows must already be independent (see row_reduce).  Free columns are
    required to be part of every basis: pinning a free variable to zero
    does not correspond to a face of the feasible set, so such subsets
    would produce spurious non-vertex "basic" points.
    """
    rank = system.nrows
    free = system.free_columns()
    if len(free) > rank:
        return []
    candidates = [
        j
        for j in range(system.ncols)
        if system.nonneg[j] and any(row[j] != 0 for row in system.rows)
    ]
    bases: list[Basis] = []
    zero_rhs = [tuple(ZERO for _ in range(rank))]
    for extra in itertools.combinations(candidates, rank - len(free)):
        basis = tuple(sorted(free + extra))
        if _solve_square(system.rows, basis, zero_rhs) is not None:
            bases.append(basis)
    return bases


def parametric_basic_solution(system: LinearSystem, basis: Basis) -> ParametricSolution:
    """Exact affine solution for one basis plus its feasibility interval."""
    sols = _solve_square(system.rows, basis, [system.rhs_base, system.rhs_slope])
    if sols is None:
        raise ValueError(f"basis {basis} is singular for this system")
    base_b, slope_b = sols
    value_base = [ZERO] * system.ncols
    value_slope = [ZERO] * system.ncols
    for k, j in enumerate(basis):
        value_base[j] = base_b[k]
        value_slope[j] = slope_b[k]
    interval = Interval.all()
    for j in range(system.ncols):
        if not system.nonneg[j]:
            continue
        b, s = value_base[j], value_slope[j]
        if s == 0:
            if b < 0:
                interval = Interval.empty()
                break
        elif s > 0:
            interval = interval.intersect(Interval.closed(-b / s, None))
        else:
            interval = interval.intersect(Interval.closed(None, -b / s))
        if interval.is_empty:
            break
    return ParametricSolution(basis, tuple(value_base), tuple(value_slope), interval, (basis,))


def parametric_solutions(system: LinearSystem) -> list[ParametricSolution]:
    """All basic solutions of the system, deduplicated by affine value.

    Degenerate systems can realize the same x(c) through several bases;
    those collapse to one entry that records every generating basis.
    """
    seen: dict[tuple[Vec, Vec], ParametricSolution] = {}
    for basis in enumerate_bases(system):
        sol = parametric_basic_solution(system, basis)
        key = (sol.value_base, sol.value_slope)
        prev = seen.get(key)
        if prev is None:
            seen[key] = sol
        else:
            seen[key] = ParametricSolution(
                prev.basis, prev.value_base, prev.value_slope,
                prev.feasible_interval, prev.bases + (basis,),
            )
    return list(seen.values())


def vertices_at(system: LinearSystem, c: Rat) -> list[Vec]:
    """All distinct basic feasible solutions at a fixed parameter value."""
    fixed = system.at(c)
    reduced = row_reduce(fixed)
    if isinstance(reduced, Unsolvable):
        return []
    out: list[Vec] = []
    seen: set[Vec] = set()
    for basis in enumerate_bases(reduced.system):
        sol = parametric_basic_solution(reduced.system, basis)
        if not sol.feasible_interval.contains(ZERO):
            continue
        value = sol.value_base  # slope is zero for a fixed system
        if value not in seen:
            seen.add(value)
            out.append(value)
    out.sort()
    return out
