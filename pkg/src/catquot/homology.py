"""Exact simplicial homology, Euler characteristics and Möbius values.

All arithmetic is over arbitrary-precision integers and rationals; there
is no floating point anywhere.  Betti numbers and torsion coefficients
come from a Smith normal form with deterministic pivoting, so repeated
runs produce identical bases and identical induced-action matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import ActionGroup
from .fincat import CategoryError, FiniteCategory, InternalCheckError, is_loopfree
from .nerve import DeltaComplex, nerve


def boundary_matrix(complex_: DeltaComplex, d: int) -> list[list[int]]:
    """The integer matrix of the boundary map from dimension ``d`` to
    ``d - 1`` (rows index the lower dimension)."""
    rows = complex_.n_cells(d - 1)
    cols = complex_.n_cells(d)
    mat = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        sign = 1
        for k in range(d + 1):
            mat[complex_.faces[d][j][k]][j] += sign
            sign = -sign
    return mat


def smith_normal_form(mat) -> list[int]:
    """Nonnegative diagonal of the Smith normal form, with each entry
    dividing the next.  Pivoting is deterministic: the first nonzero entry
    in row-major order of the active submatrix."""
    a = [list(row) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    r = 0
    while True:
        pivot = None
        for i in range(r, m):
            for j in range(r, n):
                if a[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != r:
            a[pi], a[r] = a[r], a[pi]
        if pj != r:
            for row in a:
                row[pj], row[r] = row[r], row[pj]
        while True:
            moved = False
            for i in range(r + 1, m):
                if a[i][r]:
                    q = a[i][r] // a[r][r]
                    for j in range(r, n):
                        a[i][j] -= q * a[r][j]
                    if a[i][r]:
                        a[i], a[r] = a[r], a[i]
                        moved = True
            if moved:
                continue
            for j in range(r + 1, n):
                if a[r][j]:
                    q = a[r][j] // a[r][r]
                    for i in range(r, m):
                        a[i][j] -= q * a[i][r]
                    if a[r][j]:
                        for row in a:
                            row[j], row[r] = row[r], row[j]
                        moved = True
            if not moved:
                break
        # force divisibility of the remaining block by the pivot
        stray = None
        for i in range(r + 1, m):
            for j in range(r + 1, n):
                if a[i][j] % a[r][r]:
                    stray = i
                    break
            if stray is not None:
                break
        if stray is not None:
            for j in range(r, n):
                a[r][j] += a[stray][j]
            continue
        diag.append(abs(a[r][r]))
        r += 1
    return diag


def integer_rank(mat) -> int:
    return len(smith_normal_form(mat))


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers and torsion per dimension, plus Euler characteristics.

    ``betti[d]`` is the rank of H_d over the rationals and ``torsion[d]``
    the nontrivial elementary divisors of its integral torsion subgroup.
    """

    f_vector: tuple[int, ...]
    betti_numbers: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    euler: int
    reduced_euler: int

    def betti(self, d: int) -> int:
        if 0 <= d < len(self.betti_numbers):
            return self.betti_numbers[d]
        return 0

    def reduced_betti(self, d: int) -> int:
        """Reduced Betti number; the empty complex has one unit in
        dimension -1 and nothing anywhere else."""
        if d == -1:
            return 1 if not self.f_vector else 0
        if d == 0:
            return self.betti(0) - 1 if self.f_vector else 0
        return self.betti(d)


def euler_characteristic(complex_: DeltaComplex) -> int:
    return sum((-1) ** d * c for d, c in enumerate(complex_.f_vector()))


def reduced_euler_characteristic(complex_: DeltaComplex) -> int:
    return euler_characteristic(complex_) - 1


def homology(complex_: DeltaComplex) -> HomologyResult:
    """Integral homology of the complex via Smith normal form."""
    top = complex_.dimension
    f_vec = complex_.f_vector()
    betti = []
    torsion = []
    ranks = [0] * (top + 2)
    snfs = [None] * (top + 2)
    for d in range(1, top + 1):
        snfs[d] = smith_normal_form(boundary_matrix(complex_, d))
        ranks[d] = len(snfs[d])
    for d in range(top + 1):
        betti.append(f_vec[d] - ranks[d] - ranks[d + 1])
        above = snfs[d + 1] or []
        torsion.append(tuple(e for e in above if e > 1))
    chi = sum((-1) ** d * c for d, c in enumerate(f_vec))
    return HomologyResult(f_vec, tuple(betti), tuple(torsion), chi, chi - 1)


def mobius(cat: FiniteCategory) -> int:
    """Reduced Euler characteristic of the nerve; rejects categories whose
    nerve has infinitely many nondegenerate simplices."""
    return reduced_euler_characteristic(nerve(cat))


def mobius_recursive(cat: FiniteCategory):
    """Evaluate the morphism-counting recursion after adjoining a terminal
    bottom and an initial top.

    Returns ``(value, table)`` where ``table[x]`` is the accumulated value
    at object ``x`` (plus entries ``"bottom"`` and ``"top"``).  The result
    is cross-checked against :func:`mobius`; a mismatch would be a genuine
    counterexample to the recursion and is raised loudly.
    """
    ok, witness = is_loopfree(cat)
    if not ok:
        raise CategoryError(f"recursion needs a loopfree category, witness {witness}")
    n = cat.n_objects
    below: list[set[int]] = [set() for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and cat.hom(x, y):
                below[x].add(y)
    order = []
    state = {}

    def visit(x):
        if x in state:
            return
        state[x] = True
        for y in sorted(below[x]):
            visit(y)
        order.append(x)

    for x in range(n):
        visit(x)
    table: dict = {"bottom": 1}
    for x in order:
        total = 1  # the adjoined bottom contributes one morphism from x
        for y in sorted(below[x]):
            total += len(cat.hom(x, y)) * table[y]
        table[x] = -total
    table["top"] = -(1 + sum(table[x] for x in range(n)))
    value = table["top"]
    direct = mobius(cat)
    if value != direct:
        raise InternalCheckError(
            f"recursion gives {value} but the nerve gives {direct}"
        )
    return value, table


def _fraction_matrix(mat):
    return [[Fraction(x) for x in row] for row in mat]


def _rref(mat):
    """Row-reduce in place; returns the pivot column list."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _nullspace(mat, cols):
    if not mat:
        basis = []
        for j in range(cols):
            v = [Fraction(0)] * cols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    work = _fraction_matrix(mat)
    pivots = _rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -work[r][fc]
        basis.append(v)
    return basis


class _Solver:
    """Exact solver for a fixed full-column-rank matrix."""

    def __init__(self, columns, height):
        self.k = len(columns)
        self.height = height
        self.rows = [[col[i] for col in columns] for i in range(height)]

    def solve(self, vec):
        aug = [row[:] + [vec[i]] for i, row in enumerate(self.rows)]
        pivots = _rref(aug)
        sol = [Fraction(0)] * self.k
        for r, c in enumerate(pivots):
            if c == self.k:
                raise InternalCheckError("vector lies outside the spanned subspace")
            sol[c] = aug[r][self.k]
        return sol


def _homology_basis(complex_: DeltaComplex, i: int):
    """Cycle representatives completing the boundary image to a basis of the
    cycle space, plus a solver expressing cycles in that basis."""
    n_i = complex_.n_cells(i)
    if n_i == 0:
        return [], None, 0
    d_i = boundary_matrix(complex_, i) if i >= 1 else []
    cycles = _nullspace(d_i, n_i)
    d_above = boundary_matrix(complex_, i + 1) if complex_.n_cells(i + 1) else []
    boundary_cols = []
    if d_above:
        work = _fraction_matrix(d_above)
        pivots = _rref(work)
        raw = _fraction_matrix(boundary_matrix(complex_, i + 1))
        boundary_cols = [[raw[r][c] for r in range(n_i)] for c in pivots]
    chosen = list(boundary_cols)
    reps = []
    elim = []

    def try_add(col):
        v = col[:]
        for lead, row in elim:
            if v[lead]:
                f = v[lead]
                v = [a - f * b for a, b in zip(v, row)]
        lead = next((idx for idx, a in enumerate(v) if a), None)
        if lead is None:
            return False
        inv = Fraction(1) / v[lead]
        elim.append((lead, [a * inv for a in v]))
        return True

    for col in boundary_cols:
        try_add(col)
    for z in cycles:
        if try_add(z):
            chosen.append(z)
            reps.append(z)
    solver = _Solver(chosen, n_i) if chosen else None
    return reps, solver, len(boundary_cols)


def induced_homology_action(cat: FiniteCategory, action: ActionGroup, i: int):
    """Rational matrices of each group element acting on H_i of the nerve,
    in a fixed deterministic basis (one matrix per element, as row tuples)."""
    complex_ = nerve(cat)
    reps, solver, n_boundary = _homology_basis(complex_, i)
    k = len(reps)
    mats = []
    for g in range(action.order):
        mor = action.elements[g].mor_map
        obj = action.elements[g].obj_map
        cols = []
        for z in reps:
            image = [Fraction(0)] * complex_.n_cells(i)
            for idx, coeff in enumerate(z):
                if not coeff:
                    continue
                label = complex_.labels[i][idx]
                if i == 0:
                    moved = complex_.index[0][obj[label]]
                else:
                    moved = complex_.index[i][tuple(mor[m] for m in label)]
                image[moved] += coeff
            sol = solver.solve(image)
            cols.append(sol[n_boundary:])
        mats.append(tuple(tuple(cols[c][r] for c in range(k)) for r in range(k)))
    return mats


def trivial_multiplicity(cat: FiniteCategory, action: ActionGroup, i: int) -> int:
    """Average trace of the induced action on H_i; the multiplicity of the
    trivial character, hence necessarily a nonnegative integer."""
    mats = induced_homology_action(cat, action, i)
    total = sum(sum(m[r][r] for r in range(len(m))) for m in mats)
    value = Fraction(total, action.order)
    if value.denominator != 1:
        raise InternalCheckError(f"character average {value} is not an integer")
    return int(value)
