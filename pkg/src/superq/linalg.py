"""Exact linear algebra over the scalar field.

Rows are sparse dicts {column key: Scalar}.  Everything is plain Gaussian
elimination with exact division; no pivoting heuristics beyond sparsity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from .scalars import GaussRat, ONE, Scalar, ZERO

Row = Dict[Hashable, Scalar]


def _eliminate(target: Row, pivot_row: Row, col, pivot_inv: Scalar) -> Row:
    factor = target.get(col)
    if not factor:
        return target
    factor = factor * pivot_inv
    out = dict(target)
    for c, v in pivot_row.items():
        s = out.get(c, ZERO) - factor * v
        if s:
            out[c] = s
        elif c in out:
            del out[c]
    return out


def rref(rows: Sequence[Row]) -> Tuple[List[Row], List[Hashable]]:
    """Reduced row echelon form; returns (rows without zero rows, pivot cols)."""
    work = [dict(r) for r in rows if r]
    done: List[Row] = []
    pivots: List[Hashable] = []
    while work:
        # prefer short rows for sparsity
        work.sort(key=len)
        row = work.pop(0)
        col = sorted(row, key=_col_key)[0]
        inv = row[col].inv()
        row = {c: v * inv for c, v in row.items()}
        done = [_eliminate(r, row, col, ONE) for r in done]
        work = [r for r in (_eliminate(r, row, col, ONE) for r in work) if r]
        done.append(row)
        pivots.append(col)
    return done, pivots


def _col_key(c):
    return (repr(type(c)), repr(c))


def rank(rows: Sequence[Row]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Row], unknowns: Sequence[Hashable]) -> List[Dict]:
    """Basis of the solution space of (rows) . u = 0 over the given unknowns.

    Each returned vector maps unknown -> Scalar, normalized so its leading
    free unknown has coefficient 1 (reduced echelon parametrization).
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [u for u in unknowns if u not in pivot_set]
    basis = []
    for f in free:
        vec = {f: ONE}
        for row, p in zip(reduced, pivots):
            coeff = row.get(f)
            if coeff:
                vec[p] = -coeff
        basis.append(vec)
    return basis


def solve(rows: Sequence[Row], rhs: Sequence[Scalar],
          unknowns: Sequence[Hashable]) -> Optional[Dict]:
    """One exact solution of rows . u = rhs, or None if inconsistent.

    Free unknowns are set to zero.
    """
    mark = ("#rhs#",)
    work = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[mark] = -b
        if r:
            work.append(r)
    done: List[Row] = []
    pivots: List[Hashable] = []
    while work:
        if any(set(r) == {mark} for r in work):
            return None  # a row reduced to 0 = b with b nonzero
        work.sort(key=len)
        row = work.pop(0)
        col = sorted((c for c in row if c != mark), key=_col_key)[0]
        inv = row[col].inv()
        row = {c: v * inv for c, v in row.items()}
        done = [_eliminate(r, row, col, ONE) for r in done]
        work = [r for r in (_eliminate(r, row, col, ONE) for r in work) if r]
        done.append(row)
        pivots.append(col)
    sol = {}
    for row, p in zip(done, pivots):
        # free unknowns are set to zero, so u_p = -(mark coefficient)
        sol[p] = -row.get(mark, ZERO)
    return {u: sol.get(u, ZERO) for u in unknowns}


def membership(span_rows: Sequence[Row], vector: Row) -> bool:
    """Does vector lie in the row span of span_rows?"""
    reduced, pivots = rref(span_rows)
    v = dict(vector)
    for row, p in zip(reduced, pivots):
        v = _eliminate(v, row, p, ONE)
    return not v


# ---------------------------------------------------------------------------
# Certified fast rank via exact specialization
# ---------------------------------------------------------------------------

def specialized_rank_certificate(rows: Sequence[Row], t_points=None) -> Optional[int]:
    """Try to certify full rank by exact substitution t = rational.

    The rank of a specialization never exceeds the rank over Q(i)(t), so if
    a specialization reaches min(#rows, #cols) the symbolic rank equals it.
    Returns that rank, or None when the certificate does not apply (then use
    the symbolic path).  Only valid for radical-free entries.
    """
    rows = [r for r in rows if r]
    if not rows:
        return 0
    cols = set()
    for r in rows:
        cols.update(r)
    target = min(len(rows), len(cols))
    for t0 in (t_points or (Fraction(5, 3), Fraction(7, 2), Fraction(11, 4))):
        try:
            num_rows = [{c: v.specialize_t(t0) for c, v in r.items()} for r in rows]
        except Exception:
            continue
        r = _gauss_rank(num_rows)
        if r == target:
            return r
    return None


def _gauss_rank(rows: List[Dict[Hashable, GaussRat]]) -> int:
    work = [dict(r) for r in rows if any(v for v in r.values())]
    rk = 0
    while work:
        row = work.pop()
        col = next(iter(row))
        inv = row[col].inv()
        rk += 1
        new_work = []
        for r in work:
            f = r.get(col)
            if f:
                f = f * inv
                r = dict(r)
                for c, v in row.items():
                    s = r.get(c, GaussRat(0)) - f * v
                    if s:
                        r[c] = s
                    elif c in r:
                        del r[c]
            if r:
                new_work.append(r)
        work = new_work
    return rk
