"""Exact rank computations.

* ``bareiss_rank``: fraction-free elimination over Z for dense rational matrices.
* ``sparse_rank``: exact elimination over Q on sparse rows, pivoting in a
  caller-supplied column order.
* ``modular_rank``: rank of an integer matrix modulo a fixed prime (via
  python-flint).  For integer matrices this is a lower bound on the rational
  rank, which is how the callers use it.
* ``flint_rank``: exact rational rank through flint's fmpz_mat.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence

import flint

PRIME = 2_147_483_629  # largest prime below 2^31


def integer_rows(rows: Iterable[Sequence]) -> List[List[int]]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a dense rational matrix by fraction-free Gaussian elimination."""
    m = integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            row_r, row_p = m[r], m[rank]
            m[r] = [(p * row_r[j] - f * row_p[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def sparse_rank(rows: Iterable[Dict[Hashable, object]], key: Optional[Callable] = None) -> int:
    """Exact rank over Q of sparse rows (maps column -> coefficient).

    Each row is reduced against the pivots found so far; its leading column is
    the maximum under ``key``.
    """
    key = key or (lambda c: c)
    pivots: Dict[Hashable, Dict[Hashable, Fraction]] = {}
    rank = 0
    for row in rows:
        cur = {c: Fraction(v) for c, v in row.items() if v}
        while cur:
            lead = max(cur, key=key)
            prow = pivots.get(lead)
            if prow is None:
                lc = cur[lead]
                pivots[lead] = {c: v / lc for c, v in cur.items()}
                rank += 1
                break
            f = cur[lead]
            for c, v in prow.items():
                nv = cur.get(c, 0) - f * v
                if nv:
                    cur[c] = nv
                else:
                    cur.pop(c, None)
    return rank


def _to_matrix(rows: Sequence[Sequence[int]], ncols: int, ctor, *extra):
    flat = [x for row in rows for x in row]
    return ctor(len(rows), ncols, flat, *extra)


def modular_rank(rows: Sequence[Sequence[int]], ncols: int, prime: int = PRIME) -> int:
    """Rank of an integer matrix over GF(prime); a lower bound on the rank over Q."""
    if not rows:
        return 0
    return _to_matrix([[x % prime for x in r] for r in rows], ncols, flint.nmod_mat, prime).rank()


def flint_rank(rows: Sequence[Sequence], ncols: int) -> int:
    """Exact rank over Q."""
    if not rows:
        return 0
    return _to_matrix(integer_rows(rows), ncols, flint.fmpz_mat).rank()


def solve_exact(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[Fraction]]:
    """Rational c with sum c_j * columns[j] = target, or None if no solution exists."""
    n = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][k] for i in range(r, n)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][k]
    return sol


def hermite_basis(vectors: Sequence[Sequence[int]]) -> List[tuple]:
    """A Z-basis of the lattice spanned by integer vectors (row-style Hermite reduction)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    for col in range(ncols):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            nxt = [p]
            for r in active[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            active = nxt
        if active:
            p = active[0]
            if p[col] < 0:
                p = [-x for x in p]
            basis.append(tuple(p))
        rows = [r for r in rest if any(r)]
    return basis


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    return int(flint.fmpz_mat(n, n, [x for r in m for x in r]).det())
