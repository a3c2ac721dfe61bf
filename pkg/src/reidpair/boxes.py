"""Finite box families of generators and their exact image ranks.

Columns of every image matrix are tagged with the image map that produced
them ("fq", "fq/1", "fq/2"), so the combined matrix is block diagonal and its
rank is the sum of the per-family ranks.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .groupring import a as avec, b as bvec, check_genus, support_blocks, vadd, vneg, zero_vector
from .linalg import PRIME, sparse_rank
from .xcalculus import (
    YSym,
    ZWSym,
    pairing_atom,
    w3_set,
    y_image,
    zw_defining_symbol,
    zw_image,
)


def _graded(point) -> tuple:
    return (len(support_blocks(point)), point)


# ------------------------------------------------------------------ W1


def w1_box(genus: int, bound: int) -> Iterator[Tuple[tuple, tuple]]:
    """(x, y) for W1 generators X(0,x,y) with all coordinates in [-bound, bound]."""
    g = genus
    rng = range(-bound, bound + 1)
    for d in range(1, g):
        for n, m in itertools.product(rng, repeat=2):
            if not (n or m):
                continue
            x = [0] * (2 * g)
            x[2 * d - 2], x[2 * d - 1] = n, m
            for tail in itertools.product(rng, repeat=2 * (g - d)):
                if any(tail):
                    yield tuple(x), (0,) * (2 * d) + tail


def w1_count(genus: int, bound: int) -> int:
    side = 2 * bound + 1
    return sum((side ** 2 - 1) * (side ** (2 * (genus - d)) - 1) for d in range(1, genus))


def w1_rank_exact(genus: int, bound: int) -> int:
    """Exact rank of the x_q images of W1 ∩ box by sparse elimination."""
    zero = zero_vector(genus)
    rows = (pairing_atom(zero, x, y).terms for x, y in w1_box(genus, bound))
    return sparse_rank(rows, key=_graded)


def _w1_arrays(genus: int, bound: int, d: int):
    g = genus
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    xs = np.array([(n, m) for n in vals for m in vals if n or m], dtype=np.int64)
    tails = np.array(np.meshgrid(*([vals] * (2 * (g - d))), indexing="ij")).reshape(2 * (g - d), -1).T
    tails = tails[np.any(tails != 0, axis=1)]
    nx, ny = len(xs), len(tails)
    X = np.zeros((nx * ny, 2 * g), dtype=np.int64)
    Y = np.zeros((nx * ny, 2 * g), dtype=np.int64)
    X[:, 2 * d - 2: 2 * d] = np.repeat(xs, ny, axis=0)
    Y[:, 2 * d:] = np.tile(tails, (nx, 1))
    return X, Y


def _graded_code(V: np.ndarray, bound: int) -> np.ndarray:
    """Integer encoding of points that is monotone in (block count, lexicographic order)."""
    n = V.shape[1]
    base = 4 * bound + 1
    blocks = np.any(V.reshape(len(V), n // 2, 2) != 0, axis=2).sum(axis=1)
    code = np.zeros(len(V), dtype=np.int64)
    for j in range(n):
        code = code * base + (V[:, j] + 2 * bound)
    return blocks * base ** n + code


def w1_pivot_certificate(genus: int, bound: int) -> dict:
    """Leading-term certificate for the W1 box image matrix.

    Each row's leading column is its maximal point under (block count, lex).
    If the leading columns are pairwise distinct the rows are in echelon form
    after sorting, hence linearly independent.
    """
    rows = 0
    leads = []
    for d in range(1, genus):
        X, Y = _w1_arrays(genus, bound, d)
        Z = np.zeros_like(X)
        keys = np.stack([_graded_code(V, bound) for V in (Z, X, Y, X + Y)], axis=1)
        leads.append(keys.max(axis=1))
        rows += len(X)
    allleads = np.concatenate(leads)
    distinct = int(len(np.unique(allleads)))
    return {"rows": rows, "distinct_leading_columns": distinct, "full_rank": distinct == rows}


# ------------------------------------------------------------------ W2 / W3


def w2_box(genus: int, bound: int) -> List[YSym]:
    out = []
    rng = range(-bound, bound + 1)
    for d in range(1, genus + 1):
        av, bv = avec(genus, d), bvec(genus, d)
        for n, m in itertools.product(rng, repeat=2):
            h = [0] * (2 * genus)
            h[2 * d - 2], h[2 * d - 1] = n, m
            out.append(YSym(d, tuple(h), av))
            if n in (0, 1):
                out.append(YSym(d, tuple(h), bv))
    return out


def w2_rank(genus: int, bound: int) -> Tuple[int, int]:
    syms = w2_box(genus, bound)
    return len(syms), sparse_rank((y_image(s).terms for s in syms), key=_graded)


def w3_rank(genus: int) -> Tuple[int, int]:
    syms = w3_set(genus)
    return len(syms), sparse_rank((zw_image(s, genus).terms for s in syms), key=_graded)


def line_claim(bound: int) -> dict:
    """The second-difference vectors in a window {-B..B} of Z and their complement {e_0, e_1}."""
    window = list(range(-bound, bound + 1))
    fvecs = [{n: 1, n + 1: -2, n + 2: 1} for n in window if n + 2 <= bound]
    r_f = sparse_rank(fvecs)
    r_all = sparse_rank(fvecs + [{0: 1}, {1: 1}])
    return {
        "window": len(window),
        "f_count": len(fvecs),
        "f_rank": r_f,
        "with_e0_e1_rank": r_all,
        "ok": r_f == len(fvecs) and r_all == len(window),
    }


def w2_line_checks(genus: int, bound: int) -> List[dict]:
    """Per block and per line, the Y images restricted to the line against {e_0, e_1}."""
    out = []
    rng = range(-bound, bound + 1)
    for d in range(1, genus + 1):
        av, bv = avec(genus, d), bvec(genus, d)
        lines = [("a", m) for m in rng] + [("b", n) for n in (0, 1)]
        for direction, fixed in lines:
            vecs = []
            for t in rng:
                if t + 2 > bound:
                    continue
                h = [0] * (2 * genus)
                if direction == "a":
                    h[2 * d - 2], h[2 * d - 1] = t, fixed
                    s = YSym(d, tuple(h), av)
                else:
                    h[2 * d - 2], h[2 * d - 1] = fixed, t
                    s = YSym(d, tuple(h), bv)
                vecs.append(y_image(s).terms)
            anchors = []
            for t in (0, 1):
                p = [0] * (2 * genus)
                if direction == "a":
                    p[2 * d - 2], p[2 * d - 1] = t, fixed
                else:
                    p[2 * d - 2], p[2 * d - 1] = fixed, t
                anchors.append({tuple(p): 1})
            r_f = sparse_rank(vecs)
            r_all = sparse_rank(vecs + anchors)
            out.append({
                "block": d, "direction": direction, "fixed": fixed,
                "f_rank": r_f, "f_count": len(vecs), "total_rank": r_all,
                "ok": r_f == len(vecs) and r_all == 2 * bound + 1,
            })
    return out


def injectivity_report(genus: int, bound: int) -> dict:
    check_genus(genus)
    cert = w1_pivot_certificate(genus, bound)
    n2, r2 = w2_rank(genus, bound)
    n3, r3 = w3_rank(genus)
    rows = cert["rows"] + n2 + n3
    rank = (cert["rows"] if cert["full_rank"] else None)
    if rank is None:
        rank = w1_rank_exact(genus, bound)
    total = rank + r2 + r3
    return {
        "genus": genus,
        "box": bound,
        "w1_generators": cert["rows"],
        "w1_rank": rank,
        "w1_certificate": "distinct leading columns" if cert["full_rank"] else "exact elimination",
        "w2_generators": n2,
        "w2_rank": r2,
        "w3_generators": n3,
        "w3_rank": r3,
        "generators": rows,
        "rank": total,
        "full_rank": total == rows,
    }


# ------------------------------------------------------------------ conjecture probe


def probe_generators(genus: int):
    """(x, y) shapes: unit V1 pairs across blocks, all V2 shapes, all V3 shapes."""
    g = genus
    signed = []
    for d in range(1, g + 1):
        for v in (avec(g, d), bvec(g, d)):
            signed += [(d, v), (d, vneg(v))]
    shapes = [(x, y) for d, x in signed for e, y in signed if d < e]
    for d in range(1, g + 1):
        for x in (avec(g, d), bvec(g, d)):
            for e in range(1, g + 1):
                if e == d:
                    continue
                for z in (avec(g, e), bvec(g, e), vneg(avec(g, e)), vneg(bvec(g, e))):
                    shapes.append((x, vadd(x, z)))
    for d in range(1, g + 1):
        for e in range(1, g + 1):
            if d != e:
                for kind in ("Z", "W"):
                    s = zw_defining_symbol(ZWSym(kind, d, e), g)
                    shapes.append((s.x, s.y))
    return shapes


def conjecture_probe(genus: int, bound: int) -> dict:
    """Rank (mod p, a lower bound) of box-contained generator images against dim(ker eps ∩ ker h).

    Stops early once the rank reaches that dimension, since the images always lie in it.
    """
    check_genus(genus)
    g = genus
    shapes = probe_generators(g)
    target = (2 * bound + 1) ** (2 * g) - (2 * g + 1)
    rng = range(-bound, bound + 1)

    def inside(v):
        return all(-bound <= c <= bound for c in v)

    pivots: Dict[tuple, Dict[tuple, int]] = {}
    rank = rows = 0
    for h in itertools.product(rng, repeat=2 * g):
        for x, y in shapes:
            pts = (h, vadd(h, x), vadd(h, y), vadd(h, x, y))
            if not all(inside(p) for p in pts):
                continue
            rows += 1
            cur: Dict[tuple, int] = {}
            for p, c in zip(pts, (1, -1, -1, 1)):
                cur[p] = (cur.get(p, 0) + c) % PRIME
            cur = {k: v for k, v in cur.items() if v}
            while cur:
                lead = max(cur)
                prow = pivots.get(lead)
                if prow is None:
                    inv = pow(cur[lead], PRIME - 2, PRIME)
                    pivots[lead] = {k: v * inv % PRIME for k, v in cur.items()}
                    rank += 1
                    break
                f = cur[lead]
                for k, v in prow.items():
                    nv = (cur.get(k, 0) - f * v) % PRIME
                    if nv:
                        cur[k] = nv
                    else:
                        cur.pop(k, None)
            if rank == target:
                break
        if rank == target:
            break
    return {
        "genus": g,
        "box": bound,
        "points": (2 * bound + 1) ** (2 * g),
        "generators_scanned": rows,
        "span_rank_lower_bound": rank,
        "ker_eps_h_dim": target,
        "equal": rank == target,
    }
