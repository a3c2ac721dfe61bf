"""The symplectic contraction on ((wedge^2 H)/Q)^{⊗2} and the images of <V,kappa> generators.

Tensor coordinates are indexed by pairs (p, q) of positions in the fixed basis
of (wedge^2 H)/Q described in ``Wedge2.bar_vector``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence

import flint

from .errors import PreconditionError
from .exterior import Sym2, Wedge2, bar_dimension, wedge_basis
from .groupring import a as avec, b as bvec, check_genus, omega
from .linalg import bareiss_rank, integer_rows, modular_rank


def _unit(g: int, i: int):
    v = [0] * (2 * g)
    v[i] = 1
    return tuple(v)


# ------------------------------------------------------------------ contraction


def contraction_simple(a, b, u, v) -> Sym2:
    """c((a∧b)⊗(u∧v)) = ω(a,u) b∨v − ω(a,v) b∨u − ω(b,u) a∨v + ω(b,v) a∨u."""
    out = Sym2(len(a) // 2)
    for coef, p, q in (
        (omega(a, u), b, v),
        (-omega(a, v), b, u),
        (-omega(b, u), a, v),
        (omega(b, v), a, u),
    ):
        if coef:
            out = out + Sym2.product(p, q).scale(coef)
    return out


def contraction(left: Wedge2, right: Wedge2) -> Sym2:
    """Bilinear extension of the four-term contraction to (wedge^2) ⊗ (wedge^2)."""
    g = left.genus
    out = Sym2(g)
    for (i, j), x in left.coords.items():
        for (k, l), y in right.coords.items():
            out = out + contraction_simple(_unit(g, i), _unit(g, j), _unit(g, k), _unit(g, l)).scale(x * y)
    return out


def bar_basis(g: int) -> List[Wedge2]:
    """Representatives of the basis of (wedge^2 H)/Q used for tensor coordinates."""
    diag = {(2 * k, 2 * k + 1) for k in range(g)}
    basis = [Wedge2(g, {ij: 1}) for ij in wedge_basis(g) if ij not in diag]
    for k in range(g - 1):
        basis.append(Wedge2(g, {(2 * k, 2 * k + 1): 1, (2 * k + 2, 2 * k + 3): -1}))
    return basis


def tensor_dimension(g: int) -> int:
    return bar_dimension(g) ** 2


def contraction_matrix(g: int) -> List[List[Fraction]]:
    """Rows indexed by tensor coordinates (p, q), columns by the Sym^2 basis."""
    basis = bar_basis(g)
    rows = []
    for bp in basis:
        for bq in basis:
            rows.append(contraction(bp, bq).vector())
    return rows


def check_descent(g: int) -> bool:
    """c(ω⊗e) = c(e⊗ω) = 0 for every basis wedge e."""
    w = Wedge2.omega(g)
    for ij in wedge_basis(g):
        e = Wedge2(g, {ij: 1})
        if contraction(w, e) or contraction(e, w):
            return False
    return True


def _convention_gates(g: int = 4):
    """Pin the contraction convention: it kills omega on either side and omega_V ⊗ kappa for kappa in V-perp."""
    if not check_descent(g):
        raise RuntimeError("contraction does not vanish against omega")
    wv = Wedge2.wedge(avec(g, 1), bvec(g, 1))
    for i, j in combinations(range(2, 2 * g), 2):
        k = Wedge2(g, {(i, j): 1})
        if contraction(wv, k) or contraction(k, wv):
            raise RuntimeError("contraction does not vanish on omega_V ⊗ V-perp")


# ------------------------------------------------------------------ summands


@dataclass(frozen=True)
class SymplecticSummand:
    u: tuple
    v: tuple

    def __post_init__(self):
        if omega(self.u, self.v) != 1:
            raise PreconditionError("summand basis must satisfy omega(u, v) = 1")

    @property
    def genus(self):
        return len(self.u) // 2

    def perp_projection(self, w):
        """Projection of w onto the orthogonal complement of the summand."""
        cu, cv = omega(w, self.v), omega(w, self.u)
        return tuple(x - cu * p + cv * q for x, p, q in zip(w, self.u, self.v))

    def perp_wedges(self) -> List[Wedge2]:
        """P(e_i) ∧ P(e_j); these span wedge^2 of the complement."""
        g = self.genus
        proj = [self.perp_projection(_unit(g, i)) for i in range(2 * g)]
        out = []
        for i, j in combinations(range(2 * g), 2):
            w = Wedge2.wedge(proj[i], proj[j])
            if w:
                out.append(w)
        return out


def standard_summand(g: int, d: int) -> SymplecticSummand:
    return SymplecticSummand(avec(g, d), bvec(g, d))


def omega_of_summand(V: SymplecticSummand) -> Wedge2:
    return Wedge2.wedge(V.u, V.v)


def transvection(x, v):
    """T_v(x) = x + ω(x, v) v."""
    c = omega(x, v)
    return tuple(xi + c * vi for xi, vi in zip(x, v))


def random_summands(g: int, n: int, seed: int, max_len: int = 8, entry_bound: int = 2) -> List[SymplecticSummand]:
    """Images of standard summands under seeded words in integral transvections."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        d = rng.randint(1, g)
        u, v = avec(g, d), bvec(g, d)
        for _ in range(rng.randint(1, max_len)):
            t = tuple(rng.randint(-entry_bound, entry_bound) for _ in range(2 * g))
            if not any(t):
                continue
            u, v = transvection(u, t), transvection(v, t)
        out.append(SymplecticSummand(u, v))
    return out


# ------------------------------------------------------------------ generator images


def in_perp(V: SymplecticSummand, kappa: Wedge2) -> bool:
    """kappa lies in wedge^2 of V-perp: its contractions with u and v vanish."""
    g = kappa.genus
    for w in (V.u, V.v):
        acc = [Fraction(0)] * (2 * g)
        for (i, j), c in kappa.coords.items():
            wi, wj = omega(w, _unit(g, i)), omega(w, _unit(g, j))
            if wi:
                acc[j] += c * wi
            if wj:
                acc[i] -= c * wj
        if any(acc):
            return False
    return True


def tensor(left: Wedge2, right: Wedge2) -> List[Fraction]:
    """Coordinates of left-bar ⊗ right-bar in Tensor2."""
    lv, rv = left.bar_vector(), right.bar_vector()
    return [x * y for x in lv for y in rv]


def gen_image(side: str, V: SymplecticSummand, kappa: Wedge2) -> List[Fraction]:
    """ω̄_V ⊗ κ̄ (left) or κ̄ ⊗ ω̄_V (right)."""
    if not in_perp(V, kappa):
        raise PreconditionError("kappa is not supported in the complement of V")
    w = omega_of_summand(V)
    if side == "left":
        return tensor(w, kappa)
    if side == "right":
        return tensor(kappa, w)
    raise PreconditionError(f"side must be 'left' or 'right', got {side!r}")


def _scaled_bar(w: Wedge2) -> List[int]:
    g = w.genus
    return [int(x * g) for x in w.bar_vector()]


def gen_image_scaled(side: str, V: SymplecticSummand, kappa: Wedge2) -> List[int]:
    """g^2 * gen_image as an integer vector (bar coordinates have denominators dividing g)."""
    if not in_perp(V, kappa):
        raise PreconditionError("kappa is not supported in the complement of V")
    w, k = _scaled_bar(omega_of_summand(V)), _scaled_bar(kappa)
    left, right = (w, k) if side == "left" else (k, w)
    return [x * y for x in left for y in right]


def apply_contraction(t: Sequence[Fraction], cmat: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    ncols = len(cmat[0])
    out = [Fraction(0)] * ncols
    for coef, row in zip(t, cmat):
        if coef:
            for j, x in enumerate(row):
                if x:
                    out[j] += coef * x
    return out


def count_nonmembers(rows: Sequence[Sequence[int]], cmat: Sequence[Sequence[Fraction]]) -> int:
    """Number of integer tensor rows whose contraction is nonzero (exact product over Z)."""
    if not rows:
        return 0
    cint = integer_rows(list(zip(*cmat)))  # one row per Sym^2 coordinate
    C = flint.fmpz_mat(len(cmat), len(cint), [x for col in zip(*cint) for x in col])
    R = flint.fmpz_mat(len(rows), len(rows[0]), [x for r in rows for x in r])
    P = R * C
    return sum(1 for i in range(P.nrows()) if any(P[i, j] for j in range(P.ncols())))


def relation_checks(summands: Sequence[SymplecticSummand]) -> List[dict]:
    """Image identities of the presentation relations.  Returns the failures."""
    failures = []
    if not summands:
        return failures
    g = summands[0].genus
    om = Wedge2.omega(g)
    for idx, V in enumerate(summands):
        wv = omega_of_summand(V)
        wperp = om - wv
        left = gen_image("left", V, wperp)
        right = gen_image("right", V, wperp)
        expected = [-x for x in tensor(wv, wv)]
        if left != right or left != expected:
            failures.append({"relation": "V vs V-perp", "summand": idx})
        ks = V.perp_wedges()[:3]
        if len(ks) >= 2:
            s = gen_image("left", V, ks[0] + ks[1].scale(2))
            t = [x + 2 * y for x, y in zip(gen_image("left", V, ks[0]), gen_image("left", V, ks[1]))]
            if s != t:
                failures.append({"relation": "linearity", "summand": idx})
    # orthogonal standard pairs
    for d in range(1, g + 1):
        for e in range(1, g + 1):
            if d == e:
                continue
            V, W = standard_summand(g, d), standard_summand(g, e)
            if gen_image("left", V, omega_of_summand(W)) != gen_image("right", W, omega_of_summand(V)):
                failures.append({"relation": "V,omega_W vs omega_V,W", "pair": [d, e]})
    return failures


def kernel_and_span_check(g: int, n: int = 50, seed: int = 0, curve_step: int = 10) -> dict:
    """Exact dim ker(c) together with the span dimension of the generator images.

    The span rank is computed modulo a large prime.  For integer matrices this is
    a lower bound on the rank over Q; since every image lies in ker(c), the rank
    over Q is also bounded by dim ker(c).  Equality of the modular rank with
    dim ker(c) therefore certifies the exact span dimension.
    """
    check_genus(g)
    cmat = contraction_matrix(g)
    tdim = tensor_dimension(g)
    rank_c = bareiss_rank(cmat)
    ker_dim = tdim - rank_c
    family = [standard_summand(g, d) for d in range(1, g + 1)] + random_summands(g, n, seed)
    rows: List[List[int]] = []
    curve = []
    checkpoints = {g + k for k in range(0, n + 1, curve_step)} | {g + n}
    for idx, V in enumerate(family):
        for kappa in V.perp_wedges():
            for side in ("left", "right"):
                rows.append(gen_image_scaled(side, V, kappa))
        if idx + 1 in checkpoints:
            curve.append({"summands": idx + 1, "span_dim": modular_rank(rows, tdim)})
    membership_failures = count_nonmembers(rows, cmat)
    span_dim = curve[-1]["span_dim"]
    relation_failures = len(relation_checks(family))
    nondecreasing = all(x["span_dim"] <= y["span_dim"] for x, y in zip(curve, curve[1:]))
    return {
        "g": g,
        "tensor_dim": tdim,
        "rank_c": rank_c,
        "ker_dim": ker_dim,
        "span_dim": span_dim,
        "membership_failures": membership_failures,
        "relation_failures": relation_failures,
        "descent_ok": check_descent(g),
        "stabilization": curve,
        "span_nondecreasing": nondecreasing,
        "span_equals_kernel": span_dim == ker_dim and membership_failures == 0,
    }


_convention_gates()
