"""Formal X(h,x,y) symbols with their relations and image maps into Q[H_Z].

A symbol X(h,x,y) stands for the class of a separating curve paired against a
lifted commutator.  Each symbol carries a ``SplittingWitness`` proving that x and
y are homologically separate.  The witness is a certificate only: two symbols
with the same (h, x, y) are the same generator.

Image maps
----------
``x_q``          X(h,x,y) -> [h] - [h+x] - [h+y] + [h+x+y]
``project(1,.)`` Q[H_Z] -> Q[U_i span(a_i,b_i)] along Span x_q(V1)
``project(2,.)`` further to Q[U_i {0, a_i, b_i, a_i+b_i}] along the Y images
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import PreconditionError, StructuralError, UsageError
from .groupring import (
    GroupRingElem,
    LatticeVector,
    a as avec,
    b as bvec,
    block,
    check_genus,
    format_fraction,
    format_vector,
    omega,
    pairing_atom,
    parse_fraction,
    parse_vector,
    support_blocks,
    vadd,
    vneg,
    vscale,
    vsub,
    zero_vector,
)
from .linalg import det_int, hermite_basis, solve_exact

# ------------------------------------------------------------------ witnesses


def _gram(basis):
    return [[omega(u, v) for v in basis] for u in basis]


class SplittingWitness:
    """A splitting H_Z = X + Y into omega-orthogonal unimodular sublattices."""

    __slots__ = ("xbasis", "ybasis")

    def __init__(self, xbasis: Sequence[LatticeVector], ybasis: Sequence[LatticeVector]):
        xb = tuple(tuple(int(c) for c in v) for v in xbasis)
        yb = tuple(tuple(int(c) for c in v) for v in ybasis)
        allv = xb + yb
        if not allv:
            raise StructuralError("empty witness")
        n = len(allv[0])
        if any(len(v) != n for v in allv) or len(allv) != n:
            raise PreconditionError("witness bases must together have 2g vectors of length 2g")
        if any(omega(u, v) for u in xb for v in yb):
            raise PreconditionError("witness blocks are not omega-orthogonal")
        for name, basis in (("X", xb), ("Y", yb)):
            if basis and abs(det_int(_gram(basis))) != 1:
                raise PreconditionError(f"witness {name}-block pairing is not perfect")
        if abs(det_int(allv)) != 1:
            raise PreconditionError("witness blocks do not split H_Z")
        self.xbasis, self.ybasis = xb, yb

    @classmethod
    def standard(cls, genus: int, xblocks: Sequence[int]) -> "SplittingWitness":
        """X = span of the listed standard blocks, Y = span of the others."""
        xs = sorted(set(xblocks))
        ys = [d for d in range(1, genus + 1) if d not in xs]
        return cls(
            [v for d in xs for v in (avec(genus, d), bvec(genus, d))],
            [v for d in ys for v in (avec(genus, d), bvec(genus, d))],
        )

    @classmethod
    def from_summand(cls, u: LatticeVector, v: LatticeVector) -> "SplittingWitness":
        """X = span(u, v) with omega(u, v) = 1 and Y its orthogonal complement."""
        if omega(u, v) != 1:
            raise PreconditionError("summand basis must satisfy omega(u, v) = 1")
        n = len(u)
        comp = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            # projection onto the complement along span(u, v)
            comp.append(tuple(
                ei - omega(e, v) * ui + omega(e, u) * vi for ei, ui, vi in zip(e, u, v)
            ))
        return cls([tuple(u), tuple(v)], hermite_basis(comp))

    def swapped(self) -> "SplittingWitness":
        return SplittingWitness(self.ybasis, self.xbasis)

    @staticmethod
    def _in_span(basis, w) -> bool:
        if not any(w):
            return True
        if not basis:
            return False
        sol = solve_exact(basis, w)
        return sol is not None and all(c.denominator == 1 for c in sol)

    def in_x(self, w) -> bool:
        return self._in_span(self.xbasis, w)

    def in_y(self, w) -> bool:
        return self._in_span(self.ybasis, w)

    def __eq__(self, other):
        return isinstance(other, SplittingWitness) and (self.xbasis, self.ybasis) == (other.xbasis, other.ybasis)

    def __hash__(self):
        return hash((self.xbasis, self.ybasis))

    def __repr__(self):
        return f"SplittingWitness(X={self.xbasis}, Y={self.ybasis})"


def standard_witness(x: LatticeVector, y: LatticeVector) -> SplittingWitness:
    """Block witness for x and y supported on disjoint sets of standard blocks."""
    g = len(x) // 2
    sy = set(support_blocks(y))
    if sy & set(support_blocks(x)):
        raise PreconditionError(
            f"{format_vector(x)} and {format_vector(y)} share a block; no standard witness"
        )
    return SplittingWitness.standard(g, [d for d in range(1, g + 1) if d not in sy])


# ------------------------------------------------------------------ symbols


@dataclass(frozen=True)
class XSym:
    h: LatticeVector
    x: LatticeVector
    y: LatticeVector
    witness: SplittingWitness

    def __post_init__(self):
        n = len(self.h)
        if len(self.x) != n or len(self.y) != n or len(self.witness.xbasis) + len(self.witness.ybasis) != n:
            raise StructuralError("X-symbol vectors have inconsistent lengths")
        if not self.witness.in_x(self.x):
            raise PreconditionError(f"x = {format_vector(self.x)} is not in the witness X-block")
        if not self.witness.in_y(self.y):
            raise PreconditionError(f"y = {format_vector(self.y)} is not in the witness Y-block")

    @property
    def genus(self):
        return len(self.h) // 2

    @property
    def key(self):
        return (self.h, self.x, self.y)

    def __repr__(self):
        return f"X({format_vector(self.h)}, {format_vector(self.x)}, {format_vector(self.y)})"


def xsym(h, x, y, witness: Optional[SplittingWitness] = None) -> XSym:
    h, x, y = tuple(h), tuple(x), tuple(y)
    return XSym(h, x, y, witness if witness is not None else standard_witness(x, y))


class XExpr:
    """A Q-combination of X-symbols keyed by (h, x, y)."""

    __slots__ = ("genus", "_terms", "_wit")

    def __init__(self, genus: int, terms: Sequence[Tuple[XSym, object]] = ()):
        self.genus = genus
        self._terms: Dict[tuple, Fraction] = {}
        self._wit: Dict[tuple, XSym] = {}  # first symbol seen per key
        for s, c in terms:
            self._add(s, Fraction(c))

    def _add(self, s: XSym, c: Fraction):
        if s.genus != self.genus:
            raise StructuralError("genus mismatch in XExpr")
        if not c:
            return
        k = s.key
        v = self._terms.get(k, 0) + c
        if v:
            self._terms[k] = v
            self._wit.setdefault(k, s)
        else:
            self._terms.pop(k, None)
            self._wit.pop(k, None)

    @classmethod
    def single(cls, s: XSym, c=1) -> "XExpr":
        return cls(s.genus, [(s, c)])

    def items(self) -> List[Tuple[XSym, Fraction]]:
        return [(self._wit[k], self._terms[k]) for k in sorted(self._terms)]

    def keys(self):
        return set(self._terms)

    def coeff(self, h, x, y) -> Fraction:
        return self._terms.get((tuple(h), tuple(x), tuple(y)), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: "XExpr") -> "XExpr":
        if other.genus != self.genus:
            raise StructuralError("genus mismatch")
        out = XExpr(self.genus, self.items())
        for s, c in other.items():
            out._add(s, c)
        return out

    def scale(self, lam) -> "XExpr":
        lam = Fraction(lam)
        return XExpr(self.genus, [(s, lam * c) for s, c in self.items()])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, XExpr) and self.genus == other.genus and self._terms == other._terms

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self._terms.items()))))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{format_fraction(c)}*{s!r}" for s, c in self.items())

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "terms": [
                {
                    "c": format_fraction(c),
                    "h": list(s.h),
                    "x": list(s.x),
                    "y": list(s.y),
                    "witnessX": [list(v) for v in s.witness.xbasis],
                    "witnessY": [list(v) for v in s.witness.ybasis],
                }
                for s, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data, path="$", genus: Optional[int] = None) -> "XExpr":
        if not isinstance(data, dict):
            raise UsageError("expected an object", path)
        terms = data.get("terms")
        if not isinstance(terms, list):
            raise UsageError("terms must be a list", f"{path}.terms")
        g = data.get("genus", genus)
        if g is None and terms and isinstance(terms[0], dict) and isinstance(terms[0].get("h"), list):
            g = len(terms[0]["h"]) // 2
        if not isinstance(g, int) or g < 1:
            raise UsageError("cannot determine genus", f"{path}.genus")
        out = cls(g)
        for i, t in enumerate(terms):
            p = f"{path}.terms[{i}]"
            if not isinstance(t, dict):
                raise UsageError("expected an object", p)
            h = parse_vector(t.get("h"), g, f"{p}.h")
            x = parse_vector(t.get("x"), g, f"{p}.x")
            y = parse_vector(t.get("y"), g, f"{p}.y")
            try:
                c = parse_fraction(t.get("c", "1"))
            except UsageError as exc:
                raise UsageError(str(exc), f"{p}.c") from None
            try:
                if "witnessX" in t or "witnessY" in t:
                    wx, wy = t.get("witnessX"), t.get("witnessY")
                    for name, w in (("witnessX", wx), ("witnessY", wy)):
                        if not isinstance(w, list):
                            raise UsageError("must be a list of vectors", f"{p}.{name}")
                    wit = SplittingWitness(
                        [parse_vector(v, g, f"{p}.witnessX[{j}]") for j, v in enumerate(wx)],
                        [parse_vector(v, g, f"{p}.witnessY[{j}]") for j, v in enumerate(wy)],
                    )
                else:
                    wit = None
                s = xsym(h, x, y, wit)
            except PreconditionError as exc:
                raise UsageError(str(exc), p) from None
            out._add(s, c)
        return out


def x_q(e) -> GroupRingElem:
    """Image of an X-symbol or XExpr in Q[H_Z]."""
    if isinstance(e, XSym):
        return pairing_atom(e.h, e.x, e.y)
    acc: Dict[LatticeVector, Fraction] = {}
    for s, c in e.items():
        for k, v in pairing_atom(s.h, s.x, s.y).terms.items():
            acc[k] = acc.get(k, 0) + c * v
    return GroupRingElem(e.genus, acc)


# ------------------------------------------------------------------ relations

RELATIONS = ("vanishing", "symmetry", "additivity", "inverse", "cube")


def apply_relation(kind: str, s: XSym, params: Optional[dict] = None) -> XExpr:
    """Rewrite ``s`` by one of the five relations; the result has the same x_q image."""
    params = params or {}
    g = s.genus
    h, x, y, w = s.h, s.x, s.y, s.witness
    if kind == "vanishing":
        if any(x) and any(y):
            raise PreconditionError("vanishing relation needs x = 0 or y = 0")
        return XExpr(g)
    if kind == "symmetry":
        return XExpr.single(XSym(h, y, x, w.swapped()))
    if kind == "additivity":
        x1 = tuple(params.get("x1", ()))
        if len(x1) != 2 * g:
            raise PreconditionError("additivity needs a split point x1")
        x2 = vsub(x, x1)
        if not (w.in_x(x1) and w.in_x(x2)):
            raise PreconditionError("additivity split leaves the witness X-block")
        return XExpr(g, [(XSym(h, x1, y, w), 1), (XSym(vadd(h, x1), x2, y, w), 1)])
    if kind == "inverse":
        # X(h', -x', y) = -X(h'-x', x', y) with x' = -x
        return XExpr.single(XSym(vadd(h, x), vneg(x), y, w), -1)
    if kind == "cube":
        k = tuple(params.get("k", ()))
        if len(k) != 2 * g:
            raise PreconditionError("cube relation needs k")
        if not w.in_x(k):
            raise PreconditionError("cube shift k leaves the witness X-block")
        base = vsub(h, k)
        return XExpr(g, [
            (XSym(base, x, y, w), 1),
            (XSym(base, k, y, w), -1),
            (XSym(vadd(base, x), k, y, w), 1),
        ])
    raise UsageError(f"unknown relation {kind!r}")


# ------------------------------------------------------------------ V1 / W1


def v1_block(s) -> Optional[int]:
    """The block d with x in span(a_d,b_d) and y orthogonal to it, or None."""
    h, x, y = (s.h, s.x, s.y) if isinstance(s, XSym) else s
    sx = support_blocks(x)
    if len(sx) != 1 or not any(y):
        return None
    d = sx[0]
    return None if d in support_blocks(y) else d


def in_w1(key) -> bool:
    h, x, y = key
    if any(h) or not any(y):
        return False
    sx, sy = support_blocks(x), support_blocks(y)
    return len(sx) == 1 and sx[0] < min(sy) and sx[0] < len(h) // 2


def _blocks_of(v: LatticeVector):
    return [(d, block(v, d)) for d in support_blocks(v)]


def reduce_to_W1(s: XSym) -> XExpr:
    """Express a V1 symbol through W1 symbols (h = 0, x in block d, y in blocks > d)."""
    d = v1_block(s)
    if d is None:
        raise PreconditionError(f"{s!r} is not a V1 symbol")
    g = s.genus
    acc: Dict[tuple, Fraction] = {}

    def emit(h, x, y, c):
        if not any(x) or not any(y):
            return
        k = (h, x, y)
        acc[k] = acc.get(k, 0) + c

    def step3(h, x, y, c):
        # x in block d, y in blocks > d, h in blocks >= d
        if not any(x) or not any(y):
            return
        if not any(h):
            emit(h, x, y, c)
            return
        d0 = support_blocks(x)[0]
        d1 = support_blocks(h)[0]
        hd = block(h, d1)
        rest = vsub(h, hd)
        if d1 == d0:
            step3(rest, vadd(hd, x), y, c)
            step3(rest, hd, y, -c)
        else:
            step3(rest, x, vadd(hd, y), c)
            step3(rest, x, hd, -c)

    def step2(h, x, y, c):
        # x in block d, y in blocks > d; strip h-blocks below d
        d0 = support_blocks(x)[0]
        low = [i for i in support_blocks(h) if i < d0]
        if not low:
            step3(h, x, y, c)
            return
        k = block(h, low[0])
        base = vsub(h, k)
        step2(base, x, y, c)
        step2(base, k, y, -c)
        step2(vadd(base, x), k, y, c)

    # step 1: split y by blocks
    h = s.h
    for i, yi in _blocks_of(s.y):
        if i > d:
            step2(h, s.x, yi, Fraction(1))
        else:
            step2(h, yi, s.x, Fraction(1))
        h = vadd(h, yi)

    return XExpr(g, [(xsym(*k), c) for k, c in acc.items()])


def p_lift(z: LatticeVector) -> XExpr:
    """sum_i X(0, z_{d_i}, z_{d_{i+1}} + ... + z_{d_r})."""
    parts = [v for _, v in _blocks_of(z)]
    if len(parts) < 2:
        raise PreconditionError(f"{format_vector(z)} has fewer than two nonzero blocks")
    g = len(z) // 2
    zero = zero_vector(g)
    terms = []
    for i in range(len(parts) - 1):
        tail = vadd(*parts[i + 1:]) if len(parts) - i > 2 else parts[i + 1]
        terms.append((xsym(zero, parts[i], tail), 1))
    return XExpr(g, terms)


# ------------------------------------------------------------------ projections


def _project1(xi: GroupRingElem) -> GroupRingElem:
    g = xi.genus
    out: Dict[LatticeVector, Fraction] = {}
    work = dict(xi.terms)
    # strictly decreasing block count: process the largest first
    while work:
        z = max(work, key=lambda v: (len(support_blocks(v)), v))
        c = work.pop(z)
        if len(support_blocks(z)) < 2:
            out[z] = out.get(z, 0) + c
            continue
        rem = x_q(p_lift(z))
        for k, v in rem.terms.items():
            if k == z:
                if v != 1:
                    raise RuntimeError("lift does not hit its leading term")
                continue
            work[k] = work.get(k, 0) - c * v
            if not work[k]:
                del work[k]
    return GroupRingElem(g, out)


def _second_difference_reduce(coeffs: Dict[int, Fraction]) -> Dict[int, Fraction]:
    """Reduce a function on Z modulo e_n - 2e_{n+1} + e_{n+2} onto {e_0, e_1}."""
    c = dict(coeffs)
    hi = max(c, default=0)
    for n in range(hi, 1, -1):
        v = c.pop(n, 0)
        if v:
            # e_n = 2e_{n-1} - e_{n-2} + f_{n-2}
            c[n - 1] = c.get(n - 1, 0) + 2 * v
            c[n - 2] = c.get(n - 2, 0) - v
    lo = min(c, default=0)
    for n in range(lo, 0):
        v = c.pop(n, 0)
        if v:
            # e_n = 2e_{n+1} - e_{n+2} + f_n
            c[n + 1] = c.get(n + 1, 0) + 2 * v
            c[n + 2] = c.get(n + 2, 0) - v
    return {n: v for n, v in c.items() if v}


def _project2(xi: GroupRingElem) -> GroupRingElem:
    g = xi.genus
    xi = _project1(xi)
    out: Dict[LatticeVector, Fraction] = {}
    zero = zero_vector(g)
    byblock: Dict[int, Dict[Tuple[int, int], Fraction]] = {}
    for z, c in xi.terms.items():
        sb = support_blocks(z)
        if not sb:
            out[zero] = out.get(zero, 0) + c
            continue
        d = sb[0]
        nm = (z[2 * d - 2], z[2 * d - 1])
        byblock.setdefault(d, {})[nm] = byblock.setdefault(d, {}).get(nm, 0) + c
    for d, pts in sorted(byblock.items()):
        # rows along a_d
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (n, m), c in pts.items():
            rows.setdefault(m, {})[n] = c
        cols: Dict[int, Dict[int, Fraction]] = {0: {}, 1: {}}
        for m, line in rows.items():
            for n, c in _second_difference_reduce(line).items():
                cols[n][m] = cols[n].get(m, 0) + c
        for n, line in cols.items():
            for m, c in _second_difference_reduce(line).items():
                v = vadd(vscale(n, avec(g, d)), vscale(m, bvec(g, d)))
                out[v] = out.get(v, 0) + c
    return GroupRingElem(g, out)


def project_group_ring(level: int, xi: GroupRingElem) -> GroupRingElem:
    if level == 1:
        return _project1(xi)
    if level == 2:
        return _project2(xi)
    raise UsageError(f"projection level must be 1 or 2, got {level!r}")


# ------------------------------------------------------------------ Y layer


def _unit_index(g: int, x: LatticeVector):
    """(d, 'a' | 'b') if x is a_d or b_d."""
    for d in range(1, g + 1):
        if x == avec(g, d):
            return d, "a"
        if x == bvec(g, d):
            return d, "b"
    return None


@dataclass(frozen=True, order=True)
class YSym:
    d: int
    h: LatticeVector
    x: LatticeVector

    def __post_init__(self):
        g = len(self.h) // 2
        if _unit_index(g, self.x) is None or _unit_index(g, self.x)[0] != self.d:
            raise PreconditionError("Y-symbol x must be a_d or b_d")
        if any(i != self.d for i in support_blocks(self.h)):
            raise PreconditionError("Y-symbol h must lie in block d")

    @property
    def genus(self):
        return len(self.h) // 2

    @property
    def letter(self) -> str:
        return _unit_index(self.genus, self.x)[1]

    def __repr__(self):
        return f"Y({format_vector(self.h)}, {format_vector(self.x)})"


def y_canonicalize(h: LatticeVector, x: LatticeVector, y_witness=None) -> YSym:
    """Y(h, x) with h projected to the block of x; any y witness is dropped."""
    g = len(h) // 2
    u = _unit_index(g, tuple(x))
    if u is None:
        raise PreconditionError(f"{format_vector(x)} is not a standard basis vector")
    d = u[0]
    return YSym(d, block(tuple(h), d), tuple(x))


def y_image(s: YSym) -> GroupRingElem:
    """[h] - 2[h+x] + [h+2x]."""
    return GroupRingElem(s.genus, [(s.h, 1), (vadd(s.h, s.x), -2), (vadd(s.h, vscale(2, s.x)), 1)])


def v2_symbol(h: LatticeVector, x: LatticeVector, z: LatticeVector) -> XSym:
    """The V2 generator X(h, x, x+z) for x in {a_d, b_d}, z in {+-a_e, +-b_e}, with a witness."""
    g = len(h) // 2
    ux = _unit_index(g, tuple(x))
    uz = _unit_index(g, tuple(abs(c) for c in z))
    if ux is None or uz is None or ux[0] == uz[0]:
        raise PreconditionError("V2 needs x in {a_d,b_d} and z in {+-a_e,+-b_e} with d != e")
    d, e = ux[0], uz[0]
    v0 = bvec(g, d) if ux[1] == "a" else vneg(avec(g, d))
    w = next(c for c in (avec(g, e), bvec(g, e), vneg(avec(g, e)), vneg(bvec(g, e))) if omega(c, z) == 1)
    wit = SplittingWitness.from_summand(tuple(x), vadd(v0, w))
    return XSym(tuple(h), tuple(x), vadd(x, z), wit)


def y_relation_residual(d: int, h: LatticeVector) -> GroupRingElem:
    """Image of LHS - RHS of the Y relation at (d, h)."""
    g = len(h) // 2
    a_, b_ = avec(g, d), bvec(g, d)
    h = block(tuple(h), d)
    lhs = (y_image(YSym(d, h, a_)) - y_image(YSym(d, vadd(h, b_), a_)).scale(2)
           + y_image(YSym(d, vadd(h, b_, b_), a_)))
    rhs = (y_image(YSym(d, h, b_)) - y_image(YSym(d, vadd(h, a_), b_)).scale(2)
           + y_image(YSym(d, vadd(h, a_, a_), b_)))
    return lhs - rhs


def in_w2(s: YSym) -> bool:
    return s.letter == "a" or s.h[2 * s.d - 2] in (0, 1)


def reduce_to_W2(s: YSym) -> Dict[YSym, Fraction]:
    """Express Y(h, x) through W2 symbols using the Y relation."""
    return dict(_reduce_w2_cached(s))


@lru_cache(maxsize=None)
def _reduce_w2_cached(s: YSym) -> Tuple[Tuple[YSym, Fraction], ...]:
    if in_w2(s):
        return ((s, Fraction(1)),)
    g, d = s.genus, s.d
    a_, b_ = avec(g, d), bvec(g, d)
    lam = s.h[2 * d - 2]
    # Y(k,a) - 2Y(k+b,a) + Y(k+2b,a) = Y(k,b) - 2Y(k+a,b) + Y(k+2a,b)
    if lam >= 2:
        k = vsub(s.h, vscale(2, a_))
        parts = [
            (YSym(d, k, a_), 1), (YSym(d, vadd(k, b_), a_), -2), (YSym(d, vadd(k, b_, b_), a_), 1),
            (YSym(d, k, b_), -1), (YSym(d, vadd(k, a_), b_), 2),
        ]
    else:
        k = s.h
        parts = [
            (YSym(d, k, a_), 1), (YSym(d, vadd(k, b_), a_), -2), (YSym(d, vadd(k, b_, b_), a_), 1),
            (YSym(d, vadd(k, a_), b_), 2), (YSym(d, vadd(k, a_, a_), b_), -1),
        ]
    acc: Dict[YSym, Fraction] = {}
    for t, c in parts:
        for u, cu in _reduce_w2_cached(t):
            acc[u] = acc.get(u, 0) + c * cu
    return tuple(sorted((u, c) for u, c in acc.items() if c))


def y_combination_image(comb: Dict[YSym, Fraction], genus: int) -> GroupRingElem:
    acc = GroupRingElem.zero(genus)
    for s, c in comb.items():
        acc = acc + y_image(s).scale(c)
    return acc


# ------------------------------------------------------------------ Z / W layer


def theta(genus: int, d: int) -> GroupRingElem:
    """[0] - [a_d] - [b_d] + [a_d + b_d]."""
    if not 1 <= d <= genus:
        raise UsageError(f"block index {d} out of range")
    return pairing_atom(zero_vector(genus), avec(genus, d), bvec(genus, d))


@dataclass(frozen=True, order=True)
class ZWSym:
    kind: str
    d: int
    e: int

    def __post_init__(self):
        if self.kind not in ("Z", "W"):
            raise PreconditionError("kind must be Z or W")
        if self.d == self.e:
            raise PreconditionError("Z/W symbols need distinct blocks")

    def __repr__(self):
        return f"{self.kind}({self.d},{self.e})"


def zw_canonical(kind: str, d: int, e: int) -> Tuple[int, ZWSym]:
    """(sign, symbol) with d < e; Z(e,d) = -Z(d,e) and W(e,d) = W(d,e)."""
    s = ZWSym(kind, d, e)
    if d < e:
        return 1, s
    return (-1 if kind == "Z" else 1), ZWSym(kind, e, d)


def zw_image(s: ZWSym, genus: int) -> GroupRingElem:
    if s.d == s.e:
        raise PreconditionError("d = e")
    td, te = theta(genus, s.d), theta(genus, s.e)
    return td - te if s.kind == "Z" else td + te


def zw_defining_symbol(s: ZWSym, genus: int) -> XSym:
    """X(0, a_d+a_e, b_d-b_e) for Z and X(0, a_d+b_e, b_d+a_e) for W."""
    g, d, e = genus, s.d, s.e
    zero = zero_vector(g)
    if s.kind == "Z":
        x = vadd(avec(g, d), avec(g, e))
        y = vsub(bvec(g, d), bvec(g, e))
    else:
        x = vadd(avec(g, d), bvec(g, e))
        y = vadd(bvec(g, d), avec(g, e))
    return XSym(zero, x, y, SplittingWitness.from_summand(x, bvec(g, d)))


def w3_set(genus: int) -> List[ZWSym]:
    return [ZWSym("Z", d, d + 1) for d in range(1, genus)] + [ZWSym("W", 1, 2)]


def express_in_W3(kind: str, d: int, e: int) -> Dict[ZWSym, Fraction]:
    """Write Z(d,e) or W(d,e) in terms of W3 via the Z and W relations."""
    out: Dict[ZWSym, Fraction] = {}

    def add(comb, c):
        for s, v in comb.items():
            out[s] = out.get(s, 0) + c * v

    if kind == "Z":
        sign, s = zw_canonical("Z", d, e)
        add({ZWSym("Z", k, k + 1): Fraction(1) for k in range(s.d, s.e)}, sign)
    elif kind == "W":
        _, s = zw_canonical("W", d, e)
        if (s.d, s.e) == (1, 2):
            add({s: Fraction(1)}, 1)
        elif s.d == 1:
            # W(1,f) = W(f,1) = Z(f,2) + W(2,1)
            add(express_in_W3("Z", s.e, 2), 1)
            add({ZWSym("W", 1, 2): Fraction(1)}, 1)
        else:
            # W(d,f) = Z(d,1) + W(1,f)
            add(express_in_W3("Z", s.d, 1), 1)
            add(express_in_W3("W", 1, s.e), 1)
    else:
        raise UsageError(f"unknown kind {kind!r}")
    return {s: c for s, c in out.items() if c}


def zw_relations_check(genus: int) -> dict:
    """Image-level residuals of the Z/W relations, W3 expressions, and the W3 image rank."""
    from .linalg import bareiss_rank

    g = check_genus(genus)
    failures = []
    triples = 0
    for d in range(1, g + 1):
        for e in range(1, g + 1):
            if e == d:
                continue
            # Z(d,e) = -Z(e,d) and W(d,e) = W(e,d), via their defining symbols
            z_de = project_group_ring(2, x_q(zw_defining_symbol(ZWSym("Z", d, e), g)))
            z_ed = project_group_ring(2, x_q(zw_defining_symbol(ZWSym("Z", e, d), g)))
            if z_de + z_ed:
                failures.append({"relation": "zw-dumb-Z", "d": d, "e": e, "residual": repr(z_de + z_ed)})
            w_de = project_group_ring(2, x_q(zw_defining_symbol(ZWSym("W", d, e), g)))
            w_ed = project_group_ring(2, x_q(zw_defining_symbol(ZWSym("W", e, d), g)))
            if w_de - w_ed:
                failures.append({"relation": "zw-dumb-W", "d": d, "e": e, "residual": repr(w_de - w_ed)})
            for kind in ("Z", "W"):
                s = ZWSym(kind, d, e)
                direct = zw_image(s, g)
                pipe = project_group_ring(2, x_q(zw_defining_symbol(s, g)))
                if direct != pipe:
                    failures.append({"relation": f"pipeline-{kind}", "d": d, "e": e, "residual": repr(direct - pipe)})
                comb = express_in_W3(kind, d, e)
                if any(t not in w3_set(g) for t in comb):
                    failures.append({"relation": f"w3-support-{kind}", "d": d, "e": e, "residual": repr(comb)})
                via = GroupRingElem.zero(g)
                for t, c in comb.items():
                    via = via + zw_image(t, g).scale(c)
                if via != direct:
                    failures.append({"relation": f"w3-expression-{kind}", "d": d, "e": e, "residual": repr(via - direct)})
            for f in range(1, g + 1):
                if f in (d, e):
                    continue
                triples += 1
                img = lambda k, i, j: project_group_ring(2, x_q(zw_defining_symbol(ZWSym(k, i, j), g)))
                zr = img("Z", d, f) - img("Z", d, e) - img("Z", e, f)
                if zr:
                    failures.append({"relation": "z", "d": d, "e": e, "f": f, "residual": repr(zr)})
                wr = img("W", d, f) - img("Z", d, e) - img("W", e, f)
                if wr:
                    failures.append({"relation": "w", "d": d, "e": e, "f": f, "residual": repr(wr)})
    w3 = w3_set(g)
    images = [zw_image(s, g) for s in w3]
    support = sorted({k for im in images for k in im.terms})
    rank = bareiss_rank([[im.coeff(k) for k in support] for im in images])
    return {
        "genus": g,
        "triples": triples,
        "failures": failures,
        "w3": [repr(s) for s in w3],
        "w3_rank": rank,
        "rank_ok": rank == g,
    }
