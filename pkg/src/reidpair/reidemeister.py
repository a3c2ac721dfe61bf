"""The equivariant Reidemeister pairing on the homology of the universal abelian cover.

Three pieces live here:

* ``closed_form_pairing``: the homology-level formulas for separated curves and
  for a separating commutator against a commutator ``[eta, lambda]``.
* ``oracle_pairing``: an independent combinatorial evaluator on the one-vertex
  ribbon graph of the closed surface.
* ``CoverClass`` and ``cover_rewrite``: formal combinations of lifted loops and
  the commutator rewrite rules.

Oracle model.  The surface is a single vertex with 2g loop edges whose cyclic
half-edge order is read off the boundary word of the 4g-gon.  A cyclically
reduced loop visits the vertex between consecutive letters.  The first curve
runs along the core of every edge; the second is pushed slightly to its own
left, so it leaves a half-edge just counterclockwise of it and enters just
clockwise.  Inside the vertex disk both curves are straight chords, and two
chords cross iff their endpoints interleave.  A crossing between visit ``i`` of
``x`` and visit ``j`` of ``y`` contributes ``sign * [h2 - h1 + p_y(j) - p_x(i)]``
where ``p`` is the homology class of the prefix read so far.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .errors import PreconditionError, StructuralError, UsageError
from .groupring import (
    GroupRingElem,
    LatticeVector,
    format_fraction,
    format_vector,
    pairing_atom,
    parse_fraction,
    parse_vector,
    vadd,
    vneg,
    vsub,
    zero_vector,
)
from .surfacegroup import (
    Letter,
    Word,
    commutator,
    cyclic_reduction,
    homology_class,
    prefix_classes,
    standard_boundary_word,
)

# ---------------------------------------------------------------- closed form


def closed_form_pairing(kind: str, h: LatticeVector = None, eta: LatticeVector = None,
                        lam: LatticeVector = None, genus: int = None) -> GroupRingElem:
    """Pairing values forced by homology data.

    ``kind="separated"`` returns 0.  ``kind="separating-vs-commutator"`` returns
    ``[h] - [h+eta] - [h+lam] + [h+eta+lam]``.  The geometric hypothesis is
    taken on trust from the caller.
    """
    if kind == "separated":
        if genus is None:
            genus = len(h) // 2 if h is not None else None
        if genus is None:
            raise UsageError("separated pairing needs a genus or a lattice vector")
        return GroupRingElem.zero(genus)
    if kind == "separating-vs-commutator":
        if h is None or eta is None or lam is None:
            raise UsageError("separating-vs-commutator needs h, eta and lam")
        if not len(h) == len(eta) == len(lam):
            raise StructuralError("lattice vectors of different lengths")
        return pairing_atom(tuple(h), tuple(eta), tuple(lam))
    raise UsageError(f"unknown closed-form kind {kind!r}")


# ---------------------------------------------------------------- ribbon graph

HalfEdge = Tuple[int, int]  # (generator index, +1 at the start of the edge, -1 at its end)


def _start(letter: Letter) -> HalfEdge:
    return (letter[0], letter[1])


def _end(letter: Letter) -> HalfEdge:
    return (letter[0], -letter[1])


@lru_cache(maxsize=None)
def half_edge_positions(genus: int) -> Dict[HalfEdge, int]:
    """Cyclic position of each half-edge around the vertex.

    Derived from the polygon: the corner between letters w_j and w_{j+1} of the
    boundary word spans the half-edges end(w_j) and start(w_{j+1}); chaining
    corners walks once around the vertex.
    """
    w = standard_boundary_word(genus).letters
    n = len(w)
    by_end = {_end(l): i for i, l in enumerate(w)}
    order = []
    he = _end(w[0])
    while he not in order:
        order.append(he)
        he = _start(w[(by_end[he] + 1) % n])
    if len(order) != 4 * genus:
        raise RuntimeError("boundary word does not give a single vertex")
    return {he: i for i, he in enumerate(order)}


def _raw_crossings(x: Word, y: Word, h1: LatticeVector, h2: LatticeVector):
    """Yield (sign, label) for every crossing of the realized curves."""
    g = x.genus
    pos = half_edge_positions(g)
    n = 16 * g  # four slots per half-edge
    ux, cx = cyclic_reduction(x)
    uy, cy = cyclic_reduction(y)
    h1 = vadd(h1, homology_class(ux))
    h2 = vadd(h2, homology_class(uy))
    A, B = cx.letters, cy.letters
    pa, pb = prefix_classes(cx), prefix_classes(cy)
    la, lb = len(A), len(B)
    for i in range(la):
        p = 4 * pos[_end(A[i])]
        q = 4 * pos[_start(A[(i + 1) % la])]
        span = (q - p) % n
        for j in range(lb):
            r = (4 * pos[_end(B[j])] - 1) % n
            s = (4 * pos[_start(B[(j + 1) % lb])] + 1) % n
            r_in = 0 < (r - p) % n < span
            s_in = 0 < (s - p) % n < span
            if r_in == s_in:
                continue
            yield (1 if r_in else -1), vsub(vadd(h2, pb[j + 1]), vadd(h1, pa[i + 1]))


def _evaluate(x, y, h1, h2, sign, label_sign) -> GroupRingElem:
    out: Dict[LatticeVector, int] = {}
    for s, k in _raw_crossings(x, y, h1, h2):
        if label_sign < 0:
            k = vneg(k)
        out[k] = out.get(k, 0) + sign * s
    return GroupRingElem(x.genus, out)


def calibration_battery(genus: int = 4):
    """(x, y, expected) triples: delta=[alpha_d,beta_d] against [eta, lambda] at h=0."""
    cases = []
    zero = zero_vector(genus)
    for d, e in ((1, 2), (2, 1)):
        delta = commutator(Word.alpha(genus, d), Word.beta(genus, d))
        for eta in (Word.alpha(genus, d), Word.beta(genus, d)):
            for lam in (Word.alpha(genus, e), Word.beta(genus, e)):
                expected = closed_form_pairing(
                    "separating-vs-commutator", zero, homology_class(eta), homology_class(lam)
                )
                cases.append((delta, commutator(eta, lam), expected))
    return cases


def _calibrate():
    battery = calibration_battery()
    zero = zero_vector(4)
    fits = [
        (sign, label_sign)
        for sign in (1, -1)
        for label_sign in (1, -1)
        if all(_evaluate(x, y, zero, zero, sign, label_sign) == exp for x, y, exp in battery)
    ]
    if len(fits) != 1:
        raise RuntimeError(f"oracle calibration is not unique: {fits}")
    return fits[0]


CROSSING_SIGN, LABEL_SIGN = _calibrate()


def _require_commutator_word(w: Word, name: str):
    if any(homology_class(w)):
        raise PreconditionError(f"{name} = {w} has nonzero homology class")


def oracle_pairing(x: Word, y: Word, h1: LatticeVector, h2: LatticeVector) -> GroupRingElem:
    """r(<x>^{h1}, <y>^{h2}) computed on the ribbon graph."""
    x._check(y)
    g = x.genus
    if len(h1) != 2 * g or len(h2) != 2 * g:
        raise StructuralError("lift vectors must have length 2g")
    _require_commutator_word(x, "x")
    _require_commutator_word(y, "y")
    return _evaluate(x, y, tuple(h1), tuple(h2), CROSSING_SIGN, LABEL_SIGN)


# ---------------------------------------------------------------- cover classes

# Symbols: ("comm", x_letters, y_letters, h) for <x,y>^h and ("elt", z_letters, h) for <z>^h.


class CoverClass:
    """A formal Q-combination of lifted loops <x,y>^h and <z>^h."""

    __slots__ = ("genus", "_terms")

    def __init__(self, genus: int, terms=()):
        self.genus = genus
        out = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for sym, c in items:
            self._validate(sym)
            c = Fraction(c)
            if c:
                c = out.get(sym, 0) + c
                if c:
                    out[sym] = c
                else:
                    out.pop(sym, None)
        self._terms = out

    def _validate(self, sym):
        g = self.genus
        if sym[0] == "comm":
            _, xl, yl, h = sym
        elif sym[0] == "elt":
            _, zl, h = sym
            if any(homology_class(Word(g, zl))):
                raise PreconditionError("Elt word must have zero homology class")
        else:
            raise StructuralError(f"unknown symbol kind {sym[0]!r}")
        if len(h) != 2 * g:
            raise StructuralError("lift vector length mismatch")

    @classmethod
    def comm(cls, x: Word, y: Word, h: LatticeVector, c=1) -> "CoverClass":
        x._check(y)
        return cls(x.genus, [(("comm", x.letters, y.letters, tuple(h)), c)])

    @classmethod
    def elt(cls, z: Word, h: LatticeVector, c=1) -> "CoverClass":
        return cls(z.genus, [(("elt", z.letters, tuple(h)), c)])

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _sym_key(kv[0]))

    def __add__(self, other):
        if other.genus != self.genus:
            raise StructuralError("genus mismatch")
        return CoverClass(self.genus, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, lam):
        return CoverClass(self.genus, [(s, Fraction(lam) * c) for s, c in self._terms.items()])

    def __eq__(self, other):
        return isinstance(other, CoverClass) and self.genus == other.genus and self._terms == other._terms

    def __hash__(self):
        return hash((self.genus, tuple(self.items())))

    def __len__(self):
        return len(self._terms)

    def symbol_words(self):
        """Pairs (coefficient, word, lift) with the commutator word spelled out."""
        g = self.genus
        for sym, c in self.items():
            if sym[0] == "comm":
                yield c, commutator(Word(g, sym[1]), Word(g, sym[2])), sym[3]
            else:
                yield c, Word(g, sym[1]), sym[2]

    def is_normal(self) -> bool:
        return all(
            sym[0] == "comm"
            and len(sym[1]) == 1 and len(sym[2]) == 1
            and sym[1][0][1] == 1 and sym[2][0][1] == 1
            and _gen_key(sym[1][0][0]) < _gen_key(sym[2][0][0])
            for sym in self._terms
        )

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for sym, c in self.items():
            g = self.genus
            if sym[0] == "comm":
                body = f"<{Word(g, sym[1])}, {Word(g, sym[2])}>^{format_vector(sym[3])}"
            else:
                body = f"<{Word(g, sym[1])}>^{format_vector(sym[2])}"
            parts.append(f"{format_fraction(c)}*{body}")
        return " + ".join(parts)

    def to_json(self):
        out = []
        for sym, c in self.items():
            g = self.genus
            if sym[0] == "comm":
                out.append({"kind": "comm", "x": str(Word(g, sym[1])), "y": str(Word(g, sym[2])),
                            "h": list(sym[3]), "c": format_fraction(c)})
            else:
                out.append({"kind": "elt", "z": str(Word(g, sym[1])), "h": list(sym[2]),
                            "c": format_fraction(c)})
        return {"genus": self.genus, "terms": out}

    @classmethod
    def from_json(cls, data, path="$"):
        if not isinstance(data, dict) or not isinstance(data.get("genus"), int):
            raise UsageError("expected {genus, terms}", path)
        g = data["genus"]
        terms = data.get("terms")
        if not isinstance(terms, list):
            raise UsageError("terms must be a list", f"{path}.terms")
        acc = cls(g)
        for i, t in enumerate(terms):
            p = f"{path}.terms[{i}]"
            if not isinstance(t, dict):
                raise UsageError("expected an object", p)
            h = parse_vector(t.get("h"), g, f"{p}.h")
            c = parse_fraction(t.get("c", "1"))
            if t.get("kind") == "comm":
                acc = acc + cls.comm(Word.from_json(g, t.get("x"), f"{p}.x"),
                                     Word.from_json(g, t.get("y"), f"{p}.y"), h, c)
            elif t.get("kind") == "elt":
                acc = acc + cls.elt(Word.from_json(g, t.get("z"), f"{p}.z"), h, c)
            else:
                raise UsageError("kind must be 'comm' or 'elt'", f"{p}.kind")
        return acc


def _gen_key(k: int):
    # alpha generators before beta generators, then by block
    return ((k - 1) % 2, (k + 1) // 2)


def _sym_key(sym):
    if sym[0] == "comm":
        return (0, sym[1], sym[2], sym[3])
    return (1, sym[1], (), sym[2])


def _letter_vec(genus: int, letter: Letter) -> LatticeVector:
    v = [0] * (2 * genus)
    v[letter[0] - 1] = letter[1]
    return tuple(v)


def _expand_comm(genus: int, xl, yl, h, c, out: Dict):
    """Accumulate the normal form of c * <x,y>^h into ``out``."""
    if len(xl) != 1:
        cur = h
        for letter in xl:
            _expand_comm(genus, (letter,), yl, cur, c, out)
            cur = vadd(cur, _letter_vec(genus, letter))
        return
    (k, s), = xl
    if s == -1:
        # <g^-1, y>^h = -<g, y>^{h - g}
        _expand_comm(genus, ((k, 1),), yl, vsub(h, _letter_vec(genus, (k, 1))), -c, out)
        return
    if len(yl) != 1 or yl[0][1] == -1:
        # <x,y> = -<y,x>, then expand the new first argument
        _expand_comm(genus, yl, xl, h, -c, out)
        return
    (m, _), = yl
    if m == k:
        return
    if _gen_key(k) < _gen_key(m):
        key = (((k, 1),), ((m, 1),), h)
        out[key] = out.get(key, 0) + c
    else:
        key = (((m, 1),), ((k, 1),), h)
        out[key] = out.get(key, 0) - c


def _letter_order(letter: Letter):
    return (letter[0], letter[1])


def _expand_elt(genus: int, zl, h, c, out: Dict):
    """<z>^h as a sum of <p,q>^{h+u} by bubble-sorting the letters of z."""
    z = list(Word(genus, zl).letters)
    while z:
        for i in range(len(z) - 1):
            p, q = z[i], z[i + 1]
            if _letter_order(q) < _letter_order(p):
                # u p q v = (u [p,q] u^-1)(u q p v)
                u = z[:i]
                shift = vadd(h, homology_class(Word(genus, u)))
                _expand_comm(genus, (p,), (q,), shift, c, out)
                z = list(Word(genus, u + [q, p] + z[i + 2:]).letters)
                break
        else:
            if z:
                raise PreconditionError("sorted word did not reduce to the identity")


def cover_rewrite(cc: CoverClass) -> CoverClass:
    """Normal form: a combination of <g_i, g_j>^h with single positive letters, i before j."""
    g = cc.genus
    out: Dict = {}
    for sym, c in cc.terms.items():
        if sym[0] == "comm":
            _expand_comm(g, sym[1], sym[2], sym[3], c, out)
        else:
            _expand_elt(g, sym[1], sym[2], c, out)
    return CoverClass(g, [(("comm", xl, yl, h), c) for (xl, yl, h), c in out.items()])


def pair_with_cover_class(x: Word, h1: LatticeVector, cc: CoverClass) -> GroupRingElem:
    """sum_i c_i r(<x>^{h1}, term_i) over the terms of ``cc``."""
    acc = GroupRingElem.zero(cc.genus)
    for c, w, h in cc.symbol_words():
        acc = acc + oracle_pairing(x, w, h1, h).scale(c)
    return acc
