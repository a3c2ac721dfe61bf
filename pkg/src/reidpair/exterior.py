"""Coordinate models of wedge^2 H, (wedge^2 H)/Q.omega and Sym^2 H over Q.

Basis of wedge^2: e_i ^ e_j for i < j (0-based coordinates, order a_1, b_1, ...).
Basis of Sym^2:  e_i v e_j for i <= j.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Dict, Tuple

from .errors import StructuralError


def wedge_basis(g: int):
    return list(combinations(range(2 * g), 2))


def sym_basis(g: int):
    return list(combinations_with_replacement(range(2 * g), 2))


def _clean(d):
    return {k: v for k, v in d.items() if v}


class _Sparse:
    __slots__ = ("genus", "_c")

    def __init__(self, genus: int, coords=None):
        self.genus = genus
        self._c = _clean({k: Fraction(v) for k, v in (coords or {}).items()})

    def _check(self, other):
        if type(other) is not type(self) or other.genus != self.genus:
            raise StructuralError("incompatible operands")

    def __add__(self, other):
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return type(self)(self.genus, out)

    def __neg__(self):
        return type(self)(self.genus, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, lam):
        lam = Fraction(lam)
        return type(self)(self.genus, {k: lam * v for k, v in self._c.items()})

    __rmul__ = scale

    def __eq__(self, other):
        return type(other) is type(self) and other.genus == self.genus and other._c == self._c

    def __hash__(self):
        return hash((type(self).__name__, self.genus, tuple(sorted(self._c.items()))))

    def __bool__(self):
        return bool(self._c)

    @property
    def coords(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._c)


def _name(i):
    return f"{'ab'[i % 2]}{i // 2 + 1}"


class Wedge2(_Sparse):
    """Element of wedge^2 Q^{2g}."""

    @classmethod
    def wedge(cls, u, v) -> "Wedge2":
        """u ^ v for rational vectors u, v."""
        g = len(u) // 2
        out = {}
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y or i == j:
                    continue
                if i < j:
                    out[(i, j)] = out.get((i, j), 0) + Fraction(x) * y
                else:
                    out[(j, i)] = out.get((j, i), 0) - Fraction(x) * y
        return cls(g, out)

    @classmethod
    def omega(cls, g: int) -> "Wedge2":
        """a_1^b_1 + ... + a_g^b_g."""
        return cls(g, {(2 * i, 2 * i + 1): 1 for i in range(g)})

    def vector(self):
        return [self._c.get(k, Fraction(0)) for k in wedge_basis(self.genus)]

    def symplectic_trace(self) -> Fraction:
        """Coefficient sum along the a_i^b_i diagonal; equals g on omega."""
        return sum((self._c.get((2 * i, 2 * i + 1), Fraction(0)) for i in range(self.genus)), Fraction(0))

    def canonical_bar(self) -> "Wedge2":
        """Representative of the class mod Q.omega with zero symplectic trace."""
        t = self.symplectic_trace()
        if not t:
            return self
        return self - Wedge2.omega(self.genus).scale(t / self.genus)

    def bar_equal(self, other: "Wedge2") -> bool:
        return (self - other).canonical_bar() == Wedge2(self.genus)

    def bar_vector(self):
        """Coordinates of the class in the fixed basis of (wedge^2)/Q.omega.

        Basis: all e_i^e_j other than a_k^b_k, then a_k^b_k - a_{k+1}^b_{k+1}
        for k = 1..g-1.  Length g(2g-1) - 1.
        """
        g = self.genus
        rep = self.canonical_bar()
        off = [rep._c.get(k, Fraction(0)) for k in wedge_basis(g) if not (k[0] % 2 == 0 and k[1] == k[0] + 1)]
        diag = [rep._c.get((2 * i, 2 * i + 1), Fraction(0)) for i in range(g)]
        run = Fraction(0)
        tail = []
        for c in diag[:-1]:
            run += c
            tail.append(run)
        return off + tail

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*{_name(i)}^{_name(j)}" for (i, j), v in sorted(self._c.items()))


def bar_dimension(g: int) -> int:
    return g * (2 * g - 1) - 1


class Sym2(_Sparse):
    """Element of Sym^2 Q^{2g}."""

    @classmethod
    def product(cls, u, v) -> "Sym2":
        g = len(u) // 2
        out = {}
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                k = (i, j) if i <= j else (j, i)
                out[k] = out.get(k, 0) + Fraction(x) * y
        return cls(g, out)

    def vector(self):
        return [self._c.get(k, Fraction(0)) for k in sym_basis(self.genus)]

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*{_name(i)}.{_name(j)}" for (i, j), v in sorted(self._c.items()))
