"""Exact arithmetic in the group ring Q[H_Z] with H_Z = Z^{2g}.

Lattice vectors are plain tuples of ints in the coordinate order
(a_1, b_1, ..., a_g, b_g).  A group-ring element is a sparse map from
lattice vectors to nonzero Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .errors import PreconditionError, StructuralError, UsageError

LatticeVector = Tuple[int, ...]

MIN_GENUS = 4


def check_genus(g: int) -> int:
    """Validate the genus of a genus-scoped context (suites require g >= 4)."""
    from .errors import ConfigurationError

    if not isinstance(g, int) or g < MIN_GENUS:
        raise ConfigurationError(f"genus must be an integer >= {MIN_GENUS}, got {g!r}")
    return g


def zero_vector(g: int) -> LatticeVector:
    return (0,) * (2 * g)


def basis_vector(g: int, index: int) -> LatticeVector:
    """Unit vector for 0-based coordinate ``index``."""
    v = [0] * (2 * g)
    v[index] = 1
    return tuple(v)


def a(g: int, i: int) -> LatticeVector:
    """The class a_i (1-based block index)."""
    return basis_vector(g, 2 * (i - 1))


def b(g: int, i: int) -> LatticeVector:
    return basis_vector(g, 2 * (i - 1) + 1)


def vadd(*vs: LatticeVector) -> LatticeVector:
    return tuple(sum(c) for c in zip(*vs))


def vsub(u: LatticeVector, v: LatticeVector) -> LatticeVector:
    return tuple(x - y for x, y in zip(u, v))


def vneg(u: LatticeVector) -> LatticeVector:
    return tuple(-x for x in u)


def vscale(n: int, u: LatticeVector) -> LatticeVector:
    return tuple(n * x for x in u)


def omega(u, v) -> int:
    """Standard symplectic pairing: omega(a_i, b_i) = 1."""
    return sum(u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i] for i in range(len(u) // 2))


def block(u: LatticeVector, d: int) -> LatticeVector:
    """Component of ``u`` in span(a_d, b_d), as a full-length vector."""
    v = [0] * len(u)
    v[2 * (d - 1)] = u[2 * (d - 1)]
    v[2 * (d - 1) + 1] = u[2 * (d - 1) + 1]
    return tuple(v)


def support_blocks(u: LatticeVector):
    """Sorted 1-based indices of the blocks where ``u`` is nonzero."""
    return [i + 1 for i in range(len(u) // 2) if u[2 * i] or u[2 * i + 1]]


def parse_fraction(s) -> Fraction:
    if isinstance(s, bool):
        raise UsageError(f"expected a rational, got {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {s!r}") from exc
    raise UsageError(f"expected a rational string, got {s!r}")


def format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class GroupRingElem:
    """An element sum c_h [h] of Q[Z^{2g}].

    Instances are immutable; arithmetic returns new elements.
    """

    __slots__ = ("genus", "_terms", "_hash")

    def __init__(self, genus: int, terms: Mapping[LatticeVector, object] | Iterable = ()):
        self.genus = genus
        clean: Dict[LatticeVector, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        n = 2 * genus
        for h, c in items:
            h = tuple(h)
            if len(h) != n:
                raise StructuralError(f"lattice vector {h} has length {len(h)}, expected {n}")
            c = Fraction(c)
            if c:
                c = clean.get(h, 0) + c
                if c:
                    clean[h] = c
                else:
                    clean.pop(h, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def point(cls, h: LatticeVector, c=1) -> "GroupRingElem":
        """The element c[h]."""
        return cls(len(h) // 2, {tuple(h): c})

    @classmethod
    def zero(cls, genus: int) -> "GroupRingElem":
        return cls(genus)

    @property
    def terms(self) -> Dict[LatticeVector, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def support(self):
        return sorted(self._terms)

    def coeff(self, h: LatticeVector) -> Fraction:
        return self._terms.get(tuple(h), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "GroupRingElem"):
        if not isinstance(other, GroupRingElem):
            raise TypeError(f"expected GroupRingElem, got {type(other).__name__}")
        if other.genus != self.genus:
            raise StructuralError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for h, c in other._terms.items():
            out[h] = out.get(h, 0) + c
        return GroupRingElem(self.genus, out)

    def __neg__(self):
        return GroupRingElem(self.genus, {h: -c for h, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, lam) -> "GroupRingElem":
        lam = Fraction(lam)
        return GroupRingElem(self.genus, {h: lam * c for h, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupRingElem):
            return self.multiply(other)
        return self.scale(other)

    def __rmul__(self, lam):
        return self.scale(lam)

    def multiply(self, other: "GroupRingElem") -> "GroupRingElem":
        self._check(other)
        out: Dict[LatticeVector, Fraction] = {}
        for h1, c1 in self._terms.items():
            for h2, c2 in other._terms.items():
                k = vadd(h1, h2)
                out[k] = out.get(k, 0) + c1 * c2
        return GroupRingElem(self.genus, out)

    def translate(self, h: LatticeVector) -> "GroupRingElem":
        """Deck action: every [k] becomes [k + h]."""
        if len(h) != 2 * self.genus:
            raise StructuralError(f"translation vector has length {len(h)}")
        return GroupRingElem(self.genus, {vadd(k, h): c for k, c in self._terms.items()})

    def augment(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def hmap(self) -> Tuple[Fraction, ...]:
        """sum c_h * h as a rational vector."""
        out = [Fraction(0)] * (2 * self.genus)
        for h, c in self._terms.items():
            for i, x in enumerate(h):
                if x:
                    out[i] += c * x
        return tuple(out)

    def involution(self) -> "GroupRingElem":
        return GroupRingElem(self.genus, {vneg(h): c for h, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.genus == other.genus and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.genus, tuple(self.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for h, c in self.items():
            parts.append(f"{format_fraction(c)}*[{format_vector(h)}]")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "terms": [{"h": list(h), "c": format_fraction(c)} for h, c in self.items()],
        }

    @classmethod
    def from_json(cls, data, path="$") -> "GroupRingElem":
        if not isinstance(data, dict):
            raise UsageError("expected an object", path)
        genus = data.get("genus")
        if not isinstance(genus, int) or genus < 1:
            raise UsageError("genus must be a positive integer", f"{path}.genus")
        terms = data.get("terms")
        if not isinstance(terms, list):
            raise UsageError("terms must be a list", f"{path}.terms")
        pairs = []
        for i, t in enumerate(terms):
            p = f"{path}.terms[{i}]"
            if not isinstance(t, dict):
                raise UsageError("expected an object", p)
            h = parse_vector(t.get("h"), genus, f"{p}.h")
            try:
                c = parse_fraction(t.get("c"))
            except UsageError as exc:
                raise UsageError(str(exc), f"{p}.c") from None
            pairs.append((h, c))
        return cls(genus, pairs)


def parse_vector(v, genus: int, path="$") -> LatticeVector:
    if not isinstance(v, list) or len(v) != 2 * genus:
        raise UsageError(f"expected a list of {2 * genus} integers", path)
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise UsageError("coordinates must be integers", path)
    return tuple(v)


def format_vector(h: LatticeVector) -> str:
    """Human-readable form such as ``a1+2b3``; the zero vector prints as ``0``."""
    parts = []
    for i, x in enumerate(h):
        if not x:
            continue
        name = f"{'ab'[i % 2]}{i // 2 + 1}"
        if x == 1:
            parts.append(f"+{name}")
        elif x == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{x:+d}{name}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def pairing_atom(h: LatticeVector, x: LatticeVector, y: LatticeVector) -> GroupRingElem:
    """[h] - [h+x] - [h+y] + [h+x+y]."""
    g = len(h) // 2
    return GroupRingElem(
        g,
        [(h, 1), (vadd(h, x), -1), (vadd(h, y), -1), (vadd(h, x, y), 1)],
    )


def require_same_genus(*elems):
    gs = {e.genus for e in elems}
    if len(gs) > 1:
        raise StructuralError(f"genus mismatch: {sorted(gs)}")


def require(cond: bool, message: str):
    if not cond:
        raise PreconditionError(message)
