"""Reduced words in the free group on alpha_1, beta_1, ..., alpha_g, beta_g.

A letter is a pair ``(k, s)`` with generator index ``k`` in ``1..2g`` and sign
``s`` in ``{+1, -1}``.  Generator ``2i-1`` is alpha_i (homology class a_i) and
generator ``2i`` is beta_i (class b_i), matching lattice coordinates.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import PreconditionError, StructuralError, UsageError
from .exterior import Wedge2
from .groupring import GroupRingElem, LatticeVector, vadd, vneg, zero_vector

Letter = Tuple[int, int]

_TOKEN = re.compile(r"^([ab])(\d+)('?)$")


def _free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for k, s in letters:
        if out and out[-1][0] == k and out[-1][1] == -s:
            out.pop()
        else:
            out.append((k, s))
    return tuple(out)


class Word:
    """A freely reduced word; reduction happens on construction."""

    __slots__ = ("genus", "letters")

    def __init__(self, genus: int, letters: Iterable[Letter] = ()):
        letters = tuple((int(k), int(s)) for k, s in letters)
        for k, s in letters:
            if not 1 <= k <= 2 * genus or s not in (1, -1):
                raise StructuralError(f"bad letter {(k, s)} for genus {genus}")
        self.genus = genus
        self.letters = _free_reduce(letters)

    @classmethod
    def identity(cls, genus: int) -> "Word":
        return cls(genus)

    @classmethod
    def gen(cls, genus: int, k: int, s: int = 1) -> "Word":
        return cls(genus, [(k, s)])

    @classmethod
    def alpha(cls, genus: int, i: int) -> "Word":
        return cls(genus, [(2 * i - 1, 1)])

    @classmethod
    def beta(cls, genus: int, i: int) -> "Word":
        return cls(genus, [(2 * i, 1)])

    @classmethod
    def parse(cls, genus: int, text: str) -> "Word":
        """Parse ``"a1 b3 a1'"``; a trailing apostrophe marks an inverse."""
        letters = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise UsageError(f"bad word token {tok!r}")
            i = int(m.group(2))
            if not 1 <= i <= genus:
                raise UsageError(f"generator index {i} out of range for genus {genus}")
            k = 2 * i - 1 if m.group(1) == "a" else 2 * i
            letters.append((k, -1 if m.group(3) else 1))
        return cls(genus, letters)

    @classmethod
    def from_json(cls, genus: int, data, path="$") -> "Word":
        if isinstance(data, str):
            return cls.parse(genus, data)
        if not isinstance(data, list):
            raise UsageError("expected a word string or a list of {g, s} pairs", path)
        letters = []
        for i, item in enumerate(data):
            if not isinstance(item, dict) or "g" not in item or "s" not in item:
                raise UsageError("expected {\"g\": int, \"s\": +-1}", f"{path}[{i}]")
            k, s = item["g"], item["s"]
            if not isinstance(k, int) or not 1 <= k <= 2 * genus or s not in (1, -1):
                raise UsageError("letter out of range", f"{path}[{i}]")
            letters.append((k, s))
        return cls(genus, letters)

    def to_json(self):
        return [{"g": k, "s": s} for k, s in self.letters]

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(
            f"{'ab'[(k - 1) % 2]}{(k + 1) // 2}{'' if s == 1 else chr(39)}" for k, s in self.letters
        )

    def __repr__(self):
        return f"Word({self})"

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.genus == other.genus and self.letters == other.letters

    def __hash__(self):
        return hash((self.genus, self.letters))

    def __lt__(self, other):
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def _check(self, other):
        if not isinstance(other, Word) or other.genus != self.genus:
            raise StructuralError("genus mismatch between words")

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.genus, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.genus, [(k, -s) for k, s in reversed(self.letters)])

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(self.genus, base.letters * abs(n))

    def is_identity(self) -> bool:
        return not self.letters


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1."""
    x._check(y)
    return x * y * x.inverse() * y.inverse()


def conjugate(y: Word, x: Word) -> Word:
    """The left conjugate y x y^-1."""
    y._check(x)
    return y * x * y.inverse()


def letter_class(genus: int, letter: Letter) -> LatticeVector:
    k, s = letter
    v = [0] * (2 * genus)
    v[k - 1] = s
    return tuple(v)


def homology_class(w: Word) -> LatticeVector:
    v = [0] * (2 * w.genus)
    for k, s in w.letters:
        v[k - 1] += s
    return tuple(v)


def prefix_classes(w: Word) -> List[LatticeVector]:
    """Homology classes of the prefixes of length 0..len(w)."""
    cur = [0] * (2 * w.genus)
    out = [tuple(cur)]
    for k, s in w.letters:
        cur[k - 1] += s
        out.append(tuple(cur))
    return out


def _raw_pair_sum(w: Word) -> Wedge2:
    """sum_{j<l} v_j ^ v_l over the letter classes of w."""
    g = w.genus
    acc = {}
    run = [0] * (2 * g)
    for k, s in w.letters:
        # run ^ (s e_{k-1})
        c = k - 1
        for i, x in enumerate(run):
            if not x or i == c:
                continue
            key, sign = ((i, c), 1) if i < c else ((c, i), -1)
            acc[key] = acc.get(key, 0) + sign * x * s
        run[c] += s
    return Wedge2(g, acc)


def _calibrate_rho() -> Fraction:
    # Fix the scalar so that rho([alpha_1, beta_1]) = a_1 ^ b_1.
    g = 1
    w = commutator(Word.alpha(g, 1), Word.beta(g, 1))
    raw = _raw_pair_sum(w).coords.get((0, 1), 0)
    if not raw:
        raise RuntimeError("commutator projection calibration failed")
    return Fraction(1) / raw


_RHO_SCALE = _calibrate_rho()


def commutator_projection(w: Word) -> Wedge2:
    """The class of w in H_1([F,F])_F = wedge^2 H_1(F); requires w in [F,F]."""
    if any(homology_class(w)):
        raise PreconditionError(f"word {w} has nonzero homology class; not in [F,F]")
    return _raw_pair_sum(w).scale(_RHO_SCALE)


def fox_derivative(w: Word, k: int) -> GroupRingElem:
    """Abelianized Fox derivative d w / d(generator k)."""
    g = w.genus
    if not 1 <= k <= 2 * g:
        raise StructuralError(f"generator index {k} out of range")
    out = {}
    prefix = zero_vector(g)
    for kk, s in w.letters:
        if kk == k:
            if s == 1:
                out[prefix] = out.get(prefix, 0) + 1
            else:
                p = vadd(prefix, vneg(letter_class(g, (k, 1))))
                out[p] = out.get(p, 0) - 1
        prefix = vadd(prefix, letter_class(g, (kk, s)))
    return GroupRingElem(g, out)


def standard_boundary_word(genus: int, blocks: Sequence[int] | None = None) -> Word:
    """[alpha_i1, beta_i1] ... [alpha_ik, beta_ik] over the given blocks (default all)."""
    blocks = range(1, genus + 1) if blocks is None else blocks
    w = Word.identity(genus)
    for i in blocks:
        w = w * commutator(Word.alpha(genus, i), Word.beta(genus, i))
    return w


def cyclic_reduction(w: Word) -> Tuple[Word, Word]:
    """Split w = u c u^-1 with c cyclically reduced; returns (u, c)."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word(w.genus, letters[:i]), Word(w.genus, letters[i : j + 1])
