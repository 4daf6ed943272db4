"""Words and free noncommutative polynomials over the exact scalar field.

A word is a tuple of generator indices into its algebra's generator list;
the list is stored in increasing precedence order, so the index order is
also the order used by graded-lex comparisons downstream.  Polynomials are
sparse dicts mapping words to nonzero scalars.  Tensor squares and cubes
of algebras reuse the same scheme with pairs and triples of words as keys;
multiplication in a tensor square is componentwise (no braiding).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import scalars as sc
from .errors import AlgebraMismatch

Word = tuple


class Algebra:
    """A finitely generated free algebra shell, identified by id.

    Only the generator names live here; relations belong to rewrite
    systems built on top.  Generators are listed in increasing precedence.
    """

    __slots__ = ("id", "gens", "params", "_index")

    def __init__(self, id: str, gens, params=()):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {id}")
        self.id = id
        self.gens = gens
        self.params = tuple(params)
        self._index = {name: i for i, name in enumerate(gens)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"algebra {self.id} has no generator {name!r}") from None

    def word(self, *names) -> Word:
        return tuple(self._index[n] for n in names)

    def render_word(self, word: Word) -> str:
        if not word:
            return "1"
        parts = []
        for g, run in itertools.groupby(word):
            n = len(list(run))
            name = self.gens[g]
            parts.append(name if n == 1 else f"{name}^{n}")
        return "*".join(parts)

    def __repr__(self):
        return f"Algebra({self.id}, gens={'/'.join(self.gens)})"


#: algebra with no generators; free polys over it are plain scalars
SCALAR_ALGEBRA = Algebra("scalar", ())


def _same(a: Algebra, b: Algebra):
    if a is not b:
        raise AlgebraMismatch(f"operands over {a.id} and {b.id}")


def _coeff(value):
    if isinstance(value, (int, Fraction)):
        return sc.ensure_scalar(value)
    return value


def _merge(into: dict, key, c):
    prev = into.get(key)
    if prev is None:
        if c:
            into[key] = c
    else:
        tot = prev + c
        if tot:
            into[key] = tot
        else:
            del into[key]


class FreePoly:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms=None):
        self.alg = alg
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def unit(cls, alg, coeff=1):
        return cls(alg, {(): _coeff(coeff)})

    @classmethod
    def gen(cls, alg, name):
        return cls(alg, {(alg.index(name),): sc.ONE})

    @classmethod
    def from_word(cls, alg, word, coeff=1):
        return cls(alg, {tuple(word): _coeff(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def constant(self):
        """Scalar coefficient of the empty word."""
        return self.terms.get((), sc.ZERO)

    def scalar_value(self):
        """The value of a polynomial over the trivial algebra."""
        if any(w for w in self.terms):
            raise ValueError("not a scalar-valued polynomial")
        return self.constant()

    def __eq__(self, other):
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return FreePoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        other = self._to_poly(other)
        if other is NotImplemented:
            return NotImplemented
        _same(self.alg, other.alg)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, c)
        return FreePoly(self.alg, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._to_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            _same(self.alg, other.alg)
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    _merge(out, w1 + w2, c1 * c2)
            return FreePoly(self.alg, out)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(sc.ONE / _coeff(other))

    def __pow__(self, n: int):
        out = FreePoly.unit(self.alg)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = _coeff(c)
        if not c:
            return FreePoly(self.alg)
        return FreePoly(self.alg, {w: cc * c for w, cc in self.terms.items()})

    def _to_poly(self, other):
        if isinstance(other, FreePoly):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, sc.Scalar):
            return FreePoly.unit(self.alg, other)
        return NotImplemented

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]), reverse=True)

    def render(self) -> str:
        return _render_terms(self.sorted_terms(), lambda w: self.alg.render_word(w))

    def __repr__(self):
        return f"<{self.alg.id}: {self.render()}>"


def _render_terms(sorted_terms, word_str):
    if not sorted_terms:
        return "0"
    out = []
    for w, c in sorted_terms:
        neg = sc.leading_sign(c) < 0
        mag = -c if neg else c
        cs = sc.render(mag)
        ws = word_str(w)
        if ws == "1":
            piece = cs if _simple(cs) else f"({cs})"
        elif cs == "1":
            piece = ws
        elif _simple(cs):
            piece = f"{cs}*{ws}"
        else:
            piece = f"({cs})*{ws}"
        if not out:
            out.append("-" + piece if neg else piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out)


def _simple(rendered: str) -> bool:
    return " " not in rendered and "/" not in rendered


def substitute_poly(p: FreePoly, bindings) -> FreePoly:
    """Apply a parameter substitution to every coefficient."""
    if not bindings:
        return p
    out = {}
    for w, c in p.terms.items():
        _merge(out, w, sc.substitute(c, bindings))
    return FreePoly(p.alg, out)


def substitute_tensor(t: TensorPoly, bindings) -> TensorPoly:
    if not bindings:
        return t
    out = {}
    for key, c in t.terms.items():
        _merge(out, key, sc.substitute(c, bindings))
    return TensorPoly(t.lalg, t.ralg, out)


def poly_arith(op: str, p: FreePoly, q: FreePoly) -> FreePoly:
    """Named arithmetic entry point: op in {add, sub, mul}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown poly op {op!r}")


def all_words(alg: Algebra, max_degree: int):
    """Every word of length <= max_degree, shortest first."""
    n = len(alg.gens)
    for d in range(max_degree + 1):
        yield from itertools.product(range(n), repeat=d)


class TensorPoly:
    """Element of A (x) B with componentwise multiplication."""

    __slots__ = ("lalg", "ralg", "terms")

    def __init__(self, lalg: Algebra, ralg: Algebra, terms=None):
        self.lalg = lalg
        self.ralg = ralg
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @classmethod
    def zero(cls, lalg, ralg):
        return cls(lalg, ralg)

    @classmethod
    def of(cls, p: FreePoly, q: FreePoly):
        out = {}
        for w1, c1 in p.terms.items():
            for w2, c2 in q.terms.items():
                _merge(out, (w1, w2), c1 * c2)
        return cls(p.alg, q.alg, out)

    def _check(self, other):
        if self.lalg is not other.lalg or self.ralg is not other.ralg:
            raise AlgebraMismatch(
                f"tensor operands over {self.lalg.id}(x){self.ralg.id} "
                f"and {other.lalg.id}(x){other.ralg.id}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (
            self.lalg is other.lalg
            and self.ralg is other.ralg
            and self.terms == other.terms
        )

    __hash__ = None

    def __neg__(self):
        return TensorPoly(self.lalg, self.ralg, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _merge(out, key, c)
        return TensorPoly(self.lalg, self.ralg, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            self._check(other)
            out = {}
            for (l1, r1), c1 in self.terms.items():
                for (l2, r2), c2 in other.terms.items():
                    _merge(out, (l1 + l2, r1 + r2), c1 * c2)
            return TensorPoly(self.lalg, self.ralg, out)
        return self.scale(other)

    def scale(self, c):
        c = _coeff(c)
        if not c:
            return TensorPoly(self.lalg, self.ralg)
        return TensorPoly(
            self.lalg, self.ralg, {k: cc * c for k, cc in self.terms.items()}
        )

    def __rmul__(self, other):
        return self.scale(other)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (len(t[0][0]) + len(t[0][1]), t[0]),
            reverse=True,
        )

    def render(self) -> str:
        return _render_terms(
            self.sorted_terms(),
            lambda key: f"{self.lalg.render_word(key[0])}@{self.ralg.render_word(key[1])}",
        )

    def __repr__(self):
        return f"<{self.lalg.id}(x){self.ralg.id}: {self.render()}>"


class Tensor3Poly:
    """Element of A (x) B (x) C; just the linear structure, used to compare
    the two ways of iterating coproducts and coactions."""

    __slots__ = ("algs", "terms")

    def __init__(self, algs, terms=None):
        self.algs = tuple(algs)
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @classmethod
    def zero(cls, algs):
        return cls(algs)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Tensor3Poly):
            return NotImplemented
        return all(a is b for a, b in zip(self.algs, other.algs)) and (
            self.terms == other.terms
        )

    __hash__ = None

    def __neg__(self):
        return Tensor3Poly(self.algs, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if any(a is not b for a, b in zip(self.algs, other.algs)):
            raise AlgebraMismatch("tensor cube slot mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            _merge(out, key, c)
        return Tensor3Poly(self.algs, out)

    def __sub__(self, other):
        return self + (-other)

    def add_term(self, key, c):
        _merge(self.terms, key, c)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(len(w) for w in t[0]), t[0]),
            reverse=True,
        )

    def render(self) -> str:
        return _render_terms(
            self.sorted_terms(),
            lambda key: "@".join(a.render_word(w) for a, w in zip(self.algs, key)),
        )

    def __repr__(self):
        slots = "(x)".join(a.id for a in self.algs)
        return f"<{slots}: {self.render()}>"
