"""Generator-defined (anti)homomorphisms and Hopf structure checks.

A GenMorphism carries images for each source generator and extends to
words multiplicatively (in reverse order for antihomomorphisms) and to
polynomials linearly, substituting its parameter map into coefficients.
Images may land in an algebra, a tensor square, or the trivial algebra
(scalars), so coproducts, counits, antipodes, coactions and embeddings
are all the same kind of object.

Axiom checks return lists of (label, rendered residual) pairs; empty
means everything reduced to zero.  Nothing is assumed: morphisms are
checked against the defining relations before their axioms mean much,
and both composition orders of every coassociativity-type identity are
computed independently.
"""

from __future__ import annotations

from . import scalars as sc
from .errors import MissingGeneratorImage
from .ncalg import (
    SCALAR_ALGEBRA,
    Algebra,
    FreePoly,
    Tensor3Poly,
    TensorPoly,
)


def poly_normalizer(system):
    return lambda p: system.normal_form(p)


def tensor_normalizer(lsys, rsys):
    def norm(t: TensorPoly) -> TensorPoly:
        out = TensorPoly.zero(t.lalg, t.ralg)
        for (wl, wr), c in t.terms.items():
            out = out + TensorPoly.of(lsys.nf_word(wl), rsys.nf_word(wr)).scale(c)
        return out

    return norm


class GenMorphism:
    """A map out of an algebra, defined on generators.

    target is an Algebra, a pair of Algebras (tensor square) or
    SCALAR_ALGEBRA.  normalize, when given, is applied after every
    word-image multiplication, which keeps intermediate results in
    normal form and the degrees as low as they can be.
    """

    def __init__(
        self,
        name: str,
        source: Algebra,
        target,
        images: dict,
        parity: str = "hom",
        param_map=None,
        normalize=None,
    ):
        if parity not in ("hom", "antihom"):
            raise ValueError(f"parity must be hom or antihom, got {parity!r}")
        self.name = name
        self.source = source
        self.target = target
        self.parity = parity
        self.param_map = dict(param_map) if param_map else None
        self.normalize = normalize
        self.images = {}
        for key, img in images.items():
            idx = key if isinstance(key, int) else source.index(key)
            self.images[idx] = img
        self._cache = {}

    def _unit(self):
        if isinstance(self.target, tuple):
            lalg, ralg = self.target
            return TensorPoly(lalg, ralg, {((), ()): sc.ONE})
        return FreePoly.unit(self.target)

    def word_image(self, word):
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        letters = reversed(word) if self.parity == "antihom" else word
        out = self._unit()
        for g in letters:
            img = self.images.get(g)
            if img is None:
                raise MissingGeneratorImage(
                    f"{self.name} has no image for {self.source.gens[g]}"
                )
            out = out * img
            if self.normalize is not None:
                out = self.normalize(out)
        self._cache[word] = out
        return out

    def __call__(self, p: FreePoly):
        if p.alg is not self.source:
            raise ValueError(f"{self.name} applied to a polynomial over {p.alg.id}")
        out = None
        for w, c in p.terms.items():
            if self.param_map:
                c = sc.substitute(c, self.param_map)
            img = self.word_image(w).scale(c)
            out = img if out is None else out + img
        if out is None:
            if isinstance(self.target, tuple):
                return TensorPoly.zero(*self.target)
            return FreePoly.zero(self.target)
        return out

    def scalar(self, p: FreePoly):
        """Value of a scalar-valued morphism (counit)."""
        return self(p).scalar_value()

    def __repr__(self):
        return f"GenMorphism({self.name})"


def identity_morphism(alg: Algebra, normalize=None) -> GenMorphism:
    images = {i: FreePoly.from_word(alg, (i,)) for i in range(len(alg.gens))}
    return GenMorphism(f"id_{alg.id}", alg, alg, images, normalize=normalize)


class HopfStructure:
    """Bundle of an algebra's coproduct, counit and antipode together
    with the rewrite system that decides equality."""

    def __init__(self, system, coproduct, counit, antipode):
        self.system = system
        self.alg = system.alg
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode


# -- applying morphisms inside tensors ---------------------------------

def expand_left(m: GenMorphism, t: TensorPoly) -> Tensor3Poly:
    """Apply a tensor-valued morphism to left factors: A(x)B -> (A'(x)A'')(x)B."""
    lalg, mlalg = m.target
    out = Tensor3Poly((lalg, mlalg, t.ralg))
    for (wl, wr), c in t.terms.items():
        img = m(FreePoly.from_word(t.lalg, wl))
        for (u1, u2), d in img.terms.items():
            out.add_term((u1, u2, wr), c * d)
    return out


def expand_right(m: GenMorphism, t: TensorPoly) -> Tensor3Poly:
    """Apply a tensor-valued morphism to right factors: A(x)B -> A(x)(B'(x)B'')."""
    lalg, ralg = m.target
    out = Tensor3Poly((t.lalg, lalg, ralg))
    for (wl, wr), c in t.terms.items():
        img = m(FreePoly.from_word(t.ralg, wr))
        for (u1, u2), d in img.terms.items():
            out.add_term((wl, u1, u2), c * d)
    return out


def contract_left(counit: GenMorphism, t: TensorPoly) -> FreePoly:
    """(counit (x) id) applied to a tensor."""
    out = FreePoly.zero(t.ralg)
    for (wl, wr), c in t.terms.items():
        val = counit.scalar(FreePoly.from_word(t.lalg, wl))
        if val:
            out = out + FreePoly.from_word(t.ralg, wr, c * val)
    return out


def contract_right(counit: GenMorphism, t: TensorPoly) -> FreePoly:
    out = FreePoly.zero(t.lalg)
    for (wl, wr), c in t.terms.items():
        val = counit.scalar(FreePoly.from_word(t.ralg, wr))
        if val:
            out = out + FreePoly.from_word(t.lalg, wl, c * val)
    return out


def convolve(mleft: GenMorphism, mright: GenMorphism, t: TensorPoly, system) -> FreePoly:
    """Multiply the two morphism images of a tensor's factors: the
    antipode axiom's m(S (x) id) composed with a coproduct value."""
    out = FreePoly.zero(system.alg)
    for (wl, wr), c in t.terms.items():
        piece = mleft(FreePoly.from_word(t.lalg, wl)) * mright(
            FreePoly.from_word(t.ralg, wr)
        )
        out = out + system.normal_form(piece).scale(c)
    return out


# -- axiom checks -------------------------------------------------------

def _push(residuals, label, poly_like):
    if not poly_like.is_zero():
        residuals.append((label, poly_like.render()))


def check_morphism_respects_relations(m: GenMorphism, relations) -> list:
    """Images of defining relations must vanish in the target; this is
    what makes a generator-defined map a map of the quotient at all."""
    residuals = []
    for label, rel in relations:
        _push(residuals, f"{m.name}:{label}", m(rel))
    return residuals


def check_hopf_axioms(hopf: HopfStructure, max_degree: int = 3, relations=()) -> list:
    """Coassociativity, counit and antipode axioms on every normal word
    up to max_degree, plus relation preservation for all three maps."""
    cop, eps, anti = hopf.coproduct, hopf.counit, hopf.antipode
    system = hopf.system
    residuals = []
    for m in (cop, eps, anti):
        residuals.extend(check_morphism_respects_relations(m, relations))
    ident = identity_morphism(hopf.alg, normalize=poly_normalizer(system))
    for w in system.normal_words(max_degree):
        word = hopf.alg.render_word(w)
        p = FreePoly.from_word(hopf.alg, w)
        t = cop(p)
        _push(residuals, f"coassoc:{word}", expand_left(cop, t) - expand_right(cop, t))
        _push(residuals, f"counit-left:{word}", contract_left(eps, t) - p)
        _push(residuals, f"counit-right:{word}", contract_right(eps, t) - p)
        unit_eps = FreePoly.unit(hopf.alg, eps.scalar(p))
        _push(residuals, f"antipode-left:{word}", convolve(anti, ident, t, system) - unit_eps)
        _push(residuals, f"antipode-right:{word}", convolve(ident, anti, t, system) - unit_eps)
    return residuals


def check_coaction_covariance(coact: GenMorphism, relations) -> list:
    """The coaction must annihilate the defining relations of its source;
    residuals are reported exactly as computed."""
    return check_morphism_respects_relations(coact, relations)


def check_comodule_axioms(coact: GenMorphism, hopf: HopfStructure, side: str) -> list:
    """Coaction coassociativity and counit laws, generator by generator.

    side "left": coact maps X -> A (x) X and pairs with (coproduct (x) id);
    side "right": X -> X (x) A and pairs with (id (x) coproduct).
    """
    residuals = []
    src = coact.source
    for i, name in enumerate(src.gens):
        p = FreePoly.from_word(src, (i,))
        t = coact(p)
        if side == "left":
            lhs = expand_left(hopf.coproduct, t)
            rhs = expand_right(coact, t)
            back = contract_left(hopf.counit, t)
        elif side == "right":
            lhs = expand_right(hopf.coproduct, t)
            rhs = expand_left(coact, t)
            back = contract_right(hopf.counit, t)
        else:
            raise ValueError("side must be left or right")
        _push(residuals, f"coassoc:{name}", lhs - rhs)
        _push(residuals, f"counit:{name}", back - p)
    return residuals
