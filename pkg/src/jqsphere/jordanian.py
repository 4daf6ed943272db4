"""Bound instances of the standard catalog.

The loader in :mod:`jqsphere.catalog` only parses; this module applies a
set of parameter bindings uniformly and hands out the derived objects:
completed rewrite systems, Hopf structure, matrix entries, coactions,
embeddings, the dual pairing and the distinguished elements.  Everything
is cached per binding set, since verification checks routinely need the
same algebra both fully bound and with a few parameters kept symbolic.
"""

from __future__ import annotations

from . import scalars as sc
from .catalog import load_catalog, default_catalog_dir
from .errors import CatalogParseError, DenominatorVanishes
from .hopf import GenMorphism, HopfStructure, poly_normalizer, tensor_normalizer
from .ncalg import (
    SCALAR_ALGEBRA,
    FreePoly,
    TensorPoly,
    substitute_poly,
    substitute_tensor,
)
from .pairing import DualPairing
from .rewrite import complete, deglex

FUN = "funh"
ENV = "uh"
SPHERE_LEFT = "sphere_left"
SPHERE_RIGHT = "sphere_right"
ALGEBRAS = (FUN, ENV, SPHERE_LEFT, SPHERE_RIGHT)

MATRIX = "monodromy"
PAIRING = "jordanian_duality"
EMBED_LEFT = "embed_left"
EMBED_RIGHT = "embed_right"
EMBED_LEFT_LIMIT = "embed_left_limit"
EMBED_RIGHT_LIMIT = "embed_right_limit"
SPHERE_ISO = "sphere_iso"
SPHERE_ISO_INVERSE = "sphere_iso_inverse"
ELEMENTS = ("PL", "PR", "PL_cleared", "PR_cleared")

MORPHISMS = (
    f"{FUN}_coproduct",
    f"{FUN}_counit",
    f"{FUN}_antipode",
    f"{ENV}_coproduct",
    f"{ENV}_counit",
    f"{ENV}_antipode",
    EMBED_LEFT,
    EMBED_RIGHT,
    EMBED_LEFT_LIMIT,
    EMBED_RIGHT_LIMIT,
    SPHERE_ISO,
    SPHERE_ISO_INVERSE,
)

# Matrix row/column labels paired with the sphere component carrying the
# same index (-1, 0, +1).  Part of the standard catalog contract.
LEFT_AXES = (("m", "xm"), ("z", "x0"), ("p", "xp"))
RIGHT_AXES = (("m", "ym"), ("z", "y0"), ("p", "yp"))

DET_LABEL = "det"


def _bkey(bindings):
    return tuple(sorted((name, sc.render(v)) for name, v in bindings.items()))


def normalize_bindings(bindings):
    """Validate binding names and coerce values to field elements."""
    out = {}
    for name, value in (bindings or {}).items():
        if name not in sc.PARAMS:
            raise ValueError(
                f"unknown parameter {name!r} (have: {', '.join(sc.PARAM_NAMES)})"
            )
        out[name] = sc.ensure_scalar(value)
    return out


class Catalog:
    """Parsed catalog data plus a base binding set and derivation caches."""

    def __init__(self, data, bindings=None, max_degree=6):
        self.data = data
        self.bindings = normalize_bindings(bindings)
        self.max_degree = max_degree
        self._systems = {}
        self._morphisms = {}
        self._coactions = {}
        self._pairings = {}
        self._validate()

    def _validate(self):
        missing = [n for n in ALGEBRAS if n not in self.data.presentations]
        missing += [n for n in MORPHISMS if n not in self.data.morphisms]
        if MATRIX not in self.data.matrices:
            missing.append(MATRIX)
        if PAIRING not in self.data.pairings:
            missing.append(PAIRING)
        missing += [n for n in ELEMENTS if n not in self.data.elements]
        if missing:
            raise CatalogParseError(
                "catalog is missing standard entries: " + ", ".join(missing)
            )
        fun = self.algebra(FUN)
        labels = self.data.matrices[MATRIX].labels
        for axes, sphere in ((LEFT_AXES, SPHERE_LEFT), (RIGHT_AXES, SPHERE_RIGHT)):
            gens = self.algebra(sphere).gens
            for label, gname in axes:
                if label not in labels or gname not in gens:
                    raise CatalogParseError(
                        f"matrix label {label!r} / generator {gname!r} not found"
                    )
        if self.data.matrices[MATRIX].algebra is not fun:
            raise CatalogParseError(f"matrix {MATRIX} must live over {FUN}")

    # -- binding plumbing ------------------------------------------------

    def effective(self, without=()):
        """Base bindings with the given names kept symbolic."""
        return {n: v for n, v in self.bindings.items() if n not in without}

    def describe(self, bindings):
        return {name: sc.render(v) for name, v in sorted(bindings.items())}

    def _bound(self, bindings):
        return self.bindings if bindings is None else bindings

    # -- algebra level -----------------------------------------------------

    def algebra(self, name):
        pres = self.data.presentations.get(name)
        if pres is None:
            raise CatalogParseError(f"unknown algebra {name!r}")
        return pres.algebra

    def relations(self, name, bindings=None, skip=()):
        """Defining relations as (label, polynomial), bindings applied."""
        b = self._bound(bindings)
        out = []
        for label, poly in self.data.presentations[name].relations:
            if label in skip:
                continue
            out.append((label, substitute_poly(poly, b) if b else poly))
        return out

    def system(self, name, bindings=None, skip=()):
        b = self._bound(bindings)
        key = (name, skip, _bkey(b))
        if key not in self._systems:
            rels = [p for _, p in self.relations(name, b, skip) if not p.is_zero()]
            self._systems[key] = complete(
                deglex(self.algebra(name)), rels, max_degree=self.max_degree
            )
        return self._systems[key]

    # -- morphisms ---------------------------------------------------------

    def _normalizer(self, target, bindings):
        if target is SCALAR_ALGEBRA:
            return None
        if isinstance(target, tuple):
            return tensor_normalizer(
                self.system(target[0].id, bindings),
                self.system(target[1].id, bindings),
            )
        return poly_normalizer(self.system(target.id, bindings))

    def morphism(self, name, bindings=None):
        b = self._bound(bindings)
        key = (name, _bkey(b))
        if key not in self._morphisms:
            spec = self.data.morphisms[name]
            images = {}
            for gname, img in spec.images.items():
                if not b:
                    images[gname] = img
                elif isinstance(img, TensorPoly):
                    images[gname] = substitute_tensor(img, b)
                else:
                    images[gname] = substitute_poly(img, b)
            pmap = {n: sc.substitute(v, b) if b else v for n, v in spec.param_map.items()}
            self._morphisms[key] = GenMorphism(
                name,
                spec.source,
                spec.target,
                images,
                parity=spec.parity,
                param_map=pmap or None,
                normalize=self._normalizer(spec.target, b),
            )
        return self._morphisms[key]

    def hopf(self, name, bindings=None):
        b = self._bound(bindings)
        return HopfStructure(
            self.system(name, b),
            self.morphism(f"{name}_coproduct", b),
            self.morphism(f"{name}_counit", b),
            self.morphism(f"{name}_antipode", b),
        )

    # -- matrix and coactions ----------------------------------------------

    def matrix(self, bindings=None):
        """Monodromy entries keyed by (row label, column label)."""
        b = self._bound(bindings)
        spec = self.data.matrices[MATRIX]
        if not b:
            return dict(spec.entries)
        return {rc: substitute_poly(p, b) for rc, p in spec.entries.items()}

    @property
    def matrix_labels(self):
        return self.data.matrices[MATRIX].labels

    def coaction(self, side, bindings=None):
        """Tensor-valued morphism turning a sphere into a funh comodule.

        Left spheres corotate by rows (component goes to the right tensor
        leg), right spheres by columns (component goes to the left leg).
        """
        b = self._bound(bindings)
        key = (side, _bkey(b))
        if key in self._coactions:
            return self._coactions[key]
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        axes = LEFT_AXES if side == "left" else RIGHT_AXES
        sphere = self.algebra(SPHERE_LEFT if side == "left" else SPHERE_RIGHT)
        entries = self.matrix(b)
        images = {}
        for label, gname in axes:
            acc = None
            for olabel, oname in axes:
                comp = FreePoly.gen(sphere, oname)
                if side == "left":
                    term = TensorPoly.of(entries[(label, olabel)], comp)
                else:
                    term = TensorPoly.of(comp, entries[(olabel, label)])
                acc = term if acc is None else acc + term
            images[gname] = acc
        fun = self.algebra(FUN)
        target = (fun, sphere) if side == "left" else (sphere, fun)
        morph = GenMorphism(
            f"coaction_{side}",
            sphere,
            target,
            images,
            normalize=self._normalizer(target, b),
        )
        self._coactions[key] = morph
        return morph

    # -- pairing and elements ------------------------------------------------

    def pairing(self, bindings=None):
        b = self._bound(bindings)
        key = _bkey(b)
        if key not in self._pairings:
            spec = self.data.pairings[PAIRING]
            table = {
                pair: sc.substitute(v, b) if b else v for pair, v in spec.table.items()
            }
            self._pairings[key] = DualPairing(
                self.hopf(ENV, b), self.hopf(FUN, b), table
            )
        return self._pairings[key]

    def element(self, name, bindings=None, required=True):
        """A named element with bindings applied.

        Returns None when a binding makes the element ill defined (a
        vanishing denominator) and required is False.
        """
        b = self._bound(bindings)
        spec = self.data.elements[name]
        try:
            return substitute_poly(spec.poly, b) if b else spec.poly
        except DenominatorVanishes:
            if required:
                raise
            return None


def build_catalog(bindings=None, max_degree=6, paths=None):
    """Load catalog files (the packaged set by default) and bind them."""
    if paths is None:
        paths = [default_catalog_dir()]
    return Catalog(load_catalog(paths), bindings=bindings, max_degree=max_degree)
