"""Exact symbolic verification of the Jordanian quantum group pair and the
quantum spheres sitting inside it.

The package builds finitely presented algebras over an exact parameter
field, completes their rewriting systems, and runs a registry of named
identity checks (Hopf axioms, covariance, embeddings, duality pairing,
twisted primitives).  Everything reduces to normal form; a check passes
only when its residuals are structurally zero.
"""

__version__ = "0.1.0"
