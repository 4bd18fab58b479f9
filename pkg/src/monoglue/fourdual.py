"""Fourier transform and Verdier duality on gluing data.

The shifted Fourier-Sato transform exchanges nearby and vanishing cycles:
``(Psi, Phi, can, var) -> (Phi, Psi, var, can)``.  Duality transposes
everything and twists ``can`` by the inverse monodromy,

    can* = -var^T (T_psi^-1)^T,    var* = can^T,

which makes it contravariant, exchanges ``j_!`` with ``j_*`` while inverting
the monodromy, and commutes with the transform up to isomorphism.
"""

from __future__ import annotations

from .exactlin import invert
from .gluecat import GlueMorphism, GlueObject, monodromy


def fourier(X: GlueObject) -> GlueObject:
    return GlueObject(X.phi_dim, X.psi_dim, X.var, X.can)


def fourier_morphism(m: GlueMorphism) -> GlueMorphism:
    return GlueMorphism(fourier(m.source), fourier(m.target), m.g, m.f)


def dual_maps(X: GlueObject):
    """``(can*, var*)`` of the dual; shared with the Hodge layer."""
    T_psi, _ = monodromy(X)
    return -(X.var.T @ invert(T_psi).T), X.can.T


def verdier_dual(X: GlueObject) -> GlueObject:
    can, var = dual_maps(X)
    return GlueObject(X.psi_dim, X.phi_dim, can, var)


def dual_morphism(m: GlueMorphism) -> GlueMorphism:
    """The transpose of ``m: X -> Y`` as a morphism ``D(Y) -> D(X)``."""
    return GlueMorphism(verdier_dual(m.target), verdier_dual(m.source), m.f.T, m.g.T)
