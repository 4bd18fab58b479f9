"""The gluing category of monodromic perverse sheaves on the complex line.

An object is a diagram ``Psi --can--> Phi --var--> Psi`` of finite dimensional
rational vector spaces in which ``id - var can`` is invertible.  Matrices act
on column vectors, so ``can`` has shape ``phi_dim x psi_dim``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import DimensionTooLarge, NotCommuting, NotMonodromic, ShapeMismatch
from .exactlin import (
    Matrix,
    Polynomial,
    block_diag,
    charpoly,
    det,
    factor_rational_poly,
    invert,
    is_invertible,
    kernel_basis,
    left_annihilator,
    rank,
    root_multiplicity,
    rref_decompose,
    solve,
)

DEFAULT_MAX_HOM_DIM = 6


def as_matrix(m, rows: int, cols: int, name: str = "matrix") -> Matrix:
    if isinstance(m, Matrix):
        if m.shape != (rows, cols):
            raise ShapeMismatch(f"{name} has shape {m.shape}, expected {(rows, cols)}")
        return m
    try:
        return Matrix(rows, cols, m)
    except ShapeMismatch as exc:
        raise ShapeMismatch(f"{name}: {exc}") from None


@dataclass(frozen=True)
class GlueObject:
    psi_dim: int
    phi_dim: int
    can: Matrix
    var: Matrix

    def __post_init__(self):
        if self.psi_dim < 0 or self.phi_dim < 0:
            raise ShapeMismatch("dimensions must be nonnegative")
        object.__setattr__(self, "can", as_matrix(self.can, self.phi_dim, self.psi_dim, "can"))
        object.__setattr__(self, "var", as_matrix(self.var, self.psi_dim, self.phi_dim, "var"))
        if not is_invertible(Matrix.identity(self.psi_dim) - self.var @ self.can):
            raise NotMonodromic("id - var*can is not invertible")

    @property
    def dims(self) -> tuple[int, int]:
        return (self.psi_dim, self.phi_dim)

    def __repr__(self):
        return (f"GlueObject(psi={self.psi_dim}, phi={self.phi_dim}, "
                f"can={self.can.pretty()}, var={self.var.pretty()})")


def validate_object(psi_dim: int, phi_dim: int, can, var) -> GlueObject:
    """Build a GlueObject from raw dimensions and nested lists."""
    return GlueObject(psi_dim, phi_dim, can, var)


def zero_object() -> GlueObject:
    return GlueObject(0, 0, Matrix.zeros(0, 0), Matrix.zeros(0, 0))


@dataclass(frozen=True)
class GlueMorphism:
    """A pair ``(f, g)`` acting on Psi and Phi and commuting with can and var."""

    source: GlueObject
    target: GlueObject
    f: Matrix
    g: Matrix

    def __post_init__(self):
        X, Y = self.source, self.target
        object.__setattr__(self, "f", as_matrix(self.f, Y.psi_dim, X.psi_dim, "f"))
        object.__setattr__(self, "g", as_matrix(self.g, Y.phi_dim, X.phi_dim, "g"))
        if Y.can @ self.f != self.g @ X.can:
            raise NotCommuting("can_target * f != g * can_source")
        if Y.var @ self.g != self.f @ X.var:
            raise NotCommuting("var_target * g != f * var_source")

    def compose(self, other: GlueMorphism) -> GlueMorphism:
        """``self`` after ``other``."""
        if other.target != self.source:
            raise ShapeMismatch("composition of non-composable morphisms")
        return GlueMorphism(other.source, self.target, self.f @ other.f, self.g @ other.g)

    def is_iso(self) -> bool:
        return is_invertible(self.f) and is_invertible(self.g)

    def inverse(self) -> GlueMorphism:
        return GlueMorphism(self.target, self.source, invert(self.f), invert(self.g))


def validate_morphism(f, g, X: GlueObject, Y: GlueObject) -> GlueMorphism:
    return GlueMorphism(X, Y, f, g)


def identity(X: GlueObject) -> GlueMorphism:
    return GlueMorphism(X, X, Matrix.identity(X.psi_dim), Matrix.identity(X.phi_dim))


def zero_morphism(X: GlueObject, Y: GlueObject) -> GlueMorphism:
    return GlueMorphism(X, Y, Matrix.zeros(Y.psi_dim, X.psi_dim), Matrix.zeros(Y.phi_dim, X.phi_dim))


def monodromy(X: GlueObject) -> tuple[Matrix, Matrix]:
    """``(T_psi, T_phi) = (id - var can, id - can var)``."""
    return (Matrix.identity(X.psi_dim) - X.var @ X.can,
            Matrix.identity(X.phi_dim) - X.can @ X.var)


def direct_sum(X: GlueObject, Y: GlueObject) -> GlueObject:
    return GlueObject(X.psi_dim + Y.psi_dim, X.phi_dim + Y.phi_dim,
                      block_diag(X.can, Y.can), block_diag(X.var, Y.var))


# -- kernels, images, cokernels --------------------------------------------------


def _restrict(A: Matrix, source_basis: Matrix, target_basis: Matrix) -> Matrix:
    # A maps span(source_basis) into span(target_basis); coordinates of the restriction
    return solve(target_basis, A @ source_basis)


def _quotient(P_src: Matrix, P_tgt: Matrix, A: Matrix) -> Matrix:
    # induced map on quotients with projections P_src, P_tgt (both full row rank)
    section = solve(P_src, Matrix.identity(P_src.rows)) if P_src.rows else Matrix.zeros(P_src.cols, 0)
    return P_tgt @ A @ section


@dataclass(frozen=True)
class ExactDecomposition:
    """Kernel, image and cokernel of a morphism ``phi: X -> Y``.

    ``kernel`` is the inclusion ker -> X, ``coimage`` the surjection X -> im,
    ``image`` the inclusion im -> Y and ``cokernel`` the projection Y -> coker.
    """

    kernel: GlueMorphism
    coimage: GlueMorphism
    image: GlueMorphism
    cokernel: GlueMorphism

    @property
    def kernel_object(self) -> GlueObject:
        return self.kernel.source

    @property
    def image_object(self) -> GlueObject:
        return self.image.source

    @property
    def cokernel_object(self) -> GlueObject:
        return self.cokernel.target


def exact_decompose(phi: GlueMorphism) -> ExactDecomposition:
    X, Y = phi.source, phi.target
    _, Kf, If = rref_decompose(phi.f)
    _, Kg, Ig = rref_decompose(phi.g)

    ker = GlueObject(Kf.cols, Kg.cols,
                     _restrict(X.can, Kf, Kg), _restrict(X.var, Kg, Kf))
    im = GlueObject(If.cols, Ig.cols,
                    _restrict(Y.can, If, Ig), _restrict(Y.var, Ig, If))
    Pf, Pg = left_annihilator(phi.f), left_annihilator(phi.g)
    coker = GlueObject(Pf.rows, Pg.rows,
                       _quotient(Pf, Pg, Y.can), _quotient(Pg, Pf, Y.var))

    return ExactDecomposition(
        kernel=GlueMorphism(ker, X, Kf, Kg),
        coimage=GlueMorphism(X, im, solve(If, phi.f), solve(Ig, phi.g)),
        image=GlueMorphism(im, Y, If, Ig),
        cokernel=GlueMorphism(Y, coker, Pf, Pg),
    )


# -- hom spaces and isomorphism ----------------------------------------------------

PairConstraint = Callable[[Matrix, Matrix], Matrix]


def solve_pairs(shape_f: tuple[int, int], shape_g: tuple[int, int],
                constraints: Sequence[PairConstraint]) -> list[tuple[Matrix, Matrix]]:
    """Basis of the pairs ``(f, g)`` annihilated by the given linear constraints.

    Each constraint maps a pair to a matrix and must be linear; the solution
    space is found by evaluating the constraints on elementary pairs.
    """
    nf = shape_f[0] * shape_f[1]
    ng = shape_g[0] * shape_g[1]

    def unpack(vec):
        f = Matrix(shape_f[0], shape_f[1],
                   [vec[i * shape_f[1]:(i + 1) * shape_f[1]] for i in range(shape_f[0])])
        off = nf
        g = Matrix(shape_g[0], shape_g[1],
                   [vec[off + i * shape_g[1]:off + (i + 1) * shape_g[1]] for i in range(shape_g[0])])
        return f, g

    columns = []
    for k in range(nf + ng):
        vec = [0] * (nf + ng)
        vec[k] = 1
        f, g = unpack(vec)
        col = []
        for c in constraints:
            col.extend(x for row in c(f, g).tolist() for x in row)
        columns.append(col)
    neq = len(columns[0]) if columns else 0
    system = Matrix.from_columns(columns, neq) if columns else Matrix.zeros(0, 0)
    K = kernel_basis(system)
    return [unpack(list(K.column(j))) for j in range(K.cols)]


def glue_constraints(X: GlueObject, Y: GlueObject) -> list[PairConstraint]:
    return [lambda f, g: Y.can @ f - g @ X.can,
            lambda f, g: Y.var @ g - f @ X.var]


def hom_space(X: GlueObject, Y: GlueObject) -> list[GlueMorphism]:
    pairs = solve_pairs((Y.psi_dim, X.psi_dim), (Y.phi_dim, X.phi_dim), glue_constraints(X, Y))
    return [GlueMorphism(X, Y, f, g) for f, g in pairs]


def _combine(pairs, coeffs):
    f = pairs[0][0].scale(coeffs[0])
    g = pairs[0][1].scale(coeffs[0])
    for (fi, gi), c in zip(pairs[1:], coeffs[1:]):
        f = f + fi.scale(c)
        g = g + gi.scale(c)
    return f, g


def find_invertible(pairs: Sequence[tuple[Matrix, Matrix]], n: int,
                    generic_tries: int = 8) -> tuple[Matrix, Matrix] | None:
    """An invertible combination of the square pairs, or None if none exists.

    ``det(sum c_i (f_i + g_i))`` is a polynomial whose degree in ``c_i`` is at
    most ``rank(f_i) + rank(g_i)``; it vanishes identically iff it vanishes on a
    grid with one more point than that degree per variable.  A few fixed
    pseudo-random points are tried first since a nonzero determinant found
    anywhere is already a witness.
    """
    if not pairs:
        return (Matrix.zeros(0, 0), Matrix.zeros(0, 0)) if n == 0 else None

    def try_point(coeffs):
        f, g = _combine(pairs, coeffs)
        if det(block_diag(f, g)) != 0:
            return f, g
        return None

    rng = random.Random(0x5EED)
    points = [[1] * len(pairs)]
    points += [[rng.randint(-97, 97) for _ in pairs] for _ in range(generic_tries)]
    for point in points:
        hit = try_point(point)
        if hit:
            return hit
    degrees = [rank(f) + rank(g) for f, g in pairs]
    grids = [range(d + 1) for d in degrees]
    for point in itertools.product(*grids):
        hit = try_point(list(point))
        if hit:
            return hit
    return None


def _invariants(X: GlueObject) -> tuple:
    T_psi, T_phi = monodromy(X)
    return (X.dims, rank(X.can), rank(X.var), charpoly(T_psi), charpoly(T_phi))


def is_isomorphic(X: GlueObject, Y: GlueObject,
                  max_hom_dim: int = DEFAULT_MAX_HOM_DIM) -> tuple[bool, GlueMorphism | None]:
    """Decide ``X ~= Y``; returns ``(answer, witness)``.

    Cheap invariants (dimensions, ranks of can and var, monodromy
    characteristic polynomials) reject most non-isomorphic pairs before the
    hom space is computed.
    """
    if _invariants(X) != _invariants(Y):
        return False, None
    if X.psi_dim + X.phi_dim == 0:
        return True, identity(X)
    homs = hom_space(X, Y)
    if len(homs) > max_hom_dim:
        raise DimensionTooLarge(f"hom space of dimension {len(homs)} exceeds bound {max_hom_dim}")
    if len(hom_space(Y, X)) != len(homs):
        return False, None
    hit = find_invertible([(h.f, h.g) for h in homs], X.psi_dim + X.phi_dim)
    if hit is None:
        return False, None
    return True, GlueMorphism(X, Y, *hit)


# -- Grothendieck classes ------------------------------------------------------------

T_MINUS_ONE = Polynomial([-1, 1])


@dataclass(frozen=True)
class KClass:
    """Composition-factor multiset: skyscrapers plus irreducible monodromy factors."""

    delta_mult: int
    local_factors: tuple[tuple[Polynomial, int], ...] = field(default=())

    def __post_init__(self):
        merged: dict[Polynomial, int] = {}
        for p, m in self.local_factors:
            if m:
                merged[p] = merged.get(p, 0) + m
        items = sorted(merged.items(), key=lambda pm: (pm[0].degree, pm[0].coeffs))
        object.__setattr__(self, "local_factors", tuple(items))

    def __add__(self, other: KClass) -> KClass:
        return KClass(self.delta_mult + other.delta_mult, self.local_factors + other.local_factors)

    @property
    def length(self) -> int:
        return self.delta_mult + sum(m for _, m in self.local_factors)

    @property
    def psi_dim(self) -> int:
        return sum(p.degree * m for p, m in self.local_factors)

    def as_dict(self) -> dict:
        return {"delta_mult": self.delta_mult,
                "local_factors": [[str(p), m] for p, m in self.local_factors]}


def jordan_holder_class(X: GlueObject) -> KClass:
    T_psi, _ = monodromy(X)
    chi = charpoly(T_psi)
    unipotent = root_multiplicity(chi, 1)
    delta = X.phi_dim - X.psi_dim + unipotent
    assert delta >= 0, "negative skyscraper multiplicity for a valid object"
    return KClass(delta, tuple(factor_rational_poly(chi)))


def is_simple(X: GlueObject) -> bool:
    if X.psi_dim == 0:
        return X.phi_dim == 1
    k = jordan_holder_class(X)
    if k.delta_mult != 0 or len(k.local_factors) != 1 or k.local_factors[0][1] != 1:
        return False
    return rank(X.can) == X.phi_dim and rank(X.var) == X.phi_dim
