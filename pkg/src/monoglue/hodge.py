"""Mixed Hodge structures with rational filtrations, and Hodge gluing data.

Only Hodge-Tate structures are modelled: both filtrations are defined over
Q and every weight-graded piece ``gr^W_{2m}`` is of type ``(m, m)``, so such a
structure is a direct sum of Tate structures ``Q(n)`` (weight ``-2n``).

Filtrations are step functions stored by their jumps.  An increasing
filtration records ``(k, W_k)`` only where ``W_k != W_{k-1}``; a decreasing one
records ``(p, F^p)`` only where ``F^p != F^{p+1}``.  Subspaces are kept in
reduced column echelon form, so equality of structures is equality of data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import NotFiltration, NotHodgeMorphism, NotPure, ShapeMismatch
from .exactlin import Matrix, block_diag, invert, subspace
from .fourdual import dual_maps
from .gluecat import (
    GlueObject,
    as_matrix,
    find_invertible,
    glue_constraints,
    solve_pairs,
)


@dataclass(frozen=True)
class Filtration:
    dim: int
    increasing: bool
    steps: tuple[tuple[int, Matrix], ...] = ()

    @classmethod
    def build(cls, dim: int, increasing: bool, entries: Iterable[tuple[int, Matrix]]) -> Filtration:
        """Complete a partial description to a normalized step function.

        For an increasing filtration a missing index takes the value at the
        nearest specified index below it (zero if there is none); for a
        decreasing one, the nearest specified index above it.  The outermost
        specified subspace must be the whole space.
        """
        table: dict[int, Matrix] = {}
        for k, basis in entries:
            k = int(k)
            if k in table:
                raise NotFiltration(f"index {k} given twice")
            if basis.rows != dim:
                raise ShapeMismatch(f"basis at index {k} has {basis.rows} rows, expected {dim}")
            table[k] = subspace.span(basis)
        order = sorted(table, reverse=not increasing)
        prev = subspace.zero(dim)
        steps = []
        for k in order:
            S = table[k]
            if not subspace.contains(S, prev):
                kind = "W" if increasing else "F"
                raise NotFiltration(f"{kind} is not monotone at index {k}")
            if S != prev:
                steps.append((k, S))
            prev = S
        if prev.cols != dim:
            raise NotFiltration("filtration is not exhaustive")
        steps.sort(key=lambda kv: kv[0])
        return cls(dim, increasing, tuple(steps))

    def at(self, k: int) -> Matrix:
        if self.increasing:
            best = subspace.zero(self.dim)
            for idx, S in self.steps:
                if idx <= k:
                    best = S
            return best
        for idx, S in self.steps:
            if idx >= k:
                return S
        return subspace.zero(self.dim)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.steps)

    def window(self) -> range:
        """Indices outside which the filtration is constant, padded by one."""
        if not self.steps:
            return range(0, 1)
        return range(min(self.indices) - 1, max(self.indices) + 2)

    def shift(self, offset: int) -> Filtration:
        """Filtration G with ``G_k = self_{k + offset}``."""
        return Filtration(self.dim, self.increasing,
                          tuple((k - offset, S) for k, S in self.steps))

    def transport(self, a: Matrix) -> Filtration:
        return Filtration.build(self.dim, self.increasing,
                                [(k, a @ S) for k, S in self.steps])

    def as_entries(self) -> list[tuple[int, Matrix]]:
        return list(self.steps)


@dataclass(frozen=True)
class MixedHodgeStructure:
    dim: int
    weight: Filtration
    hodge: Filtration

    def __post_init__(self):
        if self.weight.dim != self.dim or self.hodge.dim != self.dim:
            raise ShapeMismatch("filtration dimension differs from the space")
        if not self.weight.increasing or self.hodge.increasing:
            raise NotFiltration("W must be increasing and F decreasing")
        self._check_purity()

    def _check_purity(self):
        for n in self.weight.indices:
            Wn, Wprev = self.weight.at(n), self.weight.at(n - 1)
            gr = Wn.cols - Wprev.cols
            if gr == 0:
                continue
            if n % 2:
                raise NotPure(f"gr^W_{n} is nonzero in odd weight")
            m = n // 2
            for p in range(min(self.hodge.window().start, m) - 1,
                           max(self.hodge.window().stop, m + 2) + 1):
                piece = subspace.add(subspace.intersect(self.hodge.at(p), Wn), Wprev).cols - Wprev.cols
                expected = gr if p <= m else 0
                if piece != expected:
                    raise NotPure(
                        f"gr^W_{n} is not of type ({m},{m}): induced F^{p} has dimension "
                        f"{piece}, expected {expected}")

    def gr_dims(self) -> dict[int, int]:
        out = {}
        for n in self.weight.indices:
            d = self.weight.at(n).cols - self.weight.at(n - 1).cols
            if d:
                out[n] = d
        return out

    def transport(self, a: Matrix) -> MixedHodgeStructure:
        """Image of this structure under the coordinate change ``a``."""
        return MixedHodgeStructure(self.dim, self.weight.transport(a), self.hodge.transport(a))


def mhs_validate(dim: int, weight: Iterable[tuple[int, Matrix]],
                 hodge: Iterable[tuple[int, Matrix]]) -> MixedHodgeStructure:
    """Build a structure from ``(index, spanning columns)`` entries."""
    return MixedHodgeStructure(dim, Filtration.build(dim, True, weight),
                               Filtration.build(dim, False, hodge))


def tate(n: int, dim: int = 1) -> MixedHodgeStructure:
    """``Q(n)^dim``: weight ``-2n``, Hodge filtration jumping after ``-n``."""
    full = subspace.full(dim)
    return mhs_validate(dim, [(-2 * n, full)], [(-n, full)] if dim else [])


def zero_mhs() -> MixedHodgeStructure:
    return mhs_validate(0, [], [])


def mhs_direct_sum(M: MixedHodgeStructure, N: MixedHodgeStructure) -> MixedHodgeStructure:
    def summed(fm: Filtration, fn: Filtration):
        idx = sorted(set(fm.indices) | set(fn.indices))
        return [(k, block_diag(fm.at(k), fn.at(k))) for k in idx]

    return mhs_validate(M.dim + N.dim, summed(M.weight, N.weight), summed(M.hodge, N.hodge))


def tate_twist(M: MixedHodgeStructure, n: int) -> MixedHodgeStructure:
    """``M(n)``: ``W_k`` becomes ``W_{k+2n}`` and ``F^p`` becomes ``F^{p+n}``."""
    return MixedHodgeStructure(M.dim, M.weight.shift(2 * n), M.hodge.shift(n))


def mhs_dual(M: MixedHodgeStructure) -> MixedHodgeStructure:
    """Dual structure, in the dual basis: ``W*_k = ann W_{-k-1}``, ``F*^p = ann F^{1-p}``."""
    ws = M.weight.window()
    hs = M.hodge.window()
    weight = [(k, subspace.annihilator(M.weight.at(-k - 1)))
              for k in range(-ws.stop, -ws.start + 1)]
    hodge = [(p, subspace.annihilator(M.hodge.at(1 - p)))
             for p in range(1 - hs.stop, 2 - hs.start)]
    return mhs_validate(M.dim, weight, hodge)


@dataclass(frozen=True)
class MorphismReport:
    is_morphism: bool
    is_strict: bool
    failures: tuple[str, ...] = field(default=())

    def __bool__(self):
        return self.is_morphism


def _indices(M: MixedHodgeStructure, N: MixedHodgeStructure, which: str) -> range:
    a = getattr(M, which).window()
    b = getattr(N, which).window()
    return range(min(a.start, b.start), max(a.stop, b.stop))


def mhs_morphism_validate(f: Matrix, M: MixedHodgeStructure, N: MixedHodgeStructure) -> MorphismReport:
    """Check that ``f: M -> N`` preserves both filtrations, and whether it is strict."""
    if f.shape != (N.dim, M.dim):
        raise ShapeMismatch(f"map of shape {f.shape} between spaces of dims {M.dim} and {N.dim}")
    failures = []
    strict = True
    image = subspace.span(f)
    for which, sym in (("weight", "W"), ("hodge", "F")):
        src, tgt = getattr(M, which), getattr(N, which)
        for k in _indices(M, N, which):
            pushed = subspace.image(f, src.at(k))
            if not subspace.contains(tgt.at(k), pushed):
                failures.append(f"{sym}_{k}" if which == "weight" else f"{sym}^{k}")
            elif subspace.intersect(image, tgt.at(k)) != pushed:
                strict = False
    ok = not failures
    return MorphismReport(ok, ok and strict, tuple(failures))


# -- Hodge gluing data ------------------------------------------------------------


@dataclass(frozen=True)
class HodgeGlueObject:
    """``psi --can--> phi --var--> psi(-1)`` with ``id - var can`` invertible."""

    psi: MixedHodgeStructure
    phi: MixedHodgeStructure
    can: Matrix
    var: Matrix

    def __post_init__(self):
        object.__setattr__(self, "can", as_matrix(self.can, self.phi.dim, self.psi.dim, "can"))
        object.__setattr__(self, "var", as_matrix(self.var, self.psi.dim, self.phi.dim, "var"))
        # filtrations first: a map that breaks them is wrong whatever the monodromy is
        for name, f, src, tgt in (("can", self.can, self.psi, self.phi),
                                  ("var", self.var, self.phi, tate_twist(self.psi, -1))):
            report = mhs_morphism_validate(f, src, tgt)
            if not report:
                raise NotHodgeMorphism(f"{name} does not preserve {', '.join(report.failures)}")
        GlueObject(self.psi.dim, self.phi.dim, self.can, self.var)

    @property
    def underlying(self) -> GlueObject:
        return GlueObject(self.psi.dim, self.phi.dim, self.can, self.var)

    def twist(self, n: int) -> HodgeGlueObject:
        return HodgeGlueObject(tate_twist(self.psi, n), tate_twist(self.phi, n), self.can, self.var)


def hodge_glue_validate(psi: MixedHodgeStructure, phi: MixedHodgeStructure, can, var) -> HodgeGlueObject:
    return HodgeGlueObject(psi, phi, can, var)


def hodge_glue_twist(X: HodgeGlueObject, n: int) -> HodgeGlueObject:
    return X.twist(n)


def hodge_fourier(X: HodgeGlueObject) -> HodgeGlueObject:
    return HodgeGlueObject(X.phi, tate_twist(X.psi, -1), X.var, X.can)


def hodge_dual(X: HodgeGlueObject) -> HodgeGlueObject:
    can, var = dual_maps(X.underlying)
    return HodgeGlueObject(tate_twist(mhs_dual(X.psi), 1), mhs_dual(X.phi), can, var)


def rat_forget(X: HodgeGlueObject) -> GlueObject:
    return X.underlying


# -- constructors for the standard objects ---------------------------------------------


def hodge_skyscraper() -> HodgeGlueObject:
    return HodgeGlueObject(zero_mhs(), tate(0), Matrix.zeros(1, 0), Matrix.zeros(0, 1))


def hodge_constant() -> HodgeGlueObject:
    return HodgeGlueObject(tate(0), zero_mhs(), Matrix.zeros(0, 1), Matrix.zeros(1, 0))


def hodge_shriek() -> HodgeGlueObject:
    """``j_!`` of the trivial rank one variation: ``(Q(0), Q(0), id, 0)``."""
    return HodgeGlueObject(tate(0), tate(0), Matrix.identity(1), Matrix.zeros(1, 1))


def hodge_star() -> HodgeGlueObject:
    """``j_*`` of the trivial rank one variation: ``(Q(0), Q(-1), 0, id)``."""
    return HodgeGlueObject(tate(0), tate(-1), Matrix.zeros(1, 1), Matrix.identity(1))


def hodge_direct_sum(X: HodgeGlueObject, Y: HodgeGlueObject) -> HodgeGlueObject:
    return HodgeGlueObject(mhs_direct_sum(X.psi, Y.psi), mhs_direct_sum(X.phi, Y.phi),
                           block_diag(X.can, Y.can), block_diag(X.var, Y.var))


def hodge_transport(X: HodgeGlueObject, a: Matrix, b: Matrix) -> HodgeGlueObject:
    """Isomorphic copy of ``X`` after changing coordinates by ``a`` on psi and ``b`` on phi."""
    return HodgeGlueObject(X.psi.transport(a), X.phi.transport(b),
                           b @ X.can @ invert(a), a @ X.var @ invert(b))


# -- isomorphism ---------------------------------------------------------------------


def _filtration_constraints(src: MixedHodgeStructure, tgt: MixedHodgeStructure, pick):
    constraints = []
    for which in ("weight", "hodge"):
        for k in _indices(src, tgt, which):
            S = getattr(src, which).at(k)
            P = subspace.annihilator(getattr(tgt, which).at(k)).T
            if S.cols and P.rows:
                constraints.append(lambda f, g, S=S, P=P: P @ pick(f, g) @ S)
    return constraints


def hodge_hom_space(X: HodgeGlueObject, Y: HodgeGlueObject) -> list[tuple[Matrix, Matrix]]:
    """Basis of the pairs ``(f, g)`` that are gluing morphisms and preserve all filtrations."""
    constraints = glue_constraints(X.underlying, Y.underlying)
    constraints += _filtration_constraints(X.psi, Y.psi, lambda f, g: f)
    constraints += _filtration_constraints(X.phi, Y.phi, lambda f, g: g)
    return solve_pairs((Y.psi.dim, X.psi.dim), (Y.phi.dim, X.phi.dim), constraints)


def hodge_is_isomorphic(X: HodgeGlueObject, Y: HodgeGlueObject):
    """Decide Hodge isomorphism; returns ``(answer, (f, g) or None)``.

    A bijective morphism of mixed Hodge structures is an isomorphism
    (morphisms are strict), so it suffices to find an invertible element of
    the filtered hom space.
    """
    if (X.psi.dim, X.phi.dim) != (Y.psi.dim, Y.phi.dim):
        return False, None
    if X.psi.gr_dims() != Y.psi.gr_dims() or X.phi.gr_dims() != Y.phi.gr_dims():
        return False, None
    hit = find_invertible(hodge_hom_space(X, Y), X.psi.dim + X.phi.dim)
    return (hit is not None), hit
