"""Classical monodromic sheaves on C, written as gluing data.

Conventions: the extension by zero ``j_!`` has ``can = id`` (so its stalk at
the origin vanishes) and ``j_*`` has ``var = id`` (so its costalk vanishes).
In every case the nearby-cycle monodromy ``id - var can`` equals the
monodromy ``T`` of the local system.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotMonodromic
from .exactlin import Matrix, is_invertible, rref_decompose, solve
from .gluecat import GlueMorphism, GlueObject, as_matrix


@dataclass(frozen=True)
class LocalSystem:
    """Local system on the punctured line, recorded by its monodromy matrix."""

    rank: int
    T: Matrix

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("a local system has positive rank")
        object.__setattr__(self, "T", as_matrix(self.T, self.rank, self.rank, "T"))
        if not is_invertible(self.T):
            raise NotMonodromic("monodromy of a local system must be invertible")

    @classmethod
    def of(cls, T) -> LocalSystem:
        T = T if isinstance(T, Matrix) else Matrix.from_rows(T)
        return cls(T.rows, T)


class Extension(str, Enum):
    SHRIEK = "shriek"
    STAR = "star"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class GradedPair:
    """Dimensions of the cohomology of a two-term complex in degrees -1 and 0."""

    h_minus1: int
    h_0: int

    def as_dict(self) -> dict:
        return {"h_minus1": self.h_minus1, "h_0": self.h_0}


def skyscraper(d: int = 1) -> GlueObject:
    return GlueObject(0, d, Matrix.zeros(d, 0), Matrix.zeros(0, d))


def constant(d: int = 1) -> GlueObject:
    return GlueObject(d, 0, Matrix.zeros(0, d), Matrix.zeros(d, 0))


def extend(L: LocalSystem, kind: Extension | str) -> GlueObject:
    kind = Extension(kind)
    n = L.rank
    I = Matrix.identity(n)
    N = I - L.T
    if kind is Extension.SHRIEK:
        return GlueObject(n, n, I, N)
    if kind is Extension.STAR:
        return GlueObject(n, n, N, I)
    _, _, B = rref_decompose(N)
    return GlueObject(n, B.cols, solve(B, N), B)


def forget_supports(L: LocalSystem) -> GlueMorphism:
    """The canonical map ``j_! L -> j_* L``."""
    n = L.rank
    return GlueMorphism(extend(L, Extension.SHRIEK), extend(L, Extension.STAR),
                        Matrix.identity(n), Matrix.identity(n) - L.T)


def _two_term(d: Matrix) -> GradedPair:
    r, K, _ = rref_decompose(d)
    return GradedPair(K.cols, d.rows - r)


def stalk_at_zero(X: GlueObject) -> GradedPair:
    """Cohomology of ``[Psi --can--> Phi]``."""
    return _two_term(X.can)


def costalk_at_zero(X: GlueObject) -> GradedPair:
    """Cohomology of ``[Phi --var--> Psi]``."""
    return _two_term(X.var)


def global_cohomology(X: GlueObject) -> GradedPair:
    # monodromic objects: global sections over C agree with the stalk at the origin
    return stalk_at_zero(X)
