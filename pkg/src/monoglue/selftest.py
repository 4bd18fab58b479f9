"""Seeded random objects and the executable acceptance criteria.

Random gluing data uses ``random.Random(seed)``: dimensions are uniform in
``0..dims`` and matrix entries uniform integers in ``[-3, 3]``, redrawn until
``id - var can`` is invertible.  The Hodge family is generated from the
skyscraper, the constant object and ``j_!``, ``j_*`` of the trivial variation
by Tate twists and direct sums, optionally followed by a random change of
coordinates.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .errors import NotMonodromic, NotPure
from .exactlin import Matrix, Polynomial, is_invertible, rref_decompose
from .fourdual import fourier, verdier_dual
from .gluecat import (
    GlueMorphism,
    GlueObject,
    KClass,
    direct_sum,
    exact_decompose,
    hom_space,
    is_isomorphic,
    jordan_holder_class,
)
from .hodge import (
    HodgeGlueObject,
    hodge_constant,
    hodge_direct_sum,
    hodge_dual,
    hodge_fourier,
    hodge_hom_space,
    hodge_is_isomorphic,
    hodge_shriek,
    hodge_skyscraper,
    hodge_star,
    hodge_transport,
    mhs_morphism_validate,
    mhs_validate,
    rat_forget,
    tate,
    tate_twist,
)
from .sheafdict import (
    LocalSystem,
    costalk_at_zero,
    extend,
    forget_supports,
    global_cohomology,
    stalk_at_zero,
)

ENTRY_RANGE = (-3, 3)


# -- generators ----------------------------------------------------------------------


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = ENTRY_RANGE[0],
                  hi: int = ENTRY_RANGE[1]) -> Matrix:
    return Matrix(rows, cols, [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        A = random_matrix(rng, n, n)
        if is_invertible(A):
            return A


def random_glue_object(rng: random.Random, max_dim: int) -> GlueObject:
    psi, phi = rng.randint(0, max_dim), rng.randint(0, max_dim)
    while True:
        try:
            return GlueObject(psi, phi, random_matrix(rng, phi, psi), random_matrix(rng, psi, phi))
        except NotMonodromic:
            continue


def random_local_system(rng: random.Random, max_rank: int) -> LocalSystem:
    n = rng.randint(1, max_rank)
    return LocalSystem(n, random_invertible(rng, n))


def random_morphism(rng: random.Random, X: GlueObject, Y: GlueObject) -> GlueMorphism:
    basis = hom_space(X, Y)
    f = Matrix.zeros(Y.psi_dim, X.psi_dim)
    g = Matrix.zeros(Y.phi_dim, X.phi_dim)
    for h in basis:
        c = rng.randint(-2, 2)
        f, g = f + h.f.scale(c), g + h.g.scale(c)
    return GlueMorphism(X, Y, f, g)


HODGE_GENERATORS = (hodge_skyscraper, hodge_constant, hodge_shriek, hodge_star)


def random_hodge_object(rng: random.Random, max_summands: int = 3,
                        transport: bool = True) -> HodgeGlueObject:
    X = None
    for _ in range(rng.randint(1, max_summands)):
        piece = rng.choice(HODGE_GENERATORS)().twist(rng.randint(-2, 2))
        X = piece if X is None else hodge_direct_sum(X, piece)
    if transport and rng.random() < 0.5:
        X = hodge_transport(X, random_invertible(rng, X.psi.dim), random_invertible(rng, X.phi.dim))
    return X


# -- criteria ------------------------------------------------------------------------


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    cases: int
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.number:>2}. {self.name}: {self.cases} cases{extra}"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "cases": self.cases, "detail": self.detail}


class _Tally:
    def __init__(self):
        self.cases = 0
        self.failed = False
        self.failures: list[str] = []

    def check(self, ok: bool, what: str):
        self.cases += 1
        if not ok:
            self.failed = True
            if len(self.failures) < 3:
                self.failures.append(what)

    @property
    def passed(self) -> bool:
        return not self.failed


CRITERIA: list[tuple[int, str, Callable]] = []


def criterion(number: int, name: str):
    def register(fn):
        CRITERIA.append((number, name, fn))
        return fn
    return register


@criterion(1, "fourier involution")
def _c1(rng, dims, t):
    for _ in range(200):
        X = random_glue_object(rng, min(dims, 4))
        t.check(fourier(fourier(X)) == X, repr(X))


@criterion(2, "fourier output passes validate_object")
def _c2(rng, dims, t):
    for _ in range(200):
        X = random_glue_object(rng, min(dims, 4))
        Y = fourier(X)
        try:
            GlueObject(Y.psi_dim, Y.phi_dim, Y.can.tolist(), Y.var.tolist())
            t.check(True, "")
        except NotMonodromic:
            t.check(False, repr(X))


@criterion(3, "global cohomology of j_* L equals H*(C - 0; L)")
def _c3(rng, dims, t):
    for _ in range(50):
        L = random_local_system(rng, min(dims, 3))
        N = L.T - Matrix.identity(L.rank)
        r, K, _ = rref_decompose(N)
        expected = (K.cols, L.rank - r)
        got = global_cohomology(extend(L, "star"))
        t.check((got.h_minus1, got.h_0) == expected, repr(L.T))


@criterion(4, "stalk of j_! and costalk of j_* vanish")
def _c4(rng, dims, t):
    for _ in range(50):
        L = random_local_system(rng, min(dims, 3))
        s = stalk_at_zero(extend(L, "shriek"))
        c = costalk_at_zero(extend(L, "star"))
        t.check((s.h_minus1, s.h_0, c.h_minus1, c.h_0) == (0, 0, 0, 0), repr(L.T))


# a dims <= 3 object has hom spaces of dimension at most 3*3 + 3*3
_ISO_BOUND = 18


@criterion(5, "double Verdier dual is isomorphic to the identity")
def _c5(rng, dims, t):
    for _ in range(100):
        X = random_glue_object(rng, min(dims, 3))
        t.check(is_isomorphic(verdier_dual(verdier_dual(X)), X, max_hom_dim=_ISO_BOUND)[0], repr(X))


@criterion(6, "D(F(X)) isomorphic to F(D(X))")
def _c6(rng, dims, t):
    for _ in range(100):
        X = random_glue_object(rng, min(dims, 3))
        ok, _ = is_isomorphic(verdier_dual(fourier(X)), fourier(verdier_dual(X)), max_hom_dim=_ISO_BOUND)
        t.check(ok, repr(X))


@criterion(7, "rat commutes with the Fourier transform")
def _c7(rng, dims, t):
    for _ in range(100):
        X = random_hodge_object(rng)
        t.check(rat_forget(hodge_fourier(X)) == fourier(rat_forget(X)), repr(X))


@criterion(8, "Hodge Fourier squared is the Tate twist by -1")
def _c8(rng, dims, t):
    for _ in range(100):
        X = random_hodge_object(rng)
        t.check(hodge_fourier(hodge_fourier(X)) == X.twist(-1), repr(X))
    F_sky = hodge_fourier(hodge_skyscraper())
    F_const = hodge_fourier(hodge_constant())
    t.check(F_sky == hodge_constant(), "F(skyscraper) != constant")
    t.check(F_const.psi.dim == 0 and F_const.phi == tate(-1), "F(constant) phi != Q(-1)")
    t.check(F_const == hodge_skyscraper().twist(-1), "F(constant) != skyscraper(-1)")


@criterion(9, "D(F(M)) Hodge-isomorphic to F(D(M))(1)")
def _c9(rng, dims, t):
    for _ in range(100):
        X = random_hodge_object(rng)
        lhs = hodge_dual(hodge_fourier(X))
        rhs = hodge_fourier(hodge_dual(X)).twist(1)
        t.check(hodge_is_isomorphic(lhs, rhs)[0], repr(X))


def _mixed_pair(rng, dims):
    X = random_glue_object(rng, dims)
    mode = rng.randrange(3)
    if mode == 0:
        return X, random_glue_object(rng, dims)
    if mode == 1:
        return X, X
    Z = random_glue_object(rng, max(dims // 2, 1))
    return (X, direct_sum(X, Z)) if rng.random() < 0.5 else (direct_sum(X, Z), X)


@criterion(10, "K-class additivity along kernels and images")
def _c10(rng, dims, t):
    for _ in range(100):
        X, Y = _mixed_pair(rng, min(dims, 3))
        m = random_morphism(rng, X, Y)
        dec = exact_decompose(m)
        lhs = jordan_holder_class(X)
        rhs = jordan_holder_class(dec.kernel_object) + jordan_holder_class(dec.image_object)
        t.check(lhs == rhs, repr(m))


@criterion(11, "sheaf dictionary identities")
def _c11(rng, dims, t):
    for _ in range(50):
        L = random_local_system(rng, min(dims, 3))
        t.check(fourier(extend(L, "shriek")) == extend(L, "star"), f"F(j_!) {L.T!r}")
        image = exact_decompose(forget_supports(L)).image_object
        t.check(image == extend(L, "intermediate"), f"image {L.T!r}")
    k = jordan_holder_class(extend(LocalSystem.of([[1]]), "star"))
    t.check(k == KClass(1, ((Polynomial([-1, 1]), 1),)), repr(k))


@criterion(12, "mixed Hodge structure validation and strictness")
def _c12(rng, dims, t):
    for n in range(-3, 4):
        t.check(mhs_validate(1, [(-2 * n, Matrix.identity(1))], [(-n, Matrix.identity(1))]) == tate(n),
                f"Q({n})")
    try:
        mhs_validate(1, [(0, Matrix.identity(1))], [(1, Matrix.identity(1))])
        t.check(False, "NotPure example accepted")
    except NotPure:
        t.check(True, "")
    for _ in range(40):
        X = random_hodge_object(rng)
        Y = random_hodge_object(rng)
        maps = [(X.can, X.psi, X.phi), (X.var, X.phi, tate_twist(X.psi, -1))]
        for f, g in hodge_hom_space(X, Y):
            maps.append((f, X.psi, Y.psi))
            maps.append((g, X.phi, Y.phi))
        for f, M, N in maps:
            report = mhs_morphism_validate(f, M, N)
            t.check(report.is_morphism and report.is_strict, repr(f))


def run_criteria(seed: int = 0, dims: int = 4, only=None) -> list[CriterionResult]:
    results = []
    for number, name, fn in sorted(CRITERIA):
        if only is not None and number not in only:
            continue
        rng = random.Random(f"{seed}:{number}")
        tally = _Tally()
        start = time.perf_counter()
        try:
            fn(rng, dims, tally)
            detail = "; ".join(tally.failures)
        except Exception as exc:  # a crash is reported as a failure of that criterion
            tally.failed = True
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CriterionResult(number, name, tally.passed, tally.cases, detail,
                                       time.perf_counter() - start))
    return results


def selftest_report(seed: int = 0, dims: int = 4) -> dict:
    results = run_criteria(seed, dims)
    return {"kind": "selftest_report", "seed": seed, "dims": dims,
            "failures": sum(not r.passed for r in results),
            "criteria": [r.as_dict() for r in results]}
