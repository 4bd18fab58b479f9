import pytest
import sympy
from hypothesis import given, settings, strategies as st

from monoglue.errors import NotMonodromic
from monoglue.exactlin import Matrix, charpoly, factor_rational_poly, invert
from monoglue.gluecat import exact_decompose, is_simple, jordan_holder_class, monodromy
from monoglue.sheafdict import (
    GradedPair,
    LocalSystem,
    constant,
    costalk_at_zero,
    extend,
    forget_supports,
    global_cohomology,
    skyscraper,
    stalk_at_zero,
)

from conftest import matrices


@st.composite
def local_systems(draw, max_rank=3):
    n = draw(st.integers(1, max_rank))
    T = draw(matrices(n, n))
    try:
        invert(T)
    except Exception:
        T = Matrix.identity(n) + Matrix(n, n, [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])
    return LocalSystem(n, T)


def sympy_rank(A: Matrix) -> int:
    return sympy.Matrix(A.rows, A.cols, [sympy.Rational(x.numerator, x.denominator)
                                         for r in A.tolist() for x in r]).rank()


L1 = LocalSystem.of([[1]])
L2 = LocalSystem.of([[2]])


def test_local_system_requires_invertible():
    with pytest.raises(NotMonodromic):
        LocalSystem.of([[0]])


class TestConstructors:
    def test_skyscraper(self):
        assert skyscraper(1).dims == (0, 1)
        assert skyscraper(2).dims == (0, 2)
        assert jordan_holder_class(skyscraper(3)).delta_mult == 3

    def test_constant(self):
        assert constant(1).dims == (1, 0)
        assert monodromy(constant(2))[0] == Matrix.identity(2)
        assert stalk_at_zero(constant(1)) == GradedPair(1, 0)


class TestExtend:
    def test_shriek(self):
        X = extend(L2, "shriek")
        assert (X.can, X.var) == (Matrix.from_rows([[1]]), Matrix.from_rows([[-1]]))

    def test_star(self):
        X = extend(L1, "star")
        assert (X.can, X.var) == (Matrix.from_rows([[0]]), Matrix.from_rows([[1]]))

    def test_intermediate_trivial(self):
        assert extend(L1, "intermediate") == constant(1)

    @given(local_systems(), st.sampled_from(["shriek", "star", "intermediate"]))
    def test_monodromy_is_T(self, L, kind):
        assert monodromy(extend(L, kind))[0] == L.T

    @given(local_systems())
    @settings(max_examples=40, deadline=None)
    def test_intermediate_simple_when_irreducible(self, L):
        chi = charpoly(L.T)
        if len(factor_rational_poly(chi)) == 1 and factor_rational_poly(chi)[0][1] == 1:
            assert is_simple(extend(L, "intermediate"))


class TestForgetSupports:
    def test_trivial(self):
        m = forget_supports(L1)
        assert (m.f, m.g) == (Matrix.from_rows([[1]]), Matrix.from_rows([[0]]))
        d = exact_decompose(m)
        assert d.kernel_object == skyscraper(1) and d.cokernel_object == skyscraper(1)

    def test_nontrivial_is_iso(self):
        m = forget_supports(L2)
        assert (m.f, m.g) == (Matrix.from_rows([[1]]), Matrix.from_rows([[-1]]))
        assert m.is_iso()

    def test_unipotent_block(self):
        m = forget_supports(LocalSystem.of([[1, 1], [0, 1]]))
        assert m.f == Matrix.identity(2)
        assert m.g == Matrix.from_rows([[0, -1], [0, 0]])

    @given(local_systems())
    def test_image_is_intermediate(self, L):
        assert exact_decompose(forget_supports(L)).image_object == extend(L, "intermediate")


class TestStalks:
    def test_stalk_examples(self):
        assert stalk_at_zero(extend(LocalSystem.of([[5]]), "shriek")) == GradedPair(0, 0)
        # trivial L: H^0 and H^1 of the punctured line are both one-dimensional
        assert stalk_at_zero(extend(L1, "star")) == GradedPair(1, 1)
        assert stalk_at_zero(skyscraper(1)) == GradedPair(0, 1)

    def test_costalk_examples(self):
        assert costalk_at_zero(extend(L2, "star")) == GradedPair(0, 0)
        assert costalk_at_zero(extend(L1, "shriek")) == GradedPair(1, 1)
        assert costalk_at_zero(skyscraper(1)) == GradedPair(1, 0)

    def test_global_examples(self):
        assert global_cohomology(extend(L2, "star")) == GradedPair(0, 0)
        assert global_cohomology(extend(L1, "star")) == GradedPair(1, 1)
        assert global_cohomology(constant(1)) == GradedPair(1, 0)

    @given(local_systems())
    def test_vanishing(self, L):
        assert stalk_at_zero(extend(L, "shriek")) == GradedPair(0, 0)
        assert costalk_at_zero(extend(L, "star")) == GradedPair(0, 0)

    @given(local_systems())
    def test_invariants_and_coinvariants(self, L):
        # H^0 = invariants, H^1 = coinvariants of T on the fibre; sympy computes the rank
        r = sympy_rank(L.T - Matrix.identity(L.rank))
        assert global_cohomology(extend(L, "star")) == GradedPair(L.rank - r, L.rank - r)

    @given(local_systems(), st.sampled_from(["shriek", "star", "intermediate"]))
    def test_euler_characteristic(self, L, kind):
        X = extend(L, kind)
        s = stalk_at_zero(X)
        assert s.h_minus1 - s.h_0 == X.psi_dim - X.phi_dim
