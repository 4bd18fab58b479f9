from itertools import product

import pytest
from hypothesis import given, settings

from monoglue.errors import DimensionTooLarge, NotCommuting, NotMonodromic, ShapeMismatch
from monoglue.exactlin import Matrix, Polynomial, charpoly, is_invertible, rank
from monoglue.gluecat import (
    GlueObject,
    KClass,
    direct_sum,
    exact_decompose,
    hom_space,
    identity,
    is_isomorphic,
    is_simple,
    jordan_holder_class,
    monodromy,
    validate_morphism,
    validate_object,
    zero_morphism,
    zero_object,
)
from monoglue.selftest import random_glue_object, random_morphism

from conftest import glue_objects

DELTA = validate_object(0, 1, [], [])
CONST = validate_object(1, 0, [], [])
SHRIEK_TRIVIAL = validate_object(1, 1, [[1]], [[0]])
STAR_TRIVIAL = validate_object(1, 1, [[0]], [[1]])
t_minus = lambda a: Polynomial([-a, 1])  # noqa: E731


def brute_hom_dim(X, Y, values=(-1, 0, 1)):
    """Count commuting pairs with entries in ``values`` and compare to a lattice size.

    For spaces whose solution set is spanned by 0/1-patterned vectors this
    recovers the dimension: the count equals len(values) ** dim.
    """
    n = Y.psi_dim * X.psi_dim + Y.phi_dim * X.phi_dim
    count = 0
    for entries in product(values, repeat=n):
        k = Y.psi_dim * X.psi_dim
        f = Matrix(Y.psi_dim, X.psi_dim,
                   [entries[i * X.psi_dim:(i + 1) * X.psi_dim] for i in range(Y.psi_dim)])
        g = Matrix(Y.phi_dim, X.phi_dim,
                   [entries[k + i * X.phi_dim:k + (i + 1) * X.phi_dim] for i in range(Y.phi_dim)])
        if Y.can @ f == g @ X.can and Y.var @ g == f @ X.var:
            count += 1
    return count


class TestValidateObject:
    def test_skyscraper(self):
        assert DELTA.dims == (0, 1)

    def test_not_monodromic(self):
        with pytest.raises(NotMonodromic):
            validate_object(1, 1, [[1]], [[1]])

    def test_minus_one(self):
        X = validate_object(1, 1, [[1]], [[-1]])
        assert monodromy(X)[0] == Matrix.from_rows([[2]])

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            validate_object(1, 2, [[1]], [[1, 0]])


class TestValidateMorphism:
    def test_identity(self, sample_objects):
        for X in sample_objects:
            assert identity(X).f == Matrix.identity(X.psi_dim)

    def test_forget_supports_shape(self):
        m = validate_morphism([[1]], [[0]], SHRIEK_TRIVIAL, STAR_TRIVIAL)
        assert m.f == Matrix.from_rows([[1]])

    def test_not_commuting(self):
        with pytest.raises(NotCommuting):
            validate_morphism([[1]], [[1]], SHRIEK_TRIVIAL, STAR_TRIVIAL)


class TestMonodromy:
    def test_examples(self):
        assert monodromy(DELTA) == (Matrix.zeros(0, 0), Matrix.from_rows([[1]]))
        assert monodromy(validate_object(1, 1, [[1]], [[-1]])) == (Matrix.from_rows([[2]]),) * 2
        assert monodromy(STAR_TRIVIAL) == (Matrix.from_rows([[1]]),) * 2

    @given(glue_objects())
    def test_intertwining(self, X):
        T_psi, T_phi = monodromy(X)
        assert is_invertible(T_psi) and is_invertible(T_phi)
        assert T_phi @ X.can == X.can @ T_psi
        assert X.var @ T_phi == T_psi @ X.var


class TestDirectSum:
    def test_examples(self):
        assert direct_sum(DELTA, DELTA) == validate_object(0, 2, [], [])
        assert direct_sum(SHRIEK_TRIVIAL, zero_object()) == SHRIEK_TRIVIAL
        assert direct_sum(DELTA, CONST) == validate_object(1, 1, [[0]], [[0]])


class TestExactDecompose:
    def test_identity(self, sample_objects):
        for X in sample_objects:
            d = exact_decompose(identity(X))
            assert d.kernel_object.dims == (0, 0)
            assert d.image_object == X
            assert d.cokernel_object.dims == (0, 0)

    def test_zero(self, sample_objects):
        for X in sample_objects:
            d = exact_decompose(zero_morphism(X, X))
            assert d.kernel_object == X
            assert d.image_object.dims == (0, 0)
            assert d.cokernel_object == X

    def test_forget_supports(self):
        d = exact_decompose(validate_morphism([[1]], [[0]], SHRIEK_TRIVIAL, STAR_TRIVIAL))
        assert d.kernel_object == DELTA
        assert d.image_object == CONST
        assert d.cokernel_object == DELTA

    def test_random_morphisms(self, rng):
        for _ in range(40):
            X = random_glue_object(rng, 3)
            m = random_morphism(rng, X, direct_sum(X, random_glue_object(rng, 2)))
            d = exact_decompose(m)
            # composites are the original map and vanish where they should
            assert d.image.compose(d.coimage).f == m.f
            assert d.image.compose(d.coimage).g == m.g
            assert m.compose(d.kernel).f.is_zero() and m.compose(d.kernel).g.is_zero()
            assert d.cokernel.compose(m).f.is_zero() and d.cokernel.compose(m).g.is_zero()
            # rank bookkeeping on each component
            K, I, C = d.kernel_object, d.image_object, d.cokernel_object
            assert K.psi_dim + I.psi_dim == X.psi_dim
            assert I.psi_dim + C.psi_dim == m.target.psi_dim
            assert K.phi_dim + I.phi_dim == X.phi_dim


class TestHomSpace:
    def test_examples(self):
        assert len(hom_space(DELTA, DELTA)) == 1
        assert len(hom_space(DELTA, STAR_TRIVIAL)) == 0
        assert len(hom_space(DELTA, SHRIEK_TRIVIAL)) == 1

    def test_brute_force_counts(self):
        # solution sets here are coordinate subspaces, so 3 ** dim lattice points
        pairs = [(DELTA, DELTA), (DELTA, STAR_TRIVIAL), (DELTA, SHRIEK_TRIVIAL),
                 (SHRIEK_TRIVIAL, STAR_TRIVIAL), (STAR_TRIVIAL, SHRIEK_TRIVIAL),
                 (CONST, STAR_TRIVIAL), (direct_sum(DELTA, CONST), SHRIEK_TRIVIAL)]
        for X, Y in pairs:
            assert brute_hom_dim(X, Y) == 3 ** len(hom_space(X, Y))

    @given(glue_objects(max_dim=2))
    @settings(max_examples=40)
    def test_contains_identity(self, X):
        def flat(f, g):
            return [x for r in f.tolist() + g.tolist() for x in r]

        n = X.psi_dim ** 2 + X.phi_dim ** 2
        basis = Matrix.from_columns([flat(h.f, h.g) for h in hom_space(X, X)], n)
        ident = identity(X)
        target = Matrix.from_columns([flat(ident.f, ident.g)], n)
        assert rank(basis.hstack(target)) == rank(basis) == basis.cols


class TestIsIsomorphic:
    def test_reflexive(self, sample_objects):
        for X in sample_objects:
            ok, w = is_isomorphic(X, X, max_hom_dim=18)
            assert ok and w.is_iso()

    def test_dimension_mismatch(self):
        assert is_isomorphic(DELTA, CONST) == (False, None)

    def test_rescaling(self):
        X = validate_object(1, 1, [[1]], [[-1]])
        Y = validate_object(1, 1, [["1/2"]], [[-2]])
        ok, w = is_isomorphic(X, Y)
        assert ok and w.is_iso()
        validate_morphism([[2]], [[1]], X, Y)

    def test_same_invariants_not_isomorphic(self):
        # j_! and j_* of the trivial system share dims and monodromy but differ in ranks
        assert not is_isomorphic(SHRIEK_TRIVIAL, STAR_TRIVIAL)[0]
        # nilpotent can vs zero can, same ranks of var
        X = validate_object(2, 2, [[0, 1], [0, 0]], [[1, 0], [0, 1]])
        Y = validate_object(2, 2, [[0, 0], [0, 0]], [[1, 0], [0, 1]])
        assert not is_isomorphic(X, Y)[0]

    def test_conjugate_pairs(self):
        A = validate_object(2, 2, [[1, 0], [0, 1]], [[0, 1], [0, 0]])
        B = validate_object(2, 2, [[1, 0], [0, 1]], [[0, 0], [1, 0]])
        ok, w = is_isomorphic(A, B)
        assert ok and w.is_iso()
        C = validate_object(2, 1, [[1, 0]], [[0], [0]])
        D = validate_object(2, 1, [[0, 1]], [[0], [0]])
        assert is_isomorphic(C, D)[0]

    def test_grid_decides_negative(self):
        # same dims, ranks and characteristic polynomials, and hom spaces of equal
        # dimension both ways; only the exhaustive grid can answer
        X = validate_object(2, 2, [[1, 0], [0, 0]], [[0, 0], [0, 1]])
        Y = validate_object(2, 2, [[1, 0], [0, 0]], [[0, 0], [1, 0]])
        assert len(hom_space(X, Y)) == len(hom_space(Y, X))
        assert not is_isomorphic(X, Y)[0]
        # certificate: the nearby monodromy is semisimple on X, a Jordan block on Y
        I = Matrix.identity(2)
        assert rank(monodromy(X)[0] - I) == 0 and rank(monodromy(Y)[0] - I) == 1

    def test_bound(self):
        big = validate_object(0, 3, [], [])
        with pytest.raises(DimensionTooLarge):
            is_isomorphic(big, big)
        assert is_isomorphic(big, big, max_hom_dim=9)[0]

    def test_symmetric_and_kclass(self, rng):
        for _ in range(30):
            X = random_glue_object(rng, 3)
            Y = random_glue_object(rng, 3) if rng.random() < 0.5 else X
            a = is_isomorphic(X, Y, max_hom_dim=18)[0]
            assert a == is_isomorphic(Y, X, max_hom_dim=18)[0]
            if a:
                assert jordan_holder_class(X) == jordan_holder_class(Y)


class TestJordanHolder:
    def test_examples(self):
        assert jordan_holder_class(DELTA) == KClass(1, ())
        assert jordan_holder_class(STAR_TRIVIAL) == KClass(1, ((t_minus(1), 1),))
        assert jordan_holder_class(validate_object(1, 1, [[1]], [[-1]])) == KClass(0, ((t_minus(2), 1),))

    @given(glue_objects())
    def test_delta_nonnegative(self, X):
        k = jordan_holder_class(X)
        assert k.delta_mult >= 0
        assert k.psi_dim == X.psi_dim
        assert all(p.coeffs[0] != 0 for p, _ in k.local_factors)

    def test_additivity(self, rng):
        for _ in range(60):
            X = random_glue_object(rng, 3)
            Y = direct_sum(X, random_glue_object(rng, 2)) if rng.random() < 0.5 else random_glue_object(rng, 3)
            m = random_morphism(rng, X, Y)
            d = exact_decompose(m)
            assert jordan_holder_class(X) == jordan_holder_class(d.kernel_object) + jordan_holder_class(d.image_object)
            assert jordan_holder_class(Y) == jordan_holder_class(d.image_object) + jordan_holder_class(d.cokernel_object)


class TestIsSimple:
    def test_examples(self):
        assert is_simple(DELTA)
        assert not is_simple(STAR_TRIVIAL)
        T = Matrix.from_rows([[0, -1], [1, 0]])
        X = GlueObject(2, 2, Matrix.identity(2) - T, Matrix.identity(2))
        assert charpoly(T) == Polynomial([1, 0, 1])
        assert is_simple(X)

    def test_length_one_iff_simple(self, rng):
        for _ in range(60):
            X = random_glue_object(rng, 3)
            if is_simple(X):
                assert jordan_holder_class(X).length == 1
