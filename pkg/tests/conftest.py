import random

import pytest
from hypothesis import assume, strategies as st

from monoglue.errors import NotMonodromic
from monoglue.exactlin import Matrix
from monoglue.gluecat import GlueObject
from monoglue.selftest import random_glue_object


def matrices(rows, cols, lo=-3, hi=3):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(lambda r: Matrix(rows, cols, r))


@st.composite
def square_matrices(draw, max_n=4):
    n = draw(st.integers(0, max_n))
    return draw(matrices(n, n))


@st.composite
def glue_objects(draw, max_dim=3):
    psi = draw(st.integers(0, max_dim))
    phi = draw(st.integers(0, max_dim))
    can = draw(matrices(phi, psi))
    var = draw(matrices(psi, phi))
    try:
        return GlueObject(psi, phi, can, var)
    except NotMonodromic:
        assume(False)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def sample_objects(rng):
    return [random_glue_object(rng, 3) for _ in range(25)]
