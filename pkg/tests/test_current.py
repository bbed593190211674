"""Truncated current algebra: bracket truncation and graded bases."""

import random

import pytest

from helpers import cartan, lowering, raising, rand_generator
from tcla import (
    CurrentElement,
    InvalidAlgebraError,
    LinComb,
    Root,
    TruncatedAlgebra,
    UnknownElementError,
    algebra,
)

ALPHA = Root((1,))


def test_nilp_must_be_positive():
    with pytest.raises(InvalidAlgebraError, match="order 0"):
        TruncatedAlgebra(algebra("sl2"), 0)
    with pytest.raises(InvalidAlgebraError):
        TruncatedAlgebra(algebra("virasoro"), -1)


def test_degree_out_of_range_is_rejected():
    alg = TruncatedAlgebra(algebra("sl2"), 1)
    bad = CurrentElement(alg.base.cartan_element(0), 2)
    with pytest.raises(UnknownElementError, match="degree"):
        alg.check(bad)
    with pytest.raises(UnknownElementError):
        alg.bracket(bad, bad)


def test_bracket_examples():
    sl2 = TruncatedAlgebra(algebra("sl2"), 1)
    e, f = raising(sl2.base, ALPHA, 1), lowering(sl2.base, ALPHA, 1)
    assert sl2.bracket(e, f) == LinComb()  # t^2 truncates

    e0 = raising(sl2.base, ALPHA, 0)
    f1 = lowering(sl2.base, ALPHA, 1)
    assert sl2.bracket(e0, f1) == LinComb.term(cartan(sl2.base, 0, 1))

    vir = TruncatedAlgebra(algebra("virasoro"), 2)
    l1 = raising(vir.base, ALPHA, 1)
    lm1 = lowering(vir.base, ALPHA, 1)
    # [L1 (x) t, L-1 (x) t] = 2 L0 (x) t^2: the central term vanishes at m=1
    assert vir.bracket(l1, lm1) == LinComb.term(cartan(vir.base, 0, 2), 2)


def test_truncation_nilpotency():
    rng = random.Random("truncate")
    for name in ("sl3", "virasoro"):
        alg = TruncatedAlgebra(algebra(name), 2)
        for _ in range(50):
            x, y = rand_generator(rng, alg), rand_generator(rng, alg)
            if x.degree + y.degree > alg.nilp:
                assert alg.bracket(x, y) == LinComb()


def test_degree_additivity():
    rng = random.Random("degrees")
    for name in ("sl2", "sl3", "oscillator"):
        alg = TruncatedAlgebra(algebra(name), 2)
        for _ in range(60):
            x, y = rand_generator(rng, alg), rand_generator(rng, alg)
            for term, _c in alg.bracket(x, y).items():
                assert term.degree == x.degree + y.degree


def test_antisymmetry_and_jacobi():
    rng = random.Random("hat-jacobi")
    for name in ("sl3", "virasoro"):
        alg = TruncatedAlgebra(algebra(name), 2)
        for _ in range(40):
            x, y, z = (rand_generator(rng, alg) for _ in range(3))
            assert alg.bracket(x, y) + alg.bracket(y, x) == LinComb()
            total = LinComb()
            for pivot, others in (((x, y), z), ((y, z), x), ((z, x), y)):
                inner = alg.bracket(*pivot)
                for term, c in inner.items():
                    total = total + c * alg.bracket(term, others)
            assert total == LinComb()


def test_subspace_basis_examples():
    sl2 = TruncatedAlgebra(algebra("sl2"), 1)
    assert sl2.subspace_basis(-ALPHA) == [
        lowering(sl2.base, ALPHA, 0),
        lowering(sl2.base, ALPHA, 1),
    ]

    sl3 = TruncatedAlgebra(algebra("sl3"), 2)
    theta = Root((1, 1))
    assert sl3.subspace_basis(-theta) == [lowering(sl3.base, theta, d) for d in range(3)]

    vir = TruncatedAlgebra(algebra("virasoro"), 1)
    assert vir.subspace_basis(None) == [
        cartan(vir.base, 0, 0),
        cartan(vir.base, 0, 1),
        cartan(vir.base, 1, 0),
        cartan(vir.base, 1, 1),
    ]
