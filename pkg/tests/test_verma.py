"""The straightening engine: generator actions on Verma-module vectors."""

import random
from fractions import Fraction

import pytest

from helpers import cartan, lowering, raising, rand_generator, rand_vector, rand_weight, rat
from tcla import (
    BUILTIN_ALGEBRAS,
    Root,
    TruncatedAlgebra,
    VermaModule,
    VermaVector,
    WeightFunctional,
    algebra,
)

ALPHA = Root((1,))


def sl2_module(levels=((5,), (3,))):
    alg = TruncatedAlgebra(algebra("sl2"), len(levels) - 1)
    return VermaModule(alg, WeightFunctional(levels))


def test_highest_weight_vector():
    m = sl2_module()
    v = m.highest_weight_vector()
    assert v == VermaVector({(): 1})
    assert v.weights(1) == {Root((0,))}


def test_raising_kills_highest_weight_vector():
    for name in BUILTIN_ALGEBRAS:
        base = algebra(name)
        alg = TruncatedAlgebra(base, 2)
        m = VermaModule(alg, rand_weight(random.Random("hw:" + name), base, 2))
        v = m.highest_weight_vector()
        for root, _dim in base.positive_roots(3):
            for deg in range(3):
                assert m.apply_raising(raising(base, root, deg), v).is_zero


def test_lowering_prepends_when_canonical():
    m = sl2_module()
    f0, f1 = lowering(m.alg.base, ALPHA, 0), lowering(m.alg.base, ALPHA, 1)
    v = m.apply_lowering(f1, m.highest_weight_vector())
    assert v == VermaVector({(f1,): 1})
    # sl2 lowering factors commute, so the product lands on the sorted monomial
    assert m.apply_lowering(f0, v) == VermaVector({(f0, f1): 1})
    assert m.apply_lowering(f1, m.apply_lowering(f0, m.highest_weight_vector())) == VermaVector(
        {(f0, f1): 1}
    )


def test_sl3_straightening_frozen():
    # With the frozen canonical order f1 < f2 < f12:
    #   f1 . (f2 v) is already ordered, while f2 . (f1 v) straightens through
    #   [f2, f1] = +f12 (Chevalley signs of the matrix-unit convention).
    base = algebra("sl3")
    alg = TruncatedAlgebra(base, 1)
    m = VermaModule(alg, WeightFunctional([(1, 2), (3, 4)]))
    f1 = lowering(base, Root((1, 0)), 0)
    f2 = lowering(base, Root((0, 1)), 0)
    f12 = lowering(base, Root((1, 1)), 0)
    v = m.highest_weight_vector()
    assert m.apply_lowering(f1, m.apply_lowering(f2, v)) == VermaVector({(f1, f2): 1})
    assert m.apply_lowering(f2, m.apply_lowering(f1, v)) == VermaVector(
        {(f1, f2): 1, (f12,): 1}
    )


def test_cartan_on_highest_weight_vector():
    m = sl2_module(((5,), (3,), (7,)))
    v = m.highest_weight_vector()
    for deg, value in [(0, 5), (1, 3), (2, 7)]:
        assert m.apply_cartan(cartan(m.alg.base, 0, deg), v) == value * v


def test_cartan_degree_zero_is_scalar_on_homogeneous_vectors():
    rng = random.Random("cartan-scalar")
    for name in ("sl3", "virasoro"):
        base = algebra(name)
        alg = TruncatedAlgebra(base, 2)
        weight = rand_weight(rng, base, 2)
        m = VermaModule(alg, weight)
        for chi in (Root((1,) * base.simple_generator_count), Root((2,) + (0,) * (base.simple_generator_count - 1))):
            from tcla import enumerate_monomials

            monos = enumerate_monomials(chi, alg)
            v = VermaVector({mono: rat(rng) for mono in monos})
            if v.is_zero:
                continue
            for k in range(base.cartan_rank):
                h = cartan(base, k, 0)
                basis_dir = tuple(Fraction(int(j == k)) for j in range(base.cartan_rank))
                expected = weight.evaluate(basis_dir, 0) - base.root_functional(chi)[k]
                assert m.apply_cartan(h, v) == expected * v


def test_cartan_commutator_example():
    m = sl2_module()
    f0, f1 = lowering(m.alg.base, ALPHA, 0), lowering(m.alg.base, ALPHA, 1)
    h1 = cartan(m.alg.base, 0, 1)
    got = m.apply_cartan(h1, VermaVector({(f0,): 1}))
    assert got == VermaVector({(f0,): 3, (f1,): -2})


def test_raising_examples():
    m = sl2_module()
    v = m.highest_weight_vector()
    f0, f1 = lowering(m.alg.base, ALPHA, 0), lowering(m.alg.base, ALPHA, 1)
    e0, e1 = raising(m.alg.base, ALPHA, 0), raising(m.alg.base, ALPHA, 1)
    assert m.apply_raising(e0, m.apply_lowering(f0, v)) == 5 * v
    assert m.apply_raising(e1, m.apply_lowering(f0, v)) == 3 * v
    assert m.apply_raising(e1, m.apply_lowering(f1, v)).is_zero


@pytest.mark.parametrize("name", BUILTIN_ALGEBRAS)
def test_module_axiom(name):
    # X (Y v) - Y (X v) = [X, Y] v, exactly
    rng = random.Random("module-axiom:" + name)
    base = algebra(name)
    for nilp in (1, 2):
        alg = TruncatedAlgebra(base, nilp)
        m = VermaModule(alg, rand_weight(rng, base, nilp))
        for _ in range(60):
            x, y = rand_generator(rng, alg), rand_generator(rng, alg)
            v = rand_vector(rng, m)
            lhs = m.act(x, m.act(y, v)) - m.act(y, m.act(x, v))
            rhs = VermaVector()
            for z, c in alg.bracket(x, y).items():
                rhs = rhs + c * m.act(z, v)
            assert lhs == rhs, (x, y, v)


def test_weight_homogeneity():
    rng = random.Random("homogeneous")
    base = algebra("sl3")
    alg = TruncatedAlgebra(base, 2)
    m = VermaModule(alg, rand_weight(rng, base, 2))
    gens = base.simple_generator_count
    for _ in range(40):
        v = rand_vector(rng, m)
        if v.is_zero or len(v.weights(gens)) != 1:
            continue
        (chi,) = v.weights(gens)
        x = rand_generator(rng, alg)
        out = m.act(x, v)
        if out.is_zero:
            continue
        drop = Root.zero(gens) if x.elem.root is None else -x.elem.root
        assert out.weights(gens) == {chi + drop}


def test_action_is_linear():
    rng = random.Random("linear")
    base = algebra("virasoro")
    alg = TruncatedAlgebra(base, 1)
    m = VermaModule(alg, rand_weight(rng, base, 1))
    for _ in range(30):
        x = rand_generator(rng, alg)
        v, w = rand_vector(rng, m), rand_vector(rng, m)
        a, b = rat(rng), rat(rng)
        assert m.act(x, a * v + b * w) == a * m.act(x, v) + b * m.act(x, w)


def test_part_validation():
    m = sl2_module()
    e0 = raising(m.alg.base, ALPHA, 0)
    f0 = lowering(m.alg.base, ALPHA, 0)
    h0 = cartan(m.alg.base, 0, 0)
    v = m.highest_weight_vector()
    with pytest.raises(ValueError):
        m.apply_lowering(e0, v)
    with pytest.raises(ValueError):
        m.apply_raising(h0, v)
    with pytest.raises(ValueError):
        m.apply_cartan(f0, v)


def test_weight_shape_must_match():
    alg = TruncatedAlgebra(algebra("sl2"), 1)
    with pytest.raises(ValueError):
        VermaModule(alg, WeightFunctional([(1,), (2,), (3,)]))
    with pytest.raises(ValueError):
        VermaModule(alg, WeightFunctional([(1, 2), (3, 4)]))
