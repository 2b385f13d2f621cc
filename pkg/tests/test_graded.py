import random

import pytest

from framedbetti import GradedDims


def dense(*dims):
    return GradedDims.from_dense(dims)


def random_vectors(count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        support = rng.sample(range(12), rng.randint(0, 5))
        out.append(GradedDims({k: rng.randint(1, 9) for k in support}))
    return out


def test_direct_sum_examples():
    x = dense(1, 2, 1)
    assert x + GradedDims.zero() == x
    assert x + x == dense(2, 4, 2)
    assert dense(1) + dense(1).shift(1) == GradedDims({0: 1, 2: 1})


def test_tensor_examples():
    x = dense(1, 2, 1)
    assert x * GradedDims.unit() == x
    assert x * x == dense(1, 4, 6, 4, 1)
    assert GradedDims({0: 1, 2: 1}) * x == dense(1, 2, 2, 2, 1)


def test_shift_examples():
    x = dense(1, 2, 1)
    assert x.shift(0) == x
    assert GradedDims.unit().shift(1) == GradedDims({2: 1})
    assert x.shift(2) == GradedDims({4: 1, 5: 2, 6: 1})
    with pytest.raises(ValueError):
        x.shift(-1)


def test_euler_char_examples():
    assert dense(1, 2, 1).euler_char() == 0
    assert GradedDims.unit().euler_char() == 1
    assert GradedDims({0: 1, 2: 1}).euler_char() == 2
    assert GradedDims.zero().euler_char() == 0


def test_algebra_laws_on_random_inputs():
    vecs = random_vectors(8, seed=20240211)
    for x in vecs:
        for y in vecs:
            assert x + y == y + x
            assert x * y == y * x
            for z in vecs[:4]:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z


def test_euler_and_rank_are_multiplicative():
    vecs = random_vectors(6, seed=977)
    for x in vecs:
        for y in vecs:
            assert (x * y).euler_char() == x.euler_char() * y.euler_char()
            assert (x + y).euler_char() == x.euler_char() + y.euler_char()
            assert (x * y).total_rank() == x.total_rank() * y.total_rank()
            assert (x + y).total_rank() == x.total_rank() + y.total_rank()


def test_shift_preserves_rank_and_euler():
    for x in random_vectors(6, seed=31):
        for d in range(4):
            shifted = x.shift(d)
            assert shifted.total_rank() == x.total_rank()
            assert shifted.euler_char() == x.euler_char()


def test_validation():
    with pytest.raises(ValueError):
        GradedDims({-1: 1})
    with pytest.raises(ValueError):
        GradedDims({0: -1})
    with pytest.raises(ValueError):
        GradedDims({0: 1.5})


def test_canonical_sparse_form():
    assert GradedDims({0: 0, 3: 2}).as_dict() == {3: 2}
    assert GradedDims([(1, 2), (1, 3)]).as_dict() == {1: 5}
    assert GradedDims({2: 1, 0: 1}).support() == [0, 2]
    assert not GradedDims.zero()


def test_getitem_and_top_degree():
    x = GradedDims({0: 1, 4: 7})
    assert x[0] == 1
    assert x[2] == 0
    assert x[4] == 7
    assert x.top_degree() == 4
    with pytest.raises(ValueError):
        GradedDims.zero().top_degree()


def test_poly_string():
    assert GradedDims.zero().poly_string() == "0"
    assert GradedDims.unit().poly_string() == "1"
    assert GradedDims({1: 1}).poly_string() == "t"
    assert GradedDims({1: 2}).poly_string() == "2t"
    assert dense(1, 2, 2, 2, 1).poly_string() == "1 + 2t + 2t^2 + 2t^3 + t^4"
    assert GradedDims({2: 2, 3: 4, 4: 2}).poly_string() == "2t^2 + 4t^3 + 2t^4"


def test_big_integer_dimensions_stay_exact():
    big = 10 ** 30
    x = GradedDims({0: big, 1: 1})
    assert (x * x)[0] == big * big
    assert (x + x)[0] == 2 * big
    assert x.total_rank() == big + 1
