import itertools
import random
from fractions import Fraction

import pytest

import mrarank


def test_alpha_matrices():
    assert mrarank.alpha((1, 2), (2, 1)) == Fraction(-1, 2)
    assert mrarank.alpha((1, 2, 3), (1, 2, 3)) == Fraction(1, 3)
    assert mrarank.alpha((2, 4, 5), (4, 2, 5)) == Fraction(-1, 6)
    table = mrarank.AlphaTable(5)
    assert table.k_max == 5
    assert table.construction_ops <= 1500


def test_transform_round_trip():
    rng = random.Random(3)
    universe = (1, 2, 3, 4)
    f = {p: rng.uniform(-1, 1) for p in itertools.permutations(universe)}
    x, ops = mrarank.fwt(f, return_ops=True)
    assert ops > 0
    assert len(x) == 12
    back = mrarank.synthesize(x, universe)
    assert max(abs(back[p] - f[p]) for p in f) < 1e-9
    m = mrarank.marginal(f, (1, 3))
    sub = mrarank.synthesize(mrarank.feature_marginal(x, [1, 3]), [1, 3])
    assert sub[(3, 1)] == pytest.approx(m[(3, 1)])


def test_dirac_blocks():
    x = mrarank.fwt({(1, 2, 3): 1.0})
    assert x[()][()] == pytest.approx(1.0)
    assert x[(1, 2)][(1, 2)] == pytest.approx(0.5)
    assert x[(1, 2)][(2, 1)] == pytest.approx(-0.5)


def test_estimation_and_generation():
    data = mrarank.generate({(1, 2, 3, 4, 5): 1.0}, [(1, 2, 3), (3, 4), (4, 5)], 100, 1)
    assert set(data) == {(1, 2, 3), (3, 4), (4, 5)}
    assert mrarank.generate({(1, 2, 3, 4, 5): 1.0}, [(1, 2, 3), (3, 4), (4, 5)], 100, 1) == data
    x = mrarank.estimate([(1, 2), (1, 2), (2, 1)], mrarank.AlphaTable())
    assert x[(1, 2)][(1, 2)] == pytest.approx(1 / 6)
    naive = mrarank.naive_marginal([(1, 2), (1, 2), (2, 1)], (1, 2))
    assert naive[(1, 2)] == pytest.approx(2 / 3)


def test_identifiability_and_solutions():
    design = [(1, 3), (2, 4), (3, 4), (1, 2, 3), (1, 3, 4)]
    blocks, dof = mrarank.identifiable_support(design)
    assert dof == 24 - 13
    assert (1, 2, 4) not in blocks
    f0 = {p: 1 / 24 for p in itertools.permutations((1, 2, 3, 4))}
    _, free, dim = mrarank.solution_space(f0, (1, 2, 3, 4), design, mrarank.AlphaTable())
    assert dim == 13
    assert free == [(1, 2, 4), (2, 3, 4), (1, 2, 3, 4)]
    assert mrarank.derangements(4) == 9


def test_smoothing_and_files():
    x = {(1, 2): {(1, 2): 1.0, (2, 1): -1.0}}
    y = mrarank.kernel_smooth(x, 1, (1, 2, 3, 4))
    assert y[(1, 2)][(1, 2)] == pytest.approx(0.5)
    assert y[(1, 3)][(1, 3)] == pytest.approx(1 / 8)
    text = mrarank.format_coefficients(y, 8, (1, 2, 3, 4))
    back, k_max, universe = mrarank.parse_coefficients(text)
    assert k_max == 8 and universe == (1, 2, 3, 4)
    assert back == y


def test_validation_and_errors():
    records = mrarank.validate("syt", 4)
    assert records and all(r["passed"] for r in records)
    with pytest.raises(mrarank.ResourceError):
        mrarank.validate("syt", 9)
    with pytest.raises(mrarank.DomainError):
        mrarank.marginal({(1, 2): 1.0}, (1,))
    with pytest.raises(mrarank.ParseError):
        mrarank.parse_coefficients("garbage\n")
    with pytest.raises(mrarank.Error):
        mrarank.AlphaTable(11)
    assert issubclass(mrarank.ParseError, ValueError)
