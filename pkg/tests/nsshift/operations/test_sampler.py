import torch

from nsshift.operations import BernoulliSampler


def test_sampler_shape_and_dtype():
    op = BernoulliSampler([0.5] * 7)
    out = op(11, generator=torch.Generator().manual_seed(0))
    assert list(out.shape) == [11, 7]
    assert out.dtype == torch.uint8
    assert bool((out <= 1).all())


def test_sampler_deterministic():
    op = BernoulliSampler([0.3, 0.7])
    a = op(100, generator=torch.Generator().manual_seed(5))
    b = op(100, generator=torch.Generator().manual_seed(5))
    assert torch.equal(a, b)


def test_sampler_degenerate():
    op = BernoulliSampler([1.0, 0.0])
    out = op(1000, generator=torch.Generator().manual_seed(1))
    assert bool((out[:, 0] == 0).all())
    assert bool((out[:, 1] == 1).all())


def test_sampler_per_coordinate_generators():
    op = BernoulliSampler([0.3, 0.7, 0.5])
    generators = [torch.Generator().manual_seed(s) for s in (1, 2, 3)]
    out = op(20, generators)
    assert list(out.shape) == [20, 3]
    column = BernoulliSampler([0.7])(20, [torch.Generator().manual_seed(2)])
    assert torch.equal(out[:, 1], column[:, 0])
