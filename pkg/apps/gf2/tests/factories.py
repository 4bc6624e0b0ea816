# apps/gf2/tests/factories.py
import factory
import numpy as np

from apps.gf2.bitmatrix import BitMatrix


def random_bits(rng: np.random.Generator, rows: int, cols: int, density: float = 0.5) -> np.ndarray:
    return (rng.random((rows, cols)) < density).astype(np.uint8)


def random_invertible(rng: np.random.Generator, n: int) -> np.ndarray:
    """Product of unit lower and unit upper triangular matrices with a row permutation."""
    lower = np.tril(random_bits(rng, n, n), -1) + np.eye(n, dtype=np.uint8)
    upper = np.triu(random_bits(rng, n, n), 1) + np.eye(n, dtype=np.uint8)
    product = (lower.astype(np.int64) @ upper) % 2
    return product[rng.permutation(n)].astype(np.uint8)


class BitMatrixFactory(factory.Factory):
    class Meta:
        model = BitMatrix

    class Params:
        seed = factory.Sequence(lambda n: n)
        density = 0.5

    rows = 6
    cols = 6
    words = factory.LazyAttribute(
        lambda o: np.packbits(
            random_bits(np.random.default_rng(o.seed), o.rows, o.cols, o.density),
            axis=1,
            bitorder="little",
        )
    )


class InvertibleMatrixFactory(factory.Factory):
    class Meta:
        model = BitMatrix.from_array

    class Params:
        seed = factory.Sequence(lambda n: n)
        size = 8

    array = factory.LazyAttribute(lambda o: random_invertible(np.random.default_rng(o.seed), o.size))
