"""The Artin action of B_n on the free group F_n, used as an exact equality oracle."""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from ..errors import BraidError
from .words import BraidWord, FreeWord


@dataclass(frozen=True)
class ArtinAuto:
    """Automorphism of F_n given by the images of x_1 .. x_n"""
    images: Tuple[FreeWord, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "ArtinAuto":
        return cls(tuple(FreeWord.generator(j) for j in range(1, n + 1)))

    def __call__(self, word: FreeWord) -> FreeWord:
        return word.substitute(self.images)

    def compose(self, other: "ArtinAuto") -> "ArtinAuto":
        """self o other"""
        return ArtinAuto(tuple(self(image) for image in other.images))

    def is_identity(self) -> bool:
        return self == ArtinAuto.identity(self.n)

    def to_strings(self) -> List[str]:
        return [image.format("x") for image in self.images]


@lru_cache(maxsize=None)
def generator_action(n: int, i: int, e: int) -> ArtinAuto:
    """s_i: x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i; its inverse for e = -1."""
    images = [FreeWord.generator(j) for j in range(1, n + 1)]
    xi, xj = FreeWord.generator(i), FreeWord.generator(i + 1)
    if e > 0:
        images[i - 1] = xi * xj * xi.inverse()
        images[i] = xi
    else:
        images[i - 1] = xj
        images[i] = xj.inverse() * xi * xj
    return ArtinAuto(tuple(images))


def artin_images(w: BraidWord) -> ArtinAuto:
    result = ArtinAuto.identity(w.n)
    for i, e in w.letters:
        result = result.compose(generator_action(w.n, i, e))
    return result


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise BraidError(f"strand mismatch: B_{w1.n} vs B_{w2.n}")
    return artin_images(w1 * w2.inverse()).is_identity()


def braids_commute(w1: BraidWord, w2: BraidWord) -> bool:
    return braid_equal(w1 * w2, w2 * w1)
