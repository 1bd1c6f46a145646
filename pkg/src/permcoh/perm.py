"""Permutations in one-line notation.

``images[i - 1]`` is the position where the token at position ``i`` lands
(1-based). Composition applies the right-hand factor first:
``(tau * sigma)[i] == tau[sigma[i]]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


def count_inversions(seq) -> int:
    """Inversion count by merge sort."""

    def sort(xs):
        if len(xs) <= 1:
            return list(xs), 0
        mid = len(xs) // 2
        left, a = sort(xs[:mid])
        right, b = sort(xs[mid:])
        merged, inv = [], a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                inv += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return sort(list(seq))[1]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def block_swap(cls, m: int, k: int) -> Permutation:
        """The first ``m`` tokens move past the next ``k``."""
        return cls(tuple(i + k for i in range(1, m + 1)) + tuple(i - m for i in range(m + 1, m + k + 1)))

    @classmethod
    def from_arrangement(cls, labels) -> Permutation:
        """Permutation taking ``sorted(labels)`` to the given arrangement."""
        labels = list(labels)
        where = {lab: pos for pos, lab in enumerate(labels, 1)}
        return cls(tuple(where[lab] for lab in sorted(labels)))

    @classmethod
    def all(cls, n: int):
        for p in itertools.permutations(range(1, n + 1)):
            yield cls(p)

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different degree")
        return Permutation(tuple(self[other[i]] for i in range(1, len(self) + 1)))

    def inverse(self) -> Permutation:
        out = [0] * len(self)
        for i, j in enumerate(self.images, 1):
            out[j - 1] = i
        return Permutation(tuple(out))

    def __add__(self, other: Permutation) -> Permutation:
        """Block sum: ``self`` on the first positions, ``other`` shifted after."""
        n = len(self)
        return Permutation(self.images + tuple(j + n for j in other.images))

    def apply(self, seq) -> list:
        """Rearrange ``seq``: item ``i`` goes to position ``self[i]``."""
        out = [None] * len(self)
        for i, x in enumerate(seq, 1):
            out[self[i] - 1] = x
        return out

    @property
    def inversions(self) -> int:
        return count_inversions(self.images)

    @property
    def sign(self) -> int:
        return -1 if self.inversions % 2 else 1

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self) + 1))

    def adjacent_transpositions(self) -> list[int]:
        """Positions ``p`` such that swapping ``p, p+1`` in order realizes self.

        Applying the swaps left to right to the identity arrangement moves
        each token ``i`` to position ``self[i]``.
        """
        target = self.apply(range(1, len(self) + 1))
        current = list(range(1, len(self) + 1))
        swaps = []
        # bubble sort current towards target
        for pos in range(len(target)):
            j = current.index(target[pos])
            while j > pos:
                current[j - 1], current[j] = current[j], current[j - 1]
                swaps.append(j)
                j -= 1
        return swaps

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self):
        return f"Permutation({str(self)})"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad permutation literal {text!r}")
        inner = body[1:-1].strip()
        return cls(tuple(int(x) for x in inner.split(",")) if inner else ())
