"""Evaluation of terms in symmetric groups, the super integers and user models."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Any

from .core import NotInvertible, PermcohError, UnknownGenerator, Word, signed_count
from .perm import Permutation
from .projection import EtaEpsPresent, omega, project_term
from .terms import Beta, Comp, Eps, Eta, Id, Inv, Sum, Term, then, whisker


class ProjectionRequired(PermcohError):
    """Evaluation needs a single invertible generator; project first."""


class UnassignedGenerator(PermcohError):
    pass


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()

    @classmethod
    def of_sign(cls, sign: int) -> Parity:
        return cls.ODD if sign == -1 else cls.EVEN

    @classmethod
    def parse(cls, text: str) -> Parity:
        return cls[text.strip().upper()]


# -- symmetric groups -------------------------------------------------------


def perm_of(t: Term) -> Permutation:
    """Underlying permutation of a term with no units, counits or inverse letters."""

    def length(w: Word) -> int:
        if any(lt.primed for lt in w.letters):
            raise EtaEpsPresent(f"word {w} contains inverse letters")
        return len(w)

    def go(t: Term) -> Permutation:
        if isinstance(t, Id):
            p = Permutation.identity(length(t.word))
        elif isinstance(t, Beta):
            p = Permutation.block_swap(length(t.left), length(t.right))
        elif isinstance(t, (Eta, Eps)):
            raise EtaEpsPresent(f"{t!r} has no underlying permutation")
        elif isinstance(t, Sum):
            p = reduce(lambda a, b: a + b, (go(x) for x in t.parts))
        elif isinstance(t, Comp):
            p = reduce(lambda acc, s: go(s) * acc, t.stages[1:], go(t.stages[0]))
        elif isinstance(t, Inv):
            p = go(t.term).inverse()
        else:
            raise TypeError(f"not a term: {t!r}")
        return p

    return go(t)


def a_permutation(t: Term, gen: str) -> Permutation:
    """Underlying permutation of the projection onto ``gen``, by direct recursion."""
    reg = t.registry
    if gen not in reg:
        raise UnknownGenerator(gen)
    if reg.is_invertible(gen):
        raise EtaEpsPresent(f"generator {gen!r} is invertible; use a_parity")

    def count(w: Word) -> int:
        return sum(1 for lt in w.letters if lt.gen == gen)

    # works on bare image tuples; validated once at the end
    def go(t: Term) -> tuple:
        if isinstance(t, Id):
            p = tuple(range(1, count(t.word) + 1))
        elif isinstance(t, Beta):
            m, k = count(t.left), count(t.right)
            p = tuple(range(k + 1, m + k + 1)) + tuple(range(1, k + 1))
        elif isinstance(t, (Eta, Eps)):
            # only invertible generators have units, and gen is plain
            p = ()
        elif isinstance(t, Sum):
            p = ()
            for x in t.parts:
                n = len(p)
                p += tuple(j + n for j in go(x))
        elif isinstance(t, Comp):
            p = go(t.stages[0])
            for s in t.stages[1:]:
                q = go(s)
                p = tuple(q[i - 1] for i in p)
        elif isinstance(t, Inv):
            q = go(t.term)
            out = [0] * len(q)
            for i, j in enumerate(q, 1):
                out[j - 1] = i
            p = tuple(out)
        else:
            raise TypeError(f"not a term: {t!r}")
        return p

    return Permutation(go(t))


def a_permutation_reference(t: Term, gen: str) -> Permutation:
    """Same value as :func:`a_permutation`, by projecting and collapsing names."""
    if t.registry.is_invertible(gen):
        raise EtaEpsPresent(f"generator {gen!r} is invertible; use a_parity")
    return perm_of(omega(project_term(t, gen)))


def permutation_term(sigma: Permutation, w: Word) -> Term:
    """A composite of adjacent symmetries on ``w`` realizing ``sigma``."""
    if len(sigma) != len(w):
        raise ValueError(f"permutation of degree {len(sigma)} on a word of length {len(w)}")
    letters = list(w.letters)
    stages = []
    for p in sigma.adjacent_transpositions():
        pre = Word(w.registry, tuple(letters[: p - 1]))
        post = Word(w.registry, tuple(letters[p + 1 :]))
        a, b = Word(w.registry, (letters[p - 1],)), Word(w.registry, (letters[p],))
        stages.append(whisker(pre, Beta(a, b), post))
        letters[p - 1], letters[p] = letters[p], letters[p - 1]
    return then(*stages) if stages else Id(w)


# -- super integers -----------------------------------------------------------


@dataclass(frozen=True)
class SuperMorphism:
    """An automorphism ``(+-1)`` of the integer ``obj``."""

    obj: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def then(self, other: SuperMorphism) -> SuperMorphism:
        if self.obj != other.obj:
            raise ValueError(f"cannot compose automorphisms of {self.obj} and {other.obj}")
        return SuperMorphism(self.obj, self.sign * other.sign)

    def __add__(self, other: SuperMorphism) -> SuperMorphism:
        return SuperMorphism(self.obj + other.obj, self.sign * other.sign)

    @property
    def parity(self) -> Parity:
        return Parity.of_sign(self.sign)

    def __str__(self):
        return f"({self.obj}, {'+1' if self.sign == 1 else '-1'})"


def _single_invertible(t: Term) -> str:
    reg = t.registry
    if len(reg) != 1 or not reg.is_invertible(reg.names[0]):
        raise ProjectionRequired(f"expected a single invertible generator, got registry {{{reg}}}")
    return reg.names[0]


def eval_superz(t: Term) -> SuperMorphism:
    gen = _single_invertible(t)

    def go(t: Term) -> SuperMorphism:
        if isinstance(t, Id):
            v = SuperMorphism(signed_count(t.word, gen))
        elif isinstance(t, Beta):
            k, j = signed_count(t.left, gen), signed_count(t.right, gen)
            v = SuperMorphism(k + j, -1 if (k * j) % 2 else 1)
        elif isinstance(t, (Eta, Eps)):
            v = SuperMorphism(0)
        elif isinstance(t, Sum):
            v = reduce(lambda a, b: a + b, (go(p) for p in t.parts))
        elif isinstance(t, Comp):
            v = reduce(SuperMorphism.then, (go(s) for s in t.stages))
        elif isinstance(t, Inv):
            v = go(t.term)
        else:
            raise TypeError(f"not a term: {t!r}")
        return v

    return go(t)


def parity(t: Term) -> Parity:
    return eval_superz(t).parity


def a_parity(t: Term, gen: str) -> Parity:
    """Parity of the projection onto ``gen``, by direct recursion on ``t``."""
    if not t.registry.is_invertible(gen):
        raise NotInvertible(gen)

    def odd(w: Word) -> int:
        return sum(1 for lt in w.letters if lt.gen == gen) % 2

    def go(t: Term) -> int:
        if isinstance(t, Beta):
            v = odd(t.left) * odd(t.right)
        elif isinstance(t, (Id, Eta, Eps)):
            v = 0
        elif isinstance(t, (Sum, Comp)):
            v = sum(go(c) for c in t.children) % 2
        elif isinstance(t, Inv):
            v = go(t.term)
        else:
            raise TypeError(f"not a term: {t!r}")
        return v

    return Parity(go(t))


def a_parity_reference(t: Term, gen: str) -> Parity:
    """Same value as :func:`a_parity`, through projection and the super integers."""
    if not t.registry.is_invertible(gen):
        raise NotInvertible(gen)
    return parity(project_term(t, gen))


# -- arbitrary models -------------------------------------------------------


@dataclass(frozen=True)
class InvertiblePair:
    base: Any
    inverse: Any
    unit: Any
    counit: Any


class Model:
    """A strict symmetric monoidal target for :func:`interpret`.

    Subclasses supply objects for generators (plus an invertible pair for
    each invertible generator) and the structure maps of a permutative
    category. Axioms are the subclass's responsibility.
    """

    thread_safe = True
    unit_object: Any = None

    def generator(self, gen: str) -> Any:
        return self.pair(gen).base

    def pair(self, gen: str) -> InvertiblePair:
        raise UnassignedGenerator(gen)

    def tensor(self, x, y):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def compose(self, f, g):
        """``f`` then ``g``."""
        raise NotImplementedError

    def sum(self, f, g):
        raise NotImplementedError

    def symmetry(self, x, y):
        raise NotImplementedError

    def inverse(self, f):
        raise NotImplementedError

    def word(self, w: Word):
        obj = self.unit_object
        for lt in w.letters:
            part = self.pair(lt.gen).inverse if lt.primed else self.generator(lt.gen)
            obj = self.tensor(obj, part)
        return obj


def interpret(t: Term, model: Model):
    for gen in t.registry.names:
        try:
            model.pair(gen) if t.registry.is_invertible(gen) else model.generator(gen)
        except (UnassignedGenerator, KeyError, NotInvertible):
            raise UnassignedGenerator(gen) from None

    def go(t: Term):
        if isinstance(t, Id):
            return model.identity(model.word(t.word))
        if isinstance(t, Beta):
            return model.symmetry(model.word(t.left), model.word(t.right))
        if isinstance(t, Eta):
            return model.pair(t.gen).unit
        if isinstance(t, Eps):
            return model.pair(t.gen).counit
        if isinstance(t, Sum):
            return reduce(model.sum, (go(p) for p in t.parts))
        if isinstance(t, Comp):
            return reduce(model.compose, (go(s) for s in t.stages))
        if isinstance(t, Inv):
            return model.inverse(go(t.term))
        raise TypeError(f"not a term: {t!r}")

    return go(t)


class SuperIntegerModel(Model):
    """Every generator goes to 1 with the canonical pair ``(1, -1, id, id)``."""

    unit_object = 0

    def pair(self, gen):
        return InvertiblePair(1, -1, SuperMorphism(0), SuperMorphism(0))

    def tensor(self, x, y):
        return x + y

    def identity(self, x):
        return SuperMorphism(x)

    def compose(self, f, g):
        return f.then(g)

    def sum(self, f, g):
        return f + g

    def symmetry(self, x, y):
        return SuperMorphism(x + y, (-1) ** ((x * y) % 2))

    def inverse(self, f):
        return f


class PermutationModel(Model):
    """Plain generators only: objects are token counts, morphisms permutations."""

    unit_object = 0

    def generator(self, gen):
        return 1

    def pair(self, gen):
        raise NotInvertible(gen)

    def tensor(self, x, y):
        return x + y

    def identity(self, x):
        return Permutation(tuple(range(1, x + 1)))

    def compose(self, f, g):
        return g * f

    def sum(self, f, g):
        return f + g

    def symmetry(self, x, y):
        moved = list(range(x + 1, x + y + 1)) + list(range(1, x + 1))
        return Permutation.from_arrangement(moved)

    def inverse(self, f):
        return f.inverse()
