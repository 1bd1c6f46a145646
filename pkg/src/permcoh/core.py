"""Generators, formal objects (words) and their per-generator grading."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class PermcohError(Exception):
    """Base class for all errors raised by this package."""


class RegistryMismatch(PermcohError):
    pass


class UnknownGenerator(PermcohError):
    def __init__(self, name: str):
        super().__init__(f"unknown generator {name!r}")
        self.name = name


class NotInvertible(PermcohError):
    def __init__(self, name: str):
        super().__init__(f"generator {name!r} is not invertible")
        self.name = name


@dataclass(frozen=True)
class Registry:
    """An ordered set of generators, each flagged invertible or plain.

    Order matters: it fixes the order of grading components, verdict
    witnesses and report output.
    """

    entries: tuple[tuple[str, bool], ...]

    def __post_init__(self):
        entries = tuple((str(n), bool(inv)) for n, inv in self.entries)
        object.__setattr__(self, "entries", entries)
        seen = set()
        for name, _ in entries:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)

    @classmethod
    def of(cls, *specs: str) -> Registry:
        """Build from specs like ``"a!"`` (invertible) or ``"b"`` (plain)."""
        return cls(tuple((s.rstrip("!"), s.endswith("!")) for s in specs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.entries)

    def __contains__(self, name: object) -> bool:
        return any(n == name for n, _ in self.entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.entries)

    def is_invertible(self, name: str) -> bool:
        for n, inv in self.entries:
            if n == name:
                return inv
        raise UnknownGenerator(name)

    def require(self, name: str, invertible: bool = False) -> None:
        if not self.is_invertible(name) and invertible:
            raise NotInvertible(name)

    def restrict(self, name: str) -> Registry:
        """The single-generator registry ``{name}`` with the same flag."""
        return Registry(((name, self.is_invertible(name)),))

    def letter(self, name: str, primed: bool = False) -> Letter:
        self.require(name, invertible=primed)
        return Letter(name, primed)

    def word(self, text: str | Iterable[Letter] = "") -> Word:
        """Parse ``"a a' b"`` (or ``"0"`` for the unit) into a word."""
        if not isinstance(text, str):
            letters = tuple(text)
            for lt in letters:
                self.require(lt.gen, invertible=lt.primed)
            return Word(self, letters)
        toks = text.split()
        if toks == ["0"]:
            toks = []
        letters = []
        for tok in toks:
            primed = tok.endswith("'") or tok.endswith("′")
            letters.append(self.letter(tok[:-1] if primed else tok, primed))
        return Word(self, tuple(letters))

    @property
    def unit(self) -> Word:
        return Word(self, ())

    def __str__(self):
        return " ".join(n + ("!" if inv else "") for n, inv in self.entries)


@dataclass(frozen=True, order=True)
class Letter:
    gen: str
    primed: bool = False

    def inverse(self) -> Letter:
        return Letter(self.gen, not self.primed)

    def __str__(self):
        return self.gen + ("'" if self.primed else "")


@dataclass(frozen=True)
class Word:
    """A formal object: a flat sequence of letters. Empty means the unit 0."""

    registry: Registry
    letters: tuple[Letter, ...] = ()

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.registry, self.letters[item])
        return self.letters[item]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "0"

    def __repr__(self):
        return f"Word({str(self)!r})"


def concat(*words: Word) -> Word:
    if not words:
        raise ValueError("concat needs at least one word")
    reg = words[0].registry
    letters: list[Letter] = []
    for w in words:
        if w.registry != reg:
            raise RegistryMismatch(f"cannot concatenate words over {reg} and {w.registry}")
        letters.extend(w.letters)
    return Word(reg, tuple(letters))


def signed_count(w: Word, gen: str) -> int:
    if gen not in w.registry:
        raise UnknownGenerator(gen)
    return sum(-1 if lt.primed else 1 for lt in w.letters if lt.gen == gen)


def grading(w: Word) -> dict[str, int]:
    """Signed letter count for every declared generator, in registry order."""
    out = dict.fromkeys(w.registry.names, 0)
    for lt in w.letters:
        out[lt.gen] += -1 if lt.primed else 1
    return out
