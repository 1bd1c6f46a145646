"""Deciding equality of parallel formal morphisms, with per-generator witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import RegistryMismatch, Word
from .semantics import a_parity, a_permutation
from .terms import Id, Term, boundaries

EQUAL = "equal"
NOT_PARALLEL = "not-parallel"
DIFFERS = "differs"

PARITY = "parity"
PERMUTATION = "permutation"


@dataclass(frozen=True)
class Witness:
    generator: str
    kind: str
    lhs: object
    rhs: object

    def __str__(self):
        return f"{self.generator} {self.kind}: {self.lhs} vs {self.rhs}"


@dataclass(frozen=True)
class Verdict:
    status: str
    witnesses: tuple[Witness, ...] = ()
    # ((lhs src, lhs tgt), (rhs src, rhs tgt)) when the terms are not parallel
    boundary: tuple[tuple[Word, Word], tuple[Word, Word]] | None = None

    def __bool__(self) -> bool:
        return self.status == EQUAL

    def __str__(self):
        if self.status == NOT_PARALLEL:
            (s1, t1), (s2, t2) = self.boundary
            return f"{self.status}: {s1} -> {t1} vs {s2} -> {t2}"
        if self.witnesses:
            return f"{self.status}: " + "; ".join(map(str, self.witnesses))
        return self.status


def invariants(t: Term) -> dict[str, object]:
    """The complete invariant of ``t``: a-permutation or a-parity per generator."""
    reg = t.registry
    return {
        g: (a_parity(t, g) if reg.is_invertible(g) else a_permutation(t, g))
        for g in reg.names
    }


def check_equal(s: Term, t: Term) -> Verdict:
    if s.registry != t.registry:
        raise RegistryMismatch(f"terms over {{{s.registry}}} and {{{t.registry}}}")
    bs, bt = boundaries(s), boundaries(t)
    if bs != bt:
        return Verdict(NOT_PARALLEL, boundary=(bs, bt))
    reg = s.registry
    lhs, rhs = invariants(s), invariants(t)
    witnesses = tuple(
        Witness(g, PARITY if reg.is_invertible(g) else PERMUTATION, lhs[g], rhs[g])
        for g in reg.names
        if lhs[g] != rhs[g]
    )
    return Verdict(DIFFERS if witnesses else EQUAL, witnesses)


def is_identity(t: Term) -> bool:
    s, e = boundaries(t)
    return s == e and check_equal(t, Id(s)).status == EQUAL


@dataclass(frozen=True)
class DiagramReport:
    pairs: tuple[tuple[str, str, Verdict], ...] = field(default_factory=tuple)

    @property
    def commutes(self) -> bool:
        return all(v.status == EQUAL for _, _, v in self.pairs)


def verify_diagram(paths) -> DiagramReport:
    """All-pairs equality over named paths ``[(name, term), ...]``."""
    paths = list(paths)
    if len(paths) < 2:
        raise ValueError("a diagram needs at least two paths")
    return DiagramReport(tuple(
        (n1, n2, check_equal(t1, t2))
        for (n1, t1), (n2, t2) in itertools.combinations(paths, 2)
    ))
