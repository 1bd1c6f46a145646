"""Projection of words and terms onto a single generator, and total collapse."""

from __future__ import annotations

from .core import Letter, PermcohError, Registry, UnknownGenerator, Word
from .terms import Beta, Comp, Eps, Eta, Id, Inv, Sum, Term

OMEGA_GEN = "x"


class EtaEpsPresent(PermcohError):
    """The term leaves the symmetric fragment (units, counits or inverse letters)."""


def project_word(w: Word, gen: str) -> Word:
    if gen not in w.registry:
        raise UnknownGenerator(gen)
    return Word(w.registry.restrict(gen), tuple(lt for lt in w.letters if lt.gen == gen))


def project_term(t: Term, gen: str) -> Term:
    """Erase every letter, unit and counit not belonging to ``gen``."""
    reg = t.registry
    if gen not in reg:
        raise UnknownGenerator(gen)
    sub = reg.restrict(gen)

    def go(t: Term) -> Term:
        if isinstance(t, Id):
            out = Id(project_word(t.word, gen))
        elif isinstance(t, Beta):
            x, y = project_word(t.left, gen), project_word(t.right, gen)
            out = Beta(x, y) if x and y else Id(Word(sub, x.letters + y.letters))
        elif isinstance(t, (Eta, Eps)):
            out = type(t)(sub, gen) if t.gen == gen else Id(sub.unit)
        elif isinstance(t, Sum):
            out = Sum(tuple(go(p) for p in t.parts))
        elif isinstance(t, Comp):
            out = Comp(tuple(go(s) for s in t.stages))
        elif isinstance(t, Inv):
            out = Inv(go(t.term))
        else:
            raise TypeError(f"not a term: {t!r}")
        return out

    return go(t)


def _rename(w: Word, reg: Registry) -> Word:
    if any(lt.primed for lt in w.letters):
        raise EtaEpsPresent(f"word {w} contains inverse letters")
    return Word(reg, (Letter(OMEGA_GEN),) * len(w))


def omega(t: Term) -> Term:
    """Rename every letter to the single plain generator ``x``."""
    reg = Registry(((OMEGA_GEN, False),))

    def go(t: Term) -> Term:
        if isinstance(t, Id):
            return Id(_rename(t.word, reg))
        if isinstance(t, Beta):
            return Beta(_rename(t.left, reg), _rename(t.right, reg))
        if isinstance(t, (Eta, Eps)):
            raise EtaEpsPresent(f"{t!r} has no image in the symmetric fragment")
        if isinstance(t, Sum):
            return Sum(tuple(go(p) for p in t.parts))
        if isinstance(t, Comp):
            return Comp(tuple(go(s) for s in t.stages))
        if isinstance(t, Inv):
            return Inv(go(t.term))
        raise TypeError(f"not a term: {t!r}")

    return go(t)
