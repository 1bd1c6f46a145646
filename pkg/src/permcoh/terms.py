"""Formal morphism terms, their boundaries and the standard named composites.

Composites are stored in diagrammatic order: ``Comp((f, g))`` means "f, then g".
"""

from __future__ import annotations

from dataclasses import dataclass
from .core import (
    NotInvertible,
    PermcohError,
    Registry,
    UnknownGenerator,
    Word,
    concat,
)

COMPOSITION_MISMATCH = "composition-mismatch"
UNKNOWN_GENERATOR = "unknown-generator"
NOT_INVERTIBLE = "not-invertible"


class TermTypeError(PermcohError):
    """A term fails to typecheck.

    ``location`` is the path of child indices from the root to the offending
    node; ``details`` holds the two unequal words for composition mismatches.
    """

    def __init__(self, kind: str, location: tuple[int, ...] = (), details: tuple = (), message: str = ""):
        self.kind = kind
        self.location = tuple(location)
        self.details = tuple(details)
        if not message:
            if kind == COMPOSITION_MISMATCH:
                message = "cannot compose: target {} does not match source {}".format(*details)
            else:
                message = f"{kind}: {', '.join(map(str, details))}"
        super().__init__(message)

    def __eq__(self, other):
        return (
            isinstance(other, TermTypeError)
            and (self.kind, self.location, self.details) == (other.kind, other.location, other.details)
        )

    def __hash__(self):
        return hash((self.kind, self.location, self.details))

    def __repr__(self):
        return f"TermTypeError({self.kind!r}, {self.location!r}, {self.details!r})"


class Term:
    """Base class of the morphism term language."""

    __slots__ = ()

    @property
    def src(self) -> Word:
        return boundaries(self)[0]

    @property
    def tgt(self) -> Word:
        return boundaries(self)[1]

    def __add__(self, other: Term) -> Term:
        return Sum((self, other))

    def __rshift__(self, other: Term) -> Term:
        return Comp((self, other))

    def __invert__(self) -> Term:
        return Inv(self)

    def __str__(self):
        return render(self)

    def __getstate__(self):
        # string hashes differ between processes; never ship a cached one
        return {k: v for k, v in self.__dict__.items() if k != "_hash"}


@dataclass(frozen=True, repr=False)
class Id(Term):
    word: Word

    @property
    def registry(self) -> Registry:
        return self.word.registry

    def __repr__(self):
        return f"Id({str(self.word)!r})"


@dataclass(frozen=True, repr=False)
class Beta(Term):
    """The symmetry from ``left + right`` to ``right + left``."""

    left: Word
    right: Word

    @property
    def registry(self) -> Registry:
        return self.left.registry

    def __repr__(self):
        return f"Beta({str(self.left)!r}, {str(self.right)!r})"


@dataclass(frozen=True, repr=False)
class Eta(Term):
    """Unit ``0 -> g' g`` of the canonical invertible pair on ``g``."""

    registry: Registry
    gen: str

    def __repr__(self):
        return f"Eta({self.gen!r})"


@dataclass(frozen=True, repr=False)
class Eps(Term):
    """Counit ``g g' -> 0`` of the canonical invertible pair on ``g``."""

    registry: Registry
    gen: str

    def __repr__(self):
        return f"Eps({self.gen!r})"


def _flatten(cls, items) -> tuple:
    out = []
    for t in items:
        if not isinstance(t, Term):
            raise TypeError(f"expected a Term, got {type(t).__name__}")
        if isinstance(t, cls):
            out.extend(t.children)
        else:
            out.append(t)
    if not out:
        raise ValueError(f"{cls.__name__} needs at least one child")
    return tuple(out)


@dataclass(frozen=True, repr=False)
class Sum(Term):
    parts: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", _flatten(Sum, self.parts))

    @property
    def children(self) -> tuple[Term, ...]:
        return self.parts

    @property
    def registry(self) -> Registry:
        return self.parts[0].registry

    def __repr__(self):
        return f"Sum[{', '.join(map(repr, self.parts))}]"


@dataclass(frozen=True, repr=False)
class Comp(Term):
    stages: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "stages", _flatten(Comp, self.stages))

    @property
    def children(self) -> tuple[Term, ...]:
        return self.stages

    @property
    def registry(self) -> Registry:
        return self.stages[0].registry

    def __repr__(self):
        return f"Comp[{', '.join(map(repr, self.stages))}]"


@dataclass(frozen=True, repr=False)
class Inv(Term):
    term: Term

    # Inv(Inv(t)) is t; type.__call__ skips __init__ when __new__ returns a non-Inv.
    def __new__(cls, term=None):
        if isinstance(term, Inv):
            return term.term
        return super().__new__(cls)

    def __getnewargs__(self):
        return (self.term,)

    @property
    def registry(self) -> Registry:
        return self.term.registry

    def __repr__(self):
        return f"Inv({self.term!r})"


def _cache_hash(cls):
    # structural hashing is deep; terms are immutable, so remember it per node
    generated = cls.__hash__

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = generated(self)
            object.__setattr__(self, "_hash", h)
            return h

    cls.__hash__ = __hash__


for _cls in (Id, Beta, Eta, Eps, Sum, Comp, Inv):
    _cache_hash(_cls)


# -- constructors -----------------------------------------------------------


def tsum(*parts: Term) -> Term:
    """Monoidal sum; a single part is returned unchanged."""
    parts = _flatten(Sum, parts)
    return parts[0] if len(parts) == 1 else Sum(parts)


def then(*stages: Term) -> Term:
    """Composite in diagrammatic order; a single stage is returned unchanged."""
    stages = _flatten(Comp, stages)
    return stages[0] if len(stages) == 1 else Comp(stages)


def whisker(left: Word, t: Term, right: Word) -> Term:
    """``id_left + t + id_right`` with empty identities dropped."""
    parts = [Id(left)] if left else []
    parts.append(t)
    if right:
        parts.append(Id(right))
    return tsum(*parts)


# -- typing -----------------------------------------------------------------


def _gen_word(reg: Registry, *letters: tuple[str, bool]) -> Word:
    return reg.word(reg.letter(g, p) for g, p in letters)


def _check_gen(reg: Registry, gen: str, loc) -> None:
    if gen not in reg:
        raise TermTypeError(UNKNOWN_GENERATOR, loc, (gen,))
    if not reg.is_invertible(gen):
        raise TermTypeError(NOT_INVERTIBLE, loc, (gen,))


def _bounds(t: Term, loc: tuple[int, ...]) -> tuple[Word, Word]:
    if isinstance(t, Id):
        return t.word, t.word
    if isinstance(t, Beta):
        if t.left.registry != t.right.registry:
            raise TermTypeError(COMPOSITION_MISMATCH, loc, (t.left, t.right), "beta over different registries")
        return concat(t.left, t.right), concat(t.right, t.left)
    if isinstance(t, Eta):
        _check_gen(t.registry, t.gen, loc)
        return t.registry.unit, _gen_word(t.registry, (t.gen, True), (t.gen, False))
    if isinstance(t, Eps):
        _check_gen(t.registry, t.gen, loc)
        return _gen_word(t.registry, (t.gen, False), (t.gen, True)), t.registry.unit
    if isinstance(t, Inv):
        s, e = _bounds(t.term, loc + (0,))
        return e, s
    if isinstance(t, Sum):
        bs = [_bounds(p, loc + (i,)) for i, p in enumerate(t.parts)]
        reg = bs[0][0].registry
        for i, (s, _) in enumerate(bs):
            if s.registry != reg:
                raise TermTypeError(COMPOSITION_MISMATCH, loc + (i,), (bs[0][0], s), "sum over different registries")
        return concat(*(s for s, _ in bs)), concat(*(e for _, e in bs))
    if isinstance(t, Comp):
        bs = [_bounds(s, loc + (i,)) for i, s in enumerate(t.stages)]
        for i in range(1, len(bs)):
            if bs[i - 1][1] != bs[i][0]:
                raise TermTypeError(COMPOSITION_MISMATCH, loc + (i,), (bs[i - 1][1], bs[i][0]))
        return bs[0][0], bs[-1][1]
    raise TypeError(f"not a term: {t!r}")


_BOUNDS_CACHE: dict = {}


def boundaries(t: Term) -> tuple[Word, Word]:
    """``(src, tgt)`` of a term; raises TermTypeError when ill-typed."""
    try:
        return _BOUNDS_CACHE[t]
    except KeyError:
        pass
    b = _bounds(t, ())
    if len(_BOUNDS_CACHE) > 200_000:
        _BOUNDS_CACHE.clear()
    _BOUNDS_CACHE[t] = b
    return b


def src(t: Term) -> Word:
    return boundaries(t)[0]


def tgt(t: Term) -> Word:
    return boundaries(t)[1]


def typecheck(t: Term) -> TermTypeError | None:
    """Return the first type error (leftmost-innermost), or None if well-typed."""
    try:
        boundaries(t)
    except TermTypeError as err:
        return err
    return None


def is_endo(t: Term) -> bool:
    s, e = boundaries(t)
    return s == e


def size(t: Term) -> int:
    """Node count, where Sum and Comp contribute only their children."""
    if isinstance(t, (Sum, Comp)):
        return sum(size(c) for c in t.children)
    if isinstance(t, Inv):
        return 1 + size(t.term)
    return 1


# -- rendering --------------------------------------------------------------


def render(t: Term) -> str:
    """Canonical text form, parseable by the script DSL."""
    if isinstance(t, Id):
        return f"id({t.word})"
    if isinstance(t, Beta):
        return f"beta({t.left} | {t.right})"
    if isinstance(t, Eta):
        return f"eta({t.gen})"
    if isinstance(t, Eps):
        return f"eps({t.gen})"
    if isinstance(t, Inv):
        inner = render(t.term)
        if isinstance(t.term, (Sum, Comp)):
            inner = f"({inner})"
        return f"inv({inner})"
    if isinstance(t, Sum):
        return " + ".join(render(p) for p in t.parts)
    if isinstance(t, Comp):
        return " ; ".join(f"({render(s)})" if isinstance(s, Sum) else render(s) for s in t.stages)
    raise TypeError(f"not a term: {t!r}")


# -- named composites -------------------------------------------------------


def _inv_gen(reg: Registry, gen: str) -> tuple[Word, Word]:
    if gen not in reg:
        raise UnknownGenerator(gen)
    if not reg.is_invertible(gen):
        raise NotInvertible(gen)
    return reg.word([reg.letter(gen)]), reg.word([reg.letter(gen, True)])


def figure_eight(reg: Registry, gen: str) -> Term:
    """eta, then the symmetry a' + a -> a + a', then eps."""
    a, a_ = _inv_gen(reg, gen)
    return Comp((Eta(reg, gen), Beta(a_, a), Eps(reg, gen)))


def figure_c(reg: Registry, gen: str) -> Term:
    a, a_ = _inv_gen(reg, gen)
    return Comp((
        Eta(reg, gen),
        Sum((Id(a_), Eta(reg, gen), Id(a))),
        Sum((Id(a_), Id(a_), Beta(a, a))),
        Sum((Id(a_), Inv(Eta(reg, gen)), Id(a))),
        Inv(Eta(reg, gen)),
    ))


def figure_h(reg: Registry, gen: str) -> Term:
    a, a_ = _inv_gen(reg, gen)
    return Comp((
        Sum((Eta(reg, gen), Inv(Eps(reg, gen)))),
        Sum((Id(a_), Beta(a, a), Id(a_))),
        Sum((Inv(Eta(reg, gen)), Eps(reg, gen))),
    ))


def n_dot(k: int, w: Word) -> Word:
    if k < 0:
        raise ValueError("n_dot needs k >= 0")
    return concat(w.registry.unit, *([w] * k))


def n_dot_mor(k: int, t: Term) -> Term:
    if k < 0:
        raise ValueError("n_dot_mor needs k >= 0")
    if k == 0:
        return Id(t.registry.unit)
    return tsum(*([t] * k))


def dagger(f: Term, g: str, h: str) -> Term:
    """The unique ``f': g' -> h'`` making ``(f, f')`` a map of canonical pairs.

    ``f`` must be an isomorphism from the word ``g`` to the word ``h``.
    """
    reg = f.registry
    ga, ga_ = _inv_gen(reg, g)
    ha, ha_ = _inv_gen(reg, h)
    s, e = boundaries(f)
    if (s, e) != (ga, ha):
        raise TermTypeError(COMPOSITION_MISMATCH, (), (s, ga) if s != ga else (e, ha))
    return Comp((
        Sum((Eta(reg, h), Id(ga_))),
        Sum((Id(ha_), Inv(f), Id(ga_))),
        Sum((Id(ha_), Eps(reg, g))),
    ))


def conj_obj(gen: str, w: Word) -> Word:
    a, a_ = _inv_gen(w.registry, gen)
    return concat(a_, w, a)


def conj_mor(gen: str, t: Term) -> Term:
    a, a_ = _inv_gen(t.registry, gen)
    return Sum((Id(a_), t, Id(a)))


def conj_constraint(gen: str, w1: Word, w2: Word) -> Term:
    """``(w1)^a + (w2)^a -> (w1 + w2)^a`` collapsing the middle ``a + a'``."""
    reg = w1.registry
    a, a_ = _inv_gen(reg, gen)
    return Sum((Id(concat(a_, w1)), Eps(reg, gen), Id(concat(w2, a))))


def chi_tilde_object(k: int, reg: Registry, gen: str) -> Word:
    a, a_ = _inv_gen(reg, gen)
    return n_dot(k, a) if k >= 0 else n_dot(-k, a_)


def chi_tilde_constraint(k: int, j: int, reg: Registry, gen: str) -> Term:
    """Monoidal constraint ``chi(k) + chi(j) -> chi(k + j)`` into ``reg``."""
    a, a_ = _inv_gen(reg, gen)
    if (k >= 0 and j >= 0) or (k <= 0 and j <= 0):
        return Id(chi_tilde_object(k + j, reg, gen))
    stages = []
    while k > 0 > j:
        stages.append(whisker(n_dot(k - 1, a), Eps(reg, gen), n_dot(-j - 1, a_)))
        k, j = k - 1, j + 1
    while k < 0 < j:
        stages.append(whisker(n_dot(-k - 1, a_), Inv(Eta(reg, gen)), n_dot(j - 1, a)))
        k, j = k + 1, j - 1
    return then(*stages)


# -- pairs built from the canonical ones -------------------------------------


def iterated_pair(k: int, reg: Registry, gen: str) -> tuple[Term, Term]:
    """Unit and counit exhibiting ``k.a'`` as inverse to ``k.a`` (nested eta/eps)."""
    a, a_ = _inv_gen(reg, gen)
    if k == 0:
        return Id(reg.unit), Id(reg.unit)
    unit = Eta(reg, gen)
    counit = Eps(reg, gen)
    for i in range(1, k):
        unit = then(unit, whisker(n_dot(i, a_), Eta(reg, gen), n_dot(i, a)))
        counit = then(whisker(n_dot(i, a), Eps(reg, gen), n_dot(i, a_)), counit)
    return unit, counit


def eight_of_pair(x: Word, x_inv: Word, unit: Term, counit: Term) -> Term:
    """The Figure Eight of an arbitrary invertible pair ``(x, x_inv, unit, counit)``."""
    return then(unit, Beta(x_inv, x), counit)


def triangle_composites(x: Word, x_inv: Word, unit: Term, counit: Term) -> tuple[Term, Term]:
    """The two zig-zag composites that must equal ``id_x`` and ``id_x_inv``."""
    empty = x.registry.unit
    return (
        then(whisker(x, unit, empty), whisker(empty, counit, x)),
        then(whisker(empty, unit, x_inv), whisker(x_inv, counit, empty)),
    )
