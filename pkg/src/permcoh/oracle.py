"""Brute-force evaluators and small-scale enumeration for cross-checking.

Nothing here reuses the structural evaluators in :mod:`permcoh.semantics`:
``token_trace`` simulates a term on labelled tokens, and the enumerators
build every small term exhaustively.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .core import Letter, PermcohError, Registry, Word, grading
from .perm import Permutation
from .terms import (
    Beta,
    Comp,
    Eps,
    Eta,
    Id,
    Inv,
    Sum,
    Term,
    boundaries,
    render,
    size,
    tsum,
    then,
)

MAX_SIZE = 8
MAX_WORD_LENGTH = 5


class BoundExceeded(PermcohError):
    pass


class TraceError(PermcohError):
    pass


@dataclass(frozen=True)
class TraceResult:
    tokens: tuple[tuple[Letter, int], ...]
    signs: dict

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(label for _, label in self.tokens)

    def permutation(self) -> Permutation:
        """Where each source token ended up; only meaningful without units/counits."""
        return Permutation.from_arrangement(self.labels)


def token_trace(t: Term) -> TraceResult:
    """Run ``t`` on labelled tokens of its source word.

    Symmetries physically swap token blocks and flip, for each generator
    separately, a sign when both blocks hold an odd number of its letters.
    Units create fresh labelled tokens and counits delete adjacent ones.
    """
    s, _ = boundaries(t)
    reg = t.registry
    fresh = itertools.count(len(s) + 1)
    signs = dict.fromkeys(reg.names, 1)

    def pair(gen: str, first_primed: bool) -> list:
        return [(Letter(gen, first_primed), next(fresh)), (Letter(gen, not first_primed), next(fresh))]

    def expect(seg, gen: str, first_primed: bool) -> None:
        want = [Letter(gen, first_primed), Letter(gen, not first_primed)]
        if [lt for lt, _ in seg] != want:
            raise TraceError(f"expected tokens {want}, found {[str(lt) for lt, _ in seg]}")

    def run(t: Term, seg: list, rev: bool) -> list:
        if isinstance(t, Id):
            return seg
        if isinstance(t, Beta):
            m = len(t.right) if rev else len(t.left)
            first, second = seg[:m], seg[m:]
            for g in reg.names:
                c = sum(1 for lt, _ in first if lt.gen == g)
                d = sum(1 for lt, _ in second if lt.gen == g)
                if c * d % 2:
                    signs[g] = -signs[g]
            return second + first
        if isinstance(t, (Eta, Eps)):
            # eta: 0 -> g' g ; eps: g g' -> 0
            primed_first = isinstance(t, Eta)
            creating = isinstance(t, Eta) != rev
            if creating:
                if seg:
                    raise TraceError("unit applied to a non-empty segment")
                return pair(t.gen, primed_first)
            expect(seg, t.gen, primed_first)
            return []
        if isinstance(t, Sum):
            out, pos = [], 0
            for p in t.parts:
                ps, pt = boundaries(p)
                n = len(pt) if rev else len(ps)
                out.extend(run(p, seg[pos : pos + n], rev))
                pos += n
            if pos != len(seg):
                raise TraceError("segment length does not match sum boundary")
            return out
        if isinstance(t, Comp):
            for stage in reversed(t.stages) if rev else t.stages:
                seg = run(stage, seg, rev)
            return seg
        if isinstance(t, Inv):
            return run(t.term, seg, not rev)
        raise TypeError(f"not a term: {t!r}")

    tokens = run(t, [(lt, i) for i, lt in enumerate(s.letters, 1)], False)
    return TraceResult(tuple(tokens), signs)


# -- enumeration -------------------------------------------------------------


def all_words(reg: Registry, max_len: int) -> list[Word]:
    letters = []
    for g in reg.names:
        letters.append(Letter(g))
        if reg.is_invertible(g):
            letters.append(Letter(g, True))
    out = []
    for n in range(max_len + 1):
        out.extend(Word(reg, combo) for combo in itertools.product(letters, repeat=n))
    return out


class _Table:
    """All normalized terms by size, with every intermediate word bounded."""

    def __init__(self, reg: Registry, max_size: int, max_len: int):
        self.reg = reg
        self.max_len = max_len
        self.unit_id = Id(reg.unit)
        self.levels: list[list[Term]] = [[]]
        self.bounds: dict[Term, tuple[Word, Word]] = {}
        # tuples of >= 1 summands / stages with total size n
        self._sums: list[list[tuple]] = [[]]
        self._comps: list[dict] = [{}]
        for n in range(1, max_size + 1):
            self._grow(n)

    def _add(self, bucket: list, t: Term) -> None:
        s, e = boundaries(t)
        if len(s) > self.max_len or len(e) > self.max_len:
            return
        self.bounds[t] = (s, e)
        bucket.append(t)

    def _grow(self, n: int) -> None:
        reg, L = self.reg, self.max_len
        level: list[Term] = []
        if n == 1:
            words = all_words(reg, L)
            for w in words:
                level.append(Id(w))
            for x in words:
                for y in words:
                    if x and y and len(x) + len(y) <= L:
                        level.append(Beta(x, y))
            for g in reg.names:
                if reg.is_invertible(g):
                    level.extend((Eta(reg, g), Eps(reg, g)))
            for t in level:
                self.bounds[t] = boundaries(t)
        else:
            for t in self.levels[n - 1]:
                if not isinstance(t, (Id, Inv)):
                    self._add(level, Inv(t))
        # multi-part sums and composites use only strictly smaller parts
        sums = self._sum_tails(n)
        comps = self._comp_tails(n)
        for parts, _, _ in sums:
            self._add(level, Sum(parts))
        for chains in comps.values():
            for stages, _ in chains:
                t = Comp(stages)
                self.bounds[t] = (self.bounds[stages[0]][0], self.bounds[stages[-1]][1])
                level.append(t)
        self.levels.append(level)
        for p in level:
            ps, pt = self.bounds[p]
            if not isinstance(p, Sum) and p != self.unit_id:
                sums.append(((p,), len(ps), len(pt)))
            if not isinstance(p, (Comp, Id)):
                comps.setdefault(ps, []).append(((p,), pt))
        self._sums.append(sums)
        self._comps.append(comps)

    def _sum_tails(self, n: int) -> list:
        out = []
        for k in range(1, n):
            for p in self.levels[k]:
                if isinstance(p, Sum) or p == self.unit_id:
                    continue
                ps, pt = self.bounds[p]
                for rest, rs, rt in self._sums[n - k]:
                    if isinstance(p, Id) and isinstance(rest[0], Id):
                        continue
                    if len(ps) + rs > self.max_len or len(pt) + rt > self.max_len:
                        continue
                    out.append(((p,) + rest, len(ps) + rs, len(pt) + rt))
        return out

    def _comp_tails(self, n: int) -> dict:
        out: dict = {}
        for k in range(1, n):
            for p in self.levels[k]:
                if isinstance(p, (Comp, Id)):
                    continue
                ps, pt = self.bounds[p]
                for rest, rt in self._comps[n - k].get(pt, ()):
                    out.setdefault(ps, []).append(((p,) + rest, rt))
        return out

    def terms(self):
        for level in self.levels:
            yield from level


@lru_cache(maxsize=8)
def _table(reg: Registry, max_size: int, max_len: int) -> _Table:
    return _Table(reg, max_size, max_len)


def _check_bounds(max_size: int, max_len: int) -> None:
    if max_size > MAX_SIZE:
        raise BoundExceeded(f"term size {max_size} exceeds {MAX_SIZE}")
    if max_len > MAX_WORD_LENGTH:
        raise BoundExceeded(f"word length {max_len} exceeds {MAX_WORD_LENGTH}")


def enumerate_terms(reg: Registry, max_size: int, max_len: int = 4) -> dict:
    """Every enumerated term grouped by ``(src, tgt)``, each group sorted by rendering."""
    _check_bounds(max_size, max_len)
    table = _table(reg, max_size, max_len)
    groups: dict = {}
    for t in table.terms():
        groups.setdefault(table.bounds[t], []).append(t)
    for ts in groups.values():
        ts.sort(key=render)
    return groups


def enumerate_parallel_terms(source: Word, target: Word, max_size: int, max_len: int | None = None) -> list[Term]:
    """All enumerated terms ``source -> target`` of size at most ``max_size``.

    Intermediate words are bounded by ``max_len`` (default: the longer
    endpoint, but at least 3).
    """
    if max_len is None:
        max_len = max(3, len(source), len(target))
    _check_bounds(max_size, max(max_len, len(source), len(target)))
    if source.registry != target.registry or grading(source) != grading(target):
        return []
    return list(enumerate_terms(source.registry, max_size, max_len).get((source, target), []))


def classify_homset(source: Word, target: Word, max_size: int, max_len: int | None = None) -> list[Term]:
    """Representatives of the enumerated terms ``source -> target`` up to equality."""
    from .coherence import EQUAL, check_equal

    reps: list[Term] = []
    for t in sorted(enumerate_parallel_terms(source, target, max_size, max_len), key=lambda t: (size(t), render(t))):
        if not any(check_equal(r, t).status == EQUAL for r in reps):
            reps.append(t)
    return reps


# -- random terms -------------------------------------------------------------


def _letters(reg: Registry) -> list[Letter]:
    out = []
    for g in reg.names:
        out.append(Letter(g))
        if reg.is_invertible(g):
            out.append(Letter(g, True))
    return out


def random_word(rng: random.Random, reg: Registry, max_len: int = 3) -> Word:
    letters = _letters(reg)
    return Word(reg, tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len))))


def _forward(rng: random.Random, w: Word, depth: int) -> Term:
    """A random well-typed term with source ``w``."""
    reg = w.registry
    inv_gens = [g for g in reg.names if reg.is_invertible(g)]
    choices = ["id", "beta", "eta", "inv_eps"]
    for i in range(len(w) - 1):
        a, b = w.letters[i], w.letters[i + 1]
        if a.gen == b.gen and a.primed != b.primed and reg.is_invertible(a.gen):
            choices.append("collapse")
            break
    if depth > 0:
        choices += ["comp", "comp", "split", "whisker"]
    kind = rng.choice(choices)
    if kind == "beta" and len(w) >= 2:
        m = rng.randint(1, len(w) - 1)
        return Beta(w[:m], w[m:])
    if kind in ("eta", "inv_eps") and inv_gens:
        g = rng.choice(inv_gens)
        core = Eta(reg, g) if kind == "eta" else Inv(Eps(reg, g))
        m = rng.randint(0, len(w))
        return tsum(*[p for p in (Id(w[:m]) if m else None, core, Id(w[m:]) if m < len(w) else None) if p])
    if kind == "collapse":
        spots = [
            i for i in range(len(w) - 1)
            if w.letters[i].gen == w.letters[i + 1].gen
            and w.letters[i].primed != w.letters[i + 1].primed
        ]
        i = rng.choice(spots)
        a = w.letters[i]
        core = Inv(Eta(reg, a.gen)) if a.primed else Eps(reg, a.gen)
        parts = [Id(w[:i])] if i else []
        parts.append(core)
        if i + 2 < len(w):
            parts.append(Id(w[i + 2 :]))
        return tsum(*parts)
    if kind == "comp":
        first = _forward(rng, w, depth - 1)
        return then(first, _forward(rng, boundaries(first)[1], depth - 1))
    if kind == "split" and len(w) >= 2:
        m = rng.randint(1, len(w) - 1)
        return tsum(_forward(rng, w[:m], depth - 1), _forward(rng, w[m:], depth - 1))
    if kind == "whisker" and w:
        i = rng.randint(0, len(w) - 1)
        j = rng.randint(i + 1, len(w))
        parts = [Id(w[:i])] if i else []
        parts.append(_forward(rng, w[i:j], depth - 1))
        if j < len(w):
            parts.append(Id(w[j:]))
        return tsum(*parts)
    return Id(w)


def random_term(rng: random.Random, reg: Registry, depth: int = 4, max_len: int = 3) -> Term:
    """A random well-typed term; inverses appear as ``inv(t1) ; t2`` spans."""
    kind = rng.choice(["forward", "span", "sum", "inv"]) if depth > 0 else "forward"
    if kind == "span":
        w = random_word(rng, reg, max_len)
        left = _forward(rng, w, depth - 1)
        right = _forward(rng, w, depth - 1)
        return then(Inv(left), right)
    if kind == "sum":
        return tsum(*(random_term(rng, reg, depth - 1, max_len) for _ in range(rng.randint(2, 3))))
    if kind == "inv":
        return Inv(random_term(rng, reg, depth - 1, max_len))
    return _forward(rng, random_word(rng, reg, max_len), depth)
