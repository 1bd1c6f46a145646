import random

import pytest

from permcoh.core import Registry
from permcoh.oracle import (
    BoundExceeded,
    all_words,
    classify_homset,
    enumerate_parallel_terms,
    enumerate_terms,
    random_term,
    token_trace,
)
from permcoh.semantics import a_parity
from permcoh.terms import TermTypeError, Beta, Comp, Eps, Eta, Id, Inv, figure_eight, render, size, src, tgt, typecheck

RA = Registry.of("a!")


def test_all_words():
    assert len(all_words(RA, 2)) == 1 + 2 + 4
    assert len(all_words(Registry.of("a!", "b"), 1)) == 4


def test_token_trace_figure_eight():
    r = token_trace(figure_eight(RA, "a"))
    assert r.tokens == ()
    assert r.signs == {"a": -1}


def test_token_trace_labels():
    reg = Registry.of("x")
    w = reg.word("x x x")
    r = token_trace(Beta(w[:1], w[1:]))
    assert r.labels == (2, 3, 1)
    assert str(r.permutation()) == "[3,1,2]"


def test_token_trace_unit_labels_are_fresh():
    w = RA.word("a")
    r = token_trace(Id(w) + Eta(RA, "a"))
    assert r.labels == (1, 2, 3)


def test_token_trace_inverse_runs_backwards():
    w = RA.word("a a'")
    r = token_trace(Comp((Eps(RA, "a"), Inv(Eps(RA, "a")))))
    assert [str(lt) for lt, _ in r.tokens] == ["a", "a'"]
    assert r.labels == (3, 4)
    assert src(Inv(Eps(RA, "a"))) == RA.unit and tgt(Inv(Eps(RA, "a"))) == w


def test_token_trace_rejects_ill_typed():
    with pytest.raises(TermTypeError):
        token_trace(Comp((Eta(RA, "a"), Eps(RA, "a"))))


def test_enumeration_is_well_typed_and_sized():
    groups = enumerate_terms(RA, 3, 2)
    for (s, e), ts in groups.items():
        assert ts == sorted(ts, key=render)
        for t in ts:
            assert typecheck(t) is None
            assert (src(t), tgt(t)) == (s, e)
            assert size(t) <= 3


def test_enumeration_contains_figure_eight():
    ts = enumerate_parallel_terms(RA.unit, RA.unit, 3)
    assert figure_eight(RA, "a") in ts
    assert Id(RA.unit) in ts


def test_enumeration_bounds():
    with pytest.raises(BoundExceeded):
        enumerate_terms(RA, 9)
    with pytest.raises(BoundExceeded):
        enumerate_terms(RA, 2, 6)


def test_grading_mismatch_gives_nothing():
    assert enumerate_parallel_terms(RA.word("a"), RA.word("a'"), 4) == []


def test_classify_unit_homset():
    reps = classify_homset(RA.unit, RA.unit, 4)
    assert [render(r) for r in reps] == ["id(0)", "eta(a) ; beta(a' | a) ; eps(a)"]


def test_classify_plain():
    reg = Registry.of("x")
    w = reg.word("x x x")
    assert len(classify_homset(w, w, 4)) == 6


def test_random_terms_typecheck_and_trace():
    rng = random.Random(7)
    reg = Registry.of("a!", "b")
    for _ in range(200):
        t = random_term(rng, reg)
        assert typecheck(t) is None
        r = token_trace(t)
        assert [lt for lt, _ in r.tokens] == list(tgt(t).letters)
        assert r.signs["a"] == (-1 if a_parity(t, "a") else 1)


def test_random_terms_are_reproducible():
    a = [render(random_term(random.Random(3), RA)) for _ in range(5)]
    b = [render(random_term(random.Random(3), RA)) for _ in range(5)]
    assert a == b


def test_counit_homset():
    s = RA.word("a a'")
    assert Eps(RA, "a") in enumerate_parallel_terms(s, RA.unit, 2)
    reps = classify_homset(s, RA.unit, 4)
    assert len(reps) == 2 and reps[0] == Eps(RA, "a")
    assert sorted(a_parity(r, "a") for r in reps) == [0, 1]
