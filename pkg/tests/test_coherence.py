import random

import pytest
from hypothesis import given, settings, strategies as st

from permcoh.coherence import (
    DIFFERS,
    EQUAL,
    NOT_PARALLEL,
    PARITY,
    PERMUTATION,
    check_equal,
    invariants,
    is_identity,
    verify_diagram,
)
from permcoh.core import Registry, RegistryMismatch
from permcoh.oracle import enumerate_parallel_terms, random_term
from permcoh.perm import Permutation
from permcoh.semantics import Parity
from permcoh.terms import Beta, Comp, Eps, Eta, Id, Inv, dagger, figure_eight, src, tgt

RA = Registry.of("a!")
A = RA.word


def test_not_parallel():
    v = check_equal(Eps(RA, "a"), Id(A("a a'")))
    assert v.status == NOT_PARALLEL
    assert not v
    assert str(v) == "not-parallel: a a' -> 0 vs a a' -> a a'"


def test_differs_parity_witness():
    xi = Comp((Beta(A("a"), A("a'")), Inv(Eta(RA, "a"))))
    v = check_equal(xi, Eps(RA, "a"))
    assert v.status == DIFFERS
    (w,) = v.witnesses
    assert (w.generator, w.kind, w.lhs, w.rhs) == ("a", PARITY, Parity.ODD, Parity.EVEN)


def test_differs_permutation_witness():
    reg = Registry.of("a", "b")
    w = reg.word("a a b")
    v = check_equal(Beta(w[:1], w[1:2]) + Id(w[2:]), Id(w))
    (wit,) = v.witnesses
    assert (wit.generator, wit.kind) == ("a", PERMUTATION)
    assert wit.lhs == Permutation((2, 1))


def test_witnesses_listed_in_registry_order():
    reg = Registry.of("b!", "a!")
    w = reg.word("a a b b")
    t = Beta(w[:1], w[1:2]) + Beta(w[2:3], w[3:])
    v = check_equal(t, Id(w))
    assert [x.generator for x in v.witnesses] == ["b", "a"]


def test_registry_mismatch():
    with pytest.raises(RegistryMismatch):
        check_equal(Id(A("a")), Id(Registry.of("a!", "b").word("a")))


def test_is_identity():
    assert is_identity(Comp((figure_eight(RA, "a"), figure_eight(RA, "a"))))
    assert not is_identity(figure_eight(RA, "a"))
    assert not is_identity(Eps(RA, "a"))


def test_invariants():
    reg = Registry.of("a!", "b")
    w = reg.word("b b a")
    inv = invariants(Beta(w[:1], w[1:]))
    assert inv == {"a": Parity.EVEN, "b": Permutation((2, 1))}


def test_verify_diagram():
    eight = figure_eight(RA, "a")
    report = verify_diagram([("p", eight), ("q", Inv(eight)), ("r", Id(RA.unit))])
    assert [(a, b, v.status) for a, b, v in report.pairs] == [
        ("p", "q", EQUAL), ("p", "r", DIFFERS), ("q", "r", DIFFERS)
    ]
    assert not report.commutes
    with pytest.raises(ValueError):
        verify_diagram([("p", eight)])


def test_dagger():
    reg = Registry.of("a!")
    a = reg.word("a")
    assert check_equal(dagger(Id(a), "a", "a"), Id(reg.word("a'")))
    twisted = figure_eight(reg, "a") + Id(a)
    d = dagger(twisted, "a", "a")
    assert not is_identity(d)


MIXED = Registry.of("a!", "b")


def _parallel_pairs(seed):
    rng = random.Random(seed)
    t1 = random_term(rng, MIXED, depth=3)
    for _ in range(50):
        t2 = random_term(rng, MIXED, depth=3)
        if (src(t2), tgt(t2)) == (src(t1), tgt(t1)):
            return t1, t2
    return t1, t1


@settings(max_examples=100)
@given(st.integers(0, 2**32))
def test_equality_is_a_congruence(seed):
    t1, t2 = _parallel_pairs(seed)
    rng = random.Random(seed + 1)
    h = random_term(rng, MIXED, depth=2)
    same = bool(check_equal(t1, t2))
    assert bool(check_equal(t1 + h, t2 + h)) == same
    assert bool(check_equal(h + t1, h + t2)) == same
    assert bool(check_equal(Inv(t1), Inv(t2))) == same
    assert bool(check_equal(Comp((t1, Inv(t1))), Id(src(t1))))
    assert bool(check_equal(t2, t1)) == same


def test_small_homset_is_an_equivalence():
    reg = Registry.of("a!")
    ts = enumerate_parallel_terms(reg.word("a a'"), reg.word("a' a"), 3)
    eq = {(i, j): bool(check_equal(s, t)) for i, s in enumerate(ts) for j, t in enumerate(ts)}
    n = len(ts)
    for i in range(n):
        assert eq[i, i]
        for j in range(n):
            assert eq[i, j] == eq[j, i]
            for k in range(n):
                if eq[i, j] and eq[j, k]:
                    assert eq[i, k]
