import random

import pytest
from hypothesis import given, settings, strategies as st

from permcoh.core import NotInvertible, Registry
from permcoh.oracle import random_term, token_trace
from permcoh.perm import Permutation
from permcoh.projection import EtaEpsPresent
from permcoh.semantics import (
    Model,
    Parity,
    PermutationModel,
    ProjectionRequired,
    SuperIntegerModel,
    SuperMorphism,
    UnassignedGenerator,
    a_parity,
    a_parity_reference,
    a_permutation,
    a_permutation_reference,
    eval_superz,
    interpret,
    perm_of,
    permutation_term,
)
from permcoh.terms import Beta, Comp, Eta, Id, Inv, figure_c, figure_eight, figure_h, src, tgt

RA = Registry.of("a!")
RX = Registry.of("x")


def test_parity_arithmetic():
    assert Parity.ODD + Parity.ODD == Parity.EVEN
    assert str(Parity.ODD) == "odd"
    assert Parity.parse(" Even ") == Parity.EVEN
    assert Parity.of_sign(-1) == Parity.ODD


def test_perm_of_block_swap():
    assert str(perm_of(Beta(RX.word("x"), RX.word("x x")))) == "[3,1,2]"


def test_perm_of_composite_matches_trace():
    w = RX.word("x x x")
    t = Comp((Beta(w[:1], w[1:]), Id(w[:1]) + Beta(w[:1], w[:1]), Inv(Beta(w[:2], w[:1]))))
    assert perm_of(t) == token_trace(t).permutation()


def test_perm_of_rejects_units():
    with pytest.raises(EtaEpsPresent):
        perm_of(figure_eight(RA, "a"))


def test_a_permutation_needs_plain_generator():
    with pytest.raises(EtaEpsPresent):
        a_permutation(Id(RA.word("a")), "a")


def test_figures_evaluate_to_minus_one():
    for f in (figure_eight, figure_c, figure_h):
        assert eval_superz(f(RA, "a")) == SuperMorphism(0, -1)
    assert str(SuperMorphism(0, -1)) == "(0, -1)"


def test_graded_sign_rule():
    w = RA.word
    assert eval_superz(Beta(w("a a'"), w("a"))) == SuperMorphism(1, 1)
    assert eval_superz(Beta(w("a' a'"), w("a' a' a'"))) == SuperMorphism(-5, 1)
    assert eval_superz(Beta(w("a'"), w("a a a"))) == SuperMorphism(2, -1)


def test_eval_superz_needs_single_invertible():
    with pytest.raises(ProjectionRequired):
        eval_superz(Id(Registry.of("a!", "b!").word("a")))
    with pytest.raises(ProjectionRequired):
        eval_superz(Id(RX.word("x")))


def test_a_parity():
    reg = Registry.of("a!", "b!")
    w = reg.word
    assert a_parity(Beta(w("a b"), w("a")), "a") == Parity.ODD
    assert a_parity(Beta(w("a b"), w("a")), "b") == Parity.EVEN
    with pytest.raises(NotInvertible):
        a_parity(Id(Registry.of("c").word("c")), "c")


def test_permutation_term_realizes_sigma():
    w = RX.word("x x x x")
    for sigma in Permutation.all(4):
        t = permutation_term(sigma, w)
        assert perm_of(t) == sigma
        assert src(t) == w == tgt(t)


def test_super_integer_model_agrees_with_eval():
    for f in (figure_eight, figure_c, figure_h):
        assert interpret(f(RA, "a"), SuperIntegerModel()) == SuperMorphism(0, -1)


def test_permutation_model_agrees_with_perm_of():
    w = RX.word("x x x")
    t = Comp((Beta(w[:1], w[1:]), Beta(w[:2], w[:1])))
    assert interpret(t, PermutationModel()) == perm_of(t)


def test_unassigned_generator():
    with pytest.raises(UnassignedGenerator):
        interpret(Id(RX.word("x")), Model())
    with pytest.raises(UnassignedGenerator):
        interpret(Eta(RA, "a"), PermutationModel())


MIXED = Registry.of("a!", "b!", "c")


@settings(max_examples=150)
@given(st.integers(0, 2**32))
def test_sign_agrees_with_token_trace(seed):
    t = random_term(random.Random(seed), MIXED, depth=3)
    trace = token_trace(t)
    for g in ("a", "b"):
        assert a_parity(t, g) == Parity.of_sign(trace.signs[g])


@settings(max_examples=150)
@given(st.integers(0, 2**32))
def test_super_integer_interpretation_is_functorial(seed):
    rng = random.Random(seed)
    t1, t2 = random_term(rng, RA, depth=3), random_term(rng, RA, depth=3)
    m = SuperIntegerModel()
    assert interpret(t1 + t2, m) == interpret(t1, m) + interpret(t2, m)
    assert interpret(Inv(t1), m) == interpret(t1, m)
    if tgt(t1) == src(t2):
        assert interpret(Comp((t1, t2)), m) == interpret(t1, m).then(interpret(t2, m))


@settings(max_examples=150)
@given(st.integers(0, 2**32))
def test_fast_parity_matches_reference(seed):
    t = random_term(random.Random(seed), MIXED, depth=4)
    for g in ("a", "b"):
        assert a_parity(t, g) == a_parity_reference(t, g)


@settings(max_examples=150)
@given(st.integers(0, 2**32))
def test_fast_permutation_matches_reference(seed):
    t = random_term(random.Random(seed), MIXED, depth=4)
    assert a_permutation(t, "c") == a_permutation_reference(t, "c")
