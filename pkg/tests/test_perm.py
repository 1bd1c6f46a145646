import itertools

from hypothesis import given, strategies as st

from permcoh.perm import Permutation, count_inversions

perms = st.integers(0, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def brute_inversions(seq):
    return sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])


def test_block_swap():
    assert str(Permutation.block_swap(1, 2)) == "[3,1,2]"
    assert str(Permutation.block_swap(2, 1)) == "[2,3,1]"
    assert Permutation.block_swap(0, 3).is_identity


def test_composition_convention():
    s = Permutation((2, 1, 3))
    t = Permutation((1, 3, 2))
    # (t * s)[i] = t[s[i]]
    assert (t * s).images == (3, 1, 2)


def test_parse_and_render():
    p = Permutation.parse("[3, 1, 2]")
    assert p.images == (3, 1, 2)
    assert str(p) == "[3,1,2]"
    assert Permutation.parse("[]") == Permutation.identity(0)


def test_sign():
    assert Permutation((2, 1)).sign == -1
    assert Permutation((2, 3, 1)).sign == 1
    assert Permutation.identity(5).sign == 1


def test_block_sum():
    assert (Permutation((2, 1)) + Permutation((1,))).images == (2, 1, 3)
    assert (Permutation((1,)) + Permutation((2, 1))).images == (1, 3, 2)


def test_all():
    assert len(list(Permutation.all(4))) == 24


@given(st.lists(st.integers(-50, 50), max_size=30))
def test_merge_sort_inversions_match_brute_force(xs):
    assert count_inversions(xs) == brute_inversions(xs)


@given(perms)
def test_inverse(p):
    n = len(p)
    assert (p * p.inverse()).is_identity
    assert (p.inverse() * p) == Permutation.identity(n)


@given(perms, st.data())
def test_sign_is_multiplicative(p, data):
    q = Permutation(data.draw(st.permutations(range(1, len(p) + 1))))
    assert (p * q).sign == p.sign * q.sign


@given(perms)
def test_adjacent_transpositions_rebuild(p):
    n = len(p)
    word = p.adjacent_transpositions()
    assert len(word) == p.inversions
    acc = Permutation.identity(n)
    for i in word:
        s = list(range(1, n + 1))
        s[i - 1], s[i] = s[i], s[i - 1]
        acc = Permutation(tuple(s)) * acc
    assert acc == p


@given(perms)
def test_apply_matches_images(p):
    labels = list(range(1, len(p) + 1))
    out = p.apply(labels)
    for i in labels:
        assert out[p[i] - 1] == i
