import pytest
from hypothesis import given, strategies as st

from seifertkit.braid import (
    BraidWord,
    closure_permutation,
    parse_braid_word,
    positive_braid_genus,
)
from seifertkit.errors import EmptyWord, NonPositiveLetter, NotAKnot


def test_parse_infers_strands():
    w = parse_braid_word("1 1 1")
    assert w.strands == 2
    assert w.letters == (1, 1, 1)


def test_parse_t34():
    w = parse_braid_word("1 2 1 2 1 2 1 2")
    assert w.strands == 3 and w.length == 8


@pytest.mark.parametrize("text", ["1 0 1", "1 -2", "1 x 2", "1.5"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(NonPositiveLetter):
        parse_braid_word(text)


@pytest.mark.parametrize("text", ["", "   \n"])
def test_parse_rejects_empty(text):
    with pytest.raises(EmptyWord):
        parse_braid_word(text)


def test_strand_override_only_increases():
    assert parse_braid_word("1 1 1", strands=3).strands == 3
    with pytest.raises(NonPositiveLetter):
        parse_braid_word("1 2", strands=2)


def test_padding_breaks_knot_requirement():
    w = parse_braid_word("1 1 1", strands=3)
    assert not w.full_support()
    with pytest.raises(NotAKnot):
        positive_braid_genus(w)


def test_closure_permutation_examples():
    perm, cycles = closure_permutation(parse_braid_word("1 1 1"))
    assert perm == (2, 1) and cycles == 1
    perm, cycles = closure_permutation(parse_braid_word("1 1"))
    assert perm == (1, 2) and cycles == 2
    # (12)(23) composed four times: a 3-cycle squared twice, one cycle
    assert closure_permutation(parse_braid_word("1 2 1 2 1 2 1 2"))[1] == 1


@pytest.mark.parametrize(
    "text, genus",
    [("1 1 1", 1), ("1 2 1 2 1 2 1 2", 3), ("1 2", 0), ("1 1 1 1 1", 2)],
)
def test_positive_braid_genus(text, genus):
    assert positive_braid_genus(parse_braid_word(text)) == genus


def test_genus_rejects_links():
    with pytest.raises(NotAKnot):
        positive_braid_genus(parse_braid_word("1 1"))


def test_rotation_is_explicit():
    w = parse_braid_word("1 2 2")
    assert str(w.rotate()) == "2 2 1"
    assert w.rotate(3) == w


words = st.integers(2, 5).flatmap(
    lambda s: st.lists(st.integers(1, s - 1), min_size=1, max_size=12).map(lambda l: BraidWord(tuple(l)))
)


@given(words)
def test_round_trip(w):
    assert parse_braid_word(str(w)) == w


@given(words)
def test_knot_closures_have_even_euler_defect(w):
    if w.full_support() and closure_permutation(w)[1] == 1:
        assert (w.length - w.strands + 1) % 2 == 0
        assert 2 * positive_braid_genus(w) == w.length - w.strands + 1


@given(words, st.data())
def test_permutation_invariant_under_far_commutation(w, data):
    letters = list(w.letters)
    swaps = [k for k in range(len(letters) - 1) if abs(letters[k] - letters[k + 1]) >= 2]
    if not swaps:
        return
    k = data.draw(st.sampled_from(swaps))
    letters[k], letters[k + 1] = letters[k + 1], letters[k]
    assert closure_permutation(BraidWord(tuple(letters), w.strands)) == closure_permutation(w)
