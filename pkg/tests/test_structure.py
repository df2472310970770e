import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syncro.core import from_letter_images, transformation_of
from syncro.corpus import corpus
from syncro.families import build_family, cerny
from syncro.powerset import is_completely_reachable, k_level_reachable
from syncro.structure import (
    binary_structure,
    cyclic_words,
    don_precondition,
    find_cyclic_word,
    is_circular,
    orbit_analysis,
    prop1_equivalence,
    rank_profile,
)


def test_rank_profile_k7():
    p = rank_profile(build_family("K", 7))
    assert p.ranks == (6, 7)
    assert p.permutational == (1,)
    (d,) = p.defects
    assert (d.letter, d.excluded, d.collapsed) == (0, 6, (0, 2))


def test_rank_profile_fig3(fig3):
    (d,) = rank_profile(fig3).defects
    assert (d.excluded, d.collapsed) == (0, (0, 2))


def test_orbits_k7():
    r = orbit_analysis(build_family("K", 7))
    assert r.orbits == (tuple(range(7)),)
    assert r.applicable and r.condition and r.group_transitive


def test_remark_automaton_is_inapplicable():
    # a sends both states to 1, b sends both to 0
    r = orbit_analysis(from_letter_images([[1, 1], [0, 0]]))
    assert not r.applicable
    assert r.orbits == ((0,), (1,))
    assert not r.group_nontrivial


def test_prop1_examples():
    assert prop1_equivalence(build_family("K", 7)) == (True, True, True)
    A = from_letter_images([[1, 1, 2, 3], [0, 1, 2, 2]])
    r = prop1_equivalence(A)
    assert r.applicable and not r.structural and not r.reachable_n_minus_1
    assert prop1_equivalence(from_letter_images([[0]])) == (True, True, True)


def test_k_level_two_defects_sharing_kernel():
    A = from_letter_images([[0, 0, 2, 3], [1, 1, 2, 3]])
    assert not k_level_reachable(A, 3)


def test_binary_structure():
    assert binary_structure(build_family("K", 7)).ok
    s = binary_structure(from_letter_images([[0, 1, 2], [0, 1, 2]]))
    assert not s.ok
    with pytest.raises(ValueError):
        binary_structure(from_letter_images([[0, 1]]))


def test_footnote_cyclic_word(footnote):
    assert not is_circular(footnote)
    assert footnote.format_word(find_cyclic_word(footnote)) == "ba"


def test_cyclic_word_examples():
    assert find_cyclic_word(cerny(4)) == (1,)
    assert find_cyclic_word(from_letter_images([[0, 0, 0], [1, 1, 1]])) is None


def test_don_precondition():
    for n in (7, 9, 11):
        w = don_precondition(build_family("K", n))
        assert (w.s, w.t, w.d) == (n - 1, 3, 4)
    for n in range(3, 8):
        w = don_precondition(cerny(n))
        assert (w.s, w.t, w.d) == (n - 1, 0, 1)
    assert don_precondition(from_letter_images([[1, 2, 0], [0, 2, 1]])) is None


def test_don_implies_complete_reachability():
    for _, A in corpus(5, 300, (2, 6), (2, 3), "structured"):
        if don_precondition(A) is not None:
            assert is_completely_reachable(A).ok


def test_single_defect_corollary():
    for _, A in corpus(9, 400, (3, 6), (2, 3), "mixed"):
        p = rank_profile(A)
        if len(p.permutational) == A.k - 1 and is_completely_reachable(A).ok:
            assert orbit_analysis(A).group_transitive


def test_prop1_on_mixed_corpus():
    for _, A in corpus(4, 300, (2, 6), (1, 3), "mixed"):
        r = prop1_equivalence(A)
        if r.applicable:
            assert r.structural == r.reachable_n_minus_1


maps = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=1, max_size=3)
)


@settings(max_examples=80, deadline=None)
@given(maps)
def test_cyclic_words_really_cycle(images):
    A = from_letter_images(images)
    for w, f in cyclic_words(A, 6):
        assert transformation_of(A, w) == f and f.is_cyclic
