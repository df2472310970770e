import pytest

from syncro.core import Transformation, from_letter_images, parse_word, transformation_of
from syncro.corpus import corpus
from syncro.criteria import (
    EQ1,
    EQ2B,
    NON_COPRIME_DISTANCE,
    PROVED,
    REFUTED,
    UNKNOWN,
    Budget,
    corollary_word_check,
    enumerate_rank_words,
    half_cycle_check,
    theorem1_check,
    verdict,
)
from syncro.families import build_family, cerny
from syncro.powerset import is_completely_reachable, syn_state_complexity

A_, B_ = (0,), (1,)


@pytest.mark.parametrize("n", [7, 9, 11])
def test_theorem1_on_k(n):
    r = theorem1_check(build_family("K", n), A_, B_)
    assert r.satisfied
    assert (r.witness.q, r.witness.d) == (0, 2)
    cases = {s.m: (s.case, s.r) for s in r.witness.per_m}
    assert cases[n - 2] == (EQ2B, 2)
    assert all(case == EQ1 for m, (case, _) in cases.items() if m != n - 2)


def test_theorem1_on_cerny():
    r = theorem1_check(cerny(6), A_, B_)
    assert r.satisfied and (r.witness.q, r.witness.d) == (5, 1)
    assert all(s.case == EQ1 for s in r.witness.per_m)


def test_fig3_defeats_every_criterion(fig3):
    words = enumerate_rank_words(fig3, 3, 10)
    assert len(words) == 48
    for w, _ in words:
        r = theorem1_check(fig3, w, B_)
        assert not r.satisfied
        assert r.reason == NON_COPRIME_DISTANCE
        assert "gcd(2,4) != 1" in r.detail
    assert not corollary_word_check(fig3, A_, B_).satisfied
    assert not half_cycle_check(fig3, A_, B_).satisfied


def test_corollary_and_half_cycle_examples():
    r = corollary_word_check(cerny(5), A_, B_)
    assert r.satisfied and r.witness.q == 4
    r = half_cycle_check(cerny(6), A_, B_)
    assert r.satisfied and r.witness.q == 5
    assert corollary_word_check(from_letter_images([[0], [0]]), A_, B_).satisfied
    two = from_letter_images([[0, 0], [1, 0]])
    assert half_cycle_check(two, A_, B_).satisfied


def test_hypotheses_checked(fig3):
    r = theorem1_check(fig3, B_, A_)
    assert not r.satisfied and r.reason == "hypotheses-violated"


def test_rank_words_fig3(fig3):
    table = dict(enumerate_rank_words(fig3, 3, 10))
    assert table[parse_word(fig3, "a")] == Transformation((1, 2, 1, 3))
    assert table[parse_word(fig3, "b^2a")] == Transformation((1, 3, 1, 2))
    fb = fig3.letters[1]
    for w, f in table.items():
        p, q = f.collapsed_pair
        assert transformation_of(fig3, w) == f
        dist = next(e for e in range(1, 4) if fb.power(e)(p) == q or fb.power(e)(q) == p)
        assert dist == 2


def test_rank_words_full_rank(fig3):
    table = enumerate_rank_words(fig3, 4, 10)
    assert table[0][0] == ()
    assert {f for _, f in table} == {fig3.letters[1].power(e) for e in range(4)}


def test_rank_words_order_is_length_then_lex(fig3):
    words = [w for w, _ in enumerate_rank_words(fig3, 3, 10)]
    assert words == sorted(words, key=lambda w: (len(w), w))


def test_verdict_k9():
    v = verdict(build_family("K", 9))
    assert v.max_sc == PROVED and v.sc_claimed == 503
    steps = [j.get("step", j.get("criterion")) for j in v.justification]
    assert steps == ["Don", "theorem1", "Lemma 1"]
    assert v.justification[0]["d"] == 4


def test_verdict_fig3(fig3):
    assert verdict(fig3).max_sc == UNKNOWN
    v = verdict(fig3, Budget(use_oracle=True))
    assert v.max_sc == PROVED and v.oracle_used and v.sc_claimed == 12
    assert v.attempts and not any(a["satisfied"] for a in v.attempts if "satisfied" in a)


def test_verdict_permutation_automaton():
    v = verdict(from_letter_images([[1, 2, 0], [0, 2, 1]]))
    assert v.max_sc == REFUTED and v.sc_claimed == 1


def test_verdict_oracle_not_fooled_by_two_sets(three_letter_gap):
    v = verdict(three_letter_gap, Budget(use_oracle=True))
    assert v.max_sc == REFUTED
    assert v.sc_claimed == syn_state_complexity(three_letter_gap) == 4


def test_attempt_log_is_capped(fig3):
    v = verdict(fig3, Budget(word_len=10))
    assert len(v.attempts) <= 64
    assert v.attempts_omitted > 0


@pytest.mark.parametrize("kind", ["structured", "mixed", "uniform"])
def test_verdicts_sound(kind):
    for _, A in corpus(21, 120, (2, 5), (1, 3), kind):
        v = verdict(A, Budget(use_oracle=True))
        maximal = syn_state_complexity(A) == 2 ** A.n - A.n
        assert v.max_sc != UNKNOWN
        assert (v.max_sc == PROVED) == maximal, A


def test_criteria_soundness_binary():
    for _, A in corpus(3, 400, (3, 7), (2, 2), "structured"):
        hit = theorem1_check(A, A_, B_).satisfied or half_cycle_check(A, A_, B_).satisfied
        if hit and is_completely_reachable(A).ok:
            assert syn_state_complexity(A) == 2 ** A.n - A.n
