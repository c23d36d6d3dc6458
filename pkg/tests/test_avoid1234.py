from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import count_completions
from patword.avoid1234 import (RevKEngine1234, count_words, fix, format_state_key,
                               has_decreasing_run, parse_state_key, reduce, remove,
                               series_1234, window_width)
from patword.errors import DataError, InputError, InvariantViolation, ResourceLimitError
from patword.oracle import brute_count, rev_k_pattern

P1234 = (1, 2, 3, 4)


def patterns(k):
    return [P1234, rev_k_pattern(k)]


def test_window_width():
    assert window_width(5) == 20
    assert RevKEngine1234(2, 4).t == 14


def test_fix():
    assert fix(1, [2, 3], [1, 1, 1, 2, 2]) == (2, 3, 5, 5, 4, 4, 3, 2)
    assert fix(5, [2, 4], [1, 1, 1, 2, 2]) == (2, 4)
    assert fix(1, [], [0] * 5) == ()


def test_reduce():
    assert reduce([1, 1, 1, 2, 2], 2) == (1, 0, 1, 2, 2)
    assert reduce([1], 1) == (0,)
    assert reduce([2, 2], 1) == (1, 2)
    with pytest.raises(InvariantViolation):
        reduce([0, 2], 1)


def test_remove():
    assert remove(2, [1], [[2, 4]], [1, 1, 0, 1, 2], 3) == ((2,), ((3, 4),), (2, 1, 1, 1, 2))
    assert remove(3, [], [], [0, 0, 0], 1) == ((), (), (3, 0, 0))
    # only offsets strictly below the removed slot move up
    assert remove(3, [2], [[1]], [1, 0, 1], 2) == ((2,), ((2,),), (3, 1, 1))


@given(st.integers(1, 3), st.lists(st.integers(0, 3), min_size=1, max_size=10), st.data())
def test_remove_preserves_length(r, L, data):
    i = data.draw(st.integers(1, len(L)))
    M = data.draw(st.lists(st.integers(1, len(L)), max_size=3))
    _, _, L2 = remove(r, M, [], L, i)
    assert len(L2) == len(L)
    assert L2[0] == r


def _longest_dec_brute(seq):
    for size in range(len(seq), 0, -1):
        for idx in combinations(range(len(seq)), size):
            sub = [seq[i] for i in idx]
            if all(a > b for a, b in zip(sub, sub[1:])):
                return size
    return 0


def test_has_decreasing_run_examples():
    assert has_decreasing_run([2, 3, 5, 5, 4, 4, 3, 2], 4)
    assert not has_decreasing_run([2, 3, 5, 5, 4, 4, 3, 2], 5)
    assert not has_decreasing_run([1, 2, 3], 2)
    assert not has_decreasing_run([3, 2, 1], 4)
    assert has_decreasing_run([], 0)


@given(st.lists(st.integers(1, 6), max_size=9), st.integers(1, 6))
def test_has_decreasing_run_matches_brute(seq, length):
    assert has_decreasing_run(seq, length) == (_longest_dec_brute(seq) >= length)


def test_base_and_trivial_states():
    e = RevKEngine1234(2, 5)
    zeros = (0,) * e.t
    assert e.count_state(0, (), (), zeros) == 1
    assert e.count_state(0, (3,), ((4, 5),), zeros) == 1
    single = list(zeros)
    single[6] = 2
    assert e.count_state(0, (), (), single) == 1


@pytest.mark.parametrize("n,r,k,expected", [
    (0, 3, 4, 1), (2, 1, 5, 2), (4, 1, 5, 23), (5, 1, 5, 102),
])
def test_count_words_examples(n, r, k, expected):
    assert count_words(n, r, k) == expected


def test_count_words_oracle_values():
    assert brute_count([1] * 4, [P1234]) == 23
    assert brute_count([1] * 5, patterns(5)) == 102


def test_series():
    assert series_1234(1, 5, 5) == [1, 1, 2, 6, 23, 102]
    assert series_1234(3, 6, 0) == [1]
    assert series_1234(2, 5, 3) == [brute_count([2] * n, patterns(5)) for n in range(4)]


def test_bad_input():
    with pytest.raises(InputError):
        RevKEngine1234(0, 5)
    with pytest.raises(InputError):
        RevKEngine1234(1, 2)
    with pytest.raises(InputError):
        RevKEngine1234(1, 5, variant="other")
    with pytest.raises(InputError):
        count_words(-1, 1, 4)


@pytest.mark.parametrize("n,r", [(5, 1), (6, 1), (3, 2), (4, 2), (3, 3)])
@pytest.mark.parametrize("k", [3, 4, 5])
def test_engine_matches_oracle(n, r, k):
    assert count_words(n, r, k) == brute_count([r] * n, patterns(k))


def test_literal_variant_misses_reverse_patterns():
    literal = RevKEngine1234(1, 5, variant="literal")
    # activated sequences never grow, so neither pattern is ever detected
    assert literal.count_words(5) != brute_count([1] * 5, patterns(5))
    assert literal.count_words(5) == 120


def test_partial_word_state():
    # 5 7 3 4 over [7], r=1, k=4: minima 5 and 3; 4 deactivates 5 (Fix gives 7,6)
    e = RevKEngine1234(1, 4)
    L = (1, 1, 0, 0, 0, 1, 0) + (0,) * (e.t - 7)
    got = e.count_state(0, (3,), ((4,),), L)
    assert got == count_completions([5, 7, 3, 4], [1, 1, 0, 0, 0, 1, 0], patterns(4))


# The prefix 69945 over [9]^2 avoiding 1234 and 15432: letter 6 is a deactivated
# minimum, 4 is the live one with activated sequence [5].  The expected value
# was counted once (about 20 CPU-minutes) by a depth-first completion search
# that rejects a letter as soon as it ends an occurrence of either pattern.
EXAMPLE_69945_COMPLETIONS = 486785


def test_example_69945_state():
    e = RevKEngine1234(2, 5)
    L = (2, 2, 2, 1, 1, 1, 2, 2, 0) + (0,) * (e.t - 9)
    assert e.count_state(0, (4,), ((5,),), L) == EXAMPLE_69945_COMPLETIONS


def walk(engine, n, prefix):
    """Feed `prefix` through the engine's moves; None if a move is refused.

    `labels` names the letter in each window slot (None for slots that
    stand for no letter), so prefix letters can be turned into offsets.
    """
    a, M, S, L = engine.initial_state(n)
    labels = [a + j if a + j <= n else None for j in range(1, engine.t + 1)]
    for letter in prefix:
        if letter not in labels:
            return None
        i = labels.index(letter) + 1
        nonzero = [j for j in range(1, engine.t + 1) if L[j - 1]]
        if i not in nonzero[-engine.n_candidates:]:
            return None
        placed = engine.place(M, S, L, i)
        if placed is None:
            return None
        (a2, M, S, L), removed = engine.slide(a, *placed)
        for j in removed:
            del labels[j - 1]
            labels.insert(0, a if a >= 1 else None)
            a -= 1
        a = a2
    return a, M, S, L


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([(6, 1, 4), (7, 1, 5), (7, 1, 4), (4, 2, 4), (4, 2, 5), (3, 3, 4)]),
       st.data())
def test_prefix_states_count_completions(case, data):
    n, r, k = case
    remaining = [r] * n
    prefix = []
    for _ in range(data.draw(st.integers(0, n * r))):
        choices = [i + 1 for i, c in enumerate(remaining) if c]
        x = data.draw(st.sampled_from(choices))
        prefix.append(x)
        remaining[x - 1] -= 1
    engine = RevKEngine1234(r, k, check_invariants=True)
    expected = count_completions(prefix, remaining, patterns(k))
    state = walk(engine, n, prefix)
    got = 0 if state is None else engine.count_state(*state)
    assert got == expected


def test_invariants_checked_and_enforced():
    e = RevKEngine1234(1, 5, check_invariants=True)
    e.series(7)
    assert e.states_checked > 0
    bad = RevKEngine1234(1, 4, check_invariants=True)
    with pytest.raises(InvariantViolation):
        bad.count_state(0, (2, 3), ((), ()), (1,) * bad.t)
    with pytest.raises(InvariantViolation):
        bad.count_state(0, (), (), (1,) * (bad.t - 1))


def test_window_overflow_is_refused():
    e = RevKEngine1234(1, 4)
    # untouched letters remain but only two window letters are still available
    L = (0,) * (e.t - 2) + (1, 1)
    M = (e.t - 3,)
    S = (tuple(range(1, e.t - 3)),)
    with pytest.raises(ResourceLimitError):
        e.count_state(3, M, S, L)


def test_determinism():
    assert series_1234(1, 4, 7) == series_1234(1, 4, 7)


# --- memo cache persistence ---

@pytest.mark.parametrize("state", [
    (0, (), (), (1, 0, 2)),
    (3, (5,), ((),), (1, 1, 1)),
    (2, (7, 4), ((8, 9), (9,)), (0, 2, 2)),
])
def test_state_key_round_trip(state):
    assert parse_state_key(format_state_key(state)) == state


def test_state_key_format():
    assert format_state_key((2, (7, 4), ((8, 9), (9,)), (0, 2))) == "2|7,4|8,9;9|0,2"


def test_cache_round_trip(tmp_path):
    path = tmp_path / "memo.txt"
    e = RevKEngine1234(1, 4)
    expected = e.series(7)
    e.save_cache(path)
    assert path.read_text().splitlines()[0] == "patword-cache v1 r=1 k=4"
    fresh = RevKEngine1234(1, 4)
    assert fresh.load_cache(path) == len(e.memo)
    assert fresh.memo == e.memo
    assert fresh.series(7) == expected


def test_cache_mismatch(tmp_path):
    path = tmp_path / "memo.txt"
    RevKEngine1234(1, 4).save_cache(path)
    with pytest.raises(DataError):
        RevKEngine1234(1, 5).load_cache(path)
    with pytest.raises(DataError):
        RevKEngine1234(2, 4).load_cache(path)
    path.write_text("patword-cache v1 r=1 k=4\nnot a record\n")
    with pytest.raises(DataError):
        RevKEngine1234(1, 4).load_cache(path)
