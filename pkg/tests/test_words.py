import pytest

from cactusgrowth.weights import CartanContext, Weight
from cactusgrowth.words import (
    HighestWeightWord,
    InvalidStep,
    VECTOR,
    complete_cell,
    cell_is_valid,
    commutor_prefix,
    enumerate_hw_words,
    exterior,
    infer_step_kind,
    syt_to_word,
    tau,
    word_from_corners,
    word_from_json,
    word_to_json,
    word_to_syt,
)

GL2 = CartanContext("GL", 2)
GL4 = CartanContext("GL", 4)
SP4 = CartanContext("Sp", 2)
SL2 = CartanContext("SL2", 1)


def w(ctx, *corners):
    return word_from_corners(ctx, corners)


def test_word_validation():
    ok = w(GL2, (0, 0), (1, 0), (2, 0), (2, 1))
    assert ok.r == 3
    with pytest.raises(InvalidStep):
        w(GL2, (1, 0), (2, 0))  # must start at zero
    with pytest.raises(InvalidStep):
        w(GL2, (0, 0), (1, 0), (1, -1))  # corners must stay dominant
    with pytest.raises(InvalidStep):
        w(GL2, (0, 0), (2, 0))  # not a single-box step for the inferred kind


def test_infer_step_kind():
    assert infer_step_kind(GL4, Weight(GL4, (1, 1, 1, 0)), Weight(GL4, (2, 1, 1, 1))) == exterior(2)
    assert infer_step_kind(GL2, Weight(GL2, (1, 0)), Weight(GL2, (2, 0))) == VECTOR
    assert infer_step_kind(SP4, Weight(SP4, (1, 1)), Weight(SP4, (1, 0))) == VECTOR
    with pytest.raises(InvalidStep):
        infer_step_kind(SP4, Weight(SP4, (1, 0)), Weight(SP4, (2, 1)))


def test_complete_cell_gl2():
    mu = complete_cell(Weight(GL2, (1, 0)), Weight(GL2, (2, 0)), Weight(GL2, (2, 1)))
    assert mu.coords == (1, 1)


def test_complete_cell_exterior_steps():
    kappa = Weight(GL4, (1, 1, 1, 0))
    lam = Weight(GL4, (2, 1, 1, 1))
    nu = Weight(GL4, (2, 2, 1, 1))
    assert complete_cell(kappa, lam, nu).coords == (2, 1, 1, 0)


def test_complete_cell_degenerate():
    kappa = Weight(GL4, (1, 1, 0, 0))
    assert complete_cell(kappa, kappa, kappa) == kappa


def test_cell_symmetry_exhaustive():
    # re-completing with the computed corner recovers the original one
    for word in enumerate_hw_words(GL2, (VECTOR,) * 3):
        kappa, lam, nu = word.corner(0), word.corner(1), word.corner(2)
        mu = complete_cell(kappa, lam, nu)
        assert complete_cell(kappa, mu, nu) == lam
        assert cell_is_valid(kappa, lam, nu, mu)


def test_tau_basic():
    word = w(GL2, (0, 0), (1, 0), (2, 0), (2, 1))
    assert tau(word, 2).corners == ((0, 0), (1, 0), (1, 1), (2, 1))


def test_tau_bounds():
    word = w(GL2, (0, 0), (1, 0), (2, 0))
    with pytest.raises(ValueError):
        tau(word, 2)


def test_tau_bk_sequence():
    ctx = GL4
    seq = [(0, 0, 0, 0), (1, 1, 1, 0), (2, 1, 1, 1), (2, 2, 1, 1), (3, 2, 1, 1), (3, 2, 1, 1)]
    word = word_from_corners(ctx, seq)
    moved = tau(word, 2)
    assert moved.corners == (
        (0, 0, 0, 0), (1, 1, 1, 0), (2, 1, 1, 0), (2, 2, 1, 1), (3, 2, 1, 1), (3, 2, 1, 1),
    )
    # the exterior-power descriptors at positions 2 and 3 swap
    assert moved.steps[1] == word.steps[2] and moved.steps[2] == word.steps[1]


@pytest.mark.parametrize(
    "ctx,kinds,r",
    [
        (GL2, (VECTOR,), 4),
        (CartanContext("GL", 3), (VECTOR,), 4),
        (SP4, (VECTOR,), 4),
        (GL4, (exterior(2),), 4),
    ],
)
def test_tau_involutive_exhaustive(ctx, kinds, r):
    for word in enumerate_hw_words(ctx, kinds * r):
        for i in range(1, r):
            assert tau(tau(word, i), i) == word


def test_tau_distant_commutation():
    for word in enumerate_hw_words(GL2, (VECTOR,) * 5):
        assert tau(tau(word, 1), 3) == tau(tau(word, 3), 1)
        assert tau(tau(word, 1), 4) == tau(tau(word, 4), 1)


def test_commutor_prefix_single():
    for word in enumerate_hw_words(GL2, (VECTOR,) * 4):
        assert commutor_prefix(word, 3) == tau(word, 3)


def test_commutor_prefix_matches_rectangle():
    # moving the first factor past the rest equals a one-row rectangle
    from cactusgrowth.growth import complete_rectangle

    for word in enumerate_hw_words(SL2, tuple([VECTOR]) * 3):
        moved = commutor_prefix(word, 1)
        left = [word.corner(0), word.corner(1)]
        top = [word.corner(k) for k in range(1, word.r + 1)]
        diag = complete_rectangle(top, left)
        bottom = [wt.coords for wt in diag.bottom_row()]
        top_right = diag.right_column()[0].coords
        assert moved.corners == tuple(bottom) + (top_right,)


def test_commutor_prefix_fixes_full_columns():
    ctx = GL2
    word = word_from_corners(ctx, [(0, 0), (1, 1), (2, 2), (3, 3)])
    assert commutor_prefix(word, 1) == word
    assert commutor_prefix(word, 2) == word


def test_syt_word_round_trip():
    from cactusgrowth.oracles import enumerate_syt, partitions_of

    for n in range(1, 7):
        for shape in partitions_of(n):
            for t in enumerate_syt(shape):
                word = syt_to_word(t.rows, rank=len(shape))
                assert word_to_syt(word) == t.rows


def test_syt_word_example():
    word = syt_to_word(((1, 2), (3,)))
    assert word.corners == ((0, 0), (1, 0), (2, 0), (2, 1))


def test_enumerate_counts_match_syt():
    from cactusgrowth.oracles import enumerate_syt, partitions_of

    # words of single-box steps with at most 2 rows = SYT with at most 2 rows
    words4 = enumerate_hw_words(GL2, (VECTOR,) * 4)
    expected = sum(len(enumerate_syt(s)) for s in partitions_of(4) if len(s) <= 2)
    assert len(words4) == expected


def test_word_count_shape_3_3():
    words6 = enumerate_hw_words(GL2, (VECTOR,) * 6)
    assert sum(1 for x in words6 if x.corners[-1] == (3, 3)) == 5


def test_json_round_trip():
    word = w(SP4, (0, 0), (1, 0), (1, 1), (1, 0))
    assert word_from_json(word_to_json(word)) == word


def test_invalid_tau_raises():
    # an Sp word whose middle replacement would leave the dominant cone is impossible;
    # instead check the error surfaces on malformed input via word_from_corners
    with pytest.raises(InvalidStep):
        word_from_corners(SP4, [(0, 0), (1, 0), (0, 1)])
