from itertools import product

import pytest

from gentlegp import (Letter, band_module, check_string, contains_peak,
                      directed_word, enumerate_strings, is_valid_string,
                      lazy_word, make_band, make_string, parse_letters,
                      radical_summand_word, string_module)


def L(name):
    return Letter(name, True)


def Li(name):
    return Letter(name, False)


def test_parse_letters():
    assert parse_letters("i,d,a,f,k") == tuple(map(L, "idafk"))
    assert parse_letters("a^-1, b") == (Li("a"), L("b"))


def test_radical_summand_walk_is_valid(eightv):
    word = radical_summand_word(eightv, "j")
    assert is_valid_string(eightv, [L(x) for x in word])
    assert word == ("i", "d", "a", "f", "k")


def test_immediate_backtrack_invalid(eightv):
    ok, reason = check_string(eightv, [L("a"), Li("a")])
    assert not ok and "undoes" in reason


def test_relation_pair_invalid(eightv):
    ok, reason = check_string(eightv, [L("e"), L("f")])  # first e then f: fe in I
    assert not ok and "relation" in reason


def test_inverse_relation_pair_invalid(eightv):
    ok, reason = check_string(eightv, [Li("f"), Li("e")])
    assert not ok


def test_non_walk_invalid(eightv):
    ok, reason = check_string(eightv, [L("a"), L("d")])
    assert not ok and "walk" in reason


def test_unknown_arrow_raises(eightv):
    with pytest.raises(Exception, match="unknown arrow"):
        check_string(eightv, [L("zz")])


def test_string_module_dimension_rule(eightv):
    w = make_string(eightv, [L("i"), L("d"), L("a"), L("f"), L("k")])
    m = string_module(eightv, w)
    assert m.total_dim == len(w) + 1 == 6
    assert [m.dims[v] for v in "651278"] == [1, 1, 1, 1, 1, 1]


def test_lazy_word_gives_simple_module(eightv):
    m = string_module(eightv, lazy_word(eightv, "8"))
    assert m.total_dim == 1 and m.dims["8"] == 1


def test_radical_e_module_dimension_vector(eightv):
    word = radical_summand_word(eightv, "e")
    w = directed_word(eightv, "2", word)
    m = string_module(eightv, w)
    assert m.total_dim == 10
    assert m.dims["2"] == 2 and m.dims["7"] == 2
    for v in "134568":
        assert m.dims[v] == 1


def test_peak_word_on_kronecker(kron):
    w = make_string(kron, [L("alpha"), Li("beta")])
    assert contains_peak(w)
    m = string_module(kron, w)
    assert (m.dims["1"], m.dims["2"]) == (2, 1)


def test_directed_words_have_no_peak(eightv):
    w = directed_word(eightv, "2", radical_summand_word(eightv, "e"))
    assert not contains_peak(w)
    assert not contains_peak(w.inverse())


def test_peak_detection_symmetric_under_inverse(kron):
    w = make_string(kron, [L("alpha"), Li("beta")])
    assert contains_peak(w.inverse()) == contains_peak(w)


def test_string_modules_satisfy_relations_for_all_small_words(eightv):
    # Representation.__init__ checks every relation product
    for w in enumerate_strings(eightv, 4):
        string_module(eightv, w)


def test_string_module_isomorphic_to_inverse(eightv):
    from gentlegp import module_signature

    w = make_string(eightv, [L("d"), L("a"), Li("e")])
    assert (module_signature(string_module(eightv, w))
            == module_signature(string_module(eightv, w.inverse())))


def test_enumerate_lazy_only(eightv):
    words = enumerate_strings(eightv, 0)
    assert len(words) == 8 and all(w.is_lazy for w in words)


def test_enumerate_a2(a2):
    words = enumerate_strings(a2, 1)
    assert len(words) == 3  # e_1, e_2, the arrow


def test_enumerate_eight_vertex_max2_against_generate_and_filter(eightv):
    # independent oracle: try every letter combination, halve the valid
    # non-lazy count for the w ~ w^{-1} quotient (no short word here is
    # its own inverse)
    alphabet = [Letter(a.name, d) for a in eightv.arrows for d in (True, False)]
    raw = 0
    for length in (1, 2):
        for combo in product(alphabet, repeat=length):
            if check_string(eightv, combo)[0]:
                raw += 1
    assert raw == 52
    words = enumerate_strings(eightv, 2)
    assert len(words) == 8 + raw // 2 == 34


def test_band_requires_mixed_directions(kron):
    with pytest.raises(ValueError, match="mix"):
        make_band(kron, [L("alpha"), L("beta")])


def test_band_rejects_zero_parameter(kron):
    b = make_band(kron, [Li("alpha"), L("beta")])
    with pytest.raises(ValueError, match="nonzero"):
        band_module(kron, b, 0, 1)


def test_band_rejects_proper_power(kron):
    with pytest.raises(ValueError, match="power"):
        make_band(kron, [Li("alpha"), L("beta"), Li("alpha"), L("beta")])


def test_kronecker_band_n1(kron):
    b = make_band(kron, [Li("alpha"), L("beta")])
    m = band_module(kron, b, 1, 1)
    assert m.dims == {"1": 1, "2": 1}
    # one arrow acts by 1, the other by the parameter
    vals = sorted(str(m.mats[a].rows[0][0]) for a in ("alpha", "beta"))
    assert vals == ["1", "1"]


def test_kronecker_band_jordan_block(kron):
    b = make_band(kron, [Li("alpha"), L("beta")])
    m = band_module(kron, b, 3, 2)
    assert m.dims == {"1": 2, "2": 2}
    mats = {a: m.mats[a] for a in ("alpha", "beta")}
    # beta is the designated direct letter: Jordan block with eigenvalue 3
    assert mats["beta"].rows[0][0] == 3 and mats["beta"].rows[1][1] == 3
    assert mats["beta"].rows[0][1] == 1
    assert mats["alpha"].rows[0][0] == 1 and mats["alpha"].rows[0][1] == 0
