import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jonesid.checker import (
    AlphabetCapError,
    Violation,
    check_identity_j4,
    check_identity_j5,
    check_subset_conditions,
    condition4_partition_exists,
    explain,
    replay,
)
from jonesid.diagram import enumerate_jones
from jonesid.oracle import holds
from jonesid.words import Identity, parse_identity, restrict
from known_identities import KNOWN_IDENTITIES


words = st.text(alphabet="xyz", min_size=0, max_size=7)


@pytest.fixture(scope="module")
def j5():
    return enumerate_jones(5)


@pytest.fixture(scope="module")
def j4():
    return enumerate_jones(4)


class TestJ5:
    def test_x3_x2(self):
        assert check_identity_j5("x^3 = x^2").satisfied

    def test_x2_x(self):
        v = check_identity_j5("x^2 = x")
        assert not v.satisfied
        assert v.violation.condition == "length2_factor"
        assert v.violation.Y == ("x",)
        assert v.violation.factor == "xx" and v.violation.side == "lhs"

    @pytest.mark.parametrize("text", KNOWN_IDENTITIES)
    def test_known_identities(self, text):
        verdict = check_identity_j5(text)
        assert verdict.satisfied and verdict.violation is None

    def test_commutation(self):
        v = check_identity_j5("xy = yx")
        assert v.violation.condition == "first_letter"
        assert v.violation.Y == ("x", "y")

    def test_empty_words(self):
        assert check_identity_j5(Identity("", "")).satisfied
        v = check_identity_j5(Identity("x", ""))
        assert v.violation.condition == "content" and v.violation.Y == ("x",)

    def test_content_mismatch(self):
        v = check_identity_j5("xy = x")
        assert v.violation.condition == "content" and v.violation.Y == ("y",)

    def test_last_letter(self):
        assert check_identity_j5("xyxy = xyyx").violation.condition == "last_letter"

    def test_condition_4_tag(self):
        v = check_identity_j5("x^2 y x = x y x^2")
        assert v.violation.condition == "c4a"
        assert v.violation.Y == ("x", "y")
        assert v.violation.positions == (1, 1)
        assert v.violation.letters == ("x", "x", "x", "y")
        assert v.violation.C == "C1"

    def test_alphabet_cap(self):
        w = "abcdefghijklm"
        with pytest.raises(AlphabetCapError):
            check_identity_j5(Identity(w, w))
        assert check_identity_j5(Identity(w[:3], w[:3]), max_letters=3).satisfied

    def test_unknown_reading(self):
        with pytest.raises(ValueError):
            check_identity_j5("x = x", reading="some")


class TestSubsetConditions:
    def test_corollary_subset(self):
        assert check_subset_conditions("xx", "x", ("x",)).condition == "length2_factor"

    @given(st.text(alphabet="xyz", min_size=1, max_size=9))
    def test_reflexive(self, w):
        Y = tuple(sorted(set(w)))
        assert check_subset_conditions(w, w, Y) is None

    def test_fifth_known_identity_pair(self):
        ident = parse_identity(KNOWN_IDENTITIES[4])
        Y = ("x", "y", "z")
        W, V = restrict(ident.lhs, Y), restrict(ident.rhs, Y)
        # the xx / yy adjacent pair sits right after the shared 10-letter prefix
        assert W[10:12] == "xx" and V[10:12] == "yy"
        assert check_subset_conditions(W, V, Y) is None

    def test_j4_mode_skips_condition_4(self):
        assert check_subset_conditions("xxyx", "xyxx", ("x", "y"), full=False) is None
        assert check_subset_conditions("xxyx", "xyxx", ("x", "y")).condition == "c4a"


class TestPartition:
    def test_occurrence_kills_witness(self):
        # xy occurs in the first word of C, so no Y' works
        assert condition4_partition_exists(("xyx", "xxy"), "x", "y", "x", "x", ("x", "y"), "xu") is None

    def test_witness_found(self):
        # x,y,z,t all distinct, C words avoid every factor starting with x
        got = condition4_partition_exists(("zy", "ty"), "x", "y", "z", "t", ("t", "x", "y", "z"), "xu")
        assert got == (("t", "x", "y", "z"), ("t", "x", "y", "z"), ())

    def test_y2_assignment(self):
        # xt occurs so t cannot join Y1; zt must not occur, so t lands in Y2
        got = condition4_partition_exists(("xt", "y"), "x", "y", "z", "t", ("t", "x", "y", "z"), "xu")
        assert got is not None and "t" in got[2]

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            condition4_partition_exists(("x", "x"), "x", "y", "z", "t", ("t", "x", "y", "z"), "zz")


class TestJ4:
    def test_x3_x2(self):
        assert check_identity_j4("x^3 = x^2").satisfied

    def test_x2_x(self, j4):
        assert not check_identity_j4("x^2 = x").satisfied
        e = j4.gen_word([1, 2, 3])
        assert j4.mul(e, e) != e

    def test_separation_example(self):
        assert check_identity_j4("x^2 y x = x y x^2").satisfied
        assert not check_identity_j5("x^2 y x = x y x^2").satisfied


class TestExplain:
    def test_length2(self):
        ident = parse_identity("x^2 = x")
        text = explain(check_identity_j5(ident).violation, ident)
        assert "Y = {x}" in text and "'xx'" in text

    def test_first_letter(self):
        text = explain(check_identity_j5("xy = yx").violation)
        assert "Y = {x,y}" in text and "(1)" in text

    def test_condition_4(self):
        text = explain(check_identity_j5("x^2 y x = x y x^2").violation)
        assert "(4)(a)" in text and "position 1" in text

    def test_partition_witness(self):
        v = Violation("c4e_iii", ("t", "x", "y", "z"), (1, 1), ("x", "y", "z", "t"), "C1",
                      ("t", "x", "y", "z"), ("x",), ("t", "y", "z"))
        text = explain(v)
        assert "Y' = {t,x,y,z}" in text and "Y2 = {t,y,z}" in text


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_symmetry(w, v):
    assert check_identity_j5(Identity(w, v)).satisfied == check_identity_j5(Identity(v, w)).satisfied
    assert check_identity_j4(Identity(w, v)).satisfied == check_identity_j4(Identity(v, w)).satisfied


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_j5_implies_j4(w, v):
    if check_identity_j5(Identity(w, v)).satisfied:
        assert check_identity_j4(Identity(w, v)).satisfied


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_violation_replays(w, v):
    ident = Identity(w, v)
    verdict = check_identity_j5(ident)
    if not verdict.satisfied:
        assert replay(ident, verdict.violation)


@settings(max_examples=150, deadline=None)
@given(words, words)
def test_agrees_with_oracle(j5, j4, w, v):
    ident = Identity(w, v)
    assert check_identity_j5(ident).satisfied == holds(j5, ident).holds
    assert check_identity_j4(ident).satisfied == holds(j4, ident).holds


@settings(max_examples=200, deadline=None)
@given(words, st.data())
def test_squares_preserved(w, data):
    # near-copies of w make accepted identities common enough to test
    v = data.draw(st.sampled_from([w, w + w[-1:], w[:1] + w, w[::-1], w.replace("x", "xx", 1)]))
    if check_identity_j5(Identity(w, v)).satisfied:
        for x in set(w):
            assert (w.count(x) >= 2) == (v.count(x) >= 2)
