import pytest

from jonesid.diagram import enumerate_jones
from jonesid.lemmas import L_FAMILIES, R_FAMILIES, verify_lemma
from jonesid.structure import green_classes


@pytest.fixture(scope="module")
def j5():
    return enumerate_jones(5)


@pytest.mark.parametrize("side", ["R", "L"])
def test_all_families_hold(j5, side):
    results = verify_lemma(side, j5, green_classes(j5), max_len=6)
    assert [r.family for r in results] == list(R_FAMILIES)
    for r in results:
        assert r.pairs > 0, r.line()
        assert r.ok, (r.line(), r.counterexample)


def test_worked_cases_of_r_star1(j5):
    # products quoted in the argument for the first family, one per starting generator
    g = green_classes(j5)
    w = j5.gen_word
    assert w([1, 2, 3, 1]) == w([1, 3]) and w([1, 2, 3, 4, 2]) == w([1, 2, 4])
    assert not g.r_related(w([1, 3]), w([1, 2, 4]))
    assert not g.r_related(w([2, 3, 1]), w([2, 4]))
    assert not g.r_related(w([1, 3]), w([3, 2, 4]))
    assert w([4, 3, 2, 1, 3]) == w([4, 3, 1])
    assert not g.r_related(w([4, 3, 1]), w([4, 2]))


def test_worked_cases_of_r_hash1(j5):
    g = green_classes(j5)
    w = j5.gen_word
    assert g.r_related(w([1, 4]), w([1, 2, 4]))
    assert g.r_related(w([2, 1, 4]), w([2, 4]))
    assert g.r_related(w([3, 2, 1, 4]), w([3, 2, 4]))
    assert w([4, 3, 2, 1, 4]) == w([4, 2, 1])
    assert g.r_related(w([4, 2, 1]), w([4, 2]))


def test_mirror_counts(j5):
    # reversing words swaps the two lemmas, so family sizes must agree
    g = green_classes(j5)
    r = verify_lemma("R", j5, g, max_len=5)
    l = verify_lemma("L", j5, g, max_len=5)
    assert [x.pairs for x in r] == [x.pairs for x in l]


def test_broken_family_detected(j5, monkeypatch):
    # flip an expectation and the suite must report failure with a counterexample
    monkeypatch.setitem(R_FAMILIES, "#1", (False, R_FAMILIES["#1"][1]))
    res = {r.family: r for r in verify_lemma("R", j5, max_len=4)}
    assert not res["#1"].ok and res["#1"].counterexample is not None


def test_bad_side():
    with pytest.raises(ValueError):
        verify_lemma("H")


def test_needs_j5():
    with pytest.raises(ValueError):
        verify_lemma("R", enumerate_jones(4))


def test_l_families_cover_same_names():
    assert list(L_FAMILIES) == list(R_FAMILIES)
