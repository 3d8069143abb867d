import itertools

import pytest

from jonesid.checker import check_identity_j4, check_identity_j5
from jonesid.diagram import MonoidTable, enumerate_jones, rank
from jonesid.oracle import (
    BudgetExceeded,
    all_words,
    equivalence_harness,
    evaluate_word,
    holds,
    random_identities,
    replays,
    search_separating,
)
from jonesid.words import Identity, parse_identity
from known_identities import KNOWN_IDENTITIES


@pytest.fixture(scope="module")
def j5():
    return enumerate_jones(5)


@pytest.fixture(scope="module")
def j4():
    return enumerate_jones(4)


def naive_holds(t, ident):
    """Reference enumeration with plain Python loops."""
    letters = sorted(set(ident.lhs) | set(ident.rhs))
    for values in itertools.product(range(len(t)), repeat=len(letters)):
        a = dict(zip(letters, values))
        if evaluate_word(t, ident.lhs, a) != evaluate_word(t, ident.rhs, a):
            return False, a
    return True, None


class TestEvaluate:
    def test_empty(self, j5):
        assert evaluate_word(j5, "", {}) == j5.identity

    def test_square(self, j5):
        h1 = j5.generators[0]
        assert evaluate_word(j5, "xx", {"x": h1}) == h1

    def test_xyx(self, j5):
        h1, h2 = j5.generators[:2]
        assert evaluate_word(j5, "xyx", {"x": h1, "y": h2}) == h1

    def test_unmapped(self, j5):
        with pytest.raises(KeyError):
            evaluate_word(j5, "xy", {"x": 0})


class TestHolds:
    def test_x3_x2(self, j5):
        v = holds(j5, "x^3 = x^2")
        assert v.holds and v.evaluations == 42 and v.counterexample is None

    def test_x2_x(self, j5):
        ident = parse_identity("x^2 = x")
        v = holds(j5, ident)
        assert not v.holds and replays(j5, ident, v)
        e = j5.gen_word([1, 2, 3, 4])
        assert evaluate_word(j5, "xx", {"x": e}) != e
        assert rank(j5.elements[j5.mul(e, e)]) == 1

    def test_commutation(self, j5):
        h1, h2 = j5.generators[:2]
        assert j5.mul(h1, h2) != j5.mul(h2, h1)
        assert not holds(j5, "xy = yx").holds

    def test_known_identities(self, j5):
        for text in KNOWN_IDENTITIES:
            assert holds(j5, text).holds, text

    def test_first_counterexample_is_lexicographic(self, j4):
        for text in ["xy = yx", "xyx = x", "x^2 y = y x^2", "xyz = zyx"]:
            ident = parse_identity(text)
            ok, cex = naive_holds(j4, ident)
            v = holds(j4, ident, fast_path=False)
            assert v.holds == ok and v.counterexample == cex

    def test_block_boundaries(self):
        # three letters over J_6 span several numpy blocks
        t = enumerate_jones(6)
        ident = parse_identity("x y z x = x z y x")
        v = holds(t, ident, fast_path=False)
        assert not v.holds and replays(t, ident, v)

    def test_content_fast_path(self, j5):
        ident = parse_identity("xy = x")
        v = holds(j5, ident)
        assert not v.holds and v.evaluations == 1 and replays(j5, ident, v)
        assert v.counterexample == {"x": j5.generators[0], "y": j5.generators[2]}

    def test_content_mismatch_without_fast_path(self, j5):
        ident = parse_identity("xy = x")
        v = holds(j5, ident, fast_path=False)
        assert not v.holds and replays(j5, ident, v)

    def test_budget(self, j5):
        with pytest.raises(BudgetExceeded):
            holds(j5, "xyzt = tzyx", budget=42**3)

    def test_empty_identity(self, j5):
        assert holds(j5, Identity("", "")).holds

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_basic_laws(self, n):
        t = enumerate_jones(n)
        assert holds(t, "x = x").holds
        v = holds(t, "xy = x")
        assert not v.holds and replays(t, Identity("xy", "x"), v)

    def test_group_table(self):
        z2 = MonoidTable.from_table([[0, 1], [1, 0]])
        assert holds(z2, "xy = yx").holds
        assert holds(z2, "x^2 = 1").holds
        assert not holds(z2, "x^2 = x").holds


class TestHarness:
    def test_degenerate(self, j5):
        r = equivalence_harness(j5, check_identity_j5, letters=2, max_len=1)
        assert r.instances == 4 and r.holds_count == 2 and r.fails_count == 2
        assert not r.discrepancies

    def test_small_exhaustive(self, j4):
        r = equivalence_harness(j4, check_identity_j4, letters=2, max_len=4)
        assert r.instances == 30 * 30 and not r.discrepancies

    def test_catches_wrong_checker(self, j5):
        r = equivalence_harness(j5, check_identity_j4, letters=2, max_len=4)
        assert r.discrepancies
        d = r.discrepancies[0]
        assert d.checker_verdict.satisfied and not d.oracle_verdict.holds
        assert replays(j5, d.identity, d.oracle_verdict)

    def test_deterministic(self, j5):
        kw = dict(letters=3, max_len=6, mode="random", sample_size=200, seed=11, near_fraction=0.5)
        a = equivalence_harness(j5, check_identity_j5, **kw)
        b = equivalence_harness(j5, check_identity_j5, threads=4, **kw)
        assert a.to_json_obj() == b.to_json_obj()

    def test_report_schema(self, j5):
        obj = equivalence_harness(j5, check_identity_j4, letters=2, max_len=4).to_json_obj(j5)
        assert set(obj) == {"params", "instances", "holds_count", "fails_count", "discrepancies"}
        assert set(obj["discrepancies"][0]) == {"identity", "checker_verdict", "oracle_verdict", "counterexample"}

    def test_unknown_mode(self, j5):
        with pytest.raises(ValueError):
            equivalence_harness(j5, check_identity_j5, mode="sometimes")


class TestGeneration:
    def test_all_words(self):
        assert len(list(all_words("xy", 1, 6))) == 126

    def test_random_seeded(self):
        a = list(random_identities("xyz", 8, 50, seed=3, near_fraction=0.5))
        b = list(random_identities("xyz", 8, 50, seed=3, near_fraction=0.5))
        assert a == b and len(a) == 50
        assert all(1 <= len(i.lhs) <= 8 and 1 <= len(i.rhs) <= 8 for i in a)

    def test_same_content(self):
        ids = random_identities("xyz", 6, 100, seed=1, same_content=True)
        assert all(set(i.lhs) == set(i.rhs) for i in ids)


class TestSeparation:
    def test_j4_j5(self, j4, j5):
        s = search_separating(j4, j5, letters=3, max_len=12, seed=0)
        assert s is not None
        assert holds(j4, s.identity).holds and not holds(j5, s.identity).holds
        assert check_identity_j5(s.identity).violation.condition.startswith("c4")

    def test_same_monoid(self, j4):
        assert search_separating(j4, j4, letters=2, max_len=5, exhaustive_len=3, samples=300) is None

    def test_j5_j4_reports_outcome(self, j4, j5):
        # reverse direction: whatever comes back must be a genuine separation
        s = search_separating(j5, j4, letters=2, max_len=6, exhaustive_len=3, samples=300)
        if s is not None:
            assert holds(j5, s.identity).holds and not holds(j4, s.identity).holds
