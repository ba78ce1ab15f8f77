from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, given, settings

from fdfa.algebra import (SATURATION_CAVEAT, BudgetExceeded, SaturationReport, Verdict, check_saturation_bounded,
                          check_saturation_exact, complement, containment_witness, emptiness_witness,
                          equality_witness, intersect, is_contained, is_empty, is_equal, is_universal, union,
                          universality_counterexample)
from fdfa.core import FDFA, accepts, normalize
from fdfa.families import (AB, deterministic_fixtures, emptiness_trap, fig1_saturated, fig1_unsaturated, gen_ln)
from fdfa.translations import omega_to_fdfa
from fdfa.words import up_equal

from oracles import pairs
from support import brute_bound, random_fdfas, saturated_ab

U, S = fig1_unsaturated(), fig1_saturated()


def some_pair(f: FDFA, want: bool):
    return next(((u, v) for u, v in pairs(f.alphabet, *brute_bound(f)) if accepts(f, u, v) == want), None)


class TestComplement:
    @pytest.mark.parametrize("f", [U, S, gen_ln(2).fdfa], ids=["U", "S", "L2"])
    def test_pointwise_flip_and_size(self, f):
        c = complement(f)
        assert c.size() == f.size()
        for u, v in pairs(f.alphabet, 3, 3):
            assert accepts(c, u, v) != accepts(f, u, v)
        assert complement(c) == f

    @given(random_fdfas())
    @settings(max_examples=50, deadline=None)
    def test_random(self, f):
        c = complement(f)
        assert all(accepts(c, u, v) != accepts(f, u, v) for u, v in pairs(AB, 2, 3))


class TestProducts:
    @pytest.mark.parametrize("a, b", list(itertools.combinations(sorted(saturated_ab()), 2))[:20])
    def test_pointwise(self, a, b):
        fx = saturated_ab()
        f1, f2 = fx[a], fx[b]
        meet, join = intersect(f1, f2), union(f1, f2)
        for u, v in pairs(AB, 3, 3):
            x1, x2 = accepts(f1, u, v), accepts(f2, u, v)
            assert accepts(meet, u, v) == (x1 and x2)
            assert accepts(join, u, v) == (x1 or x2)

    def test_full_product_size(self):
        f1, f2 = S, omega_to_fdfa(deterministic_fixtures()["inf-a-dba"])
        for op in (intersect, union):
            assert op(f1, f2, full=True).size() == (4, 8)
        assert intersect(gen_ln(2).fdfa, gen_ln(2).fdfa, full=True).size() == (9, 16)

    def test_caveat_is_attached(self):
        assert SATURATION_CAVEAT in intersect(S, S).caveats
        assert SATURATION_CAVEAT in union(S, S).caveats
        assert not complement(S).caveats

    def test_unsaturated_input_breaks_pointwise_semantics(self):
        # the product normalizes (b, a) to (b, aa), and U rejects the period aa read from l
        prod = intersect(U, S)
        assert accepts(U, "b", "a") and accepts(S, "b", "a")
        assert not accepts(prod, "b", "a")


class TestEmptiness:
    def test_trap(self):
        f = emptiness_trap()
        assert any(f.progress[0].accepts(w) for w in AB.words(2))
        assert is_empty(f)
        assert some_pair(f, True) is None

    def test_witness_shape(self):
        w = emptiness_witness(S)
        assert (w.x, w.y) == ((), ("a",))
        n = normalize(S.leading, w.x, w.y)
        assert (n.i, n.j) == (0, 1)

    def test_universality_counterexample_of_s(self):
        w = universality_counterexample(S)
        assert (w.x, w.y) == ((), ("b", "a"))
        assert not accepts(S, w.x, w.y)
        assert up_equal(("", "ab"), ("a", "ba"))

    @pytest.mark.parametrize("name", sorted(saturated_ab()) + ["U"])
    def test_fixtures_against_brute_force(self, name):
        f = U if name == "U" else saturated_ab()[name]
        assert is_empty(f) == (some_pair(f, True) is None)
        assert is_universal(f) == (some_pair(f, False) is None)

    @given(random_fdfas(max_n=2, max_k=3))
    @settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_random_against_brute_force(self, f):
        w = emptiness_witness(f)
        assert (w is None) == (some_pair(f, True) is None)
        if w is not None:
            assert accepts(f, w.x, w.y)
        c = universality_counterexample(f)
        assert (c is None) == (some_pair(f, False) is None)


class TestContainment:
    @pytest.mark.parametrize("a, b", list(itertools.product(
        ["S", "S^c", "all", "none", "ev-b", "inf-a-dba", "fin-a-dca", "inf-a-dpa"], repeat=2)))
    def test_against_brute_force(self, a, b):
        fx = saturated_ab()
        f1, f2 = fx[a], fx[b]
        bound = brute_bound(f1, f2)
        brute = next(((u, v) for u, v in pairs(AB, *bound) if accepts(f1, u, v) and not accepts(f2, u, v)), None)
        w = containment_witness(f1, f2)
        assert (w is None) == (brute is None) == is_contained(f1, f2)
        if w is not None:
            assert accepts(f1, w.x, w.y) and not accepts(f2, w.x, w.y)

    def test_equality(self):
        fx = saturated_ab()
        assert is_equal(fx["inf-a-dba"], fx["inf-a-dpa"])
        assert is_equal(complement(fx["inf-a-dba"]), fx["fin-a-dca"])
        assert not is_equal(fx["S"], fx["ev-b"])
        w = equality_witness(fx["S"], fx["ev-b"])
        assert accepts(fx["S"], w.x, w.y) != accepts(fx["ev-b"], w.x, w.y)
        assert is_contained(fx["ev-b"], fx["S"])
        assert is_equal(gen_ln(2).fdfa, gen_ln(2).fdfa)


class TestSaturation:
    def test_u_bounded(self):
        rep = check_saturation_bounded(U, 3, 3)
        assert rep.verdict is Verdict.UNSATURATED
        p1, p2 = rep.counterexample
        assert up_equal(p1, p2) and accepts(U, *p1) != accepts(U, *p2)

    def test_u_bounded_reports_ba_omega(self):
        rep = check_saturation_bounded(U, 3, 3, all_classes=True)
        classes = [p1 for p1, _ in rep.counterexamples]
        assert any(up_equal(p, ("b", "a")) for p in classes)
        for p1, p2 in rep.counterexamples:
            assert up_equal(p1, p2) and accepts(U, *p1) != accepts(U, *p2)

    def test_u_exact(self):
        rep = check_saturation_exact(U)
        assert rep.verdict is Verdict.UNSATURATED
        loop = rep.loop
        assert (loop.q, loop.q_prime, loop.u, loop.v1, loop.v2, loop.l, loop.r) == (0, 1, (), ("a",), ("a",), 1, 1)
        p1, p2 = rep.counterexample
        assert up_equal(p1, p2) and accepts(U, *p1) != accepts(U, *p2)

    @pytest.mark.parametrize("name", ["S", "L2", "L3"] + sorted(deterministic_fixtures()))
    def test_saturated_fixtures(self, name):
        if name == "S":
            f = S
        elif name.startswith("L"):
            f = gen_ln(int(name[1:])).fdfa
        else:
            f = omega_to_fdfa(deterministic_fixtures()[name])
        assert check_saturation_exact(f).verdict is Verdict.SATURATED_EXACT
        bound = (3, 3) if len(f.alphabet) == 2 else (2, 3)
        assert check_saturation_bounded(f, *bound).verdict is Verdict.SATURATED_UP_TO_BOUND

    @given(random_fdfas(max_n=3, max_k=3))
    @settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_exact_and_bounded_agree(self, f):
        exact = check_saturation_exact(f)
        bounded = check_saturation_bounded(f, 3, 4)
        # the bounded search is sound; at this size it is also complete in practice
        if not bounded.saturated:
            assert not exact.saturated
        if not exact.saturated:
            p1, p2 = exact.counterexample
            assert up_equal(p1, p2) and accepts(f, *p1) != accepts(f, *p2)

    def test_budget(self):
        with pytest.raises(BudgetExceeded, match="infeasible"):
            check_saturation_exact(gen_ln(3).fdfa, budget=100)

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            check_saturation_bounded(S, 2, 0)

    def test_report_invariant(self):
        with pytest.raises(ValueError):
            SaturationReport(Verdict.UNSATURATED, None, "exact")
        with pytest.raises(ValueError):
            SaturationReport(Verdict.SATURATED_EXACT, ((("a",), ("a",)), (("a",), ("a",))), "exact")
