import random
from itertools import combinations_with_replacement

import pytest

from curvegluing.errors import DimensionMismatch
from curvegluing.hilbert import (HilbertData, divide_by_one_minus_t,
                                 hilbert_from_lms, hilbert_numerator,
                                 local_hilbert_function, nondecreasing_verdict,
                                 poly_mul, product_factorization_check)
from curvegluing.polyalg import m_divides
from curvegluing.semigroup import minimal_generators
from curvegluing.toric import MonomialCurve, curve

LMS_32 = [(0, 0, 2), (1, 0, 1), (0, 3, 1), (0, 6, 0)]


def brute_standard_monomial_counts(lms, nvars, maxdeg):
    """Count monomials outside the ideal, degree by degree."""
    counts = []
    for d in range(maxdeg + 1):
        n = 0
        for combo in combinations_with_replacement(range(nvars), d):
            mono = [0] * nvars
            for v in combo:
                mono[v] += 1
            if not any(m_divides(m, tuple(mono)) for m in lms):
                n += 1
        counts.append(n)
    return counts


def expand_series(numerator, nvars, maxdeg):
    series = (list(numerator) + [0] * (maxdeg + 1))[:maxdeg + 1]
    for _ in range(nvars):
        acc = 0
        out = []
        for c in series:
            acc += c
            out.append(acc)
        series = out
    return series


class TestNumerator:
    def test_principal(self):
        assert hilbert_numerator([(0, 2)], 2) == [1, 0, -1]

    def test_free_ring(self):
        assert hilbert_numerator([], 3) == [1]

    def test_pure_power_sequence(self):
        # pairwise coprime generators: product of (1 - t^deg)
        num = hilbert_numerator([(2, 0), (0, 3)], 2)
        assert num == poly_mul([1, 0, -1], [1, 0, 0, -1])

    def test_component_leading_ideal(self):
        # the 3-variable cone leading ideal; counts frozen from the
        # brute-force standard-monomial oracle
        brute = brute_standard_monomial_counts(LMS_32, 3, 10)
        assert brute == [1, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6]
        num = hilbert_numerator(LMS_32, 3)
        assert expand_series(num, 3, 10) == brute

    def test_pivot_rules_agree(self):
        rng = random.Random(79)
        for _ in range(60):
            nvars = rng.randint(1, 4)
            lms = {tuple(rng.randint(0, 4) for _ in range(nvars))
                   for _ in range(rng.randint(1, 6))}
            lms = [m for m in lms if sum(m) > 0]
            if not lms:
                continue
            a = hilbert_numerator(lms, nvars, pivot_rule="frequent")
            b = hilbert_numerator(lms, nvars, pivot_rule="first")
            assert a == b

    def test_random_against_brute_force(self):
        rng = random.Random(83)
        for _ in range(60):
            nvars = rng.randint(1, 4)
            lms = {tuple(rng.randint(0, 5) for _ in range(nvars))
                   for _ in range(rng.randint(1, 6))}
            lms = [m for m in lms if 0 < sum(m) <= 6]
            if not lms:
                continue
            num = hilbert_numerator(lms, nvars)
            assert expand_series(num, nvars, 12) == \
                brute_standard_monomial_counts(lms, nvars, 12)


class TestDivision:
    def test_exact(self):
        # (1-t)(1+2t) = 1 + t - 2t^2
        assert divide_by_one_minus_t([1, 1, -2]) == [1, 2]

    def test_inexact_raises(self):
        with pytest.raises(DimensionMismatch):
            divide_by_one_minus_t([1, 1])

    def test_artinian_quotient_rejected(self):
        # <x1, x2> in two variables is zero-dimensional, not a curve cone
        with pytest.raises(DimensionMismatch):
            hilbert_from_lms([(1, 0), (0, 1)], 2)


class TestLocalHilbert:
    def test_cuspidal_cubic(self):
        data = local_hilbert_function(curve([2, 3]))
        assert data.reduced_numerator == (1, 1)
        assert data.hf_prefix[:4] == (1, 2, 2, 2)
        assert data.multiplicity == 2

    def test_6_7_15_matches_oracle(self):
        data = local_hilbert_function(curve([6, 7, 15]), prefix_len=6)
        assert data.hf_prefix == (1, 3, 4, 5, 5, 6, 6)
        assert data.nondecreasing
        oracle = minimal_generators([6, 7, 15]).order_filtration_hilbert(6)
        assert list(data.hf_prefix) == oracle

    def test_glued_family_member(self):
        C = MonomialCurve((16, 24, 28, 35), ("x1", "x2", "y1", "y2"))
        data = local_hilbert_function(C)
        product = poly_mul(poly_mul([1, 1], [1, 1]), [1, 1, 1, 1])
        assert list(data.reduced_numerator) == product == [1, 3, 4, 4, 3, 1]
        assert data.hf_prefix[:7] == (1, 4, 8, 12, 15, 16, 16)
        assert data.multiplicity == 16

    def test_default_prefix_shows_stabilization(self):
        data = local_hilbert_function(curve([6, 7, 15]))
        assert data.hf_prefix[-1] == data.hf_prefix[-2] == data.multiplicity

    def test_oracle_equivalence_random(self):
        rng = random.Random(89)
        for _ in range(25):
            gens = sorted({rng.randint(2, 30) for _ in range(rng.randint(2, 4))})
            gens.append(gens[-1] + 1)
            C = curve(gens)
            data = local_hilbert_function(C, prefix_len=15)
            oracle = C.semigroup.order_filtration_hilbert(15)
            assert list(data.hf_prefix) == oracle


class TestNondecreasing:
    def test_accepts_nonnegative(self):
        assert nondecreasing_verdict([1, 3, 4]) == (True, None)

    def test_flags_first_negative(self):
        assert nondecreasing_verdict([1, 2, -1, 1]) == (False, 2)

    def test_glued_example_nondecreasing(self):
        C = MonomialCurve((105, 252, 119, 136), ("x1", "x2", "y1", "y2"))
        assert local_hilbert_function(C).nondecreasing


class TestFactorization:
    def test_family_member(self):
        C = MonomialCurve((16, 24, 28, 35), ("x1", "x2", "y1", "y2"))
        glued = local_hilbert_function(C)
        assert product_factorization_check(glued, [1, 1], [1, 1, 1, 1], 2)

    def test_unit_third_factor(self):
        data = HilbertData(numerator=(1,), reduced_numerator=(1, 2),
                           hf_prefix=(1, 3, 3), multiplicity=3,
                           nondecreasing=True, first_violation=None)
        assert product_factorization_check(data, [1, 2], [1], 1)

    def test_regular_second_component(self):
        # gluing C(6,7,15) with the line: h2 = 1 and h3 = 1 + t
        spec_glued = MonomialCurve((12, 14, 30, 19), ("x1", "x2", "x3", "y1"))
        glued = local_hilbert_function(spec_glued)
        h1 = list(local_hilbert_function(curve([6, 7, 15])).reduced_numerator)
        assert product_factorization_check(glued, h1, [1], 2)

    def test_mismatch_detected(self):
        data = HilbertData(numerator=(1,), reduced_numerator=(1, 1),
                           hf_prefix=(1, 2, 2), multiplicity=2,
                           nondecreasing=True, first_violation=None)
        assert not product_factorization_check(data, [1, 1], [1, 1], 2)
