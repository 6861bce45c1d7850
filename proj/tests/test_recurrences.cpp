#include "coxeuler/recurrences.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace coxeuler {
namespace {

Polynomial d_row(int n) {
    if (n <= 1) return Polynomial(1);
    return brute_force_eulerian(n, Family::D);
}

TEST(Recurrences, BaseRowIsTheRank2Census) {
    SubTableRow base = base_sub_row();
    EXPECT_EQ(base.n, 2);
    EXPECT_EQ(base.p1, Polynomial::from_ints({0, 1}));
    EXPECT_EQ(base.p01, Polynomial::from_ints({0, 0, 1}));
    EXPECT_EQ(base.pge2, Polynomial(1));
    EXPECT_EQ(base.p0ge2, Polynomial::from_ints({0, 1}));
}

TEST(Recurrences, NumbersStepRank2To3) {
    SubTableRow next = sub_numbers_step(base_sub_row());
    EXPECT_EQ(next.n, 3);
    EXPECT_EQ(next.p1, Polynomial::from_ints({0, 3, 3}));
    EXPECT_EQ(next.p01, Polynomial::from_ints({0, 0, 5, 1}));
    EXPECT_EQ(next.pge2, Polynomial::from_ints({1, 5}));
    EXPECT_EQ(next.p0ge2, Polynomial::from_ints({0, 3, 3}));
}

TEST(Recurrences, NumbersStepHandExpansion) {
    // Rank 3, descent count 1, first class: (2*1-1)*1 + 2*(3-1)*0 + 0 + 1 + 1 = 3.
    SubTableRow base = base_sub_row();
    SubTableRow next = sub_numbers_step(base);
    Rat expected = Rat(2 * 1 - 1) * base.p1.coeff(1) + Rat(2 * (3 - 1)) * base.p1.coeff(0) +
                   base.p01.coeff(1) + base.pge2.coeff(0) + base.p0ge2.coeff(1);
    EXPECT_EQ(expected, Rat(3));
    EXPECT_EQ(next.p1.coeff(1), expected);
}

TEST(Recurrences, PolysStepRank2To3And3To4) {
    SubTableRow r3 = sub_polys_step(base_sub_row());
    EXPECT_EQ(r3.p1, Polynomial::from_ints({0, 3, 3}));
    SubTableRow r4 = sub_polys_step(r3);
    EXPECT_EQ(r4.pge2, Polynomial::from_ints({1, 30, 17}));
    EXPECT_EQ(r4.p1, Polynomial::from_ints({0, 7, 34, 7}));
}

TEST(Recurrences, BothStepsReproduceTheCensus) {
    SubTableRow by_numbers = base_sub_row();
    SubTableRow by_polys = base_sub_row();
    for (int n = 3; n <= 6; ++n) {
        by_numbers = sub_numbers_step(by_numbers);
        by_polys = sub_polys_step(by_polys);
        SubTableRow truth = brute_force_sub_row(n);
        EXPECT_EQ(by_numbers, truth) << "numbers step at rank " << n;
        EXPECT_EQ(by_polys, truth) << "polynomial step at rank " << n;
    }
}

TEST(Recurrences, StepsRejectBadInput) {
    SubTableRow bogus;
    bogus.n = 1;
    EXPECT_THROW(sub_numbers_step(bogus), std::invalid_argument);
    EXPECT_THROW(sub_polys_step(bogus), std::invalid_argument);
}

TEST(Recurrences, ClassicalFamilySteps) {
    EXPECT_EQ(eulerian_step(Family::A, Polynomial(1), 1), Polynomial(1));
    EXPECT_EQ(eulerian_step(Family::B, Polynomial(1), 1), Polynomial::from_ints({1, 1}));
    EXPECT_EQ(eulerian_step(Family::B, Polynomial::from_ints({1, 1}), 2),
              Polynomial::from_ints({1, 6, 1}));
    EXPECT_THROW(eulerian_step(Family::D, Polynomial(1), 2), std::invalid_argument);
    EXPECT_THROW(eulerian_step(Family::A, Polynomial(1), 0), std::invalid_argument);
}

TEST(Recurrences, PartitionFormula) {
    EXPECT_EQ(d_poly_via_partition(base_sub_row()), Polynomial::from_ints({1, 11, 11, 1}));
    EXPECT_EQ(d_poly_via_partition(sub_polys_step(base_sub_row())),
              Polynomial::from_ints({1, 44, 102, 44, 1}));
}

TEST(Recurrences, PartitionAndClassSumFormsAgree) {
    SubTableRow row = base_sub_row();
    for (int n = 2; n <= 7; ++n) {
        EXPECT_EQ(d_poly_via_partition(row), d_poly_via_class_sum(row)) << "source rank " << n;
        if (n < 7) row = sub_polys_step(row);
    }
}

TEST(Recurrences, EightTermFormula) {
    EXPECT_EQ(d_poly_via_theorem(d_row(2), d_row(1), d_row(0), 1), d_row(3));
    EXPECT_EQ(d_poly_via_theorem(d_row(3), d_row(2), d_row(1), 2), d_row(4));
    EXPECT_EQ(d_poly_via_theorem(d_row(4), d_row(3), d_row(2), 3, Form::corrected), d_row(5));
    EXPECT_THROW(d_poly_via_theorem(d_row(2), d_row(1), d_row(0), 0), std::invalid_argument);
}

TEST(Recurrences, EightTermPrintedFormDivergesAtRank5) {
    // The printed transcription carries a minus on one cubic-in-rank term;
    // ranks 3 and 4 are immune because the factor n(n-1)(n-2) vanishes.
    EXPECT_EQ(d_poly_via_theorem(d_row(2), d_row(1), d_row(0), 1, Form::printed), d_row(3));
    EXPECT_EQ(d_poly_via_theorem(d_row(3), d_row(2), d_row(1), 2, Form::printed), d_row(4));
    Polynomial printed = d_poly_via_theorem(d_row(4), d_row(3), d_row(2), 3, Form::printed);
    EXPECT_NE(printed, d_row(5));
    EXPECT_EQ(printed.coeff(0), Rat(1));
    EXPECT_EQ(printed.coeff(1), Rat(157));
    EXPECT_EQ(printed.coeff(2), Rat(754));  // the census says 802
}

TEST(Recurrences, NineTermFormula) {
    EXPECT_EQ(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 2, 1), Int(44));
    EXPECT_EQ(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 2, 2), Int(102));
    EXPECT_EQ(d_numbers_via_corollary(d_row(4), d_row(3), d_row(2), 3, 2), Int(802));
    for (long k = 0; k <= 6; ++k)
        EXPECT_EQ(d_numbers_via_corollary(d_row(5), d_row(4), d_row(3), 4, k),
                  d_row(6).coeff(k).get_num())
            << "k = " << k;
}

TEST(Recurrences, NineTermPrintedFormLacksAFactorK) {
    EXPECT_EQ(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 2, 2, Form::printed), Int(114));
    // At k = 0 the missing factor shifts the result by exactly -4(n+1).
    for (int n = 1; n <= 6; ++n) {
        Int truth = d_row(n + 2).coeff(0).get_num();
        Int printed =
            d_numbers_via_corollary(d_row(n + 1), d_row(n), d_row(n - 1), n, 0, Form::printed);
        EXPECT_EQ(printed - truth, Int(-4) * Int(n + 1)) << "n = " << n;
    }
    // At k = 1 both forms agree (k = k_factor = 1 there).
    EXPECT_EQ(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 2, 1, Form::printed), Int(44));
}

TEST(Recurrences, NineTermRejectsBadArguments) {
    EXPECT_THROW(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 2, -1), std::invalid_argument);
    EXPECT_THROW(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 2, 5), std::invalid_argument);
    EXPECT_THROW(d_numbers_via_corollary(d_row(3), d_row(2), d_row(1), 0, 1), std::invalid_argument);
}

TEST(Recurrences, SubLadderChains) {
    std::vector<SubTableRow> by_polys = build_sub_ladder(6);
    std::vector<SubTableRow> by_numbers = build_sub_ladder(6, true);
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(by_polys[static_cast<size_t>(n)], brute_force_sub_row(n)) << "rank " << n;
        EXPECT_EQ(by_polys[static_cast<size_t>(n)], by_numbers[static_cast<size_t>(n)]) << "rank " << n;
    }
    EXPECT_THROW(build_sub_ladder(1), std::invalid_argument);
}

TEST(Recurrences, LaddersForAllFamilies) {
    EulerianLadder a = build_ladder(Family::A, 3);
    ASSERT_EQ(a.rows.size(), 4u);
    EXPECT_EQ(a.rows[0], Polynomial(1));
    EXPECT_EQ(a.rows[1], Polynomial(1));
    EXPECT_EQ(a.rows[2], Polynomial::from_ints({1, 1}));
    EXPECT_EQ(a.rows[3], Polynomial::from_ints({1, 4, 1}));

    EulerianLadder b = build_ladder(Family::B, 2);
    EXPECT_EQ(b.rows[2], Polynomial::from_ints({1, 6, 1}));

    EulerianLadder d = build_ladder(Family::D, 5);
    EXPECT_EQ(d.rows[0], Polynomial(1));
    EXPECT_EQ(d.rows[1], Polynomial(1));
    EXPECT_EQ(d.rows[2], Polynomial::from_ints({1, 2, 1}));
    EXPECT_EQ(d.rows[5], Polynomial::from_ints({1, 157, 802, 802, 157, 1}));

    EXPECT_THROW(build_ladder(Family::B_minus_D, 3), std::invalid_argument);
    EXPECT_THROW(build_ladder(Family::D, -1), std::invalid_argument);
}

TEST(Recurrences, TheoremLadderMatchesPartitionLadder) {
    EulerianLadder by_theorem = build_ladder(Family::D, 12, Method::theorem);
    EulerianLadder by_partition = build_ladder(Family::D, 12, Method::partition);
    for (int n = 0; n <= 12; ++n)
        EXPECT_EQ(by_theorem.rows[static_cast<size_t>(n)], by_partition.rows[static_cast<size_t>(n)])
            << "rank " << n;
}

TEST(Recurrences, LadderRowsArePalindromicIntegerPolynomials) {
    EulerianLadder d = build_ladder(Family::D, 12);
    for (int n = 2; n <= 12; ++n) {
        const Polynomial& row = d.rows[static_cast<size_t>(n)];
        EXPECT_EQ(row.degree(), n);
        EXPECT_TRUE(row.is_integral());
        EXPECT_EQ(row.reverse(n), row) << "rank " << n;
        for (long k = 0; k <= n; ++k) EXPECT_GT(row.coeff(k), Rat(0));
    }
}

TEST(Recurrences, PrintedEightTermFirstDivergence) {
    auto div = theorem_printed_first_divergence(8);
    ASSERT_TRUE(div.has_value());
    EXPECT_EQ(div->rank, 5);
    EXPECT_EQ(div->power, 2);
    EXPECT_EQ(div->printed, Int(754));
    EXPECT_EQ(div->truth, Int(802));
    // Scanning only immune ranks finds nothing.
    EXPECT_FALSE(theorem_printed_first_divergence(4).has_value());
}

TEST(Recurrences, PrintedNineTermFirstDivergence) {
    auto div = corollary_printed_first_divergence(5);
    ASSERT_TRUE(div.has_value());
    EXPECT_EQ(div->n, 2);
    EXPECT_EQ(div->k, 2);
    EXPECT_EQ(div->printed, Int(114));
    EXPECT_EQ(div->truth, Int(102));
    EXPECT_FALSE(corollary_printed_first_divergence(1).has_value());
}

TEST(Recurrences, GroupOrderAtTOne) {
    EulerianLadder d = build_ladder(Family::D, 10);
    for (int n = 2; n <= 10; ++n) {
        Rat expected(Int(int_pow(Int(2), static_cast<unsigned long>(n - 1)) *
                         factorial(static_cast<unsigned long>(n))));
        EXPECT_EQ(d.rows[static_cast<size_t>(n)].eval(Rat(1)), expected) << "rank " << n;
    }
}

}  // namespace
}  // namespace coxeuler
