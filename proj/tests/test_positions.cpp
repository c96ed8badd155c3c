#include <doctest.h>

#include "test_support.hpp"

using namespace cutseq;

TEST_CASE("kernel positions") {
    CHECK(kernel_position(KernelIndex(3, 2, 0), 1) == 13);
    CHECK(kernel_position(KernelIndex(2, 0, 0), 3) == 4);
    CHECK(kernel_position(KernelIndex(2, 0, 1), 4) == 8);
    CHECK_THROWS_AS(kernel_position(KernelIndex(2, 0, 0), 0), DomainError);
}

TEST_CASE("envelope positions") {
    CHECK(envelope_position(KernelIndex(2, 1, 0), 1) == 1);
    CHECK(envelope_position(KernelIndex(2, 1, 0), 2) == 4);
    CHECK(envelope_position(KernelIndex(2, 1, 0), 3) == 8);
}

TEST_CASE("factor positions") {
    CHECK(factor_position(Word("aba"), SeqParams(2), 1) == 2);
    CHECK(factor_position(Word("aaaa"), SeqParams(3), 1) == 13);  // a kernel word reduces to its own formula
    CHECK(factor_position(Word("aa"), SeqParams(2), 4) == 8);
    CHECK_THROWS_AS(factor_position(Word("aaaa"), SeqParams(2), 1), NotAFactorError);
}

TEST_CASE("prefix letter counts") {
    CHECK(prefix_letter_count(SeqParams(2), SequenceKind::image(1), 3, Letter::b) == 1);
    CHECK(prefix_letter_count(SeqParams(3), SequenceKind::image(2), 0, Letter::a) == 0);
    CHECK(prefix_letter_count(SeqParams(2), SequenceKind::plain(), 3, Letter::a) == 2);
}

TEST_CASE("kernel minus envelope offset") {
    for (Index p = 1; p <= 100; ++p) {
        CHECK(position_difference_check(KernelIndex(2, 1, 0), p) == 2);
        CHECK(position_difference_check(KernelIndex(2, 0, 0), p) == 0);
    }
    CHECK(position_difference_check(KernelIndex(3, 2, 1), 5) == 12);
}

TEST_CASE("closed forms agree with scans") {
    for (int d = 2; d <= 3; ++d) {
        SeqParams dp(d);
        LengthTable lt(dp);
        for (int m = 0; m <= 3; ++m) {
            for (int i = 0; i < d; ++i) {
                KernelIndex k(d, m, i);
                auto kscan = empirical_first(kernel_word(k), dp, 60).positions;
                auto escan = empirical_first(envelope_word(k), dp, 60).positions;
                for (Index p = 1; p <= 60; ++p) {
                    CHECK(kernel_position(k, p) == kscan[static_cast<std::size_t>(p - 1)]);
                    CHECK(envelope_position(k, p) == escan[static_cast<std::size_t>(p - 1)]);
                    CHECK(position_difference_check(k, p) == lt.at(m) - 1);
                }
            }
        }
    }
}

TEST_CASE("order-0 kernel position has two equivalent expressions") {
    // At m = 0 the letter-run form f + p + |image prefix|_b coincides with
    // the general closed form (p+1) f + |image prefix|_b * f'.
    for (int d = 2; d <= 3; ++d) {
        SeqParams dp(d);
        for (Index p = 0; p <= 500; ++p) {
            const Index count =
                prefix_letter_count(dp, SequenceKind::image(d - 1), p, Letter::b);
            const Index run_form = 1 + p + count;
            const Index closed_form = (p + 1) * 1 + count * 1;
            CHECK(run_form == closed_form);
            CHECK(kernel_position(KernelIndex(d, 0, 0), p + 1) == closed_form);
        }
    }
}

TEST_CASE("positions are strictly increasing") {
    for (int d = 2; d <= 3; ++d) {
        KernelIndex k(d, 2, d - 1);
        Index prev = 0;
        for (Index p = 1; p <= 80; ++p) {
            const Index cur = kernel_position(k, p);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("consecutive positions differ by the signed gap") {
    for (int d = 2; d <= 3; ++d) {
        SeqParams dp(d);
        Word prefix = fixed_point_prefix(dp, 300);
        for (int trial = 0; trial < 60; ++trial) {
            Word w = testing::random_factor(prefix, 12);
            GapProfile fg = factor_gaps(w, dp);
            std::string labels = gap_sequence_labels(dp, kernel_of(w, dp).index.i(), 50);
            for (Index p = 1; p <= 50; ++p) {
                const SignedWord& gap = labels[p - 1] == 'A' ? fg.gap_a : fg.gap_b;
                CHECK(factor_position(w, dp, p + 1) - factor_position(w, dp, p) - w.length() ==
                      gap.signed_length());
            }
        }
    }
}
