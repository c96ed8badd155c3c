#include <doctest.h>

#include "test_support.hpp"

using namespace cutseq;

TEST_CASE("kernel word construction") {
    CHECK(kernel_word(KernelIndex(3, 1, 1)).str() == "baaab");
    CHECK(kernel_word(KernelIndex(3, 2, 0)).str() == "aaaa");
    CHECK(kernel_word(KernelIndex(2, 0, 1)).str() == "aa");
    CHECK(kernel_word(KernelIndex(3, 1, 0)).str() == "b");
    CHECK(kernel_word(KernelIndex(3, 1, 2)).str() == "baaabaaab");

    CHECK_THROWS_AS(KernelIndex(2, -1, 0), DomainError);
    CHECK_THROWS_AS(KernelIndex(2, 0, 2), DomainError);
    CHECK_THROWS_AS(KernelIndex(1, 0, 0), DomainError);
}

TEST_CASE("kernel words are palindromes with the expected length") {
    for (int d = 2; d <= 4; ++d) {
        LengthTable lt{SeqParams(d)};
        for (int m = 0; m <= 5; ++m) {
            for (int i = 0; i < d; ++i) {
                KernelIndex k(d, m, i);
                Word kw = kernel_word(k);
                CHECK(kw.length() == i * lt.at(m) + lt.at(m - 1));
                CHECK(kw.palindrome());
            }
        }
    }
}

TEST_CASE("kernel recursion matches the direct construction") {
    CHECK(kernel_word_recursive(KernelIndex(3, 1, 2)).str() == "baaabaaab");
    CHECK(kernel_word_recursive(KernelIndex(2, 2, 0)).str() == "aaa");
    CHECK(kernel_word_recursive(KernelIndex(2, 1, 1)).str() == "baab");
    for (int d = 2; d <= 5; ++d) {
        for (int m = 0; m <= 6; ++m) {
            for (int i = 0; i < d; ++i) {
                KernelIndex k(d, m, i);
                CHECK(kernel_word_recursive(k) == kernel_word(k));
            }
        }
    }
}

TEST_CASE("envelope words") {
    CHECK(envelope_word(KernelIndex(2, 1, 0)).str() == "aabaa");
    CHECK(envelope_word(KernelIndex(2, 0, 1)).str() == "aa");  // m = 0 collapses to the kernel
    CHECK(envelope_word(KernelIndex(3, 1, 0)).str() == "aaabaaa");

    for (int d = 2; d <= 4; ++d) {
        SeqParams dp(d);
        LengthTable lt(dp);
        for (int m = 0; m <= 4; ++m) {
            auto [mu1, mu2] = envelope_margins(dp, m);
            CHECK(mu1.length() == lt.at(m) - 1);
            CHECK(mu2 == mu1.mirror());
            for (int i = 0; i < d; ++i) {
                KernelIndex k(d, m, i);
                Word ew = envelope_word(k);
                CHECK(ew.length() == (i + 2) * lt.at(m) + lt.at(m - 1) - 2);
                CHECK(ew.palindrome());
                CHECK(ew == mu1 + kernel_word(k) + mu2);
            }
        }
    }
}

TEST_CASE("envelope margins") {
    auto [a1, a2] = envelope_margins(SeqParams(2), 1);
    CHECK(a1.str() == "aa");
    CHECK(a2.str() == "aa");
    auto [b1, b2] = envelope_margins(SeqParams(2), 0);
    CHECK(b1.empty());
    CHECK(b2.empty());
    auto [c1, c2] = envelope_margins(SeqParams(3), 1);
    CHECK(c1.str() == "aaa");
    CHECK(c2.str() == "aaa");
}

TEST_CASE("kernel order") {
    CHECK(kernel_cmp(KernelIndex(2, 1, 0), KernelIndex(2, 0, 1)) == std::strong_ordering::greater);
    CHECK(kernel_cmp(KernelIndex(3, 1, 1), KernelIndex(3, 1, 2)) == std::strong_ordering::less);
    CHECK(kernel_cmp(KernelIndex(2, 1, 0), KernelIndex(2, 1, 0)) == std::strong_ordering::equal);
    CHECK_THROWS_AS(kernel_cmp(KernelIndex(2, 0, 0), KernelIndex(3, 0, 0)), DomainError);

    // The order is not monotone in word length: K_{2,1,1} = baab is longer
    // than K_{2,2,0} = aaa yet smaller in the order.
    CHECK(kernel_word(KernelIndex(2, 1, 1)).length() > kernel_word(KernelIndex(2, 2, 0)).length());
    CHECK(kernel_cmp(KernelIndex(2, 1, 1), KernelIndex(2, 2, 0)) == std::strong_ordering::less);
}

TEST_CASE("kernel of a word") {
    auto hit = kernel_of(Word("aabaa"), SeqParams(2));
    CHECK(hit.index == KernelIndex(2, 1, 0));
    CHECK(hit.position == 3);

    hit = kernel_of(Word("aaaa"), SeqParams(2));
    CHECK(hit.index == KernelIndex(2, 2, 0));
    CHECK(hit.position == 1);  // first of the two occurrences of aaa

    hit = kernel_of(Word("a"), SeqParams(3));
    CHECK(hit.index == KernelIndex(3, 0, 0));
    CHECK(hit.position == 1);

    CHECK_THROWS_AS(kernel_of(Word(), SeqParams(2)), EmptyWordError);
}

TEST_CASE("star decomposition") {
    SeqParams d2(2);
    auto sc = star_decompose(Word("aba"), d2);
    CHECK(sc.kernel == KernelIndex(2, 1, 0));
    CHECK(sc.x == 2);
    CHECK(sc.y == 1);

    sc = star_decompose(Word("b"), d2);
    CHECK(sc.x == 3);  // x = f_{2,1}, empty margins
    CHECK(sc.y == 0);

    sc = star_decompose(Word("aabaa"), d2);
    CHECK(sc.x == 1);
    CHECK(sc.y == 2);

    CHECK_THROWS_AS(star_decompose(Word("aaaa"), d2), NotAFactorError);
    CHECK_THROWS_AS(star_decompose(Word("aaabb"), d2), NotAFactorError);
}

TEST_CASE("star decomposition round-trips over random factors") {
    for (int d = 2; d <= 3; ++d) {
        SeqParams dp(d);
        Word prefix = fixed_point_prefix(dp, 600);
        for (int trial = 0; trial < 300; ++trial) {
            Word w = testing::random_factor(prefix, 25);
            StarCoords sc = star_decompose(w, dp);
            CHECK(reassemble(sc) == w);
            CHECK(sc.x >= 1);
            CHECK(sc.y >= 0);
            const Index f = LengthTable(dp).at(sc.kernel.m());
            CHECK(sc.x <= f);
            CHECK(sc.y <= f - 1);
        }
    }
}

TEST_CASE("factor membership") {
    SeqParams d2(2);
    CHECK_FALSE(is_factor(Word("aaaa"), d2));   // kernel occurs twice
    CHECK_FALSE(is_factor(Word("aaabb"), d2));  // unique kernel, outside the envelope
    CHECK(is_factor(Word("aabaa"), d2));
    CHECK_THROWS_AS(is_factor(Word(), d2), EmptyWordError);
}

TEST_CASE("membership agrees with a long prefix scan") {
    for (int d = 2; d <= 3; ++d) {
        SeqParams dp(d);
        Word prefix = fixed_point_prefix(dp, 20000);
        for (int trial = 0; trial < 400; ++trial) {
            Word w = testing::random_word(12);
            CHECK(is_factor(w, dp) == prefix.contains(w));
        }
    }
}

TEST_CASE("every factor contains its kernel exactly once and sits in its envelope") {
    for (int d = 2; d <= 3; ++d) {
        SeqParams dp(d);
        Word prefix = fixed_point_prefix(dp, 800);
        for (const Word& w : distinct_factors(prefix, 40)) {
            KernelHit hit = kernel_of(w, dp);
            CHECK(find_occurrences(kernel_word(hit.index), w).size() == 1);
            CHECK(envelope_word(hit.index).contains(w));
        }
    }
}
