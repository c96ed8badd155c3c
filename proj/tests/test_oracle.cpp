#include <doctest.h>

#include "test_support.hpp"

using namespace cutseq;

TEST_CASE("scan positions") {
    CHECK(scan_positions(Word("aa"), SeqParams(2), 10) == std::vector<Index>{1, 4, 7, 8});
    CHECK(scan_positions(Word("b"), SeqParams(3), 17) == std::vector<Index>{4, 8, 12, 17});
    CHECK(scan_positions(Word("ba"), SeqParams(2), 5) == std::vector<Index>{3});
    CHECK_THROWS_AS(scan_positions(Word(), SeqParams(2), 5), EmptyWordError);
    CHECK_THROWS_AS(scan_positions(Word("aba"), SeqParams(2), 2), DomainError);
}

TEST_CASE("empirical gaps") {
    auto rep = empirical_gaps(Word("aa"), SeqParams(2), 10);
    REQUIRE(rep.gaps.size() == 3);
    CHECK(rep.gaps[0] == SignedWord::positive(Word("b")));
    CHECK(rep.gaps[1] == SignedWord::positive(Word("b")));
    CHECK(rep.gaps[2] == SignedWord::inverse(Word("a")));
    CHECK(rep.labels == "AAB");
    CHECK(rep.positions.size() == rep.gaps.size() + 1);

    // Four occurrences of a within the first six letters give three gaps;
    // the seventh letter brings the fourth gap.
    rep = empirical_gaps(Word("a"), SeqParams(2), 6);
    REQUIRE(rep.gaps.size() == 3);
    CHECK(rep.gaps[0] == SignedWord::empty());
    CHECK(rep.gaps[1] == SignedWord::positive(Word("b")));
    CHECK(rep.gaps[2] == SignedWord::empty());
    rep = empirical_gaps(Word("a"), SeqParams(2), 7);
    REQUIRE(rep.gaps.size() == 4);
    CHECK(rep.gaps[3] == SignedWord::positive(Word("b")));
    CHECK(rep.labels == "ABAB");

    rep = empirical_gaps(Word("aabaa"), SeqParams(2), 19);
    REQUIRE(rep.gaps.size() == 4);
    CHECK(rep.gaps[0] == SignedWord::inverse(Word("aa")));
    CHECK(rep.gaps[1] == SignedWord::inverse(Word("a")));
    CHECK(rep.gaps[2] == SignedWord::inverse(Word("aa")));
    CHECK(rep.gaps[3] == SignedWord::inverse(Word("a")));
    CHECK(rep.labels == "ABAB");
}

TEST_CASE("adaptive scan") {
    auto fixed = empirical_gaps(Word("aa"), SeqParams(2), 64);
    auto grown = empirical_first(Word("aa"), SeqParams(2), 10);
    REQUIRE(grown.positions.size() == 10);
    for (std::size_t t = 0; t < 10; ++t) CHECK(grown.positions[t] == fixed.positions[t]);
    CHECK_THROWS_AS(empirical_first(Word("b"), SeqParams(2), 1000000, 2048), OverflowError);
}

TEST_CASE("integer square root") {
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(1) == 1);
    CHECK(isqrt_u64(3) == 1);
    CHECK(isqrt_u64(4) == 2);
    CHECK(isqrt_u64(15241383936ull) == 123456);
    for (std::uint64_t n = 0; n < 3000; ++n) {
        const std::uint64_t r = isqrt_u64(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("geometric generator") {
    CHECK(cutting_prefix(SeqParams(2), 7).str() == "aabaaba");
    CHECK(cutting_prefix(SeqParams(3), 4).str() == "aaab");
    CHECK(cutting_prefix(SeqParams(2), 0).empty());
    for (int d = 2; d <= 5; ++d) {
        SeqParams dp(d);
        CHECK(cutting_prefix(dp, 2000) == fixed_point_prefix(dp, 2000));
    }
}

TEST_CASE("verification battery") {
    VerifyReport rep = verify_all(SeqParams(2), 2, 8, 20);
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) {
        INFO(c.check, ": ", c.counterexample);
        CHECK(c.pass);
    }

    // Degenerate bounds still pass trivially.
    CHECK(verify_all(SeqParams(2), 0, 1, 1).all_pass());
    CHECK(verify_all(SeqParams(3), 1, 4, 5).all_pass());
    CHECK_THROWS_AS(verify_all(SeqParams(2), -1, 1, 1), DomainError);
}
