#include "fibpart/oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "fibpart/complement.hpp"
#include "fibpart/fibbinary.hpp"

using namespace fibpart;
using namespace fibpart::oracle;

TEST(Oracle, BinaryDigits) {
    EXPECT_EQ(binary_digits(0), "");
    EXPECT_EQ(binary_digits(1), "1");
    EXPECT_EQ(binary_digits(57), "111001");
}

TEST(Oracle, NaiveFibbinaryExamples) {
    EXPECT_TRUE(naive_is_fibbinary(21));
    EXPECT_FALSE(naive_is_fibbinary(3));
    EXPECT_TRUE(naive_is_fibbinary(0));
}

TEST(Oracle, NaiveFibbinaryAgreesWithBitTrick) {
    for (natural m = 0; m <= 1'000'000; ++m) {
        ASSERT_EQ(naive_is_fibbinary(m), is_fibbinary(m)) << m;
    }
}

TEST(Oracle, NaiveMembershipExamples) {
    EXPECT_TRUE(naive_membership(1, 13, 13));
    EXPECT_FALSE(naive_membership(1, 11, 13));
    EXPECT_TRUE(naive_membership(0, 1, 1));
    EXPECT_TRUE(naive_membership(3, 11, 13));
}

TEST(Oracle, ClosureAgreesWithGenerator) {
    const natural limit = natural{1} << 16;
    for (natural k = 0; k <= 16; ++k) {
        ASSERT_EQ(naive_closure(k, limit), generate_by_closure(k, limit)) << "k=" << k;
    }
}

TEST(Oracle, PartitionSmallRanges) {
    const VerificationReport r100 = verify_partition(100);
    EXPECT_TRUE(r100.ok());
    EXPECT_TRUE(r100.failures.empty());
    EXPECT_EQ(r100.checked, 100u);
    EXPECT_EQ(r100.range_lo, 1u);
    EXPECT_EQ(r100.range_hi, 100u);

    const VerificationReport r1 = verify_partition(1);
    EXPECT_EQ(r1.checked, 1u);
    EXPECT_TRUE(r1.failures.empty());
}

TEST(Oracle, FibMembersUpTo42LandInFib) {
    EXPECT_TRUE(verify_partition(42).ok());
    const std::vector<natural> listing{1,  2,  4,  5,  8,  9,  10, 16, 17, 18,
                                       20, 21, 32, 33, 34, 36, 37, 40, 41, 42};
    EXPECT_EQ(naive_closure(0, 42), listing);
    for (std::size_t i = 0; i < listing.size(); ++i) {
        EXPECT_EQ(classify(listing[i]), (PartitionCell{0, i + 1}));
    }
}

TEST(Oracle, UnionOfListedPrefixesCoversOneToHundred) {
    // Members <= 100 of fib and of each Phi_k, k = 1..25, are disjoint and
    // together cover 1..100.
    std::vector<int> hits(101, 0);
    for (natural k = 0; k <= 25; ++k) {
        for (const natural m : naive_closure(k, 100)) ++hits[m];
    }
    for (natural m = 1; m <= 100; ++m) EXPECT_EQ(hits[m], 1) << m;
}

TEST(Oracle, OddPartitionSmallRanges) {
    const VerificationReport r23 = verify_odd_partition(23);
    EXPECT_TRUE(r23.ok());
    EXPECT_EQ(r23.checked, 12u);
    for (natural k = 1; k <= 6; ++k) {
        const natural seed = 4 * k - 1;
        EXPECT_TRUE(naive_membership(k, seed, 23));
        EXPECT_EQ(decompose_odd(seed).pp, 2 * k - 1);
    }
    const VerificationReport r1 = verify_odd_partition(1);
    EXPECT_EQ(r1.checked, 1u);
    EXPECT_TRUE(r1.ok());
    EXPECT_EQ(odfib_rank(1), 0u);
}

TEST(Oracle, FiftySevenOnlyInPsiTwo) {
    EXPECT_TRUE(verify_odd_partition(57).ok());
    for (natural k = 0; k <= 15; ++k) {
        EXPECT_EQ(naive_membership(k, 57, 57), k == 2) << "k=" << k;
    }
}

TEST(Oracle, PartitionToOneMillion) {
    const VerificationReport report = verify_partition(1'000'000);
    EXPECT_TRUE(report.ok()) << report.summary();
    EXPECT_EQ(report.checked, 1'000'000u);
    EXPECT_EQ(report.summary(), "OK 1000000 checked");
}

TEST(Oracle, OddPartitionToOneMillion) {
    const VerificationReport report = verify_odd_partition(1'000'000);
    EXPECT_TRUE(report.ok()) << report.summary();
    EXPECT_EQ(report.checked, 500'000u);
}

TEST(Oracle, ReportsIndependentOfJobCount) {
    const VerificationReport single = verify_partition(200'000, 1);
    for (unsigned jobs : {2u, 3u, 7u, 16u}) {
        const VerificationReport split = verify_partition(200'000, jobs);
        EXPECT_EQ(split.summary(), single.summary());
        EXPECT_EQ(split.checked, single.checked);
        EXPECT_EQ(split.failures, single.failures);
    }
    const VerificationReport odd_single = verify_odd_partition(99'999, 1);
    const VerificationReport odd_split = verify_odd_partition(99'999, 5);
    EXPECT_EQ(odd_split.summary(), odd_single.summary());
    EXPECT_EQ(odd_split.checked, 50'000u);
    // More workers than values.
    EXPECT_EQ(verify_partition(3, 8).checked, 3u);
}

TEST(Oracle, ReportFormatting) {
    VerificationReport report;
    report.range_lo = 1;
    report.range_hi = 60;
    report.checked = 60;
    report.failure_count = 2;
    report.failures = {{57, "2,6", "2,7"}, {58, "uncovered", "error"}};
    EXPECT_FALSE(report.ok());
    EXPECT_EQ(report.summary(), "FAILED 2 of 60 checked");
    std::ostringstream os;
    report.write_failures(os);
    EXPECT_EQ(os.str(), "FAIL 57 2,6 2,7\nFAIL 58 uncovered error\n");
}
