#include "fibpart/fibbinary.hpp"

#include <gtest/gtest.h>

#include <string>

#include "fibpart/errors.hpp"
#include "test_support.hpp"

using namespace fibpart;

TEST(Fibbinary, FibOfExamples) {
    EXPECT_EQ(fib_of(0).value(), 0u);
    EXPECT_EQ(fib_of(12).value(), 21u);
    EXPECT_EQ(fib_of(33).value(), 85u);
    EXPECT_EQ(fib_of(20).value(), 42u);
}

TEST(Fibbinary, FibOfWidth) {
    // l(n) <= 64 exactly when n < F_66.
    const natural last = fibonacci(66) - 1;
    EXPECT_EQ(fib_of(last).bit_length(), 64u);
    EXPECT_THROW(fib_of(last + 1), width_overflow);
}

TEST(Fibbinary, RankExamples) {
    EXPECT_EQ(fib_rank(natural{0}), 0u);
    EXPECT_EQ(fib_rank(natural{21}), 12u);
    EXPECT_EQ(fib_rank(natural{42}), 20u);
    EXPECT_EQ(fib_rank(kLargestFibbinary), fibonacci(66) - 1);
}

TEST(Fibbinary, RankRejectsAdjacentOnes) {
    try {
        fib_rank(natural{0b101100});
        FAIL() << "expected invalid_domain";
    } catch (const invalid_domain& e) {
        EXPECT_NE(std::string(e.what()).find("bits 2,3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(FibbinaryNumber::from(3), invalid_domain);
}

TEST(Fibbinary, MembershipExamples) {
    EXPECT_TRUE(is_fibbinary(21));
    EXPECT_FALSE(is_fibbinary(3));
    EXPECT_FALSE(is_fibbinary(12));
    EXPECT_TRUE(is_fibbinary(0));
}

TEST(Fibbinary, OdfibExamples) {
    EXPECT_EQ(odfib_of(0).value(), 1u);
    EXPECT_EQ(odfib_of(2).value(), 9u);
    EXPECT_EQ(odfib_of(6).value(), 37u);
    EXPECT_EQ(odfib_rank(1), 0u);
    EXPECT_EQ(odfib_rank(37), 6u);
    EXPECT_EQ(odfib_rank(85), 12u);
}

TEST(Fibbinary, OdfibRankErrors) {
    EXPECT_THROW(odfib_rank(4), invalid_domain);   // even
    EXPECT_THROW(odfib_rank(7), invalid_domain);   // 3 mod 4
    EXPECT_THROW(odfib_rank(13), invalid_domain);  // (13-1)/4 = 3 has "11"
    EXPECT_THROW(odfib_of(fibonacci(64)), width_overflow);
}

TEST(Fibbinary, OdfibRankMatchesEnumeration) {
    // 85 is the 13th odd fibbinary number, so its index from 0 is 12.
    natural index = 0;
    for (const natural m : ref::filtered_fibbinary(100000)) {
        if (m % 2 == 0) continue;
        ASSERT_EQ(odfib_rank(m), index) << m;
        ASSERT_EQ(odfib_of(index).value(), m);
        ++index;
    }
}

TEST(Fibbinary, EvfibExamples) {
    EXPECT_EQ(evfib_of(1).value(), 2u);
    EXPECT_EQ(evfib_of(12).value(), 42u);
    EXPECT_EQ(evfib_of(4).value(), 10u);
    EXPECT_THROW(evfib_of(0), invalid_domain);
}

TEST(Fibbinary, StreamExamples) {
    auto values = [](natural limit) {
        std::vector<natural> out;
        for (const auto& e : fib_stream(limit)) out.push_back(e.value);
        return out;
    };
    EXPECT_EQ(values(5), (std::vector<natural>{1, 2, 4, 5}));
    EXPECT_EQ(values(1), (std::vector<natural>{1}));
    const auto upto42 = fib_stream(42);
    ASSERT_EQ(upto42.size(), 20u);
    EXPECT_EQ(upto42[17].value, 40u);
    EXPECT_EQ(upto42[18].value, 41u);
    EXPECT_EQ(upto42.back(), (FibbinaryEntry{42, 20, 6}));
    EXPECT_TRUE(fib_stream(0).empty());
}

TEST(Fibbinary, StreamMatchesFilteredOracle) {
    const auto oracle = ref::filtered_fibbinary(1u << 20);
    const auto stream = fib_stream(1u << 20);
    ASSERT_EQ(stream.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        ASSERT_EQ(stream[i].value, oracle[i]);
        ASSERT_EQ(stream[i].rank, i + 1);
        ASSERT_EQ(stream[i].subset, zr_length(i + 1));
    }
}

TEST(Fibbinary, SuccessorAtTheTop) {
    EXPECT_EQ(next_fibbinary(kLargestFibbinary - 1), kLargestFibbinary);
    EXPECT_EQ(next_fibbinary(0x8000000000000000ULL), 0x8000000000000001ULL);
    EXPECT_EQ(next_fibbinary(10), 16u);
    EXPECT_EQ(next_fibbinary(37), 40u);
    EXPECT_EQ(next_fibbinary(3), 4u);  // input need not be fibbinary
    EXPECT_THROW(next_fibbinary(kLargestFibbinary), width_overflow);
    FibbinaryStream stream;
    EXPECT_TRUE(stream.has_next());
}

TEST(Fibbinary, BijectionOnFirstMillion) {
    for (natural n = 0; n <= 1'000'000; ++n) {
        const FibbinaryNumber f = fib_of(n);
        ASSERT_TRUE(is_fibbinary(f.value()));
        ASSERT_EQ(fib_rank(f), n);
        if (n > 0) ASSERT_EQ(f.bit_length(), zr_length(n));
    }
}

TEST(Fibbinary, InverseBijectionOnFibbinaryValues) {
    for (const natural m : ref::filtered_fibbinary(1u << 20)) {
        ASSERT_EQ(fib_of(fib_rank(m)).value(), m);
    }
    for (int i = 0; i < 100000; ++i) {
        const natural m = ref::random_fibbinary(40);
        ASSERT_EQ(fib_of(fib_rank(m)).value(), m);
    }
    for (int i = 0; i < 100000; ++i) {
        const natural m = ref::random_fibbinary(64);
        ASSERT_EQ(fib_of(fib_rank(m)).value(), m);
    }
}

TEST(Fibbinary, OrderIsomorphism) {
    natural prev = 0;
    for (natural n = 1; n <= 100000; ++n) {
        const natural f = fib_of(n).value();
        ASSERT_LT(prev, f);
        prev = f;
    }
}

TEST(Fibbinary, SubsetMaximum) {
    for (unsigned k = 1; k <= 20; ++k) {
        // Largest k-bit fibbinary number is 1010...: alternating bits from the top.
        natural largest = 0;
        for (int b = static_cast<int>(k) - 1; b >= 0; b -= 2) largest |= natural{1} << b;
        EXPECT_EQ(fib_of(fibonacci(k + 2) - 1).value(), largest) << "k=" << k;
        EXPECT_EQ(fib_of(fibonacci(k + 2)).bit_length(), k + 1);
    }
}

TEST(Fibbinary, ParitySplit) {
    for (const natural m : ref::filtered_fibbinary(1u << 18)) {
        ASSERT_NE(m % 4, 3u) << m;
        if (m % 2 == 1) {
            ASSERT_EQ(odfib_of(odfib_rank(m)).value(), m);
        } else {
            ASSERT_EQ(evfib_of(fib_rank(m / 2)).value(), m);
        }
    }
}
