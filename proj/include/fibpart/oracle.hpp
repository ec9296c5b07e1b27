#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fibpart/zeckendorf.hpp"

namespace fibpart::oracle {

// Brute-force reference implementations. Nothing here calls the bit tricks
// or closed forms it is used to check: membership comes from breadth-first
// closure of the seed, fibbinary tests from scanning a digit string, and
// ranks from the position in an enumerated, sorted set.

inline constexpr std::size_t kMaxReportedFailures = 100;

struct Failure {
    natural m = 0;
    std::string expected;
    std::string actual;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    natural range_lo = 0;
    natural range_hi = 0;
    natural checked = 0;
    natural failure_count = 0;      // total, including those not kept
    std::vector<Failure> failures;  // first kMaxReportedFailures, ascending m
    std::chrono::nanoseconds elapsed{0};

    bool ok() const noexcept { return failure_count == 0; }

    /// "OK <n> checked" or "FAILED <count> of <n> checked". Excludes timing so
    /// the text is identical across runs and job counts.
    std::string summary() const;
    /// One "FAIL m expected actual" line per kept failure.
    void write_failures(std::ostream& os) const;
};

/// Binary digit string of m, most significant first; "" for 0.
std::string binary_digits(natural m);

bool naive_is_fibbinary(natural m);

/// Members of Phi_k (k = 0: fib) up to limit, by breadth-first closure of the
/// seed under j -> 2j and j -> 4j + 1, sorted ascending.
std::vector<natural> naive_closure(natural k, natural limit);

bool naive_membership(natural k, natural m, natural limit);

/// Every m in [1, limit] must be classified to the cell the enumeration
/// assigns it, reproduce m through phi, and be covered by exactly one set.
/// Work is split over `jobs` threads; the report does not depend on jobs.
VerificationReport verify_partition(natural limit, unsigned jobs = 1);

/// Every odd m in [1, limit] must lie in exactly one Psi_k, agree with
/// psi_stream, and be recovered by its PP:OP split.
VerificationReport verify_odd_partition(natural limit, unsigned jobs = 1);

} // namespace fibpart::oracle
