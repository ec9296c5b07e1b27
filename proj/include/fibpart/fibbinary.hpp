#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "fibpart/zeckendorf.hpp"

namespace fibpart {

/// True iff the binary representation of m has no two adjacent ones.
constexpr bool is_fibbinary(natural m) noexcept { return (m & (m >> 1)) == 0; }

constexpr unsigned bit_length(natural m) noexcept {
    return static_cast<unsigned>(std::bit_width(m));
}

/// A natural number whose binary digits satisfy the Zeckendorf condition.
class FibbinaryNumber {
public:
    constexpr FibbinaryNumber() noexcept = default;

    /// Throws invalid_domain naming the lowest adjacent-ones position.
    static FibbinaryNumber from(natural m);

    constexpr natural value() const noexcept { return value_; }
    constexpr unsigned bit_length() const noexcept { return fibpart::bit_length(value_); }

    friend constexpr auto operator<=>(FibbinaryNumber, FibbinaryNumber) noexcept = default;

private:
    friend FibbinaryNumber fib_of(natural n);
    friend FibbinaryNumber odfib_of(natural n);
    friend FibbinaryNumber evfib_of(natural n);
    friend natural next_fibbinary(natural m);
    constexpr explicit FibbinaryNumber(natural v) noexcept : value_(v) {}

    natural value_ = 0;
};

/// fib(n): z(n)'s coefficient string read in base 2. fib(0) = 0.
/// Throws width_overflow when l(n) > 64.
FibbinaryNumber fib_of(natural n);

/// Inverse of fib_of.
natural fib_rank(FibbinaryNumber m) noexcept;
/// Validating overload; non-fibbinary input is invalid_domain.
natural fib_rank(natural m);

/// odfib(n) = 4 fib(n) + 1, indexed from n = 0.
FibbinaryNumber odfib_of(natural n);
/// Requires m = 1 (mod 4) and (m - 1)/4 fibbinary.
natural odfib_rank(natural m);

/// evfib(n) = 2 fib(n), indexed from n = 1.
FibbinaryNumber evfib_of(natural n);

/// Largest fibbinary number representable in 64 bits, binary 1010...10.
inline constexpr natural kLargestFibbinary = 0xAAAAAAAAAAAAAAAAULL;

/// Smallest fibbinary number strictly greater than m (m need not be
/// fibbinary). Throws width_overflow past the largest 64-bit fibbinary.
natural next_fibbinary(natural m);

struct FibbinaryEntry {
    natural value;
    natural rank;    // n with fib(n) = value
    unsigned subset; // Fibonacci subset index, the bit length of value

    friend bool operator==(const FibbinaryEntry&, const FibbinaryEntry&) = default;
};

/// Ascending enumeration of fib(1), fib(2), ... by successor.
class FibbinaryStream {
public:
    /// False once the largest 64-bit fibbinary number has been emitted.
    bool has_next() const noexcept;
    FibbinaryEntry next();

private:
    natural value_ = 0;
    natural rank_ = 0;
};

/// All fibbinary numbers 1 <= m <= limit, ascending, with rank and subset.
std::vector<FibbinaryEntry> fib_stream(natural limit);

} // namespace fibpart
