#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace fibpart {

using natural = std::uint64_t;

// Fibonacci numbers are indexed from 2: F_2 = 1, F_3 = 2, F_4 = 3, ...
inline constexpr unsigned kMinFibIndex = 2;
// F_93 = 12200160415121876738 is the last one below 2^64.
inline constexpr unsigned kMaxFibIndex = 93;

namespace detail {

inline constexpr std::array<natural, kMaxFibIndex + 1> kFibonacci = [] {
    std::array<natural, kMaxFibIndex + 1> f{};
    f[1] = 1;
    f[2] = 1;
    for (unsigned i = 3; i <= kMaxFibIndex; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}();

/// Largest index r with F_r <= n, for n >= 1.
unsigned top_fib_index(natural n) noexcept;

} // namespace detail

/// F_index. Throws width_overflow for index > kMaxFibIndex and
/// invalid_domain for index < 2.
natural fibonacci(unsigned index);

/// Coefficient string a_r ... a_2 of a positive integer, most significant
/// first. Always has a_r = 1 and no two adjacent ones.
class ZeckendorfRep {
public:
    /// Validates a string of '0'/'1'. Throws invalid_representation on bad
    /// characters, a leading zero or adjacent ones, width_overflow if the
    /// represented value needs more than 64 bits.
    static ZeckendorfRep parse(std::string_view bits);

    std::string_view bits() const noexcept { return bits_; }
    natural value() const noexcept { return value_; }

    /// Number of digits, l(n).
    unsigned length() const noexcept { return static_cast<unsigned>(bits_.size()); }
    /// r, the index of the leading coefficient.
    unsigned top_index() const noexcept { return length() + 1; }
    /// a_i for 2 <= i <= r; zero outside that range.
    bool coefficient(unsigned i) const noexcept;

    friend bool operator==(const ZeckendorfRep&, const ZeckendorfRep&) = default;

private:
    friend ZeckendorfRep zeckendorf_encode(natural n);
    ZeckendorfRep(std::string bits, natural value) : bits_(std::move(bits)), value_(value) {}

    std::string bits_;
    natural value_;
};

/// Greedy largest-Fibonacci-first decomposition. n = 0 is invalid_domain.
ZeckendorfRep zeckendorf_encode(natural n);

natural zeckendorf_decode(const ZeckendorfRep& rep) noexcept;
/// Parses and decodes in one step; same errors as ZeckendorfRep::parse.
natural zeckendorf_decode(std::string_view bits);

/// l(n): number of digits in the Zeckendorf representation of n >= 1.
unsigned zr_length(natural n);

/// Index k of the Fibonacci subset containing n, i.e. k = l(n).
/// Subset k has F_k members, the largest being F_{k+2} - 1.
unsigned subset_index(natural n);

} // namespace fibpart
