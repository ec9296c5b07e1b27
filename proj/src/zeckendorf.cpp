#include "fibpart/zeckendorf.hpp"

#include <algorithm>
#include <string>

#include "fibpart/errors.hpp"

namespace fibpart {

namespace detail {

unsigned top_fib_index(natural n) noexcept {
    // F_2..F_93 is strictly increasing; find the last entry <= n.
    const auto first = kFibonacci.begin() + kMinFibIndex;
    const auto it = std::upper_bound(first, kFibonacci.end(), n);
    return static_cast<unsigned>(it - kFibonacci.begin()) - 1;
}

} // namespace detail

natural fibonacci(unsigned index) {
    if (index < kMinFibIndex) {
        throw invalid_domain("fibonacci: index " + std::to_string(index) +
                             " is below the first index 2");
    }
    if (index > kMaxFibIndex) {
        throw width_overflow("fibonacci: F_" + std::to_string(kMaxFibIndex + 1) +
                             " is the first index that does not fit in 64 bits");
    }
    return detail::kFibonacci[index];
}

bool ZeckendorfRep::coefficient(unsigned i) const noexcept {
    if (i < kMinFibIndex || i > top_index()) return false;
    return bits_[top_index() - i] == '1';
}

ZeckendorfRep ZeckendorfRep::parse(std::string_view bits) {
    if (bits.empty()) throw invalid_representation("zeckendorf: empty coefficient string");
    if (bits.front() != '1') {
        throw invalid_representation("zeckendorf: leading coefficient must be 1");
    }
    if (bits.size() > kMaxFibIndex - 1) {
        throw width_overflow("zeckendorf: " + std::to_string(bits.size()) +
                             " digits exceed the 64-bit width");
    }
    const unsigned top = static_cast<unsigned>(bits.size()) + 1;
    natural sum = 0;
    for (std::size_t pos = 0; pos < bits.size(); ++pos) {
        const char c = bits[pos];
        if (c != '0' && c != '1') {
            throw invalid_representation("zeckendorf: invalid digit '" + std::string(1, c) +
                                         "' at position " + std::to_string(pos));
        }
        if (c == '1' && pos > 0 && bits[pos - 1] == '1') {
            throw invalid_representation("zeckendorf: adjacent ones at positions " +
                                         std::to_string(pos - 1) + "," + std::to_string(pos));
        }
        if (c == '1') {
            const natural term = detail::kFibonacci[top - pos];
            if (__builtin_add_overflow(sum, term, &sum)) {
                throw width_overflow("zeckendorf: value exceeds the 64-bit width");
            }
        }
    }
    return ZeckendorfRep(std::string(bits), sum);
}

ZeckendorfRep zeckendorf_encode(natural n) {
    if (n == 0) throw invalid_domain("zeckendorf: 0 has no representation");
    const unsigned top = detail::top_fib_index(n);
    std::string bits(top - 1, '0');
    natural rest = n;
    for (unsigned i = top; i >= kMinFibIndex && rest != 0; --i) {
        if (detail::kFibonacci[i] <= rest) {
            bits[top - i] = '1';
            rest -= detail::kFibonacci[i];
            --i;  // next index cannot be used
            if (i < kMinFibIndex) break;
        }
    }
    return ZeckendorfRep(std::move(bits), n);
}

natural zeckendorf_decode(const ZeckendorfRep& rep) noexcept {
    natural sum = 0;
    for (unsigned i = kMinFibIndex; i <= rep.top_index(); ++i) {
        if (rep.coefficient(i)) sum += detail::kFibonacci[i];
    }
    return sum;
}

natural zeckendorf_decode(std::string_view bits) {
    return zeckendorf_decode(ZeckendorfRep::parse(bits));
}

unsigned zr_length(natural n) {
    if (n == 0) throw invalid_domain("zr_length: 0 has no representation");
    return detail::top_fib_index(n) - 1;
}

unsigned subset_index(natural n) { return zr_length(n); }

} // namespace fibpart
