#include "fibpart/fibbinary.hpp"

#include <string>

#include "fibpart/errors.hpp"

namespace fibpart {

namespace {

[[noreturn]] void throw_adjacent_ones(const char* who, natural m) {
    const unsigned pos = static_cast<unsigned>(std::countr_zero(m & (m >> 1)));
    throw invalid_domain(std::string(who) + ": " + std::to_string(m) +
                         " is not fibbinary (adjacent ones at bits " + std::to_string(pos) +
                         "," + std::to_string(pos + 1) + ")");
}

} // namespace

FibbinaryNumber FibbinaryNumber::from(natural m) {
    if (!is_fibbinary(m)) throw_adjacent_ones("fibbinary", m);
    return FibbinaryNumber(m);
}

FibbinaryNumber fib_of(natural n) {
    if (n == 0) return FibbinaryNumber(0);
    const unsigned top = detail::top_fib_index(n);
    // Coefficient a_i lands on bit i - 2.
    if (top - kMinFibIndex >= 64) {
        throw width_overflow("fib: fib(" + std::to_string(n) + ") needs " +
                             std::to_string(top - 1) + " bits");
    }
    natural bits = 0;
    natural rest = n;
    for (unsigned i = top; rest != 0; --i) {
        if (detail::kFibonacci[i] <= rest) {
            bits |= natural{1} << (i - kMinFibIndex);
            rest -= detail::kFibonacci[i];
        }
    }
    return FibbinaryNumber(bits);
}

natural fib_rank(FibbinaryNumber m) noexcept {
    natural sum = 0;
    for (natural v = m.value(); v != 0; v &= v - 1) {
        sum += detail::kFibonacci[std::countr_zero(v) + kMinFibIndex];
    }
    return sum;
}

natural fib_rank(natural m) {
    return fib_rank(FibbinaryNumber::from(m));
}

FibbinaryNumber odfib_of(natural n) {
    const natural f = fib_of(n).value();
    if (f >> 62 != 0) {
        throw width_overflow("odfib: odfib(" + std::to_string(n) + ") exceeds 64 bits");
    }
    return FibbinaryNumber(4 * f + 1);
}

natural odfib_rank(natural m) {
    if (m % 4 != 1) {
        throw invalid_domain("odfib_rank: " + std::to_string(m) + " is not 1 mod 4");
    }
    const natural quarter = (m - 1) / 4;
    if (!is_fibbinary(quarter)) throw_adjacent_ones("odfib_rank", m);
    return fib_rank(FibbinaryNumber::from(quarter));
}

FibbinaryNumber evfib_of(natural n) {
    if (n == 0) throw invalid_domain("evfib: index starts at 1");
    const natural f = fib_of(n).value();
    if (f >> 63 != 0) {
        throw width_overflow("evfib: evfib(" + std::to_string(n) + ") exceeds 64 bits");
    }
    return FibbinaryNumber(2 * f);
}

natural next_fibbinary(natural m) {
    if (m >= kLargestFibbinary) {
        throw width_overflow("next_fibbinary: no fibbinary number above " + std::to_string(m) +
                             " fits in 64 bits");
    }
    natural x = m + 1;
    // Round the lowest "11" pair up to the next power of two and repeat.
    while (natural pairs = x & (x >> 1)) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(pairs));
        const natural low_mask = (natural{2} << i) - 1;  // bits 0..i+1
        x = (x | low_mask) + 1;
    }
    return x;
}

bool FibbinaryStream::has_next() const noexcept { return value_ < kLargestFibbinary; }

FibbinaryEntry FibbinaryStream::next() {
    value_ = next_fibbinary(value_);
    ++rank_;
    return FibbinaryEntry{value_, rank_, bit_length(value_)};
}

std::vector<FibbinaryEntry> fib_stream(natural limit) {
    std::vector<FibbinaryEntry> out;
    FibbinaryStream stream;
    while (stream.has_next()) {
        const FibbinaryEntry e = stream.next();
        if (e.value > limit) break;
        out.push_back(e);
    }
    return out;
}

} // namespace fibpart
