#include "fibpart/complement.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fibpart/errors.hpp"

namespace fibpart {

namespace {

// (2k - 1) * 2^shift + low, where low < 2^shift.
natural attach_principal(natural k, natural low, unsigned shift, const char* who) {
    const natural pp = 2 * k - 1;
    if (bit_length(pp) + shift > 64) {
        throw width_overflow(std::string(who) + ": value for k=" + std::to_string(k) +
                             " exceeds 64 bits");
    }
    return (pp << shift) | low;
}

void check_set_index(natural k, const char* who) {
    if (k > kMaxSetIndex) {
        throw width_overflow(std::string(who) + ": k=" + std::to_string(k) +
                             " exceeds the largest set index 2^62");
    }
}

} // namespace

natural alpha(natural k) {
    if (k == 0) throw invalid_domain("alpha: k must be >= 1");
    check_set_index(k, "alpha");
    return 4 * k - 1;
}

natural phi(natural k, natural n) {
    if (n == 0) {
        throw invalid_domain("phi: Phi_" + std::to_string(k) + "(0) is undefined");
    }
    check_set_index(k, "phi");
    const FibbinaryNumber f = fib_of(n);
    if (k == 0) return f.value();
    return attach_principal(k, f.value(), f.bit_length(), "phi");
}

natural psi(natural k, natural n) {
    check_set_index(k, "psi");
    const FibbinaryNumber o = odfib_of(n);
    if (k == 0) return o.value();
    return attach_principal(k, o.value(), o.bit_length(), "psi");
}

std::vector<natural> generate_by_closure(natural k, natural limit) {
    const natural seed = k == 0 ? 1 : alpha(k);
    std::vector<natural> out;
    if (limit < seed) return out;
    // Each member has a unique parent, so the closure is a tree: no dedup.
    std::vector<natural> pending{seed};
    while (!pending.empty()) {
        const natural j = pending.back();
        pending.pop_back();
        out.push_back(j);
        if (j <= limit / 2) pending.push_back(2 * j);
        if (j <= (limit - 1) / 4) pending.push_back(4 * j + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<natural> psi_stream(natural k, natural limit) {
    std::vector<natural> out = generate_by_closure(k, limit);
    std::erase_if(out, [](natural m) { return m % 2 == 0; });
    return out;
}

OddSplit decompose_odd(natural m) {
    if (m % 2 == 0) {
        throw invalid_domain("decompose_odd: " + std::to_string(m) + " is not odd");
    }
    const natural pairs = m & (m >> 1);
    if (pairs == 0) return OddSplit{0, m, bit_length(m)};
    // Bits i+1 and i form the rightmost "11"; the colon goes between them.
    const unsigned i = static_cast<unsigned>(std::countr_zero(pairs));
    const unsigned op_bitlen = i + 1;
    const natural op = m & ((natural{1} << op_bitlen) - 1);
    return OddSplit{m >> op_bitlen, op, op_bitlen};
}

Classification classify_detailed(natural m) {
    if (m == 0) throw invalid_domain("classify: 0 is not a positive integer");
    const unsigned twos = static_cast<unsigned>(std::countr_zero(m));
    const OddSplit split = decompose_odd(m >> twos);
    if (split.pp == 0) {
        return Classification{m, PartitionCell{0, fib_rank(FibbinaryNumber::from(m))}, split};
    }
    // m = (pp * 2^op_bitlen + op) * 2^twos, and op * 2^twos is fib(n).
    const natural residue = split.op << twos;
    const natural k = (split.pp + 1) / 2;
    return Classification{m, PartitionCell{k, fib_rank(FibbinaryNumber::from(residue))}, split};
}

PartitionCell classify(natural m) {
    if (m == 0) throw invalid_domain("classify: 0 is not a positive integer");
    if (is_fibbinary(m)) return PartitionCell{0, fib_rank(FibbinaryNumber::from(m))};
    return classify_detailed(m).cell;
}

natural set_member(SetId id, natural n) {
    return id.kind == SetKind::phi ? phi(id.k, n) : psi(id.k, n);
}

std::vector<natural> set_members(SetId id, natural limit) {
    return id.kind == SetKind::phi ? generate_by_closure(id.k, limit) : psi_stream(id.k, limit);
}

} // namespace fibpart
