#pragma once

#include <compare>
#include <vector>

#include "fibpart/fibbinary.hpp"

namespace fibpart {

// Phi_0 is the fibbinary set itself and Psi_0 its odd members (odfib).
// For k >= 1, Phi_k is the closure of the seed 4k - 1 under j -> 2j and
// j -> 4j + 1, and Psi_k holds its odd members. Together fib and the Phi_k
// partition the positive integers.

enum class SetKind { phi, psi };

struct SetId {
    SetKind kind = SetKind::phi;
    natural k = 0;

    friend bool operator==(const SetId&, const SetId&) = default;
};

/// Address (k, n) of a positive integer: fib(n) when k = 0, else phi(k, n).
struct PartitionCell {
    natural k = 0;
    natural n = 0;

    friend auto operator<=>(const PartitionCell&, const PartitionCell&) = default;
};

/// Split of an odd integer at the rightmost "11" of its binary form:
/// value = pp * 2^op_bitlen + op. pp = 0 when the value is already odfib.
struct OddSplit {
    natural pp = 0;
    natural op = 0;
    unsigned op_bitlen = 0;

    natural reassemble() const noexcept { return (pp << op_bitlen) | op; }

    friend bool operator==(const OddSplit&, const OddSplit&) = default;
};

/// Largest k whose seed 4k - 1 fits in 64 bits.
inline constexpr natural kMaxSetIndex = natural{1} << 62;

/// Seed 4k - 1 of Phi_k, k >= 1.
natural alpha(natural k);

/// Phi_k(n), n >= 1. phi(0, n) = fib(n); otherwise fib(n) + (2k - 1) 2^l(n).
natural phi(natural k, natural n);

/// Psi_k(n), n >= 0. psi(0, n) = odfib(n); otherwise
/// odfib(n) + (2k - 1) 2^bitlen(odfib(n)). psi(k, 0) = alpha(k).
natural psi(natural k, natural n);

/// Members of Phi_k that are <= limit, ascending, built from the seed by the
/// doubling and 4j + 1 rules alone.
std::vector<natural> generate_by_closure(natural k, natural limit);

/// Odd members of Phi_k that are <= limit, ascending.
std::vector<natural> psi_stream(natural k, natural limit);

/// PP:OP split of an odd m >= 1. Even m or m = 0 is invalid_domain.
OddSplit decompose_odd(natural m);

/// The unique cell holding m >= 1; phi(cell.k, cell.n) == m.
PartitionCell classify(natural m);

/// classify() plus the PP:OP split of the odd part of m.
struct Classification {
    natural m = 0;
    PartitionCell cell;
    OddSplit split;
};
Classification classify_detailed(natural m);

/// Value of the n-th member of the identified set.
natural set_member(SetId id, natural n);

/// Members of the identified set that are <= limit, ascending.
std::vector<natural> set_members(SetId id, natural limit);

} // namespace fibpart
