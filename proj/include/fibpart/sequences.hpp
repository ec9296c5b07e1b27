#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "fibpart/complement.hpp"

namespace fibpart {

// Named integer sequences for OEIS-style export.
enum class Sequence { fib, odfib, evfib, phi, psi };

std::optional<Sequence> parse_sequence(std::string_view name);
std::string_view sequence_name(Sequence seq) noexcept;

/// Index of the first term: 1 for fib, evfib and phi_k; 0 for odfib and psi_k.
natural sequence_offset(Sequence seq) noexcept;

/// Term with index n (n >= offset). k selects Phi_k / Psi_k and is ignored
/// for the fib family.
natural sequence_term(Sequence seq, natural k, natural n);

/// Writes `count` lines "n a(n)" starting at the sequence offset.
void write_bfile(std::ostream& os, Sequence seq, natural k, natural count);

} // namespace fibpart
