#include "fibpart/sequences.hpp"

#include <ostream>

namespace fibpart {

std::optional<Sequence> parse_sequence(std::string_view name) {
    if (name == "fib") return Sequence::fib;
    if (name == "odfib") return Sequence::odfib;
    if (name == "evfib") return Sequence::evfib;
    if (name == "phi") return Sequence::phi;
    if (name == "psi") return Sequence::psi;
    return std::nullopt;
}

std::string_view sequence_name(Sequence seq) noexcept {
    switch (seq) {
        case Sequence::fib: return "fib";
        case Sequence::odfib: return "odfib";
        case Sequence::evfib: return "evfib";
        case Sequence::phi: return "phi";
        case Sequence::psi: return "psi";
    }
    return "?";
}

natural sequence_offset(Sequence seq) noexcept {
    return seq == Sequence::odfib || seq == Sequence::psi ? 0 : 1;
}

natural sequence_term(Sequence seq, natural k, natural n) {
    switch (seq) {
        case Sequence::fib: return phi(0, n);
        case Sequence::odfib: return psi(0, n);
        case Sequence::evfib: return evfib_of(n).value();
        case Sequence::phi: return phi(k, n);
        case Sequence::psi: return psi(k, n);
    }
    return 0;
}

void write_bfile(std::ostream& os, Sequence seq, natural k, natural count) {
    const natural first = sequence_offset(seq);
    for (natural i = 0; i < count; ++i) {
        const natural n = first + i;
        os << n << ' ' << sequence_term(seq, k, n) << '\n';
    }
}

} // namespace fibpart
