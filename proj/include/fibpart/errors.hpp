#pragma once

#include <stdexcept>
#include <string>

namespace fibpart {

/// Argument outside the domain of an operation (n = 0 where positives are
/// required, a non-fibbinary rank query, an even input to an odd split).
class invalid_domain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result or intermediate value does not fit the 64-bit width.
class width_overflow : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Malformed textual representation (bad digits, adjacent ones, leading zero).
class invalid_representation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace fibpart
