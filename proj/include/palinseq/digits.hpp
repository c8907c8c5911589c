#pragma once

#include "palinseq/natural.hpp"

#include <cstdint>
#include <vector>

namespace palinseq {

/// Base-10 digit sequence, most significant digit first. Canonical form has
/// no leading zero; the value 0 is the single digit [0].
struct DigitString {
    std::vector<std::uint8_t> digits;

    std::size_t length() const { return digits.size(); }
    bool operator==(const DigitString&) const = default;
};

/// Decimal digits of n, most significant first.
DigitString from_natural(const Natural& n);

/// Inverse of from_natural. Rejects empty input, leading zeros on
/// multi-digit input and digits outside [0, 9].
Natural to_natural(const DigitString& ds);

/// True iff the decimal digits of n read the same in both directions.
bool is_palindrome(const Natural& n);

/// Number of decimal digits of n; equals 1 + floor(log10 n) for n >= 1.
Natural digit_count(const Natural& n);

/// Same as digit_count, as a machine integer.
std::size_t decimal_length(const Natural& n);

}  // namespace palinseq
