#pragma once

#include "palinseq/digits.hpp"

#include <vector>

namespace palinseq {

// A Palindrome is a Natural >= 1 whose digits are symmetric; operations that
// return one guarantee the invariant, operations that take one check it.
using Palindrome = Natural;

/// A pair of consecutive palindromes and the gap between them.
struct GapRecord {
    Palindrome lower;
    Palindrome upper;  // next_palindrome(lower)
    Natural gap;       // upper - lower
    Natural digit_length_lower;

    bool operator==(const GapRecord&) const = default;
};

/// Smallest palindrome strictly greater than n. Mirrors the leading half of
/// n onto its tail; if that does not exceed n, increments at the pivot digit,
/// carrying outward, and re-mirrors. All-9 inputs grow a digit: 999 -> 1001.
Palindrome next_palindrome(const Natural& n);

/// Largest palindrome strictly less than n; requires n >= 2.
Palindrome prev_palindrome(const Natural& n);

/// |P_L|: number of palindromes with exactly `length` digits,
/// 9 * 10^(ceil(L/2) - 1). Requires length >= 1.
Natural count_with_digits(const Natural& length);

/// 1-based index of p in the increasing sequence of positive palindromes.
Natural rank(const Palindrome& p);

/// The index-th positive palindrome; inverse of rank. Requires index >= 1.
Palindrome unrank(const Natural& index);

/// All consecutive-palindrome gaps whose lower endpoint lies in [lo, hi),
/// in increasing order. Parallel; identical to the serial reference.
std::vector<GapRecord> gaps_in_range(const Natural& lo, const Natural& hi);

namespace serial {
std::vector<GapRecord> gaps_in_range(const Natural& lo, const Natural& hi);
}

}  // namespace palinseq
