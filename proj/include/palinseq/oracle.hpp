#pragma once

#include "palinseq/palindrome_seq.hpp"

#include <cstdint>
#include <vector>

// Deliberately naive reference implementations used to validate the fast
// paths. Nothing here shares digit-extraction code with the digits module:
// palindromicity is decided by rebuilding the reversal through repeated
// division, and successors are found by incrementing.
namespace palinseq::oracle {

inline constexpr std::uint64_t kDefaultScanBound = 100'000'000;   // next_palindrome input limit
inline constexpr std::uint64_t kDefaultRangeBound = 100'000'000;  // enumerate span limit

bool is_palindrome(const Natural& n);

/// Smallest palindrome > n, by incrementing. Requires n <= bound.
Palindrome next_palindrome(const Natural& n, const Natural& bound = Natural(kDefaultScanBound));

/// All palindromes in [lo, hi], ascending, by testing every integer.
/// Requires hi - lo <= range_bound.
std::vector<Palindrome> enumerate(const Natural& lo, const Natural& hi,
                                  const Natural& range_bound = Natural(kDefaultRangeBound));

}  // namespace palinseq::oracle
