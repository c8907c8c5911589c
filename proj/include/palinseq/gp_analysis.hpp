#pragma once

#include "palinseq/palindrome_seq.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace palinseq {

/// Reduced positive fraction numerator/denominator.
struct Rational {
    Natural numerator;    // >= 1
    Natural denominator;  // >= 1, coprime to numerator

    bool operator==(const Rational&) const = default;
};

/// Builds a Rational in lowest terms; requires both parts >= 1.
Rational make_rational(const Natural& numerator, const Natural& denominator);

std::string to_string(const Rational& r);  // "p/q", or "p" when q = 1

/// Geometric progression first * ratio^i with first >= 1 and ratio >= 2.
struct GPSpec {
    Natural first;
    Natural ratio;
};

/// Exact count of L-digit palindromes divisible by q, next to the density
/// main term |P_L| / q.
struct DivisibilityCount {
    Natural digit_length;
    Natural modulus;
    Natural exact_count;
    Rational main_term;
};

/// Result of a GP palindrome scan. Unlike the AP case there is no proven
/// index bound, so running out of cap is a reportable outcome, not an error.
struct GpScanReport {
    bool cap_exceeded;      // true: every term up to the cap was palindromic
    Natural failing_index;  // meaningful only when !cap_exceeded
    Natural failing_term;   //   "
    Natural terms_checked;
    Natural cap_used;
};

/// Exact smallest k with digit_count(first * ratio^k) >= lambda * L, plus
/// the approximate lower bound ceil(lambda * L / (L + R - 2)) for reporting.
/// The bound is absent when L + R = 2 (its denominator vanishes).
struct MinIndexReport {
    Natural exact_index;
    std::optional<Natural> approx_bound;
};

/// Exact decision of 10^(L/2) / ratio^(L/(L+R-2)) < 1, taken by comparing
/// ratio^2 against 10^(L+R-2) in integers; no floating point.
struct AlphaDecision {
    bool alpha_below_one;   // ratio^2 > 10^(L+R-2)
    Natural ten_power;      // 10^(L+R-2)
    Natural ratio_squared;  // ratio^2
    Natural digits_first;   // L
    Natural digits_ratio;   // R
};

/// Smallest s >= 1 such that first * numerator^s is not divisible by
/// denominator^s, i.e. the first non-integer term of a GP with a genuinely
/// rational ratio. Requires denominator >= 2. Since the ratio is reduced
/// this is the smallest s with denominator^s not dividing first.
Natural integrality_failure_index(const Natural& first, const Rational& ratio);

MinIndexReport min_index_for_digits(const GPSpec& gp, const Natural& lambda);

/// Counts by constructing each palindrome from its free leading half, never
/// by filtering all L-digit integers. Requires 1 <= L <= max_enum_digits.
DivisibilityCount count_palindromes_divisible(const Natural& digit_length, const Natural& modulus,
                                              std::size_t max_enum_digits);

/// Same, with the bound taken from PALINSEQ_MAX_ENUM_L (default 13).
DivisibilityCount count_palindromes_divisible(const Natural& digit_length, const Natural& modulus);

AlphaDecision alpha_ratio(const GPSpec& gp);

/// Smallest B >= 1 with digit_count(ratio^B) > digit_count(first).
Natural subsequence_exponent(const GPSpec& gp);

inline constexpr std::uint64_t kDefaultGpScanCap = 10'000;
inline constexpr std::size_t kDefaultMaxEnumDigits = 13;

/// First non-palindromic term of the GP, up to `cap` terms. With check_gcd
/// set, first and ratio must each be coprime to 2, 3, 5 and 11.
GpScanReport gp_scan(const GPSpec& gp, bool check_gcd,
                     const Natural& cap = Natural(kDefaultGpScanCap));

/// Enumeration bound for count_palindromes_divisible: PALINSEQ_MAX_ENUM_L
/// when set to a positive integer, else 13.
std::size_t max_enumeration_digits();

namespace serial {
DivisibilityCount count_palindromes_divisible(const Natural& digit_length, const Natural& modulus,
                                              std::size_t max_enum_digits);
}

}  // namespace palinseq
