#pragma once

#include "palinseq/palindrome_seq.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace palinseq {

/// Arithmetic progression first + i * difference, both components >= 1.
struct APSpec {
    Natural first;
    Natural difference;
};

/// Outcome of a progression scan: the first non-palindromic term.
struct ScanReport {
    Natural failing_index;  // 0-based term index
    Natural failing_term;
    Natural terms_checked;  // failing_index + 1
    Natural cap_used;
};

/// A verified all-palindrome arithmetic progression.
struct APWitness {
    Natural first;
    Natural difference;
    Natural length;  // >= 2
    Natural last;    // first + (length - 1) * difference

    bool operator==(const APWitness&) const = default;
};

/// An index by which an AP scan is guaranteed to have hit a non-palindrome.
/// Let m be the smallest integer with 10^m > difference and 10^(2m) >= first;
/// the cap is ceil((10^(2m+1) - first) / difference) + 1. Inside
/// [10^(2m), 10^(2m+1)) consecutive palindromes are at least 10^m apart, so
/// some term with index below the cap falls strictly between two of them.
Natural termination_cap(const APSpec& ap);

/// Scan at most `cap` terms for the first non-palindrome; nullopt if every
/// scanned term was palindromic.
std::optional<ScanReport> ap_scan_capped(const APSpec& ap, const Natural& cap);

/// First non-palindromic term of the progression. Scans up to
/// termination_cap(ap) and throws TheoryViolation if nothing was found,
/// which would contradict the gap bound.
ScanReport ap_scan(const APSpec& ap);

/// Longest arithmetic progression of palindromes starting at `first` and
/// ending at `last`, maximizing term count over the divisors of
/// last - first; every term must be palindromic. Distinct divisors give
/// distinct lengths, so the maximum is unique; both endpoints alone always
/// qualify with difference last - first.
APWitness longest_palindromic_ap(const Natural& first, const Natural& last);

/// All maximal all-palindrome APs with every term <= max_value and length >=
/// min_length (>= 3). Maximal: neither first - difference nor
/// last + difference extends the run with a positive palindrome inside the
/// bound. Sorted by (first, difference). Parallel over first terms; `seed`
/// only shuffles the internal work order, never the result.
std::vector<APWitness> exhaustive_ap_search(const Natural& max_value, const Natural& min_length,
                                            std::optional<std::uint64_t> seed = std::nullopt);

namespace serial {
std::vector<APWitness> exhaustive_ap_search(const Natural& max_value, const Natural& min_length);
}

}  // namespace palinseq
