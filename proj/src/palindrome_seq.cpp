#include "palinseq/palindrome_seq.hpp"

#include "palinseq/errors.hpp"

#include <omp.h>

#include <cstddef>

namespace palinseq {

namespace {

// Copy the leading ceil(L/2) digits onto the tail, reversed.
void mirror_first_half(DigitString& ds) {
    const std::size_t len = ds.digits.size();
    for (std::size_t i = 0; i < len / 2; ++i) ds.digits[len - 1 - i] = ds.digits[i];
}

// Palindromes with fewer than `length` digits.
Natural count_below_length(std::size_t length) {
    Natural total = 0;
    for (std::size_t j = 1; j < length; ++j) total += count_with_digits(Natural(j));
    return total;
}

}  // namespace

Palindrome next_palindrome(const Natural& n) {
    if (n < 0) throw PreconditionFailed("next_palindrome: input must be non-negative");
    if (n < 1) return Natural(1);

    DigitString ds = from_natural(n);
    const std::size_t len = ds.length();
    const std::size_t half = (len + 1) / 2;

    DigitString cand = ds;
    mirror_first_half(cand);
    Natural mirrored = to_natural(cand);
    if (mirrored > n) return mirrored;

    // Increment at the pivot and carry outward, then re-mirror.
    std::size_t i = half;
    while (i > 0 && cand.digits[i - 1] == 9) {
        cand.digits[i - 1] = 0;
        --i;
    }
    if (i == 0) return pow10(len) + 1;  // all-9 first half: digit count grows
    ++cand.digits[i - 1];
    mirror_first_half(cand);
    return to_natural(cand);
}

Palindrome prev_palindrome(const Natural& n) {
    if (n < 2) throw PreconditionFailed("prev_palindrome: no positive palindrome below input");

    DigitString cand = from_natural(n);
    const std::size_t len = cand.length();
    const std::size_t half = (len + 1) / 2;

    mirror_first_half(cand);
    Natural mirrored = to_natural(cand);
    if (mirrored < n) return mirrored;

    // Decrement at the pivot, borrowing outward. The first half cannot be all
    // zeros, so the loop stops at the latest on the leading digit.
    std::size_t i = half;
    while (cand.digits[i - 1] == 0) {
        cand.digits[i - 1] = 9;
        --i;
    }
    --cand.digits[i - 1];
    if (cand.digits[0] == 0) return pow10(len - 1) - 1;  // digit count shrinks: all 9s
    mirror_first_half(cand);
    return to_natural(cand);
}

Natural count_with_digits(const Natural& length) {
    if (length < 1) throw PreconditionFailed("count_with_digits: length must be >= 1");
    const auto L = length.convert_to<std::size_t>();
    return 9 * pow10((L + 1) / 2 - 1);
}

Natural rank(const Palindrome& p) {
    if (p < 1 || !is_palindrome(p)) throw PreconditionFailed("rank: input is not a positive palindrome");
    const DigitString ds = from_natural(p);
    const std::size_t len = ds.length();
    const std::size_t half = (len + 1) / 2;

    Natural prefix = 0;
    for (std::size_t i = 0; i < half; ++i) {
        prefix *= 10;
        prefix += ds.digits[i];
    }
    return count_below_length(len) + (prefix - pow10(half - 1) + 1);
}

Palindrome unrank(const Natural& index) {
    if (index < 1) throw PreconditionFailed("unrank: index must be >= 1");

    Natural cum = 0;
    std::size_t len = 1;
    for (;; ++len) {
        const Natural c = count_with_digits(Natural(len));
        if (cum + c >= index) break;
        cum += c;
    }
    const std::size_t half = (len + 1) / 2;
    const Natural prefix = pow10(half - 1) + (index - cum - 1);

    DigitString ds = from_natural(prefix);
    ds.digits.resize(len);
    mirror_first_half(ds);
    return to_natural(ds);
}

namespace serial {

std::vector<GapRecord> gaps_in_range(const Natural& lo, const Natural& hi) {
    if (lo < 0) throw PreconditionFailed("gaps_in_range: lo must be non-negative");
    if (lo >= hi) throw PreconditionFailed("gaps_in_range: lo must be < hi");

    std::vector<GapRecord> out;
    Natural p = (lo == 0) ? Natural(1) : next_palindrome(lo - 1);
    while (p < hi) {
        const Natural q = next_palindrome(p);
        out.push_back({p, q, q - p, digit_count(p)});
        p = q;
    }
    return out;
}

}  // namespace serial

std::vector<GapRecord> gaps_in_range(const Natural& lo, const Natural& hi) {
    if (lo < 0) throw PreconditionFailed("gaps_in_range: lo must be non-negative");
    if (lo >= hi) throw PreconditionFailed("gaps_in_range: lo must be < hi");

    const Natural span = hi - lo;
    const int chunks = omp_get_max_threads() * 4;
    if (chunks <= 1 || span <= 4096) return serial::gaps_in_range(lo, hi);

    std::vector<std::vector<GapRecord>> parts(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < chunks; ++k) {
        const Natural a = lo + span * k / chunks;
        const Natural b = (k + 1 == chunks) ? hi : lo + span * (k + 1) / chunks;
        parts[k] = serial::gaps_in_range(a, b);
    }

    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    std::vector<GapRecord> out;
    out.reserve(total);
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace palinseq
