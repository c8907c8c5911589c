#include "palinseq/oracle.hpp"

#include "palinseq/errors.hpp"

#include <cstdint>

namespace palinseq::oracle {

namespace {

// Reversals of values below 10^18 cannot overflow 64 bits.
constexpr std::uint64_t kU64Safe = 999'999'999'999'999'999ULL;

bool u64_is_palindrome(std::uint64_t v) {
    std::uint64_t m = v;
    std::uint64_t reversed = 0;
    while (m > 0) {
        reversed = reversed * 10 + m % 10;
        m /= 10;
    }
    return reversed == v;
}

}  // namespace

bool is_palindrome(const Natural& n) {
    if (n < 0) throw PreconditionFailed("oracle is_palindrome: input must be non-negative");
    if (n <= kU64Safe) return u64_is_palindrome(n.convert_to<std::uint64_t>());

    Natural m = n;
    Natural reversed = 0;
    while (m > 0) {
        reversed = reversed * 10 + m % 10;
        m /= 10;
    }
    return reversed == n;
}

Palindrome next_palindrome(const Natural& n, const Natural& bound) {
    if (n < 0) throw PreconditionFailed("oracle next_palindrome: input must be non-negative");
    if (n > bound) throw PreconditionFailed("oracle next_palindrome: input exceeds the scan bound");

    if (n < kU64Safe / 2) {
        std::uint64_t m = n.convert_to<std::uint64_t>() + 1;
        while (!u64_is_palindrome(m)) ++m;
        return Natural(m);
    }
    Natural m = n + 1;
    while (!is_palindrome(m)) ++m;
    return m;
}

std::vector<Palindrome> enumerate(const Natural& lo, const Natural& hi, const Natural& range_bound) {
    if (lo < 0) throw PreconditionFailed("oracle enumerate: lo must be non-negative");
    if (hi < lo) throw PreconditionFailed("oracle enumerate: hi must be >= lo");
    if (hi - lo > range_bound) throw PreconditionFailed("oracle enumerate: range exceeds the bound");

    std::vector<Palindrome> out;
    for (Natural m = (lo < 1) ? Natural(1) : lo; m <= hi; ++m)
        if (is_palindrome(m)) out.push_back(m);
    return out;
}

}  // namespace palinseq::oracle
