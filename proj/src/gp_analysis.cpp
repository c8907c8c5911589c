#include "palinseq/gp_analysis.hpp"

#include "palinseq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace palinseq {

namespace {

void validate(const GPSpec& gp) {
    if (gp.first < 1) throw PreconditionFailed("gp: first term must be >= 1");
    if (gp.ratio < 2) throw PreconditionFailed("gp: ratio must be >= 2");
}

bool coprime_to_base_obstructions(const Natural& n) {
    return n % 2 != 0 && n % 3 != 0 && n % 5 != 0 && n % 11 != 0;
}

template <class T>
T pow10_t(std::size_t e) {
    T r = 1;
    while (e-- > 0) r *= 10;
    return r;
}

// Reversal of the w least significant digits of x.
template <class T>
T reverse_fixed(T x, std::size_t w) {
    T r = 0;
    for (std::size_t i = 0; i < w; ++i) {
        r = r * 10 + x % 10;
        x /= 10;
    }
    return r;
}

// Multiples of `modulus` among palindromes of `length` digits whose free
// leading half lies in [begin, end).
template <class T>
T count_multiples_in_half_range(T begin, T end, std::size_t length, const T& modulus) {
    const std::size_t half_len = (length + 1) / 2;
    const std::size_t tail = length - half_len;
    const T tail_pow = pow10_t<T>(tail);
    const bool odd = length % 2 == 1;
    T count = 0;
    for (T half = begin; half < end; ++half) {
        const T value = half * tail_pow + reverse_fixed(odd ? half / 10 : half, tail);
        if (value % modulus == 0) ++count;
    }
    return count;
}

struct EnumParams {
    std::size_t length;
    Natural half_begin;  // 10^(half_len - 1)
    Natural half_end;    // 10^half_len
};

EnumParams enum_params(const Natural& digit_length, const Natural& modulus, std::size_t max_enum_digits) {
    if (digit_length < 1) throw PreconditionFailed("count_palindromes_divisible: digit length must be >= 1");
    if (modulus < 2) throw PreconditionFailed("count_palindromes_divisible: modulus must be >= 2");
    if (digit_length > max_enum_digits)
        throw PreconditionFailed("count_palindromes_divisible: digit length exceeds the enumeration bound (" +
                                 std::to_string(max_enum_digits) + ")");
    const auto L = digit_length.convert_to<std::size_t>();
    const std::size_t half_len = (L + 1) / 2;
    return {L, pow10(half_len - 1), pow10(half_len)};
}

// Palindrome values fit std::uint64_t through 18 digits.
constexpr std::size_t kU64MaxLength = 18;

}  // namespace

Rational make_rational(const Natural& numerator, const Natural& denominator) {
    if (numerator < 1 || denominator < 1)
        throw PreconditionFailed("make_rational: numerator and denominator must be >= 1");
    const Natural g = boost::multiprecision::gcd(numerator, denominator);
    return Rational{numerator / g, denominator / g};
}

std::string to_string(const Rational& r) {
    return r.denominator == 1 ? r.numerator.str() : r.numerator.str() + "/" + r.denominator.str();
}

Natural integrality_failure_index(const Natural& first, const Rational& ratio) {
    if (first < 1) throw PreconditionFailed("integrality_failure_index: first term must be >= 1");
    if (ratio.denominator < 2)
        throw PreconditionFailed("integrality_failure_index: ratio is an integer, the claim is vacuous");
    // The ratio is reduced, so denominator^s divides first * numerator^s iff
    // it divides first.
    Natural s = 1;
    Natural power = ratio.denominator;
    while (first % power == 0) {
        ++s;
        power *= ratio.denominator;
    }
    return s;
}

MinIndexReport min_index_for_digits(const GPSpec& gp, const Natural& lambda) {
    validate(gp);
    if (lambda < 1) throw PreconditionFailed("min_index_for_digits: lambda must be >= 1");

    const Natural L = digit_count(gp.first);
    const Natural R = digit_count(gp.ratio);
    const Natural target = lambda * L;

    Natural k = 0;
    Natural term = gp.first;
    while (digit_count(term) < target) {
        ++k;
        term *= gp.ratio;
    }

    std::optional<Natural> bound;
    if (L + R > 2) {
        const Natural den = L + R - 2;
        bound = (lambda * L + den - 1) / den;
    }
    return {k, bound};
}

DivisibilityCount count_palindromes_divisible(const Natural& digit_length, const Natural& modulus,
                                              std::size_t max_enum_digits) {
    const EnumParams p = enum_params(digit_length, modulus, max_enum_digits);
    const Rational main_term = make_rational(count_with_digits(digit_length), modulus);

    if (modulus >= pow10(p.length))  // no L-digit multiple exists
        return {digit_length, modulus, Natural(0), main_term};

    Natural exact;
    if (p.length <= kU64MaxLength) {
        const auto begin = p.half_begin.convert_to<std::uint64_t>();
        const auto end = p.half_end.convert_to<std::uint64_t>();
        const auto q = modulus.convert_to<std::uint64_t>();
        const std::uint64_t chunks = std::min<std::uint64_t>(end - begin, omp_get_max_threads() * 8);
        std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(chunks); ++k) {
            const std::uint64_t a = begin + (end - begin) * k / chunks;
            const std::uint64_t b = begin + (end - begin) * (k + 1) / chunks;
            total += count_multiples_in_half_range<std::uint64_t>(a, b, p.length, q);
        }
        exact = total;
    } else {
        const Natural span = p.half_end - p.half_begin;
        const int chunks = omp_get_max_threads() * 4;
        std::vector<Natural> partial(chunks, Natural(0));
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < chunks; ++k) {
            const Natural a = p.half_begin + span * k / chunks;
            const Natural b = p.half_begin + span * (k + 1) / chunks;
            partial[k] = count_multiples_in_half_range<Natural>(a, b, p.length, modulus);
        }
        exact = 0;
        for (const Natural& c : partial) exact += c;
    }
    return {digit_length, modulus, exact, main_term};
}

DivisibilityCount count_palindromes_divisible(const Natural& digit_length, const Natural& modulus) {
    return count_palindromes_divisible(digit_length, modulus, max_enumeration_digits());
}

AlphaDecision alpha_ratio(const GPSpec& gp) {
    validate(gp);
    const Natural L = digit_count(gp.first);
    const Natural R = digit_count(gp.ratio);
    if (L + R <= 2) throw PreconditionFailed("alpha_ratio: requires L + R > 2");

    const Natural ten_power = pow10((L + R - 2).convert_to<std::size_t>());
    const Natural r2 = gp.ratio * gp.ratio;
    return {r2 > ten_power, ten_power, r2, L, R};
}

Natural subsequence_exponent(const GPSpec& gp) {
    validate(gp);
    const Natural target = digit_count(gp.first);
    Natural b = 1;
    Natural power = gp.ratio;
    while (digit_count(power) <= target) {
        ++b;
        power *= gp.ratio;
    }
    return b;
}

GpScanReport gp_scan(const GPSpec& gp, bool check_gcd, const Natural& cap) {
    validate(gp);
    if (cap < 1) throw PreconditionFailed("gp_scan: cap must be >= 1");
    if (check_gcd && !(coprime_to_base_obstructions(gp.first) && coprime_to_base_obstructions(gp.ratio)))
        throw PreconditionFailed("gp_scan: first and ratio must each be coprime to 2, 3, 5 and 11");

    Natural term = gp.first;
    for (Natural i = 0; i < cap; ++i, term *= gp.ratio) {
        if (!is_palindrome(term)) return {false, i, term, i + 1, cap};
    }
    return {true, Natural(0), Natural(0), cap, cap};
}

std::size_t max_enumeration_digits() {
    if (const char* env = std::getenv("PALINSEQ_MAX_ENUM_L")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxEnumDigits;
}

namespace serial {

DivisibilityCount count_palindromes_divisible(const Natural& digit_length, const Natural& modulus,
                                              std::size_t max_enum_digits) {
    const EnumParams p = enum_params(digit_length, modulus, max_enum_digits);
    const Rational main_term = make_rational(count_with_digits(digit_length), modulus);

    if (modulus >= pow10(p.length)) return {digit_length, modulus, Natural(0), main_term};

    Natural exact;
    if (p.length <= kU64MaxLength) {
        exact = count_multiples_in_half_range<std::uint64_t>(p.half_begin.convert_to<std::uint64_t>(),
                                                             p.half_end.convert_to<std::uint64_t>(), p.length,
                                                             modulus.convert_to<std::uint64_t>());
    } else {
        exact = count_multiples_in_half_range<Natural>(p.half_begin, p.half_end, p.length, modulus);
    }
    return {digit_length, modulus, exact, main_term};
}

}  // namespace serial

}  // namespace palinseq
