#include "palinseq/ap_analysis.hpp"

#include "palinseq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <omp.h>

#include <algorithm>
#include <random>

namespace palinseq {

namespace {

void validate(const APSpec& ap) {
    if (ap.first < 1) throw PreconditionFailed("ap: first term must be >= 1");
    if (ap.difference < 1) throw PreconditionFailed("ap: difference must be >= 1");
}

// Ascending divisors of n >= 1 by trial division.
std::vector<Natural> divisors(const Natural& n) {
    std::vector<Natural> small, large;
    const Natural root = boost::multiprecision::sqrt(n);
    for (Natural i = 1; i <= root; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Length of the all-palindrome run first, first+d, ... with terms <= bound.
Natural palindromic_run_length(const Natural& first, const Natural& d, const Natural& bound) {
    Natural len = 1;
    Natural t = first + d;
    while (t <= bound && is_palindrome(t)) {
        ++len;
        t += d;
    }
    return len;
}

// Maximal witnesses starting from one palindromic first term.
void search_from_first(const Natural& a, const Natural& max_value, const Natural& min_length,
                       std::vector<APWitness>& out) {
    const Natural dmax = (max_value - a) / (min_length - 1);
    for (Natural d = 1; d <= dmax; ++d) {
        if (a > d && is_palindrome(a - d)) continue;  // extendable to the left
        const Natural len = palindromic_run_length(a, d, max_value);
        if (len >= min_length) out.push_back({a, d, len, a + (len - 1) * d});
    }
}

}  // namespace

Natural termination_cap(const APSpec& ap) {
    validate(ap);
    std::size_t m = 1;
    while (pow10(m) <= ap.difference || pow10(2 * m) < ap.first) ++m;
    const Natural window_top = pow10(2 * m + 1);
    return (window_top - ap.first + ap.difference - 1) / ap.difference + 1;
}

std::optional<ScanReport> ap_scan_capped(const APSpec& ap, const Natural& cap) {
    validate(ap);
    if (cap < 1) throw PreconditionFailed("ap_scan: cap must be >= 1");
    Natural term = ap.first;
    for (Natural i = 0; i < cap; ++i, term += ap.difference) {
        if (!is_palindrome(term)) return ScanReport{i, term, i + 1, cap};
    }
    return std::nullopt;
}

ScanReport ap_scan(const APSpec& ap) {
    const Natural cap = termination_cap(ap);
    if (auto report = ap_scan_capped(ap, cap)) return *report;
    throw TheoryViolation("ap_scan: every term below the proven cap was palindromic");
}

APWitness longest_palindromic_ap(const Natural& first, const Natural& last) {
    if (first < 1 || !is_palindrome(first))
        throw PreconditionFailed("longest_palindromic_ap: first is not a positive palindrome");
    if (!is_palindrome(last)) throw PreconditionFailed("longest_palindromic_ap: last is not a palindrome");
    if (first >= last) throw PreconditionFailed("longest_palindromic_ap: first must be < last");

    const Natural span = last - first;
    // Ascending divisors give descending term counts, so the first fully
    // palindromic progression is the longest; d = span always qualifies.
    for (const Natural& d : divisors(span)) {
        bool all = true;
        for (Natural t = first + d; t < last; t += d) {
            if (!is_palindrome(t)) {
                all = false;
                break;
            }
        }
        if (all) return APWitness{first, d, span / d + 1, last};
    }
    throw TheoryViolation("longest_palindromic_ap: endpoint progression rejected");
}

std::vector<APWitness> exhaustive_ap_search(const Natural& max_value, const Natural& min_length,
                                            std::optional<std::uint64_t> seed) {
    if (max_value < 1) throw PreconditionFailed("exhaustive_ap_search: max_value must be >= 1");
    if (min_length < 3) throw PreconditionFailed("exhaustive_ap_search: min_length must be >= 3");

    std::vector<Natural> firsts;
    for (Natural a = 1; a + (min_length - 1) <= max_value; a = next_palindrome(a)) firsts.push_back(a);
    if (seed) std::shuffle(firsts.begin(), firsts.end(), std::mt19937_64(*seed));

    std::vector<std::vector<APWitness>> parts(firsts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(firsts.size()); ++k)
        search_from_first(firsts[k], max_value, min_length, parts[k]);

    std::vector<APWitness> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), [](const APWitness& x, const APWitness& y) {
        return x.first != y.first ? x.first < y.first : x.difference < y.difference;
    });
    return out;
}

namespace serial {

std::vector<APWitness> exhaustive_ap_search(const Natural& max_value, const Natural& min_length) {
    if (max_value < 1) throw PreconditionFailed("exhaustive_ap_search: max_value must be >= 1");
    if (min_length < 3) throw PreconditionFailed("exhaustive_ap_search: min_length must be >= 3");

    std::vector<APWitness> out;
    for (Natural a = 1; a + (min_length - 1) <= max_value; a = next_palindrome(a))
        search_from_first(a, max_value, min_length, out);
    return out;
}

}  // namespace serial

}  // namespace palinseq
