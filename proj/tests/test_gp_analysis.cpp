#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "palinseq/errors.hpp"
#include "palinseq/gp_analysis.hpp"
#include "palinseq/oracle.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdlib>
#include <random>

using namespace palinseq;

TEST_CASE("rationals reduce on construction") {
    CHECK(make_rational(Natural(6), Natural(4)) == Rational{Natural(3), Natural(2)});
    CHECK(make_rational(Natural(9), Natural(3)) == Rational{Natural(3), Natural(1)});
    CHECK(to_string(make_rational(Natural(90), Natural(11))) == "90/11");
    CHECK(to_string(make_rational(Natural(9), Natural(3))) == "3");
    CHECK_THROWS_AS(make_rational(Natural(0), Natural(4)), PreconditionFailed);
    CHECK_THROWS_AS(make_rational(Natural(4), Natural(0)), PreconditionFailed);
}

TEST_CASE("integrality failure index on reference inputs") {
    CHECK(integrality_failure_index(Natural(8), make_rational(Natural(3), Natural(2))) == 4);
    CHECK(integrality_failure_index(Natural(1), make_rational(Natural(5), Natural(3))) == 1);
    CHECK(integrality_failure_index(Natural(9), make_rational(Natural(7), Natural(3))) == 3);

    CHECK_THROWS_AS(integrality_failure_index(Natural(8), make_rational(Natural(3), Natural(1))),
                    PreconditionFailed);
    CHECK_THROWS_AS(integrality_failure_index(Natural(0), make_rational(Natural(3), Natural(2))),
                    PreconditionFailed);
}

TEST_CASE("term before the failure index is an integer, the failure term is not") {
    using boost::multiprecision::pow;
    std::mt19937_64 rng(6174);
    std::uniform_int_distribution<int> first_dist(1, 10000), num_dist(1, 500), den_dist(2, 100);

    int done = 0;
    while (done < 150) {
        const Natural a(first_dist(rng));
        const Rational r = make_rational(Natural(num_dist(rng)), Natural(den_dist(rng)));
        if (r.denominator == 1) continue;
        ++done;

        const Natural s = integrality_failure_index(a, r);
        const auto e = s.convert_to<unsigned>();
        CHECK((a * pow(r.numerator, e)) % pow(r.denominator, e) != 0);
        if (e > 1) CHECK((a * pow(r.numerator, e - 1)) % pow(r.denominator, e - 1) == 0);
    }
}

TEST_CASE("smallest index reaching lambda times the digits") {
    const MinIndexReport two = min_index_for_digits({Natural(3), Natural(2)}, Natural(2));
    CHECK(two.exact_index == 2);  // 3 * 2^2 = 12 reaches two digits
    CHECK_FALSE(two.approx_bound.has_value());

    const MinIndexReport thirteen = min_index_for_digits({Natural(1), Natural(13)}, Natural(3));
    CHECK(thirteen.exact_index == 2);  // 13^2 = 169 reaches three digits
    REQUIRE(thirteen.approx_bound.has_value());
    CHECK(*thirteen.approx_bound == 3);
    CHECK(thirteen.exact_index >= *thirteen.approx_bound - 1);

    const MinIndexReport trivial = min_index_for_digits({Natural(9), Natural(2)}, Natural(1));
    CHECK(trivial.exact_index == 0);

    CHECK_THROWS_AS(min_index_for_digits({Natural(3), Natural(2)}, Natural(0)), PreconditionFailed);
}

TEST_CASE("exact index is non-decreasing in lambda and respects the reported bound") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> first_dist(1, 99999), ratio_dist(2, 9999);
    for (int trial = 0; trial < 50; ++trial) {
        const GPSpec gp{Natural(first_dist(rng)), Natural(ratio_dist(rng))};
        Natural prev = 0;
        for (int lambda = 1; lambda <= 6; ++lambda) {
            const MinIndexReport rep = min_index_for_digits(gp, Natural(lambda));
            CHECK(rep.exact_index >= prev);
            if (rep.approx_bound) CHECK(rep.exact_index >= *rep.approx_bound - 1);
            prev = rep.exact_index;
        }
    }
}

TEST_CASE("divisible palindrome counts on reference inputs") {
    const DivisibilityCount ones = count_palindromes_divisible(Natural(1), Natural(3));
    CHECK(ones.exact_count == 3);  // 3, 6, 9
    CHECK(ones.main_term == Rational{Natural(3), Natural(1)});

    const DivisibilityCount elevens = count_palindromes_divisible(Natural(2), Natural(11));
    CHECK(elevens.exact_count == 9);  // every two-digit palindrome
    CHECK(elevens.main_term == Rational{Natural(9), Natural(11)});

    const DivisibilityCount three_digit = count_palindromes_divisible(Natural(3), Natural(11));
    Natural filtered = 0;
    for (const Palindrome& p : oracle::enumerate(Natural(100), Natural(999)))
        if (p % 11 == 0) ++filtered;
    CHECK(three_digit.exact_count == filtered);
    CHECK(to_string(three_digit.main_term) == "90/11");
}

TEST_CASE("half-construction count equals filtering for short lengths") {
    const int moduli[] = {2, 3, 7, 11, 13, 25, 37, 50};
    for (std::size_t L = 1; L <= 5; ++L) {
        const Natural lo = (L == 1) ? Natural(1) : pow10(L - 1);
        const auto all = oracle::enumerate(lo, pow10(L) - 1);
        for (int q : moduli) {
            Natural filtered = 0;
            for (const Palindrome& p : all)
                if (p % q == 0) ++filtered;
            CHECK(count_palindromes_divisible(Natural(L), Natural(q)).exact_count == filtered);
        }
    }
}

TEST_CASE("enumeration bound is enforced and env-configurable") {
    unsetenv("PALINSEQ_MAX_ENUM_L");
    CHECK(max_enumeration_digits() == 13);
    CHECK_THROWS_AS(count_palindromes_divisible(Natural(14), Natural(7)), PreconditionFailed);

    setenv("PALINSEQ_MAX_ENUM_L", "14", 1);
    CHECK(max_enumeration_digits() == 14);
    // the all-nines value is the only 14-digit multiple of itself, and is a palindrome
    CHECK(count_palindromes_divisible(Natural(14), Natural("99999999999999")).exact_count == 1);
    unsetenv("PALINSEQ_MAX_ENUM_L");

    CHECK_THROWS_AS(count_palindromes_divisible(Natural(14), Natural(7), 13), PreconditionFailed);
}

TEST_CASE("count when the modulus exceeds every value of the length") {
    const DivisibilityCount none = count_palindromes_divisible(Natural(3), Natural(1000));
    CHECK(none.exact_count == 0);
    CHECK(none.main_term == Rational{Natural(9), Natural(100)});
}

TEST_CASE("parallel density count equals the serial reference") {
    const Natural qs[] = {Natural(7), Natural(11), Natural(12)};
    for (const Natural& q : qs) {
        for (std::size_t L : {7, 9, 10}) {
            const DivisibilityCount par = count_palindromes_divisible(Natural(L), q, 13);
            const DivisibilityCount ser = serial::count_palindromes_divisible(Natural(L), q, 13);
            CHECK(par.exact_count == ser.exact_count);
            CHECK(par.main_term == ser.main_term);
        }
    }
}

TEST_CASE("alpha decision by integer comparison") {
    const AlphaDecision big_ratio = alpha_ratio({Natural(121), Natural(10001)});
    CHECK(big_ratio.alpha_below_one);
    CHECK(big_ratio.ten_power == pow10(6));
    CHECK(big_ratio.ratio_squared == Natural(10001) * Natural(10001));
    CHECK(big_ratio.digits_first == 3);
    CHECK(big_ratio.digits_ratio == 5);

    const AlphaDecision small_ratio = alpha_ratio({Natural(121), Natural(11)});
    CHECK_FALSE(small_ratio.alpha_below_one);
    CHECK(small_ratio.ten_power == 1000);
    CHECK(small_ratio.ratio_squared == 121);

    const AlphaDecision tiny = alpha_ratio({Natural(9), Natural(99)});
    CHECK(tiny.alpha_below_one);

    CHECK_THROWS_AS(alpha_ratio({Natural(9), Natural(9)}), PreconditionFailed);  // L + R = 2
}

TEST_CASE("alpha decision matches a high-precision numeric evaluation") {
    using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<int> first_dist(1, 999999), ratio_dist(2, 99999999);

    for (int trial = 0; trial < 40; ++trial) {
        const GPSpec gp{Natural(first_dist(rng)), Natural(ratio_dist(rng))};
        const Natural L = digit_count(gp.first), R = digit_count(gp.ratio);
        if (L + R <= 2) continue;
        const AlphaDecision decision = alpha_ratio(gp);

        const Float200 Lf(L.str()), Rf(R.str()), rf(gp.ratio.str());
        const Float200 alpha =
            boost::multiprecision::pow(Float200(10), Lf / 2) / boost::multiprecision::pow(rf, Lf / (Lf + Rf - 2));
        if (decision.ratio_squared == decision.ten_power) {
            CHECK_FALSE(decision.alpha_below_one);
        } else {
            CHECK(decision.alpha_below_one == (alpha < 1));
        }
    }
}

TEST_CASE("subsequence exponent reaches more digits than the first term") {
    CHECK(subsequence_exponent({Natural(121), Natural(2)}) == 10);     // 2^10 = 1024
    CHECK(subsequence_exponent({Natural(9), Natural(13)}) == 1);
    CHECK(subsequence_exponent({Natural(10201), Natural(7)}) == 6);    // 7^6 = 117649
}

TEST_CASE("gp scan finds the first non-palindromic term") {
    const GpScanReport sevens = gp_scan({Natural(1), Natural(7)}, true);
    CHECK_FALSE(sevens.cap_exceeded);
    CHECK(sevens.failing_index == 2);
    CHECK(sevens.failing_term == 49);
    CHECK(sevens.terms_checked == 3);

    const GpScanReport thirteens = gp_scan({Natural(3), Natural(13)}, false);
    CHECK(thirteens.failing_index == 1);
    CHECK(thirteens.failing_term == 39);

    const GpScanReport doubling = gp_scan({Natural(11), Natural(2)}, false);
    CHECK(doubling.failing_index == 4);
    CHECK(doubling.failing_term == 176);
}

TEST_CASE("gp scan gcd precondition") {
    CHECK_THROWS_AS(gp_scan({Natural(11), Natural(2)}, true), PreconditionFailed);   // 11 | 11
    CHECK_THROWS_AS(gp_scan({Natural(7), Natural(10)}, true), PreconditionFailed);   // 2, 5 | 10
    CHECK_THROWS_AS(gp_scan({Natural(33), Natural(7)}, true), PreconditionFailed);   // 3 | 33
    CHECK_THROWS_AS(gp_scan({Natural(3), Natural(13)}, true), PreconditionFailed);   // 3 | 3
    CHECK_NOTHROW(gp_scan({Natural(7), Natural(13)}, true));
}

TEST_CASE("gp scan cap exhaustion is a report, not an error") {
    const GpScanReport r = gp_scan({Natural(1), Natural(7)}, true, Natural(2));
    CHECK(r.cap_exceeded);
    CHECK(r.terms_checked == 2);
    CHECK(r.cap_used == 2);
}

TEST_CASE("gp scan reports re-verify and terminate quickly on a small grid") {
    std::vector<Natural> firsts;
    for (Natural a = 1; a <= 200; a = next_palindrome(a))
        if (a % 2 != 0 && a % 3 != 0 && a % 5 != 0 && a % 11 != 0) firsts.push_back(a);

    for (const Natural& a : firsts) {
        for (int ratio = 2; ratio <= 200; ++ratio) {
            if (ratio % 2 == 0 || ratio % 3 == 0 || ratio % 5 == 0 || ratio % 11 == 0) continue;
            const GpScanReport r = gp_scan({a, Natural(ratio)}, true, Natural(50));
            REQUIRE_FALSE(r.cap_exceeded);

            Natural t = a;
            for (Natural i = 0; i < r.failing_index; ++i, t *= ratio) CHECK(oracle::is_palindrome(t));
            CHECK_FALSE(oracle::is_palindrome(r.failing_term));
            CHECK(t == r.failing_term);
        }
    }
}
