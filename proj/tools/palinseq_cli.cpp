// Command-line front end for the palindrome sequence library. Every
// subcommand prints one result object in text, json or csv form; json keeps
// a stable key order and serializes all numbers as decimal strings, so
// arbitrarily large values survive any consumer.
//
// Exit codes: 0 success, 1 usage or precondition error, 2 scan cap
// exceeded, 3 theory violation (including --oracle differential mismatch).

#include "CLI11.hpp"
#include "json.hpp"

#include "palinseq/ap_analysis.hpp"
#include "palinseq/errors.hpp"
#include "palinseq/gp_analysis.hpp"
#include "palinseq/oracle.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace palinseq;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitTheoryViolation = 3;

// Differential bound for the brute-force --oracle paths that walk a whole
// interval (ap longest, ap search).
const Natural kOracleSpanBound(1'000'000);

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct GlobalOpts {
    Format format = Format::text;
    std::optional<Natural> cap;
    bool oracle = false;
    std::optional<std::uint64_t> seed;
};

Natural parse_natural(const std::string& raw, const std::string& name) {
    const bool ok = !raw.empty() && std::all_of(raw.begin(), raw.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
    if (!ok) throw UsageError("argument <" + name + "> is not a decimal number: '" + raw + "'");
    return Natural(raw);
}

Rational parse_rational(const std::string& raw, const std::string& name) {
    const auto slash = raw.find('/');
    if (slash == std::string::npos || raw.find('/', slash + 1) != std::string::npos)
        throw UsageError("argument <" + name + "> must have the form <p>/<q>: '" + raw + "'");
    const Natural p = parse_natural(raw.substr(0, slash), name);
    const Natural q = parse_natural(raw.substr(slash + 1), name);
    if (p < 1 || q < 1) throw UsageError("argument <" + name + "> must be a positive fraction");
    return make_rational(p, q);
}

void require_match(bool ok, const std::string& what, const std::string& fast, const std::string& oracle_val) {
    if (!ok)
        throw OracleMismatch("oracle mismatch in " + what + ": fast path " + fast + ", oracle " + oracle_val);
}

std::string cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Renders one flat result object; `records_key` marks the field holding the
// row array for csv/text, `columns` pins the csv header for it.
void emit(const GlobalOpts& opts, const ordered_json& obj, const char* records_key = nullptr,
          const std::vector<std::string>& columns = {}) {
    switch (opts.format) {
        case Format::json:
            std::cout << obj.dump() << "\n";
            return;
        case Format::csv: {
            if (records_key != nullptr) {
                const auto& records = obj.at(records_key);
                for (std::size_t i = 0; i < columns.size(); ++i)
                    std::cout << (i ? "," : "") << columns[i];
                std::cout << "\n";
                for (const auto& rec : records) {
                    for (std::size_t i = 0; i < columns.size(); ++i)
                        std::cout << (i ? "," : "") << cell(rec.at(columns[i]));
                    std::cout << "\n";
                }
            } else {
                bool first = true;
                for (const auto& item : obj.items()) {
                    std::cout << (first ? "" : ",") << item.key();
                    first = false;
                }
                std::cout << "\n";
                first = true;
                for (const auto& item : obj.items()) {
                    std::cout << (first ? "" : ",") << cell(item.value());
                    first = false;
                }
                std::cout << "\n";
            }
            return;
        }
        case Format::text:
            for (const auto& item : obj.items()) {
                if (records_key != nullptr && item.key() == records_key) {
                    std::cout << item.key() << ":\n";
                    for (const auto& rec : item.value()) {
                        std::cout << " ";
                        for (const auto& field : rec.items())
                            std::cout << " " << field.key() << "=" << cell(field.value());
                        std::cout << "\n";
                    }
                } else {
                    std::cout << item.key() << ": " << (item.value().is_null() ? "n/a" : cell(item.value()))
                              << "\n";
                }
            }
            return;
    }
}

std::string format_ratio_fixed(const Natural& num, const Natural& den, std::size_t places = 6) {
    const Natural scale = pow10(places);
    const Natural scaled = (num * scale + den / 2) / den;
    const Natural integral = scaled / scale;
    std::string frac = Natural(scaled % scale).str();
    frac.insert(0, places - frac.size(), '0');
    return integral.str() + "." + frac;
}

// Digit count by repeated division; deliberately avoids the digits module
// so --oracle re-derivations stay independent.
Natural division_digit_count(const Natural& n) {
    Natural count = 1;
    Natural m = n / 10;
    while (m > 0) {
        ++count;
        m /= 10;
    }
    return count;
}

// ---------------------------------------------------------------- handlers

int run_next(const std::string& n_raw, const GlobalOpts& opts) {
    const Natural n = parse_natural(n_raw, "n");
    const Palindrome result = next_palindrome(n);
    if (opts.oracle) {
        const Palindrome check = oracle::next_palindrome(n);
        require_match(result == check, "next", result.str(), check.str());
    }
    ordered_json obj;
    obj["input"] = n.str();
    obj["next"] = result.str();
    emit(opts, obj);
    return kExitOk;
}

int run_prev(const std::string& n_raw, const GlobalOpts& opts) {
    const Natural n = parse_natural(n_raw, "n");
    const Palindrome result = prev_palindrome(n);
    if (opts.oracle) {
        if (n > Natural(oracle::kDefaultScanBound))
            throw PreconditionFailed("--oracle: input exceeds the oracle scan bound");
        Natural check = n - 1;
        while (check > 1 && !oracle::is_palindrome(check)) --check;
        require_match(result == check, "prev", result.str(), check.str());
    }
    ordered_json obj;
    obj["input"] = n.str();
    obj["prev"] = result.str();
    emit(opts, obj);
    return kExitOk;
}

int run_rank(const std::string& p_raw, const GlobalOpts& opts) {
    const Natural p = parse_natural(p_raw, "p");
    const Natural result = rank(p);
    if (opts.oracle) {
        const auto all = oracle::enumerate(Natural(1), p);
        require_match(Natural(all.size()) == result && all.back() == p, "rank", result.str(),
                      std::to_string(all.size()));
    }
    ordered_json obj;
    obj["palindrome"] = p.str();
    obj["rank"] = result.str();
    emit(opts, obj);
    return kExitOk;
}

int run_unrank(const std::string& i_raw, const GlobalOpts& opts) {
    const Natural i = parse_natural(i_raw, "i");
    const Palindrome result = unrank(i);
    if (opts.oracle) {
        const auto all = oracle::enumerate(Natural(1), result);
        require_match(Natural(all.size()) == i && all.back() == result, "unrank", result.str(),
                      std::to_string(all.size()));
    }
    ordered_json obj;
    obj["index"] = i.str();
    obj["palindrome"] = result.str();
    emit(opts, obj);
    return kExitOk;
}

int run_count_digits(const std::string& L_raw, const GlobalOpts& opts) {
    const Natural L = parse_natural(L_raw, "L");
    const Natural result = count_with_digits(L);
    if (opts.oracle) {
        const Natural lo = (L == 1) ? Natural(1) : pow10((L - 1).convert_to<std::size_t>());
        const auto all = oracle::enumerate(lo, pow10(L.convert_to<std::size_t>()) - 1);
        require_match(Natural(all.size()) == result, "count-digits", result.str(),
                      std::to_string(all.size()));
    }
    ordered_json obj;
    obj["digits"] = L.str();
    obj["count"] = result.str();
    emit(opts, obj);
    return kExitOk;
}

int run_gaps(const std::string& lo_raw, const std::string& hi_raw, const GlobalOpts& opts) {
    const Natural lo = parse_natural(lo_raw, "lo");
    const Natural hi = parse_natural(hi_raw, "hi");
    const auto records = gaps_in_range(lo, hi);

    if (opts.oracle) {
        if (hi > Natural(oracle::kDefaultScanBound))
            throw PreconditionFailed("--oracle: range exceeds the oracle scan bound");
        std::vector<GapRecord> check;
        Natural p = (lo == 0) ? Natural(1) : oracle::next_palindrome(lo - 1);
        while (p < hi) {
            const Natural q = oracle::next_palindrome(p);
            check.push_back({p, q, q - p, division_digit_count(p)});
            p = q;
        }
        require_match(records == check, "gaps", std::to_string(records.size()),
                      std::to_string(check.size()));
    }

    ordered_json obj;
    obj["lo"] = lo.str();
    obj["hi"] = hi.str();
    obj["count"] = std::to_string(records.size());
    ordered_json rows = ordered_json::array();
    for (const GapRecord& r : records) {
        ordered_json row;
        row["lower"] = r.lower.str();
        row["upper"] = r.upper.str();
        row["gap"] = r.gap.str();
        row["digits"] = r.digit_length_lower.str();
        rows.push_back(std::move(row));
    }
    obj["records"] = std::move(rows);
    emit(opts, obj, "records", {"lower", "upper", "gap", "digits"});
    return kExitOk;
}

void verify_scan_terms_against_oracle(const Natural& first, const Natural& step, bool geometric,
                                      const Natural& failing_index, const Natural& failing_term) {
    Natural t = first;
    for (Natural i = 0; i < failing_index; ++i) {
        if (!oracle::is_palindrome(t))
            throw OracleMismatch("oracle mismatch in scan: term at index " + i.str() +
                                 " is not a palindrome: " + t.str());
        if (geometric)
            t *= step;
        else
            t += step;
    }
    if (t != failing_term || oracle::is_palindrome(t))
        throw OracleMismatch("oracle mismatch in scan: failing term " + failing_term.str());
}

int run_ap_scan(const std::string& a_raw, const std::string& d_raw, const GlobalOpts& opts) {
    const APSpec spec{parse_natural(a_raw, "a"), parse_natural(d_raw, "d")};

    ScanReport report;
    const Natural proven = termination_cap(spec);
    if (opts.cap && *opts.cap < proven) {
        const auto capped = ap_scan_capped(spec, *opts.cap);
        if (!capped) {
            ordered_json obj;
            obj["first"] = spec.first.str();
            obj["difference"] = spec.difference.str();
            obj["outcome"] = "cap_exceeded";
            obj["terms_checked"] = opts.cap->str();
            obj["cap"] = opts.cap->str();
            emit(opts, obj);
            return kExitCapExceeded;
        }
        report = *capped;
    } else {
        report = ap_scan(spec);  // TheoryViolation propagates as exit 3
    }

    if (opts.oracle)
        verify_scan_terms_against_oracle(spec.first, spec.difference, false, report.failing_index,
                                         report.failing_term);

    ordered_json obj;
    obj["first"] = spec.first.str();
    obj["difference"] = spec.difference.str();
    obj["outcome"] = "failure_found";
    obj["failing_index"] = report.failing_index.str();
    obj["failing_term"] = report.failing_term.str();
    obj["terms_checked"] = report.terms_checked.str();
    obj["cap"] = report.cap_used.str();
    emit(opts, obj);
    return kExitOk;
}

int run_ap_longest(const std::string& a_raw, const std::string& l_raw, const GlobalOpts& opts) {
    const Natural first = parse_natural(a_raw, "a");
    const Natural last = parse_natural(l_raw, "l");
    const APWitness witness = longest_palindromic_ap(first, last);

    if (opts.oracle) {
        if (last - first > kOracleSpanBound)
            throw PreconditionFailed("--oracle: endpoint span exceeds the differential bound");
        const Natural span = last - first;
        Natural best_len = 0, best_d = 0;
        for (Natural d = 1; d <= span; ++d) {
            if (span % d != 0) continue;
            bool all = true;
            for (Natural t = first; t <= last; t += d)
                if (!oracle::is_palindrome(t)) {
                    all = false;
                    break;
                }
            if (all && span / d + 1 > best_len) {
                best_len = span / d + 1;
                best_d = d;
            }
        }
        require_match(witness.difference == best_d && witness.length == best_len, "ap longest",
                      witness.difference.str(), best_d.str());
    }

    ordered_json obj;
    obj["first"] = witness.first.str();
    obj["last"] = witness.last.str();
    obj["difference"] = witness.difference.str();
    obj["length"] = witness.length.str();
    emit(opts, obj);
    return kExitOk;
}

int run_ap_search(const std::string& max_raw, const std::string& minlen_raw, const GlobalOpts& opts) {
    const Natural max_value = parse_natural(max_raw, "max");
    const Natural min_length = parse_natural(minlen_raw, "minlen");
    const auto witnesses = exhaustive_ap_search(max_value, min_length, opts.seed);

    if (opts.oracle) {
        if (max_value > kOracleSpanBound)
            throw PreconditionFailed("--oracle: max exceeds the differential bound");
        std::vector<APWitness> check;
        for (Natural a = 1; a + (min_length - 1) <= max_value; a = oracle::next_palindrome(a)) {
            const Natural dmax = (max_value - a) / (min_length - 1);
            for (Natural d = 1; d <= dmax; ++d) {
                if (a > d && oracle::is_palindrome(a - d)) continue;
                Natural len = 1, t = a + d;
                while (t <= max_value && oracle::is_palindrome(t)) {
                    ++len;
                    t += d;
                }
                if (len >= min_length) check.push_back({a, d, len, a + (len - 1) * d});
            }
        }
        require_match(witnesses == check, "ap search", std::to_string(witnesses.size()),
                      std::to_string(check.size()));
    }

    ordered_json obj;
    obj["max_value"] = max_value.str();
    obj["min_length"] = min_length.str();
    obj["count"] = std::to_string(witnesses.size());
    ordered_json rows = ordered_json::array();
    for (const APWitness& w : witnesses) {
        ordered_json row;
        row["first"] = w.first.str();
        row["difference"] = w.difference.str();
        row["length"] = w.length.str();
        row["last"] = w.last.str();
        rows.push_back(std::move(row));
    }
    obj["witnesses"] = std::move(rows);
    emit(opts, obj, "witnesses", {"first", "difference", "length", "last"});
    return kExitOk;
}

int run_gp_scan(const std::string& a_raw, const std::string& r_raw, bool check_gcd,
                const GlobalOpts& opts) {
    const GPSpec spec{parse_natural(a_raw, "a"), parse_natural(r_raw, "r")};
    const Natural cap = opts.cap.value_or(Natural(kDefaultGpScanCap));
    const GpScanReport report = gp_scan(spec, check_gcd, cap);

    ordered_json obj;
    obj["first"] = spec.first.str();
    obj["ratio"] = spec.ratio.str();
    if (report.cap_exceeded) {
        obj["outcome"] = "cap_exceeded";
        obj["terms_checked"] = report.terms_checked.str();
        obj["cap"] = report.cap_used.str();
        emit(opts, obj);
        return kExitCapExceeded;
    }

    if (opts.oracle)
        verify_scan_terms_against_oracle(spec.first, spec.ratio, true, report.failing_index,
                                         report.failing_term);

    obj["outcome"] = "failure_found";
    obj["failing_index"] = report.failing_index.str();
    obj["failing_term"] = report.failing_term.str();
    obj["terms_checked"] = report.terms_checked.str();
    obj["cap"] = report.cap_used.str();
    emit(opts, obj);
    return kExitOk;
}

int run_gp_ratfail(const std::string& a_raw, const std::string& ratio_raw, const GlobalOpts& opts) {
    const Natural first = parse_natural(a_raw, "a");
    const Rational ratio = parse_rational(ratio_raw, "ratio");
    const Natural s = integrality_failure_index(first, ratio);

    if (opts.oracle) {
        using boost::multiprecision::pow;
        const auto e = s.convert_to<unsigned>();
        const bool fails = (first * pow(ratio.numerator, e)) % pow(ratio.denominator, e) != 0;
        const bool previous_ok =
            e == 1 || (first * pow(ratio.numerator, e - 1)) % pow(ratio.denominator, e - 1) == 0;
        require_match(fails && previous_ok, "gp ratfail", s.str(), "exact-arithmetic recheck");
    }

    ordered_json obj;
    obj["first"] = first.str();
    obj["ratio"] = to_string(ratio);
    obj["failure_exponent"] = s.str();
    emit(opts, obj);
    return kExitOk;
}

int run_gp_mindex(const std::string& a_raw, const std::string& r_raw, const std::string& lambda_raw,
                  const GlobalOpts& opts) {
    const GPSpec spec{parse_natural(a_raw, "a"), parse_natural(r_raw, "r")};
    const Natural lambda = parse_natural(lambda_raw, "lambda");
    const MinIndexReport report = min_index_for_digits(spec, lambda);

    if (opts.oracle) {
        using boost::multiprecision::pow;
        const Natural target = lambda * division_digit_count(spec.first);
        const auto k = report.exact_index.convert_to<unsigned>();
        const bool reaches = division_digit_count(spec.first * pow(spec.ratio, k)) >= target;
        const bool minimal =
            k == 0 || division_digit_count(spec.first * pow(spec.ratio, k - 1)) < target;
        require_match(reaches && minimal, "gp mindex", report.exact_index.str(),
                      "division-based digit recheck");
    }

    ordered_json obj;
    obj["first"] = spec.first.str();
    obj["ratio"] = spec.ratio.str();
    obj["lambda"] = lambda.str();
    obj["exact_index"] = report.exact_index.str();
    if (report.approx_bound)
        obj["approx_bound"] = report.approx_bound->str();
    else
        obj["approx_bound"] = nullptr;
    emit(opts, obj);
    return kExitOk;
}

int run_gp_alpha(const std::string& a_raw, const std::string& r_raw, const GlobalOpts& opts) {
    const GPSpec spec{parse_natural(a_raw, "a"), parse_natural(r_raw, "r")};
    const AlphaDecision decision = alpha_ratio(spec);

    if (opts.oracle) {
        using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;
        const Float200 L(decision.digits_first.str()), R(decision.digits_ratio.str()),
            r(spec.ratio.str());
        const Float200 alpha = boost::multiprecision::pow(Float200(10), L / 2) /
                               boost::multiprecision::pow(r, L / (L + R - 2));
        const bool numeric = alpha < 1;
        if (decision.ratio_squared == decision.ten_power)
            require_match(!decision.alpha_below_one, "gp alpha", "false", "exact tie");
        else
            require_match(decision.alpha_below_one == numeric, "gp alpha",
                          decision.alpha_below_one ? "true" : "false", numeric ? "true" : "false");
    }

    ordered_json obj;
    obj["first"] = spec.first.str();
    obj["ratio"] = spec.ratio.str();
    obj["digits_first"] = decision.digits_first.str();
    obj["digits_ratio"] = decision.digits_ratio.str();
    obj["ten_power"] = decision.ten_power.str();
    obj["ratio_squared"] = decision.ratio_squared.str();
    obj["alpha_below_one"] = decision.alpha_below_one;
    emit(opts, obj);
    return kExitOk;
}

int run_gp_subexp(const std::string& a_raw, const std::string& r_raw, const GlobalOpts& opts) {
    const GPSpec spec{parse_natural(a_raw, "a"), parse_natural(r_raw, "r")};
    const Natural b = subsequence_exponent(spec);

    if (opts.oracle) {
        using boost::multiprecision::pow;
        const Natural first_digits = division_digit_count(spec.first);
        const auto e = b.convert_to<unsigned>();
        const bool more = division_digit_count(pow(spec.ratio, e)) > first_digits;
        const bool minimal = e == 1 || division_digit_count(pow(spec.ratio, e - 1)) <= first_digits;
        require_match(more && minimal, "gp subexp", b.str(), "division-based digit recheck");
    }

    ordered_json obj;
    obj["first"] = spec.first.str();
    obj["ratio"] = spec.ratio.str();
    obj["exponent"] = b.str();
    emit(opts, obj);
    return kExitOk;
}

int run_density(const std::string& L_raw, const std::string& q_raw, const GlobalOpts& opts) {
    const Natural L = parse_natural(L_raw, "L");
    const Natural q = parse_natural(q_raw, "q");
    const DivisibilityCount dc = count_palindromes_divisible(L, q);

    if (opts.oracle) {
        if (L > 8) throw PreconditionFailed("--oracle: digit length exceeds the oracle filter bound");
        const Natural lo = (L == 1) ? Natural(1) : pow10((L - 1).convert_to<std::size_t>());
        Natural filtered = 0;
        for (const Palindrome& p : oracle::enumerate(lo, pow10(L.convert_to<std::size_t>()) - 1))
            if (p % q == 0) ++filtered;
        require_match(filtered == dc.exact_count, "density", dc.exact_count.str(), filtered.str());
    }

    const Natural population = count_with_digits(L);
    const Natural scaled = dc.exact_count * q;
    const Natural distance_num = scaled > population ? Natural(scaled - population) : Natural(population - scaled);

    ordered_json obj;
    obj["digits"] = L.str();
    obj["modulus"] = q.str();
    obj["exact_count"] = dc.exact_count.str();
    obj["main_term"] = to_string(dc.main_term);
    obj["deviation"] = format_ratio_fixed(distance_num, population);
    emit(opts, obj);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindromic number sequence toolkit"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string cap_raw;
    bool oracle_flag = false;
    std::uint64_t seed_value = 0;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    auto* cap_opt = app.add_option("--cap", cap_raw, "scan cap override");
    app.add_flag("--oracle", oracle_flag, "differential mode: also run the naive oracle and compare");
    auto* seed_opt = app.add_option("--seed", seed_value, "randomized search order for 'ap search'");

    GlobalOpts opts;
    int exit_code = kExitOk;
    const auto dispatch = [&](auto&& fn) {
        return [&, fn]() {
            opts.format = format_name == "json" ? Format::json
                        : format_name == "csv"  ? Format::csv
                                                : Format::text;
            opts.oracle = oracle_flag;
            if (cap_opt->count() > 0) {
                opts.cap = parse_natural(cap_raw, "cap");
                if (*opts.cap < 1) throw UsageError("argument <cap> must be >= 1");
            }
            if (seed_opt->count() > 0) opts.seed = seed_value;
            exit_code = fn();
        };
    };

    std::string arg_a, arg_b, arg_c;
    bool check_gcd = false;

    auto* next_cmd = app.add_subcommand("next", "smallest palindrome greater than n");
    next_cmd->add_option("n", arg_a)->required();
    next_cmd->callback(dispatch([&] { return run_next(arg_a, opts); }));

    auto* prev_cmd = app.add_subcommand("prev", "largest palindrome smaller than n");
    prev_cmd->add_option("n", arg_a)->required();
    prev_cmd->callback(dispatch([&] { return run_prev(arg_a, opts); }));

    auto* rank_cmd = app.add_subcommand("rank", "1-based index of a palindrome");
    rank_cmd->add_option("p", arg_a)->required();
    rank_cmd->callback(dispatch([&] { return run_rank(arg_a, opts); }));

    auto* unrank_cmd = app.add_subcommand("unrank", "the i-th positive palindrome");
    unrank_cmd->add_option("i", arg_a)->required();
    unrank_cmd->callback(dispatch([&] { return run_unrank(arg_a, opts); }));

    auto* count_cmd = app.add_subcommand("count-digits", "number of palindromes with L digits");
    count_cmd->add_option("L", arg_a)->required();
    count_cmd->callback(dispatch([&] { return run_count_digits(arg_a, opts); }));

    auto* gaps_cmd = app.add_subcommand("gaps", "consecutive palindrome gaps with lower end in [lo, hi)");
    gaps_cmd->add_option("lo", arg_a)->required();
    gaps_cmd->add_option("hi", arg_b)->required();
    gaps_cmd->callback(dispatch([&] { return run_gaps(arg_a, arg_b, opts); }));

    auto* ap_cmd = app.add_subcommand("ap", "arithmetic progression analysis");
    ap_cmd->require_subcommand(1);

    auto* ap_scan_cmd = ap_cmd->add_subcommand("scan", "first non-palindromic term of a + i*d");
    ap_scan_cmd->add_option("a", arg_a)->required();
    ap_scan_cmd->add_option("d", arg_b)->required();
    ap_scan_cmd->callback(dispatch([&] { return run_ap_scan(arg_a, arg_b, opts); }));

    auto* ap_longest_cmd = ap_cmd->add_subcommand("longest", "longest all-palindrome AP between endpoints");
    ap_longest_cmd->add_option("a", arg_a)->required();
    ap_longest_cmd->add_option("l", arg_b)->required();
    ap_longest_cmd->callback(dispatch([&] { return run_ap_longest(arg_a, arg_b, opts); }));

    auto* ap_search_cmd = ap_cmd->add_subcommand("search", "all maximal all-palindrome APs up to max");
    ap_search_cmd->add_option("max", arg_a)->required();
    ap_search_cmd->add_option("minlen", arg_b)->required();
    ap_search_cmd->callback(dispatch([&] { return run_ap_search(arg_a, arg_b, opts); }));

    auto* gp_cmd = app.add_subcommand("gp", "geometric progression analysis");
    gp_cmd->require_subcommand(1);

    auto* gp_scan_cmd = gp_cmd->add_subcommand("scan", "first non-palindromic term of a * r^i");
    gp_scan_cmd->add_option("a", arg_a)->required();
    gp_scan_cmd->add_option("r", arg_b)->required();
    gp_scan_cmd->add_flag("--check-gcd", check_gcd, "require first and ratio coprime to 2, 3, 5, 11");
    gp_scan_cmd->callback(dispatch([&] { return run_gp_scan(arg_a, arg_b, check_gcd, opts); }));

    auto* gp_ratfail_cmd = gp_cmd->add_subcommand("ratfail", "first non-integer term for a rational ratio");
    gp_ratfail_cmd->add_option("a", arg_a)->required();
    gp_ratfail_cmd->add_option("ratio", arg_b)->required();
    gp_ratfail_cmd->callback(dispatch([&] { return run_gp_ratfail(arg_a, arg_b, opts); }));

    auto* gp_mindex_cmd = gp_cmd->add_subcommand("mindex", "smallest index reaching lambda*L digits");
    gp_mindex_cmd->add_option("a", arg_a)->required();
    gp_mindex_cmd->add_option("r", arg_b)->required();
    gp_mindex_cmd->add_option("lambda", arg_c)->required();
    gp_mindex_cmd->callback(dispatch([&] { return run_gp_mindex(arg_a, arg_b, arg_c, opts); }));

    auto* gp_alpha_cmd = gp_cmd->add_subcommand("alpha", "exact alpha < 1 decision");
    gp_alpha_cmd->add_option("a", arg_a)->required();
    gp_alpha_cmd->add_option("r", arg_b)->required();
    gp_alpha_cmd->callback(dispatch([&] { return run_gp_alpha(arg_a, arg_b, opts); }));

    auto* gp_subexp_cmd = gp_cmd->add_subcommand("subexp", "smallest B with ratio^B longer than first");
    gp_subexp_cmd->add_option("a", arg_a)->required();
    gp_subexp_cmd->add_option("r", arg_b)->required();
    gp_subexp_cmd->callback(dispatch([&] { return run_gp_subexp(arg_a, arg_b, opts); }));

    auto* density_cmd = app.add_subcommand("density", "L-digit palindromes divisible by q vs |P_L|/q");
    density_cmd->add_option("L", arg_a)->required();
    density_cmd->add_option("q", arg_b)->required();
    density_cmd->callback(dispatch([&] { return run_density(arg_a, arg_b, opts); }));

    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OracleMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTheoryViolation;
    } catch (const TheoryViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTheoryViolation;
    }
    return exit_code;
}
