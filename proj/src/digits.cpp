#include "palinseq/digits.hpp"

#include "palinseq/errors.hpp"

#include <string>

namespace palinseq {

DigitString from_natural(const Natural& n) {
    if (n < 0) throw PreconditionFailed("from_natural: input must be non-negative");
    const std::string s = n.str();
    DigitString ds;
    ds.digits.reserve(s.size());
    for (char c : s) ds.digits.push_back(static_cast<std::uint8_t>(c - '0'));
    return ds;
}

Natural to_natural(const DigitString& ds) {
    if (ds.digits.empty()) throw PreconditionFailed("to_natural: empty digit string");
    if (ds.digits.size() > 1 && ds.digits.front() == 0)
        throw PreconditionFailed("to_natural: leading zero on multi-digit input");
    Natural n = 0;
    for (std::uint8_t d : ds.digits) {
        if (d > 9) throw PreconditionFailed("to_natural: digit out of range [0, 9]");
        n *= 10;
        n += d;
    }
    return n;
}

bool is_palindrome(const Natural& n) {
    const DigitString ds = from_natural(n);
    const std::size_t len = ds.digits.size();
    for (std::size_t i = 0; i < len / 2; ++i)
        if (ds.digits[i] != ds.digits[len - 1 - i]) return false;
    return true;
}

std::size_t decimal_length(const Natural& n) {
    if (n < 0) throw PreconditionFailed("decimal_length: input must be non-negative");
    return n.str().size();
}

Natural digit_count(const Natural& n) {
    return Natural(decimal_length(n));
}

}  // namespace palinseq
