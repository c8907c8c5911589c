#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>

namespace palinseq {

// Unbounded non-negative integer. Every value, term, bound and count in this
// library is a Natural; operations validate non-negativity at their
// boundaries instead of wrapping the type.
using Natural = boost::multiprecision::cpp_int;

inline Natural pow10(std::size_t exponent) {
    Natural result(1);
    Natural base(10);
    std::size_t e = exponent;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace palinseq
