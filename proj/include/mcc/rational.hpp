#ifndef MCC_RATIONAL_HPP
#define MCC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "mcc/common.hpp"

namespace mcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse a nonnegative decimal string ("0.201", "1", ".5") into an exact
/// rational. Probabilities are ingested this way so interval arithmetic is
/// exact; binary floating point cannot represent most decimal probabilities.
inline Rational parse_decimal(std::string_view s) {
    if (s.empty()) throw ModelError("empty decimal string");
    BigInt int_part = 0, frac_part = 0;
    BigInt frac_scale = 1;
    std::size_t i = 0;
    bool saw_digit = false;
    for (; i < s.size() && s[i] != '.'; ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ModelError("bad decimal string: " + std::string(s));
        int_part = int_part * 10 + (s[i] - '0');
        saw_digit = true;
    }
    if (i < s.size()) { // skip '.'
        for (++i; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw ModelError("bad decimal string: " + std::string(s));
            frac_part = frac_part * 10 + (s[i] - '0');
            frac_scale *= 10;
            saw_digit = true;
        }
    }
    if (!saw_digit) throw ModelError("bad decimal string: " + std::string(s));
    return Rational(int_part * frac_scale + frac_part, frac_scale);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace mcc

#endif
