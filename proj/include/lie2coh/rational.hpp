#pragma once

// Exact rationals on top of GMP's mpq_class.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lie2coh {

using Rational = mpq_class;

class RationalParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q" with q != 0. Surrounding whitespace is rejected.
inline Rational parse_rational(std::string_view s)
{
    if (s.empty())
        throw RationalParseError("empty rational");
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (t.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+'))
            i = 1;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false))
        throw RationalParseError("malformed rational '" + std::string(s) + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw RationalParseError("zero denominator in '" + std::string(s) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace lie2coh
