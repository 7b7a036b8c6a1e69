#ifndef PADICFUN_RATIONAL_HPP
#define PADICFUN_RATIONAL_HPP

#include <cstdlib>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <padicfun/error.hpp>

namespace padicfun
{

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational parse_rational(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    std::string s(first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1));
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) {
        raise(ErrorKind::InvalidInput, "not a rational literal: '" + s + "'");
    }
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
        raise(ErrorKind::InvalidInput, "not a rational literal: '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(Rational r)
{
    r.canonicalize();
    return r.get_str();
}

// r^e for any integer e; r must be nonzero when e < 0.
inline Rational pow(const Rational &r, long e)
{
    Rational base = r;
    if (e < 0) {
        base = 1 / base;
        e = -e;
    }
    Rational out = 1;
    while (e > 0) {
        if (e & 1) {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    return out;
}

/// An element of one-half times the integers, held as its double.
struct HalfInt {
    int doubled = 0;

    static constexpr HalfInt from_int(int v) noexcept
    {
        return HalfInt{2 * v};
    }
    static constexpr HalfInt from_doubled(int d) noexcept
    {
        return HalfInt{d};
    }

    constexpr bool is_integral() const noexcept
    {
        return doubled % 2 == 0;
    }
    constexpr bool is_half_odd() const noexcept
    {
        return doubled % 2 != 0;
    }
    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // "a/2" when odd, plain integer otherwise.
    std::string to_string() const
    {
        if (is_integral()) {
            return std::to_string(doubled / 2);
        }
        return std::to_string(doubled) + "/2";
    }

    static HalfInt parse(std::string_view text)
    {
        const auto r = parse_rational(text);
        const Rational twice = r * 2;
        if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) {
            raise(ErrorKind::InvalidInput, "not a half-integer: '" + std::string(text) + "'");
        }
        return HalfInt{static_cast<int>(twice.get_num().get_si())};
    }
};

} // namespace padicfun

#endif
