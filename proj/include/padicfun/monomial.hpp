#ifndef PADICFUN_MONOMIAL_HPP
#define PADICFUN_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/rational.hpp>

namespace padicfun
{

namespace symbols
{
// Residue field cardinality.
inline const std::string q = "q";
// The fixed uniformizer.
inline const std::string uniformizer = "W";
// Default name for the value of the twisting character at the uniformizer.
inline const std::string mu = "M";
} // namespace symbols

inline bool is_valid_symbol(std::string_view name)
{
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_')) {
        return false;
    }
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Symbol name -> exponent, exponents doubled so that q^(1/2) is exact.
/// Never holds a zero exponent.
using SymbolExponents = std::map<std::string, int>;

namespace detail
{

inline void add_exponents(SymbolExponents &acc, const SymbolExponents &other, int scale = 1)
{
    for (const auto &[name, e] : other) {
        auto it = acc.try_emplace(name, 0).first;
        it->second += scale * e;
        if (it->second == 0) {
            acc.erase(it);
        }
    }
}

inline std::string exponent_factor(const std::string &name, int doubled)
{
    return name + "^(" + std::to_string(doubled) + "/2)";
}

} // namespace detail

/// A nonzero scalar of the form c * prod_s s^(e_s/2) with c rational and the
/// symbols s free. These form an abelian group under multiplication; there is
/// deliberately no addition.
class MonomialValue
{
public:
    MonomialValue() = default;

    MonomialValue(Rational coeff, SymbolExponents doubled_exponents)
        : m_coeff(std::move(coeff)), m_exps(std::move(doubled_exponents))
    {
        m_coeff.canonicalize();
        if (m_coeff == 0) {
            raise(ErrorKind::InvalidInput, "monomial value with zero coefficient");
        }
        for (auto it = m_exps.begin(); it != m_exps.end();) {
            if (!is_valid_symbol(it->first)) {
                raise(ErrorKind::InvalidInput, "invalid symbol name '" + it->first + "'");
            }
            it = it->second == 0 ? m_exps.erase(it) : std::next(it);
        }
    }

    explicit MonomialValue(Rational coeff) : MonomialValue(std::move(coeff), {}) {}

    static MonomialValue one()
    {
        return {};
    }

    // name^(doubled/2)
    static MonomialValue symbol(const std::string &name, HalfInt exponent = HalfInt::from_int(1))
    {
        return MonomialValue(1, SymbolExponents{{name, exponent.doubled}});
    }

    const Rational &coeff() const noexcept
    {
        return m_coeff;
    }
    const SymbolExponents &doubled_exponents() const noexcept
    {
        return m_exps;
    }
    HalfInt exponent(const std::string &name) const
    {
        const auto it = m_exps.find(name);
        return HalfInt::from_doubled(it == m_exps.end() ? 0 : it->second);
    }
    bool is_one() const
    {
        return m_coeff == 1 && m_exps.empty();
    }

    MonomialValue &operator*=(const MonomialValue &other)
    {
        m_coeff *= other.m_coeff;
        detail::add_exponents(m_exps, other.m_exps);
        return *this;
    }
    friend MonomialValue operator*(MonomialValue a, const MonomialValue &b)
    {
        a *= b;
        return a;
    }

    MonomialValue inverse() const
    {
        MonomialValue out;
        out.m_coeff = 1 / m_coeff;
        for (const auto &[name, e] : m_exps) {
            out.m_exps.emplace(name, -e);
        }
        return out;
    }
    friend MonomialValue operator/(const MonomialValue &a, const MonomialValue &b)
    {
        return a * b.inverse();
    }

    MonomialValue pow(long e) const
    {
        MonomialValue out;
        out.m_coeff = padicfun::pow(m_coeff, e);
        for (const auto &[name, d] : m_exps) {
            out.m_exps.emplace(name, static_cast<int>(d * e));
        }
        return out;
    }

    friend bool operator==(const MonomialValue &a, const MonomialValue &b)
    {
        return a.m_coeff == b.m_coeff && a.m_exps == b.m_exps;
    }
    // Total order used for canonical multiset sorting; carries no arithmetic meaning.
    friend bool operator<(const MonomialValue &a, const MonomialValue &b)
    {
        if (a.m_exps != b.m_exps) {
            return a.m_exps < b.m_exps;
        }
        return a.m_coeff < b.m_coeff;
    }

    /// Canonical text: "c * s1^(a/2) * s2^(b/2)" with symbols in lexicographic
    /// order and doubled exponents; the identity prints as "1".
    std::string to_string() const
    {
        std::string out = padicfun::to_string(m_coeff);
        for (const auto &[name, e] : m_exps) {
            out += " * " + detail::exponent_factor(name, e);
        }
        return out;
    }

    /// Accepts the canonical form and the obvious shorthands: "q", "q^3",
    /// "q^(-1)", "q^(1/2)", "3/4 * M".
    static MonomialValue parse(std::string_view text);

    friend std::ostream &operator<<(std::ostream &os, const MonomialValue &m)
    {
        return os << m.to_string();
    }

private:
    Rational m_coeff = 1;
    SymbolExponents m_exps;
};

namespace detail
{

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline int parse_doubled_exponent(std::string_view text, std::string_view whole)
{
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        text = trim(text.substr(1, text.size() - 2));
    }
    try {
        return HalfInt::parse(text).doubled;
    } catch (const Error &) {
        raise(ErrorKind::InvalidInput, "bad exponent in monomial '" + std::string(whole) + "'");
    }
}

} // namespace detail

inline MonomialValue MonomialValue::parse(std::string_view text)
{
    const auto whole = detail::trim(text);
    if (whole.empty()) {
        raise(ErrorKind::InvalidInput, "empty monomial");
    }
    Rational coeff = 1;
    SymbolExponents exps;
    std::size_t start = 0;
    while (start <= whole.size()) {
        const auto star = whole.find('*', start);
        const auto factor = detail::trim(whole.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
        if (factor.empty()) {
            raise(ErrorKind::InvalidInput, "empty factor in monomial '" + std::string(whole) + "'");
        }
        const char lead = factor.front();
        if (std::isdigit(static_cast<unsigned char>(lead)) || lead == '-' || lead == '+') {
            coeff *= parse_rational(factor);
        } else {
            const auto caret = factor.find('^');
            const std::string name(detail::trim(factor.substr(0, caret)));
            if (!is_valid_symbol(name)) {
                raise(ErrorKind::InvalidInput, "invalid symbol in monomial '" + std::string(whole) + "'");
            }
            const int d = caret == std::string_view::npos ? 2 : detail::parse_doubled_exponent(factor.substr(caret + 1), whole);
            detail::add_exponents(exps, SymbolExponents{{name, d}});
        }
        if (star == std::string_view::npos) {
            break;
        }
        start = star + 1;
    }
    return MonomialValue(std::move(coeff), std::move(exps));
}

/// Numeric value bound to a symbol. Half-integer exponents need a rational
/// square root supplied alongside the value.
struct SymbolValue {
    Rational value;
    std::optional<Rational> sqrt;
};

using Assignment = std::map<std::string, SymbolValue>;

/// Instantiates a monomial value as a rational number.
inline Rational mv_eval(const MonomialValue &m, const Assignment &assign)
{
    Rational out = m.coeff();
    for (const auto &[name, d] : m.doubled_exponents()) {
        const auto it = assign.find(name);
        if (it == assign.end()) {
            raise(ErrorKind::MissingSymbol, "no value assigned to '" + name + "'");
        }
        auto sv = it->second;
        sv.value.canonicalize();
        if (sv.sqrt) {
            sv.sqrt->canonicalize();
        }
        if (sv.value <= 0) {
            raise(ErrorKind::InvalidInput, "assigned value of '" + name + "' must be positive");
        }
        if (d % 2 == 0) {
            out *= pow(sv.value, d / 2);
            continue;
        }
        if (!sv.sqrt || *sv.sqrt <= 0 || *sv.sqrt * *sv.sqrt != sv.value) {
            raise(ErrorKind::NonSquareAssignment, "half exponent of '" + name + "' needs a positive rational square root");
        }
        out *= pow(*sv.sqrt, d);
    }
    return out;
}

/// Builds an assignment entry, deriving the root when the value is a perfect
/// rational square.
inline SymbolValue make_symbol_value(const Rational &value)
{
    SymbolValue sv{value, std::nullopt};
    sv.value.canonicalize();
    if (sv.value > 0) {
        Integer rn, rd;
        mpz_sqrt(rn.get_mpz_t(), sv.value.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), sv.value.get_den().get_mpz_t());
        if (rn * rn == sv.value.get_num() && rd * rd == sv.value.get_den()) {
            sv.sqrt = Rational(rn, rd);
        }
    }
    return sv;
}

} // namespace padicfun

#endif
