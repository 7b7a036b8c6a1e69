#ifndef PADICFUN_LAURENT_HPP
#define PADICFUN_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/rational.hpp>

namespace padicfun
{

/// Laurent polynomials in variables x_0..x_{n-1} partitioned into consecutive
/// blocks, with coefficients in Q[s^(1/2), s^(-1/2)] over the free symbols.
///
/// Normal form: one term per (variable exponents, symbol exponents) key with a
/// nonzero rational coefficient.
class LaurentPoly
{
public:
    struct Key {
        std::vector<int> vars;
        SymbolExponents syms;

        friend bool operator==(const Key &, const Key &) = default;
        friend bool operator<(const Key &a, const Key &b)
        {
            return a.vars != b.vars ? a.vars < b.vars : a.syms < b.syms;
        }
    };
    using Terms = std::map<Key, Rational>;

    explicit LaurentPoly(std::vector<int> blocks) : m_blocks(std::move(blocks))
    {
        if (m_blocks.empty() || std::any_of(m_blocks.begin(), m_blocks.end(), [](int b) { return b < 1; })) {
            raise(ErrorKind::InvalidInput, "block sizes must be positive");
        }
    }

    static LaurentPoly constant(std::vector<int> blocks, const MonomialValue &c)
    {
        LaurentPoly p(std::move(blocks));
        p.add_term(std::vector<int>(p.num_vars(), 0), c);
        return p;
    }

    static LaurentPoly monomial(std::vector<int> blocks, const MonomialValue &c, std::vector<int> exps)
    {
        LaurentPoly p(std::move(blocks));
        if (exps.size() != p.num_vars()) {
            raise(ErrorKind::SizeMismatch, "exponent vector length does not match variable count");
        }
        p.add_term(std::move(exps), c);
        return p;
    }

    static LaurentPoly variable(std::vector<int> blocks, std::size_t index, int power = 1)
    {
        LaurentPoly p(std::move(blocks));
        if (index >= p.num_vars()) {
            raise(ErrorKind::SizeMismatch, "variable index out of range");
        }
        std::vector<int> e(p.num_vars(), 0);
        e[index] = power;
        p.add_term(std::move(e), MonomialValue::one());
        return p;
    }

    /// k-th elementary symmetric polynomial in the variables of block `block`.
    static LaurentPoly elementary(std::vector<int> blocks, std::size_t block, int k)
    {
        LaurentPoly p(std::move(blocks));
        if (block >= p.m_blocks.size()) {
            raise(ErrorKind::SizeMismatch, "block index out of range");
        }
        const int m = p.m_blocks[block];
        const int off = std::accumulate(p.m_blocks.begin(), p.m_blocks.begin() + static_cast<long>(block), 0);
        if (k < 0 || k > m) {
            return p;
        }
        std::vector<bool> pick(static_cast<std::size_t>(m), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<int> e(p.num_vars(), 0);
            for (int j = 0; j < m; ++j) {
                e[static_cast<std::size_t>(off + j)] = pick[static_cast<std::size_t>(j)] ? 1 : 0;
            }
            p.add_term(std::move(e), MonomialValue::one());
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return p;
    }

    const std::vector<int> &blocks() const noexcept
    {
        return m_blocks;
    }
    std::size_t num_vars() const noexcept
    {
        return static_cast<std::size_t>(std::accumulate(m_blocks.begin(), m_blocks.end(), 0));
    }
    const Terms &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    void add_term(std::vector<int> exps, const MonomialValue &c, const Rational &scale = 1)
    {
        if (exps.size() != num_vars()) {
            raise(ErrorKind::SizeMismatch, "exponent vector length does not match variable count");
        }
        Key key{std::move(exps), c.doubled_exponents()};
        auto it = m_terms.try_emplace(std::move(key), 0).first;
        it->second += c.coeff() * scale;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }

    LaurentPoly &operator+=(const LaurentPoly &o)
    {
        check_blocks(o);
        for (const auto &[k, c] : o.m_terms) {
            accumulate(k, c);
        }
        return *this;
    }
    LaurentPoly &operator-=(const LaurentPoly &o)
    {
        check_blocks(o);
        for (const auto &[k, c] : o.m_terms) {
            accumulate(k, -c);
        }
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b)
    {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b)
    {
        a -= b;
        return a;
    }
    LaurentPoly operator-() const
    {
        LaurentPoly out(m_blocks);
        for (const auto &[k, c] : m_terms) {
            out.m_terms.emplace(k, -c);
        }
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
    {
        a.check_blocks(b);
        LaurentPoly out(a.m_blocks);
        for (const auto &[ka, ca] : a.m_terms) {
            for (const auto &[kb, cb] : b.m_terms) {
                Key k{ka.vars, ka.syms};
                for (std::size_t i = 0; i < k.vars.size(); ++i) {
                    k.vars[i] += kb.vars[i];
                }
                detail::add_exponents(k.syms, kb.syms);
                out.accumulate(k, ca * cb);
            }
        }
        return out;
    }
    LaurentPoly &operator*=(const LaurentPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    LaurentPoly pow(unsigned e) const
    {
        LaurentPoly out = constant(m_blocks, MonomialValue::one());
        for (unsigned i = 0; i < e; ++i) {
            out *= *this;
        }
        return out;
    }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.m_blocks == b.m_blocks && a.m_terms == b.m_terms;
    }

    /// Renames variables: x_i -> x_{perm[i]}.
    LaurentPoly permuted(const std::vector<std::size_t> &perm) const
    {
        LaurentPoly out(m_blocks);
        for (const auto &[k, c] : m_terms) {
            Key nk{std::vector<int>(k.vars.size(), 0), k.syms};
            for (std::size_t i = 0; i < k.vars.size(); ++i) {
                nk.vars[perm[i]] = k.vars[i];
            }
            out.accumulate(nk, c);
        }
        return out;
    }

    /// Invariance under all permutations of variables inside each block;
    /// adjacent transpositions generate each block's symmetric group.
    bool is_block_symmetric() const
    {
        std::size_t off = 0;
        for (const int b : m_blocks) {
            for (int j = 0; j + 1 < b; ++j) {
                std::vector<std::size_t> perm(num_vars());
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                std::swap(perm[off + static_cast<std::size_t>(j)], perm[off + static_cast<std::size_t>(j) + 1]);
                if (permuted(perm) != *this) {
                    return false;
                }
            }
            off += static_cast<std::size_t>(b);
        }
        return true;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[k, c] : m_terms) {
            if (!out.empty()) {
                out += " + ";
            }
            out += MonomialValue(c, k.syms).to_string();
            for (std::size_t i = 0; i < k.vars.size(); ++i) {
                if (k.vars[i] != 0) {
                    out += " * x" + std::to_string(i + 1) + "^" + std::to_string(k.vars[i]);
                }
            }
        }
        return out;
    }

private:
    void check_blocks(const LaurentPoly &o) const
    {
        if (m_blocks != o.m_blocks) {
            raise(ErrorKind::BlockMismatch, "Laurent polynomials over different block structures");
        }
    }

    void accumulate(const Key &k, const Rational &c)
    {
        auto it = m_terms.try_emplace(k, 0).first;
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }

    std::vector<int> m_blocks;
    Terms m_terms;
};

// Named forms of the ring operations.
inline LaurentPoly lp_add(const LaurentPoly &a, const LaurentPoly &b)
{
    return a + b;
}
inline LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b)
{
    return a * b;
}
inline bool lp_is_block_symmetric(const LaurentPoly &p)
{
    return p.is_block_symmetric();
}

} // namespace padicfun

#endif
