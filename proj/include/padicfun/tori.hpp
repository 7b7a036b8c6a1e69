#ifndef PADICFUN_TORI_HPP
#define PADICFUN_TORI_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/monomial.hpp>

namespace padicfun
{

/// Block sizes (n_1, ..., n_r) of a product GL_{n_1} x ... x GL_{n_r}.
/// Positions are numbered 0..n-1 in block order.
class GroupShape
{
public:
    struct Slot {
        std::size_t block;
        std::size_t index; // 0-based within the block
    };

    GroupShape() : GroupShape(std::vector<int>{1}) {}

    explicit GroupShape(std::vector<int> blocks) : m_blocks(std::move(blocks))
    {
        if (m_blocks.empty()) {
            raise(ErrorKind::InvalidInput, "a shape needs at least one block");
        }
        for (const int b : m_blocks) {
            if (b < 1) {
                raise(ErrorKind::InvalidInput, "block sizes must be positive");
            }
        }
        int off = 0;
        for (std::size_t i = 0; i < m_blocks.size(); ++i) {
            m_offsets.push_back(off);
            for (int j = 0; j < m_blocks[i]; ++j) {
                m_slots.push_back({i, static_cast<std::size_t>(j)});
            }
            off += m_blocks[i];
        }
    }

    static GroupShape single(int n)
    {
        return GroupShape(std::vector<int>{n});
    }

    const std::vector<int> &blocks() const noexcept
    {
        return m_blocks;
    }
    std::size_t num_blocks() const noexcept
    {
        return m_blocks.size();
    }
    int block_size(std::size_t i) const
    {
        return m_blocks.at(i);
    }
    // n_1 + ... + n_{i-1}
    int offset(std::size_t i) const
    {
        return m_offsets.at(i);
    }
    std::size_t rank() const noexcept
    {
        return m_slots.size();
    }
    const Slot &slot(std::size_t p) const
    {
        return m_slots.at(p);
    }
    std::size_t position(std::size_t block, std::size_t index) const
    {
        return static_cast<std::size_t>(m_offsets.at(block)) + index;
    }

    friend bool operator==(const GroupShape &a, const GroupShape &b)
    {
        return a.m_blocks == b.m_blocks;
    }

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < m_blocks.size(); ++i) {
            out += (i ? "," : "") + std::to_string(m_blocks[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> m_blocks;
    std::vector<int> m_offsets;
    std::vector<Slot> m_slots;
};

/// All compositions of n, i.e. every shape of rank n.
inline std::vector<GroupShape> compositions(int n)
{
    std::vector<GroupShape> out;
    if (n < 1) {
        return out;
    }
    // Each subset of the n-1 gaps is a set of cut points.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> blocks;
        int len = 1;
        for (int g = 0; g < n - 1; ++g) {
            if (mask & (1u << g)) {
                blocks.push_back(len);
                len = 1;
            } else {
                ++len;
            }
        }
        blocks.push_back(len);
        out.emplace_back(std::move(blocks));
    }
    return out;
}

namespace detail
{

template <typename T>
void check_length(const GroupShape &shape, const std::vector<T> &v, const char *what)
{
    if (v.size() != shape.rank()) {
        raise(ErrorKind::SizeMismatch, std::string(what) + " has " + std::to_string(v.size()) + " entries, shape "
                                           + shape.to_string() + " needs " + std::to_string(shape.rank()));
    }
}

inline void check_same_shape(const GroupShape &a, const GroupShape &b)
{
    if (!(a == b)) {
        raise(ErrorKind::ShapeMismatch, "shapes " + a.to_string() + " and " + b.to_string() + " differ");
    }
}

// Weak (strict = false) or strict descent inside every block.
inline bool blockwise_descending(const GroupShape &shape, const std::vector<int> &v, bool strict)
{
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        if (shape.slot(p).block != shape.slot(p + 1).block) {
            continue;
        }
        if (strict ? v[p] <= v[p + 1] : v[p] < v[p + 1]) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// An element of the lattice T/T^0, written as integer exponents of the
/// uniformizer per position.
struct CocharVector {
    GroupShape shape;
    std::vector<int> entries;

    CocharVector(GroupShape s, std::vector<int> e) : shape(std::move(s)), entries(std::move(e))
    {
        detail::check_length(shape, entries, "cocharacter");
    }

    static CocharVector zero(const GroupShape &s)
    {
        return {s, std::vector<int>(s.rank(), 0)};
    }
    static CocharVector basis(const GroupShape &s, std::size_t p)
    {
        auto c = zero(s);
        c.entries.at(p) = 1;
        return c;
    }

    // Membership in the monoid lambda_1 >= ... >= lambda_m, blockwise.
    bool is_dominant() const
    {
        return detail::blockwise_descending(shape, entries, false);
    }

    CocharVector &operator+=(const CocharVector &o)
    {
        detail::check_same_shape(shape, o.shape);
        for (std::size_t p = 0; p < entries.size(); ++p) {
            entries[p] += o.entries[p];
        }
        return *this;
    }
    friend CocharVector operator+(CocharVector a, const CocharVector &b)
    {
        a += b;
        return a;
    }
    friend bool operator==(const CocharVector &a, const CocharVector &b)
    {
        return a.shape == b.shape && a.entries == b.entries;
    }
};

/// Monoid generators of the dominant cocharacters: per block the partial sums
/// e_1 + ... + e_k (k = 1..m) and the inverse of the full sum.
inline std::vector<CocharVector> dominant_generators(const GroupShape &shape)
{
    std::vector<CocharVector> out;
    for (std::size_t i = 0; i < shape.num_blocks(); ++i) {
        auto acc = CocharVector::zero(shape);
        for (int k = 0; k < shape.block_size(i); ++k) {
            acc.entries[shape.position(i, static_cast<std::size_t>(k))] = 1;
            out.push_back(acc);
        }
        for (auto &e : acc.entries) {
            e = -e;
        }
        out.push_back(acc);
    }
    return out;
}

/// An unramified character of T/T^0, stored by its values on the basis
/// cocharacters e_p.
struct UnramifiedCharacter {
    GroupShape shape;
    std::vector<MonomialValue> values;

    UnramifiedCharacter(GroupShape s, std::vector<MonomialValue> v) : shape(std::move(s)), values(std::move(v))
    {
        detail::check_length(shape, values, "character");
    }

    static UnramifiedCharacter trivial(const GroupShape &s)
    {
        return {s, std::vector<MonomialValue>(s.rank())};
    }

    // Generic character: p -> prefix_<p+1>.
    static UnramifiedCharacter generic(const GroupShape &s, const std::string &prefix)
    {
        std::vector<MonomialValue> v;
        for (std::size_t p = 0; p < s.rank(); ++p) {
            v.push_back(MonomialValue::symbol(prefix + "_" + std::to_string(p + 1)));
        }
        return {s, std::move(v)};
    }

    UnramifiedCharacter inverse() const
    {
        auto out = *this;
        for (auto &v : out.values) {
            v = v.inverse();
        }
        return out;
    }

    UnramifiedCharacter &operator*=(const UnramifiedCharacter &o)
    {
        detail::check_same_shape(shape, o.shape);
        for (std::size_t p = 0; p < values.size(); ++p) {
            values[p] *= o.values[p];
        }
        return *this;
    }
    friend UnramifiedCharacter operator*(UnramifiedCharacter a, const UnramifiedCharacter &b)
    {
        a *= b;
        return a;
    }
    friend bool operator==(const UnramifiedCharacter &a, const UnramifiedCharacter &b)
    {
        return a.shape == b.shape && a.values == b.values;
    }
    bool is_trivial() const
    {
        return std::all_of(values.begin(), values.end(), [](const MonomialValue &v) { return v.is_one(); });
    }
};

/// Highest-weight data k_{i,j}, flattened in block order.
struct AlgebraicWeight {
    GroupShape shape;
    std::vector<int> k;

    AlgebraicWeight(GroupShape s, std::vector<int> v) : shape(std::move(s)), k(std::move(v))
    {
        detail::check_length(shape, k, "weight");
    }

    static AlgebraicWeight from_blocks(const std::vector<std::vector<int>> &blocks)
    {
        std::vector<int> sizes;
        std::vector<int> flat;
        for (const auto &b : blocks) {
            sizes.push_back(static_cast<int>(b.size()));
            flat.insert(flat.end(), b.begin(), b.end());
        }
        return {GroupShape(std::move(sizes)), std::move(flat)};
    }

    std::vector<std::vector<int>> to_blocks() const
    {
        std::vector<std::vector<int>> out(shape.num_blocks());
        for (std::size_t p = 0; p < k.size(); ++p) {
            out[shape.slot(p).block].push_back(k[p]);
        }
        return out;
    }

    friend bool operator==(const AlgebraicWeight &a, const AlgebraicWeight &b)
    {
        return a.shape == b.shape && a.k == b.k;
    }
};

enum class WeightClass { neither, dominant, regular };

inline const char *to_string(WeightClass c)
{
    switch (c) {
        case WeightClass::regular: return "regular";
        case WeightClass::dominant: return "dominant";
        case WeightClass::neither: break;
    }
    return "neither";
}

inline WeightClass weight_check(const AlgebraicWeight &w)
{
    if (detail::blockwise_descending(w.shape, w.k, true)) {
        return WeightClass::regular;
    }
    return detail::blockwise_descending(w.shape, w.k, false) ? WeightClass::dominant : WeightClass::neither;
}

inline bool is_dominant(const AlgebraicWeight &w)
{
    return weight_check(w) != WeightClass::neither;
}

/// delta_B^{sign/2}. With |W| = q^{-1}, the modulus character of the upper
/// Borel of GL_m sends e_j to q^{-(m+1-2j)}.
inline UnramifiedCharacter modulus_half(const GroupShape &shape, int sign)
{
    if (sign != 1 && sign != -1) {
        raise(ErrorKind::InvalidInput, "modulus sign must be +1 or -1");
    }
    std::vector<MonomialValue> v;
    for (std::size_t p = 0; p < shape.rank(); ++p) {
        const auto &s = shape.slot(p);
        const int m = shape.block_size(s.block);
        const int j = static_cast<int>(s.index) + 1;
        v.push_back(MonomialValue::symbol(symbols::q, HalfInt::from_doubled(-sign * (m + 1 - 2 * j))));
    }
    return {shape, std::move(v)};
}

inline MonomialValue char_eval(const UnramifiedCharacter &chi, const CocharVector &lambda)
{
    detail::check_same_shape(chi.shape, lambda.shape);
    MonomialValue out;
    for (std::size_t p = 0; p < lambda.entries.size(); ++p) {
        if (lambda.entries[p] != 0) {
            out *= chi.values[p].pow(lambda.entries[p]);
        }
    }
    return out;
}

// The highest weight character restricted to T/T^0: e_p -> W^{k_p}.
inline UnramifiedCharacter weight_as_character(const AlgebraicWeight &w)
{
    std::vector<MonomialValue> v;
    for (const int k : w.k) {
        v.push_back(MonomialValue::symbol(symbols::uniformizer, HalfInt::from_int(k)));
    }
    return {w.shape, std::move(v)};
}

} // namespace padicfun

#endif
