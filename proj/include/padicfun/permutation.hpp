#ifndef PADICFUN_PERMUTATION_HPP
#define PADICFUN_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/tori.hpp>

namespace padicfun
{

/// A permutation of {0..n-1}, sigma(k) = image[k]. Text and JSON use the
/// 1-based one-line notation [sigma(1), ..., sigma(n)].
class Permutation
{
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::size_t> image) : m_image(std::move(image))
    {
        std::vector<bool> seen(m_image.size(), false);
        for (const auto v : m_image) {
            if (v >= m_image.size() || seen[v]) {
                raise(ErrorKind::InvalidSigma, "not a permutation of 1.." + std::to_string(m_image.size()));
            }
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<std::size_t> img(n);
        std::iota(img.begin(), img.end(), std::size_t{0});
        return Permutation(std::move(img));
    }

    static Permutation from_one_line(const std::vector<int> &one_based)
    {
        std::vector<std::size_t> img;
        for (const int v : one_based) {
            if (v < 1) {
                raise(ErrorKind::InvalidSigma, "one-line entries are 1-based");
            }
            img.push_back(static_cast<std::size_t>(v - 1));
        }
        return Permutation(std::move(img));
    }

    std::vector<int> one_line() const
    {
        std::vector<int> out;
        for (const auto v : m_image) {
            out.push_back(static_cast<int>(v) + 1);
        }
        return out;
    }

    std::size_t size() const noexcept
    {
        return m_image.size();
    }
    std::size_t operator()(std::size_t k) const
    {
        return m_image.at(k);
    }

    Permutation inverse() const
    {
        std::vector<std::size_t> inv(m_image.size());
        for (std::size_t k = 0; k < m_image.size(); ++k) {
            inv[m_image[k]] = k;
        }
        return Permutation(std::move(inv));
    }

    // (this o inner)(k) = this(inner(k))
    Permutation after(const Permutation &inner) const
    {
        if (inner.size() != size()) {
            raise(ErrorKind::SizeMismatch, "composing permutations of different sizes");
        }
        std::vector<std::size_t> img(size());
        for (std::size_t k = 0; k < size(); ++k) {
            img[k] = m_image[inner.m_image[k]];
        }
        return Permutation(std::move(img));
    }

    bool is_identity() const
    {
        for (std::size_t k = 0; k < m_image.size(); ++k) {
            if (m_image[k] != k) {
                return false;
            }
        }
        return true;
    }

    /// sigma(a) < sigma(b) whenever a < b lie in the same block of `shape`.
    bool preserves_block_order(const GroupShape &shape) const
    {
        if (shape.rank() != size()) {
            return false;
        }
        for (std::size_t a = 0; a + 1 < size(); ++a) {
            if (shape.slot(a).block == shape.slot(a + 1).block && m_image[a] > m_image[a + 1]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;

    std::string to_string() const
    {
        std::string out = "[";
        const auto ol = one_line();
        for (std::size_t k = 0; k < ol.size(); ++k) {
            out += (k ? "," : "") + std::to_string(ol[k]);
        }
        return out + "]";
    }

private:
    std::vector<std::size_t> m_image;
};

inline std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<Permutation> out;
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

inline std::vector<Permutation> block_order_preserving_permutations(const GroupShape &shape)
{
    std::vector<Permutation> out;
    for (auto &s : all_permutations(shape.rank())) {
        if (s.preserves_block_order(shape)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace padicfun

#endif
