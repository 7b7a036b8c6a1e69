#ifndef PADICFUN_POINTS_HPP
#define PADICFUN_POINTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/rational.hpp>
#include <padicfun/tori.hpp>
#include <padicfun/transfer.hpp>

namespace padicfun
{

/// A classical point of an eigenvariety: the weight, the U_p-eigencharacter
/// at each place above p, and Satake parameters at tracked split places.
/// Satake lists are kept in block order, sorted inside each block.
struct ClassicalPoint {
    AlgebraicWeight weight;
    std::map<std::string, UnramifiedCharacter> up;
    std::map<std::string, std::vector<MonomialValue>> satake;

    ClassicalPoint(AlgebraicWeight w, std::map<std::string, UnramifiedCharacter> u,
                   std::map<std::string, std::vector<MonomialValue>> s)
        : weight(std::move(w)), up(std::move(u)), satake(std::move(s))
    {
        for (const auto &[place, chi] : up) {
            detail::check_same_shape(weight.shape, chi.shape);
        }
        for (auto &[place, params] : satake) {
            detail::check_length(weight.shape, params, "Satake parameter list");
            for (std::size_t i = 0; i < weight.shape.num_blocks(); ++i) {
                const auto first = params.begin() + weight.shape.offset(i);
                std::sort(first, first + weight.shape.block_size(i));
            }
        }
    }

    friend bool operator==(const ClassicalPoint &, const ClassicalPoint &) = default;
};

/// Finite stand-in for the classical forms of one weight: points with
/// multiplicities.
struct MockFormSpace {
    struct Entry {
        ClassicalPoint point;
        int multiplicity = 1;
    };

    AlgebraicWeight weight;
    std::vector<Entry> entries;

    explicit MockFormSpace(AlgebraicWeight w) : weight(std::move(w)) {}

    void add(ClassicalPoint pt, int multiplicity = 1)
    {
        if (multiplicity < 1) {
            raise(ErrorKind::InvalidInput, "multiplicities must be positive");
        }
        if (!(pt.weight == weight)) {
            raise(ErrorKind::ShapeMismatch, "point weight differs from the space weight");
        }
        entries.push_back({std::move(pt), multiplicity});
    }
};

inline ClassicalPoint transfer_point(const ClassicalPoint &pt, const TransferConfig &cfg)
{
    auto weight = weight_pullback(pt.weight, cfg);
    std::map<std::string, UnramifiedCharacter> up;
    for (const auto &[place, chi] : pt.up) {
        up.emplace(place, atkin_lehner_pullback(chi, cfg.at_place(place)));
    }
    std::map<std::string, std::vector<MonomialValue>> satake;
    for (const auto &[place, params] : pt.satake) {
        satake.emplace(place, satake_param_transfer(params, cfg.at_place(place)));
    }
    return ClassicalPoint(std::move(weight), std::move(up), std::move(satake));
}

struct DiagramReport {
    std::vector<bool> matched;
    std::size_t matched_count = 0;

    bool all_matched() const
    {
        return matched_count == matched.size();
    }
};

/// For each source point, whether its transfer is among the target points.
inline DiagramReport diagram_check(const std::vector<ClassicalPoint> &z_h, const std::vector<ClassicalPoint> &z_g,
                                   const TransferConfig &cfg)
{
    DiagramReport r;
    for (const auto &pt : z_h) {
        const auto img = transfer_point(pt, cfg);
        const bool hit = std::find(z_g.begin(), z_g.end(), img) != z_g.end();
        r.matched.push_back(hit);
        r.matched_count += hit ? 1 : 0;
    }
    return r;
}

inline MockFormSpace build_transferred_space(const MockFormSpace &space_h, const TransferConfig &cfg)
{
    MockFormSpace out(weight_pullback(space_h.weight, cfg));
    for (const auto &e : space_h.entries) {
        out.add(transfer_point(e.point, cfg), e.multiplicity);
    }
    return out;
}

/// A product of Hecke operators: U-operators 1_{ItI} at places above p
/// (dominant t) and the k-th elementary spherical operators at split places.
struct HeckeSelection {
    struct UpFactor {
        std::string place;
        CocharVector cochar;
    };
    struct SatakeFactor {
        std::string place;
        int k = 1;
    };

    std::vector<UpFactor> up;
    std::vector<SatakeFactor> satake;
};

namespace detail
{

inline Rational elementary_symmetric(const std::vector<Rational> &xs, int k)
{
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, 0);
    e[0] = 1;
    for (const auto &x : xs) {
        for (int j = k; j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j) - 1];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

} // namespace detail

/// Eigenvalue of the selected operator on a point, twisted by the weight
/// character at each U-generator, instantiated through `assign`.
inline Rational eigenvalue(const ClassicalPoint &pt, const HeckeSelection &h, const Assignment &assign)
{
    Rational out = 1;
    const auto kappa = weight_as_character(pt.weight);
    for (const auto &f : h.up) {
        const auto it = pt.up.find(f.place);
        if (it == pt.up.end()) {
            raise(ErrorKind::InvalidInput, "point has no U_p data at place '" + f.place + "'");
        }
        if (!f.cochar.is_dominant()) {
            raise(ErrorKind::NotDominant, "U-operators are indexed by dominant cocharacters");
        }
        out *= mv_eval(char_eval(it->second, f.cochar) * char_eval(kappa, f.cochar), assign);
    }
    for (const auto &f : h.satake) {
        const auto it = pt.satake.find(f.place);
        if (it == pt.satake.end()) {
            raise(ErrorKind::InvalidInput, "point has no Satake data at place '" + f.place + "'");
        }
        if (f.k < 0 || static_cast<std::size_t>(f.k) > it->second.size()) {
            raise(ErrorKind::InvalidInput, "elementary operator index out of range");
        }
        std::vector<Rational> xs;
        for (const auto &v : it->second) {
            xs.push_back(mv_eval(v, assign));
        }
        out *= detail::elementary_symmetric(xs, f.k);
    }
    return out;
}

/// Dense polynomial over Q, coefficients from degree 0 upwards, no trailing zeros.
struct Polynomial {
    std::vector<Rational> coeffs;

    static Polynomial one()
    {
        return {{Rational(1)}};
    }

    std::size_t degree() const
    {
        return coeffs.empty() ? 0 : coeffs.size() - 1;
    }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.coeffs.empty() || b.coeffs.empty()) {
            return {};
        }
        Polynomial out{std::vector<Rational>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
                out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
            }
        }
        out.trim();
        return out;
    }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    void trim()
    {
        while (!coeffs.empty() && coeffs.back() == 0) {
            coeffs.pop_back();
        }
    }
};

/// Nonzero eigenvalues of the selected operator with their multiplicities.
inline std::map<Rational, int> eigenvalue_multiplicities(const MockFormSpace &space, const HeckeSelection &h,
                                                         const Assignment &assign)
{
    std::map<Rational, int> out;
    for (const auto &e : space.entries) {
        const auto lam = eigenvalue(e.point, h, assign);
        if (lam != 0) {
            out[lam] += e.multiplicity;
        }
    }
    return out;
}

/// det(1 - T h | space) = prod (1 - lambda T)^{mult}.
inline Polynomial charpoly(const MockFormSpace &space, const HeckeSelection &h, const Assignment &assign)
{
    auto out = Polynomial::one();
    for (const auto &e : space.entries) {
        const Polynomial factor{{Rational(1), Rational(-eigenvalue(e.point, h, assign))}};
        for (int m = 0; m < e.multiplicity; ++m) {
            out = out * factor;
        }
    }
    return out;
}

/// det_H divides det_G^C. Both sides split into linear factors, so this is a
/// comparison of root multiplicities.
inline bool divisibility_check(const MockFormSpace &space_h, const MockFormSpace &space_g, std::uint64_t c,
                               const HeckeSelection &h, const Assignment &assign)
{
    const auto mh = eigenvalue_multiplicities(space_h, h, assign);
    const auto mg = eigenvalue_multiplicities(space_g, h, assign);
    for (const auto &[lam, m] : mh) {
        const auto it = mg.find(lam);
        const std::uint64_t g = it == mg.end() ? 0 : static_cast<std::uint64_t>(it->second);
        if (static_cast<std::uint64_t>(m) > c * g) {
            return false;
        }
    }
    return true;
}

/// max over the packet of ceil(dim_H / dim_G).
inline std::uint64_t constant_C(std::uint64_t dim_h, const std::vector<std::uint64_t> &dims_g)
{
    if (dims_g.empty()) {
        raise(ErrorKind::EmptyPacket, "the packet of target dimensions is empty");
    }
    if (dim_h == 0) {
        raise(ErrorKind::InvalidInput, "dimensions must be positive");
    }
    std::uint64_t c = 0;
    for (const auto d : dims_g) {
        if (d == 0) {
            raise(ErrorKind::InvalidInput, "dimensions must be positive");
        }
        c = std::max(c, (dim_h + d - 1) / d);
    }
    return c;
}

} // namespace padicfun

#endif
