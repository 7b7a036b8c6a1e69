#ifndef PADICFUN_REFINEMENTS_HPP
#define PADICFUN_REFINEMENTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/tori.hpp>
#include <padicfun/transfer.hpp>

namespace padicfun
{

/// gamma * St(d): an unramified twist of the Steinberg representation of GL_d.
struct Segment {
    MonomialValue gamma;
    int d = 1;

    friend bool operator==(const Segment &, const Segment &) = default;
};

/// [gamma q^{(d-1)/2}, gamma q^{(d-3)/2}, ..., gamma q^{-(d-1)/2}]; this
/// descending order is the segment's internal order.
inline std::vector<MonomialValue> segment_params(const Segment &s)
{
    if (s.d < 1) {
        raise(ErrorKind::InvalidInput, "segment length must be positive");
    }
    std::vector<MonomialValue> out;
    for (int t = 0; t < s.d; ++t) {
        out.push_back(s.gamma * MonomialValue::symbol(symbols::q, HalfInt::from_doubled(s.d - 1 - 2 * t)));
    }
    return out;
}

/// Two segments are linked when their ladders, put end to end, form a longer
/// q-ladder. Overlapping ladders repeat a value and are caught separately.
inline bool linked(const Segment &a, const Segment &b)
{
    const auto pa = segment_params(a);
    const auto pb = segment_params(b);
    const auto step = MonomialValue::symbol(symbols::q, HalfInt::from_int(-1));
    return pa.back() * step == pb.front() || pb.back() * step == pa.front();
}

/// Finite model of a tempered Iwahori-spherical representation of
/// GL_{n_1} x ... x GL_{n_r}: per block, an induced product of twisted
/// Steinberg segments.
struct LocalRepDescriptor {
    GroupShape shape;
    std::vector<std::vector<Segment>> blocks;
    // Within each block: parameters pairwise distinct and no two segments linked.
    bool generic = false;

    static LocalRepDescriptor from_blocks(std::vector<std::vector<Segment>> blocks)
    {
        std::vector<int> sizes;
        bool generic = true;
        for (const auto &blk : blocks) {
            if (blk.empty()) {
                raise(ErrorKind::InvalidInput, "every block needs at least one segment");
            }
            int n = 0;
            std::vector<MonomialValue> vals;
            for (const auto &s : blk) {
                const auto p = segment_params(s);
                vals.insert(vals.end(), p.begin(), p.end());
                n += s.d;
            }
            sizes.push_back(n);
            std::sort(vals.begin(), vals.end());
            if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) {
                generic = false;
            }
            for (std::size_t a = 0; a < blk.size(); ++a) {
                for (std::size_t b = a + 1; b < blk.size(); ++b) {
                    generic = generic && !linked(blk[a], blk[b]);
                }
            }
        }
        LocalRepDescriptor out{GroupShape(std::move(sizes)), std::move(blocks), generic};
        return out;
    }

    std::vector<MonomialValue> block_params(std::size_t i) const
    {
        std::vector<MonomialValue> out;
        for (const auto &s : blocks.at(i)) {
            const auto p = segment_params(s);
            out.insert(out.end(), p.begin(), p.end());
        }
        return out;
    }
};

/// A refinement is an unramified character whose basis values order the
/// Satake parameters of each block.
using Refinement = UnramifiedCharacter;

namespace detail
{

inline void require_generic(const LocalRepDescriptor &desc)
{
    if (!desc.generic) {
        raise(ErrorKind::UnsupportedLinked, "accessibility is only decided for generic descriptors");
    }
}

inline std::vector<std::vector<MonomialValue>> distinct_orderings(std::vector<MonomialValue> vals)
{
    std::vector<std::vector<MonomialValue>> out;
    std::sort(vals.begin(), vals.end());
    do {
        out.push_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace detail

/// Every ordering of each block's parameter multiset, combined across blocks
/// (first block varying slowest).
inline std::vector<Refinement> enumerate_refinements(const LocalRepDescriptor &desc)
{
    std::vector<std::vector<MonomialValue>> acc{{}};
    for (std::size_t i = 0; i < desc.blocks.size(); ++i) {
        std::vector<std::vector<MonomialValue>> next;
        const auto orders = detail::distinct_orderings(desc.block_params(i));
        for (const auto &prefix : acc) {
            for (const auto &o : orders) {
                auto v = prefix;
                v.insert(v.end(), o.begin(), o.end());
                next.push_back(std::move(v));
            }
        }
        acc = std::move(next);
    }
    std::vector<Refinement> out;
    for (auto &v : acc) {
        out.emplace_back(desc.shape, std::move(v));
    }
    return out;
}

/// Accessible iff inside every block each segment's parameters occur in
/// their internal (descending) order.
inline bool is_accessible(const LocalRepDescriptor &desc, const Refinement &ref)
{
    detail::require_generic(desc);
    detail::check_same_shape(desc.shape, ref.shape);
    for (std::size_t i = 0; i < desc.blocks.size(); ++i) {
        const auto off = static_cast<std::size_t>(desc.shape.offset(i));
        const auto len = static_cast<std::size_t>(desc.shape.block_size(i));
        const std::vector<MonomialValue> ordering(ref.values.begin() + static_cast<long>(off),
                                                  ref.values.begin() + static_cast<long>(off + len));
        auto sorted_ref = ordering;
        auto sorted_par = desc.block_params(i);
        std::sort(sorted_ref.begin(), sorted_ref.end());
        std::sort(sorted_par.begin(), sorted_par.end());
        if (sorted_ref != sorted_par) {
            raise(ErrorKind::NotARefinement, "block " + std::to_string(i + 1) + " does not order the Satake parameters");
        }
        for (const auto &seg : desc.blocks[i]) {
            std::size_t last = 0;
            bool first = true;
            for (const auto &v : segment_params(seg)) {
                const auto pos = static_cast<std::size_t>(std::find(ordering.begin(), ordering.end(), v) - ordering.begin());
                if (!first && pos < last) {
                    return false;
                }
                last = pos;
                first = false;
            }
        }
    }
    return true;
}

/// prod over blocks of the multinomial n_i! / (d_{i,1}! ... d_{i,m_i}!).
inline std::uint64_t count_accessible(const LocalRepDescriptor &desc)
{
    detail::require_generic(desc);
    std::uint64_t total = 1;
    for (const auto &blk : desc.blocks) {
        std::uint64_t placed = 0;
        for (const auto &s : blk) {
            placed += static_cast<std::uint64_t>(s.d);
            total *= detail::binomial(placed, static_cast<std::uint64_t>(s.d));
        }
    }
    return total;
}

/// The descriptor of the transfer to U_n: all segments in one block, each
/// twisted by mu_{n-n_i}(W).
inline LocalRepDescriptor transfer_descriptor(const LocalRepDescriptor &desc_h, const TransferConfig &cfg)
{
    detail::check_same_shape(desc_h.shape, cfg.source);
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < desc_h.blocks.size(); ++i) {
        const auto tw = cfg.twisted(i) ? MonomialValue::symbol(cfg.mu) : MonomialValue::one();
        for (const auto &s : desc_h.blocks[i]) {
            segs.push_back({tw * s.gamma, s.d});
        }
    }
    return LocalRepDescriptor::from_blocks({std::move(segs)});
}

/// Whether every accessible refinement of desc_h is carried by the refinement
/// map to an accessible refinement of the transfer.
inline bool accessible_transfer_check(const LocalRepDescriptor &desc_h, const TransferConfig &cfg,
                                      SigmaPolicy policy = SigmaPolicy::enforce)
{
    validate_sigma(cfg, policy);
    detail::require_generic(desc_h);
    const auto desc_g = transfer_descriptor(desc_h, cfg);
    detail::require_generic(desc_g);
    const auto r = refinement_map(cfg, policy);
    for (const auto &chi : enumerate_refinements(desc_h)) {
        if (is_accessible(desc_h, chi) && !is_accessible(desc_g, r.pullback(chi))) {
            return false;
        }
    }
    return true;
}

struct RefinementCounts {
    std::uint64_t source = 0;
    std::uint64_t target = 0;
    bool holds = false;
};

inline RefinementCounts refinement_count_inequality(const LocalRepDescriptor &desc_h, const TransferConfig &cfg)
{
    validate_sigma(cfg);
    const auto ch = count_accessible(desc_h);
    const auto cg = count_accessible(transfer_descriptor(desc_h, cfg));
    return {ch, cg, ch <= cg};
}

/// kappa * chi * delta_B^{-1/2}: the U_p-eigencharacter attached to a
/// refinement chi of a form of weight kappa.
inline UnramifiedCharacter normalize_point(const AlgebraicWeight &kappa, const Refinement &chi)
{
    detail::check_same_shape(kappa.shape, chi.shape);
    return weight_as_character(kappa) * chi * modulus_half(kappa.shape, -1);
}

} // namespace padicfun

#endif
