#ifndef PADICFUN_TRANSFER_HPP
#define PADICFUN_TRANSFER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <padicfun/error.hpp>
#include <padicfun/laurent.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/permutation.hpp>
#include <padicfun/rational.hpp>
#include <padicfun/tori.hpp>

namespace padicfun
{

/// Data fixing the Langlands direct sum transfer from U_{n_1} x ... x U_{n_r}
/// to U_n at one place: the source shape, the ordering sigma, the half-integer
/// alpha of the twisting character at the matching archimedean place, and the
/// symbol standing for mu(W). Blocks with n - n_i odd are twisted by mu,
/// blocks with n - n_i even are not.
struct TransferConfig {
    GroupShape source;
    Permutation sigma;
    HalfInt alpha = HalfInt::from_doubled(1);
    std::string mu = symbols::mu;
    // Per-place overrides of the mu symbol.
    std::map<std::string, std::string> place_mu;

    TransferConfig() : TransferConfig(GroupShape::single(1)) {}

    explicit TransferConfig(GroupShape shape, std::optional<Permutation> s = std::nullopt,
                            HalfInt a = HalfInt::from_doubled(1), std::string mu_symbol = symbols::mu)
        : source(std::move(shape)), sigma(s ? std::move(*s) : Permutation::identity(source.rank())), alpha(a),
          mu(std::move(mu_symbol))
    {
    }

    std::size_t rank() const noexcept
    {
        return source.rank();
    }
    GroupShape target() const
    {
        return GroupShape::single(static_cast<int>(rank()));
    }
    bool twisted(std::size_t block) const
    {
        return (static_cast<int>(rank()) - source.block_size(block)) % 2 != 0;
    }
    const std::string &mu_for(const std::string &place) const
    {
        const auto it = place_mu.find(place);
        return it == place_mu.end() ? mu : it->second;
    }
    TransferConfig at_place(const std::string &place) const
    {
        auto out = *this;
        out.mu = mu_for(place);
        return out;
    }
    // mu_{n-n_i}(W) for the block holding source position q.
    MonomialValue twist_at(std::size_t q) const
    {
        return twisted(source.slot(q).block) ? MonomialValue::symbol(mu) : MonomialValue::one();
    }
};

enum class SigmaPolicy {
    enforce,
    // Only for experiments with orderings outside the accessible-transfer lemma.
    admit_any,
};

inline void validate_sigma(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    if (cfg.sigma.size() != cfg.rank()) {
        raise(ErrorKind::SizeMismatch, "sigma has size " + std::to_string(cfg.sigma.size()) + ", shape "
                                           + cfg.source.to_string() + " has rank " + std::to_string(cfg.rank()));
    }
    if (policy == SigmaPolicy::enforce && !cfg.sigma.preserves_block_order(cfg.source)) {
        raise(ErrorKind::InvalidSigma, "sigma " + cfg.sigma.to_string() + " does not preserve the order inside the blocks of "
                                           + cfg.source.to_string());
    }
}

inline UnramifiedCharacter iota_sigma_pullback(const UnramifiedCharacter &chi, const Permutation &sigma)
{
    if (chi.shape.num_blocks() != 1) {
        raise(ErrorKind::SizeMismatch, "iota_sigma acts on a single-block torus");
    }
    if (sigma.size() != chi.shape.rank()) {
        raise(ErrorKind::SizeMismatch, "sigma and character sizes differ");
    }
    const auto inv = sigma.inverse();
    std::vector<MonomialValue> v;
    for (std::size_t p = 0; p < sigma.size(); ++p) {
        v.push_back(chi.values[inv(p)]);
    }
    return {chi.shape, std::move(v)};
}

struct MonoidImage {
    MonomialValue scalar;
    CocharVector cochar;
};

/// A morphism of monoid algebras Q[T_G] -> Q[T_H] of the shape that every
/// transfer map here takes: the basis cocharacter e_p of T_G goes to
/// scalars[p] * [images[p]]. Through the isomorphism t -> 1_{ItI} this is
/// also the induced map of Atkin-Lehner algebras.
struct MonoidMap {
    GroupShape source;
    GroupShape target;
    std::vector<MonomialValue> scalars;
    std::vector<CocharVector> images;

    MonoidImage apply(const CocharVector &t) const
    {
        detail::check_same_shape(source, t.shape);
        MonoidImage out{MonomialValue::one(), CocharVector::zero(target)};
        for (std::size_t p = 0; p < t.entries.size(); ++p) {
            if (t.entries[p] != 0) {
                out.scalar *= scalars[p].pow(t.entries[p]);
                for (std::size_t q = 0; q < target.rank(); ++q) {
                    out.cochar.entries[q] += t.entries[p] * images[p].entries[q];
                }
            }
        }
        return out;
    }

    // chi o f, as a character of T_G.
    UnramifiedCharacter pullback(const UnramifiedCharacter &chi) const
    {
        detail::check_same_shape(target, chi.shape);
        std::vector<MonomialValue> v;
        for (std::size_t p = 0; p < source.rank(); ++p) {
            v.push_back(scalars[p] * char_eval(chi, images[p]));
        }
        return {source, std::move(v)};
    }

    // t -> f(t) * delta_G^{-1/2}(t) * delta_H^{1/2}(torus part of f(t))
    MonoidMap normalized() const
    {
        auto out = *this;
        const auto dg = modulus_half(source, -1);
        const auto dh = modulus_half(target, +1);
        for (std::size_t p = 0; p < source.rank(); ++p) {
            out.scalars[p] *= dg.values[p] * char_eval(dh, images[p]);
        }
        return out;
    }

    // Multiplies the scalar of e_p by W^{exponents[p]}.
    MonoidMap scaled_by_uniformizer(const std::vector<HalfInt> &exponents) const
    {
        auto out = *this;
        for (std::size_t p = 0; p < source.rank(); ++p) {
            out.scalars[p] *= MonomialValue::symbol(symbols::uniformizer, exponents.at(p));
        }
        return out;
    }
};

/// Shifts in the weight transfer. `pre[q]` is the exponent
///   alpha * [n - n_i odd] + (n_i - n)/2 + n_1 + ... + n_{i-1}
/// attached to source position q = (i, j); `post[p]` is the shift seen at
/// target position p once sigma acts through the rho-shifted action,
///   post[p] = pre[s] + p - s  with s = sigma^{-1}(p).
struct ExactWeightShift {
    std::vector<HalfInt> pre;
    std::vector<HalfInt> post;

    bool integral() const
    {
        const auto ok = [](HalfInt h) { return h.is_integral(); };
        return std::all_of(pre.begin(), pre.end(), ok) && std::all_of(post.begin(), post.end(), ok);
    }
};

struct WeightShift {
    std::vector<int> pre;
    std::vector<int> post;
};

inline ExactWeightShift weight_shift_exact(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    validate_sigma(cfg, policy);
    const int n = static_cast<int>(cfg.rank());
    ExactWeightShift out;
    for (std::size_t q = 0; q < cfg.rank(); ++q) {
        const auto blk = cfg.source.slot(q).block;
        const int ni = cfg.source.block_size(blk);
        const int twice = (cfg.twisted(blk) ? cfg.alpha.doubled : 0) + (ni - n) + 2 * cfg.source.offset(blk);
        out.pre.push_back(HalfInt::from_doubled(twice));
    }
    const auto inv = cfg.sigma.inverse();
    for (std::size_t p = 0; p < cfg.rank(); ++p) {
        const auto s = inv(p);
        out.post.push_back(HalfInt::from_doubled(out.pre[s].doubled + 2 * (static_cast<int>(p) - static_cast<int>(s))));
    }
    return out;
}

inline WeightShift weight_shift(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    const auto exact = weight_shift_exact(cfg, policy);
    WeightShift out;
    for (std::size_t p = 0; p < cfg.rank(); ++p) {
        if (!exact.pre[p].is_integral() || !exact.post[p].is_integral()) {
            raise(ErrorKind::NonIntegralShift, "alpha = " + cfg.alpha.to_string() + " gives shift "
                                                   + exact.pre[p].to_string() + " on shape " + cfg.source.to_string());
        }
        out.pre.push_back(exact.pre[p].doubled / 2);
        out.post.push_back(exact.post[p].doubled / 2);
    }
    return out;
}

/// R = R_0 o iota_sigma: e_p -> mu_{n-n_i}(W) e_{sigma^{-1}(p)}.
inline MonoidMap refinement_map(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    validate_sigma(cfg, policy);
    MonoidMap f{cfg.target(), cfg.source, {}, {}};
    const auto inv = cfg.sigma.inverse();
    for (std::size_t p = 0; p < cfg.rank(); ++p) {
        f.scalars.push_back(cfg.twist_at(inv(p)));
        f.images.push_back(CocharVector::basis(cfg.source, inv(p)));
    }
    return f;
}

inline MonoidMap normalized_refinement_map(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    return refinement_map(cfg, policy).normalized();
}

/// Xi*_W on T/T^0: e_p -> W^{post[p]} e_{sigma^{-1}(p)}.
inline MonoidMap weight_lattice_map(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    const auto shift = weight_shift_exact(cfg, policy);
    MonoidMap f{cfg.target(), cfg.source, {}, {}};
    const auto inv = cfg.sigma.inverse();
    for (std::size_t p = 0; p < cfg.rank(); ++p) {
        f.scalars.push_back(MonomialValue::symbol(symbols::uniformizer, shift.post[p]));
        f.images.push_back(CocharVector::basis(cfg.source, inv(p)));
    }
    return f;
}

// Lambda-dagger: the refinement map with the uniformizer scaling, before normalizing.
inline MonoidMap atkin_lehner_dagger_map(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    return refinement_map(cfg, policy).scaled_by_uniformizer(weight_shift_exact(cfg, policy).post);
}

inline MonoidMap atkin_lehner_map(const TransferConfig &cfg, SigmaPolicy policy = SigmaPolicy::enforce)
{
    return atkin_lehner_dagger_map(cfg, policy).normalized();
}

inline UnramifiedCharacter refinement_pullback(const UnramifiedCharacter &chi_h, const TransferConfig &cfg,
                                               SigmaPolicy policy = SigmaPolicy::enforce)
{
    return refinement_map(cfg, policy).pullback(chi_h);
}

inline UnramifiedCharacter refinement_pullback_normalized(const UnramifiedCharacter &chi_h, const TransferConfig &cfg,
                                                          SigmaPolicy policy = SigmaPolicy::enforce)
{
    return normalized_refinement_map(cfg, policy).pullback(chi_h);
}

inline UnramifiedCharacter atkin_lehner_pullback(const UnramifiedCharacter &chi_h, const TransferConfig &cfg)
{
    weight_shift(cfg); // integrality
    return atkin_lehner_map(cfg).pullback(chi_h);
}

/// Image of 1_{ItI} under Lambda*, read in the monoid algebra of the source.
inline MonoidImage atkin_lehner_image(const CocharVector &t, const TransferConfig &cfg)
{
    if (!t.is_dominant()) {
        raise(ErrorKind::NotDominant, "Atkin-Lehner generators are indexed by dominant cocharacters");
    }
    weight_shift(cfg);
    return atkin_lehner_map(cfg).apply(t);
}

inline AlgebraicWeight weight_pullback(const AlgebraicWeight &kappa_h, const TransferConfig &cfg)
{
    detail::check_same_shape(kappa_h.shape, cfg.source);
    const auto shift = weight_shift(cfg);
    const auto inv = cfg.sigma.inverse();
    std::vector<int> k;
    for (std::size_t p = 0; p < cfg.rank(); ++p) {
        k.push_back(shift.post[p] + kappa_h.k[inv(p)]);
    }
    return {cfg.target(), std::move(k)};
}

/// Integrality of the shifts plus validity of sigma; together they make the
/// affine map on weight lattices a bijection of Z^n.
inline bool weight_map_check(const TransferConfig &cfg)
{
    try {
        weight_shift(cfg);
    } catch (const Error &) {
        return false;
    }
    return true;
}

struct ArchimedeanTransfer {
    AlgebraicWeight weight;
    // sigma(q) = rank of source position q in the descending order.
    Permutation sigma;
    // The Langlands-parameter numbers k_{i,j} + (n_i+1)/2 - j + alpha_{n-n_i}.
    std::vector<HalfInt> parameters;
};

inline ArchimedeanTransfer archimedean_transfer(const AlgebraicWeight &kappa_h, HalfInt alpha)
{
    if (!is_dominant(kappa_h)) {
        raise(ErrorKind::NotDominant, "archimedean transfer needs a dominant weight");
    }
    const auto &shape = kappa_h.shape;
    const int n = static_cast<int>(shape.rank());
    std::vector<HalfInt> m;
    for (std::size_t q = 0; q < shape.rank(); ++q) {
        const auto &s = shape.slot(q);
        const int ni = shape.block_size(s.block);
        const int j = static_cast<int>(s.index) + 1;
        const bool odd = (n - ni) % 2 != 0;
        m.push_back(HalfInt::from_doubled(2 * kappa_h.k[q] + (ni + 1) - 2 * j + (odd ? alpha.doubled : 0)));
    }
    std::vector<std::size_t> order(shape.rank());
    for (std::size_t q = 0; q < order.size(); ++q) {
        order[q] = q;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
    for (std::size_t r = 0; r + 1 < order.size(); ++r) {
        if (m[order[r]] == m[order[r + 1]]) {
            raise(ErrorKind::NotRelevant, "parameters collide at " + m[order[r]].to_string());
        }
    }
    std::vector<std::size_t> rank_of(shape.rank());
    std::vector<int> k;
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank_of[order[r]] = r;
        const int twice = m[order[r]].doubled - (n + 1) + 2 * (static_cast<int>(r) + 1);
        if (twice % 2 != 0) {
            raise(ErrorKind::NonIntegralShift, "transferred weight is not integral for alpha = " + alpha.to_string());
        }
        k.push_back(twice / 2);
    }
    return {AlgebraicWeight(GroupShape::single(n), std::move(k)), Permutation(std::move(rank_of)), std::move(m)};
}

inline Permutation archimedean_sigma(const AlgebraicWeight &kappa_h, HalfInt alpha)
{
    return archimedean_transfer(kappa_h, alpha).sigma;
}

/// Pulls a Weyl-invariant Laurent polynomial in y_1..y_n (the Satake image of
/// the spherical algebra of U_n) back along the dual torus map:
/// y_p -> mu_{n-n_i}(W) x_{sigma^{-1}(p)}.
inline LaurentPoly satake_transfer(const LaurentPoly &p, const TransferConfig &cfg)
{
    if (p.blocks() != std::vector<int>{static_cast<int>(cfg.rank())}) {
        raise(ErrorKind::SizeMismatch, "expected a polynomial in one block of " + std::to_string(cfg.rank()) + " variables");
    }
    if (cfg.sigma.size() != cfg.rank()) {
        raise(ErrorKind::SizeMismatch, "sigma and shape sizes differ");
    }
    if (!p.is_block_symmetric()) {
        raise(ErrorKind::NotSymmetric, "input is not symmetric in y_1..y_n");
    }
    const auto inv = cfg.sigma.inverse();
    LaurentPoly out(cfg.source.blocks());
    for (const auto &[key, c] : p.terms()) {
        std::vector<int> e(cfg.rank(), 0);
        MonomialValue coeff(c, key.syms);
        for (std::size_t t = 0; t < cfg.rank(); ++t) {
            if (key.vars[t] == 0) {
                continue;
            }
            e[inv(t)] += key.vars[t];
            coeff *= cfg.twist_at(inv(t)).pow(key.vars[t]);
        }
        out.add_term(std::move(e), coeff);
    }
    return out;
}

/// Satake parameters of the parabolic induction of the twisted blocks, as a
/// sorted multiset of size n.
inline std::vector<MonomialValue> satake_param_transfer(const std::vector<std::vector<MonomialValue>> &params,
                                                        const TransferConfig &cfg)
{
    if (params.size() != cfg.source.num_blocks()) {
        raise(ErrorKind::SizeMismatch, "expected " + std::to_string(cfg.source.num_blocks()) + " blocks of parameters");
    }
    std::vector<MonomialValue> out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (static_cast<int>(params[i].size()) != cfg.source.block_size(i)) {
            raise(ErrorKind::SizeMismatch, "block " + std::to_string(i + 1) + " needs "
                                               + std::to_string(cfg.source.block_size(i)) + " parameters");
        }
        const auto tw = cfg.twisted(i) ? MonomialValue::symbol(cfg.mu) : MonomialValue::one();
        for (const auto &v : params[i]) {
            out.push_back(tw * v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Flat form: params listed in block order, n entries.
inline std::vector<MonomialValue> satake_param_transfer(const std::vector<MonomialValue> &flat, const TransferConfig &cfg)
{
    detail::check_length(cfg.source, flat, "Satake parameter list");
    std::vector<std::vector<MonomialValue>> blocks(cfg.source.num_blocks());
    for (std::size_t q = 0; q < flat.size(); ++q) {
        blocks[cfg.source.slot(q).block].push_back(flat[q]);
    }
    return satake_param_transfer(blocks, cfg);
}

struct Residual {
    std::string identity;
    std::vector<int> generator;
    std::string residual;
};

struct TransferReport {
    bool pass = true;
    std::vector<Residual> residuals;
    std::size_t generators_checked = 0;
};

/// The maps entering the compatibility conditions; exposed so that callers
/// can check deliberately altered maps.
struct Hypothesis1Maps {
    MonoidMap refinement;            // R
    MonoidMap refinement_normalized; // R'
    MonoidMap atkin_lehner;          // Lambda*
    MonoidMap weight;                // Xi*_W on T/T^0
};

inline Hypothesis1Maps build_hypothesis1_maps(const TransferConfig &cfg)
{
    return {refinement_map(cfg), normalized_refinement_map(cfg), atkin_lehner_map(cfg), weight_lattice_map(cfg)};
}

/// Symbolic check, with generic characters chi and delta of the source torus,
/// of
///   condition2:     (chi*delta) o Lambda* = (chi o R') * (delta o Xi*_W)
///   trivial-lemma:  (chi * delta_H^{-1/2}) o R' = (chi o R) * delta_G^{-1/2}
///   monoid:         Lambda* sends dominant generators to dominant cocharacters
///   integrality:    all weight shifts are integers
/// over the monoid generators of the dominant cocharacters of U_n.
inline TransferReport hypothesis1_verify(const TransferConfig &cfg, const Hypothesis1Maps &maps)
{
    TransferReport report;
    const auto fail = [&](std::string id, std::vector<int> gen, std::string res) {
        report.pass = false;
        report.residuals.push_back({std::move(id), std::move(gen), std::move(res)});
    };

    const auto shift = weight_shift_exact(cfg);
    if (!shift.integral()) {
        fail("integrality", {}, "alpha = " + cfg.alpha.to_string() + " gives non-integral shifts");
    }

    const auto chi = UnramifiedCharacter::generic(cfg.source, "chi");
    const auto delta = UnramifiedCharacter::generic(cfg.source, "delta");
    const auto dh_inv = modulus_half(cfg.source, -1);
    const auto dg_inv = modulus_half(cfg.target(), -1);

    for (const auto &t : dominant_generators(cfg.target())) {
        ++report.generators_checked;

        const auto lam = maps.atkin_lehner.apply(t);
        const auto lhs = lam.scalar * char_eval(chi * delta, lam.cochar);
        const auto rp = maps.refinement_normalized.apply(t);
        const auto xw = maps.weight.apply(t);
        const auto rhs = rp.scalar * char_eval(chi, rp.cochar) * xw.scalar * char_eval(delta, xw.cochar);
        if (!(lhs == rhs)) {
            fail("condition2", t.entries, (lhs / rhs).to_string());
        }

        const auto lhs2 = rp.scalar * char_eval(chi * dh_inv, rp.cochar);
        const auto r = maps.refinement.apply(t);
        const auto rhs2 = r.scalar * char_eval(chi, r.cochar) * char_eval(dg_inv, t);
        if (!(lhs2 == rhs2)) {
            fail("trivial-lemma", t.entries, (lhs2 / rhs2).to_string());
        }

        if (t.is_dominant() && !lam.cochar.is_dominant()) {
            fail("monoid", t.entries, "image is not dominant");
        }
    }
    return report;
}

inline TransferReport hypothesis1_verify(const TransferConfig &cfg)
{
    try {
        validate_sigma(cfg);
    } catch (const Error &e) {
        TransferReport r;
        r.pass = false;
        r.residuals.push_back({"sigma", {}, e.what()});
        return r;
    }
    return hypothesis1_verify(cfg, build_hypothesis1_maps(cfg));
}

} // namespace padicfun

#endif
