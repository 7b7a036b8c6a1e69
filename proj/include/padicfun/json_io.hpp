#ifndef PADICFUN_JSON_IO_HPP
#define PADICFUN_JSON_IO_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <padicfun/error.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/permutation.hpp>
#include <padicfun/points.hpp>
#include <padicfun/refinements.hpp>
#include <padicfun/tori.hpp>
#include <padicfun/transfer.hpp>

namespace padicfun::io
{

using nlohmann::json;

inline const json &require(const json &obj, const char *key)
{
    if (!obj.is_object() || !obj.contains(key)) {
        raise(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

inline int to_int(const json &j, const char *what)
{
    if (!j.is_number_integer()) {
        raise(ErrorKind::InvalidInput, std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

inline std::vector<int> to_int_array(const json &j, const char *what)
{
    if (!j.is_array()) {
        raise(ErrorKind::InvalidInput, std::string(what) + " must be an array of integers");
    }
    std::vector<int> out;
    for (const auto &e : j) {
        out.push_back(to_int(e, what));
    }
    return out;
}

// Rationals travel as strings ("3/4") or plain integers.
inline Rational to_rational(const json &j, const char *what)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        raise(ErrorKind::InvalidInput, std::string(what) + " must be a rational string");
    }
    return parse_rational(j.get<std::string>());
}

inline MonomialValue to_monomial(const json &j)
{
    if (j.is_number_integer()) {
        return MonomialValue(Rational(j.get<long>()));
    }
    if (!j.is_string()) {
        raise(ErrorKind::InvalidInput, "monomial values are strings such as \"2 * q^(1/2)\"");
    }
    return MonomialValue::parse(j.get<std::string>());
}

inline std::vector<MonomialValue> to_monomials(const json &j)
{
    if (!j.is_array()) {
        raise(ErrorKind::InvalidInput, "expected an array of monomial values");
    }
    std::vector<MonomialValue> out;
    for (const auto &e : j) {
        out.push_back(to_monomial(e));
    }
    return out;
}

inline json from_monomials(const std::vector<MonomialValue> &v)
{
    json out = json::array();
    for (const auto &m : v) {
        out.push_back(m.to_string());
    }
    return out;
}

inline HalfInt to_half_int(const json &j)
{
    if (j.is_number_integer()) {
        return HalfInt::from_int(j.get<int>());
    }
    if (!j.is_string()) {
        raise(ErrorKind::InvalidInput, "alpha must be a string such as \"1/2\"");
    }
    return HalfInt::parse(j.get<std::string>());
}

inline GroupShape to_shape(const json &j)
{
    return GroupShape(to_int_array(j, "blocks"));
}

/// cfg = {blocks, sigma?, alpha?, mu?, places?: {tag: {mu}}}
inline TransferConfig to_config(const json &j)
{
    TransferConfig cfg(to_shape(require(j, "blocks")));
    if (j.contains("sigma")) {
        cfg.sigma = Permutation::from_one_line(to_int_array(j.at("sigma"), "sigma"));
    }
    if (j.contains("alpha")) {
        cfg.alpha = to_half_int(j.at("alpha"));
    }
    if (j.contains("mu")) {
        cfg.mu = require(j, "mu").get<std::string>();
    }
    if (j.contains("places")) {
        for (const auto &[tag, spec] : j.at("places").items()) {
            if (spec.is_object() && spec.contains("mu")) {
                cfg.place_mu[tag] = spec.at("mu").get<std::string>();
            }
        }
    }
    if (!is_valid_symbol(cfg.mu)) {
        raise(ErrorKind::InvalidInput, "invalid mu symbol '" + cfg.mu + "'");
    }
    validate_sigma(cfg, SigmaPolicy::admit_any);
    return cfg;
}

inline json from_config(const TransferConfig &cfg)
{
    json places = json::object();
    for (const auto &[tag, mu] : cfg.place_mu) {
        places[tag] = {{"mu", mu}};
    }
    return {{"blocks", cfg.source.blocks()},
            {"sigma", cfg.sigma.one_line()},
            {"alpha", cfg.alpha.to_string()},
            {"mu", cfg.mu},
            {"places", places}};
}

/// Weights are arrays grouped by block: [[k_11, k_12], [k_21]].
inline AlgebraicWeight to_weight(const json &j)
{
    if (!j.is_array() || j.empty()) {
        raise(ErrorKind::InvalidInput, "weight must be a non-empty array of blocks");
    }
    std::vector<std::vector<int>> blocks;
    for (const auto &b : j) {
        blocks.push_back(to_int_array(b, "weight block"));
    }
    return AlgebraicWeight::from_blocks(blocks);
}

inline json from_weight(const AlgebraicWeight &w)
{
    return w.to_blocks();
}

inline UnramifiedCharacter to_character(const json &j, const GroupShape &shape)
{
    return UnramifiedCharacter(shape, to_monomials(j));
}

inline json from_character(const UnramifiedCharacter &chi)
{
    return from_monomials(chi.values);
}

/// descriptor = {blocks: [[{gamma, d}, ...], ...]}
inline LocalRepDescriptor to_descriptor(const json &j)
{
    const auto &bs = require(j, "blocks");
    if (!bs.is_array() || bs.empty()) {
        raise(ErrorKind::InvalidInput, "descriptor blocks must be a non-empty array");
    }
    std::vector<std::vector<Segment>> blocks;
    for (const auto &b : bs) {
        if (!b.is_array()) {
            raise(ErrorKind::InvalidInput, "each descriptor block is an array of segments");
        }
        std::vector<Segment> segs;
        for (const auto &s : b) {
            segs.push_back({s.contains("gamma") ? to_monomial(s.at("gamma")) : MonomialValue::one(),
                            s.contains("d") ? to_int(s.at("d"), "d") : 1});
        }
        blocks.push_back(std::move(segs));
    }
    return LocalRepDescriptor::from_blocks(std::move(blocks));
}

inline json from_descriptor(const LocalRepDescriptor &d)
{
    json blocks = json::array();
    for (const auto &b : d.blocks) {
        json segs = json::array();
        for (const auto &s : b) {
            segs.push_back({{"gamma", s.gamma.to_string()}, {"d", s.d}});
        }
        blocks.push_back(segs);
    }
    return {{"blocks", blocks}, {"generic", d.generic}};
}

/// point = {weight, up: {place: [values]}, satake: {place: [values]}}; the
/// weight may be omitted when `fallback` supplies it.
inline ClassicalPoint to_point(const json &j, const std::optional<AlgebraicWeight> &fallback = std::nullopt)
{
    if (!j.is_object()) {
        raise(ErrorKind::InvalidInput, "a point is a JSON object");
    }
    auto weight = j.contains("weight") ? to_weight(j.at("weight")) : (fallback ? *fallback : to_weight(require(j, "weight")));
    std::map<std::string, UnramifiedCharacter> up;
    if (j.contains("up")) {
        for (const auto &[place, vals] : j.at("up").items()) {
            up.emplace(place, to_character(vals, weight.shape));
        }
    }
    std::map<std::string, std::vector<MonomialValue>> satake;
    if (j.contains("satake")) {
        for (const auto &[place, vals] : j.at("satake").items()) {
            // Either flat or grouped by block.
            std::vector<MonomialValue> flat;
            if (!vals.empty() && vals.front().is_array()) {
                for (const auto &b : vals) {
                    const auto part = to_monomials(b);
                    flat.insert(flat.end(), part.begin(), part.end());
                }
            } else {
                flat = to_monomials(vals);
            }
            satake.emplace(place, std::move(flat));
        }
    }
    return ClassicalPoint(std::move(weight), std::move(up), std::move(satake));
}

inline json from_point(const ClassicalPoint &pt)
{
    json up = json::object();
    for (const auto &[place, chi] : pt.up) {
        up[place] = from_character(chi);
    }
    json satake = json::object();
    for (const auto &[place, vals] : pt.satake) {
        satake[place] = from_monomials(vals);
    }
    return {{"weight", from_weight(pt.weight)}, {"up", up}, {"satake", satake}};
}

inline std::vector<ClassicalPoint> to_points(const json &j)
{
    if (!j.is_array()) {
        raise(ErrorKind::InvalidInput, "expected an array of points");
    }
    std::vector<ClassicalPoint> out;
    for (const auto &p : j) {
        out.push_back(to_point(p));
    }
    return out;
}

/// space = {weight, entries: [{point, mult}]}
inline MockFormSpace to_space(const json &j)
{
    MockFormSpace space(to_weight(require(j, "weight")));
    const auto &entries = require(j, "entries");
    if (!entries.is_array()) {
        raise(ErrorKind::InvalidInput, "entries must be an array");
    }
    for (const auto &e : entries) {
        space.add(to_point(require(e, "point"), space.weight), e.contains("mult") ? to_int(e.at("mult"), "mult") : 1);
    }
    return space;
}

inline json from_space(const MockFormSpace &s)
{
    json entries = json::array();
    for (const auto &e : s.entries) {
        entries.push_back({{"point", from_point(e.point)}, {"mult", e.multiplicity}});
    }
    return {{"weight", from_weight(s.weight)}, {"entries", entries}};
}

/// assignment = {symbol: {value, sqrt?}}; a bare value is also accepted. A
/// missing root is derived when the value is a rational square.
inline Assignment to_assignment(const json &j)
{
    if (!j.is_object()) {
        raise(ErrorKind::InvalidInput, "an assignment is a JSON object");
    }
    Assignment out;
    for (const auto &[name, spec] : j.items()) {
        if (spec.is_object()) {
            auto sv = make_symbol_value(to_rational(require(spec, "value"), "value"));
            if (spec.contains("sqrt")) {
                sv.sqrt = to_rational(spec.at("sqrt"), "sqrt");
            }
            out.emplace(name, sv);
        } else {
            out.emplace(name, make_symbol_value(to_rational(spec, "value")));
        }
    }
    return out;
}

/// selection = {up: [{place, cochar}], satake: [{place, k}]}
inline HeckeSelection to_selection(const json &j, const GroupShape &shape)
{
    HeckeSelection h;
    if (j.contains("up")) {
        for (const auto &f : j.at("up")) {
            h.up.push_back({require(f, "place").get<std::string>(), CocharVector(shape, to_int_array(require(f, "cochar"), "cochar"))});
        }
    }
    if (j.contains("satake")) {
        for (const auto &f : j.at("satake")) {
            h.satake.push_back({require(f, "place").get<std::string>(), to_int(require(f, "k"), "k")});
        }
    }
    return h;
}

inline json from_selection(const HeckeSelection &h)
{
    json up = json::array();
    for (const auto &f : h.up) {
        up.push_back({{"place", f.place}, {"cochar", f.cochar.entries}});
    }
    json sat = json::array();
    for (const auto &f : h.satake) {
        sat.push_back({{"place", f.place}, {"k", f.k}});
    }
    return {{"up", up}, {"satake", sat}};
}

} // namespace padicfun::io

#endif
