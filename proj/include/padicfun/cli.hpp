#ifndef PADICFUN_CLI_HPP
#define PADICFUN_CLI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include <json.hpp>

#include <padicfun/error.hpp>
#include <padicfun/json_io.hpp>
#include <padicfun/points.hpp>
#include <padicfun/refinements.hpp>
#include <padicfun/transfer.hpp>

namespace padicfun::cli
{

using nlohmann::json;

inline constexpr std::string_view schema_version = "1";

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_input_error = 2 };

struct JobResult {
    json report;
    int exit_code = exit_ok;
};

inline std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

inline std::string render(const json &report, bool pretty)
{
    return pretty ? report.dump(2) : report.dump();
}

// Mathematical outcomes that are verdicts on valid input, not malformed input.
inline bool is_verdict_error(ErrorKind k)
{
    return k == ErrorKind::NotRelevant || k == ErrorKind::NonIntegralShift || k == ErrorKind::UnsupportedLinked
           || k == ErrorKind::NotSymmetric;
}

namespace detail
{

struct Outcome {
    json result;
    bool pass = true;
    // "pass"/"fail" for checks, "success" for plain computations.
    bool is_check = true;
};

inline json shifts_json(const TransferConfig &cfg)
{
    const auto s = weight_shift(cfg);
    return {{"pre_sigma", s.pre}, {"post_sigma", s.post}};
}

inline Outcome transfer_weight(const json &payload)
{
    const auto kappa = io::to_weight(io::require(payload, "weight"));
    auto cfg = payload.contains("cfg") ? io::to_config(payload.at("cfg")) : TransferConfig(kappa.shape);
    padicfun::detail::check_same_shape(kappa.shape, cfg.source);
    const bool explicit_sigma = payload.contains("cfg") && payload.at("cfg").contains("sigma");

    const auto arch = archimedean_transfer(kappa, cfg.alpha);
    auto with_arch = cfg;
    with_arch.sigma = arch.sigma;
    const auto pulled = weight_pullback(kappa, with_arch);

    json params = json::array();
    for (const auto &m : arch.parameters) {
        params.push_back(m.to_string());
    }
    Outcome out;
    out.pass = pulled == arch.weight;
    out.result = {{"archimedean", {{"weight", io::from_weight(arch.weight)},
                                   {"sigma", arch.sigma.one_line()},
                                   {"parameters", params},
                                   {"class", to_string(weight_check(arch.weight))}}},
                  {"pullback", io::from_weight(pulled)},
                  {"shifts", shifts_json(with_arch)},
                  {"consistent", out.pass}};
    if (explicit_sigma) {
        validate_sigma(cfg);
        out.result["pullback_config_sigma"] = io::from_weight(weight_pullback(kappa, cfg));
    }
    return out;
}

inline Outcome transfer_refinement(const json &payload)
{
    const auto cfg = io::to_config(io::require(payload, "cfg"));
    validate_sigma(cfg);
    const auto chi = io::to_character(io::require(payload, "character"), cfg.source);
    Outcome out;
    out.is_check = false;
    out.result = {{"refinement", io::from_character(refinement_pullback(chi, cfg))},
                  {"normalized", io::from_character(refinement_pullback_normalized(chi, cfg))},
                  {"atkin_lehner", io::from_character(atkin_lehner_pullback(chi, cfg))},
                  {"shifts", shifts_json(cfg)}};
    return out;
}

inline Outcome check_hypothesis1(const json &payload)
{
    const auto cfg = io::to_config(io::require(payload, "cfg"));
    const auto rep = hypothesis1_verify(cfg);
    json residuals = json::array();
    for (const auto &r : rep.residuals) {
        residuals.push_back({{"identity", r.identity}, {"generator", r.generator}, {"residual", r.residual}});
    }
    Outcome out;
    out.pass = rep.pass;
    out.result = {{"residuals", residuals}, {"generators_checked", rep.generators_checked}};
    return out;
}

inline Outcome enumerate_refinements(const json &payload)
{
    const auto desc = io::to_descriptor(io::require(payload, "descriptor"));
    const auto formula = count_accessible(desc);
    json refs = json::array();
    std::uint64_t accessible = 0;
    for (const auto &r : padicfun::enumerate_refinements(desc)) {
        const bool acc = is_accessible(desc, r);
        accessible += acc ? 1 : 0;
        refs.push_back({{"values", io::from_character(r)}, {"accessible", acc}});
    }
    Outcome out;
    out.pass = accessible == formula;
    out.result = {{"descriptor", io::from_descriptor(desc)},
                  {"refinements", refs},
                  {"total", refs.size()},
                  {"accessible", accessible},
                  {"accessible_formula", formula}};
    return out;
}

inline Outcome check_accessible_transfer(const json &payload)
{
    const auto cfg = io::to_config(io::require(payload, "cfg"));
    const auto desc = io::to_descriptor(io::require(payload, "descriptor"));
    const bool holds = accessible_transfer_check(desc, cfg);
    const auto counts = refinement_count_inequality(desc, cfg);
    Outcome out;
    out.pass = holds && counts.holds;
    out.result = {{"accessible_transfer", holds},
                  {"count_source", counts.source},
                  {"count_target", counts.target},
                  {"count_inequality", counts.holds},
                  {"transferred_descriptor", io::from_descriptor(transfer_descriptor(desc, cfg))}};
    return out;
}

inline Outcome transfer_point(const json &payload)
{
    const auto cfg = io::to_config(io::require(payload, "cfg"));
    const auto pt = io::to_point(io::require(payload, "point"));
    Outcome out;
    out.is_check = false;
    out.result = {{"point", io::from_point(padicfun::transfer_point(pt, cfg))}};
    return out;
}

inline Outcome check_diagram(const json &payload)
{
    const auto cfg = io::to_config(io::require(payload, "cfg"));
    const auto zh = io::to_points(io::require(payload, "source_points"));
    const auto zg = io::to_points(io::require(payload, "target_points"));
    const auto rep = diagram_check(zh, zg, cfg);
    Outcome out;
    out.pass = rep.all_matched();
    out.result = {{"matched", rep.matched}, {"matched_count", rep.matched_count}, {"total", rep.matched.size()}};
    return out;
}

inline Outcome check_interpolation(const json &payload)
{
    const auto cfg = io::to_config(io::require(payload, "cfg"));
    auto space_h = io::to_space(io::require(payload, "source_space"));
    const auto space_g = io::to_space(io::require(payload, "target_space"));
    if (!payload.contains("transfer") || payload.at("transfer").get<bool>()) {
        space_h = build_transferred_space(space_h, cfg);
    }

    std::uint64_t c = 0;
    if (payload.contains("C")) {
        const int v = io::to_int(payload.at("C"), "C");
        if (v < 1) {
            raise(ErrorKind::InvalidInput, "C must be positive");
        }
        c = static_cast<std::uint64_t>(v);
    } else {
        const auto &dims = io::require(payload, "dims");
        std::vector<std::uint64_t> dg;
        for (const int d : io::to_int_array(io::require(dims, "target"), "dims.target")) {
            if (d < 1) {
                raise(ErrorKind::InvalidInput, "dimensions must be positive");
            }
            dg.push_back(static_cast<std::uint64_t>(d));
        }
        const int dh = io::to_int(io::require(dims, "source"), "dims.source");
        if (dh < 1) {
            raise(ErrorKind::InvalidInput, "dimensions must be positive");
        }
        c = constant_C(static_cast<std::uint64_t>(dh), dg);
    }

    const auto &gens = io::require(payload, "generators");
    const auto &assigns = io::require(payload, "assignments");
    if (!gens.is_array() || !assigns.is_array()) {
        raise(ErrorKind::InvalidInput, "generators and assignments must be arrays");
    }
    json cases = json::array();
    bool all = true;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto h = io::to_selection(gens[gi], space_g.weight.shape);
        for (std::size_t ai = 0; ai < assigns.size(); ++ai) {
            const auto a = io::to_assignment(assigns[ai]);
            const bool ok = divisibility_check(space_h, space_g, c, h, a);
            all = all && ok;
            json poly_h = json::array();
            for (const auto &x : charpoly(space_h, h, a).coeffs) {
                poly_h.push_back(x.get_str());
            }
            json poly_g = json::array();
            for (const auto &x : charpoly(space_g, h, a).coeffs) {
                poly_g.push_back(x.get_str());
            }
            cases.push_back({{"generator", gi}, {"assignment", ai}, {"divides", ok}, {"charpoly_source", poly_h},
                             {"charpoly_target", poly_g}});
        }
    }
    Outcome out;
    out.pass = all;
    out.result = {{"C", c}, {"cases", cases}};
    return out;
}

inline const std::map<std::string, std::function<Outcome(const json &)>> &commands()
{
    static const std::map<std::string, std::function<Outcome(const json &)>> table{
        {"transfer-weight", transfer_weight},
        {"transfer-refinement", transfer_refinement},
        {"check-hypothesis1", check_hypothesis1},
        {"enumerate-refinements", enumerate_refinements},
        {"check-accessible-transfer", check_accessible_transfer},
        {"transfer-point", transfer_point},
        {"check-diagram", check_diagram},
        {"check-interpolation", check_interpolation},
    };
    return table;
}

} // namespace detail

/// Runs one job {schema_version, command, payload}. Exit code 0 on
/// success/pass, 1 on a failed verdict or a mathematical obstruction such as
/// NotRelevant, 2 on malformed input.
inline JobResult run_job(const json &job)
{
    json report = {{"schema_version", std::string(schema_version)}, {"input_sha256", sha256_hex(job.dump())}};
    const auto error = [&](std::string kind, std::string message, int code) {
        report["error"] = std::move(kind);
        report["message"] = std::move(message);
        return JobResult{report, code};
    };

    if (!job.is_object()) {
        return error("SchemaError", "a job is a JSON object", exit_input_error);
    }
    if (!job.contains("schema_version") || job.at("schema_version") != schema_version) {
        return error("SchemaError", "schema_version must be \"1\"", exit_input_error);
    }
    if (!job.contains("command") || !job.at("command").is_string()) {
        return error("SchemaError", "missing command", exit_input_error);
    }
    const auto command = job.at("command").get<std::string>();
    report["command"] = command;
    const auto it = detail::commands().find(command);
    if (it == detail::commands().end()) {
        return error("SchemaError", "unknown command '" + command + "'", exit_input_error);
    }
    if (!job.contains("payload") || !job.at("payload").is_object()) {
        return error("SchemaError", "payload must be an object", exit_input_error);
    }

    try {
        auto outcome = it->second(job.at("payload"));
        report["result"] = std::move(outcome.result);
        if (!outcome.is_check) {
            report["verdict"] = "success";
            return {report, exit_ok};
        }
        report["verdict"] = outcome.pass ? "pass" : "fail";
        return {report, outcome.pass ? exit_ok : exit_failed};
    } catch (const Error &e) {
        return error(std::string(kind_name(e.kind())), e.what(), is_verdict_error(e.kind()) ? exit_failed : exit_input_error);
    } catch (const json::exception &e) {
        return error("SchemaError", e.what(), exit_input_error);
    }
}

inline JobResult run_job_text(std::string_view text)
{
    json job;
    try {
        job = json::parse(text);
    } catch (const json::parse_error &e) {
        json report = {{"schema_version", std::string(schema_version)},
                       {"input_sha256", sha256_hex(text)},
                       {"error", "SchemaError"},
                       {"message", e.what()}};
        return {report, exit_input_error};
    }
    return run_job(job);
}

} // namespace padicfun::cli

#endif
