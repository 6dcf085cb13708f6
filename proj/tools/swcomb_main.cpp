#include "swcomb/explicit_weights.hpp"
#include "swcomb/gl3.hpp"
#include "swcomb/serialization.hpp"
#include "swcomb/serre_weights.hpp"
#include "swcomb/tame_characters.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

/*
 * swcomb: tame Serre-weight combinatorics for GL_n over Q_l.
 *
 * Exit codes: 0 success / verification pass, 1 verification failure,
 * 2 usage error, 3 semantic mismatch (e.g. weight rank vs type dimension).
 */

namespace {

using swcomb::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    bool structured() const { return format == "structured"; }
};

void add_format_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
}

int run_orbits(std::int64_t l_raw, int niveau, std::int64_t exponent, const Options& opt) {
    const swcomb::OddPrime l(l_raw);
    const auto orbit = swcomb::frobenius_orbit(l, niveau, exponent);
    const auto type = swcomb::canonicalize(l, {{niveau, exponent}});
    if (opt.structured()) {
        json out{{"l", l.value()},
                 {"niveau", niveau},
                 {"exponent", exponent},
                 {"orbit", orbit},
                 {"pieces", swcomb::type_to_json(type).at("pieces")}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "orbit:";
        for (auto x : orbit) std::cout << ' ' << x;
        std::cout << "\ndecomposition: " << swcomb::format_type(type) << "\n";
    }
    return 0;
}

int run_gl3_verify(std::int64_t l_min, std::int64_t l_max, bool refined, const Options& opt) {
    const auto report = swcomb::gl3::verify_range(l_min, l_max, refined);
    if (opt.structured()) {
        std::cout << swcomb::report_to_json(report).dump() << "\n";
    } else {
        std::cout << "l range: [" << report.l_min << ", " << report.l_max << "]"
                  << (report.refined ? " (refined genericity)" : "") << "\n"
                  << "examined: " << report.examined << "\n"
                  << "generic: " << report.generic << "\n";
        for (const auto& s : report.skipped)
            std::cout << "skipped: l=" << s.l << " weight=" << swcomb::format_weight(s.weight)
                      << "\n";
        for (const auto& f : report.failures) {
            std::cout << "FAILURE: l=" << f.l << " weight=" << swcomb::format_weight(f.weight);
            if (f.witness) std::cout << " witness=" << swcomb::format_type(*f.witness);
            if (f.congruence_case) std::cout << " case=" << *f.congruence_case;
            std::cout << "\n";
        }
        std::cout << "pass: " << (report.pass() ? "true" : "false") << "\n";
    }
    std::cerr << "wall time: " << report.wall_time_ms << " ms\n";
    return report.pass() ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tame Serre-weight combinatorics for GL_n over Q_l"};
    app.require_subcommand(1);

    Options opt;

    // ---- orbits ----------------------------------------------------------
    std::int64_t arg_l = 0;
    int arg_niveau = 1;
    std::int64_t arg_exp = 0;

    auto* orbits = app.add_subcommand("orbits", "Frobenius orbit and induced decomposition");
    orbits->add_option("--l", arg_l, "odd prime l")->required();
    orbits->add_option("--niveau", arg_niveau, "niveau m >= 1")->required();
    orbits->add_option("--exp", arg_exp, "exponent e (any integer)")->required();
    add_format_flag(orbits, opt);

    // ---- weights ---------------------------------------------------------
    auto* weights = app.add_subcommand("weights", "Serre weight operations");
    weights->require_subcommand(1);
    int arg_n = 1;
    std::string arg_weight, arg_a, arg_b;

    auto* w_enum = weights->add_subcommand("enumerate", "all canonical representatives");
    w_enum->add_option("--l", arg_l)->required();
    w_enum->add_option("--n", arg_n, "rank")->required();
    add_format_flag(w_enum, opt);

    auto* w_equiv = weights->add_subcommand("equivalent", "are two weights equivalent (f = 1)");
    w_equiv->add_option("--l", arg_l)->required();
    w_equiv->add_option("--a", arg_a, "first weight a1,a2,...")->required();
    w_equiv->add_option("--b", arg_b, "second weight b1,b2,...")->required();
    add_format_flag(w_equiv, opt);

    auto* w_canon = weights->add_subcommand("canonical", "canonical representative (f = 1)");
    w_canon->add_option("--l", arg_l)->required();
    w_canon->add_option("--weight", arg_weight)->required();
    add_format_flag(w_canon, opt);

    auto* w_hodge = weights->add_subcommand("hodge", "Hodge type of the obvious lift");
    w_hodge->add_option("--weight", arg_weight)->required();
    add_format_flag(w_hodge, opt);

    // ---- explicit --------------------------------------------------------
    auto* explicit_cmd = app.add_subcommand("explicit", "explicit weight-set operations");
    explicit_cmd->require_subcommand(1);
    std::string arg_type;

    auto* e_cand = explicit_cmd->add_subcommand("candidates", "inertial candidate set of a weight");
    e_cand->add_option("--l", arg_l)->required();
    e_cand->add_option("--weight", arg_weight)->required();
    add_format_flag(e_cand, opt);

    auto* e_mem = explicit_cmd->add_subcommand("membership", "does the weight lie over the type");
    e_mem->add_option("--l", arg_l)->required();
    e_mem->add_option("--weight", arg_weight)->required();
    e_mem->add_option("--type", arg_type, "inertial type record (JSON)")->required();
    add_format_flag(e_mem, opt);

    // ---- gl3 -------------------------------------------------------------
    auto* gl3_cmd = app.add_subcommand("gl3", "GL_3 weight elimination");
    gl3_cmd->require_subcommand(1);
    std::string arg_case;
    bool arg_refined = false, arg_check_simpl = false;
    int arg_hint_raw = 0;
    std::int64_t arg_lmin = 3, arg_lmax = 3;

    auto* g_jh = gl3_cmd->add_subcommand("jh", "Jordan-Hoelder factors of the dual Weyl module");
    g_jh->add_option("--l", arg_l)->required();
    g_jh->add_option("--weight", arg_weight)->required();
    add_format_flag(g_jh, opt);

    auto* g_gen = gl3_cmd->add_subcommand("generic", "genericity test");
    g_gen->add_option("--l", arg_l)->required();
    g_gen->add_option("--weight", arg_weight)->required();
    g_gen->add_flag("--refined", arg_refined, "per-niveau relaxed test");
    g_gen->add_option("--niveau", arg_hint_raw, "niveau hint for the refined test (1, 2 or 3)");
    add_format_flag(g_gen, opt);

    auto* g_case = gl3_cmd->add_subcommand("case", "one congruence of the elimination argument");
    g_case->add_option("--l", arg_l)->required();
    g_case->add_option("--case", arg_case, "1..12 or C3..C8")->required();
    g_case->add_flag("--check-simplification", arg_check_simpl,
                     "also verify the closed-form simplification");
    add_format_flag(g_case, opt);

    auto* g_verify = gl3_cmd->add_subcommand("verify", "exhaustive range verification");
    g_verify->add_option("--l-min", arg_lmin)->required();
    g_verify->add_option("--l-max", arg_lmax)->required();
    g_verify->add_flag("--refined", arg_refined, "use per-niveau genericity");
    add_format_flag(g_verify, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*orbits) return run_orbits(arg_l, arg_niveau, arg_exp, opt);

        if (*w_enum) {
            const swcomb::OddPrime l(arg_l);
            const auto all = swcomb::enumerate_weights(l, arg_n);
            if (opt.structured()) {
                json out = json::array();
                for (const auto& w : all) out.push_back(swcomb::weight_to_json(w));
                std::cout << json{{"weights", std::move(out)}}.dump() << "\n";
            } else {
                for (const auto& w : all) std::cout << swcomb::format_weight(w) << "\n";
            }
            return 0;
        }
        if (*w_equiv) {
            const swcomb::OddPrime l(arg_l);
            const auto a = swcomb::parse_weight(arg_a);
            const auto b = swcomb::parse_weight(arg_b);
            if (a.rank() != b.rank()) throw MismatchError("weights of different rank");
            const bool eq = swcomb::equivalent(l, a, b);
            if (opt.structured())
                std::cout << json{{"equivalent", eq}}.dump() << "\n";
            else
                std::cout << (eq ? "true" : "false") << "\n";
            return 0;
        }
        if (*w_canon) {
            const swcomb::OddPrime l(arg_l);
            const auto rep = swcomb::canonical_rep(l, swcomb::parse_weight(arg_weight));
            if (opt.structured())
                std::cout << swcomb::weight_to_json(rep).dump() << "\n";
            else
                std::cout << swcomb::format_weight(rep) << "\n";
            return 0;
        }
        if (*w_hodge) {
            const auto a = swcomb::parse_weight(arg_weight);
            const auto ht = swcomb::hodge_type(a);
            if (opt.structured()) {
                std::cout << json{{"hodge", ht}}.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < ht.size(); ++i)
                    std::cout << (i ? "," : "") << ht[i];
                std::cout << "\n";
            }
            return 0;
        }

        if (*e_cand) {
            const swcomb::OddPrime l(arg_l);
            const auto a = swcomb::parse_weight(arg_weight);
            const auto set = swcomb::inertial_candidates(l, a);
            if (opt.structured()) {
                std::cout << json{{"l", l.value()},
                                  {"weight", a.entries()},
                                  {"candidates", swcomb::candidates_to_json(set)}}
                                 .dump()
                          << "\n";
            } else {
                for (const auto& t : set) std::cout << swcomb::format_type(t) << "\n";
            }
            return 0;
        }
        if (*e_mem) {
            const swcomb::OddPrime l(arg_l);
            const auto a = swcomb::parse_weight(arg_weight);
            json record;
            try {
                record = json::parse(arg_type);
            } catch (const json::parse_error& e) {
                throw std::invalid_argument(std::string("bad type record: ") + e.what());
            }
            const auto tau = swcomb::type_from_json(record, l);
            if (tau.dimension() != static_cast<int>(a.rank()))
                throw MismatchError("type dimension does not match weight rank");
            const bool member = swcomb::w_explicit_I_contains(l, tau, a);
            if (opt.structured())
                std::cout << json{{"member", member}}.dump() << "\n";
            else
                std::cout << (member ? "true" : "false") << "\n";
            return 0;
        }

        if (*g_jh) {
            const swcomb::OddPrime l(arg_l);
            const auto factors = swcomb::gl3::jh_factors(l, swcomb::parse_weight(arg_weight));
            if (opt.structured()) {
                json out = json::array();
                for (const auto& w : factors) out.push_back(swcomb::weight_to_json(w));
                std::cout << json{{"factors", std::move(out)}}.dump() << "\n";
            } else {
                for (const auto& w : factors) std::cout << swcomb::format_weight(w) << "\n";
            }
            return 0;
        }
        if (*g_gen) {
            const swcomb::OddPrime l(arg_l);
            std::optional<int> hint;
            if (g_gen->count("--niveau")) hint = arg_hint_raw;
            const bool generic =
                swcomb::gl3::is_generic(l, swcomb::parse_weight(arg_weight), arg_refined, hint);
            if (opt.structured())
                std::cout << json{{"generic", generic}}.dump() << "\n";
            else
                std::cout << (generic ? "true" : "false") << "\n";
            return 0;
        }
        if (*g_case) {
            const swcomb::OddPrime l(arg_l);
            const auto id = swcomb::gl3::CaseId::parse(arg_case);
            const bool ok = swcomb::gl3::verify_congruence_case(l, id, arg_check_simpl);
            if (opt.structured())
                std::cout << json{{"case", id.str()}, {"holds", ok}}.dump() << "\n";
            else
                std::cout << "case " << id.str() << ": " << (ok ? "no solutions" : "VIOLATED")
                          << "\n";
            return ok ? 0 : kExitFail;
        }
        if (*g_verify) return run_gl3_verify(arg_lmin, arg_lmax, arg_refined, opt);
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
