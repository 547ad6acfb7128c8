// medilog: command-line front end for the mediative fuzzy logic engine.
//
// Exit codes: 0 success, 1 input error, 2 internal error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medilog/cases.hpp"
#include "medilog/io.hpp"
#include "medilog/medilog.hpp"

namespace {

using namespace medilog;

struct GlobalOptions {
    std::string format = "json";
    std::string tnorm;
};

ReportFormat report_format(const GlobalOptions& g) {
    return g.format == "table" ? ReportFormat::Table : ReportFormat::Json;
}

std::optional<TNormKind> tnorm_override(const GlobalOptions& g) {
    if (g.tnorm.empty()) return std::nullopt;
    return parse_tnorm(g.tnorm);
}

int run_scenarios(const std::string& path, std::optional<Mode> forced, const GlobalOptions& g,
                  std::optional<std::uint64_t> shots, std::optional<std::uint64_t> seed,
                  std::optional<double> delta) {
    auto scenarios = load_scenarios(path);
    std::vector<DecisionReport> reports;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        auto& s = scenarios[i];
        if (forced) s.mode = *forced;
        if (auto k = tnorm_override(g)) s.tnorm = *k;
        if (shots) s.quantum.shots = *shots;
        if (seed) s.quantum.seed = *seed;
        if (delta) s.quantum.delta = *delta;
        reports.push_back(run_pipeline(s, i));
    }
    std::cout << render_report(reports, report_format(g));
    return 0;
}

int run_eval(const std::string& formula, const std::string& valuation_path, const GlobalOptions& g) {
    const Formula f = parse(formula);
    const Valuation v = parse_valuation(read_json_file(valuation_path), tnorm_override(g).value_or(TNormKind::Lukasiewicz));
    const auto value = evaluate(f, v);
    const double m = mediative_eval(value);
    if (report_format(g) == ReportFormat::Table) {
        std::printf("formula  %s\nmu       %.6f\nnu       %.6f\npi       %.6f\nzeta     %.6f\nM        %.6f\n",
                    render(f).c_str(), value.mu.value(), value.nu.value(), hesitation(value).value(),
                    contradiction(value).value(), m);
        return 0;
    }
    OrderedJson j;
    j["formula"] = render(f);
    j["tnorm"] = std::string(to_string(v.algebra));
    j["mu"] = round6(value.mu);
    j["nu"] = round6(value.nu);
    j["pi"] = round6(hesitation(value));
    j["zeta"] = round6(contradiction(value));
    j["m"] = round6(m);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_validity(const std::string& formula, const std::vector<std::string>& premises, std::size_t grid,
                 const std::string& designation, bool axioms, const GlobalOptions& g) {
    const TNormKind k = tnorm_override(g).value_or(TNormKind::Lukasiewicz);
    const Designation d = parse_designation(designation);
    std::vector<std::pair<std::string, Formula>> targets;
    if (!formula.empty()) targets.emplace_back("", parse(formula));
    if (axioms) {
        for (auto& t : med_axiom_templates()) targets.emplace_back(t.name, t.formula);
    }
    if (targets.empty()) throw DomainError("nothing to check: pass --formula or --axioms");
    std::vector<Formula> prem;
    for (const auto& p : premises) prem.push_back(parse(p));

    OrderedJson out = OrderedJson::array();
    for (const auto& [name, f] : targets) {
        const auto rep = check_entailment(prem, f, grid, d, k);
        if (report_format(g) == ReportFormat::Table) {
            std::printf("%-6s %-40s %-14s min M %.6f", name.c_str(), render(f).c_str(),
                        rep.holds() ? "valid-on-grid" : "counterexample",
                        rep.valuations_checked ? rep.min_m_degree : 1.0);
            if (rep.witness) {
                std::printf("  witness:");
                if (rep.witness->atoms.empty()) std::printf(" (no atoms)");
                for (const auto& [atom, p] : rep.witness->atoms) {
                    std::printf(" %s=(%.4f,%.4f)", atom.c_str(), p.mu.value(), p.nu.value());
                }
            }
            std::printf("\n");
        } else {
            auto j = validity_json(f, rep);
            if (!name.empty()) j["name"] = name;
            if (!premises.empty()) j["premises"] = premises;
            out.push_back(j);
        }
    }
    if (report_format(g) == ReportFormat::Json) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_probe(double threshold, const GlobalOptions& g) {
    const auto w = paraconsistency_probe(threshold);
    OrderedJson j;
    j["threshold"] = threshold;
    if (!w) {
        j["witness"] = nullptr;
    } else {
        const auto p = w->at("p");
        j["witness"] = {{"mu", round6(p.mu)}, {"nu", round6(p.nu)}};
        j["m_p"] = round6(mediative_eval(p));
        j["m_not_p"] = round6(mediative_eval(pair_not(p)));
    }
    if (report_format(g) == ReportFormat::Table) {
        if (!w) std::printf("no witness reaches %.6f\n", threshold);
        else std::printf("witness p=(%.6f, %.6f)  M(p)=%.6f  M(~p)=%.6f\n", w->at("p").mu.value(),
                         w->at("p").nu.value(), j["m_p"].get<double>(), j["m_not_p"].get<double>());
        return 0;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_tables(const GlobalOptions& g) {
    const auto cases = reference_cases();
    if (report_format(g) == ReportFormat::Json) {
        OrderedJson out;
        for (auto [key, mode, env] : {std::tuple{"t1", Mode::T1, false}, std::tuple{"t2_envelope", Mode::T2, true},
                                      std::tuple{"t2", Mode::T2, false}, std::tuple{"t3", Mode::T3, false},
                                      std::tuple{"qmfl", Mode::Qmfl, false}}) {
            OrderedJson arr = OrderedJson::array();
            for (std::size_t i = 0; i < cases.size(); ++i) {
                arr.push_back(report_json(run_pipeline(reference_scenario(cases[i], mode, env), i)));
            }
            out[key] = arr;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::printf("Evidence configurations (type-1)\n");
    std::printf("%-5s %-14s %-14s %-16s %-8s %-8s %-10s %s\n", "case", "radar", "camera", "(mu, nu)", "pi", "zeta",
                "M", "action");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const auto r = run_pipeline(reference_scenario(c, Mode::T1), i);
        char radar[32], cam[32], pair[32];
        std::snprintf(radar, sizeof radar, "(%.2f, %.2f)", c.radar.mu, c.radar.nu);
        std::snprintf(cam, sizeof cam, "(%.2f, %.2f)", c.camera.mu, c.camera.nu);
        std::snprintf(pair, sizeof pair, "(%.3f, %.3f)", r.fused.mu.value(), r.fused.nu.value());
        std::printf("%-5zu %-14s %-14s %-16s %-8.4f %-8.4f %-10.6f %s\n", i + 1, radar, cam, pair, r.pi, r.zeta, *r.m,
                    std::string(to_string(r.action)).c_str());
    }

    std::printf("\nInterval type-2 readings\n");
    std::printf("%-5s %-34s %-8s %-8s %-20s %-12s %s\n", "case", "intervals", "M-", "M+", "envelope [M_L, M_U]",
                "strict rule", "band reading");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto r = run_pipeline(reference_scenario(cases[i], Mode::T2, true), i);
        char iv[64], env[40];
        std::snprintf(iv, sizeof iv, "mu [%.3f,%.3f] nu [%.3f,%.3f]", r.intervals->mu.lo, r.intervals->mu.hi,
                      r.intervals->nu.lo, r.intervals->nu.hi);
        std::snprintf(env, sizeof env, "[%.6f, %.6f]", r.envelope->m_lo, r.envelope->m_hi);
        std::printf("%-5zu %-34s %-8.4f %-8.4f %-20s %-12s %s\n", i + 1, iv, r.corners->lo, r.corners->hi, env,
                    std::string(to_string(r.action)).c_str(), std::string(to_string(*r.band_action)).c_str());
    }

    std::printf("\nScalar mediative degrees across semantics\n");
    std::printf("%-28s %-10s %-10s %-10s\n", "semantics", "case 1", "case 2", "case 3");
    for (auto [name, mode] : {std::pair{"type-1 M", Mode::T1}, std::pair{"type-2 (type-reduced)", Mode::T2},
                              std::pair{"type-3 M_G (pair level)", Mode::T3}, std::pair{"quantum M_q", Mode::Qmfl}}) {
        std::printf("%-28s", name);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto r = run_pipeline(reference_scenario(cases[i], mode), i);
            std::printf(" %-10.6f", r.primary_degree());
        }
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"medilog: mediative fuzzy logic engine"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--tnorm", g.tnorm, "t-norm: lukasiewicz, godel, product")
        ->check(CLI::IsMember({"lukasiewicz", "godel", "product"}));

    std::string scenario_path;
    auto* fuse = app.add_subcommand("fuse", "Run the decision pipeline on a scenario file");
    fuse->add_option("scenario", scenario_path, "Scenario JSON")->required();

    auto* type2 = app.add_subcommand("type2", "Run a scenario under interval type-2 semantics");
    type2->add_option("scenario", scenario_path, "Scenario JSON")->required();

    std::optional<std::uint64_t> shots, seed;
    std::optional<double> delta;
    auto* qmfl = app.add_subcommand("qmfl", "Run a scenario under quantum semantics");
    qmfl->add_option("scenario", scenario_path, "Scenario JSON")->required();
    qmfl->add_option("--shots", shots, "Number of measurement shots (0 = exact)");
    qmfl->add_option("--seed", seed, "Random seed");
    qmfl->add_option("--delta", delta, "Hoeffding failure probability")->check(CLI::Range(0.0, 1.0));

    std::string formula, valuation_path;
    auto* eval = app.add_subcommand("eval", "Evaluate a formula under a valuation file");
    eval->add_option("--formula", formula, "Formula text")->required();
    eval->add_option("--valuation", valuation_path, "Valuation JSON")->required();

    std::size_t grid = 11;
    std::string designation = "mu";
    std::vector<std::string> premises;
    bool axioms = false;
    auto* validity = app.add_subcommand("validity", "Grid-check validity or entailment");
    validity->add_option("--formula", formula, "Formula (conclusion)");
    validity->add_option("--premise", premises, "Premise formula (repeatable)");
    validity->add_option("--grid", grid, "Grid points per coordinate")->check(CLI::Range(2, 1001));
    validity->add_option("--designation", designation, "mu or m")->check(CLI::IsMember({"mu", "m"}));
    validity->add_flag("--axioms", axioms, "Also check the Med axiom schemata");

    double threshold = 0.6;
    auto* probe = app.add_subcommand("probe", "Search for a paraconsistency witness");
    probe->add_option("--threshold", threshold, "Required simultaneous degree");

    auto* tables = app.add_subcommand("tables", "Reproduce the reference evidence tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*fuse) return run_scenarios(scenario_path, std::nullopt, g, {}, {}, {});
        if (*type2) return run_scenarios(scenario_path, Mode::T2, g, {}, {}, {});
        if (*qmfl) return run_scenarios(scenario_path, Mode::Qmfl, g, shots, seed, delta);
        if (*eval) return run_eval(formula, valuation_path, g);
        if (*validity) return run_validity(formula, premises, grid, designation, axioms, g);
        if (*probe) return run_probe(threshold, g);
        if (*tables) return run_tables(g);
    } catch (const medilog::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
