#pragma once

// JSON scenario files and decision reports.
//
// Scenario (top level; every key may be overridden per entry of "cases"):
//   {"mode": "t1"|"t2"|"t3"|"qmfl", "tnorm": "lukasiewicz"|"godel"|"product",
//    "label": str, "alpha": a,
//    "channels": [{"name", "mu", "nu", "weight"?}],
//    "granules": [{"id", "source", "window", "context", "trusted", "weight",
//                  "mu", "nu"} | {..., "mu_set": IT2, "nu_set": IT2}],
//    "aggregator": {"kind", "level", "params"},
//    "type2": {"mu": [lo,hi], "nu": [lo,hi]} | {"mu_set": IT2, "nu_set": IT2}
//             | {"half_width": [h_mu, h_nu]}, plus optional "grid",
//    "quantum": {"rho", "e_plus", "e_minus", "shots", "delta", "seed"},
//    "thresholds": {"brake", "decelerate"},
//    "cases": [ {...}, ... ]}
//
// IT2 set: {"lower": MF, "upper": MF} or {"crisp": value}, where MF is
// {"trapezoid": [a,b,c,d], "height": h} or {"samples": [[x,y], ...]}.
// Matrices are nested arrays of [re, im] pairs (plain numbers are real).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "medilog/checker.hpp"
#include "medilog/pipeline.hpp"

namespace medilog {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace detail {

class SchemaReader {
public:
    static const Json& field(const Json& obj, const std::string& key, const std::string& path) {
        if (!obj.is_object()) throw SchemaError(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) throw SchemaError(path + "/" + key, "missing required field");
        return *it;
    }

    static double number(const Json& j, const std::string& path) {
        if (!j.is_number()) throw SchemaError(path, "expected a number");
        return j.get<double>();
    }

    static double degree(const Json& j, const std::string& path) {
        const double v = number(j, path);
        try {
            return Degree(v);
        } catch (const DomainError& e) {
            throw SchemaError(path, e.what());
        }
    }

    static std::string string(const Json& j, const std::string& path) {
        if (!j.is_string()) throw SchemaError(path, "expected a string");
        return j.get<std::string>();
    }

    static bool boolean(const Json& j, const std::string& path) {
        if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
        return j.get<bool>();
    }

    static std::uint64_t count(const Json& j, const std::string& path) {
        if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a nonnegative integer");
        return j.get<std::uint64_t>();
    }

    static const Json& array(const Json& j, const std::string& path) {
        if (!j.is_array()) throw SchemaError(path, "expected an array");
        return j;
    }

    static Interval interval(const Json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [lo, hi]");
        return {degree(j[0], path + "/0"), degree(j[1], path + "/1")};
    }
};

using R = SchemaReader;

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

inline PiecewiseLinear read_membership(const Json& j, const std::string& path) {
    if (j.contains("trapezoid")) {
        const auto& t = R::array(j["trapezoid"], path + "/trapezoid");
        if (t.size() != 4) throw SchemaError(path + "/trapezoid", "expected [a, b, c, d]");
        const double h = j.contains("height") ? R::degree(j["height"], path + "/height") : 1.0;
        return wrap(path, [&] {
            return PiecewiseLinear::trapezoid(R::number(t[0], path), R::number(t[1], path), R::number(t[2], path),
                                              R::number(t[3], path), h);
        });
    }
    if (j.contains("samples")) {
        std::vector<PiecewiseLinear::Point> pts;
        const auto& s = R::array(j["samples"], path + "/samples");
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string p = path + "/samples/" + std::to_string(i);
            if (!s[i].is_array() || s[i].size() != 2) throw SchemaError(p, "expected [x, y]");
            pts.push_back({R::number(s[i][0], p + "/0"), R::number(s[i][1], p + "/1")});
        }
        return wrap(path, [&] { return PiecewiseLinear(std::move(pts)); });
    }
    throw SchemaError(path, "membership function needs \"trapezoid\" or \"samples\"");
}

inline IT2Set read_it2(const Json& j, const std::string& path, std::size_t grid) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    if (j.contains("crisp")) {
        const double v = R::degree(j["crisp"], path + "/crisp");
        return IT2Set::crisp_at(v, grid);
    }
    auto lower = read_membership(R::field(j, "lower", path), path + "/lower");
    auto upper = read_membership(R::field(j, "upper", path), path + "/upper");
    return wrap(path, [&] { return IT2Set(std::move(lower), std::move(upper)); });
}

inline ComplexMatrix read_matrix(const Json& j, const std::string& path) {
    const auto& rows = R::array(j, path);
    const std::size_t n = rows.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string rp = path + "/" + std::to_string(i);
        const auto& row = R::array(rows[i], rp);
        if (row.size() != n) throw SchemaError(rp, "matrix must be square");
        for (std::size_t k = 0; k < n; ++k) {
            const std::string ep = rp + "/" + std::to_string(k);
            const auto& e = row[k];
            if (e.is_number()) {
                m(i, k) = e.get<double>();
            } else if (e.is_array() && e.size() == 2) {
                m(i, k) = Complex(R::number(e[0], ep + "/0"), R::number(e[1], ep + "/1"));
            } else {
                throw SchemaError(ep, "expected [re, im] or a number");
            }
        }
    }
    return m;
}

inline Aggregator read_aggregator(const Json& j, const std::string& path, const std::vector<Granule>& granules) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    const std::string kind = j.contains("kind") ? R::string(j["kind"], path + "/kind") : "weighted_mean";
    AggregationLevel level = AggregationLevel::Pair;
    if (j.contains("level")) {
        const auto l = R::string(j["level"], path + "/level");
        if (l == "score") level = AggregationLevel::Score;
        else if (l == "pair") level = AggregationLevel::Pair;
        else throw SchemaError(path + "/level", "expected \"score\" or \"pair\"");
    }
    const Json params = j.contains("params") ? j["params"] : Json::object();
    const std::string pp = path + "/params";
    if (kind == "weighted_mean") return Aggregator::weighted_mean(level);
    if (kind == "owa") {
        std::vector<double> w;
        for (std::size_t i = 0; const auto& x : R::array(R::field(params, "weights", pp), pp + "/weights")) {
            w.push_back(R::number(x, pp + "/weights/" + std::to_string(i++)));
        }
        return Aggregator::owa(std::move(w), level);
    }
    if (kind == "trusted_dominance") {
        const double tau = params.contains("threshold") ? R::degree(params["threshold"], pp + "/threshold") : 0.7;
        return Aggregator::trusted_dominance(tau, level);
    }
    if (kind == "hierarchical") {
        std::vector<AggregatorGroup> groups;
        const auto& gs = R::array(R::field(params, "groups", pp), pp + "/groups");
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            const std::string gp = pp + "/groups/" + std::to_string(gi);
            AggregatorGroup g;
            const auto& members = R::array(R::field(gs[gi], "members", gp), gp + "/members");
            for (std::size_t mi = 0; mi < members.size(); ++mi) {
                const auto id = R::string(members[mi], gp + "/members/" + std::to_string(mi));
                std::size_t idx = granules.size();
                for (std::size_t k = 0; k < granules.size(); ++k)
                    if (granules[k].id == id) idx = k;
                if (idx == granules.size()) throw SchemaError(gp + "/members/" + std::to_string(mi), "unknown granule '" + id + "'");
                g.members.push_back(idx);
            }
            const Json inner = gs[gi].contains("aggregator") ? gs[gi]["aggregator"] : Json::object();
            g.inner = std::make_shared<const Aggregator>(read_aggregator(inner, gp + "/aggregator", granules));
            groups.push_back(std::move(g));
        }
        const Json top = params.contains("top") ? params["top"] : Json::object();
        return Aggregator::hierarchical(std::move(groups), read_aggregator(top, pp + "/top", granules), level);
    }
    throw SchemaError(path + "/kind", "unknown aggregator kind '" + kind + "'");
}

inline Scenario read_scenario(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    Scenario s;
    if (j.contains("label")) s.label = R::string(j["label"], path + "/label");
    if (j.contains("mode")) s.mode = wrap(path + "/mode", [&] { return parse_mode(R::string(j["mode"], path + "/mode")); });
    if (j.contains("tnorm")) {
        s.tnorm = wrap(path + "/tnorm", [&] { return parse_tnorm(R::string(j["tnorm"], path + "/tnorm")); });
    }
    if (j.contains("thresholds")) {
        const auto& t = j["thresholds"];
        const std::string tp = path + "/thresholds";
        if (!t.is_object()) throw SchemaError(tp, "expected an object");
        if (t.contains("brake")) s.thresholds.brake = R::degree(t["brake"], tp + "/brake");
        if (t.contains("decelerate")) s.thresholds.decelerate = R::degree(t["decelerate"], tp + "/decelerate");
        s.thresholds.validate();
    }
    if (j.contains("type2") && j["type2"].contains("grid")) {
        s.type2.grid_points = R::count(j["type2"]["grid"], path + "/type2/grid");
        if (s.type2.grid_points < 3) throw SchemaError(path + "/type2/grid", "grid needs at least 3 points");
    }
    const std::size_t grid = s.type2.grid_points;

    if (j.contains("channels")) {
        const std::string cp = path + "/channels";
        const auto& cs = R::array(j["channels"], cp);
        if (cs.empty()) throw InvariantError(cp + ": channel list is empty");
        bool any_weight = false;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string p = cp + "/" + std::to_string(i);
            Channel c;
            c.name = cs[i].contains("name") ? R::string(cs[i]["name"], p + "/name") : "channel" + std::to_string(i);
            c.mu = R::degree(R::field(cs[i], "mu", p), p + "/mu");
            c.nu = R::degree(R::field(cs[i], "nu", p), p + "/nu");
            c.weight = 1.0;
            if (cs[i].contains("weight")) {
                c.weight = R::number(cs[i]["weight"], p + "/weight");
                any_weight = true;
            }
            s.channels.push_back(c);
        }
        if (j.contains("alpha")) {
            const double a = R::degree(j["alpha"], path + "/alpha");
            if (s.channels.size() != 2) throw InvariantError(path + "/alpha: alpha needs exactly two channels");
            s.channels[0].weight = a;
            s.channels[1].weight = 1.0 - a;
        } else if (!any_weight) {
            for (auto& c : s.channels) c.weight = 1.0;
        }
        double sum = 0.0;
        for (const auto& c : s.channels) {
            if (!(c.weight >= 0.0)) throw InvariantError(cp + ": channel weights must be nonnegative");
            sum += c.weight;
        }
        if (!(sum > 0.0)) throw InvariantError(cp + ": channel weights cannot be normalized (sum is 0)");
        for (auto& c : s.channels) c.weight /= sum;
    }

    if (j.contains("granules")) {
        const std::string gp = path + "/granules";
        const auto& gs = R::array(j["granules"], gp);
        if (gs.empty()) throw InvariantError(gp + ": granule family is empty");
        GranularAssignment a;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const std::string p = gp + "/" + std::to_string(i);
            const auto& g = gs[i];
            Granule gr;
            gr.id = R::string(R::field(g, "id", p), p + "/id");
            if (g.contains("source")) gr.source = R::string(g["source"], p + "/source");
            if (g.contains("window")) gr.window = R::string(g["window"], p + "/window");
            if (g.contains("context")) gr.context = R::string(g["context"], p + "/context");
            if (g.contains("trusted")) gr.trusted = R::boolean(g["trusted"], p + "/trusted");
            if (g.contains("weight")) gr.weight = R::number(g["weight"], p + "/weight");
            if (!(gr.weight >= 0.0)) throw InvariantError(p + "/weight: must be nonnegative");
            LocalValue v;
            if (g.contains("mu_set")) {
                v = IT2Pair{read_it2(g["mu_set"], p + "/mu_set", grid),
                            read_it2(R::field(g, "nu_set", p), p + "/nu_set", grid)};
            } else {
                v = MediativePair(R::degree(R::field(g, "mu", p), p + "/mu"),
                                  R::degree(R::field(g, "nu", p), p + "/nu"));
            }
            a.add(std::move(gr), {{"p", std::move(v)}});
        }
        wrap(gp, [&] { return a.normalized_weights(); });
        s.granules = std::move(a);
    }

    if (j.contains("aggregator")) {
        const std::vector<Granule> none;
        s.aggregator = read_aggregator(j["aggregator"], path + "/aggregator", s.granules ? s.granules->granules : none);
    }

    if (j.contains("type2")) {
        const auto& t = j["type2"];
        const std::string tp = path + "/type2";
        if (!t.is_object()) throw SchemaError(tp, "expected an object");
        if (t.contains("mu") || t.contains("nu")) {
            const auto mu = R::interval(R::field(t, "mu", tp), tp + "/mu");
            const auto nu = R::interval(R::field(t, "nu", tp), tp + "/nu");
            s.type2.intervals = wrap(tp, [&] { return IntervalPair(mu, nu); });
        } else if (t.contains("mu_set")) {
            s.type2.sets = IT2Pair{read_it2(t["mu_set"], tp + "/mu_set", grid),
                                   read_it2(R::field(t, "nu_set", tp), tp + "/nu_set", grid)};
        } else if (t.contains("half_width")) {
            const auto& h = t["half_width"];
            if (!h.is_array() || h.size() != 2) throw SchemaError(tp + "/half_width", "expected [h_mu, h_nu]");
            s.type2.half_width = std::pair{R::degree(h[0], tp + "/half_width/0"), R::degree(h[1], tp + "/half_width/1")};
        }
    }

    if (j.contains("quantum")) {
        const auto& q = j["quantum"];
        const std::string qp = path + "/quantum";
        if (!q.is_object()) throw SchemaError(qp, "expected an object");
        if (q.contains("shots")) s.quantum.shots = R::count(q["shots"], qp + "/shots");
        if (q.contains("seed")) s.quantum.seed = R::count(q["seed"], qp + "/seed");
        if (q.contains("delta")) {
            s.quantum.delta = R::number(q["delta"], qp + "/delta");
            if (!(s.quantum.delta > 0.0 && s.quantum.delta < 1.0)) throw SchemaError(qp + "/delta", "must be in (0,1)");
        }
        if (q.contains("rho") || q.contains("e_plus") || q.contains("e_minus")) {
            auto rho = read_matrix(R::field(q, "rho", qp), qp + "/rho");
            auto ep = read_matrix(R::field(q, "e_plus", qp), qp + "/e_plus");
            auto em = read_matrix(R::field(q, "e_minus", qp), qp + "/e_minus");
            s.quantum.triple = wrap(qp, [&] {
                return QuantumTriple(DensityOperator(std::move(rho)), Effect(std::move(ep)), Effect(std::move(em)));
            });
        }
    }
    return s;
}

}  // namespace detail

/// Parses a scenario document into one Scenario per case. Keys in each
/// "cases" entry override the top-level keys.
inline std::vector<Scenario> parse_scenarios(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("", "scenario must be a JSON object");
    std::vector<Scenario> out;
    if (!doc.contains("cases")) {
        out.push_back(detail::read_scenario(doc, ""));
    } else {
        const auto& cases = detail::R::array(doc["cases"], "/cases");
        if (cases.empty()) throw InvariantError("/cases: no cases");
        Json base = doc;
        base.erase("cases");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            if (!cases[i].is_object()) throw SchemaError("/cases/" + std::to_string(i), "expected an object");
            Json merged = base;
            for (const auto& [k, v] : cases[i].items()) merged[k] = v;
            out.push_back(detail::read_scenario(merged, "/cases/" + std::to_string(i)));
        }
    }
    for (const auto& s : out) {
        const bool needs_channels = (s.mode == Mode::T1) ||
                                    (s.mode == Mode::T2 && !s.type2.intervals && !s.type2.sets) ||
                                    (s.mode == Mode::T3 && !s.granules) ||
                                    (s.mode == Mode::Qmfl && !s.quantum.triple);
        if (needs_channels && s.channels.empty()) {
            throw InvariantError("scenario '" + s.label + "' (" + std::string(to_string(s.mode)) +
                                 ") needs a non-empty channel list");
        }
    }
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
}

inline std::vector<Scenario> load_scenarios(const std::string& path) { return parse_scenarios(read_json_file(path)); }

/// Single-configuration convenience: the file must describe exactly one case.
inline Scenario load_scenario(const std::string& path) {
    auto all = load_scenarios(path);
    if (all.size() != 1) throw InvariantError("'" + path + "' holds " + std::to_string(all.size()) + " cases");
    return std::move(all.front());
}

/// Valuation file: {"atom": {"mu": x, "nu": y}, ...}.
inline Valuation parse_valuation(const Json& doc, TNormKind algebra = TNormKind::Lukasiewicz) {
    if (!doc.is_object()) throw SchemaError("", "valuation must be an object");
    Valuation v;
    v.algebra = algebra;
    for (const auto& [name, val] : doc.items()) {
        const std::string p = "/" + name;
        v.set(name, MediativePair(detail::R::degree(detail::R::field(val, "mu", p), p + "/mu"),
                                  detail::R::degree(detail::R::field(val, "nu", p), p + "/nu")));
    }
    return v;
}

/// Degrees in reports are rounded to 6 decimals.
inline double round6(double x) { return std::round(x * 1e6) / 1e6; }

/// Report as JSON with a fixed key order.
inline OrderedJson report_json(const DecisionReport& r) {
    OrderedJson j;
    j["case"] = r.case_index + 1;  // 1-based, as in the table layout
    if (!r.label.empty()) j["label"] = r.label;
    j["mode"] = std::string(to_string(r.mode));
    j["tnorm"] = std::string(to_string(r.tnorm));
    j["mu"] = round6(r.fused.mu);
    j["nu"] = round6(r.fused.nu);
    j["pi"] = round6(r.pi);
    j["zeta"] = round6(r.zeta);
    if (r.m) j["m"] = round6(*r.m);
    if (r.intervals) {
        j["mu_interval"] = {round6(r.intervals->mu.lo), round6(r.intervals->mu.hi)};
        j["nu_interval"] = {round6(r.intervals->nu.lo), round6(r.intervals->nu.hi)};
    }
    if (r.hesitation_bounds) j["pi_bounds"] = {round6(r.hesitation_bounds->lo), round6(r.hesitation_bounds->hi)};
    if (r.contradiction_bounds) {
        j["zeta_bounds"] = {round6(r.contradiction_bounds->lo), round6(r.contradiction_bounds->hi)};
    }
    if (r.envelope) {
        j["m_lo"] = round6(r.envelope->m_lo);
        j["m_hi"] = round6(r.envelope->m_hi);
        j["argmin"] = {round6(r.envelope->argmin.mu), round6(r.envelope->argmin.nu)};
        j["argmax"] = {round6(r.envelope->argmax.mu), round6(r.envelope->argmax.nu)};
    }
    if (r.corners) {
        j["corner_lo"] = round6(r.corners->lo);
        j["corner_hi"] = round6(r.corners->hi);
    }
    if (r.m_g) {
        j["m_g"] = round6(*r.m_g);
        j["level"] = *r.level == AggregationLevel::Pair ? "pair" : "score";
    }
    if (r.m_q) j["m_q"] = round6(*r.m_q);
    if (r.estimate) j["estimate"] = round6(*r.estimate);
    if (r.margin) j["margin"] = round6(*r.margin);
    if (r.shots) j["shots"] = *r.shots;
    if (r.delta) j["delta"] = *r.delta;
    if (r.seed) {
        j["seed"] = *r.seed;
        j["rng"] = kShotRngAlgorithm;
    }
    j["action"] = std::string(to_string(r.action));
    if (r.band_action) j["band_action"] = std::string(to_string(*r.band_action));
    return j;
}

enum class ReportFormat { Json, Table };

namespace detail {

inline std::string fixed6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

}  // namespace detail

/// JSON: an array of report objects, one per case, pretty-printed.
/// Table: one row per case with columns (mu, nu) | pi | zeta | M | action.
inline std::string render_report(const std::vector<DecisionReport>& reports, ReportFormat format) {
    if (format == ReportFormat::Json) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        return arr.dump(2) + "\n";
    }
    using detail::fixed6;
    using detail::pad;
    std::ostringstream out;
    out << pad("case", 6) << pad("mode", 6) << pad("(mu, nu)", 24) << pad("pi", 10) << pad("zeta", 10)
        << pad("M", 24) << "action\n";
    for (const auto& r : reports) {
        std::string m;
        if (r.m) m = fixed6(*r.m);
        else if (r.envelope) m = "[" + fixed6(r.envelope->m_lo) + ", " + fixed6(r.envelope->m_hi) + "]";
        else if (r.m_g) m = fixed6(*r.m_g);
        else if (r.estimate) m = fixed6(*r.estimate) + " +/- " + fixed6(*r.margin);
        else if (r.m_q) m = fixed6(*r.m_q);
        std::string action(to_string(r.action));
        if (r.band_action) action += " (band: " + std::string(to_string(*r.band_action)) + ")";
        out << pad(std::to_string(r.case_index + 1), 6) << pad(std::string(to_string(r.mode)), 6)
            << pad("(" + fixed6(r.fused.mu) + ", " + fixed6(r.fused.nu) + ")", 24) << pad(fixed6(r.pi), 10)
            << pad(fixed6(r.zeta), 10) << pad(m, 24) << action << "\n";
    }
    return out.str();
}

inline std::string render_report(const DecisionReport& r, ReportFormat format) {
    return render_report(std::vector<DecisionReport>{r}, format);
}

/// Validity report as JSON.
inline OrderedJson validity_json(const Formula& f, const ValidityReport& rep) {
    OrderedJson j;
    j["formula"] = render(f);
    j["designation"] = std::string(to_string(rep.designation));
    j["grid"] = rep.grid_points;
    j["verdict"] = rep.holds() ? "valid-on-grid" : "counterexample";
    j["valuations"] = rep.valuations_checked;
    if (rep.valuations_checked > 0) {
        j["min_m_degree"] = round6(rep.min_m_degree);
        j["max_m_degree"] = round6(rep.max_m_degree);
    }
    if (rep.witness) {
        OrderedJson w = OrderedJson::object();
        for (const auto& [name, p] : rep.witness->atoms) w[name] = {{"mu", round6(p.mu)}, {"nu", round6(p.nu)}};
        j["witness"] = w;
    }
    return j;
}

}  // namespace medilog
