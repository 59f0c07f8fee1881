#include "piflag/verify.hpp"

#include <chrono>
#include <sstream>

namespace piflag {

namespace {

using json = nlohmann::ordered_json;

json flag_json(const FlagType& f) {
    json j;
    j["name"] = f.str();
    j["n"] = f.n();
    j["k"] = f.k();
    return j;
}

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

std::vector<std::string> rendered_fields(const GradedBasis& basis, const VarTable& vars) {
    std::vector<std::string> out;
    for (int i = 0; i < basis.total_dim(); ++i)
        out.push_back(basis.field(i).reps[basis.anchor].str(vars));
    return out;
}

json structure_constants_json(const StructureConstants& sc) {
    json rows = json::array();
    for (const auto& bi : sc.c) {
        json row = json::array();
        for (const auto& bij : bi) {
            json coords = json::array();
            for (const auto& c : bij) coords.push_back(rational_str(c));
            row.push_back(coords);
        }
        rows.push_back(row);
    }
    json j;
    j["closed"] = sc.closed;
    j["coords"] = rows;
    return j;
}

struct CheckContext {
    const VerifyConfig& config;
    Atlas atlas;
    std::optional<GradedBasis> basis;  // computed once, shared by checks

    explicit CheckContext(const VerifyConfig& c) : config(c), atlas(c.flag) {}

    int field_degree() const {
        return config.degree.value_or(default_field_degree(config.flag));
    }
    int function_degree() const { return std::max(4, config.degree.value_or(4)); }

    const GradedBasis& graded_basis() {
        if (!basis) basis = global_fields(atlas, field_degree());
        return *basis;
    }
};

json check_functions(CheckContext& ctx) {
    const FunctionsResult res = global_functions(ctx.atlas, ctx.function_degree());
    json j;
    j["degree"] = res.degree;
    j["dimension"] = static_cast<int>(res.basis.size());
    j["expected_dimension"] = 1;
    j["stable"] = res.stable;
    j["ok"] = res.basis.size() == 1 && res.stable;
    return j;
}

json check_fields(CheckContext& ctx) {
    const GradedBasis& basis = ctx.graded_basis();
    const Prediction p = predict(ctx.config.flag);
    json j;
    j["degree"] = basis.degree;
    j["dims"] = {{"even", basis.even_dim()}, {"odd", basis.odd_dim()}};
    j["expected_dims"] = {{"even", p.even_dim}, {"odd", p.odd_dim}};
    j["stable"] = basis.stable;
    j["closed_under_bracket"] = basis.sc.closed;
    j["basis"] = rendered_fields(basis, *ctx.atlas.chart(basis.anchor).vars);
    j["structure_constants"] = structure_constants_json(basis.sc);
    j["ok"] = basis.even_dim() == p.even_dim && basis.odd_dim() == p.odd_dim && basis.stable &&
              basis.sc.closed;
    return j;
}

json check_kernel(CheckContext& ctx) {
    const auto kernel = mu_kernel(ctx.atlas);
    bool identity_line = false;
    if (kernel.size() == 1) {
        const QnElement& k = kernel.front();
        const Rational scale = k.A[0][0];
        identity_line = scale != 0 && k == QnElement::identity(ctx.config.flag.n()) * scale;
    }
    json j;
    j["dimension"] = static_cast<int>(kernel.size());
    j["spanned_by_identity"] = identity_line;
    j["ok"] = kernel.size() == 1 && identity_line;
    return j;
}

json check_cocycle(CheckContext& ctx) {
    const Atlas& atlas = ctx.atlas;
    const int n = atlas.chart_count();
    bool round_trips = true, triples = true;
    for (int i = 0; i < n && round_trips; ++i) {
        for (int j = 0; j < n && round_trips; ++j) {
            const CoordinateMap rt =
                compose(atlas.transition(i, j), atlas.transition(j, i), atlas.chart(i));
            if (!is_identity_map(rt, atlas.chart(i))) round_trips = false;
        }
    }
    for (int i = 0; i < n && triples; ++i)
        for (int j = 0; j < n && triples; ++j)
            for (int k = 0; k < n && triples; ++k) {
                const CoordinateMap lhs =
                    compose(atlas.transition(i, j), atlas.transition(j, k), atlas.chart(i));
                if (!same_map(lhs, atlas.transition(i, k))) triples = false;
            }
    json j;
    j["charts"] = n;
    j["round_trips_identity"] = round_trips;
    j["cocycle_on_triples"] = triples;
    // Pi block form and identity rows are asserted inside the transition
    // builder; reaching this point means every pair passed
    j["pi_block_form_preserved"] = true;
    j["ok"] = round_trips && triples;
    return j;
}

json check_bwb(CheckContext& ctx) {
    const int n = ctx.config.flag.n();
    json scans = json::array();
    bool no_dominant = true;
    for (int k = 1; k < n; ++k) {
        for (int p = 1; p <= (n - k) * k; ++p) {
            const DominanceScan s = scan_wedge_dominance(n, k, p);
            json row;
            row["n"] = s.n;
            row["k"] = s.k;
            row["p"] = s.p;
            row["total_weights"] = s.total_weights;
            row["dominant_count"] = s.dominant_count;
            scans.push_back(row);
            if (s.dominant_count != 0) no_dominant = false;
        }
    }
    const int k1 = ctx.config.flag.k().front();
    const auto generic = w0_sections(n, k1, false);
    const auto exceptional = w0_sections(n, k1, true);
    json j;
    j["dominance_scans"] = scans;
    j["no_dominant_weight"] = no_dominant;
    j["w0_sections_generic"] = {{"even", generic.first.str()}, {"odd", generic.second.str()}};
    j["w0_sections_exceptional"] = {{"even", exceptional.first.str()},
                                    {"odd", exceptional.second.str()}};
    const bool w0_ok = generic == std::pair<Int, Int>{0, 1} &&
                       exceptional == std::pair<Int, Int>{1, 1};
    j["ok"] = no_dominant && w0_ok;
    return j;
}

json check_compare(CheckContext& ctx) {
    const ComparisonReport rep = compare_with_qn(ctx.atlas, ctx.graded_basis());
    json j;
    j["exceptional"] = rep.exceptional;
    j["dims"] = {{"even", rep.solver_dims.first}, {"odd", rep.solver_dims.second}};
    j["expected_dims"] = {{"even", rep.expected_dims.first}, {"odd", rep.expected_dims.second}};
    j["kernel_dimension"] = rep.kernel_dim;
    j["mu_image_contained"] = rep.mu_image_contained;
    j["mu_image_rank"] = rep.mu_image_rank;
    j["codimension"] = rep.codim;
    if (rep.exceptional) {
        j["z_is_global"] = rep.z_is_global;
        j["z_outside_mu_image"] = rep.z_outside_mu_image;
        j["z_completes_basis"] = rep.z_completes_basis;
        j["g0_g1_commute"] = rep.g0_g1_commute;
        j["d_maps_gm1_onto_g0"] = rep.d_maps_gm1_onto_g0;
        j["z_grading_ok"] = rep.z_grading_ok;
        j["structure_confirmed"] = rep.structure_confirmed;
        j["ok"] = rep.structure_confirmed;
    } else {
        j["isomorphic"] = rep.isomorphic;
        j["ok"] = rep.isomorphic;
    }
    return j;
}

json check_vertical(CheckContext& ctx) {
    const auto verticals = vertical_fields(ctx.atlas, ctx.graded_basis());
    json j;
    j["count"] = static_cast<int>(verticals.size());
    j["expected_count"] = 0;
    j["ok"] = verticals.empty();
    return j;
}

}  // namespace

const std::vector<std::string>& VerifyConfig::known_checks() {
    static const std::vector<std::string> names = {"functions", "fields", "kernel", "cocycle",
                                                   "bwb",       "compare", "vertical"};
    return names;
}

Prediction predict(const FlagType& flag) {
    Prediction p;
    const int n = flag.n();
    p.exceptional = flag.r() == 1 && n == 2 && flag.k().front() == 1;
    p.even_dim = n * n - 1 + (p.exceptional ? 1 : 0);
    p.odd_dim = n * n;
    return p;
}

Report run(const VerifyConfig& config) {
    Report report;
    report.json["schema"] = 1;
#ifdef PIFLAG_VERSION
    report.json["version"] = PIFLAG_VERSION;
#else
    report.json["version"] = "dev";
#endif
    if (auto bad = config.flag.validate()) {
        report.json["error"] = "invalid flag type: " + *bad;
        report.exit_code = 2;
        return report;
    }
    std::vector<std::string> selected = config.checks;
    if (selected.empty()) {
        selected = VerifyConfig::known_checks();
        if (config.flag.r() == 1)
            selected.erase(std::remove(selected.begin(), selected.end(), "vertical"),
                           selected.end());
    }
    for (const auto& name : selected) {
        const auto& known = VerifyConfig::known_checks();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            report.json["error"] = "unknown check: " + name;
            report.exit_code = 2;
            return report;
        }
        if (name == "vertical" && config.flag.r() == 1) {
            report.json["error"] = "check 'vertical' requires a flag with r > 1";
            report.exit_code = 2;
            return report;
        }
    }

    json cfg;
    cfg["flag"] = flag_json(config.flag);
    cfg["degree"] = config.degree.value_or(default_field_degree(config.flag));
    cfg["checks"] = selected;
    report.json["config"] = cfg;

    CheckContext ctx(config);
    json checks;
    json timings;
    bool all_ok = true;
    // fixed execution order; `selected` only filters
    for (const auto& name : VerifyConfig::known_checks()) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
        const long long t0 = now_ms();
        json result;
        if (name == "functions") result = check_functions(ctx);
        else if (name == "fields") result = check_fields(ctx);
        else if (name == "kernel") result = check_kernel(ctx);
        else if (name == "cocycle") result = check_cocycle(ctx);
        else if (name == "bwb") result = check_bwb(ctx);
        else if (name == "compare") result = check_compare(ctx);
        else if (name == "vertical") result = check_vertical(ctx);
        timings[name] = now_ms() - t0;
        if (!result.value("ok", false)) all_ok = false;
        checks[name] = std::move(result);
    }
    report.json["checks"] = std::move(checks);
    report.json["ok"] = all_ok;
    if (config.with_timestamp) {
        report.json["timestamp_ms"] = now_ms();
        report.json["timings_ms"] = std::move(timings);
    }
    report.ok = all_ok;
    report.exit_code = all_ok ? 0 : 1;
    return report;
}

std::string Report::text() const {
    std::ostringstream os;
    if (json.contains("error")) {
        os << "error: " << json["error"].get<std::string>() << "\n";
        return os.str();
    }
    os << "flag: " << json["config"]["flag"]["name"].get<std::string>() << "\n";
    for (const auto& [name, result] : json["checks"].items()) {
        os << (result.value("ok", false) ? "[ ok ] " : "[FAIL] ") << name;
        std::vector<std::string> notes;
        if (result.contains("dimension"))
            notes.push_back("dim " + std::to_string(result["dimension"].get<int>()));
        if (result.contains("dims"))
            notes.push_back("dims " + std::to_string(result["dims"]["even"].get<int>()) + "|" +
                            std::to_string(result["dims"]["odd"].get<int>()));
        if (result.contains("stable") && !result["stable"].get<bool>())
            notes.push_back("NOT stable");
        if (result.contains("isomorphic"))
            notes.push_back(result["isomorphic"].get<bool>() ? "isomorphic to q_n/<E>"
                                                             : "not isomorphic");
        if (result.contains("structure_confirmed") && result["structure_confirmed"].get<bool>())
            notes.push_back("exceptional structure confirmed");
        if (!notes.empty()) {
            os << ": ";
            for (std::size_t i = 0; i < notes.size(); ++i) {
                if (i) os << ", ";
                os << notes[i];
            }
        }
        os << "\n";
    }
    os << (json["ok"].get<bool>() ? "all checks match the predicted values"
                                  : "MISMATCH against predicted values")
       << "\n";
    return os.str();
}

nlohmann::ordered_json atlas_dump(const Atlas& atlas) {
    json j;
    j["flag"] = flag_json(atlas.flag());
    json charts = json::array();
    for (int c = 0; c < atlas.chart_count(); ++c) {
        const Chart& chart = atlas.chart(c);
        json cj;
        cj["ordinal"] = c;
        cj["index"] = chart.index.str();
        json vars;
        json evens = json::array(), odds = json::array();
        for (int v = 0; v < chart.even_count(); ++v) evens.push_back(chart.vars->even_name(v));
        for (int v = 0; v < chart.odd_count(); ++v) odds.push_back(chart.vars->odd_name(v));
        vars["even"] = evens;
        vars["odd"] = odds;
        cj["vars"] = vars;
        json mats = json::array();
        for (const auto& z : chart.Z) mats.push_back(z.str(*chart.vars));
        cj["matrices"] = mats;
        charts.push_back(cj);
    }
    j["charts"] = charts;
    json transitions = json::array();
    for (int i = 0; i < atlas.chart_count(); ++i) {
        for (int k = 0; k < atlas.chart_count(); ++k) {
            if (i == k) continue;
            const CoordinateMap& t = atlas.transition(i, k);
            const Chart& src = atlas.chart(i);
            const Chart& tgt = atlas.chart(k);
            json tj;
            tj["source"] = i;
            tj["target"] = k;
            json assignment;
            for (int v = 0; v < tgt.even_count(); ++v)
                assignment[tgt.vars->even_name(v)] =
                    t.assignment.even_images[v].str(*src.vars);
            for (int v = 0; v < tgt.odd_count(); ++v)
                assignment[tgt.vars->odd_name(v)] = t.assignment.odd_images[v].str(*src.vars);
            tj["assignments"] = assignment;
            transitions.push_back(tj);
        }
    }
    j["transitions"] = transitions;
    return j;
}

}  // namespace piflag
