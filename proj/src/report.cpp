#include "acb/report.hpp"

#include "acb/curvature.hpp"
#include "acb/document.hpp"
#include "acb/errors.hpp"
#include "acb/soliton.hpp"
#include "acb/verifiers.hpp"

#include <algorithm>
#include <sstream>

namespace acb {

using nlohmann::ordered_json;

namespace {

ordered_json scalar_json(const Scalar& s)
{
    return s.to_string();
}

ordered_json vector_json(const Vec& v)
{
    ordered_json out = ordered_json::array();
    for (const auto& x : v)
        out.push_back(scalar_json(x));
    return out;
}

ordered_json matrix_json(const Matrix& m)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(scalar_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

/// Nonzero components of a tensor, optionally restricted by a predicate on the index.
template <typename Keep>
ordered_json components_json(const Tensor& t, Keep keep)
{
    ordered_json out = ordered_json::array();
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const Scalar& v = t.flat(flat);
        if (v.is_zero())
            continue;
        const auto idx = t.index_of(flat);
        if (!keep(idx))
            continue;
        out.push_back({{"index", idx}, {"value", scalar_json(v)}});
    }
    return out;
}

ordered_json components_json(const Tensor& t)
{
    return components_json(t, [](const auto&) { return true; });
}

ordered_json issues_json(const ValidationReport& report)
{
    ordered_json out = ordered_json::array();
    for (const auto& issue : report.issues)
        out.push_back({{"relation", issue.relation}, {"index", issue.index}, {"residual", issue.residual}});
    return out;
}

ordered_json inertia_json(const Inertia& in)
{
    return {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
}

ordered_json invariant_json(const std::string& name, const ValidationReport& report)
{
    return {{"name", name}, {"passed", report.ok()}, {"issues", issues_json(report)}};
}

ordered_json fit_json(const ConstantFit& fit, const std::array<const char*, 3>& names)
{
    ordered_json out;
    out["status"] = to_string(fit.outcome.status);
    if (fit.ok()) {
        for (std::size_t i = 0; i < 3; ++i)
            out[names[i]] = scalar_json(fit[i]);
    } else if (fit.witness) {
        out["witness"] = *fit.witness;
        out["residual"] = scalar_json(fit.outcome.witness_residual);
    } else {
        ordered_json dirs = ordered_json::array();
        for (const auto& dir : fit.outcome.free_directions)
            dirs.push_back(vector_json(dir));
        out["free_directions"] = dirs;
    }
    return out;
}

ordered_json checklist_json(const CheckList& list)
{
    ordered_json out;
    out["verifier"] = list.verifier;
    out["status"] = list.skipped ? "skipped" : (list.passed() ? "pass" : "fail");
    if (!list.note.empty())
        out["note"] = list.note;
    out["labels"] = list.labels;
    ordered_json checks = ordered_json::array();
    for (const auto& c : list.checks) {
        ordered_json entry{{"name", c.name}, {"status", to_string(c.status)}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    out["checks"] = checks;
    return out;
}

/// Runs a stage and tags any engine error with the section it belongs to.
template <typename Stage>
auto in_section(const std::string& section, Stage stage)
{
    try {
        return stage();
    } catch (const PipelineError&) {
        throw;
    } catch (const Error& e) {
        throw PipelineError(section, e.what());
    }
}

ordered_json eta_ricci_json(const EtaRicciBranches& br, const SolitonFit& soliton)
{
    ordered_json out;
    out["n"] = br.n;
    out["tau"] = to_string(br.tau);
    out["f_squared"] = to_string(br.f_squared);
    out["case"] = br.case_label;
    out["exact"] = br.exact;
    ordered_json branches = ordered_json::array();
    for (const auto& b : br.branches) {
        ordered_json entry{{"epsilon", b.epsilon},
                           {"f", to_string(b.f)},
                           {"lambda", to_string(b.lambda)},
                           {"nu", to_string(b.nu)}};
        if (soliton.ok())
            entry["matches_fit"] = soliton.mu().is_zero() && soliton.lambda() == Scalar(b.lambda)
                && soliton.nu() == Scalar(b.nu);
        branches.push_back(entry);
    }
    out["branches"] = branches;
    return out;
}

} // namespace

bool Report::section_passed(const std::string& name) const
{
    const auto it = passed.find(name);
    return it == passed.end() || it->second;
}

const std::vector<std::string>& report_sections()
{
    static const std::vector<std::string> names{"manifold", "validation", "tensors", "classification",
                                                "fits", "theorems", "numeric"};
    return names;
}

Report run_pipeline(const Manifold& m, const PipelineOptions& options)
{
    Report report;
    auto& body = report.body;
    body["schema"] = 1;

    const std::size_t d = m.dim();
    body["manifold"] = in_section("manifold", [&] {
        ordered_json doc = to_document(m);
        doc["n"] = m.n();
        return doc;
    });

    const ValidationReport validation = in_section("validation", [&] { return validate_manifold(m); });
    {
        ordered_json v;
        v["passed"] = validation.ok();
        v["issues"] = issues_json(validation);
        v["note"] = options.assignment ? "signature of g checked at the numeric point"
                                       : "signature of g is only checked numerically (use --set)";
        body["validation"] = v;
        report.passed["validation"] = validation.ok();
    }
    if (!validation.ok())
        return report;

    const CurvaturePack pack = in_section("tensors", [&] { return compute_curvature(m); });
    {
        ordered_json t;
        t["g_inverse"] = matrix_json(pack.g_inverse);
        t["g_tilde"] = matrix_json(pack.g_tilde);
        t["g_tilde_inverse"] = matrix_json(pack.g_tilde_inverse);
        t["connection"] = components_json(pack.connection.gamma);
        t["riemann"] = components_json(pack.riemann, [](const auto& i) { return i[0] < i[1] && i[2] < i[3]; });
        t["ricci"] = matrix_json(pack.ricci);
        t["scalar_curvature"] = scalar_json(pack.tau);
        ordered_json sectional = ordered_json::array();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                ordered_json entry{{"plane", {i, j}}};
                try {
                    entry["value"] = scalar_json(sectional_curvature(m, pack.riemann, i, j));
                } catch (const DomainError&) {
                    entry["value"] = nullptr;
                    entry["note"] = "degenerate plane";
                }
                sectional.push_back(entry);
            }
        t["sectional_curvature"] = sectional;
        t["nabla_xi"] = matrix_json(pack.nabla_xi);
        t["lie_xi_g"] = matrix_json(pack.lie_xi_g);
        t["F"] = components_json(pack.F);
        t["theta"] = vector_json(pack.lee.theta);
        t["theta_star"] = vector_json(pack.lee.theta_star);
        t["omega"] = vector_json(pack.lee.omega);
        t["nabla_ricci"] = components_json(pack.nabla_ricci);
        t["divergences"] = {{"div_rho", vector_json(pack.div.div_rho)},
                            {"div_star_rho", vector_json(pack.div.div_star_rho)},
                            {"div_rho_xi", scalar_json(pack.div.div_rho_xi)},
                            {"div_star_rho_xi", scalar_json(pack.div.div_star_rho_xi)},
                            {"div_xi", scalar_json(pack.div.div_xi)}};

        const auto invariants = in_section("tensors", [&] {
            return std::vector<std::pair<std::string, ValidationReport>>{
                {"connection torsion-free and metric", check_connection(m, pack.connection)},
                {"riemann symmetries and first Bianchi", check_riemann_symmetries(pack.riemann)},
                {"fundamental tensor identities", check_fundamental_identities(m, pack.connection, pack.F)},
                {"Lee form identities", check_lee_identities(m, pack.lee)},
            };
        });
        ordered_json inv = ordered_json::array();
        bool ok = true;
        for (const auto& [name, r] : invariants) {
            inv.push_back(invariant_json(name, r));
            ok = ok && r.ok();
        }
        t["invariant_checks"] = inv;
        body["tensors"] = t;
        report.passed["tensors"] = ok;
    }

    const bool cosymplectic = is_cosymplectic(pack.F);
    const bool sasaki_like = in_section("classification", [&] { return is_sasaki_like(m, pack.connection).holds; });
    const TorseForming torse = in_section("classification", [&] { return detect_torse_forming_xi(m, pack.connection); });
    const bool f5 = torse.present
        && in_section("classification", [&] { return check_f5_condition(m, pack.connection, torse.f); });
    {
        ordered_json c;
        c["cosymplectic"] = cosymplectic;
        c["sasaki_like"] = sasaki_like;
        ordered_json tf{{"present", torse.present}};
        if (torse.present) {
            tf["f"] = scalar_json(torse.f);
            tf["parallel"] = torse.parallel;
        } else if (torse.witness) {
            tf["witness"] = *torse.witness;
        }
        c["torse_forming"] = tf;
        c["f5_condition"] = torse.present ? ordered_json(f5) : ordered_json(nullptr);
        body["classification"] = c;
    }

    const EinsteinLikeFit einstein = in_section("fits", [&] { return fit_einstein_like(m, pack.ricci, pack.g_tilde); });
    const SolitonFit soliton
        = in_section("fits", [&] { return fit_ricci_like_soliton(m, pack.lie_xi_g, pack.ricci, pack.g_tilde); });
    {
        ordered_json f;
        ordered_json e = fit_json(einstein, {"a", "b", "c"});
        if (einstein.ok()) {
            e["label"] = einstein.label;
            e["tau_from_constants"] = scalar_json(einstein.tau_from_constants);
            e["tau_consistent"] = einstein.tau_consistent;
        }
        f["einstein_like"] = e;
        ordered_json s = fit_json(soliton, {"lambda", "mu", "nu"});
        if (soliton.ok()) {
            s["label"] = soliton.label;
            s["tau_from_constants"] = scalar_json(soliton.tau_from_constants);
            s["tau_consistent"] = soliton.tau_consistent;
        }
        f["ricci_like_soliton"] = s;
        const bool eta_ricci_applies = einstein.ok() && einstein.label == "Einstein" && torse.present
            && pack.tau.is_constant() && pack.tau.constant_value() < 0;
        if (eta_ricci_applies)
            f["eta_ricci_from_tau"] = in_section("fits", [&] {
                return eta_ricci_json(eta_ricci_from_tau(pack.tau.constant_value(), m.n()), soliton);
            });
        body["fits"] = f;
        report.passed["fits"] = (!einstein.ok() || einstein.tau_consistent) && (!soliton.ok() || soliton.tau_consistent);
    }

    {
        const AnalysisInputs in{m, pack, einstein, soliton, torse, sasaki_like, f5};
        const auto lists = in_section("theorems", [&] {
            return std::vector<CheckList>{
                verify_einstein_like_properties(in), verify_sasaki_einstein_like(in),
                verify_soliton_geodesic_props(in),   verify_theorem_sasaki(in),
                verify_theorem_torse(in),            verify_sasaki_identities(m, pack),
            };
        });
        ordered_json th = ordered_json::array();
        bool ok = true;
        for (const auto& list : lists) {
            th.push_back(checklist_json(list));
            ok = ok && list.passed();
        }
        body["theorems"] = th;
        report.passed["theorems"] = ok;
    }

    if (options.assignment) {
        ordered_json num;
        ordered_json point = ordered_json::object();
        for (const auto& [name, value] : *options.assignment)
            point[name] = to_string(value);
        num["assignment"] = point;
        const SignatureCheck sig = in_section("numeric", [&] { return check_signature(m); });
        num["signature"] = {{"g", inertia_json(sig.g)},
                            {"g_ok", sig.g_ok},
                            {"g_tilde", inertia_json(sig.g_tilde)},
                            {"g_tilde_ok", sig.g_tilde_ok}};
        if (soliton.ok() && soliton.lambda().is_constant()) {
            const int sign = sgn(soliton.lambda().constant_value());
            num["soliton_type"] = sign < 0 ? "shrinking" : (sign == 0 ? "steady" : "expanding");
        } else {
            num["soliton_type"] = nullptr;
        }
        body["numeric"] = num;
        report.passed["numeric"] = sig.g_ok && sig.g_tilde_ok;
    }
    return report;
}

Report substitute_and_rerun(const Manifold& m, const Assignment& assignment)
{
    const Manifold point = substitute(m, assignment);
    const ValidationReport validation = validate_manifold(point);
    if (!validation.ok()) {
        const auto& first = validation.issues.front();
        throw StructuralError("structure invalid at the numeric point: " + first.relation);
    }
    const SignatureCheck sig = check_signature(point);
    if (!sig.g_ok)
        throw StructuralError("signature of g at the numeric point is (" + std::to_string(sig.g.positive) + ","
                              + std::to_string(sig.g.negative) + "), expected (" + std::to_string(point.n() + 1)
                              + "," + std::to_string(point.n()) + ")");
    return run_pipeline(point, PipelineOptions{assignment});
}

ordered_json select_sections(const Report& report, const std::vector<std::string>& sections)
{
    const auto& known = report_sections();
    for (const auto& s : sections)
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            std::string list;
            for (const auto& k : known)
                list += (list.empty() ? "" : ", ") + k;
            throw UsageError("unknown section '" + s + "' (available: " + list + ")");
        }
    ordered_json out;
    out["schema"] = report.body.at("schema");
    for (const auto& name : known)
        if (std::find(sections.begin(), sections.end(), name) != sections.end() && report.body.contains(name))
            out[name] = report.body.at(name);
    return out;
}

std::string render_json(const ordered_json& body)
{
    return body.dump(2) + "\n";
}

namespace {

std::string inline_value(const ordered_json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + inline_value(v[i]);
        return out + "]";
    }
    if (v.is_object()) {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, x] : v.items()) {
            out += (first ? "" : ", ") + k + ": " + inline_value(x);
            first = false;
        }
        return out + "}";
    }
    return v.dump();
}

bool flat_array(const ordered_json& v)
{
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_primitive(); });
}

bool is_check(const ordered_json& v)
{
    return v.is_object() && v.contains("name") && v.contains("status");
}

bool is_component(const ordered_json& v)
{
    return v.is_object() && v.size() == 2 && v.contains("index") && v.contains("value");
}

void render(std::ostringstream& os, const std::string& key, const ordered_json& v, int depth);

void render_item(std::ostringstream& os, const ordered_json& item, int depth)
{
    const std::string pad(2 * depth, ' ');
    if (is_component(item)) {
        std::string idx;
        for (const auto& i : item["index"])
            idx += (idx.empty() ? "" : ",") + inline_value(i);
        os << pad << "(" << idx << ") = " << inline_value(item["value"]) << "\n";
    } else if (is_check(item) && !item.contains("checks")) {
        os << pad << "[" << item["status"].get<std::string>() << "] " << item["name"].get<std::string>();
        if (item.contains("detail"))
            os << " (" << item["detail"].get<std::string>() << ")";
        os << "\n";
    } else if (item.is_object()) {
        bool first = true;
        for (const auto& [k, x] : item.items()) {
            if (first) {
                std::ostringstream sub;
                render(sub, k, x, depth + 1);
                os << pad << "- " << sub.str().substr(2 * (depth + 1));
                first = false;
            } else {
                render(os, k, x, depth + 1);
            }
        }
    } else {
        os << pad << "- " << inline_value(item) << "\n";
    }
}

void render(std::ostringstream& os, const std::string& key, const ordered_json& v, int depth)
{
    const std::string pad(2 * depth, ' ');
    if (v.is_primitive() || flat_array(v)) {
        os << pad << key << ": " << inline_value(v) << "\n";
        return;
    }
    if (v.empty()) {
        os << pad << key << ": " << (v.is_array() ? "none" : "{}") << "\n";
        return;
    }
    os << pad << key << ":\n";
    if (v.is_object()) {
        for (const auto& [k, x] : v.items())
            render(os, k, x, depth + 1);
        return;
    }
    const bool matrix = std::all_of(v.begin(), v.end(), flat_array);
    for (const auto& item : v) {
        if (matrix)
            os << pad << "  " << inline_value(item) << "\n";
        else
            render_item(os, item, depth + 1);
    }
}

} // namespace

std::string render_text(const ordered_json& body)
{
    std::ostringstream os;
    for (const auto& [key, value] : body.items()) {
        if (key == "schema") {
            os << "schema: " << inline_value(value) << "\n";
            continue;
        }
        os << "\n== " << key << " ==\n";
        if (value.is_object()) {
            for (const auto& [k, x] : value.items())
                render(os, k, x, 0);
        } else {
            for (const auto& item : value)
                render_item(os, item, 0);
        }
    }
    return os.str();
}

} // namespace acb
