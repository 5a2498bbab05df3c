#include "cigenera/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cigenera/genera_closed.hpp"
#include "cigenera/genera_oracles.hpp"
#include "cigenera/version.hpp"

namespace cigenera {

using nlohmann::json;
using verify::SweepConfig;
using verify::SweepReport;

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_degrees(const std::vector<int>& degrees, const char* sep) {
    std::string out;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(degrees[i]);
    }
    return out;
}

json config_to_json(const SweepConfig& cfg) {
    return json{{"n_min", cfg.n_min},
                {"n_max", cfg.n_max},
                {"r_max", cfg.r_max},
                {"d_max", cfg.d_max},
                {"levels", cfg.levels},
                {"ak", cfg.ak},
                {"binom_a", {cfg.binom_a.lo, cfg.binom_a.hi}},
                {"binom_b", {cfg.binom_b.lo, cfg.binom_b.hi}},
                {"binom_n", {cfg.binom_n.lo, cfg.binom_n.hi}},
                {"checks", cfg.checks.empty() ? verify::all_check_ids() : cfg.checks}};
}

json metadata(const SweepConfig& cfg) {
    return json{{"tool", kToolName}, {"version", kToolVersion}, {"config", config_to_json(cfg)}};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

std::string GenusSpec::label() const {
    if (name == "ak") return "ak(" + std::to_string(ak_k) + ")";
    if (name == "chi-k")
        return "chi-k(" + std::to_string(k) + "/" + std::to_string(level) + ")";
    return name;
}

std::vector<std::string> genus_routes(const CompleteIntersection& ci, const GenusSpec& spec) {
    if (spec.name == "todd") {
        std::vector<std::string> routes = {"closed", "genfun", "chern-root"};
        if (ci.codimension() >= 1) routes.push_back("recurrence");
        return routes;
    }
    if (spec.name == "ahat") return {"closed", "chern-root"};
    if (spec.name == "ak") return {"closed", "genfun", "chern-root", "from-todd"};
    if (spec.name == "chi-k") {
        std::vector<std::string> routes = {"closed"};
        if ((ci.first_chern() * spec.k) % spec.level == 0) routes.push_back("genfun");
        routes.push_back("chern-root");
        return routes;
    }
    if (spec.name == "euler" || spec.name == "signature") return {"closed"};
    throw std::invalid_argument("unknown genus '" + spec.name + "'");
}

Rational evaluate_genus(const CompleteIntersection& ci, const GenusSpec& spec,
                        const std::string& route) {
    const int n = ci.dimension();
    auto unsupported = [&]() -> Rational {
        throw std::invalid_argument("genus '" + spec.name + "' has no '" + route + "' route");
    };
    if (spec.name == "todd") {
        if (route == "closed") return todd_closed(ci);
        if (route == "genfun") return todd_genfun(ci);
        if (route == "chern-root") return genus_chern_root(ci, todd_q_series(n));
        if (route == "recurrence") return todd_recurrence(ci);
        return unsupported();
    }
    if (spec.name == "ahat") {
        if (route == "closed") return ahat_closed(ci);
        if (route == "chern-root") return genus_chern_root(ci, ahat_q_series(n));
        return unsupported();
    }
    if (spec.name == "ak") {
        if (route == "closed") return ak_closed(ci, spec.ak_k);
        if (route == "genfun") return ak_genfun(ci, spec.ak_k);
        if (route == "chern-root") return genus_chern_root(ci, ak_q_series(spec.ak_k, n));
        if (route == "from-todd") return ak_from_todd(ci, spec.ak_k);
        return unsupported();
    }
    if (spec.name == "chi-k") {
        if (route == "closed") return chi_K_closed(ci, spec.k, spec.level);
        if (route == "genfun") {
            const long numerator = ci.first_chern() * spec.k;
            if (numerator % spec.level != 0)
                throw std::invalid_argument(
                    "chi-k generating-function route needs (k/N)c1 integral");
            return chi_twist_genfun(ci, -(numerator / spec.level));
        }
        if (route == "chern-root")
            return genus_chern_root(ci, level_q_series(spec.k, spec.level, n));
        return unsupported();
    }
    if (spec.name == "euler") {
        if (route == "closed") return euler_characteristic(ci);
        return unsupported();
    }
    if (spec.name == "signature") {
        if (route == "closed") return signature(ci);
        return unsupported();
    }
    throw std::invalid_argument("unknown genus '" + spec.name + "'");
}

std::string reports_to_text(const std::vector<SweepReport>& reports, const SweepConfig& cfg) {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << " sweep: n in [" << cfg.n_min << "," << cfg.n_max
       << "], r <= " << cfg.r_max << ", d in [2," << cfg.d_max << "]\n";
    long total_violations = 0;
    for (const SweepReport& report : reports) {
        os << "[" << (report.passed() ? "PASS" : "FAIL") << "] " << report.check_id << ": "
           << report.instances << " instances, " << report.assertions << " assertions, "
           << report.violations.size() << " violations\n";
        os << "       " << report.description << "\n";
        for (const verify::ViolationRecord& v : report.violations) {
            os << "  violation: " << v.subject;
            if (!v.params.empty()) os << " [" << v.params << "]";
            os << "\n    expected " << v.relation << "\n    left  = " << v.left
               << "\n    right = " << v.right << "\n";
        }
        total_violations += static_cast<long>(report.violations.size());
    }
    os << (total_violations == 0 ? "all checks passed"
                                 : std::to_string(total_violations) + " violations found")
       << "\n";
    return os.str();
}

std::string reports_to_csv(const std::vector<SweepReport>& reports) {
    std::ostringstream os;
    os << "check_id,description,instances,assertions,violations\n";
    for (const SweepReport& report : reports)
        os << report.check_id << "," << csv_escape(report.description) << ","
           << report.instances << "," << report.assertions << "," << report.violations.size()
           << "\n";
    return os.str();
}

std::string reports_to_json(const std::vector<SweepReport>& reports, const SweepConfig& cfg) {
    json out;
    out["metadata"] = metadata(cfg);
    json items = json::array();
    for (const SweepReport& report : reports) {
        json violations = json::array();
        for (const verify::ViolationRecord& v : report.violations)
            violations.push_back(json{{"check_id", v.check_id},
                                      {"subject", v.subject},
                                      {"params", v.params},
                                      {"relation", v.relation},
                                      {"left", v.left},
                                      {"right", v.right}});
        items.push_back(json{{"check_id", report.check_id},
                             {"description", report.description},
                             {"instances", report.instances},
                             {"assertions", report.assertions},
                             {"passed", report.passed()},
                             {"violations", violations}});
    }
    out["reports"] = items;
    return out.dump(2) + "\n";
}

std::vector<TableRow> make_table(const SweepConfig& cfg, const std::vector<GenusSpec>& specs) {
    std::vector<TableRow> rows;
    verify::for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        for (const GenusSpec& spec : specs) {
            TableRow row;
            row.n = ci.dimension();
            row.r = ci.codimension();
            row.degrees = ci.degrees();
            row.c1 = ci.first_chern();
            row.genus_label = spec.label();
            if (spec.name == "ak") row.k = static_cast<int>(spec.ak_k);
            if (spec.name == "chi-k") {
                row.k = spec.k;
                row.level = spec.level;
            }
            row.value = evaluate_genus(ci, spec, "closed");
            rows.push_back(std::move(row));
        }
    });
    return rows;
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    for (const TableRow& row : rows) {
        os << "X" << row.n << "(" << join_degrees(row.degrees, ",") << ")"
           << "  c1=" << row.c1 << "  " << row.genus_label << " = " << row.value.to_string()
           << "\n";
    }
    return os.str();
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,r,degrees,c1,genus_label,k,N,value\n";
    for (const TableRow& row : rows) {
        os << row.n << "," << row.r << "," << join_degrees(row.degrees, ";") << "," << row.c1
           << "," << row.genus_label << "," << (row.k ? std::to_string(*row.k) : "") << ","
           << (row.level ? std::to_string(*row.level) : "") << "," << row.value.to_string()
           << "\n";
    }
    return os.str();
}

std::string table_to_json(const std::vector<TableRow>& rows, const SweepConfig& cfg) {
    json out;
    out["metadata"] = metadata(cfg);
    json items = json::array();
    for (const TableRow& row : rows) {
        json item{{"n", row.n},
                  {"r", row.r},
                  {"degrees", row.degrees},
                  {"c1", row.c1},
                  {"genus_label", row.genus_label},
                  {"value", row.value.to_string()}};
        item["k"] = row.k ? json(*row.k) : json(nullptr);
        item["N"] = row.level ? json(*row.level) : json(nullptr);
        items.push_back(std::move(item));
    }
    out["rows"] = items;
    return out.dump(2) + "\n";
}

}  // namespace cigenera
